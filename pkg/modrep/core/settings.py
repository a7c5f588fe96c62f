from pathlib import Path
from typing import Literal, Optional

import pydantic
import pydantic_settings


class _SettingsModel(pydantic_settings.BaseSettings):
    # Construction
    size_cap: int = 200  # largest Weyl dimension built explicitly
    strict_checks: bool = True  # raise on internal invariant failures, else log and continue
    # Output
    records_schema_version: int = 1
    # Environment
    debug: bool = False
    log_level: Literal["DEBUG", "INFO", "WARNING"] = "DEBUG"  # level set by enable_debug_logging
    log_file: Optional[Path] = None
    use_cache: bool = True
    cache_size: int = pydantic.Field(default=256, ge=1)  # entries kept by the in-process cache

    model_config = pydantic_settings.SettingsConfigDict(
        case_sensitive=False,  # this is the default, but mark for clarity.
        env_prefix="MR_",  # env variables named `MR_SIZE_CAP` etc
        validate_assignment=True,
    )


Settings = _SettingsModel()
