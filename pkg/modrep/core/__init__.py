"""Modular representations - Core!

This module exposes the public api for modrep core
"""
from modrep.core import errors
from modrep.core import logger
from modrep.core.characters import freudenthal_multiplicities
from modrep.core.characters import scan_multiplicity_free
from modrep.core.characters import weyl_dimension
from modrep.core.characters import WeightMultTable
from modrep.core.jordan import dimension_bound
from modrep.core.jordan import jordan_type
from modrep.core.jordan import single_nontrivial_block
from modrep.core.jordan import tensor_jordan
from modrep.core.levels import candidate_factor_report
from modrep.core.levels import level_decomposition
from modrep.core.modular import irreducible_head_mod_p
from modrep.core.modular import ModularModule
from modrep.core.modular import steinberg_product
from modrep.core.root_system import build_root_system
from modrep.core.root_system import RootDatum
from modrep.core.unipotent import g2_class_representative
from modrep.core.unipotent import jordan_on_rep
from modrep.core.unipotent import mth1_scan
from modrep.core.weyl_module import construct_weyl_module
from modrep.core.weyl_module import IntegralRep

__all__ = (
    # sub-packages: modrep-core
    "errors",
    "logger",
    # public classes
    "IntegralRep",
    "ModularModule",
    "RootDatum",
    "WeightMultTable",
    # public functions
    "build_root_system",
    "candidate_factor_report",
    "construct_weyl_module",
    "dimension_bound",
    "freudenthal_multiplicities",
    "g2_class_representative",
    "irreducible_head_mod_p",
    "jordan_on_rep",
    "jordan_type",
    "level_decomposition",
    "mth1_scan",
    "scan_multiplicity_free",
    "single_nontrivial_block",
    "steinberg_product",
    "tensor_jordan",
    "weyl_dimension",
)
