"""Unipotent class representatives of G_2 and the single-block scan over its small modules."""

from __future__ import annotations

from typing import Optional, TYPE_CHECKING

import numpy as np

from modrep.core import errors
from modrep.core._linalg import modp
from modrep.core.characters import weyl_dimension
from modrep.core.jordan import jordan_type
from modrep.core.jordan import matrix_order
from modrep.core.jordan import single_nontrivial_block
from modrep.core.logger import logger
from modrep.core.modular import check_prime
from modrep.core.modular import irreducible_head_mod_p
from modrep.core.root_system import build_root_system
from modrep.core.schemas.unipotent import UnipotentRepresentative
from modrep.core.schemas.unipotent import Verdict
from modrep.core.settings import Settings
from modrep.core.weyl_module import construct_weyl_module

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from modrep.core.modular import ModularModule
    from modrep.core.root_system import Weight
    from modrep.core.schemas.jordan import JordanType
    from modrep.core.schemas.unipotent import TYPES_CLASS_LABEL

# words in simple-root coordinates; alpha_1 short
_WORDS: dict[str, tuple[tuple[tuple[int, ...], int], ...]] = {
    "regular": (((-1, 0), 1), ((0, -1), 1)),  # x_{-a1}(1) x_{-a2}(1)
    "G2a1": (((0, 1), 1), ((3, 1), 1)),  # x_{a2}(1) x_{3a1+a2}(1)
    "A1_3": (((2, 1), 1), ((3, 2), 1)),  # x_{2a1+a2}(1) x_{3a1+2a2}(1)
}
_ADMISSIBLE_PRIME = {"G2a1": 2, "A1_3": 3}
SINGLE_BLOCK_DIM = 7
G2_GRID_BOUND = 4


def g2_class_representative(label: TYPES_CLASS_LABEL, p: int) -> UnipotentRepresentative:
    check_prime(p)
    if label not in _WORDS:
        raise errors.ModRepPreconditionError(f"No fixed representative for class {label!r}")
    required = _ADMISSIBLE_PRIME.get(label)
    if required is not None and p != required:
        raise errors.ModRepPreconditionError(f"Class {label} is only considered for p = {required}, not p = {p}")
    return UnipotentRepresentative(label=label, word=_WORDS[label], p=p)


def is_admissible(label: TYPES_CLASS_LABEL, p: int) -> bool:
    return label in _WORDS and _ADMISSIBLE_PRIME.get(label, p) == p


def evaluate_word(representative: UnipotentRepresentative, module: ModularModule) -> np.ndarray:
    """The matrix of the product of root elements, in word order."""
    if module.p != representative.p:
        raise errors.ModRepPreconditionError(f"Representative over F_{representative.p} applied to a module over F_{module.p}")
    result = np.eye(module.dim, dtype=np.int64)
    for root, scalar in representative.word:
        if len(root) != module.datum.rank:
            raise errors.ModRepPreconditionError(f"Root {root} does not belong to {module.datum.label}")
        result = modp.matmul_mod_p(result, module.root_element(root, scalar), module.p)
    return result


def jordan_on_rep(representative: UnipotentRepresentative, module: ModularModule) -> JordanType:
    return jordan_type(evaluate_word(representative, module), module.p)


def g2_weight_grid(bound: int = G2_GRID_BOUND) -> list[tuple[Weight, int]]:
    """Non-zero dominant G_2 weights with coefficients at most `bound`, with Weyl dimensions, smallest first."""
    datum = build_root_system("G", 2)
    grid = [((a, b), weyl_dimension(datum, (a, b))) for a in range(bound + 1) for b in range(bound + 1) if a or b]
    return sorted(grid, key=lambda item: (item[1], item[0]))


def g2_head(highest: Sequence[int], p: int, size_cap: Optional[int] = None) -> ModularModule:
    return irreducible_head_mod_p(construct_weyl_module(build_root_system("G", 2), tuple(highest), size_cap=size_cap), p)


def mth1_scan(
    p_list: Iterable[int],
    weights: Optional[Iterable[Sequence[int]]] = None,
    labels: Iterable[TYPES_CLASS_LABEL] = ("regular", "G2a1", "A1_3"),
    size_cap: Optional[int] = None,
) -> list[Verdict]:
    """Jordan types of the class representatives on G_2 irreducibles, against the single-block prediction.

    The prediction is a single non-trivial block exactly for the regular class
    on modules of dimension at most 7.
    """
    cap = Settings.size_cap if size_cap is None else size_cap
    datum = build_root_system("G", 2)
    if weights is None:
        weights = [weight for weight, _ in g2_weight_grid()]
    labels = tuple(labels)
    verdicts = []
    for p in p_list:
        check_prime(p)
        for highest in weights:
            highest = tuple(highest)
            dimension = weyl_dimension(datum, highest)
            if dimension > cap:
                verdicts.extend(
                    Verdict(p=p, highest=highest, dim=dimension, label=label, skipped=f"Weyl dimension {dimension} above size cap {cap}")
                    for label in labels
                )
                logger.info(f"Skipping L{highest} at p = {p}: Weyl dimension {dimension} above the size cap {cap}")
                continue
            module = g2_head(highest, p, size_cap=cap)
            for label in labels:
                if not is_admissible(label, p):
                    verdicts.append(Verdict(p=p, highest=highest, dim=module.dim, label=label, skipped=f"class {label} not considered at p = {p}"))
                    continue
                element = evaluate_word(g2_class_representative(label, p), module)
                jordan = jordan_type(element, p)
                single = single_nontrivial_block(jordan)
                prediction = label == "regular" and module.dim <= SINGLE_BLOCK_DIM
                verdicts.append(
                    Verdict(
                        p=p, highest=highest, dim=module.dim, label=label, jordan_type=str(jordan), single_block=single,
                        order=matrix_order(element, p), prediction=prediction, agree=single == prediction,
                    )
                )
        logger.debug(f"Single-block scan: p = {p} done")
    return verdicts
