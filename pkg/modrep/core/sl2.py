"""SL_2 in characteristic p: digit calculus, Steinberg characters, restriction shapes and extensions."""

from __future__ import annotations

from collections import Counter
from typing import Optional, TYPE_CHECKING

import numpy as np

from modrep.core import errors
from modrep.core.jordan import jordan_type
from modrep.core.logger import logger
from modrep.core.modular import check_prime
from modrep.core.modular import irreducible_head_mod_p
from modrep.core.modular import steinberg_product
from modrep.core.modular import weyl_module_mod_p
from modrep.core.root_system import build_root_system
from modrep.core.schemas.sl2 import CompositionData
from modrep.core.schemas.sl2 import DigitVector
from modrep.core.schemas.sl2 import ShapeCheck
from modrep.core.schemas.sl2 import Sl2Record
from modrep.core.weyl_module import construct_weyl_module

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping

    from modrep.core.modular import ModularModule
    from modrep.core.schemas.jordan import JordanType
    from modrep.core.schemas.sl2 import TYPES_BB1_CASE
    from modrep.core.schemas.sl2 import TYPES_MODULE_KIND

ALPHA = (1,)


def digit_vector(a: int, p: int) -> DigitVector:
    if a < 0:
        raise errors.ModRepPreconditionError(f"Expected a non-negative integer, got {a}")
    check_prime(p)
    digits = []
    while a:
        a, digit = divmod(a, p)
        digits.append(digit)
    return DigitVector(p=p, digits=tuple(digits))


def p_valuation(value: int, p: int) -> int:
    valuation = 0
    while value and value % p == 0:
        value //= p
        valuation += 1
    return valuation


def weyl_character(a: int) -> dict[int, int]:
    return {a - 2 * k: 1 for k in range(a + 1)}


def irreducible_character(a: int, p: int) -> dict[int, int]:
    """Character of L(a) as the product of twisted restricted characters over the digits of a."""
    character: Counter[int] = Counter({0: 1})
    for i, digit in enumerate(digit_vector(a, p).digits):
        scale = p**i
        product: Counter[int] = Counter()
        for weight, mult in character.items():
            for k in range(digit + 1):
                product[weight + scale * (digit - 2 * k)] += mult
        character = product
    return dict(character)


def composition_factors(character: Mapping[int, int], p: int) -> list[int]:
    """Highest weights of the composition factors of an SL_2 character, descending with repetition."""
    remaining = Counter({weight: mult for weight, mult in character.items() if mult})
    factors = []
    while remaining:
        top = max(remaining)
        if top < 0:
            raise errors.ModRepInvariantError(f"Character {dict(character)} is not a sum of irreducible characters")
        count = remaining[top]
        factors.extend([top] * count)
        for weight, mult in irreducible_character(top, p).items():
            remaining[weight] -= count * mult
            if remaining[weight] < 0:
                raise errors.ModRepInvariantError(f"Character {dict(character)} is not a sum of irreducible characters")
            if remaining[weight] == 0:
                del remaining[weight]
    return factors


def sl2_module(a: int, p: int, kind: TYPES_MODULE_KIND = "irreducible") -> ModularModule:
    """V(a) reduced mod p, or L(a) as a Steinberg product over the digits of a."""
    check_prime(p)
    datum = build_root_system("A", 1)
    if kind == "weyl":
        return weyl_module_mod_p(construct_weyl_module(datum, (a,)), p)
    digits = digit_vector(a, p).digits or (0,)
    factors = [irreducible_head_mod_p(construct_weyl_module(datum, (digit,)), p) for digit in digits]
    return steinberg_product(factors, list(range(len(factors))))


def standard_unipotent(module: ModularModule) -> np.ndarray:
    """u = x_alpha(1)."""
    return module.root_element(ALPHA, 1)


def ext_digit_test(a: int, b: int, p: int) -> bool:
    """Digit condition for a non-split extension between L(a) and L(b), in either order.

    True iff for some k >= v_p(a + 1): a_i = b_i for i not in {k, k+1},
    a_k = p - b_k - 2 and a_{k+1} = b_{k+1} +- 1.
    """
    if a == b:
        raise errors.ModRepPreconditionError(f"Self-extensions are not covered (a = b = {a})")
    for first, second in ((a, b), (b, a)):
        x, y = digit_vector(first, p), digit_vector(second, p)
        length = max(len(x.digits), len(y.digits)) + 2
        for k in range(p_valuation(first + 1, p), length - 1):
            others_agree = all(x.digit(i) == y.digit(i) for i in range(length) if i not in (k, k + 1))
            if others_agree and x.digit(k) == p - y.digit(k) - 2 and abs(x.digit(k + 1) - y.digit(k + 1)) == 1:
                return True
    return False


def bb1_classify(composition: CompositionData) -> TYPES_BB1_CASE:
    """Which single-block case composition data of M / M_0 can fall under.

    A: at most one non-trivial factor. B: p > 2, two non-trivial factors of
    total dimension p + 1 or p + 2, the larger weight at least p, and the pair
    passing the extension digit test. Otherwise impossible.
    """
    p = composition.p
    nontrivial = [weight for weight in composition.factor_weights if weight > 0]
    if len(nontrivial) <= 1:
        return "A"
    if p <= 2 or len(composition.factor_weights) != 2 or len(nontrivial) != 2:
        return "impossible"
    if not p + 1 <= sum(composition.factor_dims) <= p + 2:
        return "impossible"
    a, b = composition.factor_weights
    if a < p or a == b or not ext_digit_test(a, b, p):
        return "impossible"
    return "B"


def restriction_shape_check(jordan: JordanType, p: int) -> ShapeCheck:
    """Test the shape m [p] + [d] + trivial blocks with d < p."""
    free = sum(1 for size in jordan.blocks if size == p)
    middle = [size for size in jordan.blocks if 1 < size < p]
    valid = all(size <= p for size in jordan.blocks) and len(middle) <= 1
    residual = middle[0] if middle else int(1 in jordan.blocks)
    single_block_ok = valid and free <= 1 and (free == 0 or residual <= 1)
    return ShapeCheck(valid=valid, free_blocks=free, residual=residual, single_block_ok=single_block_ok)


def sl2_scan(primes: Iterable[int], bound: Optional[int] = None) -> list[Sl2Record]:
    """Weyl modules and irreducibles for a < p^2 (or a < bound): dimensions, Jordan types of u, shapes, factors."""
    records = []
    for p in primes:
        check_prime(p)
        for a in range(bound if bound is not None else p * p):
            weyl = sl2_module(a, p, "weyl")
            weyl_jordan = jordan_type(standard_unipotent(weyl), p)
            factors = tuple(composition_factors(weyl_character(a), p))
            records.append(
                Sl2Record(
                    p=p, a=a, kind="weyl", dim=weyl.dim, jordan_type=str(weyl_jordan),
                    shape_ok=restriction_shape_check(weyl_jordan, p).valid, factors=factors,
                )
            )
            head = irreducible_head_mod_p(construct_weyl_module(build_root_system("A", 1), (a,)), p)
            head_jordan = jordan_type(standard_unipotent(head), p)
            records.append(
                Sl2Record(
                    p=p, a=a, kind="irreducible", dim=head.dim, jordan_type=str(head_jordan),
                    shape_ok=restriction_shape_check(head_jordan, p).valid, factors=(a,),
                )
            )
        logger.debug(f"SL_2 scan: p = {p} done")
    return records
