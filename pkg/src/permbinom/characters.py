"""Quadratic and cubic multiplicative characters, and full power sums.

Character values are never represented as complex numbers.  The quadratic
character chi returns an integer in {-1, 0, +1}.  The cubic character eta
returns an exponent e in {0, 1, 2} meaning "value xi^e" for the fixed
primitive cube root of unity xi = alpha^((q-1)/3), or None on the zero
element.  Exponents compose additively mod 3, so eta(uv) = eta(u) + eta(v)
and eta(u/v) = eta(u) - eta(v) without any field inversions.
"""

from __future__ import annotations

from .errors import BadFieldForCubicError, EvenCharacteristicError
from .fields import FieldElement, FieldSpec, ensure_enumerable


def quadratic_char(spec: FieldSpec, el: FieldElement) -> int:
    """chi(el) = el^((q-1)/2) read as -1, 0, or +1."""
    if spec.p == 2:
        raise EvenCharacteristicError("quadratic character needs odd q")
    if el.is_zero:
        return 0
    t = el ** ((spec.q - 1) // 2)
    if t == spec.one:
        return 1
    if t == -spec.one:
        return -1
    raise AssertionError("chi landed outside {1,-1}; broken field arithmetic")


def cubic_roots_of_unity(spec: FieldSpec) -> tuple[FieldElement, FieldElement, FieldElement]:
    """(1, xi, xi^2) with xi = alpha^((q-1)/3)."""
    if spec.q % 3 != 1:
        raise BadFieldForCubicError(f"q = {spec.q} is not 1 mod 3")
    xi = spec.alpha ** ((spec.q - 1) // 3)
    return spec.one, xi, xi * xi


def cubic_char(spec: FieldSpec, el: FieldElement) -> int | None:
    """Exponent e with el^((q-1)/3) = xi^e, or None when el = 0."""
    if el.is_zero:
        return None
    one, xi, xi2 = cubic_roots_of_unity(spec)
    t = el ** ((spec.q - 1) // 3)
    if t == one:
        return 0
    if t == xi:
        return 1
    if t == xi2:
        return 2
    raise AssertionError("eta landed outside the cube roots of unity")


def cubic_pair_term(exponent: int) -> int:
    """eta(y) + eta^2(y) as an integer: 2 on cubes, -1 otherwise."""
    return 2 if exponent % 3 == 0 else -1


def power_sum(spec: FieldSpec, m: int, force: bool = False) -> FieldElement:
    """Sum of a^m over every a in F_q, with 0^0 = 1.

    Equals -1 when (q-1) | m and m > 0, and 0 otherwise (for m = 0 the
    q copies of 1 sum to q * 1 = 0 in characteristic p).
    """
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    ensure_enumerable(spec.q, force)
    total = spec.zero
    for a in spec.elements():
        total = total + a**m
    return total
