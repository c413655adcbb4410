"""Point counts on y^2 = x^3 + Ax + B and the trace machinery built on them.

The central object is kappa_p, the trace coefficient of the curve
y^2 = x^3 + 1/4 over F_p.  For p = 2 (mod 3) the curve is supersingular
and kappa_p = 0.  For p = 1 (mod 3) it is the unique integer with
|kappa_p| <= 2 sqrt(p) in a fixed congruence class mod p (a central
binomial coefficient times a power of 4), except that p = 7 and p = 13
are pinned by hand because the window is wider than p there.  Every
kappa is cross-checked against an honest point count before use.

From kappa the Frobenius eigenvalue pi_p = -kappa/2 + i sqrt(p - kappa^2/4)
is never materialized as a float; the integer traces
s_j = pi_p^j + conj(pi_p)^j follow the linear recurrence
s_j = -kappa s_{j-1} - p s_{j-2}, evaluated exactly (matrix powers once
j is large).  The sign convention has s_1 = -kappa, so the extension
counts are |E(F_{p^j})| = p^j + 1 - s_j and |E(F_p)| = p + 1 + kappa.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, isqrt

from .characters import cubic_char, cubic_roots_of_unity, quadratic_char
from .errors import (
    CrossCheckFailedError,
    EvenCharacteristicError,
    EvenPrimeError,
    NonPrimeError,
    SmallPrimeError,
    UnsupportedPrimeError,
)
from .fields import FieldElement, FieldSpec, ensure_enumerable, make_field
from .primes import is_prime


def count_points_prime(p: int, a4: int, a6: int) -> int:
    """|E(F_p)| for y^2 = x^3 + a4 x + a6, projective point included."""
    if p == 2:
        raise EvenPrimeError("use the characteristic-2 model instead")
    if not is_prime(p):
        raise NonPrimeError(f"{p} is not prime")
    roots = [0] * p
    for y in range(p):
        roots[y * y % p] += 1
    a4 %= p
    a6 %= p
    return 1 + sum(roots[(x * x * x + a4 * x + a6) % p] for x in range(p))


def point_count_residue(p: int, a4: int, a6: int) -> int:
    """The class of |E(F_p)| - p - 1 mod p, from a central binomial sum.

    Expanding sum_x chi(x^3 + a4 x + a6) with chi = power (p-1)/2 and
    collecting the surviving exponent x^(p-1) terms gives

        |E| - p - 1 = - sum_l C((p-1)/2, 2l) C(2l, (p-1-2l)/2)
                          a6^((p-1)/2 - 2l) a4^(3l - (p-1)/2)   (mod p)

    over ceil((p-1)/6) <= l <= floor((p-1)/4), with 0^0 = 1.
    Returned normalized into [0, p).
    """
    if p == 2:
        raise EvenPrimeError("p = 2 has no quadratic-character expansion")
    if p == 3:
        raise SmallPrimeError("the binomial range is empty for p = 3")
    if not is_prime(p):
        raise NonPrimeError(f"{p} is not prime")
    a4 %= p
    a6 %= p
    half = (p - 1) // 2
    total = 0
    for l in range(-(-(p - 1) // 6), (p - 1) // 4 + 1):
        term = comb(half, 2 * l) * comb(2 * l, (p - 1 - 2 * l) // 2)
        term = term * pow(a6, half - 2 * l, p) * pow(a4, 3 * l - half, p)
        total += term
    return -total % p


@dataclass(frozen=True)
class KappaRecord:
    """Trace coefficient of y^2 = x^3 + 1/4 over F_p, with its receipts."""

    p: int
    kappa: int
    residue: int  # kappa mod p, the defining congruence class
    curve_count: int  # always p + 1 + kappa


def _char2_model_count() -> int:
    # x^2 + x = y^3 + 1 over F_2; the only usable model when 4 is not a unit
    affine = sum(
        1 for x in range(2) for y in range(2) if (x * x + x) % 2 == (y * y * y + 1) % 2
    )
    return affine + 1


@lru_cache(maxsize=None)
def compute_kappa(p: int) -> KappaRecord:
    """kappa_p with a mandatory point-count cross-check."""
    if not is_prime(p):
        raise NonPrimeError(f"{p} is not prime")
    if p == 3:
        raise UnsupportedPrimeError("kappa is undefined at the characteristic 3")
    if p % 3 == 2:
        kappa = 0
        count = _char2_model_count() if p == 2 else count_points_prime(p, 0, pow(4, p - 2, p))
    else:
        residue = (
            -comb((p - 1) // 2, (p - 1) // 3) * pow(pow(4, (p - 1) // 6, p), p - 2, p)
        ) % p
        if p == 7:
            kappa = 1
        elif p == 13:
            kappa = -5
        else:
            # 4 sqrt(p) < p once p >= 17, so at most one class member fits
            window = isqrt(4 * p)
            candidates = [c for c in (residue, residue - p) if c * c <= 4 * p]
            if len(candidates) != 1:
                raise CrossCheckFailedError(f"kappa window not unique for p = {p}")
            kappa = candidates[0]
        if kappa % p != residue:
            raise CrossCheckFailedError(f"kappa = {kappa} is not in class {residue} mod {p}")
        count = count_points_prime(p, 0, pow(4, p - 2, p))
    if count != p + 1 + kappa:
        raise CrossCheckFailedError(
            f"curve count {count} != p + 1 + kappa = {p + 1 + kappa} for p = {p}"
        )
    return KappaRecord(p=p, kappa=kappa, residue=kappa % p, curve_count=count)


_MATRIX_CUTOFF = 64


def _mat_mul(a, b):
    return (
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    )


def _mat_pow(m, e):
    r = (1, 0, 0, 1)
    while e:
        if e & 1:
            r = _mat_mul(r, m)
        m = _mat_mul(m, m)
        e >>= 1
    return r


def pi_trace(p: int, j: int) -> int:
    """s_j = pi_p^j + conj(pi_p)^j as an exact integer."""
    if j < 0:
        raise ValueError("trace index must be nonnegative")
    kappa = compute_kappa(p).kappa
    if j == 0:
        return 2
    if j == 1:
        return -kappa
    if j <= _MATRIX_CUTOFF:
        s_prev, s_cur = 2, -kappa
        for _ in range(j - 1):
            s_prev, s_cur = s_cur, -kappa * s_cur - p * s_prev
        return s_cur
    m = _mat_pow((-kappa, -p, 1, 0), j - 1)
    return m[0] * -kappa + m[1] * 2


class TraceSequence:
    """Iterator-friendly view of the s_j sequence for one prime."""

    def __init__(self, p: int):
        self.p = p
        self.kappa = compute_kappa(p).kappa

    def value(self, j: int) -> int:
        return pi_trace(self.p, j)

    def prefix(self, count: int) -> list[int]:
        return [pi_trace(self.p, j) for j in range(count)]


def count_points_extension(spec: FieldSpec, a4: FieldElement, a6: FieldElement, force: bool = False) -> int:
    """|E(F_q)| by summing quadratic-character values over the extension."""
    if spec.p == 2:
        raise EvenCharacteristicError("no Weierstrass form y^2 = ... in characteristic 2")
    ensure_enumerable(spec.q, force)
    a4 = spec.element(a4)
    a6 = spec.element(a6)
    count = 1
    for x in spec.elements():
        count += 1 + quadratic_char(spec, x * x * x + a4 * x + a6)
    return count


def char2_cubic_sum(k: int, force: bool = False) -> int:
    """Sum of eta + eta^2 over (a^2+a+1)/(a^2+1) for a in F_{4^k} minus the cube roots of 1.

    Comes out to -2 + (-2)^(k+1): each term is 2 when the argument is a
    nonzero cube and -1 otherwise, and in characteristic 2 the excluded
    set {-1, -xi, -xi^2} is exactly {1, xi, xi^2}.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    spec = make_field(2, 2 * k)
    ensure_enumerable(spec.q, force)
    one, xi, xi2 = cubic_roots_of_unity(spec)
    total = 0
    for a in spec.elements():
        if a == one or a == xi or a == xi2:
            continue
        num = a * a + a + 1
        den = a * a + 1
        e = (cubic_char(spec, num) - cubic_char(spec, den)) % 3
        total += 2 if e == 0 else -1
    return total
