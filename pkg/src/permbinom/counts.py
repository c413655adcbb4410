"""Closed-form counts of permutation binomials and the bounds they obey.

For r = 2 the number of working a is (q - 2 + (-1)^n)/2 on the nose.
For r = 3 it is

    T = (2q - 3(e1 + e2) - 10 - 2 s_k) / 9

with the corrections e1 = -2 iff q - 3n = 1 (mod 9) (else 1) and
e2 = -2 iff 3 | n (else 1), and s_k the exact Frobenius trace from
curves.pi_trace.  The numerator must be divisible by 9 exactly; a
remainder means a bug somewhere upstream, so it raises instead of
rounding.

Bounds come in two flavors: the generic Masuda-Zieve interval for any r,
computed in outward-rounded exact rationals, and a sharper integer
interval for r = 3 obtained by replacing s_k with +-2 sqrt(q):

    ceil((2q - 4 sqrt(q) - 16)/9) <= T <= floor((2q + 4 sqrt(q) - 7)/9)

evaluated with exact integer ceilings and floors (no floating point).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, isqrt

from .curves import pi_trace
from .errors import (
    BadFieldForCubicError,
    DivisibilityViolationError,
    EvenCharacteristicError,
    GcdViolationError,
    NonPrimeError,
)
from .fields import make_field
from .permtest import enumerate_perm_binomials
from .primes import exact_sqrt, prime_power_decompose

_SQRT_SCALE = 10**30  # denominator for outward rational brackets of sqrt(q)


def closed_count_r2(q: int, n: int) -> int:
    """(q - 2 + (-1)^n) / 2 under the gcd(n, (q-1)/2) = 1 precondition."""
    pk = prime_power_decompose(q)
    if pk is None:
        raise NonPrimeError(f"q = {q} is not a prime power")
    if q % 2 == 0:
        raise EvenCharacteristicError("r = 2 counts need odd q")
    half = (q - 1) // 2
    if gcd(n, half) != 1:
        raise GcdViolationError(f"gcd(n={n}, (q-1)/2={half}) != 1")
    return (q - 2 + (-1) ** n) // 2


def epsilons(q: int, n: int) -> tuple[int, int]:
    """The two correction terms of the r = 3 count."""
    e1 = -2 if (q - 3 * n) % 9 == 1 else 1
    e2 = -2 if n % 3 == 0 else 1
    return e1, e2


def closed_count_r3(p: int, k: int, n: int) -> int:
    """Exact r = 3 count over F_{p^k} from the trace of Frobenius."""
    q = p**k
    if q % 3 != 1:
        raise BadFieldForCubicError(f"q = {q} is not 1 mod 3")
    third = (q - 1) // 3
    if gcd(n, third) != 1:
        raise GcdViolationError(f"gcd(n={n}, (q-1)/3={third}) != 1")
    e1, e2 = epsilons(q, n)
    numerator = 2 * q - 3 * (e1 + e2) - 10 - 2 * pi_trace(p, k)
    if numerator % 9 != 0:
        raise DivisibilityViolationError(
            f"count numerator {numerator} not divisible by 9 at (p={p}, k={k}, n={n})"
        )
    return numerator // 9


def _sqrt_bracket(q: int) -> tuple[Fraction, Fraction]:
    """Rationals lo <= sqrt(q) <= hi, exact when q is a perfect square."""
    root = exact_sqrt(q)
    if root is not None:
        return Fraction(root), Fraction(root)
    w = isqrt(q * _SQRT_SCALE * _SQRT_SCALE)
    return Fraction(w, _SQRT_SCALE), Fraction(w + 1, _SQRT_SCALE)


def masuda_zieve_bounds(q: int, r: int) -> tuple[Fraction, Fraction]:
    """General interval for the count of permutation binomials of this shape.

    (r!/r^r) (q + 1 - sqrt(q) M_r - (r+1) r^(r-1)) <= T <= (r!/r^r) (q + 1 + sqrt(q) M_r)
    with M_r = r^(r+1) - 2 r^r - r^(r-1) + 2.  Irrational sqrt(q) is
    bracketed outward so the returned interval always contains the true one.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if (q - 1) % r != 0:
        raise ValueError(f"r = {r} must divide q - 1 = {q - 1}")
    m_r = r ** (r + 1) - 2 * r**r - r ** (r - 1) + 2
    scale = Fraction(factorial(r), r**r)
    _, sqrt_hi = _sqrt_bracket(q)
    lower = scale * (q + 1 - sqrt_hi * m_r - (r + 1) * r ** (r - 1))
    upper = scale * (q + 1 + sqrt_hi * m_r)
    return lower, upper


def refined_bounds_r3(q: int) -> tuple[int, int]:
    """ceil((2q - 4 sqrt(q) - 16)/9) and floor((2q + 4 sqrt(q) - 7)/9), exactly.

    Integer comparisons against 16q stand in for the irrational 4 sqrt(q):
    for v >= 0, v <= 4 sqrt(q) iff v^2 <= 16q.
    """
    if q % 3 != 1:
        raise BadFieldForCubicError(f"q = {q} is not 1 mod 3")
    f = isqrt(16 * q)
    lo = (2 * q - 16 - f) // 9 - 2
    while True:
        v = 2 * q - 16 - 9 * lo
        if v <= 0 or v * v <= 16 * q:
            break
        lo += 1
    hi = (2 * q - 7 + f) // 9 + 2
    while True:
        v = 9 * hi - 2 * q + 7
        if v <= 0 or v * v <= 16 * q:
            break
        hi -= 1
    return lo, hi


@dataclass(frozen=True)
class CountReport:
    """Everything the count route knows about one (q, n, r) case."""

    q: int
    p: int
    k: int
    n: int
    r: int
    epsilon1: int | None
    epsilon2: int | None
    s_k: int | None
    closed_count: int
    brute_count: int | None
    mz_lower: Fraction
    mz_upper: Fraction
    cor_lower: int | None
    cor_upper: int | None
    a_values: tuple[int, ...] | None  # canonical encodings, enumeration order


def build_count_report(
    p: int, k: int, n: int, r: int, verify: bool = False, force: bool = False
) -> CountReport:
    """Closed-form count plus bounds; verify=True adds brute force and the a list."""
    q = p**k
    if r == 2:
        e1 = e2 = s_k = None
        closed = closed_count_r2(q, n)
        cor_lo = cor_hi = None
    elif r == 3:
        e1, e2 = epsilons(q, n)
        s_k = pi_trace(p, k)
        closed = closed_count_r3(p, k, n)
        cor_lo, cor_hi = refined_bounds_r3(q)
    else:
        raise ValueError("r must be 2 or 3")
    mz_lo, mz_hi = masuda_zieve_bounds(q, r)
    brute_count = None
    a_values = None
    if verify:
        spec = make_field(p, k)
        brute_count = len(enumerate_perm_binomials(spec, n, r, method="bruteforce", force=force))
        a_values = tuple(
            a.encode() for a in enumerate_perm_binomials(spec, n, r, method="criterion", force=force)
        )
    return CountReport(
        q=q,
        p=p,
        k=k,
        n=n,
        r=r,
        epsilon1=e1,
        epsilon2=e2,
        s_k=s_k,
        closed_count=closed,
        brute_count=brute_count,
        mz_lower=mz_lo,
        mz_upper=mz_hi,
        cor_lower=cor_lo,
        cor_upper=cor_hi,
        a_values=a_values,
    )


def report_to_dict(report: CountReport) -> dict:
    """JSON-ready dict: stable key order, fractions and big ints as strings."""
    return {
        "q": report.q,
        "p": report.p,
        "k": report.k,
        "n": report.n,
        "r": report.r,
        "epsilon1": report.epsilon1,
        "epsilon2": report.epsilon2,
        "s_k": None if report.s_k is None else str(report.s_k),
        "closed_count": report.closed_count,
        "brute_count": report.brute_count,
        "mz_lower": str(report.mz_lower),
        "mz_upper": str(report.mz_upper),
        "cor_lower": report.cor_lower,
        "cor_upper": report.cor_upper,
        "a_values": None if report.a_values is None else list(report.a_values),
    }
