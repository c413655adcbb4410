"""Permutation tests for binomials x^n (x^((q-1)/r) + a), three ways.

Routes:
  * bruteforce: evaluate the map on all of F_q and check bijectivity
    with a bitset over canonical encodings;
  * wanlidl: decompose into the index form x^r_low h(x^(q-1)/m) + b and
    apply the index-form permutation criterion;
  * criterion: the character conditions specific to r = 2 and r = 3.

All three agree on every field this package enumerates; the test suite
checks that, which is what makes the fast criterion trustworthy.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Mapping, Sequence

from .characters import cubic_char, cubic_roots_of_unity, quadratic_char
from .errors import (
    BadFieldForCubicError,
    EvenCharacteristicError,
    GcdViolationError,
    NonMinimalIndexError,
    ZeroPolynomialError,
)
from .fields import FieldElement, FieldSpec, ensure_enumerable

Poly = Mapping[int, FieldElement]


@dataclass(frozen=True)
class BinomialCase:
    """One candidate x^n (x^((q-1)/r) + a)."""

    n: int
    r: int
    a: FieldElement


@dataclass(frozen=True)
class IndexForm:
    """f(x) = x^r_low * h(x^((q-1)/m)) + b with h(0) != 0 and m minimal."""

    r_low: int
    h: tuple[FieldElement, ...]  # dense, constant coefficient first
    m: int
    b: FieldElement


def _as_sparse(spec: FieldSpec, f) -> dict[int, FieldElement]:
    if isinstance(f, Mapping):
        items = f.items()
    else:
        items = enumerate(f)
    out: dict[int, FieldElement] = {}
    for e, c in items:
        c = spec.element(c)
        if not c.is_zero:
            out[int(e)] = c
    return out


def evaluate_poly(spec: FieldSpec, f: Poly, x: FieldElement) -> FieldElement:
    total = spec.zero
    for e, c in f.items():
        total = total + c * x**e
    return total


def binomial_polynomial(spec: FieldSpec, n: int, r: int, a: FieldElement) -> dict[int, FieldElement]:
    """Sparse form of x^n (x^((q-1)/r) + a), exponents reduced below q."""
    q = spec.q
    d = (q - 1) // r
    hi = n + d
    if hi > q - 1:
        hi = (hi - 1) % (q - 1) + 1  # same map on F_q, keeps degree < q
    poly = {hi: spec.one}
    if not a.is_zero:
        poly[n] = a
    return poly


def is_permutation_bruteforce(spec: FieldSpec, f, force: bool = False) -> bool:
    """Evaluate f everywhere; True iff the image has no collisions."""
    ensure_enumerable(spec.q, force)
    poly = _as_sparse(spec, f)
    seen = bytearray(spec.q)
    for x in spec.elements():
        enc = evaluate_poly(spec, poly, x).encode()
        if seen[enc]:
            return False
        seen[enc] = 1
    return True


def compute_index_form(spec: FieldSpec, f) -> IndexForm:
    """Minimal-index decomposition of a nonconstant polynomial of degree < q."""
    poly = _as_sparse(spec, f)
    q = spec.q
    if poly and max(poly) >= q:
        raise ValueError(f"degree must be < q = {q}")
    b = poly.pop(0, spec.zero)
    if not poly:
        raise ZeroPolynomialError("constant polynomials have no index form")
    r_low = min(poly)
    gaps = 0
    for e in poly:
        gaps = gcd(gaps, e - r_low)
    s = gcd(q - 1, gaps)
    m = (q - 1) // s
    h_deg = max((e - r_low) // s for e in poly)
    h = [spec.zero] * (h_deg + 1)
    for e, c in poly.items():
        h[(e - r_low) // s] = c
    return IndexForm(r_low=r_low, h=tuple(h), m=m, b=b)


def _recompose(spec: FieldSpec, form: IndexForm) -> dict[int, FieldElement]:
    s = (spec.q - 1) // form.m
    poly: dict[int, FieldElement] = {}
    for j, c in enumerate(form.h):
        if not c.is_zero:
            poly[form.r_low + s * j] = c
    if not form.b.is_zero:
        poly[0] = poly.get(0, spec.zero) + form.b
    return poly


def wan_lidl_check(spec: FieldSpec, form: IndexForm) -> bool:
    """Index-form permutation criterion.

    f = x^r_low h(x^s) + b with s = (q-1)/m permutes F_q iff
    gcd(r_low, s) = 1, h vanishes nowhere on the m-th roots of unity, and
    the values (f - b)(alpha^i)^s for 0 <= i < m are pairwise distinct.
    The constant b only shifts the image, so it takes no part in the test.
    """
    recomputed = compute_index_form(spec, _recompose(spec, form))
    if (recomputed.r_low, recomputed.m) != (form.r_low, form.m):
        raise NonMinimalIndexError(
            f"form with r_low={form.r_low}, m={form.m} is not minimal "
            f"(recomputed m={recomputed.m})"
        )
    q = spec.q
    s = (q - 1) // form.m
    if gcd(form.r_low, s) != 1:
        return False

    def h_at(y: FieldElement) -> FieldElement:
        acc = spec.zero
        ypow = spec.one
        for c in form.h:
            acc = acc + c * ypow
            ypow = ypow * y
        return acc

    alpha = spec.alpha
    zeta = alpha**s  # generates the group of m-th roots of unity
    root = spec.one
    h_vals = []
    for _ in range(form.m):
        hv = h_at(root)
        if hv.is_zero:
            return False
        h_vals.append(hv)
        root = root * zeta
    # (alpha^i)^s = zeta^i, so h_vals[i] is exactly h evaluated inside f(alpha^i)
    seen = set()
    apow = spec.one
    for i in range(form.m):
        v = (apow**form.r_low * h_vals[i]) ** s
        if v in seen:
            return False
        seen.add(v)
        apow = apow * alpha
    return True


def criterion_r2(spec: FieldSpec, n: int, a: FieldElement) -> bool:
    """Character test for r = 2: chi(a^2 - 1) must equal (-1)^(n+1).

    chi(0) matches neither sign, so a = +-1 always fails.
    """
    if spec.p == 2:
        raise EvenCharacteristicError("r = 2 needs odd q")
    half = (spec.q - 1) // 2
    if gcd(n, half) != 1:
        raise GcdViolationError(f"gcd(n={n}, (q-1)/2={half}) != 1")
    target = 1 if n % 2 == 1 else -1
    return quadratic_char(spec, a * a - 1) == target


def criterion_r3(spec: FieldSpec, n: int, a: FieldElement) -> bool:
    """Character test for r = 3 on the cross-ratios of a against 1, xi, xi^2.

    With xi a primitive cube root of unity, a passes iff a is none of
    -1, -xi, -xi^2 and none of the cubic-character exponents of
    (xi+a)/(1+a), (1+a)/(xi^2+a), (xi^2+a)/(xi+a) equals 2n mod 3.
    """
    q = spec.q
    if q % 3 != 1:
        raise BadFieldForCubicError(f"q = {q} is not 1 mod 3")
    third = (q - 1) // 3
    if gcd(n, third) != 1:
        raise GcdViolationError(f"gcd(n={n}, (q-1)/3={third}) != 1")
    one, xi, xi2 = cubic_roots_of_unity(spec)
    if a == -one or a == -xi or a == -xi2:
        return False
    e1 = cubic_char(spec, xi + a)
    e2 = cubic_char(spec, one + a)
    e3 = cubic_char(spec, xi2 + a)
    t = (2 * n) % 3
    # quotients never vanish once the three excluded a are gone, so the
    # exponents subtract cleanly
    return t not in ((e1 - e2) % 3, (e2 - e3) % 3, (e3 - e1) % 3)


def _enc_tables(spec: FieldSpec) -> tuple[list[list[int]], list[list[int]]]:
    """Encoding-level add and mul tables for small extension fields."""
    els = list(spec.elements())
    q = spec.q
    add = [[0] * q for _ in range(q)]
    mul = [[0] * q for _ in range(q)]
    for i, x in enumerate(els):
        for j in range(i, q):
            y = els[j]
            s = (x + y).encode()
            m = (x * y).encode()
            add[i][j] = add[j][i] = s
            mul[i][j] = mul[j][i] = m
    return add, mul


def _brute_survivors(spec: FieldSpec, n: int, r: int) -> list[FieldElement]:
    """All a for which the binomial permutes F_q, by direct evaluation."""
    q = spec.q
    d = (q - 1) // r
    out = []
    if spec.k == 1:
        p = spec.p
        pn = [pow(x, n, p) for x in range(p)]
        pnd = [v * pow(x, d, p) % p for x, v in enumerate(pn)]
        for a in range(p):
            seen = bytearray(p)
            for x in range(p):
                v = (pnd[x] + a * pn[x]) % p
                if seen[v]:
                    break
                seen[v] = 1
            else:
                out.append(spec.decode(a))
        return out
    add, mul = _enc_tables(spec)
    pn = [(x**n).encode() for x in spec.elements()]
    pnd = [mul[e][(x**d).encode()] for e, x in zip(pn, spec.elements())]
    for a in range(q):
        seen = bytearray(q)
        mula = mul[a]
        for x in range(q):
            v = add[pnd[x]][mula[pn[x]]]
            if seen[v]:
                break
            seen[v] = 1
        else:
            out.append(spec.decode(a))
    return out


def enumerate_perm_binomials(
    spec: FieldSpec, n: int, r: int, method: str = "criterion", force: bool = False
) -> list[FieldElement]:
    """All a in F_q (enumeration order) making x^n (x^((q-1)/r) + a) a permutation.

    a = 0 is included; the binomial degenerates to the monomial
    x^(n + (q-1)/r) and every route handles it consistently.
    """
    q = spec.q
    if r not in (2, 3):
        raise ValueError("r must be 2 or 3")
    if r == 2 and spec.p == 2:
        raise EvenCharacteristicError("r = 2 needs odd q")
    if r == 3 and q % 3 != 1:
        raise BadFieldForCubicError(f"q = {q} is not 1 mod 3")
    if not 1 <= n <= q - 1:
        raise ValueError(f"n must lie in [1, q-1], got {n}")
    d = (q - 1) // r
    if gcd(n, d) != 1:
        raise GcdViolationError(f"gcd(n={n}, (q-1)/{r}={d}) != 1")
    ensure_enumerable(q, force)
    if method == "criterion":
        crit = criterion_r2 if r == 2 else criterion_r3
        return [a for a in spec.elements() if crit(spec, n, a)]
    if method == "bruteforce":
        return _brute_survivors(spec, n, r)
    if method == "wanlidl":
        out = []
        for a in spec.elements():
            form = compute_index_form(spec, binomial_polynomial(spec, n, r, a))
            if wan_lidl_check(spec, form):
                out.append(a)
        return out
    raise ValueError(f"unknown method {method!r}")
