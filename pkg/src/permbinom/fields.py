"""Finite fields F_{p^k} in an explicit polynomial basis.

Elements are coefficient tuples (c_0, ..., c_{k-1}) over F_p, meaning
c_0 + c_1 x + ... + c_{k-1} x^{k-1} modulo a monic irreducible modulus of
degree k.  The canonical enumeration order is by integer encoding
enc = sum c_i p^i, so the constant coefficient varies fastest and prime
fields enumerate as 0, 1, ..., p-1.

When no modulus is supplied, make_field picks the first irreducible it
finds scanning candidates x^k + c_{k-1} x^{k-1} + ... + c_0 in ascending
encoding order of (c_0, ..., c_{k-1}); the scan is deterministic, so a
given (p, k) always names the same field with the same generator.

The distinguished generator alpha is the first element in enumeration
order whose multiplicative order is q - 1.  For prime fields this is the
least positive primitive root (alpha = 5 for F_73); for F_4 with modulus
x^2 + x + 1 it is x itself.
"""

from __future__ import annotations

import os
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import (
    DegreeMismatchError,
    EnumerationGuardError,
    FieldMismatchError,
    NonPrimeError,
    ReducibleModulusError,
    ZeroElementError,
)
from .primes import factorize, is_prime, prime_power_decompose

ENUMERATION_GUARD_DEFAULT = 1 << 20
GUARD_ENV_VAR = "PERMBINOM_GUARD"


def enumeration_guard() -> int:
    """Current guard on how large a field full enumerations may sweep."""
    raw = os.environ.get(GUARD_ENV_VAR)
    if raw is None:
        return ENUMERATION_GUARD_DEFAULT
    try:
        return int(raw)
    except ValueError:
        return ENUMERATION_GUARD_DEFAULT


def ensure_enumerable(q: int, force: bool = False) -> None:
    """Raise unless a full sweep over F_q is within the guard (or forced)."""
    if force:
        return
    limit = enumeration_guard()
    if q > limit:
        raise EnumerationGuardError(
            f"refusing to enumerate F_q with q = {q} > guard {limit}; "
            f"pass force=True or set {GUARD_ENV_VAR}"
        )


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p: tuples, constant coefficient first


def _ptrim(a: Sequence[int]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def _pdeg(a: Sequence[int]) -> int:
    return len(_ptrim(a)) - 1


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    n = max(len(a), len(b))
    aa = list(a) + [0] * (n - len(a))
    bb = list(b) + [0] * (n - len(b))
    return _ptrim([(x - y) % p for x, y in zip(aa, bb)])


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of a modulo f; f need not be monic."""
    a = list(a)
    df = _pdeg(f)
    if df < 0:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(f[df], p - 2, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            c = c * inv_lead % p
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _ptrim(a[:df] if df > 0 else [])


def _pmulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> tuple[int, ...]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _pmod(prod, f, p)


def _ppowmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> tuple[int, ...]:
    result: tuple[int, ...] = (1,)
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Distinct-degree test: gcd(f, x^{p^i} - x) trivial for i <= deg/2."""
    k = _pdeg(f)
    if k < 1:
        return False
    if k == 1:
        return True
    if f[0] == 0:
        return False
    x = (0, 1)
    t = x
    for _ in range(k // 2):
        t = _ppowmod(t, p, f, p)
        if _pdeg(_pgcd(_psub(t, x, p), f, p)) > 0:
            return False
    return True


def _find_modulus(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k in ascending encoding order."""
    if k == 1:
        return (0, 1)
    for enc in range(p**k):
        low, e = [], enc
        for _ in range(k):
            e, c = divmod(e, p)
            low.append(c)
        f = tuple(low) + (1,)
        if _is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found; unreachable")


# ---------------------------------------------------------------------------


class FieldElement:
    """One element of a FieldSpec; supports +, -, *, /, ** and hashing."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: "FieldSpec", coeffs: tuple[int, ...]):
        self.spec = spec
        self.coeffs = coeffs

    def _lift(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise FieldMismatchError("operands from different fields")
            return other
        if isinstance(other, int):
            return self.spec.element(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        p = self.spec.p
        return FieldElement(self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul_coeffs(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        spec = self.spec
        result = spec.one
        base = self
        # 0**0 = 1 by convention, which square-and-multiply gives for free
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.spec.q - 2)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def encode(self) -> int:
        """Index of this element in the canonical enumeration order."""
        e = 0
        for c in reversed(self.coeffs):
            e = e * self.spec.p + c
        return e

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.spec.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec.p, self.spec.k, self.coeffs))

    def __repr__(self):
        if self.spec.k == 1:
            return f"{self.coeffs[0]}:F{self.spec.q}"
        terms = [
            f"{c}" if i == 0 else ("x" if c == 1 else f"{c}x") + (f"^{i}" if i > 1 else "")
            for i, c in enumerate(self.coeffs)
            if c
        ]
        return f"({' + '.join(terms) or '0'}):F{self.spec.q}"


class FieldSpec:
    """Immutable description of F_{p^k} plus its arithmetic."""

    __slots__ = ("p", "k", "q", "modulus", "zero", "one", "_reduction", "_alpha", "_q1_factors")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self.zero = FieldElement(self, (0,) * k)
        self.one = FieldElement(self, (1,) + (0,) * (k - 1))
        # x^{k+i} mod modulus for i = 0..k-2, used to fold products back down
        head = tuple(-c % p for c in modulus[:k])
        rows = []
        t = head
        for _ in range(max(0, k - 1)):
            rows.append(t)
            lead = t[k - 1]
            shifted = (0,) + t[: k - 1]
            t = tuple((s + lead * h) % p for s, h in zip(shifted, head)) if lead else shifted
        self._reduction = rows
        self._alpha: FieldElement | None = None
        self._q1_factors: dict[int, int] | None = None

    def mul_coeffs(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, k = self.p, self.k
        if k == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        out = [c % p for c in prod[:k]]
        for i in range(k - 1):
            c = prod[k + i] % p
            if c:
                row = self._reduction[i]
                for j in range(k):
                    out[j] = (out[j] + c * row[j]) % p
        return tuple(out)

    def element(self, value) -> FieldElement:
        """Build an element from an integer (prime-subfield embedding) or coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatchError("element from a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.k - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.k:
            raise DegreeMismatchError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return FieldElement(self, coeffs)

    def decode(self, enc: int) -> FieldElement:
        """Element at position enc in the canonical enumeration order."""
        if not 0 <= enc < self.q:
            raise ValueError(f"encoding {enc} out of range for q={self.q}")
        coeffs = []
        for _ in range(self.k):
            enc, c = divmod(enc, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> Iterator[FieldElement]:
        """All of F_q in canonical enumeration order."""
        for enc in range(self.q):
            yield self.decode(enc)

    @property
    def q1_factors(self) -> dict[int, int]:
        if self._q1_factors is None:
            self._q1_factors = factorize(self.q - 1) if self.q > 2 else {}
        return self._q1_factors

    @property
    def alpha(self) -> FieldElement:
        """First element in enumeration order of multiplicative order q - 1."""
        if self._alpha is None:
            for enc in range(1, self.q):
                el = self.decode(enc)
                if element_order(el) == self.q - 1:
                    self._alpha = el
                    break
            else:
                raise AssertionError("no generator found; unreachable")
        return self._alpha

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self is other or (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"F_{self.p}"
        mod = ",".join(str(c) for c in self.modulus)
        return f"F_{self.p}^{self.k}(mod {mod})"


_FIELD_CACHE: dict[tuple[int, int, tuple[int, ...] | None], FieldSpec] = {}


def make_field(p: int, k: int = 1, modulus: Iterable[int] | None = None) -> FieldSpec:
    """Construct F_{p^k}, validating p prime and the modulus irreducible."""
    if not is_prime(p):
        raise NonPrimeError(f"{p} is not prime")
    if k < 1:
        raise DegreeMismatchError("extension degree must be >= 1")
    key = (p, k, tuple(int(c) % p for c in modulus) if modulus is not None else None)
    cached = _FIELD_CACHE.get(key)
    if cached is not None:
        return cached
    if key[2] is None:
        mod = _find_modulus(p, k)
    else:
        mod = key[2]
        if _pdeg(mod) != k:
            raise DegreeMismatchError(f"modulus degree {_pdeg(mod)} != k = {k}")
        if mod[k] != 1:
            raise ReducibleModulusError("modulus must be monic")
        if k > 1 and not _is_irreducible(mod, p):
            raise ReducibleModulusError(f"modulus {mod} is reducible over F_{p}")
    spec = FieldSpec(p, k, mod)
    _FIELD_CACHE[key] = spec
    return spec


def element_order(el: FieldElement) -> int:
    """Multiplicative order, via the factorization of q - 1."""
    if el.is_zero:
        raise ZeroElementError("zero has no multiplicative order")
    order = el.spec.q - 1
    for prime in el.spec.q1_factors:
        while order % prime == 0 and (el ** (order // prime)) == el.spec.one:
            order //= prime
    return order


def enumerate_elements(spec: FieldSpec) -> Iterator[FieldElement]:
    """Canonical enumeration of F_q (constant coefficient fastest)."""
    return spec.elements()


def parse_field(text: str) -> tuple[int, int]:
    """Parse a CLI field string 'p^k', or a plain prime-power order q, into (p, k)."""
    parts = text.split("^")
    if len(parts) == 2:
        return int(parts[0]), int(parts[1])
    if len(parts) == 1:
        decomposed = prime_power_decompose(int(parts[0]))
        if decomposed is None:
            raise ValueError(f"{text} is not a prime power")
        return decomposed
    raise ValueError(f"cannot parse field {text!r}; expected 'q' or 'p^k'")
