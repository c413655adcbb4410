"""Permutation routes against each other and against raw-integer brute force."""

from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from permbinom.errors import (
    BadFieldForCubicError,
    EvenCharacteristicError,
    GcdViolationError,
    NonMinimalIndexError,
    ZeroPolynomialError,
)
from permbinom.fields import make_field
from permbinom.permtest import (
    IndexForm,
    binomial_polynomial,
    compute_index_form,
    enumerate_perm_binomials,
    evaluate_poly,
    is_permutation_bruteforce,
    wan_lidl_check,
)


def _raw_binomial_survivors(q, n, r):
    """Independent oracle: integer arithmetic only, prime q."""
    d = (q - 1) // r
    out = []
    for a in range(q):
        image = {(pow(x, n, q) * (pow(x, d, q) + a)) % q for x in range(q)}
        if len(image) == q:
            out.append(a)
    return out


def test_binomial_polynomial_reduces_high_exponent():
    # n + (q-1)/r may exceed q-1; the reduced polynomial must be the same map
    spec = make_field(13)
    a = spec.element(4)
    poly = binomial_polynomial(spec, 12, 2, a)
    assert max(poly) <= 12
    for x in spec.elements():
        want = x**12 * (x**6 + a)
        assert evaluate_poly(spec, poly, x) == want


def test_is_permutation_bruteforce_basics():
    f7 = make_field(7)
    assert is_permutation_bruteforce(f7, {1: f7.one, 0: f7.element(3)})
    assert not is_permutation_bruteforce(f7, {3: f7.one})  # gcd(3, 6) = 3
    f5 = make_field(5)
    assert is_permutation_bruteforce(f5, {3: f5.one})  # gcd(3, 4) = 1


def test_index_form_of_paper_binomial():
    spec = make_field(73)
    form = compute_index_form(spec, binomial_polynomial(spec, 35, 3, spec.element(2)))
    assert form.r_low == 35
    assert form.m == 3
    assert [c.encode() for c in form.h] == [2, 1]
    assert form.b.encode() == 0


def test_index_form_rejects_constants():
    spec = make_field(13)
    with pytest.raises(ZeroPolynomialError):
        compute_index_form(spec, {0: spec.element(5)})


def test_wan_lidl_rejects_non_minimal_form():
    # x + x^5 over F_13 has index 3, so a form claiming m = 6 must be refused
    spec = make_field(13)
    form = IndexForm(r_low=1, h=(spec.one, spec.zero, spec.one), m=6, b=spec.zero)
    with pytest.raises(NonMinimalIndexError):
        wan_lidl_check(spec, form)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_wan_lidl_matches_bruteforce_on_sparse_polys(data):
    spec = make_field(13)
    exps = data.draw(st.lists(st.integers(1, 12), min_size=1, max_size=3, unique=True))
    coeffs = data.draw(st.lists(st.integers(1, 12), min_size=len(exps), max_size=len(exps)))
    b = data.draw(st.integers(0, 12))
    poly = {e: spec.element(c) for e, c in zip(exps, coeffs)}
    poly[0] = spec.element(b)
    form = compute_index_form(spec, dict(poly))
    assert wan_lidl_check(spec, form) == is_permutation_bruteforce(spec, poly)


@pytest.mark.parametrize("q,r", [(13, 2), (13, 3), (11, 2), (19, 3), (31, 3), (23, 2)])
def test_routes_match_raw_oracle(q, r):
    spec = make_field(q)
    d = (q - 1) // r
    for n in range(1, q):
        if gcd(n, d) != 1:
            continue
        want = _raw_binomial_survivors(q, n, r)
        for method in ("criterion", "bruteforce", "wanlidl"):
            got = [a.encode() for a in enumerate_perm_binomials(spec, n, r, method=method)]
            assert got == want, (q, n, r, method)


@pytest.mark.parametrize("p,k,r", [(3, 2, 2), (5, 2, 2), (2, 2, 3), (3, 3, 2), (5, 2, 3), (2, 4, 3)])
def test_routes_agree_on_extension_fields(p, k, r):
    spec = make_field(p, k)
    q = p**k
    d = (q - 1) // r
    for n in range(1, q):
        if gcd(n, d) != 1:
            continue
        crit = [a.encode() for a in enumerate_perm_binomials(spec, n, r, method="criterion")]
        brute = [a.encode() for a in enumerate_perm_binomials(spec, n, r, method="bruteforce")]
        wl = [a.encode() for a in enumerate_perm_binomials(spec, n, r, method="wanlidl")]
        assert crit == brute == wl, (q, n, r)


def test_routes_agree_sampled_large_fields():
    # spot checks beyond the exhaustive range
    f121 = make_field(11, 2)
    f169 = make_field(13, 2)
    for spec, n, r in ((f121, 7, 2), (f169, 5, 3), (f169, 11, 2)):
        crit = [a.encode() for a in enumerate_perm_binomials(spec, n, r, method="criterion")]
        brute = [a.encode() for a in enumerate_perm_binomials(spec, n, r, method="bruteforce")]
        assert crit == brute


@pytest.mark.parametrize("p,k,r", [(13, 1, 2), (13, 1, 3), (5, 2, 2)])
def test_monomial_case_matches_gcd_rule(p, k, r):
    # a = 0 leaves the monomial x^(n + (q-1)/r), a permutation iff the
    # exponent is coprime to q - 1
    spec = make_field(p, k)
    q = p**k
    d = (q - 1) // r
    for n in range(1, q):
        if gcd(n, d) != 1:
            continue
        survivors = {a.encode() for a in enumerate_perm_binomials(spec, n, r)}
        assert (0 in survivors) == (gcd(n + d, q - 1) == 1)


def test_enumerate_validations():
    f13 = make_field(13)
    with pytest.raises(ValueError):
        enumerate_perm_binomials(f13, 1, 5)
    with pytest.raises(ValueError):
        enumerate_perm_binomials(f13, 0, 2)
    with pytest.raises(ValueError):
        enumerate_perm_binomials(f13, 13, 2)
    with pytest.raises(GcdViolationError):
        enumerate_perm_binomials(f13, 2, 2)
    with pytest.raises(GcdViolationError):
        enumerate_perm_binomials(f13, 2, 3)
    with pytest.raises(EvenCharacteristicError):
        enumerate_perm_binomials(make_field(2, 3), 1, 2)
    with pytest.raises(BadFieldForCubicError):
        enumerate_perm_binomials(make_field(11), 1, 3)
    with pytest.raises(ValueError):
        enumerate_perm_binomials(f13, 1, 2, method="magic")
