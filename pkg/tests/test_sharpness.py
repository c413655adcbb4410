"""Sharpness probe: exact deviation enclosures and convergent hunting."""

import math
from fractions import Fraction

import pytest
from mpmath import mp, mpf

from permbinom import sharpness
from permbinom.errors import UnsupportedPrimeError


def test_even_k_deviation_is_exact():
    # k even makes p^(k/2) an integer, so the enclosure collapses.
    lo, hi = sharpness.deviation_bounds(73, 2, 35)
    assert lo == hi == Fraction(-89, 73)


def test_odd_k_bracket_is_tight_and_correct():
    # d_1 = 1/sqrt(73) for this (p, n): numerator 2*(-7) + 3*2 + 10 = 2.
    lo, hi = sharpness.deviation_bounds(73, 1, 35)
    assert 0 < lo <= hi
    assert lo * lo < Fraction(1, 73) < hi * hi
    assert hi - lo < Fraction(1, 10**25)


def test_bracket_nesting_across_digits():
    # Coarser scale must enclose the finer bracket (positive numerator case).
    lo5, hi5 = sharpness.deviation_bounds(73, 1, 35, digits=5)
    lo50, hi50 = sharpness.deviation_bounds(73, 1, 35, digits=50)
    assert lo5 <= lo50 <= hi50 <= hi5


def test_deviation_tracks_frobenius_angle():
    """d_k = 2 cos(k theta) + O(p^(-k/2)), constant at most 8."""
    p, kappa = 7, 1
    with mp.workdps(80):
        theta = mp.atan2(mp.sqrt(mpf(4 * p - kappa * kappa)) / 2, mpf(-kappa) / 2)
        for n in (1, 3):
            for k in range(1, 41):
                lo, hi = sharpness.deviation_bounds(p, k, n)
                mid = (lo + hi) / 2
                d = mpf(mid.numerator) / mpf(mid.denominator)
                gap = abs(d - 2 * mp.cos(k * theta))
                assert gap <= 8 * mpf(p) ** (mpf(-k) / 2) + mpf(10) ** -20


@pytest.mark.parametrize("k", range(1, 13))
def test_admissible_exponent_matches_gcd(k):
    expected = math.gcd(35, (73**k - 1) // 3) == 1
    assert sharpness.admissible_exponent(35, 73, k) is expected


def test_probe_finds_the_known_witnesses():
    probe = sharpness.sharpness_probe(73, 35)
    by_k = {f.k: f for f in probe.findings}
    assert 1217 in by_k and 1578 in by_k
    # k = 1217: count within a whisker of the refined upper bound, n valid.
    high = by_k[1217]
    assert high.deviation_lo > Fraction(1999998451823, 10**12)
    assert high.gcd_ok is True
    # k = 1578: nearly touches the lower bound, but n is inadmissible there.
    low = by_k[1578]
    assert low.deviation_hi < Fraction(-199999906282, 10**11)
    assert low.gcd_ok is False
    assert sharpness.admissible_exponent(35, 73, 1578) is False
    ks = [f.k for f in probe.findings]
    assert ks == sorted(ks)


def test_probe_is_deterministic():
    a = sharpness.sharpness_probe(73, 35)
    b = sharpness.sharpness_probe(73, 35)
    assert a == b


def test_probe_convergents_satisfy_the_convergent_inequality():
    probe = sharpness.sharpness_probe(73, 35)
    assert abs(float(probe.theta) - 1.9928601255784502) < 1e-12
    with mp.workdps(240):
        theta = mp.atan2(mp.sqrt(mpf(4 * 73 - 49)) / 2, mpf(-7) / 2)
        for x, table in (
            (theta / (2 * mp.pi), probe.convergents_two_pi),
            (theta / mp.pi, probe.convergents_pi),
        ):
            assert table
            for m, den in table:
                assert abs(x - mpf(m) / den) < mpf(1) / (mpf(den) * den)


def test_probe_k_max_caps_findings_but_not_tables():
    probe = sharpness.sharpness_probe(73, 35, k_max=500)
    assert max(f.k for f in probe.findings) <= 500
    dens = [den for _, den in probe.convergents_two_pi + probe.convergents_pi]
    assert any(den > 500 for den in dens)


def test_supersingular_branch_reports_even_k_only():
    # p = 5 = 2 mod 3: theta is exactly pi/2, findings at even k.
    probe = sharpness.sharpness_probe(5, 1)
    assert probe.theta == "pi/2"
    assert probe.kappa == 0
    assert probe.convergents_two_pi == () and probe.convergents_pi == ()
    assert all(f.k % 2 == 0 for f in probe.findings)
    assert probe.findings[0].k == 2
    assert sharpness.deviation_bounds(5, 2, 1) == (Fraction(-2, 5), Fraction(-2, 5))
    assert probe.findings[0].deviation_lo == Fraction(-2, 5)


@pytest.mark.parametrize("p", [2, 3])
def test_probe_rejects_tiny_characteristic(p):
    with pytest.raises(UnsupportedPrimeError):
        sharpness.sharpness_probe(p, 1)


def test_decimal_string_rendering():
    s = sharpness.decimal_string(Fraction(-89, 73))
    assert s.startswith("-1.21917808219")
    assert len(s.split(".")[1]) == 42
    assert sharpness.decimal_string(Fraction(1, 4), places=2) == "0.25"
    # Truncation toward zero, not rounding.
    assert sharpness.decimal_string(Fraction(2, 3), places=3) == "0.666"
    assert sharpness.decimal_string(Fraction(-1, 3), places=3) == "-0.333"
