"""Binomial tail computation against independent oracles, plus the
"1 in N" formatting rules.
"""

import math

import pytest
from hypothesis import given, strategies as st
from scipy import stats as scipy_stats

from eragreats import DomainError, binomial_tail, chance_format
from oracles import enumerated_tail


# ---------------------------------------------------------------- tails

def test_matches_enumeration_on_small_grid():
    for n in (1, 2, 3, 5, 8):
        for k in range(n + 1):
            for p in (0.0, 0.1, 0.3, 0.5, 0.7, 0.18696, 1.0):
                expected = enumerated_tail(n, k, p)
                assert binomial_tail(n, k, p) == pytest.approx(expected, abs=1e-13)


@given(
    n=st.integers(1, 11),
    p=st.floats(0.0, 1.0, allow_nan=False),
    data=st.data(),
)
def test_matches_enumeration_on_random_inputs(n, p, data):
    k = data.draw(st.integers(0, n))
    assert binomial_tail(n, k, p) == pytest.approx(enumerated_tail(n, k, p), abs=1e-12)


@given(
    n=st.integers(1, 400),
    p=st.floats(1e-6, 1 - 1e-6, allow_nan=False),
    data=st.data(),
)
def test_matches_scipy_survival_function(n, p, data):
    k = data.draw(st.integers(0, n))
    ours = binomial_tail(n, k, p)
    reference = float(scipy_stats.binom.sf(k - 1, n, p))
    if reference >= 1e-100:
        assert math.isclose(ours, reference, rel_tol=1e-9)
    elif ours > 0.0 and reference > 0.0:
        # scipy's incomplete-beta backend drifts in the deep tails that the
        # exact rational path keeps to the last bit, so only the order of
        # magnitude is comparable down here
        assert math.isclose(math.log10(ours), math.log10(reference), abs_tol=1.0)
    else:
        assert ours <= 1e-100 and reference <= 1e-100


def test_reference_values_from_fixed_inputs():
    # frozen from the enumeration oracle
    assert binomial_tail(10, 6, 0.18696) == pytest.approx(0.004480521654768476, rel=1e-12)
    assert binomial_tail(10, 7, 0.18696) == pytest.approx(0.0005616671356848983, rel=1e-12)
    assert binomial_tail(25, 12, 0.18696) == pytest.approx(0.0008262067419771764, rel=1e-12)
    assert binomial_tail(25, 15, 0.18696) == pytest.approx(5.719718819994147e-06, rel=1e-12)
    assert binomial_tail(10, 6, 0.2110) == pytest.approx(0.008395850243962335, rel=1e-12)


def test_degenerate_cases():
    assert binomial_tail(7, 0, 0.3) == 1.0
    assert binomial_tail(7, 3, 0.0) == 0.0
    assert binomial_tail(7, 0, 0.0) == 1.0
    assert binomial_tail(7, 7, 1.0) == 1.0
    assert binomial_tail(7, 7, 0.5) == pytest.approx(0.5**7, rel=1e-12)
    assert binomial_tail(1, 1, 0.25) == pytest.approx(0.25, rel=1e-15)


def test_large_n_stays_finite_and_sane():
    value = binomial_tail(1000, 600, 0.5)
    assert 0.0 < value < 1e-9
    assert binomial_tail(1000, 0, 0.5) == 1.0


def test_deep_tails_round_correctly():
    # frozen from exact rational evaluation; in each case some isolated
    # p**k factor leaves the normal double range even though the sum may
    # not, which poisons a plain float summation
    assert binomial_tail(224, 209, 0.03125) == 1.4026091661776092e-292
    assert binomial_tail(1000, 500, 0.2298) == 3.645917786264917e-77
    assert binomial_tail(1000, 1000, 0.5) == 9.332636185032189e-302
    # a denormal result still comes out correctly rounded, not zeroed
    assert binomial_tail(100, 98, 5e-4) == 1.5603e-320
    # and a tail below the smallest denormal rounds to exactly zero
    assert binomial_tail(300, 299, 0.001) == 0.0


@given(n=st.integers(1, 60), p=st.floats(0.0, 1.0, allow_nan=False), data=st.data())
def test_monotone_in_k(n, p, data):
    k = data.draw(st.integers(1, n))
    assert binomial_tail(n, k, p) <= binomial_tail(n, k - 1, p) + 1e-15


@given(
    n=st.integers(1, 60),
    p1=st.floats(0.0, 1.0, allow_nan=False),
    p2=st.floats(0.0, 1.0, allow_nan=False),
    data=st.data(),
)
def test_monotone_in_p(n, p1, p2, data):
    k = data.draw(st.integers(0, n))
    low, high = sorted((p1, p2))
    assert binomial_tail(n, k, low) <= binomial_tail(n, k, high) + 1e-12


@given(n=st.integers(1, 200), p=st.floats(0.0, 1.0, allow_nan=False), data=st.data())
def test_bounded_by_unit_interval(n, p, data):
    k = data.draw(st.integers(0, n))
    value = binomial_tail(n, k, p)
    assert 0.0 <= value <= 1.0


def test_rejects_out_of_domain_arguments():
    with pytest.raises(DomainError):
        binomial_tail(0, 0, 0.5)
    with pytest.raises(DomainError):
        binomial_tail(1001, 3, 0.5)
    with pytest.raises(DomainError):
        binomial_tail(10, -1, 0.5)
    with pytest.raises(DomainError):
        binomial_tail(10, 11, 0.5)
    with pytest.raises(DomainError):
        binomial_tail(10, 3, -0.01)
    with pytest.raises(DomainError):
        binomial_tail(10, 3, 1.01)
    with pytest.raises(DomainError):
        binomial_tail(10, 3, float("nan"))
    with pytest.raises(DomainError):
        binomial_tail(10.0, 3, 0.5)


# ------------------------------------------------------------- chances

def test_chance_display_integer_from_ten_up():
    assert chance_format(1 / 223.21).display == "1 in 223"
    assert chance_format(1 / 40.11).display == "1 in 40"
    assert chance_format(1 / 1780.4).display == "1 in 1780"
    assert chance_format(1 / 1780.6).display == "1 in 1781"
    assert chance_format(1 / 174874.2).display == "1 in 174874"
    assert chance_format(0.1).display == "1 in 10"


def test_chance_display_one_decimal_below_ten():
    assert chance_format(1 / 7.7).display == "1 in 7.7"
    assert chance_format(1 / 3.65).display == "1 in 3.7"
    assert chance_format(1 / 9.2).display == "1 in 9.2"
    assert chance_format(1 / 9.04).display == "1 in 9"
    assert chance_format(0.5).display == "1 in 2"
    assert chance_format(1.0).display == "1 in 1"


def test_chance_display_boundary_between_rules():
    # 9.96 rounds up to 10 under the one-decimal rule, matching the
    # integer rule across the threshold
    assert chance_format(1 / 9.96).display == "1 in 10"
    assert chance_format(1 / 9.94).display == "1 in 9.9"
    assert chance_format(1 / 10.4).display == "1 in 10"


def test_chance_keeps_probability():
    chance = chance_format(0.004)
    assert chance.probability == 0.004
    assert chance.display == "1 in 250"


def test_chance_rejects_out_of_domain_probabilities():
    for bad in (0.0, -0.2, 1.0000001, float("nan")):
        with pytest.raises(DomainError):
            chance_format(bad)


@given(st.floats(1e-300, 1.0, allow_nan=False))
def test_chance_display_shape(probability):
    display = chance_format(probability).display
    assert display.startswith("1 in ")
    tail = display[5:]
    assert float(tail) > 0
    # one decimal at most, and only below ten
    if "." in tail:
        whole, frac = tail.split(".")
        assert len(frac) == 1
        assert float(tail) < 10
