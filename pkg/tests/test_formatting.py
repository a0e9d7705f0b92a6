"""Positional significant-figure rendering."""

import pytest

from eragreats import DomainError, format_probability, format_proportion


def test_three_significant_figures_positional():
    assert format_probability(0.004482) == "0.00448"
    assert format_probability(0.0005617) == "0.000562"
    assert format_probability(5.7184e-06) == "0.00000572"
    assert format_probability(0.02493) == "0.0249"
    assert format_probability(0.10923) == "0.109"
    assert format_probability(0.2734) == "0.273"
    assert format_probability(1.0) == "1.00"
    assert format_probability(0.0) == "0"


def test_never_scientific_notation():
    assert "e" not in format_probability(3.21e-9)
    assert format_probability(3.21e-9) == "0.00000000321"


def test_requested_precision_is_respected():
    assert format_probability(5.7184e-06, significant=2) == "0.0000057"
    assert format_probability(0.1234, significant=1) == "0.1"
    assert format_probability(987.6, significant=2) == "990"


def test_rounding_that_crosses_a_power_of_ten():
    assert format_probability(0.0999999) == "0.100"
    assert format_probability(0.9996) == "1.00"


def test_proportion_uses_three_decimals():
    assert format_proportion(0.1869566464866726) == "0.187"
    assert format_proportion(1.0) == "1.000"
    assert format_proportion(0.0134) == "0.013"


def test_rejects_non_finite_and_bad_precision():
    with pytest.raises(DomainError):
        format_probability(float("nan"))
    with pytest.raises(DomainError):
        format_probability(float("inf"))
    with pytest.raises(DomainError):
        format_probability(0.5, significant=0)
    with pytest.raises(DomainError):
        format_proportion(float("nan"))
