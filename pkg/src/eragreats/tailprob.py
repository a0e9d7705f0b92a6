"""Exact binomial tail probabilities and "1 in N" presentation.

The tail is computed by direct summation of binomial terms using exact
integer coefficients from ``math.comb``, accumulated with ``math.fsum``.
No normal approximation is involved, so the tiny tails this package cares
about (order 1e-6 and below) keep near-full double precision.  When a
power of ``p`` or ``1 - p`` inside a term that matters falls below the
normal double range, the sum is redone in exact rational arithmetic, so
even denormal-range results are correctly rounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal, localcontext

from .errors import DomainError

MAX_TRIALS = 1000

# doubles lose precision below 2**-1021; an isolated p**k or q**(n-k)
# factor can land there long before the summed tail does
_NORMAL_EXP_FLOOR = -1021.0
_LN2 = math.log(2.0)


@dataclass(frozen=True)
class Chance:
    """A probability paired with its "1 in N" display string."""

    probability: float
    display: str


def binomial_tail(n: int, k_min: int, p: float) -> float:
    """P(X >= k_min) for X ~ Binomial(n, p).

    ``n`` must be a positive integer no larger than ``MAX_TRIALS`` and
    ``k_min`` an integer in [0, n].  ``k_min <= 0`` returns exactly 1.0.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"n must be an integer, got {n!r}")
    if not 1 <= n <= MAX_TRIALS:
        raise DomainError(f"n must be in [1, {MAX_TRIALS}], got {n}")
    if not isinstance(k_min, int) or isinstance(k_min, bool):
        raise DomainError(f"k_min must be an integer, got {k_min!r}")
    if not 0 <= k_min <= n:
        raise DomainError(f"k_min must be in [0, {n}], got {k_min}")
    if math.isnan(p) or not 0.0 <= p <= 1.0:
        raise DomainError(f"p must be in [0, 1], got {p!r}")

    if k_min <= 0:
        return 1.0
    if p == 0.0:
        return 0.0
    if p == 1.0:
        return 1.0
    q = 1.0 - p
    terms = [math.comb(n, k) * p**k * q ** (n - k) for k in range(k_min, n + 1)]
    # fsum keeps the relative error at a few ulp even when the largest and
    # smallest terms span many orders of magnitude
    total = math.fsum(terms)
    if _factor_underflow_suspected(n, k_min, p, q, total):
        return _exact_tail(n, k_min, p)
    return min(total, 1.0)


def _factor_underflow_suspected(
    n: int, k_min: int, p: float, q: float, total: float
) -> bool:
    """True when a denormal power may have poisoned a term that matters."""
    if total <= 0.0:
        return True
    log_p = math.log2(p)
    log_q = math.log2(q)
    if n * log_p > _NORMAL_EXP_FLOOR and n * log_q > _NORMAL_EXP_FLOOR:
        return False
    # a poisoned term is harmless while it sits 80+ bits under the total;
    # lgamma is accurate to well under a bit at these magnitudes
    bar = math.log2(total) - 80.0
    log_n_fact = math.lgamma(n + 1)
    for k in range(k_min, n + 1):
        if k * log_p > _NORMAL_EXP_FLOOR and (n - k) * log_q > _NORMAL_EXP_FLOOR:
            continue
        log_comb = (log_n_fact - math.lgamma(k + 1) - math.lgamma(n - k + 1)) / _LN2
        if log_comb + k * log_p + (n - k) * log_q >= bar:
            return True
    return False


def _exact_tail(n: int, k_min: int, p: float) -> float:
    """Tail sum in exact rational arithmetic, correctly rounded to a double.

    ``p`` and ``1 - p`` share one power-of-two denominator, so every term
    is an integer over ``den**n`` and the whole sum runs in exact integer
    arithmetic with a single normalization at the end.
    """
    num_p, den = p.as_integer_ratio()
    num_q = den - num_p
    mode = math.floor((n + 1) * p)
    term = math.comb(n, k_min) * num_p**k_min * num_q ** (n - k_min)
    total = term
    for k in range(k_min + 1, n + 1):
        # exact division: comb(n, k - 1) * (n - k + 1) is divisible by k,
        # and the previous term carries num_q to at least the first power
        term = term * ((n - k + 1) * num_p) // (k * num_q)
        total += term
        # past the mode the terms only shrink, and fewer than 2**10 of
        # them remain, so one sitting 140 bits under the running total
        # cannot move the rounded double
        if k >= mode and total.bit_length() - term.bit_length() > 140:
            break
    # int true division is correctly rounded, so the double comes out
    # exact even when it lands in the denormal range
    return total / (1 << ((den.bit_length() - 1) * n))


def chance_format(probability: float) -> Chance:
    """Render a probability as a "1 in N" string.

    N is the reciprocal, rounded half away from zero: to a whole number
    when it is 10 or more, to one decimal place below 10.  A one-decimal
    value that lands on a whole number drops the ".0" (so a certainty
    prints as "1 in 1", not "1 in 1.0").
    """
    if math.isnan(probability) or not 0.0 < probability <= 1.0:
        raise DomainError(f"probability must be in (0, 1], got {probability!r}")
    reciprocal = 1.0 / probability
    # a double's reciprocal can need over 300 digits; the default decimal
    # context would refuse to quantize it
    with localcontext() as ctx:
        ctx.prec = 400
        if reciprocal >= 10.0:
            rounded = Decimal(reciprocal).quantize(Decimal("1"), rounding=ROUND_HALF_UP)
            display = f"1 in {rounded}"
        else:
            rounded = Decimal(reciprocal).quantize(Decimal("0.1"), rounding=ROUND_HALF_UP)
            if rounded == rounded.to_integral_value():
                display = f"1 in {rounded.to_integral_value()}"
            else:
                display = f"1 in {rounded}"
    return Chance(probability, display)
