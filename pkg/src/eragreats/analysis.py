"""End-to-end overrepresentation reports.

An analysis takes a ranked list, a depth, and an era cutoff: count how
many of the top players started their careers by the cutoff, look up the
share of the all-time eligible pool that existed by then, and ask how
surprising that count would be if greatness were spread evenly over the
pool (an exact binomial tail).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError
from .population import (
    PopulationTable,
    WeightRegime,
    cumulative_population,
    cumulative_proportion,
    weighted_cumulative_proportion,
)
from .rankings import RankedList, count_early
from .tailprob import Chance, binomial_tail, chance_format


@dataclass(frozen=True)
class OverrepReport:
    """One cell of an overrepresentation analysis.

    ``proportion_used`` is the null probability that a single great comes
    from the early era; ``regime`` is None for unweighted reports.
    """

    source: str
    depth: int
    early_count: int
    proportion_used: float
    tail_probability: float
    chance: Chance
    regime: str | None = None


def _check_span(ranked: RankedList, table: PopulationTable) -> None:
    for entry in ranked.entries:
        if not table.first_year < entry.career_start_year <= table.final_year:
            raise DomainError(
                f"{entry.name!r} starts in {entry.career_start_year}, outside the "
                f"covered span ({table.first_year}, {table.final_year}]"
            )


def analyze(
    ranked: RankedList,
    depth: int,
    cutoff_year: int,
    table: PopulationTable,
    regime: WeightRegime | None = None,
) -> OverrepReport:
    """Overrepresentation report for one list at one depth.

    With a regime the null proportion is interest-weighted; otherwise it is
    the raw population share.  The proportion flows into the binomial tail
    at full precision.
    """
    _check_span(ranked, table)
    if regime is None:
        proportion = cumulative_proportion(table, cutoff_year)
    else:
        proportion = weighted_cumulative_proportion(table, regime, cutoff_year)
    early = count_early(ranked, depth, cutoff_year)
    probability = binomial_tail(depth, early, proportion)
    return OverrepReport(
        source=ranked.source,
        depth=depth,
        early_count=early,
        proportion_used=proportion,
        tail_probability=probability,
        chance=chance_format(probability),
        regime=None if regime is None else regime.name,
    )


def sensitivity_matrix(
    lists: Sequence[RankedList],
    regimes: Sequence[WeightRegime],
    depths: Sequence[int],
    cutoff_year: int,
    table: PopulationTable,
) -> list[OverrepReport]:
    """Reports for every (regime, depth, list) combination.

    Row order is regimes in the given order, then depths in the given
    order, then lists in the given order.
    """
    if not lists:
        raise DomainError("sensitivity analysis needs at least one ranked list")
    if not regimes:
        raise DomainError("sensitivity analysis needs at least one weight regime")
    if not depths:
        raise DomainError("sensitivity analysis needs at least one depth")
    return [
        analyze(ranked, depth, cutoff_year, table, regime)
        for regime in regimes
        for depth in depths
        for ranked in lists
    ]


def bridge_check(
    counts: Sequence[tuple[int, int]],
    pool_cutoff_year: int,
    era_cutoff_year: int,
    table: PopulationTable,
    source: str = "external",
) -> list[OverrepReport]:
    """Recompute externally reported results against a truncated pool.

    The null proportion is the population through ``era_cutoff_year``
    divided by the population through ``pool_cutoff_year``, both linearly
    prorated.  ``counts`` holds (depth, early_count) pairs as reported.
    """
    if not isinstance(pool_cutoff_year, int) or not isinstance(era_cutoff_year, int):
        raise DomainError("cutoff years must be integers")
    if era_cutoff_year > pool_cutoff_year:
        raise DomainError(
            f"era cutoff {era_cutoff_year} must not exceed pool cutoff {pool_cutoff_year}"
        )
    if not counts:
        raise DomainError("bridge check needs at least one (depth, count) pair")
    era = cumulative_population(table, era_cutoff_year)
    pool = cumulative_population(table, pool_cutoff_year)
    proportion = era / pool
    reports = []
    for depth, early in counts:
        probability = binomial_tail(depth, early, proportion)
        reports.append(
            OverrepReport(
                source=source,
                depth=depth,
                early_count=early,
                proportion_used=proportion,
                tail_probability=probability,
                chance=chance_format(probability),
            )
        )
    return reports


def monte_carlo_oracle(depth: int, p: float, trials: int, seed: int) -> np.ndarray:
    """Empirical tail estimates from simulated binomial draws.

    Returns an array of length ``depth + 1`` whose entry k estimates
    P(X >= k).  Fully determined by ``seed``.
    """
    if not isinstance(depth, int) or isinstance(depth, bool) or depth < 1:
        raise DomainError(f"depth must be a positive integer, got {depth!r}")
    if not isinstance(trials, int) or isinstance(trials, bool) or trials < 1:
        raise DomainError(f"trials must be a positive integer, got {trials!r}")
    if np.isnan(p) or not 0.0 <= p <= 1.0:
        raise DomainError(f"p must be in [0, 1], got {p!r}")
    rng = np.random.default_rng(seed)
    draws = rng.binomial(depth, p, size=trials)
    counts = np.bincount(draws, minlength=depth + 1)
    at_least = counts[::-1].cumsum()[::-1]
    return at_least / trials
