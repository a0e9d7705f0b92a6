"""Era detrending for raw statistics.

A season value is rescaled by (historic average / that season's league
average), so seasons posted against an easy league shrink and seasons
posted against a hard league grow.  Career totals are sums of detrended
seasons.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DataError, DomainError


@dataclass(frozen=True)
class SeasonStat:
    """One season of a counting or rate statistic for one player."""

    season: int
    value: float
    league_average: float

    def __post_init__(self):
        if not self.league_average > 0:
            raise DataError(
                f"season {self.season}: league average must be positive, "
                f"got {self.league_average!r}"
            )


def detrend_value(value: float, league_average: float, historic_average: float) -> float:
    """Rescale one value: ``value * historic_average / league_average``."""
    if math.isnan(value) or math.isinf(value):
        raise DomainError(f"value must be finite, got {value!r}")
    if not league_average > 0 or math.isinf(league_average):
        raise DomainError(f"league average must be positive and finite, got {league_average!r}")
    if not historic_average > 0 or math.isinf(historic_average):
        raise DomainError(
            f"historic average must be positive and finite, got {historic_average!r}"
        )
    return value * historic_average / league_average


def compute_historic_average(league_averages: Iterable[float]) -> float:
    """Arithmetic mean of per-season league averages."""
    values = list(league_averages)
    if not values:
        raise DomainError("historic average needs at least one league average")
    for v in values:
        if not v > 0 or math.isinf(v) or math.isnan(v):
            raise DomainError(f"league averages must be positive and finite, got {v!r}")
    return math.fsum(values) / len(values)


def detrend_career(
    stats: Sequence[SeasonStat],
    historic_average: float | None = None,
    league_universe: Sequence[SeasonStat] | None = None,
) -> float:
    """Sum of detrended season values.

    ``historic_average`` defaults to the mean of the league averages carried
    by ``stats`` themselves.  When ``league_universe`` is given, each season
    in ``stats`` must agree with the universe's league average for that
    season.
    """
    if not stats:
        raise DomainError("career detrending needs at least one season")
    if league_universe is not None:
        by_season = {s.season: s.league_average for s in league_universe}
        for s in stats:
            expected = by_season.get(s.season)
            if expected is None:
                raise DataError(f"season {s.season} is missing from the league universe")
            if expected != s.league_average:
                raise DataError(
                    f"season {s.season}: league average {s.league_average!r} "
                    f"disagrees with the universe value {expected!r}"
                )
    if historic_average is None:
        historic_average = compute_historic_average(s.league_average for s in stats)
    return math.fsum(
        detrend_value(s.value, s.league_average, historic_average) for s in stats
    )


def load_season_stats(path) -> list[SeasonStat]:
    """Read ``season,value,league_average`` rows from CSV."""
    path = Path(path)
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise DataError(f"cannot read file: {exc.strerror or exc}", path=path) from None
    if not rows:
        raise DataError("file is empty", path=path)
    header = [h.strip() for h in rows[0]]
    if header != ["season", "value", "league_average"]:
        raise DataError(
            f"expected header 'season,value,league_average', got {','.join(rows[0])!r}",
            path=path, line=1,
        )
    stats = []
    seen = set()
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 3:
            raise DataError(f"expected 3 columns, got {len(row)}", path=path, line=lineno)
        try:
            season = int(row[0].strip())
            value = float(row[1].strip())
            league_average = float(row[2].strip())
        except ValueError:
            raise DataError(f"bad number in row {row!r}", path=path, line=lineno) from None
        if math.isnan(value) or math.isinf(value) or math.isnan(league_average):
            raise DataError(f"bad number in row {row!r}", path=path, line=lineno)
        if season in seen:
            raise DataError(f"duplicate season {season}", path=path, line=lineno)
        seen.add(season)
        try:
            stats.append(SeasonStat(season, value, league_average))
        except DataError as exc:
            raise DataError(str(exc), path=path, line=lineno) from None
    if not stats:
        raise DataError("no season rows found", path=path)
    return stats
