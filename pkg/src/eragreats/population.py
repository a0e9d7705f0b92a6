"""Eligible-population accounting.

The core quantity is the share of everyone who was ever eligible to play
that had already existed by some cutoff year.  Eligible population is
recorded per period, each identified by its final calendar year (decades
in the bundled data, with a trailing half-decade).  A cutoff strictly
inside a period earns that period a linear fraction of its population;
a cutoff on a period's final year includes the period in full.

Interest weighting scales each period's population by a regime weight in
both the numerator and the denominator, which models era-dependent talent
pull without changing the total-share normalization.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Mapping

from .errors import DataError, DomainError


@dataclass(frozen=True)
class PopulationRecord:
    """One period of the eligible-population table.

    ``population`` is in millions.  ``period_length_years`` defaults to a
    decade; the final period of a table may be shorter.
    """

    period_end_year: int
    population: float
    period_length_years: int = 10

    def __post_init__(self):
        if not self.population > 0:
            raise DataError(
                f"population for period ending {self.period_end_year} must be "
                f"positive, got {self.population!r}"
            )
        if not 1 <= self.period_length_years <= 10:
            raise DataError(
                f"period length for {self.period_end_year} must be between 1 "
                f"and 10 years, got {self.period_length_years!r}"
            )

    @property
    def period_start_year(self) -> int:
        return self.period_end_year - self.period_length_years


@dataclass(frozen=True)
class PopulationTable:
    """An ordered, non-overlapping sequence of population periods."""

    records: tuple[PopulationRecord, ...]

    def __post_init__(self):
        if not self.records:
            raise DataError("population table must contain at least one period")
        years = [r.period_end_year for r in self.records]
        if years != sorted(set(years)):
            raise DataError("population periods must have strictly increasing end years")
        for prev, cur in zip(self.records, self.records[1:]):
            if cur.period_start_year < prev.period_end_year:
                raise DataError(
                    f"period ending {cur.period_end_year} overlaps the one "
                    f"ending {prev.period_end_year}"
                )

    @property
    def first_year(self) -> int:
        """First covered year (start of the earliest period)."""
        return self.records[0].period_start_year

    @property
    def final_year(self) -> int:
        """Last covered year (end of the latest period)."""
        return self.records[-1].period_end_year

    @property
    def years(self) -> tuple[int, ...]:
        return tuple(r.period_end_year for r in self.records)


@dataclass(frozen=True)
class WeightRegime:
    """Per-period interest weights, keyed by period end year.

    Weights live in [0, 1].  Treat ``weights`` as read-only after
    construction.
    """

    name: str
    weights: Mapping[int, float]

    def __post_init__(self):
        if not self.name:
            raise DataError("weight regime needs a non-empty name")
        for year, w in self.weights.items():
            if not 0.0 <= w <= 1.0:
                raise DataError(
                    f"regime {self.name!r} has weight {w!r} for {year}, "
                    f"expected a value in [0, 1]"
                )


def _check_weight_years(table: PopulationTable, regime: WeightRegime) -> None:
    table_years = set(table.years)
    regime_years = set(regime.weights)
    if table_years != regime_years:
        missing = sorted(table_years - regime_years)
        extra = sorted(regime_years - table_years)
        parts = []
        if missing:
            parts.append(f"missing weights for {missing}")
        if extra:
            parts.append(f"weights for unknown years {extra}")
        raise DataError(f"regime {regime.name!r} does not match the table: " + "; ".join(parts))


def _accumulate(
    table: PopulationTable,
    cutoff_year: int,
    weight_of: Callable[[PopulationRecord], float],
) -> float:
    """Weighted population total through ``cutoff_year``, prorating any
    period the cutoff splits.  Summed with ``math.fsum`` so that the share
    at the final table year is exactly 1.
    """
    terms = []
    for rec in table.records:
        if rec.period_end_year <= cutoff_year:
            terms.append(weight_of(rec) * rec.population)
        elif rec.period_start_year < cutoff_year:
            fraction = (cutoff_year - rec.period_start_year) / rec.period_length_years
            terms.append(weight_of(rec) * rec.population * fraction)
    return math.fsum(terms)


def _check_cutoff(table: PopulationTable, cutoff_year: int) -> None:
    if not isinstance(cutoff_year, int):
        raise DomainError(f"cutoff year must be an integer, got {cutoff_year!r}")
    if not table.first_year < cutoff_year <= table.final_year:
        raise DomainError(
            f"cutoff year {cutoff_year} is outside the covered span "
            f"({table.first_year}, {table.final_year}]"
        )


def cumulative_population(table: PopulationTable, cutoff_year: int) -> float:
    """Eligible population (millions) that existed through ``cutoff_year``."""
    _check_cutoff(table, cutoff_year)
    return _accumulate(table, cutoff_year, lambda rec: 1.0)


def cumulative_proportion(table: PopulationTable, cutoff_year: int) -> float:
    """Share of the all-time eligible population through ``cutoff_year``.

    No intermediate rounding: the ratio is taken between two full-precision
    accumulations, and equals exactly 1.0 at the table's final year.
    """
    _check_cutoff(table, cutoff_year)
    numerator = _accumulate(table, cutoff_year, lambda rec: 1.0)
    denominator = _accumulate(table, table.final_year, lambda rec: 1.0)
    return numerator / denominator


def weighted_cumulative_population(
    table: PopulationTable, regime: WeightRegime, cutoff_year: int
) -> float:
    """Interest-weighted population (millions) through ``cutoff_year``."""
    _check_cutoff(table, cutoff_year)
    _check_weight_years(table, regime)
    return _accumulate(table, cutoff_year, lambda rec: regime.weights[rec.period_end_year])


def weighted_cumulative_proportion(
    table: PopulationTable, regime: WeightRegime, cutoff_year: int
) -> float:
    """Interest-weighted share of the all-time pool through ``cutoff_year``.

    Each period's population is scaled by its regime weight in both the
    numerator and the denominator.  With uniform weights this reduces to
    :func:`cumulative_proportion`.
    """
    _check_cutoff(table, cutoff_year)
    _check_weight_years(table, regime)
    weight_of = lambda rec: regime.weights[rec.period_end_year]
    numerator = _accumulate(table, cutoff_year, weight_of)
    denominator = _accumulate(table, table.final_year, weight_of)
    if denominator == 0.0:
        raise DomainError(f"regime {regime.name!r} gives the whole table zero weight")
    return numerator / denominator


def load_population_table(path) -> PopulationTable:
    """Read a population table from CSV.

    Expected columns: ``year,population_millions[,period_length_years]``.
    The length column is optional and defaults to 10; an empty cell also
    means 10.
    """
    path = Path(path)
    rows = _read_csv(path)
    header, data = rows[0], rows[1:]
    if [h.strip() for h in header[:2]] != ["year", "population_millions"]:
        raise DataError(
            "expected header 'year,population_millions[,period_length_years]', "
            f"got {','.join(header)!r}",
            path=path, line=1,
        )
    records = []
    for lineno, row in enumerate(data, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) not in (2, 3):
            raise DataError(f"expected 2 or 3 columns, got {len(row)}", path=path, line=lineno)
        year = _parse_int(row[0], "year", path, lineno)
        population = _parse_float(row[1], "population_millions", path, lineno)
        length = 10
        if len(row) == 3 and row[2].strip():
            length = _parse_int(row[2], "period_length_years", path, lineno)
        try:
            records.append(PopulationRecord(year, population, length))
        except DataError as exc:
            raise DataError(str(exc), path=path, line=lineno) from None
    try:
        return PopulationTable(tuple(records))
    except DataError as exc:
        raise DataError(str(exc), path=path) from None


def load_weight_regimes(path) -> dict[str, WeightRegime]:
    """Read weight regimes from CSV, one column per regime.

    Expected header: ``year,<name>,<name>,...``.  Returns regimes keyed by
    name, in column order.
    """
    path = Path(path)
    rows = _read_csv(path)
    header, data = rows[0], rows[1:]
    if not header or header[0].strip() != "year" or len(header) < 2:
        raise DataError(
            f"expected header 'year,<regime>,...', got {','.join(header)!r}",
            path=path, line=1,
        )
    names = [h.strip() for h in header[1:]]
    if len(set(names)) != len(names):
        raise DataError("duplicate regime names in header", path=path, line=1)
    weights: dict[str, dict[int, float]] = {name: {} for name in names}
    for lineno, row in enumerate(data, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise DataError(
                f"expected {len(header)} columns, got {len(row)}", path=path, line=lineno
            )
        year = _parse_int(row[0], "year", path, lineno)
        for name, cell in zip(names, row[1:]):
            if year in weights[name]:
                raise DataError(f"duplicate year {year}", path=path, line=lineno)
            weights[name][year] = _parse_float(cell, f"weight {name!r}", path, lineno)
    try:
        return {name: WeightRegime(name, weights[name]) for name in names}
    except DataError as exc:
        raise DataError(str(exc), path=path) from None


def _read_csv(path: Path) -> list[list[str]]:
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise DataError(f"cannot read file: {exc.strerror or exc}", path=path) from None
    if not rows:
        raise DataError("file is empty", path=path)
    return rows


def _parse_int(cell: str, what: str, path: Path, lineno: int) -> int:
    try:
        return int(cell.strip())
    except ValueError:
        raise DataError(f"bad {what}: {cell.strip()!r}", path=path, line=lineno) from None


def _parse_float(cell: str, what: str, path: Path, lineno: int) -> float:
    try:
        value = float(cell.strip())
    except ValueError:
        raise DataError(f"bad {what}: {cell.strip()!r}", path=path, line=lineno) from None
    if math.isnan(value) or math.isinf(value):
        raise DataError(f"bad {what}: {cell.strip()!r}", path=path, line=lineno)
    return value
