"""Ranked all-time-greats lists and early-era counting."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

from .errors import DataError, DomainError


@dataclass(frozen=True)
class PlayerEntry:
    rank: int
    name: str
    career_start_year: int

    def __post_init__(self):
        if self.rank < 1:
            raise DataError(f"rank must be >= 1, got {self.rank}")
        if not self.name or not self.name.strip():
            raise DataError(f"entry at rank {self.rank} has an empty name")


@dataclass(frozen=True)
class RankedList:
    """A named ranking whose entries carry ranks exactly 1..n."""

    source: str
    entries: tuple[PlayerEntry, ...]

    def __post_init__(self):
        if not self.source:
            raise DataError("ranked list needs a non-empty source name")
        if not self.entries:
            raise DataError(f"list {self.source!r} has no entries")
        ranks = [e.rank for e in self.entries]
        if ranks != list(range(1, len(self.entries) + 1)):
            raise DataError(
                f"list {self.source!r} must carry ranks 1..{len(self.entries)} "
                f"in order, without gaps or duplicates"
            )
        names = [e.name for e in self.entries]
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise DataError(f"list {self.source!r} repeats players: {dupes}")

    def __len__(self) -> int:
        return len(self.entries)


def count_early(ranked: RankedList, depth: int, cutoff_year: int) -> int:
    """Number of the top ``depth`` players whose careers started in or
    before ``cutoff_year``.  The cutoff is inclusive.
    """
    if not isinstance(depth, int) or isinstance(depth, bool):
        raise DomainError(f"depth must be an integer, got {depth!r}")
    if not 1 <= depth <= len(ranked):
        raise DomainError(
            f"depth must be in [1, {len(ranked)}] for list {ranked.source!r}, got {depth}"
        )
    return sum(1 for e in ranked.entries[:depth] if e.career_start_year <= cutoff_year)


def load_ranked_list(path, source: str | None = None) -> RankedList:
    """Read a ranked list from CSV with columns ``rank,name,career_start_year``.

    ``source`` defaults to the file's stem.
    """
    path = Path(path)
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise DataError(f"cannot read file: {exc.strerror or exc}", path=path) from None
    if not rows:
        raise DataError("file is empty", path=path)
    header = [h.strip() for h in rows[0]]
    if header != ["rank", "name", "career_start_year"]:
        raise DataError(
            f"expected header 'rank,name,career_start_year', got {','.join(rows[0])!r}",
            path=path, line=1,
        )
    entries = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 3:
            raise DataError(f"expected 3 columns, got {len(row)}", path=path, line=lineno)
        try:
            rank = int(row[0].strip())
            year = int(row[2].strip())
        except ValueError:
            raise DataError(f"bad rank or year in row {row!r}", path=path, line=lineno) from None
        try:
            entries.append(PlayerEntry(rank, row[1].strip(), year))
        except DataError as exc:
            raise DataError(str(exc), path=path, line=lineno) from None
    try:
        return RankedList(source or path.stem, tuple(entries))
    except DataError as exc:
        raise DataError(str(exc), path=path) from None


def dump_ranked_list(ranked: RankedList) -> str:
    """Serialize a list back to CSV text; inverse of :func:`load_ranked_list`."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["rank", "name", "career_start_year"])
    for e in ranked.entries:
        writer.writerow([e.rank, e.name, e.career_start_year])
    return buf.getvalue()
