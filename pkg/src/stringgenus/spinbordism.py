"""
Additive structure of MSpin_* through the Anderson-Brown-Peterson splitting.

After 2-completion, MSpin splits into connective covers of ko, one for
each partition ``J`` into parts ``>= 2``, plus Eilenberg-MacLane spectra
``K(Z/2, i)`` counted by ``dim Z_i``. The cover attached to ``J`` starts
at level ``4 n(J)`` if ``n(J)`` is even and ``4 n(J) - 2`` if ``n(J)`` is
odd, and agrees with ``ko`` in degrees at or above that level.

The bundled table (degrees 0..127) lists, per degree, the rational rank,
the F_2-dimension of the torsion, and ``dim Z_i``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable

from .genera import Partition, partitions

__all__ = [
    "MSpinRow",
    "AbpSummand",
    "Discrepancy",
    "partitions_min2",
    "partition_number",
    "abp_summands",
    "cover_level",
    "ko_homotopy",
    "mspin_rational_rank",
    "abp_integral_rank",
    "ko_cover_torsion",
    "validate_table",
    "load_table",
    "parse_table",
    "TABLE_SHA256",
]

TABLE_RESOURCE = "mspin_table.txt"
# sha256 over the data lines (comments stripped) of the bundled table
TABLE_SHA256 = "2f1c100497772c0f9f5f79388eaba458e692fd74718e4df4785f0aca6b210c5b"


@dataclass(frozen=True)
class MSpinRow:
    i: int
    rank: int
    torsion: int
    dim_z: int

    def __post_init__(self):
        if min(self.i, self.rank, self.torsion, self.dim_z) < 0:
            raise ValueError("table entries are non-negative: %r" % (self,))
        if self.rank and self.i % 4:
            raise ValueError("rational rank in degree %d, which is not divisible by 4" % self.i)


@dataclass(frozen=True)
class AbpSummand:
    j_partition: Partition
    n: int
    cover_level: int

    def __post_init__(self):
        if any(p < 2 for p in self.j_partition):
            raise ValueError("ABP partitions have parts >= 2")


@dataclass(frozen=True)
class Discrepancy:
    i: int
    column: str
    expected: int
    found: int

    def to_json(self) -> dict:
        return {"i": self.i, "column": self.column, "expected": self.expected, "found": self.found}


def partitions_min2(n: int) -> list[Partition]:
    """All partitions of ``n`` into parts ``>= 2``; ``n = 0`` gives ``[()]``."""
    return list(partitions(n, min_part=2))


@lru_cache(maxsize=None)
def _partition_counts(n: int, min_part: int) -> tuple[int, ...]:
    c = [1] + [0] * n
    for part in range(min_part, n + 1):
        for s in range(part, n + 1):
            c[s] += c[s - part]
    return tuple(c)


def partition_number(n: int) -> int:
    """Unrestricted partition number ``p(n)``."""
    if n < 0:
        return 0
    return _partition_counts(n, 1)[n]


def cover_level(n: int) -> int:
    return 4 * n if n % 2 == 0 else 4 * n - 2


def abp_summands(max_n: int) -> list[AbpSummand]:
    """The ko-cover summands with ``n(J) <= max_n``."""
    out = []
    for n in range(max_n + 1):
        for j in partitions_min2(n):
            out.append(AbpSummand(j, n, cover_level(n)))
    return out


def ko_homotopy(i: int) -> str:
    """``pi_i(ko)`` as ``"Z"``, ``"Z/2"`` or ``"0"`` (Bott periodicity)."""
    if i < 0:
        return "0"
    r = i % 8
    if r in (0, 4):
        return "Z"
    if r in (1, 2):
        return "Z/2"
    return "0"


def _summand_count(i: int, kind: str) -> int:
    if ko_homotopy(i) != kind:
        return 0
    counts = _partition_counts(i // 4 + 1, 2)
    total = 0
    n = 0
    while cover_level(n) <= i:
        if n != 1:
            total += counts[n]
        n += 1
    return total


def mspin_rational_rank(i: int) -> int:
    """``dim_Q MSpin_i tensor Q``: ``p(i/4)`` for ``4 | i``, else 0."""
    if i < 0 or i % 4:
        return 0
    return partition_number(i // 4)


def abp_integral_rank(i: int) -> int:
    """Number of ``Z`` summands the ko covers contribute in degree ``i``."""
    return _summand_count(i, "Z")


def ko_cover_torsion(i: int) -> int:
    """Number of ``Z/2`` summands the ko covers contribute in degree ``i``."""
    return _summand_count(i, "Z/2")


def validate_table(rows: Iterable[MSpinRow]) -> list[Discrepancy]:
    """Check every row against the splitting; an empty list means the table is consistent."""
    rows = list(rows)
    if not rows:
        return []
    start = rows[0].i
    if [r.i for r in rows] != list(range(start, start + len(rows))):
        raise ValueError("rows must cover a contiguous range of degrees")
    found = []
    for r in rows:
        rank = mspin_rational_rank(r.i)
        if r.rank != rank:
            found.append(Discrepancy(r.i, "rank", rank, r.rank))
        torsion = ko_cover_torsion(r.i) + r.dim_z
        if r.torsion != torsion:
            found.append(Discrepancy(r.i, "torsion", torsion, r.torsion))
        elif r.i % 4 == 3 and r.torsion != r.dim_z:
            found.append(Discrepancy(r.i, "torsion", r.dim_z, r.torsion))
    return found


def parse_table(text: str) -> list[MSpinRow]:
    """Rows from the text format ``"i rank torsion dimz"``; ``#`` starts a comment line."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 4:
            raise ValueError("line %d: expected 4 fields, got %d" % (lineno, len(fields)))
        try:
            rows.append(MSpinRow(*(int(x) for x in fields)))
        except ValueError as exc:
            raise ValueError("line %d: %s" % (lineno, exc)) from None
    return rows


def _data_digest(text: str) -> str:
    data = "".join(l + "\n" for l in text.splitlines() if l and not l.startswith("#"))
    return hashlib.sha256(data.encode("ascii")).hexdigest()


def load_table(path: str | Path | None = None) -> list[MSpinRow]:
    """Read a table file, or the bundled one (whose checksum is verified)."""
    if path is not None:
        return parse_table(Path(path).read_text())
    text = resources.files("stringgenus").joinpath("data", TABLE_RESOURCE).read_text()
    digest = _data_digest(text)
    if digest != TABLE_SHA256:
        raise RuntimeError("bundled MSpin table is corrupt (sha256 %s)" % digest)
    return parse_table(text)
