"""Young diagrams and the combinatorial predicates used for unipotent branching.

Partitions are stored as weakly decreasing tuples of positive integers.  Rows
beyond the last one are treated as zero-length (see :func:`part_at`).
"""

from __future__ import annotations

import enum
from collections import Counter
from functools import lru_cache
from typing import Iterable

__all__ = [
    "Partition",
    "HookType",
    "Transversality",
    "parse_partition",
    "format_partition",
    "transpose",
    "part_at",
    "is_close",
    "is_even",
    "common_parts",
    "transversality",
    "is_2_transverse",
    "first_row_removed",
    "prepend_row",
    "two_hook_removals",
    "two_hook_additions",
    "partitions_of",
]


class Partition(tuple):
    """An integer partition, e.g. ``Partition([3, 1])``.

    Subclasses ``tuple`` so that partitions hash, compare and unpack like the
    plain tuples of their parts.  Tuple ordering is lexicographic, hence
    ``sorted(..., reverse=True)`` gives the canonical reverse-lex order.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return format_partition(self)


class HookType(enum.Enum):
    """Orientation of a domino: ``(2)`` is horizontal, ``(1^2)`` vertical."""

    HORIZONTAL = "(2)"
    VERTICAL = "(1^2)"

    def swapped(self) -> "HookType":
        return HookType.VERTICAL if self is HookType.HORIZONTAL else HookType.HORIZONTAL


class Transversality(enum.Enum):
    NOT_CLOSE = "not-close"
    CLOSE_NOT_EVEN = "close-not-even"
    TRANSVERSE_2 = "2-transverse"
    TRANSVERSE = "transverse"

    @property
    def is_2_transverse(self) -> bool:
        return self in (Transversality.TRANSVERSE_2, Transversality.TRANSVERSE)


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"``; the empty partition is spelled ``"-"``."""
    text = text.strip()
    if text in ("-", ""):
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    lam = tuple(lam)
    return ",".join(map(str, lam)) if lam else "-"


@lru_cache(maxsize=None)
def transpose(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def part_at(lam: Partition, i: int) -> int:
    """The ``i``-th part (1-based), zero past the end."""
    if i < 1:
        raise ValueError("row index must be >= 1")
    return lam[i - 1] if i <= len(lam) else 0


def is_close(lam: Partition, mu: Partition) -> bool:
    rows = max(len(lam), len(mu))
    return all(abs(part_at(lam, i) - part_at(mu, i)) <= 1 for i in range(1, rows + 1))


def is_even(lam: Partition) -> bool:
    return all(count % 2 == 0 for count in Counter(lam).values())


def common_parts(lam: Partition, mu: Partition) -> Partition:
    # positions where both rows are empty never count
    return Partition(a for a, b in zip(lam, mu) if a == b)


@lru_cache(maxsize=None)
def transversality(lam: Partition, mu: Partition) -> Transversality:
    if not is_close(lam, mu):
        return Transversality.NOT_CLOSE
    common = common_parts(lam, mu)
    if not is_even(common):
        return Transversality.CLOSE_NOT_EVEN
    return Transversality.TRANSVERSE_2 if common else Transversality.TRANSVERSE


def is_2_transverse(lam: Partition, mu: Partition) -> bool:
    return transversality(lam, mu).is_2_transverse


def first_row_removed(lam: Partition) -> Partition:
    if not lam:
        raise ValueError("empty partition has no first row")
    return Partition(lam[1:])


def prepend_row(length: int, lam: Partition) -> Partition:
    """``[length, lam_1, lam_2, ...]``; the new row may not be shorter than ``lam_1``."""
    if length < part_at(lam, 1) or length < 0:
        raise ValueError(f"cannot prepend row {length} to {format_partition(lam)}")
    return Partition((length,) + tuple(lam)) if length else Partition(lam)


def two_hook_removals(lam: Partition) -> dict[Partition, HookType]:
    """All diagrams obtained by deleting one domino from the rim of ``lam``.

    A domino removal yields a distinct partition for every domino, so the
    result maps each resulting partition to the orientation of its domino.
    """
    out: dict[Partition, HookType] = {}
    k = len(lam)
    for i in range(k):
        below = lam[i + 1] if i + 1 < k else 0
        # horizontal: last two cells of row i
        if lam[i] - 2 >= below:
            rows = list(lam)
            rows[i] -= 2
            out[Partition(r for r in rows if r)] = HookType.HORIZONTAL
        # vertical: last cells of rows i, i+1 in the same column
        if i + 1 < k and lam[i] == lam[i + 1]:
            after = lam[i + 2] if i + 2 < k else 0
            if after < lam[i]:
                rows = list(lam)
                rows[i] -= 1
                rows[i + 1] -= 1
                out[Partition(r for r in rows if r)] = HookType.VERTICAL
    return out


def two_hook_additions(lam: Partition) -> dict[Partition, HookType]:
    """All diagrams obtained by attaching one domino to ``lam``."""
    out: dict[Partition, HookType] = {}
    rows = list(lam) + [0, 0]
    for i in range(len(lam) + 1):
        above = rows[i - 1] if i > 0 else None
        if above is None or rows[i] + 2 <= above:
            new = rows.copy()
            new[i] += 2
            out[Partition(r for r in new if r)] = HookType.HORIZONTAL
        if rows[i] == rows[i + 1] and (above is None or rows[i] + 1 <= above):
            new = rows.copy()
            new[i] += 1
            new[i + 1] += 1
            out[Partition(r for r in new if r)] = HookType.VERTICAL
    return out


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """Every partition of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in gen(n, n))
