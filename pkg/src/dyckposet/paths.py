"""Dyck paths, their statistics, and Catalan counting by several routes.

A path of order n is stored as its step word: a string of n 'N' and n 'E'
marks whose every prefix has at least as many norths as easts.  The canonical
ordering used throughout the package (and for all matrix indexing) is
ascending area with lexicographic tie-break taking N < E.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .config import Limits, check_order

NORTH = "N"
EAST = "E"

# lexicographic tie-break with N sorting before E
_LEX = str.maketrans({NORTH: "0", EAST: "1"})


@dataclass(frozen=True, order=False)
class DyckPath:
    steps: str

    def __post_init__(self) -> None:
        word = self.steps
        if len(word) % 2 != 0:
            raise ValueError("step word must have even length")
        height = 0
        norths = 0
        for mark in word:
            if mark == NORTH:
                height += 1
                norths += 1
            elif mark == EAST:
                height -= 1
            else:
                raise ValueError(f"invalid step mark {mark!r}")
            if height < 0:
                raise ValueError("path drops below the diagonal")
        if 2 * norths != len(word):
            raise ValueError("unbalanced step word")

    @property
    def order(self) -> int:
        return len(self.steps) // 2

    def column_heights(self) -> tuple[int, ...]:
        """Height of the path at each east step: h[j] = #N before the j-th E."""
        heights = []
        norths = 0
        for mark in self.steps:
            if mark == NORTH:
                norths += 1
            else:
                heights.append(norths)
        return tuple(heights)

    def north_offsets(self) -> tuple[int, ...]:
        """x-coordinate of each north step: e[i] = #E before the i-th N."""
        offsets = []
        easts = 0
        for mark in self.steps:
            if mark == EAST:
                easts += 1
            else:
                offsets.append(easts)
        return tuple(offsets)

    @property
    def area(self) -> int:
        return sum(h - j for j, h in enumerate(self.column_heights(), start=1))

    def sort_key(self) -> tuple[int, str]:
        return (self.area, self.steps.translate(_LEX))

    def __repr__(self) -> str:
        return f"DyckPath({self.steps!r})"

    @staticmethod
    def from_north_offsets(offsets: tuple[int, ...] | list[int]) -> "DyckPath":
        """Rebuild the step word from the x-coordinates of the north steps."""
        n = len(offsets)
        word = []
        easts = 0
        for e in offsets:
            if e < easts:
                raise ValueError("north offsets must be weakly increasing")
            word.append(EAST * (e - easts))
            word.append(NORTH)
            easts = e
        word.append(EAST * (n - easts))
        return DyckPath("".join(word))

    @staticmethod
    def staircase(n: int) -> "DyckPath":
        return DyckPath((NORTH + EAST) * n)

    @staticmethod
    def full(n: int) -> "DyckPath":
        return DyckPath(NORTH * n + EAST * n)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive parts (English convention)."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        for a, b in zip(self.parts, self.parts[1:]):
            if a < b:
                raise ValueError("parts must be weakly decreasing")
        if self.parts and self.parts[-1] < 1:
            raise ValueError("parts must be positive")

    @property
    def area(self) -> int:
        return sum(self.parts)

    def cells(self) -> list[tuple[int, int]]:
        """All (row, column) cells, 1-based."""
        return [(r, c) for r, size in enumerate(self.parts, start=1)
                for c in range(1, size + 1)]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        cols = [sum(1 for p in self.parts if p >= c)
                for c in range(1, self.parts[0] + 1)]
        return Partition(tuple(cols))

    @staticmethod
    def staircase(n: int) -> "Partition":
        return Partition(tuple(range(n - 1, 0, -1)))


@dataclass(frozen=True)
class CellStats:
    arm: int
    leg: int
    coarm: int
    coleg: int

    @property
    def hook(self) -> int:
        return self.arm + self.leg + 1


@dataclass(frozen=True)
class PathStats:
    area: int
    inv: int
    maj: int
    bounce: int
    area_vector: tuple[int, ...]


def catalan_closed(n: int) -> int:
    """C_n = C(2n, n) / (n + 1), exactly."""
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def catalan_recurrence(n: int) -> int:
    """E_0 = 1, E_n = sum_{k=1..n} E_{k-1} E_{n-k}."""
    if n == 0:
        return 1
    return sum(catalan_recurrence(k - 1) * catalan_recurrence(n - k)
               for k in range(1, n + 1))


def count_bad_paths(n: int) -> int:
    """Monotone (n,n)-paths that dip below the diagonal, via the reflection
    into an (n+1) x (n-1) grid."""
    if n < 1:
        raise ValueError("n must be positive")
    return comb(2 * n, n - 1)


def enumerate_paths(n: int, limits: Limits | None = None) -> list[DyckPath]:
    """All Dyck paths of order n in canonical order."""
    check_order(n, limits)
    words: list[str] = []

    def extend(prefix: list[str], norths: int, easts: int) -> None:
        if norths == n and easts == n:
            words.append("".join(prefix))
            return
        if norths < n:
            prefix.append(NORTH)
            extend(prefix, norths + 1, easts)
            prefix.pop()
        if easts < norths:
            prefix.append(EAST)
            extend(prefix, norths, easts + 1)
            prefix.pop()

    extend([], 0, 0)
    paths = [DyckPath(w) for w in words]
    paths.sort(key=DyckPath.sort_key)
    return paths


def is_below(d1: DyckPath, d2: DyckPath) -> bool:
    """True iff d1 lies weakly below d2 (heights compared column by column)."""
    if d1.order != d2.order:
        raise ValueError("paths must have the same order")
    return all(h1 <= h2 for h1, h2 in
               zip(d1.column_heights(), d2.column_heights()))


def _bounce(d: DyckPath) -> int:
    # Bounce path anchored at (n, n): west to the current top north segment,
    # south to the diagonal, repeat.  Contact points satisfy k' = e(k), the
    # x-offset of the k-th north step.
    offsets = d.north_offsets()
    k = d.order
    total = 0
    while k > 0:
        k = offsets[k - 1]
        total += k
    return total


def path_stats(d: DyckPath) -> PathStats:
    n = d.order
    area = d.area
    inv = comb(n, 2) - area
    maj = sum(i for i in range(1, 2 * n)
              if d.steps[i - 1] == EAST and d.steps[i] == NORTH)
    offsets = d.north_offsets()
    area_vector = tuple(i - e for i, e in enumerate(offsets))
    return PathStats(area=area, inv=inv, maj=maj, bounce=_bounce(d),
                     area_vector=area_vector)


def path_to_partition(d: DyckPath) -> Partition:
    """The Young diagram filling the grid cells above the path."""
    n = d.order
    col_counts = [n - h for h in d.column_heights()]  # weakly decreasing
    rows = []
    for r in range(1, n):
        size = sum(1 for c in col_counts if c >= r)
        if size == 0:
            break
        rows.append(size)
    return Partition(tuple(rows))


def partition_to_path(partition: Partition, n: int) -> DyckPath:
    """Inverse of path_to_partition for diagrams fitting above an order-n path."""
    parts = partition.parts
    if len(parts) > max(n - 1, 0):
        raise ValueError("partition has too many rows for this order")
    for i, p in enumerate(parts, start=1):
        if p > n - i:
            raise ValueError(f"row {i} of size {p} exceeds the n - i bound")
    col_counts = [sum(1 for p in parts if p >= c) for c in range(1, n + 1)]
    heights = [n - c for c in col_counts]
    word = []
    prev = 0
    for h in heights:
        word.append(NORTH * (h - prev))
        word.append(EAST)
        prev = h
    return DyckPath("".join(word))


def cell_stats(partition: Partition) -> dict[tuple[int, int], CellStats]:
    """Arm/leg/coarm/coleg for every cell, keyed by (row, column), 1-based."""
    parts = partition.parts
    stats = {}
    for r, size in enumerate(parts, start=1):
        for c in range(1, size + 1):
            arm = size - c
            leg = sum(1 for p in parts[r:] if p >= c)
            stats[(r, c)] = CellStats(arm=arm, leg=leg, coarm=c - 1, coleg=r - 1)
    return stats
