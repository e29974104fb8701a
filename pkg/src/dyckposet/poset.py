"""The poset D_n of Dyck paths ordered by inclusion.

Relations are stored as per-element bitmasks over the canonical element
order, which is a linear extension (area is the rank function), so zeta-type
matrices built from it are automatically upper triangular.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .config import Limits, LimitExceededError, check_order
from .paths import DyckPath, enumerate_paths, is_below


@dataclass(frozen=True)
class DyckPoset:
    n: int
    elements: tuple[DyckPath, ...]
    up: tuple[int, ...]      # up[i] = bitmask of j with i <= j
    down: tuple[int, ...]    # down[i] = bitmask of j with j <= i
    cover_up: tuple[int, ...]  # bitmask of j covering i
    rank: tuple[int, ...]
    index: dict[DyckPath, int] = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def covers(self, i: int, j: int) -> bool:
        """True iff element j covers element i."""
        return bool(self.cover_up[i] >> j & 1)

    def cover_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.size)
                for j in _bits(self.cover_up[i])]

    def incomparable(self, i: int) -> int:
        full = (1 << self.size) - 1
        return full & ~(self.up[i] | self.down[i])


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_poset(n: int, limits: Limits | None = None) -> DyckPoset:
    check_order(n, limits)
    elements = tuple(enumerate_paths(n, limits))
    size = len(elements)
    heights = [e.column_heights() for e in elements]
    up = [0] * size
    down = [0] * size
    for i in range(size):
        for j in range(size):
            if all(a <= b for a, b in zip(heights[i], heights[j])):
                up[i] |= 1 << j
                down[j] |= 1 << i
    cover_up = [0] * size
    for i in range(size):
        strict = up[i] & ~(1 << i)
        for j in _bits(strict):
            between = strict & down[j] & ~(1 << j)
            if between == 0:
                cover_up[i] |= 1 << j
    rank = tuple(e.area for e in elements)
    return DyckPoset(n=n, elements=elements, up=tuple(up), down=tuple(down),
                     cover_up=tuple(cover_up), rank=rank,
                     index={e: i for i, e in enumerate(elements)})


# ---------------------------------------------------------------------------
# order ideals and antichains


def _downset_masks(size: int, down: tuple[int, ...],
                   budget: int) -> list[int]:
    # elements must be listed in a linear extension; both D_n and P_n are.
    ideals = [0]
    for k in range(size):
        required = down[k] & ~(1 << k)
        grown = [mask | (1 << k) for mask in ideals if required & ~mask == 0]
        ideals.extend(grown)
        if len(ideals) > budget:
            raise LimitExceededError("order-ideal count exceeds budget")
    return ideals


def order_ideals(p: DyckPoset, limits: Limits | None = None) -> list[frozenset[int]]:
    """All downward-closed element subsets, as index sets."""
    budget = (limits or Limits()).ideal_budget
    masks = _downset_masks(p.size, p.down, budget)
    return [frozenset(_bits(mask)) for mask in masks]


@dataclass(frozen=True)
class AntichainCensus:
    by_size: dict[int, int]
    total: int
    width: int | None = None


def _antichain_masks(p: DyckPoset) -> list[int]:
    results = [0]

    def grow(mask: int, candidates: int, start: int) -> None:
        cand = candidates & ~((1 << (start + 1)) - 1)
        for i in _bits(cand):
            new_mask = mask | (1 << i)
            results.append(new_mask)
            grow(new_mask, candidates & p.incomparable(i), i)

    grow(0, (1 << p.size) - 1, -1)
    return results


def antichain_census(p: DyckPoset, mode: str = "all") -> AntichainCensus:
    """Census of antichains: every one, the inclusion-maximal ones, or only
    those of maximum size (the width)."""
    masks = _antichain_masks(p)
    if mode == "all":
        by_size: dict[int, int] = {}
        for mask in masks:
            k = mask.bit_count()
            by_size[k] = by_size.get(k, 0) + 1
        return AntichainCensus(by_size=by_size, total=len(masks))
    if mode == "maximal":
        by_size = {}
        for mask in masks:
            extension = (1 << p.size) - 1
            for i in _bits(mask):
                extension &= p.incomparable(i)
            if mask == 0:
                extension = (1 << p.size) - 1 if p.size else 0
            if extension & ~mask == 0:
                k = mask.bit_count()
                by_size[k] = by_size.get(k, 0) + 1
        return AntichainCensus(by_size=by_size, total=sum(by_size.values()))
    if mode == "maximum":
        width = max(mask.bit_count() for mask in masks)
        count = sum(1 for mask in masks if mask.bit_count() == width)
        return AntichainCensus(by_size={width: count}, total=count, width=width)
    raise ValueError(f"unknown census mode {mode!r}")


def antichain_ideal_bijection_check(p: DyckPoset,
                                    limits: Limits | None = None) -> bool:
    """Downward closure maps antichains bijectively onto order ideals."""
    ideals = {frozenset(s) for s in order_ideals(p, limits)}
    closures = set()
    for mask in _antichain_masks(p):
        closure = 0
        for i in _bits(mask):
            closure |= p.down[i]
        closures.add(frozenset(_bits(closure)))
    return closures == ideals and len(closures) == len(_antichain_masks(p))


# ---------------------------------------------------------------------------
# the point poset P_n and the J(P_n) isomorphism


@dataclass(frozen=True)
class PointPoset:
    """Points (a, b) with a + b <= n - 2, ordered by (a,b) <= (c,d) iff
    a >= c and b >= d.  Its order ideals are in bijection with D_n."""

    n: int
    points: tuple[tuple[int, int], ...]

    @staticmethod
    def build(n: int) -> "PointPoset":
        pts = sorted((a, b) for a in range(max(n - 1, 0))
                     for b in range(max(n - 1, 0)) if a + b <= n - 2)
        # order by decreasing a + b so the listing is a linear extension
        pts.sort(key=lambda p: (-(p[0] + p[1]), p))
        return PointPoset(n=n, points=tuple(pts))

    def leq(self, p: tuple[int, int], q: tuple[int, int]) -> bool:
        return p[0] >= q[0] and p[1] >= q[1]

    def down_masks(self) -> tuple[int, ...]:
        size = len(self.points)
        down = [0] * size
        for i, p in enumerate(self.points):
            for j, q in enumerate(self.points):
                if self.leq(q, p):
                    down[i] |= 1 << j
        return tuple(down)

    def ideals(self, budget: int = 10 ** 6) -> list[frozenset[tuple[int, int]]]:
        masks = _downset_masks(len(self.points), self.down_masks(), budget)
        return [frozenset(self.points[i] for i in _bits(m)) for m in masks]


def point_poset(n: int) -> PointPoset:
    return PointPoset.build(n)


def path_ideal(d: DyckPath) -> frozenset[tuple[int, int]]:
    """The order ideal of P_n whose cells lie between the path and the
    staircase: the area cell in column j at height y maps to (j-1, n-y)."""
    n = d.order
    cells = set()
    for j, h in enumerate(d.column_heights(), start=1):
        for y in range(j + 1, h + 1):
            cells.add((j - 1, n - y))
    return frozenset(cells)


def ideal_path(ideal: frozenset[tuple[int, int]], n: int) -> DyckPath:
    """Inverse of path_ideal."""
    heights = []
    prev = 0
    for j in range(1, n + 1):
        h = j + sum(1 for (a, _b) in ideal if a == j - 1)
        heights.append(h)
    offsets = []
    # rebuild the step word from column heights
    word = []
    prev = 0
    for h in heights:
        word.append("N" * (h - prev))
        word.append("E")
        prev = h
    del offsets
    return DyckPath("".join(word))


def jp_isomorphism_check(n: int, limits: Limits | None = None) -> bool:
    """The ideal -> path map is an order isomorphism J(P_n) -> D_n."""
    p = build_poset(n, limits)
    ideals = point_poset(n).ideals()
    mapped = [ideal_path(ideal, n) for ideal in ideals]
    if sorted(mapped, key=DyckPath.sort_key) != list(p.elements):
        return False
    if len(set(mapped)) != len(mapped):
        return False
    for i, ideal_i in enumerate(ideals):
        for j, ideal_j in enumerate(ideals):
            subset = ideal_i <= ideal_j
            below = is_below(mapped[i], mapped[j])
            if subset != below:
                return False
    return True


def mobius_direct(p: DyckPoset, x: int, y: int) -> int:
    """Mobius value via Stanley's formula on J(P_n): (-1)^|difference| when
    the ideal difference is an antichain of P_n, else 0."""
    if not p.leq(x, y):
        return 0
    diff = path_ideal(p.elements[y]) - path_ideal(p.elements[x])
    pts = sorted(diff)
    pn = PointPoset.build(p.n)
    for i, a in enumerate(pts):
        for b in pts[i + 1:]:
            if pn.leq(a, b) or pn.leq(b, a):
                return 0
    return (-1) ** len(diff) if len(diff) % 2 else 1


# ---------------------------------------------------------------------------
# rank sizes, width, and the two cover dualities


def rank_sizes(n: int) -> tuple[int, ...]:
    """Element counts by decreasing rank, via the inversion-statistic
    recurrence C_{n+1}(q) = sum_k q^{(k+1)(n-k)} C_k(q) C_{n-k}(q)."""
    polys: list[list[int]] = [[1]]
    for m in range(n):
        new = [0] * (comb(m + 1, 2) + 1)
        for k in range(m + 1):
            shift = (k + 1) * (m - k)
            for i, a in enumerate(polys[k]):
                if a == 0:
                    continue
                for j, b in enumerate(polys[m - k]):
                    new[shift + i + j] += a * b
        polys.append(new)
    return tuple(polys[n])


def min_chain_cover(p: DyckPoset) -> int:
    """Minimum number of disjoint chains covering the poset, by maximum
    bipartite matching on the strict order (Dilworth)."""
    size = p.size
    match_right = [-1] * size

    def augment(i: int, seen: list[bool]) -> bool:
        strict = p.up[i] & ~(1 << i)
        for j in _bits(strict):
            if seen[j]:
                continue
            seen[j] = True
            if match_right[j] == -1 or augment(match_right[j], seen):
                match_right[j] = i
                return True
        return False

    matched = 0
    for i in range(size):
        if augment(i, [False] * size):
            matched += 1
    return size - matched


def min_antichain_cover(p: DyckPoset) -> int:
    """1 + length of the longest chain; the rank levels witness it."""
    longest = [1] * p.size
    for j in range(p.size):
        strict_below = p.down[j] & ~(1 << j)
        for i in _bits(strict_below):
            longest[j] = max(longest[j], longest[i] + 1)
    return max(longest, default=0)


def maximal_chains(p: DyckPoset) -> list[tuple[int, ...]]:
    """All maximal chains as index tuples, minimum to maximum."""
    minimum = 0
    chains: list[tuple[int, ...]] = []

    def walk(chain: list[int]) -> None:
        tip = chain[-1]
        succ = list(_bits(p.cover_up[tip]))
        if not succ:
            chains.append(tuple(chain))
            return
        for j in succ:
            chain.append(j)
            walk(chain)
            chain.pop()

    walk([minimum])
    return chains
