"""Verification of computed sequences against bundled OEIS snapshots.

Snapshots follow the b-file convention (one "index value" pair per line,
'#' comments) and are vendored under data/; nothing is fetched at runtime.
The registry records, per sequence, how a poset order n maps to a snapshot
index, since offset conventions differ between the tables and the OEIS.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Callable

from . import chromatic, incidence, parking, paths, poset, tableaux


class UnknownSequenceError(Exception):
    pass


class SnapshotParseError(Exception):
    pass


def parse_snapshot(text: str) -> list[tuple[int, int]]:
    terms: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise SnapshotParseError(f"line {lineno}: expected 'index value'")
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise SnapshotParseError(f"line {lineno}: {exc}") from exc
        if terms and index <= terms[-1][0]:
            raise SnapshotParseError(
                f"line {lineno}: indices must strictly increase")
        terms.append((index, value))
    return terms


def load_snapshot(sequence_id: str) -> list[tuple[int, int]]:
    try:
        text = (resources.files("dyckposet") / "data"
                / f"{sequence_id}.txt").read_text()
    except FileNotFoundError as exc:
        raise UnknownSequenceError(sequence_id) from exc
    return parse_snapshot(text)


def _chromatic_row(n: int) -> list[int]:
    poly = chromatic.hasse_chromatic(poset.build_poset(n))
    return [abs(poly.coeffs.get(e, 0))
            for e in range(poly.degree, 0, -1)]


@dataclass(frozen=True)
class SequenceEntry:
    description: str
    kind: str                      # "values" or "triangle"
    index_of: Callable[[int], int]  # order n -> snapshot index ("values")
    compute: Callable[[int], int] | Callable[[int], list[int]]
    max_order: int


REGISTRY: dict[str, SequenceEntry] = {
    "A000108": SequenceEntry(
        "Catalan numbers", "values", lambda n: n,
        paths.catalan_closed, 15),
    "A005700": SequenceEntry(
        "interval counts of D_n", "values", lambda n: n,
        lambda n: incidence.interval_count(poset.build_poset(n)), 5),
    "A143672": SequenceEntry(
        "total chain counts of D_n", "values", lambda n: n,
        lambda n: incidence.total_chains(poset.build_poset(n)), 5),
    "A005118": SequenceEntry(
        "maximal chain counts of D_n", "values", lambda n: n,
        lambda n: (incidence.maximal_chain_count(poset.build_poset(n))
                   if n <= 5 else tableaux.staircase_maxchain(n)), 6),
    "A143673": SequenceEntry(
        "antichain counts of D_n", "values", lambda n: n,
        lambda n: poset.antichain_census(poset.build_poset(n)).total, 5),
    "A143674": SequenceEntry(
        "maximal antichain counts of D_n", "values", lambda n: n,
        lambda n: poset.antichain_census(poset.build_poset(n),
                                         "maximal").total, 5),
    "A000272": SequenceEntry(
        "parking function counts, shifted by one", "values", lambda n: n + 1,
        parking.count_parking_functions, 7),
    "A129176": SequenceEntry(
        "rank sizes of D_n by decreasing rank", "triangle", lambda n: n,
        lambda n: list(poset.rank_sizes(n)), 7),
    "A141622": SequenceEntry(
        "chromatic coefficients of Hasse(D_n), |values| by descending degree",
        "triangle", lambda n: n, _chromatic_row, 4),
}


@dataclass(frozen=True)
class VerificationLine:
    index: int
    expected: int
    computed: int

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


@dataclass(frozen=True)
class VerificationReport:
    sequence_id: str
    lines: tuple[VerificationLine, ...]

    @property
    def passed(self) -> bool:
        return all(line.ok for line in self.lines)


def verify_sequence(sequence_id: str, max_n: int) -> VerificationReport:
    if sequence_id not in REGISTRY:
        raise UnknownSequenceError(sequence_id)
    entry = REGISTRY[sequence_id]
    if max_n > entry.max_order:
        raise ValueError(
            f"{sequence_id} is only computable up to n = {entry.max_order}")
    snapshot = dict(load_snapshot(sequence_id))
    lines: list[VerificationLine] = []
    if entry.kind == "values":
        for n in range(max_n + 1):
            index = entry.index_of(n)
            if index not in snapshot:
                raise SnapshotParseError(
                    f"{sequence_id} snapshot lacks index {index}")
            lines.append(VerificationLine(
                index=index, expected=snapshot[index],
                computed=entry.compute(n)))
    else:
        flattened: list[int] = []
        for n in range(max_n + 1):
            flattened.extend(entry.compute(n))
        for index, computed in enumerate(flattened):
            if index not in snapshot:
                raise SnapshotParseError(
                    f"{sequence_id} snapshot lacks index {index}")
            lines.append(VerificationLine(
                index=index, expected=snapshot[index], computed=computed))
    return VerificationReport(sequence_id=sequence_id, lines=tuple(lines))
