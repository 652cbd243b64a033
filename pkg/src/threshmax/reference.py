"""Ground truth for small instances and the extremal families known in the literature."""

from __future__ import annotations

import csv
import io
import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from math import comb

from threshmax.graph_core import (
    CapacityError,
    Composition,
    CreationSequence,
    ProblemInstance,
    composition_to_sequence,
    edge_count,
)
from threshmax.objective import TIE_TOL
from threshmax.spectral import spectral_radius

MAX_ORACLE_N = 26


@dataclass(frozen=True)
class OracleResult:
    optimum_value: float
    argmax_sequences: tuple[CreationSequence, ...]
    feasible_count: int


def enumerate_feasible(inst: ProblemInstance) -> Iterator[CreationSequence]:
    """Every sequence with edge count m, in lexicographic order."""
    if inst.n > MAX_ORACLE_N:
        raise CapacityError(f"exhaustive enumeration is capped at n={MAX_ORACLE_N}, got n={inst.n}")
    weights = range(1, inst.n - 1)
    # r_n always contributes n-1
    target = inst.m - (inst.n - 1)
    for interior in itertools.product((0, 1), repeat=inst.n - 2):
        if sum(w for w, b in zip(weights, interior) if b) == target:
            yield CreationSequence((1, *interior, 1))


def oracle_optimum(inst: ProblemInstance) -> OracleResult:
    scored = [(spectral_radius(s).lambda_1, s) for s in enumerate_feasible(inst)]
    best = max(v for v, _ in scored)
    argmax = tuple(s for v, s in scored if v >= best - TIE_TOL)
    return OracleResult(optimum_value=best, argmax_sequences=argmax, feasible_count=len(scored))


@dataclass(frozen=True)
class KnownExtremal:
    """A literature prediction for (n, m).

    ``caveat`` marks results stated only for sufficiently large n (or with an
    unclear quantifier), which small-n checks may legitimately contradict.
    """

    family: int
    candidates: tuple[Composition, ...]
    caveat: bool
    note: str = ""


def _comp(*parts: int) -> Composition | None:
    if any(p < 1 for p in parts):
        return None
    return Composition(parts)


def known_extremal(inst: ProblemInstance) -> list[KnownExtremal]:
    """Predictions of the five known families that apply to ``inst`` (possibly none)."""
    n, m = inst.n, inst.m
    found: list[KnownExtremal] = []

    def add(family: int, comps: Iterable[Composition | None], caveat: bool, note: str = "") -> None:
        comps = tuple(c for c in comps if c is not None and c.n == n)
        if comps:
            found.append(KnownExtremal(family, comps, caveat, note))

    if m == n - 1:
        add(1, [_comp(n - 1, 1)], caveat=False, note="star")
    d = m - n
    if d in (0, 2):
        add(2, [_comp(2 + d // 2, n - 3 - d // 2, 1)], caveat=False, note=f"d={d}")
    if d == 1 or d >= 6:
        add(3, [_comp(d + 1, 1, n - 3 - d, 1)], caveat=True, note=f"d={d}, large n")
    for d4 in range(5, n + 1):
        c = comb(d4 - 1, 2)
        if m == n + c - 1:
            add(4, [_comp(d4 - 1, n - d4, 1), _comp(c, 1, n - 2 - c, 1)], caveat=True, note=f"d={d4}")
    # edge-consistent form: (2, d-2, n-1-d, 1) has n + C(d,2) - 2 edges
    for d5 in range(3, n + 1):
        if m == n + comb(d5, 2) - 2:
            side = 2 * n <= m < comb(n, 2) - 1
            add(
                5,
                [_comp(2, d5 - 2, n - 1 - d5, 1)],
                caveat=not side,
                note=f"d={d5}" + ("" if side else ", outside 2n <= m < C(n,2)-1"),
            )
    for k in found:
        for c in k.candidates:
            assert edge_count(composition_to_sequence(c)) == m, (inst, k)
    return found


@dataclass(frozen=True)
class FamilyCheck:
    n: int
    m: int
    family: int
    predicted: tuple[Composition, ...]
    predicted_value: float
    oracle_value: float
    match: bool
    caveat: bool
    note: str


def verify_known_families(n_values: Iterable[int]) -> list[FamilyCheck]:
    """Compare every applicable prediction against the oracle; mismatches are reported, not raised."""
    rows = []
    for n in n_values:
        for m in range(n - 1, comb(n, 2) + 1):
            inst = ProblemInstance(n, m)
            predictions = known_extremal(inst)
            if not predictions:
                continue
            oracle = oracle_optimum(inst)
            for k in predictions:
                seqs = [composition_to_sequence(c) for c in k.candidates]
                values = [spectral_radius(s).lambda_1 for s in seqs]
                rows.append(
                    FamilyCheck(
                        n=n,
                        m=m,
                        family=k.family,
                        predicted=k.candidates,
                        predicted_value=max(values),
                        oracle_value=oracle.optimum_value,
                        match=any(s in oracle.argmax_sequences for s in seqs),
                        caveat=k.caveat,
                        note=k.note,
                    )
                )
    return rows


def family_report_csv(rows: list[FamilyCheck]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "m", "family", "predicted", "predicted_value", "oracle_value", "match", "caveat", "note"])
    for r in rows:
        w.writerow([
            r.n,
            r.m,
            r.family,
            " | ".join(str(c) for c in r.predicted),
            f"{r.predicted_value:.6f}",
            f"{r.oracle_value:.6f}",
            int(r.match),
            int(r.caveat),
            r.note,
        ])
    return buf.getvalue()
