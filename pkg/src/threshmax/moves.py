"""Edge-count preserving transformations of creation sequences.

Two neighbourhoods:

* N1 -- ``ShiftPair``: one 1 moves a step left (losing an edge) while another
  moves a step right (gaining one).
* N2 -- ``Split`` / ``Merge``: a 1 at ``i`` is traded for 1s at ``j`` and
  ``k`` with ``(j-1) + (k-1) = i-1``, or the reverse.

Only positions 2..n-1 are ever rewritten.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from threshmax.graph_core import CreationSequence
from threshmax.rng import RandomStream

N1 = "N1"
N2 = "N2"
ANY = "ANY"


class MoveError(ValueError):
    """The move's preconditions do not hold for the given sequence."""


@dataclass(frozen=True, order=True)
class ShiftPair:
    """``01 -> 10`` at (a, a+1) together with ``10 -> 01`` at (b, b+1)."""

    a: int
    b: int


@dataclass(frozen=True, order=True)
class Split:
    i: int
    j: int
    k: int


@dataclass(frozen=True, order=True)
class Merge:
    j: int
    k: int
    i: int


Move = Union[ShiftPair, Split, Merge]


def _check(cond: bool, seq: CreationSequence, mv: Move) -> None:
    if not cond:
        raise MoveError(f"{mv} is not applicable to {seq}")


def _in_range(n: int, *positions: int) -> bool:
    return all(2 <= p <= n - 1 for p in positions)


def apply(seq: CreationSequence, mv: Move) -> CreationSequence:
    r = list(seq.bits)
    n = len(r)

    def bit(p: int) -> int:
        return r[p - 1]

    if isinstance(mv, ShiftPair):
        a, b = mv.a, mv.b
        _check(_in_range(n, a, a + 1, b, b + 1) and abs(a - b) >= 2, seq, mv)
        _check(bit(a) == 0 and bit(a + 1) == 1 and bit(b) == 1 and bit(b + 1) == 0, seq, mv)
        r[a - 1], r[a] = 1, 0
        r[b - 1], r[b] = 0, 1
    elif isinstance(mv, (Split, Merge)):
        i, j, k = mv.i, mv.j, mv.k
        _check(_in_range(n, i, j, k) and j != k and (j - 1) + (k - 1) == i - 1, seq, mv)
        if isinstance(mv, Split):
            _check(bit(i) == 1 and bit(j) == 0 and bit(k) == 0, seq, mv)
            r[i - 1], r[j - 1], r[k - 1] = 0, 1, 1
        else:
            _check(bit(i) == 0 and bit(j) == 1 and bit(k) == 1, seq, mv)
            r[i - 1], r[j - 1], r[k - 1] = 1, 0, 0
    else:
        raise TypeError(f"unknown move {mv!r}")
    return CreationSequence(tuple(r))


@lru_cache(maxsize=None)
def _pair_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All (a, b) with both shifted cells inside 2..n-1 and no overlap, sorted."""
    pos = np.arange(2, n - 1)
    a, b = np.meshgrid(pos, pos, indexing="ij")
    keep = np.abs(a - b) >= 2
    return a[keep], b[keep]


@lru_cache(maxsize=None)
def _triple_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(i, j, k) rows with j < k, i = j + k - 1 <= n - 1; split order and merge order."""
    rows = [(i, j, i + 1 - j) for i in range(3, n) for j in range(2, (i + 1) // 2 + 1) if j < i + 1 - j]
    split_order = np.array(rows, dtype=np.intp).reshape(-1, 3)
    merge_order = split_order[np.lexsort((split_order[:, 2], split_order[:, 1]))]
    return split_order, merge_order


def _masks(seq: CreationSequence) -> tuple[np.ndarray, ...]:
    n = seq.n
    # pad so that 1-based positions index directly
    r = np.zeros(n + 2, dtype=bool)
    r[1 : n + 1] = seq.bits
    a, b = _pair_table(n)
    shift = ~r[a] & r[a + 1] & r[b] & ~r[b + 1]
    split_rows, merge_rows = _triple_tables(n)
    si, sj, sk = split_rows.T
    split = r[si] & ~r[sj] & ~r[sk]
    mi, mj, mk = merge_rows.T
    merge = ~r[mi] & r[mj] & r[mk]
    return shift, split, merge


def _decode(n: int, group: int, idx: int) -> Move:
    if group == 0:
        a, b = _pair_table(n)
        return ShiftPair(int(a[idx]), int(b[idx]))
    split_rows, merge_rows = _triple_tables(n)
    if group == 1:
        i, j, k = split_rows[idx]
        return Split(int(i), int(j), int(k))
    i, j, k = merge_rows[idx]
    return Merge(int(j), int(k), int(i))


_GROUPS = {N1: (0,), N2: (1, 2), ANY: (0, 1, 2)}


def enumerate_neighborhood(seq: CreationSequence, which: str) -> list[Move]:
    """All applicable moves of N1, N2 or both, in lexicographic position order.

    N2 lists every Split before every Merge; ANY lists N1 before N2.
    """
    if which not in _GROUPS:
        raise ValueError(f"unknown neighbourhood {which!r}")
    masks = _masks(seq)
    return [
        _decode(seq.n, g, int(idx)) for g in _GROUPS[which] for idx in np.flatnonzero(masks[g])
    ]


def random_move(seq: CreationSequence, which: str, rng: RandomStream) -> Move | None:
    """Uniform draw from ``enumerate_neighborhood(seq, which)``, or None if it is empty."""
    if which not in _GROUPS:
        raise ValueError(f"unknown neighbourhood {which!r}")
    masks = _masks(seq)
    hits = [np.flatnonzero(masks[g]) for g in _GROUPS[which]]
    total = sum(len(h) for h in hits)
    if total == 0:
        return None
    pick = rng.randbelow(total)
    for g, h in zip(_GROUPS[which], hits):
        if pick < len(h):
            return _decode(seq.n, g, int(h[pick]))
        pick -= len(h)
    raise AssertionError("unreachable")


def random_walk(seq: CreationSequence, steps: int, rng: RandomStream, which: str = ANY) -> CreationSequence:
    """Apply up to ``steps`` uniformly random moves; stops early when none apply."""
    for _ in range(steps):
        mv = random_move(seq, which, rng)
        if mv is None:
            break
        seq = apply(seq, mv)
    return seq
