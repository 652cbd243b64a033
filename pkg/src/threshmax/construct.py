"""Initial feasible sequences for an instance (n, m)."""

from __future__ import annotations

from threshmax.graph_core import CreationSequence, ProblemInstance
from threshmax.moves import ANY, random_walk
from threshmax.rng import RandomStream


def _greedy_pass(r: list[int], e: int, start: int, step: int) -> int:
    """Set r[i] for i = start, start-step, ... > 1 while i-1 fits in ``e``; returns what is left."""
    i = start
    while i > 1 and e > 0:
        if r[i] == 0 and i - 1 <= e:
            r[i] = 1
            e -= i - 1
        i -= step
    return e


def _pack(r: list[int]) -> CreationSequence:
    return CreationSequence(tuple(r[1:]))


def init_sol(inst: ProblemInstance) -> CreationSequence:
    """Tail-greedy start: the largest contributions are taken first."""
    n = inst.n
    r = [0] * (n + 1)  # 1-based, r[0] unused
    r[1] = r[n] = 1
    e = _greedy_pass(r, inst.m - (n - 1), n - 1, 1)
    assert e == 0
    return _pack(r)


def init2_sol(inst: ProblemInstance) -> CreationSequence:
    """Alternating start: a stride-2 greedy pass from position n-1, then a stride-1 pass.

    Any edge left over after both passes is absorbed by shifting the leftmost
    ``1 0`` pair one step right (+1 edge) until the count is exact. Shifting
    the conventional 1 at position 1 just sets position 2.
    """
    n = inst.n
    r = [0] * (n + 1)
    r[1] = r[n] = 1
    e = inst.m - (n - 1)
    e = _greedy_pass(r, e, n - 1, 2)
    e = _greedy_pass(r, e, n - 1, 1)
    while e > 0:
        i = next((p for p in range(1, n - 1) if r[p] == 1 and r[p + 1] == 0), None)
        if i is None:
            raise RuntimeError(f"init2_sol could not absorb {e} edges for {inst}")
        if i > 1:
            r[i] = 0
        r[i + 1] = 1
        e -= 1
    return _pack(r)


def random_feasible(inst: ProblemInstance, rng: RandomStream) -> CreationSequence:
    """init2_sol followed by a random walk of n..3n moves."""
    steps = rng.randint(inst.n, 3 * inst.n)
    return random_walk(init2_sol(inst), steps, rng, ANY)
