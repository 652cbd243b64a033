"""Improvement-based Bee Colony Optimization (BCOi).

Each iteration starts a population of ``B`` bees and alternates ``NC``
backward passes (normalisation, loyalty, roulette recruitment) with forward
passes in which every bee randomly transforms its solution.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from threshmax.construct import random_feasible
from threshmax.graph_core import CreationSequence, ProblemInstance
from threshmax.moves import ANY, random_walk
from threshmax.objective import BudgetExhausted, Evaluator, RunResult
from threshmax.rng import RandomStream

N_ELITES = 2


@dataclass(frozen=True)
class BcoConfig:
    bees: int = 5
    passes: int = 10
    transforms: tuple[int, int] = (1, 1)
    budget: int = 1000
    seed: int = 0
    elitist_restart: bool = False

    def __post_init__(self) -> None:
        lo, hi = self.transforms
        if self.bees < 2 and self.elitist_restart:
            raise ValueError("elitist restart needs at least 2 bees")
        if self.bees < 1 or self.passes < 1:
            raise ValueError("need bees >= 1 and passes >= 1")
        if lo < 1 or hi < lo:
            raise ValueError(f"bad transform range {self.transforms}")
        if self.budget < 1:
            raise ValueError("budget must be >= 1")

    @staticmethod
    def transform_range(n: int) -> tuple[int, int]:
        lo = max(1, n // 3)
        return lo, max(lo, 2 * n // 3)

    @classmethod
    def baseline(cls, n: int, seed: int, budget: int = 1000) -> BcoConfig:
        return cls(transforms=cls.transform_range(n), budget=budget, seed=seed)

    @classmethod
    def tuned(cls, n: int, seed: int, budget: int = 2000) -> BcoConfig:
        return cls(transforms=cls.transform_range(n), budget=budget, seed=seed, elitist_restart=True)


@dataclass(frozen=True)
class BeeState:
    solution: CreationSequence
    value: float
    normalized: float = 1.0
    loyal: bool = True


def normalize(values: list[float]) -> list[float]:
    lo, hi = min(values), max(values)
    if hi - lo <= 0.0:
        return [1.0] * len(values)
    return [(v - lo) / (hi - lo) for v in values]


def loyalty_decision(normalized: float, rng: RandomStream) -> bool:
    return rng.random() < normalized


def roulette(weights: list[float], rng: RandomStream) -> int:
    total = sum(weights)
    if total <= 0.0:
        return rng.randbelow(len(weights))
    u = rng.random() * total
    acc = 0.0
    for idx, w in enumerate(weights):
        acc += w
        if u < acc:
            return idx
    # u can equal the float sum after rounding
    return max(idx for idx, w in enumerate(weights) if w > 0)


def recruit(recruiters: list[BeeState], uncommitted: list[BeeState], rng: RandomStream) -> list[BeeState]:
    """Each uncommitted bee copies a recruiter chosen with probability O_r / sum(O)."""
    if not recruiters:
        return list(uncommitted)
    weights = [b.normalized for b in recruiters]
    adopted = []
    for _ in uncommitted:
        src = recruiters[roulette(weights, rng)]
        adopted.append(replace(src, loyal=False))
    return adopted


def backward_pass(bees: list[BeeState], rng: RandomStream) -> list[BeeState]:
    norm = normalize([b.value for b in bees])
    bees = [
        replace(b, normalized=o, loyal=loyalty_decision(o, rng)) for b, o in zip(bees, norm)
    ]
    recruiters = [b for b in bees if b.loyal]
    followers = recruit(recruiters, [b for b in bees if not b.loyal], rng)
    it = iter(followers)
    return [b if b.loyal else next(it) for b in bees]


def forward_pass(
    bee: BeeState, inst: ProblemInstance, cfg: BcoConfig, rng: RandomStream, evaluate: Evaluator
) -> BeeState:
    steps = rng.randint(*cfg.transforms)
    sol = random_walk(bee.solution, steps, rng, ANY)
    return BeeState(sol, evaluate(sol))


class _Elites:
    """The best distinct solutions seen so far."""

    def __init__(self, size: int) -> None:
        self.size = size
        self.items: list[tuple[float, CreationSequence]] = []

    def offer(self, seq: CreationSequence, value: float) -> None:
        if any(s == seq for _, s in self.items):
            return
        self.items.append((value, seq))
        # stable sort keeps the earlier find first among equal values
        self.items.sort(key=lambda t: -t[0])
        del self.items[self.size :]


def bco_run(inst: ProblemInstance, cfg: BcoConfig, evaluate: Evaluator | None = None) -> RunResult:
    rng = RandomStream(cfg.seed)
    evaluate = evaluate or Evaluator(inst, cfg.budget)
    elites = _Elites(N_ELITES)

    def initial(seq: CreationSequence) -> BeeState:
        value = evaluate(seq)
        elites.offer(seq, value)
        return BeeState(seq, value)

    try:
        first = True
        while True:
            if cfg.elitist_restart and not first:
                starts = [s for _, s in elites.items]
                starts += [random_feasible(inst, rng) for _ in range(cfg.bees - len(starts))]
            else:
                starts = [random_feasible(inst, rng) for _ in range(cfg.bees)]
            first = False
            bees = [initial(s) for s in starts]
            for _ in range(cfg.passes):
                bees = backward_pass(bees, rng)
                moved = []
                for b in bees:
                    nb = forward_pass(b, inst, cfg, rng, evaluate)
                    elites.offer(nb.solution, nb.value)
                    moved.append(nb)
                bees = moved
    except BudgetExhausted:
        pass
    return evaluate.result()
