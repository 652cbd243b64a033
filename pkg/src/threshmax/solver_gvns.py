"""General Variable Neighborhood Search maximising the spectral radius."""

from __future__ import annotations

from dataclasses import dataclass

from threshmax.construct import init2_sol
from threshmax.graph_core import CreationSequence, ProblemInstance
from threshmax.moves import N1, N2, apply, enumerate_neighborhood, random_move
from threshmax.objective import TIE_TOL, BudgetExhausted, Evaluator, RunResult
from threshmax.rng import RandomStream

N2_ONLY = "n2_only"
COIN_FLIP = "coin_flip"
BEST_IMPROVEMENT = "best"
FIRST_IMPROVEMENT = "first"


@dataclass(frozen=True)
class GvnsConfig:
    k_max: int
    shake_neighborhood: str = N2_ONLY
    ls_strategy: str = BEST_IMPROVEMENT
    budget: int = 1000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.k_max < 1:
            raise ValueError("k_max must be >= 1")
        if self.budget < 1:
            raise ValueError("budget must be >= 1")
        if self.shake_neighborhood not in (N2_ONLY, COIN_FLIP):
            raise ValueError(f"unknown shake neighbourhood {self.shake_neighborhood!r}")
        if self.ls_strategy not in (BEST_IMPROVEMENT, FIRST_IMPROVEMENT):
            raise ValueError(f"unknown local search strategy {self.ls_strategy!r}")

    @classmethod
    def baseline(cls, n: int, seed: int, budget: int = 1000) -> GvnsConfig:
        return cls(k_max=max(1, n // 2), budget=budget, seed=seed)

    @classmethod
    def tuned(cls, n: int, seed: int, budget: int = 2000) -> GvnsConfig:
        return cls(
            k_max=max(1, n // 2),
            shake_neighborhood=COIN_FLIP,
            ls_strategy=FIRST_IMPROVEMENT,
            budget=budget,
            seed=seed,
        )


def shake(seq: CreationSequence, k: int, cfg: GvnsConfig, rng: RandomStream) -> CreationSequence:
    """Up to ``k`` random moves; stops early if the drawn neighbourhood is empty."""
    for _ in range(k):
        if cfg.shake_neighborhood == COIN_FLIP:
            which = N1 if rng.random() < 0.5 else N2
        else:
            which = N2
        mv = random_move(seq, which, rng)
        if mv is None:
            break
        seq = apply(seq, mv)
    return seq


def improve_once(
    seq: CreationSequence, value: float, which: str, strategy: str, evaluate: Evaluator
) -> tuple[CreationSequence, float]:
    """One improving step in ``which``; returns the input unchanged if there is none."""
    best, best_value = seq, value
    for mv in enumerate_neighborhood(seq, which):
        cand = apply(seq, mv)
        cand_value = evaluate(cand)
        if cand_value > best_value + TIE_TOL:
            best, best_value = cand, cand_value
            if strategy == FIRST_IMPROVEMENT:
                break
    return best, best_value


def local_search(
    seq: CreationSequence, value: float, which: str, strategy: str, evaluate: Evaluator
) -> tuple[CreationSequence, float]:
    """Repeat improving steps in one neighbourhood until none is left."""
    while True:
        cand, cand_value = improve_once(seq, value, which, strategy, evaluate)
        if cand_value <= value + TIE_TOL:
            return seq, value
        seq, value = cand, cand_value


def vnd(
    seq: CreationSequence, value: float, cfg: GvnsConfig, evaluate: Evaluator
) -> tuple[CreationSequence, float]:
    neighborhoods = (N1, N2)
    level = 0
    while level < len(neighborhoods):
        cand, cand_value = local_search(seq, value, neighborhoods[level], cfg.ls_strategy, evaluate)
        if cand_value > value + TIE_TOL:
            seq, value = cand, cand_value
            level = 0
        else:
            level += 1
    return seq, value


def gvns_run(inst: ProblemInstance, cfg: GvnsConfig, evaluate: Evaluator | None = None) -> RunResult:
    rng = RandomStream(cfg.seed)
    evaluate = evaluate or Evaluator(inst, cfg.budget)
    try:
        x_best = init2_sol(inst)
        f_best = evaluate(x_best)
        while True:
            k = 1
            while k <= cfg.k_max:
                x1 = shake(x_best, k, cfg, rng)
                x2, f2 = vnd(x1, evaluate(x1), cfg, evaluate)
                if f2 > f_best + TIE_TOL:
                    x_best, f_best = x2, f2
                    k = 1
                else:
                    k += 1
    except BudgetExhausted:
        pass
    return evaluate.result()
