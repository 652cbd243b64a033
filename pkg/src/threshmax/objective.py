"""Budgeted objective evaluation shared by the solvers.

Every request for a spectral radius counts as one evaluation, whether or not
the value was computed before. The memo only saves wall time.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field

from threshmax.graph_core import CreationSequence, ProblemInstance, edge_count
from threshmax.spectral import objective

# values closer than this are treated as equal
TIE_TOL = 1e-9


class BudgetExhausted(Exception):
    pass


@dataclass
class RunResult:
    best_sequence: CreationSequence
    best_value: float
    evaluations_used: int
    initial_value: float
    improvement_trace: list[tuple[int, float]] = field(default_factory=list)


class Evaluator:
    """Owns one run's budget, memo and best-so-far record."""

    def __init__(
        self,
        inst: ProblemInstance,
        budget: int,
        fn: Callable[[CreationSequence], float] = objective,
        check_feasible: bool = __debug__,
    ) -> None:
        if budget < 1:
            raise ValueError("budget must be at least 1")
        self.inst = inst
        self.budget = budget
        self.used = 0
        self._fn = fn
        self._memo: dict[tuple[int, ...], float] = {}
        self._check = check_feasible
        self.best: CreationSequence | None = None
        self.best_value = float("-inf")
        self.initial_value: float | None = None
        self.trace: list[tuple[int, float]] = []

    @property
    def remaining(self) -> int:
        return self.budget - self.used

    def __call__(self, seq: CreationSequence) -> float:
        if self.used >= self.budget:
            raise BudgetExhausted
        if self._check and edge_count(seq) != self.inst.m:
            raise AssertionError(f"infeasible candidate {seq} for {self.inst}")
        self.used += 1
        value = self._memo.get(seq.bits)
        if value is None:
            value = self._fn(seq)
            self._memo[seq.bits] = value
        if self.initial_value is None:
            self.initial_value = value
        if value > self.best_value + TIE_TOL:
            self.best, self.best_value = seq, value
            self.trace.append((self.used, value))
        return value

    def result(self) -> RunResult:
        assert self.best is not None, "no evaluation was made"
        return RunResult(
            best_sequence=self.best,
            best_value=self.best_value,
            evaluations_used=self.used,
            initial_value=self.initial_value,
            improvement_trace=list(self.trace),
        )
