"""Shared oracles and strategies.

The oracles here deliberately avoid the package's own numerics: adjacency is
rebuilt from the bit definition and eigenvalues come from LAPACK via numpy.
"""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import strategies as st

from threshmax.graph_core import CreationSequence

ACCEPTANCE_LINES: list[str] = []


def oracle_adjacency(bits) -> np.ndarray:
    n = len(bits)
    a = np.zeros((n, n))
    for j in range(1, n):
        if bits[j]:
            a[:j, j] = a[j, :j] = 1.0
    return a


def oracle_eigs(bits) -> np.ndarray:
    return np.linalg.eigvalsh(oracle_adjacency(bits))[::-1]


def oracle_lambda(bits) -> float:
    return float(oracle_eigs(bits)[0])


def oracle_edges(bits) -> int:
    return sum(i for i, b in enumerate(bits) if b)


@st.composite
def sequences(draw, min_n: int = 2, max_n: int = 40) -> CreationSequence:
    n = draw(st.integers(min_n, max_n))
    interior = draw(st.lists(st.integers(0, 1), min_size=n - 2, max_size=n - 2))
    return CreationSequence((1, *interior, 1))


def pytest_terminal_summary(terminalreporter) -> None:
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_line():
    """Record one PASS/FAIL line, print it, and return the verdict."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record
