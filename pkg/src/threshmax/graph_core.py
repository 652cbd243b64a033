"""Threshold graphs encoded as creation sequences.

A creation sequence ``r_1 .. r_n`` builds a graph one vertex at a time:
``r_i = 1`` adds vertex ``i`` adjacent to every earlier vertex, ``r_i = 0``
adds it isolated. Position 1 contributes no edges and is stored as 1; the
last bit must be 1 for the graph to be connected. Positions are 1-based
throughout the public API.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

import numpy as np


class InvalidSequenceError(ValueError):
    """Raised for bit strings that do not encode a connected threshold graph."""


class CapacityError(ValueError):
    """An instance exceeds a size cap (exhaustive enumeration, dense eigensolver)."""


@dataclass(frozen=True)
class ProblemInstance:
    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"need n >= 2, got n={self.n}")
        if not self.min_edges <= self.m <= self.max_edges:
            raise ValueError(
                f"no connected threshold graph with n={self.n}, m={self.m}; "
                f"m must lie in [{self.min_edges}, {self.max_edges}]"
            )

    @property
    def min_edges(self) -> int:
        return self.n - 1

    @property
    def max_edges(self) -> int:
        return self.n * (self.n - 1) // 2

    def __str__(self) -> str:
        return f"G_{self.n},{self.m}"


@dataclass(frozen=True)
class CreationSequence:
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(int(b) for b in self.bits)
        object.__setattr__(self, "bits", bits)
        if len(bits) < 2:
            raise InvalidSequenceError("a sequence needs at least 2 vertices")
        bad = [i + 1 for i, b in enumerate(bits) if b not in (0, 1)]
        if bad:
            raise InvalidSequenceError(f"non-binary value at position {bad[0]}")
        if bits[0] != 1:
            raise InvalidSequenceError("r_1 must be stored as 1")
        if bits[-1] != 1:
            raise InvalidSequenceError(
                f"r_{len(bits)} = 0: the last vertex must be dominating, "
                "otherwise the graph is disconnected"
            )

    @property
    def n(self) -> int:
        return len(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, position: int) -> int:
        """Bit at 1-based ``position``."""
        if not 1 <= position <= len(self.bits):
            raise IndexError(position)
        return self.bits[position - 1]

    def __str__(self) -> str:
        return " ".join(map(str, self.bits))

    @classmethod
    def from_string(cls, text: str) -> CreationSequence:
        return parse_sequence(text)


@dataclass(frozen=True)
class Composition:
    """Block sizes ``p_1 .. p_k`` of ``G_{p_1,...,p_k}``; the last block is dominating."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive, got {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "G_(" + ",".join(map(str, self.parts)) + ")"


_TOKEN = re.compile(r"[\s,{}\[\]()]+")


def parse_sequence(text: str) -> CreationSequence:
    """Parse ``"1 0 1 1"``, ``"{1, 0, 1, 1}"`` or a packed ``"1011"``.

    A leading 0 is accepted and normalised to 1 since the first bit carries
    no edges.
    """
    tokens = [t for t in _TOKEN.split(text.strip()) if t]
    if len(tokens) == 1 and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    bits = []
    for pos, tok in enumerate(tokens, start=1):
        if tok not in ("0", "1"):
            raise InvalidSequenceError(f"cannot parse {tok!r} at position {pos}")
        bits.append(int(tok))
    if not bits:
        raise InvalidSequenceError("empty sequence")
    bits[0] = 1
    return CreationSequence(tuple(bits))


def edge_count(seq: CreationSequence) -> int:
    return sum(i * b for i, b in enumerate(seq.bits[1:], start=1))


def is_feasible(seq: CreationSequence, inst: ProblemInstance) -> bool:
    return seq.n == inst.n and edge_count(seq) == inst.m


def to_adjacency(seq: CreationSequence) -> np.ndarray:
    bits = np.asarray(seq.bits, dtype=float)
    upper = np.triu(np.broadcast_to(bits, (seq.n, seq.n)), k=1)
    return upper + upper.T


def star(n: int) -> CreationSequence:
    return CreationSequence((1,) + (0,) * (n - 2) + (1,))


def complete(n: int) -> CreationSequence:
    return CreationSequence((1,) * n)


def to_composition(seq: CreationSequence) -> Composition:
    # vertex 1 always joins the run that starts at position 2
    runs = [len(list(g)) for _, g in itertools.groupby(seq.bits[1:])]
    runs[0] += 1
    return Composition(tuple(runs))


def composition_to_sequence(comp: Composition, n: int | None = None) -> CreationSequence:
    if n is not None and comp.n != n:
        raise ValueError(f"composition {comp} has {comp.n} vertices, expected {n}")
    bits: list[int] = []
    # blocks alternate type walking backwards from the dominating last block
    k = len(comp.parts)
    for idx, size in enumerate(comp.parts):
        bit = 1 if (k - 1 - idx) % 2 == 0 else 0
        bits.extend([bit] * size)
    bits[0] = 1
    return CreationSequence(tuple(bits))


def _degree_order(adj: np.ndarray) -> np.ndarray:
    deg = adj.sum(axis=1)
    # stable sort on -degree keeps index order among ties
    return np.argsort(-deg, kind="stable")


def is_stepwise(adj: np.ndarray) -> bool:
    """True if ordering vertices by non-increasing degree gives a staircase matrix.

    The down-closure condition is checked one step at a time: an edge (i, j)
    with i < j needs (i-1, j) and, when i < j-1, also (i, j-1).
    """
    adj = np.asarray(adj)
    n = adj.shape[0]
    if n < 2:
        return True
    order = _degree_order(adj)
    upper = np.triu(adj[np.ix_(order, order)] != 0, k=1)
    # row step: upper[i, j] -> upper[i-1, j]
    if np.any(upper[1:, :] & ~upper[:-1, :]):
        return False
    # column step: upper[i, j] -> upper[i, j-1] wherever i < j-1
    col_ok = np.triu(np.ones((n, n - 1), dtype=bool), k=1)
    return not np.any(upper[:, 1:] & ~upper[:, :-1] & col_ok)


def _induced_kind(sub: np.ndarray) -> str | None:
    degrees = tuple(sorted(int(d) for d in sub.sum(axis=1)))
    if degrees == (1, 1, 2, 2):
        return "P4"
    if degrees == (2, 2, 2, 2):
        return "C4"
    if degrees == (1, 1, 1, 1):
        return "2K2"
    return None


def has_forbidden_induced(adj: np.ndarray) -> bool:
    """True if some 4 vertices induce P4, C4 or 2K2."""
    adj = np.asarray(adj) != 0
    n = adj.shape[0]
    for quad in itertools.combinations(range(n), 4):
        if _induced_kind(adj[np.ix_(quad, quad)].astype(int)) is not None:
            return True
    return False
