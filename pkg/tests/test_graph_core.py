import itertools
from math import comb

import networkx as nx
from networkx.algorithms.threshold import is_threshold_graph
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import oracle_adjacency, oracle_edges, sequences
from threshmax.graph_core import (
    Composition,
    CreationSequence,
    InvalidSequenceError,
    ProblemInstance,
    complete,
    composition_to_sequence,
    edge_count,
    has_forbidden_induced,
    is_feasible,
    is_stepwise,
    parse_sequence,
    star,
    to_adjacency,
    to_composition,
)


def test_instance_bounds():
    assert ProblemInstance(8, 7).m == 7
    assert ProblemInstance(8, 28).max_edges == 28
    for n, m in [(8, 6), (8, 29), (1, 0)]:
        with pytest.raises(ValueError):
            ProblemInstance(n, m)
    assert str(ProblemInstance(8, 15)) == "G_8,15"


def test_sequence_validation():
    with pytest.raises(InvalidSequenceError, match="disconnected"):
        CreationSequence((1, 0, 0, 0, 0, 0, 0, 0))
    with pytest.raises(InvalidSequenceError):
        CreationSequence((1,))
    with pytest.raises(InvalidSequenceError):
        CreationSequence((1, 2, 1))
    with pytest.raises(InvalidSequenceError):
        CreationSequence((0, 1))


def test_one_based_indexing():
    s = CreationSequence((1, 0, 0, 1))
    assert (s[1], s[2], s[4]) == (1, 0, 1)
    with pytest.raises(IndexError):
        s[0]


@pytest.mark.parametrize(
    "text",
    ["1 0 0 1 0 1 0 1", "{1, 0, 0, 1, 0, 1, 0, 1}", "[1,0,0,1,0,1,0,1]", "10010101", "0 0 0 1 0 1 0 1"],
)
def test_parse_formats(text):
    assert parse_sequence(text) == CreationSequence((1, 0, 0, 1, 0, 1, 0, 1))


def test_parse_error_reports_position():
    with pytest.raises(InvalidSequenceError, match="position 3"):
        parse_sequence("1 0 x 1")
    with pytest.raises(InvalidSequenceError):
        parse_sequence("   ")


def test_edge_count_examples():
    assert edge_count(CreationSequence((1, 0, 0, 1, 0, 1, 0, 1))) == 15
    assert edge_count(star(8)) == 7
    assert edge_count(complete(8)) == 28
    assert is_feasible(star(8), ProblemInstance(8, 7))


@given(sequences())
def test_edge_count_matches_oracle(seq):
    assert edge_count(seq) == oracle_edges(seq.bits)
    adj = to_adjacency(seq)
    assert np.array_equal(adj, oracle_adjacency(seq.bits))
    assert adj.sum() == 2 * edge_count(seq)


def test_alternating_n8_adjacency():
    adj = to_adjacency(CreationSequence((1, 0, 0, 1, 0, 1, 0, 1))).astype(int)
    expected = np.array([
        [0, 0, 0, 1, 0, 1, 0, 1],
        [0, 0, 0, 1, 0, 1, 0, 1],
        [0, 0, 0, 1, 0, 1, 0, 1],
        [1, 1, 1, 0, 0, 1, 0, 1],
        [0, 0, 0, 0, 0, 1, 0, 1],
        [1, 1, 1, 1, 1, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 1],
        [1, 1, 1, 1, 1, 1, 1, 0],
    ])
    assert np.array_equal(adj, expected)


@pytest.mark.parametrize(
    "bits, parts",
    [
        ((1, 0, 0, 1, 0, 1, 0, 1), (3, 1, 1, 1, 1, 1)),
        ((1, 1, 1, 0, 1, 1, 0, 1), (3, 1, 2, 1, 1)),
        ((1, 0, 0, 0, 1), (4, 1)),
        ((1, 1, 1, 1), (4,)),
        ((1, 1), (2,)),
    ],
)
def test_composition_examples(bits, parts):
    seq = CreationSequence(bits)
    assert to_composition(seq) == Composition(parts)
    assert composition_to_sequence(Composition(parts)) == seq


@given(sequences())
def test_composition_round_trip(seq):
    comp = to_composition(seq)
    assert comp.n == seq.n
    assert composition_to_sequence(comp, seq.n) == seq


def test_composition_size_mismatch():
    with pytest.raises(ValueError):
        composition_to_sequence(Composition((2, 1)), 5)


@given(sequences(max_n=25))
def test_threshold_graphs_are_stepwise(seq):
    adj = to_adjacency(seq)
    assert is_stepwise(adj)
    assert is_threshold_graph(nx.from_numpy_array(adj))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_stepwise_agrees_with_networkx_on_all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = np.zeros((n, n), dtype=int)
        for bit, (i, j) in enumerate(pairs):
            if mask >> bit & 1:
                adj[i, j] = adj[j, i] = 1
        expected = is_threshold_graph(nx.from_numpy_array(adj))
        assert is_stepwise(adj) == expected
        assert has_forbidden_induced(adj) == (not expected)


@given(sequences(max_n=10))
def test_no_forbidden_subgraphs(seq):
    assert not has_forbidden_induced(to_adjacency(seq))


@pytest.mark.parametrize(
    "edges",
    [[(0, 1), (1, 2), (2, 3)], [(0, 1), (1, 2), (2, 3), (3, 0)], [(0, 1), (2, 3)]],
    ids=["P4", "C4", "2K2"],
)
def test_forbidden_detected(edges):
    adj = np.zeros((4, 4), dtype=int)
    for i, j in edges:
        adj[i, j] = adj[j, i] = 1
    assert has_forbidden_induced(adj)
    assert not is_stepwise(adj)


def test_star_and_complete_sizes():
    for n in range(2, 12):
        assert edge_count(star(n)) == n - 1
        assert edge_count(complete(n)) == comb(n, 2)
