from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import oracle_edges, sequences
from threshmax.graph_core import CreationSequence, edge_count, has_forbidden_induced, is_stepwise, to_adjacency
from threshmax.moves import (
    ANY,
    N1,
    N2,
    Merge,
    MoveError,
    ShiftPair,
    Split,
    apply,
    enumerate_neighborhood,
    random_move,
    random_walk,
)
from threshmax.rng import RandomStream


def brute_force(seq: CreationSequence, which: str) -> list:
    """Neighbourhoods straight from the definitions, in lexicographic order."""
    n, r = seq.n, (None,) + seq.bits
    inner = range(2, n)
    shifts = [
        ShiftPair(a, b)
        for a in inner
        for b in inner
        if a + 1 <= n - 1 and b + 1 <= n - 1 and abs(a - b) >= 2
        and (r[a], r[a + 1], r[b], r[b + 1]) == (0, 1, 1, 0)
    ]
    triples = [(i, j, k) for i in inner for j in inner for k in inner if j < k and (j - 1) + (k - 1) == i - 1]
    splits = sorted(Split(i, j, k) for i, j, k in triples if (r[i], r[j], r[k]) == (1, 0, 0))
    merges = sorted(Merge(j, k, i) for i, j, k in triples if (r[i], r[j], r[k]) == (0, 1, 1))
    return {N1: shifts, N2: splits + merges, ANY: shifts + splits + merges}[which]


@settings(max_examples=300)
@given(sequences(max_n=20), st.sampled_from([N1, N2, ANY]))
def test_enumeration_matches_definition(seq, which):
    assert enumerate_neighborhood(seq, which) == brute_force(seq, which)


def test_small_example():
    # inner positions 2..6 hold 0 1 1 0 0
    seq = CreationSequence((1, 0, 1, 1, 0, 0, 1))
    assert enumerate_neighborhood(seq, N1) == [ShiftPair(2, 4)]
    assert enumerate_neighborhood(seq, N2) == [Merge(3, 4, 6)]
    assert apply(seq, Merge(3, 4, 6)) == CreationSequence((1, 0, 0, 0, 0, 1, 1))


@settings(max_examples=300)
@given(sequences(min_n=3, max_n=40), st.sampled_from([N1, N2]))
def test_every_move_preserves_edges(seq, which):
    m = edge_count(seq)
    for mv in enumerate_neighborhood(seq, which):
        out = apply(seq, mv)
        assert oracle_edges(out.bits) == m
        assert out.bits[0] == 1 and out.bits[-1] == 1


def test_ten_thousand_random_moves():
    rng = RandomStream(2024)
    checked = 0
    for trial in range(10_000):
        n = 4 + rng.randbelow(37)
        seq = CreationSequence((1, *(rng.randbelow(2) for _ in range(n - 2)), 1))
        mv = random_move(seq, ANY, rng)
        if mv is None:
            continue
        out = apply(seq, mv)
        checked += 1
        assert edge_count(out) == edge_count(seq)
        assert is_stepwise(to_adjacency(out))
        if n <= 9:
            assert not has_forbidden_induced(to_adjacency(out))
    assert checked > 9000


@given(sequences(min_n=4, max_n=30))
def test_split_merge_inverse(seq):
    for mv in enumerate_neighborhood(seq, N2):
        out = apply(seq, mv)
        back = Merge(mv.j, mv.k, mv.i) if isinstance(mv, Split) else Split(mv.i, mv.j, mv.k)
        assert apply(out, back) == seq


@given(sequences(min_n=5, max_n=30))
def test_shift_pair_inverse(seq):
    for mv in enumerate_neighborhood(seq, N1):
        assert apply(apply(seq, mv), ShiftPair(mv.b, mv.a)) == seq


@pytest.mark.parametrize(
    "mv",
    [ShiftPair(2, 3), ShiftPair(1, 4), Split(3, 2, 2), Split(4, 2, 3), Merge(2, 3, 5), Merge(2, 3, 4)],
)
def test_inapplicable_moves_rejected(mv):
    seq = CreationSequence((1, 0, 1, 1, 0, 0, 1))
    if mv in enumerate_neighborhood(seq, ANY):
        pytest.skip("applicable here")
    with pytest.raises(MoveError):
        apply(seq, mv)


def test_endpoints_never_touched():
    with pytest.raises(MoveError):
        apply(CreationSequence((1, 0, 1, 1)), ShiftPair(2, 4))


def test_empty_neighbourhoods():
    for seq in (CreationSequence((1, 1)), CreationSequence((1, 0, 1)), CreationSequence((1,) * 6)):
        assert random_move(seq, ANY, RandomStream(0)) is None
        assert random_walk(seq, 5, RandomStream(0)) == seq


def test_random_move_uniform_over_n1():
    seq = CreationSequence((1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1))
    moves = enumerate_neighborhood(seq, N1)
    assert len(moves) > 5
    rng = RandomStream(5)
    draws = 20_000
    counts = Counter(random_move(seq, N1, rng) for _ in range(draws))
    assert set(counts) == set(moves)
    expected = draws / len(moves)
    assert all(abs(c - expected) <= 0.05 * expected for c in counts.values())


def test_random_walk_deterministic():
    seq = CreationSequence((1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1))
    a = random_walk(seq, 30, RandomStream(11))
    b = random_walk(seq, 30, RandomStream(11))
    assert a == b and edge_count(a) == edge_count(seq)
