import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import M2, P, S1, T
from strategies import hypergraphs
from implalg import (
    IsoWitness,
    Profile,
    algebra_iso,
    compute_profile,
    enumerate_hypergraphs,
    from_hypergraph,
    hypergraph_iso,
    new_hypergraph,
    poset_iso_oracle,
    profile_iso,
)
from implalg.errors import TooLarge

# T with a and c swapped
T_SWAP = new_hypergraph("abc", [["c", "b"], ["b", "a"], ["c", "a"]])
ABC = new_hypergraph("abc", [["a", "b", "c"]])


def test_algebra_iso_triangle_relabelled():
    a1, a2 = from_hypergraph(T), from_hypergraph(T_SWAP)
    w = algebra_iso(a1, a2)
    assert w is not None
    assert w.holds(compute_profile(a1), compute_profile(a2))


def test_algebra_iso_negative_examples():
    assert algebra_iso(from_hypergraph(P), from_hypergraph(M2)) is None
    assert algebra_iso(from_hypergraph(S1), from_hypergraph(ABC)) is None
    assert algebra_iso(from_hypergraph(T), from_hypergraph(P)) is None


def test_hypergraph_iso_examples():
    assert hypergraph_iso(T, T_SWAP)
    assert not hypergraph_iso(P, M2)
    assert not hypergraph_iso(T, P)
    assert hypergraph_iso(S1, S1)


def test_poset_oracle_examples():
    assert poset_iso_oracle(from_hypergraph(T), from_hypergraph(T_SWAP))
    assert not poset_iso_oracle(from_hypergraph(P), from_hypergraph(M2))
    assert not poset_iso_oracle(from_hypergraph(S1), from_hypergraph(ABC))
    # same element count, different order: 7 elements each
    assert not poset_iso_oracle(from_hypergraph(T), from_hypergraph(M2))


def test_poset_oracle_limit():
    big = new_hypergraph("abcd", [["a", "b", "c", "d"]])
    with pytest.raises(TooLarge):
        poset_iso_oracle(from_hypergraph(big), from_hypergraph(big))


def test_witness_must_be_a_bijection():
    with pytest.raises(ValueError):
        IsoWitness(((0, 0), (1, 0)))
    w = IsoWitness(((1, 0), (0, 1)))
    assert w.mapping == ((0, 1), (1, 0))
    assert w.image(0b01) == 0b10


def test_profile_iso_ignores_non_matching_values():
    assert profile_iso(Profile(2, (2, 1, 1)), Profile(2, (1, 2, 1))).mapping == ((0, 1), (1, 0))
    assert profile_iso(Profile(2, (2, 1, 1)), Profile(2, (2, 1, 0))) is None
    assert profile_iso(Profile(1, (2,)), Profile(2, (2, 0, 0))) is None


def test_reflexive_and_symmetric_on_small_corpus():
    hs = list(enumerate_hypergraphs(3, 3, True))
    for h1, h2 in itertools.product(hs, repeat=2):
        assert hypergraph_iso(h1, h2) == hypergraph_iso(h2, h1)
    assert all(hypergraph_iso(h, h) for h in hs)


@given(hypergraphs, st.randoms())
def test_relabelling_gives_valid_witness(h, rnd):
    perm = list(range(h.n_vertices))
    rnd.shuffle(perm)
    edges = list(h.relabel(perm).edges)
    rnd.shuffle(edges)
    g = type(h)(h.vertex_names, tuple(edges))
    a1, a2 = from_hypergraph(h), from_hypergraph(g)
    w = algebra_iso(a1, a2)
    assert w is not None and w.holds(compute_profile(a1), compute_profile(a2))
