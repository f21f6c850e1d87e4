"""Exact weighted independent sets in bipartite graphs via max flow."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import corpus
from ocpack import (
    Graph,
    PreconditionError,
    VertexWeights,
    complete_bipartite,
    cycle_graph,
    max_weight_independent_set_bipartite,
    path_graph,
)


def test_heavy_middle_vertex_wins_on_a_path():
    chosen = max_weight_independent_set_bipartite(
        path_graph(3), VertexWeights((1, 5, 1))
    )
    assert chosen == {1}


def test_complete_bipartite_takes_one_side():
    chosen = max_weight_independent_set_bipartite(complete_bipartite(3, 3))
    assert chosen in ({0, 1, 2}, {3, 4, 5})
    assert len(chosen) == 3


def test_empty_graph():
    assert max_weight_independent_set_bipartite(Graph(0)) == frozenset()


def test_edgeless_graph_takes_everything():
    assert max_weight_independent_set_bipartite(Graph(5)) == frozenset(range(5))


def test_non_bipartite_rejected_with_witness():
    with pytest.raises(PreconditionError) as info:
        max_weight_independent_set_bipartite(cycle_graph(5))
    walk = info.value.witness
    assert walk is not None and len(walk) % 2 == 1


def test_disconnected_components_solved_together():
    # Two paths: optimum picks both endpoints of each.
    g = Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    chosen = max_weight_independent_set_bipartite(g)
    assert chosen == {0, 2, 3, 5}


def test_matches_reference_on_random_bipartite_corpus():
    for seed in range(120):
        g = corpus.random_bipartite(4 + seed % 11, 0.2 + (seed % 5) * 0.1, seed)
        w = corpus.weights_for(g, seed * 7 + 1)
        chosen = max_weight_independent_set_bipartite(g, w)
        assert corpus.ref_is_independent(g, chosen)
        assert w.weight_of(chosen) == corpus.ref_alpha_w(g, w)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.floats(0.05, 0.9), st.integers(0, 2**32), st.integers(0, 2**32))
def test_unit_weight_agreement_property(n, p, gseed, wseed):
    g = corpus.random_bipartite(n, p, gseed)
    w = corpus.weights_for(g, wseed)
    chosen = max_weight_independent_set_bipartite(g, w)
    assert corpus.ref_is_independent(g, chosen)
    assert w.weight_of(chosen) == corpus.ref_alpha_w(g, w)
