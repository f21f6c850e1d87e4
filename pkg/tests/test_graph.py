"""Core graph machinery: BFS, bipartiteness, odd cycles, shields."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import corpus
from ocpack import (
    Coloring,
    Graph,
    OddCycle,
    PreconditionError,
    ShieldSpec,
    VertexWeights,
    bfs_distances,
    closed_neighborhood,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    girth,
    gnp,
    induced_subgraph,
    neighborhood,
    odd_girth,
    path_graph,
    petersen,
    shield_set,
    shortest_odd_cycle,
    two_coloring,
)

random_graphs = st.builds(
    gnp,
    st.integers(1, 12),
    st.floats(0.0, 1.0),
    st.integers(0, 2**32),
)


class TestGraphBasics:
    def test_rejects_out_of_range_edge(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph(3, [(0, 3)])

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(3, [(1, 1)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph(3, [(0, 1), (1, 0)])

    def test_adjacency_is_sorted_and_symmetric(self):
        g = Graph(4, [(2, 0), (3, 1), (0, 1)])
        assert g.adj[0] == (1, 2)
        assert g.m == 3
        assert all(u in g.adj[v] for v in range(4) for u in g.adj[v])
        assert list(g.edges()) == [(0, 1), (0, 2), (1, 3)]

    def test_degree_and_has_edge(self):
        g = cycle_graph(5)
        assert [g.degree(v) for v in range(5)] == [2] * 5
        assert g.has_edge(0, 4) and not g.has_edge(0, 2)

    def test_vertex_weights_validation(self):
        with pytest.raises(ValueError, match="integer >= 1"):
            VertexWeights((1, 0))
        with pytest.raises(ValueError, match="integer >= 1"):
            VertexWeights((1, True))
        w = VertexWeights((2, 3, 4))
        assert w.total() == 9
        assert w.weight_of([0, 2]) == 6
        with pytest.raises(ValueError, match="cover"):
            w.check_domain(cycle_graph(5))

    def test_odd_cycle_validation(self):
        with pytest.raises(ValueError, match="odd number"):
            OddCycle((0, 1, 2, 3))
        with pytest.raises(ValueError, match="distinct"):
            OddCycle((0, 1, 0))
        c = OddCycle((0, 1, 2))
        with pytest.raises(ValueError, match="not an edge"):
            c.verify(Graph(3, [(0, 1), (1, 2)]))

    def test_coloring_validation(self):
        with pytest.raises(ValueError, match="distinct"):
            Coloring((0, 0, 1), 3)
        assert Coloring.from_assignment([0, 0, 1]).color_count == 2


class TestBfs:
    def test_path_from_one_end(self):
        assert bfs_distances(path_graph(3), [0]) == [0, 1, 2]

    def test_all_sources_gives_zero(self):
        g = gnp(8, 0.3, seed=1)
        assert bfs_distances(g, range(8)) == [0] * 8

    def test_cycle_symmetry(self):
        assert bfs_distances(cycle_graph(5), [0]) == [0, 1, 2, 2, 1]

    def test_unreachable_marked(self):
        g = Graph(4, [(0, 1)])
        assert bfs_distances(g, [0]) == [0, 1, -1, -1]

    def test_empty_sources_rejected(self):
        with pytest.raises(ValueError, match="non-empty"):
            bfs_distances(path_graph(3), [])


class TestTwoColoring:
    def test_even_cycle_alternates(self):
        result = two_coloring(cycle_graph(6))
        assert result.odd_walk is None
        assert result.coloring.assignment == (0, 1, 0, 1, 0, 1)

    def test_odd_cycle_witness(self):
        result = two_coloring(cycle_graph(5))
        assert result.coloring is None
        walk = result.odd_walk
        assert len(walk) == 5 and len(set(walk)) == 5

    def test_edgeless_graph_is_bipartite(self):
        result = two_coloring(Graph(4))
        assert result.coloring is not None
        assert result.coloring.assignment == (0, 0, 0, 0)

    @settings(max_examples=60, deadline=None)
    @given(random_graphs)
    def test_witness_is_an_odd_cycle_of_the_graph(self, g):
        result = two_coloring(g)
        if result.coloring is not None:
            assert corpus.ref_proper(g, result.coloring.assignment)
            assert set(result.coloring.assignment) <= {0, 1}
        else:
            walk = result.odd_walk
            assert len(walk) % 2 == 1
            for i, u in enumerate(walk):
                assert g.has_edge(u, walk[(i + 1) % len(walk)])


class TestShortestOddCycle:
    def test_five_cycle(self):
        assert shortest_odd_cycle(cycle_graph(5)).length == 5

    def test_bipartite_returns_none(self):
        assert shortest_odd_cycle(complete_bipartite(3, 3)) is None

    def test_petersen_length_five(self):
        assert shortest_odd_cycle(petersen()).length == 5

    def test_matches_reference_and_is_induced_on_corpus(self):
        for g in corpus.gnp_corpus(60, 1, 12, seed=101):
            cycle = shortest_odd_cycle(g)
            ref = corpus.ref_odd_girth(g)
            if ref is None:
                assert cycle is None
            else:
                assert cycle.length == ref
                cycle.verify(g)
                assert cycle.is_induced_in(g)

    def test_bipartite_iff_no_odd_cycle(self):
        for g in corpus.gnp_corpus(40, 1, 11, seed=102):
            assert (two_coloring(g).coloring is None) == (
                shortest_odd_cycle(g) is not None
            )

    def test_deterministic(self):
        g = gnp(12, 0.3, seed=9)
        assert shortest_odd_cycle(g) == shortest_odd_cycle(g)


class TestGirth:
    def test_odd_girth_examples(self):
        assert odd_girth(complete_graph(3)) == 3
        assert odd_girth(cycle_graph(9)) == 9
        assert odd_girth(cycle_graph(6)) == math.inf

    def test_girth_examples(self):
        assert girth(cycle_graph(7)) == 7
        assert girth(path_graph(5)) == math.inf
        assert girth(petersen()) == 5

    def test_girth_matches_reference_on_corpus(self):
        for g in corpus.gnp_corpus(50, 1, 12, seed=103):
            ref = corpus.ref_girth(g)
            assert girth(g) == (math.inf if ref is None else ref)


class TestNeighborhoods:
    def test_star_center(self):
        star = Graph(4, [(0, 1), (0, 2), (0, 3)])
        assert neighborhood(star, [0]) == {1, 2, 3}

    def test_cycle_vertex(self):
        assert neighborhood(cycle_graph(5), [0]) == {1, 4}

    def test_whole_vertex_set(self):
        g = gnp(8, 0.5, seed=2)
        assert neighborhood(g, range(8)) == frozenset()

    def test_closed_neighborhood(self):
        assert closed_neighborhood(cycle_graph(5), [0]) == {0, 1, 4}

    @settings(max_examples=40, deadline=None)
    @given(random_graphs, st.data())
    def test_disjoint_from_input_set(self, g, data):
        members = data.draw(st.sets(st.integers(0, g.n - 1)))
        assert not neighborhood(g, members) & members


class TestInducedSubgraph:
    def test_full_vertex_set_is_copy(self):
        g = gnp(9, 0.4, seed=3)
        sub, old_to_new, new_to_old = induced_subgraph(g, range(9))
        assert sub.n == g.n and sub.m == g.m
        assert sorted(sub.edges()) == sorted(g.edges())
        assert all(old_to_new[new_to_old[i]] == i for i in range(9))

    def test_triangle_inside_k4(self):
        sub = induced_subgraph(complete_graph(4), [0, 2, 3]).graph
        assert sub.n == 3 and sub.m == 3

    def test_alternate_cycle_vertices_are_independent(self):
        sub = induced_subgraph(cycle_graph(6), [0, 2, 4]).graph
        assert sub.m == 0

    def test_adjacency_preserved_under_map(self):
        for g in corpus.gnp_corpus(20, 2, 10, seed=104):
            keep = [v for v in range(g.n) if v % 2 == 0]
            sub, _, new_to_old = induced_subgraph(g, keep)
            for i in range(sub.n):
                for j in range(i + 1, sub.n):
                    assert sub.has_edge(i, j) == g.has_edge(new_to_old[i], new_to_old[j])


class TestComplement:
    def test_edgeless_becomes_complete(self):
        assert complement(Graph(4)).m == 6

    def test_five_cycle_self_complementary(self):
        comp = complement(cycle_graph(5))
        assert comp.n == 5 and comp.m == 5
        assert all(comp.degree(v) == 2 for v in range(5))
        assert odd_girth(comp) == 5

    @settings(max_examples=40, deadline=None)
    @given(random_graphs)
    def test_involution(self, g):
        back = complement(complement(g))
        assert back.n == g.n and sorted(back.edges()) == sorted(g.edges())


class TestShieldSet:
    def test_radius_zero_on_five_cycle(self):
        g = cycle_graph(5)
        cycle = shortest_odd_cycle(g)
        shield = shield_set(g, ShieldSpec(cycle, anchor=2, radius=0))
        assert shield == {2}
        rest = induced_subgraph(g, set(range(5)) - shield).graph
        assert two_coloring(rest).coloring is not None

    def test_radius_one_on_nine_cycle_leaves_a_path(self):
        g = cycle_graph(9)
        cycle = shortest_odd_cycle(g)
        # arc = {8, 0, 1}; shield = within distance 1 of the arc
        shield = shield_set(g, ShieldSpec(cycle, anchor=0, radius=1))
        assert shield == {0, 1, 2, 7, 8}
        rest = induced_subgraph(g, set(range(9)) - shield).graph
        assert rest.m == rest.n - 1  # a path
        assert two_coloring(rest).coloring is not None

    def test_radius_two_on_nine_cycle_covers_everything(self):
        # The shield is a radius-2 ball around the 5-vertex arc, which is all
        # of C_9; the remainder is empty and trivially bipartite.
        g = cycle_graph(9)
        cycle = shortest_odd_cycle(g)
        shield = shield_set(g, ShieldSpec(cycle, anchor=0, radius=2))
        assert shield == set(range(9))

    def test_pendant_vertex_joins_the_shield(self):
        g = Graph(10, [(i, (i + 1) % 9) for i in range(9)] + [(0, 9)])
        cycle = OddCycle(tuple(range(9)))
        shield = shield_set(g, ShieldSpec(cycle, anchor=0, radius=1))
        # arc = {8, 0, 1}; everything within distance 1 of the arc
        assert shield == {0, 1, 2, 7, 8, 9}

    def test_too_large_radius_rejected(self):
        g = cycle_graph(5)
        cycle = shortest_odd_cycle(g)
        with pytest.raises(PreconditionError, match="radius"):
            shield_set(g, ShieldSpec(cycle, anchor=0, radius=3))

    def test_anchor_must_lie_on_cycle(self):
        g = Graph(6, [(i, (i + 1) % 5) for i in range(5)])
        cycle = shortest_odd_cycle(g)
        with pytest.raises(ValueError, match="anchor"):
            shield_set(g, ShieldSpec(cycle, anchor=5, radius=1))

    def test_removal_leaves_bipartite_on_shell_corpus(self):
        for seed in range(40):
            g, cycle, anchor, radius = corpus.cycle_plus_shell(seed)
            shield = shield_set(g, ShieldSpec(cycle, anchor, radius))
            rest = induced_subgraph(g, set(range(g.n)) - shield).graph
            assert two_coloring(rest).coloring is not None
