from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msdcycles import (
    ArcNotPresentError,
    Cycle,
    Digraph,
    NotStronglyConnectedError,
    contract,
    cut_points,
    enumerate_cycles,
    is_msd,
    is_strongly_connected,
    is_transitive_arc,
    linear_vertices,
    scc_partition,
)

from conftest import (
    bf_cycles,
    bf_is_strong,
    bf_scc_sets,
    random_digraph,
    random_strong_digraph,
)


@st.composite
def digraphs(draw, max_n: int = 6) -> Digraph:
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Digraph.of(n, arcs)


class TestDigraphType:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Digraph.of(2, [(0, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Digraph.of(2, [(0, 2)])

    def test_adjacency_is_sorted(self):
        d = Digraph.of(4, [(0, 3), (0, 1), (0, 2)])
        assert d.succ[0] == (1, 2, 3)
        assert d.pred[3] == (0,)

    def test_cycle_constructor(self):
        d = Digraph.cycle(4)
        assert d.m == 4 and d.has_arc(3, 0)

    def test_cycle_type_validation(self):
        with pytest.raises(ValueError):
            Cycle((0,))
        with pytest.raises(ValueError):
            Cycle((0, 1, 0))
        assert Cycle((2, 0, 1)).rotated_min_first().vertices == (0, 1, 2)


class TestStrongConnectivity:
    def test_directed_cycle_is_strong(self):
        assert is_strongly_connected(Digraph.cycle(4))

    def test_path_is_not_strong(self):
        assert not is_strongly_connected(Digraph.of(3, [(0, 1), (1, 2)]))

    def test_two_digons_are_strong(self):
        d = Digraph.of(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
        assert is_strongly_connected(d)

    def test_single_vertex(self):
        assert is_strongly_connected(Digraph.of(1, []))

    @given(digraphs())
    def test_matches_brute_force(self, d: Digraph):
        assert is_strongly_connected(d) == bf_is_strong(d.n, set(d.arcs))


class TestSccPartition:
    def test_cycle_is_one_component(self):
        p = scc_partition(Digraph.cycle(3))
        assert p.components == (frozenset({0, 1, 2}),)

    def test_acyclic_gives_singletons_in_deterministic_order(self):
        p = scc_partition(Digraph.of(5, [(1, 4), (4, 3)]))
        assert [sorted(c) for c in p.components] == [[0], [1], [2], [4], [3]]
        assert p.component_of == (0, 1, 2, 4, 3)

    def test_gadget_components(self):
        # 4-cycle plus one alternating gadget through positions 0 and 2
        d = Digraph.of(
            6,
            [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2), (2, 5), (5, 0)],
        )
        d_prime = Digraph(d.n, d.arcs - {(0, 1), (1, 2), (2, 3), (3, 0)})
        p = scc_partition(d_prime)
        assert frozenset({0, 2, 4, 5}) in p.components
        assert frozenset({1}) in p.components
        assert frozenset({3}) in p.components

    def test_ids_topological(self):
        rng = random.Random(5)
        for _ in range(60):
            d = random_digraph(rng, rng.randint(1, 8), 0.3)
            p = scc_partition(d)
            for u, v in d.arcs:
                assert p.component_of[u] <= p.component_of[v]

    @given(digraphs())
    def test_components_match_brute_force(self, d: Digraph):
        p = scc_partition(d)
        assert set(p.components) == bf_scc_sets(d.n, set(d.arcs))

    @given(digraphs())
    def test_deterministic(self, d: Digraph):
        assert scc_partition(d) == scc_partition(Digraph(d.n, frozenset(d.arcs)))


class TestTransitiveArc:
    def test_chord_is_transitive(self):
        d = Digraph.of(3, [(0, 1), (1, 2), (2, 0), (0, 2)])
        assert is_transitive_arc(d, 0, 2)

    def test_cycle_arc_is_not_transitive(self):
        assert not is_transitive_arc(Digraph.cycle(3), 0, 1)

    def test_msd5_has_no_transitive_arc(self, msd5):
        for u, v in msd5.arcs:
            assert not is_transitive_arc(msd5, u, v)

    def test_absent_arc_raises(self):
        with pytest.raises(ArcNotPresentError):
            is_transitive_arc(Digraph.cycle(3), 0, 2)

    def test_equivalent_to_deletion_keeping_strong(self):
        # on strong digraphs: removing (u,v) keeps it strong iff transitive
        rng = random.Random(11)
        for _ in range(80):
            d = random_strong_digraph(rng, rng.randint(2, 10), rng.randint(0, 8))
            for u, v in d.arcs:
                assert is_transitive_arc(d, u, v) == is_strongly_connected(
                    d.without_arc(u, v)
                )


class TestLinearVertices:
    def test_cycle_all_linear(self):
        assert linear_vertices(Digraph.cycle(5)) == frozenset(range(5))

    def test_shared_digon_vertex_not_linear(self):
        d = Digraph.of(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
        assert linear_vertices(d) == frozenset({0, 2})

    def test_msd5(self, msd5):
        assert linear_vertices(msd5) == frozenset({0, 2, 4})


class TestCutPoints:
    def test_middle_of_two_digons(self):
        d = Digraph.of(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
        assert cut_points(d) == frozenset({1})

    def test_cycle_has_none(self):
        assert cut_points(Digraph.cycle(4)) == frozenset()

    def test_msd5_has_none(self, msd5):
        assert cut_points(msd5) == frozenset()

    def test_disconnected_raises(self):
        with pytest.raises(ValueError):
            cut_points(Digraph.of(4, [(0, 1), (1, 0)]))


class TestEnumerateCycles:
    def test_plain_cycle(self):
        res = enumerate_cycles(Digraph.cycle(4))
        assert [c.vertices for c in res.cycles] == [(0, 1, 2, 3)]
        assert not res.truncated

    def test_two_digons(self):
        d = Digraph.of(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
        assert [c.vertices for c in enumerate_cycles(d).cycles] == [(0, 1), (1, 2)]

    def test_msd5(self, msd5):
        assert [c.vertices for c in enumerate_cycles(msd5).cycles] == [
            (0, 1, 2, 3),
            (0, 1, 4, 3),
        ]

    def test_truncation_flag(self):
        d = Digraph.of(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
        res = enumerate_cycles(d, max_count=1)
        assert len(res.cycles) == 1 and res.truncated
        assert not enumerate_cycles(d, max_count=2).truncated

    def test_sorted_by_length_then_lex(self):
        d = Digraph.of(3, [(0, 1), (1, 2), (2, 0), (0, 2), (2, 1)])
        assert [c.vertices for c in enumerate_cycles(d).cycles] == [
            (0, 2),
            (1, 2),
            (0, 1, 2),
        ]

    @given(digraphs(max_n=6))
    @settings(max_examples=150)
    def test_matches_permutation_search(self, d: Digraph):
        got = {c.vertices for c in enumerate_cycles(d).cycles}
        assert got == bf_cycles(d)


class TestContract:
    def test_digon_contraction(self):
        d = Digraph.of(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
        contracted, vmap = contract(d, {0, 1})
        assert contracted.n == 2
        assert contracted.arcs == frozenset({(0, 1), (1, 0)})
        assert vmap == {0: 0, 1: 0, 2: 1}

    def test_whole_cycle_to_point(self):
        contracted, _ = contract(Digraph.cycle(4), {0, 1, 2, 3})
        assert contracted.n == 1 and contracted.m == 0

    def test_msd5_cycle_contraction_is_msd(self, msd5):
        contracted, _ = contract(msd5, {0, 1, 2, 3})
        assert contracted.n == 2
        assert contracted.arcs == frozenset({(0, 1), (1, 0)})
        assert is_msd(contracted)

    def test_non_strong_set_raises(self):
        with pytest.raises(NotStronglyConnectedError):
            contract(Digraph.cycle(4), {0, 1})

    def test_contracting_cycle_keeps_strong(self):
        rng = random.Random(23)
        for _ in range(60):
            d = random_strong_digraph(rng, rng.randint(3, 8), rng.randint(0, 6))
            for c in enumerate_cycles(d).cycles:
                contracted, _ = contract(d, set(c.vertices))
                assert is_strongly_connected(contracted)

    def test_cycle_contraction_in_msd_removes_q_arcs(self, msd5):
        # q-1 vertices and q arcs disappear when contracting an MSD's cycle
        for c in enumerate_cycles(msd5).cycles:
            contracted, _ = contract(msd5, set(c.vertices))
            assert contracted.n == msd5.n - c.q + 1
            assert contracted.m == msd5.m - c.q
