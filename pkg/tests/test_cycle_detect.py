import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _graphs import complete, complete_bipartite, cycle, disjoint_union, path, petersen, random_graph, to_nx
from egsearch import (
    CycleWitness,
    GeneratorSpec,
    connected_components,
    cycle_spectrum_bruteforce,
    find_power_of_two_cycle,
    generate,
    graph_from_edges,
    has_cycle_of_length,
    verify_witness,
)
from egsearch.graph_core import add_edge

# frozen from cycle_spectrum_bruteforce (networkx simple_cycles agrees)
PETERSEN_SPECTRUM = {5, 6, 8, 9}


def _component_graphs(g):
    for comp in connected_components(g):
        pos = {v: i for i, v in enumerate(comp)}
        yield graph_from_edges(len(comp), [(pos[u], pos[v]) for u, v in g.edges() if u in pos])


class TestHasCycleOfLength:
    def test_k4_square(self):
        w = has_cycle_of_length(complete(4), 4)
        assert w.length == 4 and verify_witness(complete(4), w)

    def test_pentagon_has_no_square(self):
        assert has_cycle_of_length(cycle(5), 4) is None

    def test_petersen_octagon(self):
        w = has_cycle_of_length(petersen(), 8)
        assert w is not None and w.length == 8 and verify_witness(petersen(), w)

    def test_length_beyond_order(self):
        assert has_cycle_of_length(complete(4), 5) is None

    @pytest.mark.parametrize("L", [0, 1, 2, -4])
    def test_short_length_rejected(self, L):
        with pytest.raises(ValueError):
            has_cycle_of_length(complete(4), L)

    def test_anchor_is_minimum(self):
        g = disjoint_union(path(3), cycle(6))
        w = has_cycle_of_length(g, 6)
        assert w.vertices[0] == min(w.vertices) == 3


class TestSpectrum:
    def test_k4(self):
        assert cycle_spectrum_bruteforce(complete(4)) == {3, 4}

    def test_k33(self):
        assert cycle_spectrum_bruteforce(complete_bipartite(3, 3)) == {4, 6}

    def test_petersen(self):
        assert cycle_spectrum_bruteforce(petersen()) == PETERSEN_SPECTRUM

    def test_forest(self):
        assert cycle_spectrum_bruteforce(path(6)) == set()

    def test_matches_networkx_simple_cycles(self):
        rng = random.Random(21)
        for _ in range(150):
            g = random_graph(rng, rng.randint(1, 9), rng.random() * 0.6)
            ref = {len(c) for c in nx.simple_cycles(to_nx(g)) if len(c) >= 3}
            assert cycle_spectrum_bruteforce(g) == ref


class TestFindPowerOfTwo:
    def test_k4(self):
        w = find_power_of_two_cycle(complete(4))
        assert w.length == 4

    def test_pentagon(self):
        assert find_power_of_two_cycle(cycle(5)) is None

    def test_k34(self):
        assert find_power_of_two_cycle(complete_bipartite(3, 4)).length == 4

    def test_prefers_shortest(self):
        assert find_power_of_two_cycle(petersen()).length == 8

    def test_exponent_cap(self):
        assert find_power_of_two_cycle(cycle(16), max_exponent=3) is None
        assert find_power_of_two_cycle(cycle(16), max_exponent=4).length == 16

    def test_bad_exponent(self):
        with pytest.raises(ValueError):
            find_power_of_two_cycle(complete(4), max_exponent=1)

    def test_witness_in_second_component(self):
        g = disjoint_union(cycle(5), cycle(8))
        w = find_power_of_two_cycle(g)
        assert w.length == 8 and set(w.vertices) == set(range(5, 13))


class TestVerifyWitness:
    def test_k4_valid(self):
        assert verify_witness(complete(4), CycleWitness.of((0, 1, 2, 3)))

    def test_length_mismatch(self):
        assert not verify_witness(complete(4), CycleWitness((0, 1, 2), 4))

    def test_missing_closing_edge(self):
        g = cycle(5)
        assert not verify_witness(g, CycleWitness.of((0, 1, 2, 3)))

    def test_repeated_vertex(self):
        assert not verify_witness(complete(4), CycleWitness.of((0, 1, 0, 2)))

    def test_out_of_range(self):
        assert not verify_witness(complete(4), CycleWitness.of((0, 1, 9)))


def test_oracle_equivalence_connected_up_to_7():
    """The exhaustive version through order 8 lives in the acceptance suite."""
    for n in range(1, 8):
        for g in generate(GeneratorSpec(n, "all_connected")):
            spectrum = cycle_spectrum_bruteforce(g)
            for L in range(3, n + 1):
                w = has_cycle_of_length(g, L)
                assert (w is not None) == (L in spectrum), (g, L)
                if w is not None:
                    assert verify_witness(g, w) and w.length == L


@st.composite
def small_graphs(draw, max_n=11):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_from_edges(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def bipartite_graphs(draw):
    a = draw(st.integers(1, 7))
    b = draw(st.integers(1, 7))
    pairs = [(i, a + j) for i in range(a) for j in range(b)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_from_edges(a + b, [e for e, x in zip(pairs, bits) if x])


class TestProperties:
    @settings(max_examples=300, deadline=None)
    @given(small_graphs())
    def test_witness_soundness(self, g):
        for L in range(3, g.n + 1):
            w = has_cycle_of_length(g, L)
            if w is not None:
                assert w.length == L and verify_witness(g, w)
        w = find_power_of_two_cycle(g)
        if w is not None:
            assert verify_witness(g, w)

    @settings(max_examples=300, deadline=None)
    @given(small_graphs(max_n=10))
    def test_matches_oracle(self, g):
        spectrum = cycle_spectrum_bruteforce(g)
        for L in range(3, g.n + 1):
            assert (has_cycle_of_length(g, L) is not None) == (L in spectrum)

    @settings(max_examples=200, deadline=None)
    @given(bipartite_graphs())
    def test_bipartite_parity(self, g):
        for L in range(3, g.n + 1, 2):
            assert has_cycle_of_length(g, L) is None

    @settings(max_examples=200, deadline=None)
    @given(small_graphs(max_n=14))
    def test_component_locality(self, g):
        whole = find_power_of_two_cycle(g) is not None
        parts = any(find_power_of_two_cycle(h) is not None for h in _component_graphs(g))
        assert whole == parts

    @settings(max_examples=200, deadline=None)
    @given(small_graphs(max_n=12), st.randoms(use_true_random=False))
    def test_monotone_under_edge_addition(self, g, rng):
        if find_power_of_two_cycle(g) is None or g.n < 2:
            return
        for _ in range(5):
            u, v = rng.sample(range(g.n), 2)
            g = add_edge(g, u, v)
            assert find_power_of_two_cycle(g) is not None
