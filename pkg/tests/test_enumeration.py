import io
import random

import pytest

from _graphs import atlas, complete, complete_bipartite, cycle, labelled_classes, path, petersen, prism, random_graph
from egsearch import (
    Graph6Error,
    GeneratorSpec,
    canonical_form,
    certificate,
    encode_graph6,
    generate,
    ingest_graph6,
    parse_graph6,
)
from egsearch.enumeration import IngestError
from egsearch.graph_core import is_connected, relabel

# Regression fixtures for connected cubic graphs. Orders 4..8 come from the
# labelled sweep; 10..14 from agreement of the independent routes below.
CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}


def _shuffled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return relabel(g, perm)


class TestCanonicalForm:
    def test_k4_single_certificate(self):
        rng = random.Random(0)
        assert {certificate(_shuffled(complete(4), rng)) for _ in range(20)} == {certificate(complete(4))}

    def test_cycle_vs_path(self):
        assert certificate(cycle(5)) != certificate(path(5))

    def test_labeling_maps_to_canonical_graph(self):
        g = petersen()
        cf = canonical_form(g)
        assert all(cf.graph.adjacent(cf.labeling[u], cf.labeling[v]) for u, v in g.edges())
        assert cf.certificate == encode_graph6(cf.graph)

    def test_automorphisms_are_automorphisms(self):
        for g in (petersen(), complete_bipartite(3, 4), prism()):
            for perm in canonical_form(g).automorphism_generators:
                assert relabel(g, perm) == g

    def test_invariant_under_relabelling(self):
        rng = random.Random(7)
        for _ in range(1000):
            g = random_graph(rng, rng.randint(1, 12), rng.random())
            assert certificate(_shuffled(g, rng)) == certificate(g)

    def test_regular_graphs_under_relabelling(self):
        # refinement alone cannot split these, so the search tree is exercised
        rng = random.Random(8)
        for g in [petersen(), prism(), complete_bipartite(4, 4), *generate(GeneratorSpec(12, "cubic_connected"))][:40]:
            for _ in range(5):
                assert certificate(_shuffled(g, rng)) == certificate(g)

    def test_separates_small_classes(self):
        graphs = atlas(7)
        assert len({certificate(g) for g in graphs}) == len(graphs)


class TestGeneratorSpec:
    def test_odd_cubic(self):
        with pytest.raises(ValueError):
            GeneratorSpec(5, "cubic_connected")

    def test_small_degree_mode(self):
        with pytest.raises(ValueError):
            GeneratorSpec(3, "min_degree_3")

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            GeneratorSpec(6, "planar")

    def test_insertion_is_cubic_only(self):
        with pytest.raises(ValueError):
            GeneratorSpec(6, "min_degree_3", method="insertion")


class TestGenerate:
    def test_k4_only_cubic_on_four(self):
        assert [encode_graph6(g) for g in generate(GeneratorSpec(4, "cubic_connected"))] == ["C~"]

    def test_two_cubic_on_six(self):
        got = {certificate(g) for g in generate(GeneratorSpec(6, "cubic_connected"))}
        assert got == {certificate(complete_bipartite(3, 3)), certificate(prism())}

    @pytest.mark.parametrize("method", ["augment", "insertion", "filter"])
    def test_cubic_counts(self, method):
        for n in range(4, 13, 2):
            gs = list(generate(GeneratorSpec(n, "cubic_connected", method=method)))
            assert len(gs) == CUBIC_COUNTS[n]
            assert all(set(g.degrees()) == {3} and is_connected(g) for g in gs)

    @pytest.mark.parametrize("n", [10, 12])
    def test_cubic_routes_agree(self, n):
        routes = [
            {certificate(g) for g in generate(GeneratorSpec(n, "cubic_connected", method=m))}
            for m in ("augment", "insertion", "filter")
        ]
        assert routes[0] == routes[1] == routes[2]

    @pytest.mark.slow
    def test_cubic_14(self):
        ins = [certificate(g) for g in generate(GeneratorSpec(14, "cubic_connected", method="insertion"))]
        aug = {certificate(g) for g in generate(GeneratorSpec(14, "cubic_connected", method="augment"))}
        assert len(ins) == len(set(ins)) == CUBIC_COUNTS[14]
        assert set(ins) == aug

    @pytest.mark.parametrize("n", [4, 6, pytest.param(8, marks=pytest.mark.slow)])
    def test_cubic_matches_labelled_sweep(self, n):
        ours = {certificate(g) for g in generate(GeneratorSpec(n, "cubic_connected"))}
        assert ours == labelled_classes(n, 3, 3)

    @pytest.mark.parametrize("n", range(4, 8))
    def test_min_degree_3_matches_labelled_sweep(self, n):
        ours = [certificate(g) for g in generate(GeneratorSpec(n, "min_degree_3"))]
        assert len(ours) == len(set(ours))
        assert set(ours) == labelled_classes(n, 3)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_all_connected_matches_atlas(self, n):
        ours = [certificate(g) for g in generate(GeneratorSpec(n, "all_connected"))]
        ref = {certificate(g) for g in atlas(7) if g.n == n and is_connected(g)}
        assert len(ours) == len(set(ours)) and set(ours) == ref

    @pytest.mark.parametrize("n", range(4, 9))
    def test_min_degree_3_routes_agree(self, n):
        a = {certificate(g) for g in generate(GeneratorSpec(n, "min_degree_3", method="augment"))}
        b = {certificate(g) for g in generate(GeneratorSpec(n, "min_degree_3", method="filter"))}
        assert a == b

    def test_deterministic(self):
        for spec in (GeneratorSpec(8, "min_degree_3"), GeneratorSpec(12, "cubic_connected")):
            first = [encode_graph6(g) for g in generate(spec)]
            assert first == [encode_graph6(g) for g in generate(spec)]

    def test_canonical_output(self):
        for g in generate(GeneratorSpec(8, "cubic_connected", canonical=True)):
            assert encode_graph6(g) == certificate(g)


class TestIngest:
    def test_single_k4(self):
        assert list(ingest_graph6(io.StringIO("C~\n"))) == [complete(4)]

    def test_empty(self):
        assert list(ingest_graph6(io.StringIO(""))) == []

    def test_lenient_malformed_second_line(self):
        errors = []
        items = list(ingest_graph6(io.StringIO("C~\nC~~\n"), errors=errors))
        assert items[0] == complete(4)
        assert isinstance(items[1], IngestError) and items[1].line_number == 2
        assert errors == [items[1]]

    def test_strict_raises(self):
        with pytest.raises(Graph6Error, match="line 2"):
            list(ingest_graph6(io.StringIO("C~\nC~~\n"), strict=True))

    def test_header_and_blank_lines(self):
        assert list(ingest_graph6(["\n", ">>graph6<<C~\n", "  \n", "@\n"])) == [complete(4), parse_graph6("@")]
