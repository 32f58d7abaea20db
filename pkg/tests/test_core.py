"""Graph container, classification, cycle basis, graph6 io, families."""

import pytest

import mrbounds as mb
from mrbounds import Graph
from mrbounds.core import Graph6Error, FamilyError

FIG1 = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (3, 5)])
HTREE = Graph.from_edges(6, [(0, 1), (1, 2), (1, 4), (3, 4), (4, 5)])


class TestGraph:
    def test_from_edges_normalizes(self):
        g = Graph.from_edges(3, [(2, 0), (0, 1)])
        assert g.edges == frozenset({(0, 2), (0, 1)})
        assert g.m == 2

    def test_rejects_loops_and_out_of_range(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph(2, frozenset({(1, 0)}))  # unsorted pair

    def test_adjacency_masks(self):
        g = FIG1
        assert g.adj[1] == (1 << 0) | (1 << 2) | (1 << 5)
        assert g.degree(3) == 3
        assert g.neighbors(5) == (1, 3)
        assert g.has_edge(5, 1) and not g.has_edge(0, 5)

    def test_empty_graph(self):
        g = Graph.from_edges(0)
        assert g.n == 0 and g.m == 0
        assert mb.classify(g).p == 0


class TestClassify:
    def test_kinds(self):
        deco = mb.classify(HTREE)
        assert deco.kinds == ("tree",)
        assert deco.is_forest and not deco.is_linear_forest

        deco = mb.classify(mb.path_graph(4))
        assert deco.kinds == ("path",) and deco.is_linear_forest

        deco = mb.classify(mb.cycle_graph(4))
        assert deco.kinds == ("cyclic",) and not deco.is_forest

    def test_mixed_components(self):
        g = Graph.from_edges(7, [(0, 1), (2, 3), (3, 4), (2, 4), (5, 6)])
        deco = mb.classify(g)
        assert deco.p == 3
        by_comp = dict(zip(deco.components, deco.kinds))
        assert by_comp[(0, 1)] == "path"
        assert by_comp[(2, 3, 4)] == "cyclic"
        assert by_comp[(5, 6)] == "path"

    def test_isolated_vertex_is_path(self):
        deco = mb.classify(Graph.from_edges(1))
        assert deco.kinds == ("path",)


class TestDeleteVertices:
    def test_labels_preserve_order(self):
        sub, labels = mb.delete_vertices(FIG1, {1, 3})
        assert labels == (0, 2, 4, 5)
        assert sub.n == 4 and sub.m == 0

    def test_edges_relabelled(self):
        sub, labels = mb.delete_vertices(mb.cycle_graph(5), {0})
        assert labels == (1, 2, 3, 4)
        assert sorted(sub.edges) == [(0, 1), (1, 2), (2, 3)]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            mb.delete_vertices(FIG1, {9})


class TestCycleBasis:
    def test_tree_has_empty_basis(self):
        basis = mb.cycle_basis(HTREE)
        assert basis.dimension == 0 and basis.cycles == ()
        assert basis.forest_edges == HTREE.edges

    def test_fig1_single_cycle(self):
        basis = mb.cycle_basis(FIG1)
        assert basis.dimension == 1
        (cycle,) = basis.cycles
        assert set(cycle) == {1, 2, 3, 5}

    def test_each_cycle_contains_its_nontree_edge(self, rng):
        from conftest import random_graph

        for _ in range(30):
            g = random_graph(8, 0.4, rng)
            basis = mb.cycle_basis(g)
            assert basis.dimension == len(basis.cycles) == len(basis.nontree_edges)
            for (u, v), cycle in zip(basis.nontree_edges, basis.cycles):
                assert cycle[0] == u and cycle[-1] == v
                for a, b in zip(cycle, cycle[1:]):
                    assert g.has_edge(a, b)
                assert len(set(cycle)) == len(cycle)

    def test_dimension_matches_networkx(self, rng):
        nx = pytest.importorskip("networkx")
        from conftest import random_graph

        for _ in range(20):
            g = random_graph(7, 0.45, rng)
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(g.edges)
            assert mb.cycle_basis(g).dimension == len(nx.cycle_basis(h))


class TestGraph6:
    def test_frozen_encodings(self):
        assert mb.path_graph(3).graph6() == "Bg"
        assert mb.path_graph(1).graph6() == "@"
        assert mb.cycle_graph(5).graph6() == "Dhc"
        star_last = Graph.from_edges(5, [(0, 4), (1, 4), (2, 4), (3, 4)])
        assert star_last.graph6() == "D?{"

    def test_parse_frozen(self):
        assert sorted(mb.parse_graph6("D?{").edges) == [(0, 4), (1, 4), (2, 4), (3, 4)]
        assert sorted(mb.parse_graph6("BW").edges) == [(0, 2), (1, 2)]

    def test_header_and_newline(self):
        assert mb.parse_graph6(">>graph6<<Bg\n") == mb.path_graph(3)
        assert mb.parse_graph6(b"Bg\r\n") == mb.path_graph(3)

    def test_padding_bit_error(self):
        with pytest.raises(Graph6Error) as exc:
            mb.parse_graph6("Bh")
        assert exc.value.offset == 1

    def test_header_shifts_error_offset(self):
        with pytest.raises(Graph6Error) as exc:
            mb.parse_graph6(">>graph6<<Bh")
        assert exc.value.offset == 11

    def test_truncated_body(self):
        with pytest.raises(Graph6Error) as exc:
            mb.parse_graph6("B")
        assert exc.value.offset == 1

    def test_multibyte_count_unsupported(self):
        with pytest.raises(Graph6Error) as exc:
            mb.parse_graph6("~??")
        assert exc.value.offset == 0

    def test_byte_out_of_range(self):
        with pytest.raises(Graph6Error):
            mb.parse_graph6(b"B\x20")
        with pytest.raises(Graph6Error):
            mb.parse_graph6("")

    def test_emit_cap(self):
        with pytest.raises(Graph6Error):
            mb.emit_graph6(Graph.from_edges(63))

    def test_round_trip_small(self):
        for n in range(5):
            for g in mb.enumerate_small_graphs(n):
                assert mb.parse_graph6(g.graph6()) == g

    def test_matches_networkx(self, rng):
        nx = pytest.importorskip("networkx")
        from conftest import random_graph

        for _ in range(40):
            g = random_graph(9, 0.35, rng)
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(g.edges)
            theirs = nx.to_graph6_bytes(h, header=False).strip().decode()
            assert g.graph6() == theirs
            back = nx.from_graph6_bytes(g.graph6().encode())
            assert set(map(tuple, map(sorted, back.edges()))) == set(g.edges)


class TestFamilies:
    def test_fixed_examples(self):
        assert mb.generate_family("fig1") == FIG1
        assert mb.generate_family("fig3") == HTREE
        fig4 = mb.generate_family("fig4")
        assert fig4.n == 8 and fig4.m == 8

    def test_unicyclic_smallest_is_fig1(self):
        assert mb.unicyclic_family(5, 2) == FIG1
        assert mb.generate_family("unicyclic", 5) == FIG1

    def test_star_wheel_sun_shapes(self):
        s = mb.star_graph(6)
        assert s.degree(0) == 5 and all(s.degree(v) == 1 for v in range(1, 6))
        w = mb.wheel_graph(6)
        assert w.degree(5) == 5 and all(w.degree(v) == 3 for v in range(5))
        h = mb.sun_graph(4)
        assert h.n == 8 and h.m == 8
        assert all(h.degree(i) == 3 for i in range(4))
        assert all(h.degree(4 + i) == 1 for i in range(4))

    def test_generalized_star(self):
        g = mb.generalized_star(3, 2)
        assert g.n == 7 and g.degree(0) == 3
        assert mb.generate_family("genstar") == g
        assert mb.generate_family("genstar", legs=4, leg_length=1) == mb.star_graph(5)

    def test_parametric_dispatch(self):
        assert mb.generate_family("cycle", 5) == mb.cycle_graph(5)
        assert mb.generate_family("complete", 4).m == 6

    def test_family_errors(self):
        with pytest.raises(FamilyError):
            mb.generate_family("moebius", 5)
        with pytest.raises(FamilyError):
            mb.generate_family("cycle")  # needs n
        with pytest.raises(FamilyError):
            mb.generate_family("cycle", 2)
        with pytest.raises(FamilyError):
            mb.generate_family("wheel", 3)
        with pytest.raises(FamilyError):
            mb.generate_family("star", 5, legs=3)
        with pytest.raises(FamilyError):
            mb.generate_family("genstar", legs=0)
        with pytest.raises(FamilyError):
            mb.generate_family("unicyclic", 4)
