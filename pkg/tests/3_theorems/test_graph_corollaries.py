import numpy as np
import pytest

from tuttekit.cli.fuzz import random_multigraph
from tuttekit.engines import tutte
from tuttekit.errors import (
    NotApplicable, PreconditionError, ValidityRangeError
)
from tuttekit.graphs import (
    Multigraph, complete_graph, cycle_graph, disjoint_union,
    edge_connectivity, three_way_cut_size
)
from tuttekit.theorems import graph_corollaries as gc


def k3():
    return complete_graph(3)


def k4():
    return complete_graph(4)


def two_triangles():
    return disjoint_union(k3(), k3())


class TestGjk:
    def test_k3(self):
        result = gc.graph_gjk_iff(k3(), 1)
        assert result
        assert result.details['identity_holds']
        assert result.certificate is None

    def test_k4_at_its_connectivity(self):
        assert gc.graph_gjk_iff(k4(), 2).details['identity_holds']

    def test_k4_beyond_its_connectivity(self):
        result = gc.graph_gjk_iff(k4(), 3)
        assert result, 'Both sides of the equivalence are false'
        assert result.certificate == (0, 10, 6)

    def test_subdivided_k4(self):
        graph = k4().subdivide(0)
        assert edge_connectivity(graph) == 2
        assert gc.graph_gjk_iff(graph, 1).details['identity_holds']
        assert not gc.graph_gjk_iff(graph, 2).details['identity_holds']

    def test_tree_below_zero(self):
        tree = Multigraph(3, ((0, 1), (1, 2)))
        result = gc.graph_gjk_iff(tree, 1)
        assert result
        assert result.certificate[0] == -1

    def test_via_matroid(self):
        for k in range(5):
            assert gc.graph_gjk_via_matroid(k4(), k)

    def test_needs_connected_graph(self):
        with pytest.raises(NotApplicable):
            gc.graph_gjk_iff(two_triangles(), 0)

    def test_random_connected_multigraphs(self):
        rng = np.random.default_rng(13)
        for _ in range(30):
            graph = random_multigraph(rng, 8, connected=True)
            if graph.n < 2:
                continue
            poly = tutte(graph)
            for k in range(edge_connectivity(graph) + 2):
                assert gc.graph_gjk_iff(graph, k, poly), (graph, k)


class TestCg:
    def test_k4(self):
        at_x_1 = tutte(k4()).specialize_x_at_1()
        for k in range(3):
            for j in range(4):
                if gc.cg_in_range(k4(), j, k):
                    assert gc.graph_cg_coeff(k4(), j, k) == at_x_1[j]

    def test_k4_j0_uses_vertex_stars(self):
        assert gc.graph_cg_coeff(k4(), 0, 2) == 6

    def test_connectivity_precondition(self):
        with pytest.raises(PreconditionError):
            gc.graph_cg_coeff(cycle_graph(5), 4, 2)

    def test_range(self):
        # C5: g = 1, k = 1: 2j > -4 and j <= 1
        assert gc.cg_in_range(cycle_graph(5), 1, 1)
        with pytest.raises(ValidityRangeError):
            gc.graph_cg_coeff(cycle_graph(5), 2, 1)

    def test_random_connected_multigraphs(self):
        rng = np.random.default_rng(17)
        for _ in range(30):
            graph = random_multigraph(rng, 8, connected=True)
            if graph.n < 2:
                continue
            at_x_1 = tutte(graph).specialize_x_at_1()
            g = gc.cyclomatic_number(graph)
            for k in range(edge_connectivity(graph)):
                for j in range(g + 1):
                    if gc.cg_in_range(graph, j, k):
                        assert gc.graph_cg_coeff(graph, j, k) == at_x_1[j]


class TestThreeComponentBound:
    def test_k3(self):
        result = gc.lemma36_bound_check(k3(), 1)
        assert result
        assert result.details['f2'] == 0
        assert result.details['bound'] == 0

    def test_c4(self):
        result = gc.lemma36_bound_check(cycle_graph(4), 1)
        assert result
        assert result.details['three_way_cut'] == 3

    def test_single_edge_is_vacuous(self):
        result = gc.lemma36_bound_check(Multigraph(2, ((0, 1),)), 0)
        assert result
        assert result.details['f2'] is None

    def test_uses_three_way_cut(self):
        rng = np.random.default_rng(36)
        checked = 0
        while checked < 15:
            graph = random_multigraph(rng, 8, connected=True)
            if graph.n < 3:
                continue
            k = edge_connectivity(graph) - 1
            result = gc.lemma36_bound_check(graph, k)
            cut = three_way_cut_size(graph)
            assert result, (graph, result.certificate)
            assert result.details['three_way_cut'] == cut, graph
            assert result.details['f2'] == graph.m - cut, graph
            checked += 1


class TestCorollaryX:
    def test_k3(self):
        assert [gc.graph_corollary_x(k3(), i) for i in range(3)] == [1, 1, 1]
        assert gc.graph_corollary_x_iff(k3())

    def test_two_triangles(self):
        graph = two_triangles()
        values = [gc.graph_corollary_x(graph, i) for i in range(5)]
        assert values == [1, 2, 3, 2, 1]
        result = gc.graph_corollary_x_iff(graph)
        assert result
        assert result.details['girth'] == 3

    def test_out_of_range(self):
        graph = Multigraph(3, ((0, 1), (1, 2), (0, 0), (1, 1)))
        assert not gc.corollary_x_in_range(graph, 0)
        with pytest.raises(ValidityRangeError):
            gc.graph_corollary_x(graph, 0)

    def test_forest(self):
        graph = Multigraph(4, ((0, 1), (2, 3)))
        assert gc.graph_corollary_x(graph, 2) == 1
        assert gc.graph_corollary_x_iff(graph)
