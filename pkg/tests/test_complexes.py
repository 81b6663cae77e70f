"""Tests for simplicial complexes, exact ranks and reduced homology."""

import pytest

from src.algebra.complexes import (
    SimplicialComplex,
    f_vector,
    facet_ideal,
    graph_from_edges,
    independence_complex,
    induced_subcomplex,
    is_cone,
    matching_complex,
    path_graph,
    reduced_homology_ranks,
    simplex,
    sr_complex_of_ideal,
    stanley_reisner_ideal,
    void_complex,
)
from src.algebra.errors import ParameterRangeError, VariableIndexError, VoidComplexError
from src.algebra.linalg import exact_rank
from src.algebra.monomials import ideal_from_supports

HOLLOW_TRIANGLE = SimplicialComplex(3, ((1, 2), (1, 3), (2, 3)))
M6_FACETS = ((1, 3, 5), (1, 3, 6), (1, 4, 6), (2, 4, 6), (2, 5))


class TestExactRank:
    """Test exact_rank()"""

    def test_rational(self):
        """Should compute ranks over QQ without rounding."""
        assert exact_rank({0: {0: 1, 1: 2}, 1: {0: 3, 1: 4}}, (2, 2)) == 2
        assert exact_rank({0: {0: 1, 1: 1}, 1: {0: 1, 1: 1}}, (2, 2)) == 1

    def test_prime_field(self):
        """Should reduce entries modulo p."""
        assert exact_rank({0: {0: 2}, 1: {1: 2}}, (2, 2), 2) == 0
        assert exact_rank({0: {0: 2}, 1: {1: 2}}, (2, 2), 0) == 2
        assert exact_rank({0: {0: 2}}, (1, 1), 2) == 0

    def test_empty(self):
        """Should return 0 for empty shapes."""
        assert exact_rank({}, (0, 3)) == 0


class TestGraphs:
    """Test path_graph() and graph_from_edges()"""

    def test_path_adjacency(self):
        """Should join consecutive edges only."""
        g = path_graph(3)
        assert g.nedges == 3
        assert g.edges_adjacent(1, 2)
        assert not g.edges_adjacent(1, 3)

    def test_path_needs_an_edge(self):
        """Should reject n < 1."""
        with pytest.raises(ParameterRangeError):
            path_graph(0)

    def test_loop_and_duplicate(self):
        """Should reject loops and repeated edges."""
        with pytest.raises(ParameterRangeError):
            graph_from_edges([(1, 1)])
        with pytest.raises(ParameterRangeError):
            graph_from_edges([(1, 2), (2, 1)])


class TestMatchingComplex:
    """Test matching_complex() and independence_complex()"""

    def test_small_paths(self):
        """Should list maximal matchings of short paths."""
        assert matching_complex(path_graph(1)).facets == ((1,),)
        assert matching_complex(path_graph(3)).facets == ((1, 3), (2,))

    def test_six_edges(self):
        """Should give the five maximal matchings of the six-edge path."""
        assert matching_complex(path_graph(6)).facets == M6_FACETS

    def test_edgeless(self):
        """Should reject a graph without edges."""
        with pytest.raises(ParameterRangeError):
            matching_complex(graph_from_edges([], nverts=2))

    def test_triangle_graph(self):
        """Should give single edges as the matchings of a triangle."""
        triangle = graph_from_edges([(1, 2), (2, 3), (1, 3)])
        assert matching_complex(triangle).facets == ((1,), (2,), (3,))

    def test_independence_of_path(self):
        """Should match M(L_n) with the independence complex of a path on n vertices."""
        assert independence_complex(path_graph(2)).facets == ((1, 3), (2,))
        assert independence_complex(path_graph(5)).facets == M6_FACETS


class TestStanleyReisner:
    """Test facet_ideal(), stanley_reisner_ideal() and sr_complex_of_ideal()"""

    def test_facet_ideal(self):
        """Should multiply out each facet."""
        ideal = facet_ideal(matching_complex(path_graph(6)))
        assert str(ideal) == "(x1x3x5, x1x3x6, x1x4x6, x2x4x6, x2x5)"

    def test_facet_ideal_void(self):
        """Should reject the void complex."""
        with pytest.raises(VoidComplexError):
            facet_ideal(void_complex(2))

    def test_edge_ideal_of_path(self):
        """Should give the path edge ideal as the Stanley-Reisner ideal of M(L_n)."""
        assert stanley_reisner_ideal(matching_complex(path_graph(3))) == ideal_from_supports(3, [(1, 2), (2, 3)])
        expected = ideal_from_supports(5, [(1, 2), (2, 3), (3, 4), (4, 5)])
        assert stanley_reisner_ideal(matching_complex(path_graph(5))) == expected

    def test_simplex_has_zero_ideal(self):
        """Should have no non-faces."""
        assert stanley_reisner_ideal(simplex(3)).is_zero

    def test_sr_complex(self):
        """Should list facets of the complex of non-members."""
        assert sr_complex_of_ideal(ideal_from_supports(2, [(1, 2)])).facets == ((1,), (2,))
        assert sr_complex_of_ideal(ideal_from_supports(3, [(1, 2), (2, 3)])).facets == ((1, 3), (2,))
        assert sr_complex_of_ideal(ideal_from_supports(2, [(1,), (2,)])).is_irrelevant

    def test_round_trip(self):
        """Should recover the ideal from its complex."""
        ideal = facet_ideal(matching_complex(path_graph(6)))
        assert stanley_reisner_ideal(sr_complex_of_ideal(ideal)) == ideal


class TestInducedSubcomplex:
    """Test induced_subcomplex()"""

    def test_two_points(self):
        """Should keep only faces inside W."""
        delta = matching_complex(path_graph(6))
        assert induced_subcomplex(delta, {1, 2}).facets == ((1,), (2,))

    def test_empty_set(self):
        """Should give the irrelevant complex for W = ∅."""
        assert induced_subcomplex(HOLLOW_TRIANGLE, set()).is_irrelevant

    def test_whole_vertex_set(self):
        """Should return the complex itself."""
        assert induced_subcomplex(HOLLOW_TRIANGLE, {1, 2, 3}) == HOLLOW_TRIANGLE

    def test_out_of_range(self):
        """Should reject vertices outside the complex."""
        with pytest.raises(VariableIndexError):
            induced_subcomplex(HOLLOW_TRIANGLE, {4})


class TestReducedHomology:
    """Test reduced_homology_ranks()"""

    def test_circle(self):
        """Should find one loop in a hollow triangle."""
        assert reduced_homology_ranks(HOLLOW_TRIANGLE).nonzero() == {1: 1}
        assert reduced_homology_ranks(HOLLOW_TRIANGLE, 2).nonzero() == {1: 1}

    def test_simplex(self):
        """Should vanish on a solid simplex."""
        ranks = reduced_homology_ranks(simplex(3))
        assert ranks.nonzero() == {}
        assert is_cone(simplex(3))

    def test_matching_complex_six(self):
        """Should find a single 1-cycle for M(L_6)."""
        assert reduced_homology_ranks(matching_complex(path_graph(6))).nonzero() == {1: 1}

    def test_irrelevant(self):
        """Should put rank 1 in dimension -1."""
        assert reduced_homology_ranks(SimplicialComplex(2, ((),))).nonzero() == {-1: 1}

    def test_void(self):
        """Should have no homology at all."""
        assert reduced_homology_ranks(void_complex(2)).ranks == {}

    def test_two_points(self):
        """Should have rank 1 in dimension 0."""
        ranks = reduced_homology_ranks(SimplicialComplex(2, ((1,), (2,))))
        assert ranks.nonzero() == {0: 1}
        assert ranks.field == "QQ"

    def test_bad_characteristic(self):
        """Should reject a composite characteristic."""
        with pytest.raises(ParameterRangeError):
            reduced_homology_ranks(HOLLOW_TRIANGLE, 4)

    def test_f_vector(self):
        """Should count faces including the empty face."""
        assert f_vector(HOLLOW_TRIANGLE) == {-1: 1, 0: 3, 1: 3}
