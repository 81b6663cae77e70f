"""Simplicial complexes: matching complexes, Stanley-Reisner correspondence, reduced homology."""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import DegenerateIdealError, ParameterRangeError, VariableIndexError, VoidComplexError
from .linalg import check_characteristic, exact_rank, field_label
from .monomials import Monomial, MonomialIdeal, minimal_transversals

logger = logging.getLogger(__name__)

Face = Tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices 1..nverts; edge i (1-based) is the variable x_i."""

    nverts: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ParameterRangeError(f"Loop at vertex {u}")
            if not (1 <= u <= self.nverts and 1 <= v <= self.nverts):
                raise VariableIndexError(f"Edge ({u}, {v}) leaves vertex range 1..{self.nverts}")
            key = frozenset((u, v))
            if key in seen:
                raise ParameterRangeError(f"Repeated edge ({u}, {v})")
            seen.add(key)
        object.__setattr__(self, "edges", tuple((u, v) for u, v in self.edges))

    @property
    def nedges(self) -> int:
        return len(self.edges)

    def edges_adjacent(self, i: int, j: int) -> bool:
        """Edges x_i and x_j (distinct labels) share an endpoint."""
        if i == j:
            return False
        return bool(set(self.edges[i - 1]) & set(self.edges[j - 1]))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.nverts + 1))
        g.add_edges_from(self.edges)
        return g

    def edge_adjacency(self) -> nx.Graph:
        """Graph on edge labels 1..nedges joining edges that share an endpoint."""
        label = {frozenset(e): i for i, e in enumerate(self.edges, start=1)}
        line = nx.line_graph(self.to_networkx())
        return nx.relabel_nodes(line, {node: label[frozenset(node)] for node in line.nodes})


def path_graph(n: int) -> Graph:
    """The path with n edges x_i = {v_i, v_{i+1}}."""
    if n < 1:
        raise ParameterRangeError(f"A path needs at least one edge, got n={n}")
    return Graph(n + 1, tuple((i, i + 1) for i in range(1, n + 1)))


def graph_from_edges(edges: Iterable[Tuple[int, int]], nverts: Optional[int] = None) -> Graph:
    edges = tuple(edges)
    if nverts is None:
        nverts = max((max(e) for e in edges), default=0)
    return Graph(nverts, edges)


def _canonical_facets(facets: Iterable[Iterable[int]]) -> Tuple[Face, ...]:
    unique = sorted({frozenset(f) for f in facets}, key=len, reverse=True)
    kept: List[FrozenSet[int]] = []
    for f in unique:
        if not any(f < k for k in kept):
            kept.append(f)
    return tuple(sorted(tuple(sorted(f)) for f in kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on vertices 1..nverts, stored by its facets.

    `facets == ()` is the void complex; `facets == ((),)` is the irrelevant complex.
    """

    nverts: int
    facets: Tuple[Face, ...] = ()

    def __post_init__(self):
        facets = _canonical_facets(self.facets)
        for f in facets:
            if f and (f[0] < 1 or f[-1] > self.nverts):
                raise VariableIndexError(f"Facet {f} leaves vertex range 1..{self.nverts}")
        object.__setattr__(self, "facets", facets)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == ((),)

    @property
    def dimension(self) -> int:
        """Largest facet size minus one; -1 for {∅} and -2 for the void complex."""
        return max((len(f) for f in self.facets), default=-1) - 1

    def contains_face(self, face: Iterable[int]) -> bool:
        face = set(face)
        return any(face <= set(f) for f in self.facets)

    def __str__(self) -> str:
        if self.is_void:
            return "void"
        return "<" + ", ".join("{" + ",".join(f"x{i}" for i in f) + "}" for f in self.facets) + ">"


def void_complex(nverts: int) -> SimplicialComplex:
    return SimplicialComplex(nverts, ())


def simplex(nverts: int) -> SimplicialComplex:
    return SimplicialComplex(nverts, (tuple(range(1, nverts + 1)),))


def _maximal_independent_sets(g: nx.Graph) -> List[Face]:
    return [tuple(sorted(c)) for c in nx.find_cliques(nx.complement(g))]


def independence_complex(g: Graph) -> SimplicialComplex:
    """Faces are the independent vertex sets of g."""
    if g.nverts == 0:
        raise ParameterRangeError("Independence complex of the empty graph")
    return SimplicialComplex(g.nverts, _maximal_independent_sets(g.to_networkx()))


def matching_complex(g: Graph) -> SimplicialComplex:
    """Faces are the matchings of g; facets are its maximal matchings."""
    if g.nedges == 0:
        raise ParameterRangeError("Matching complex of an edgeless graph")
    facets = _maximal_independent_sets(g.edge_adjacency())
    logger.debug(f"{len(facets)} maximal matchings on {g.nedges} edges")
    return SimplicialComplex(g.nedges, facets)


def facet_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    if delta.is_void:
        raise VoidComplexError("Facet ideal of the void complex")
    return MonomialIdeal(delta.nverts, tuple(Monomial(frozenset(f)) for f in delta.facets))


def stanley_reisner_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """Generated by the minimal non-faces, i.e. minimal transversals of facet complements."""
    if delta.is_void:
        raise VoidComplexError("Stanley-Reisner ideal of the void complex")
    ground = frozenset(range(1, delta.nverts + 1))
    complements = [ground - set(f) for f in delta.facets]
    non_faces = minimal_transversals(complements)
    return MonomialIdeal(delta.nverts, tuple(Monomial(s) for s in non_faces))


def sr_complex_of_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose faces are the squarefree monomials outside `ideal`.

    Its facets are the complements of the minimal vertex covers of G(ideal).
    """
    if not ideal.is_proper:
        raise DegenerateIdealError(f"Stanley-Reisner complex needs a proper ideal, got {ideal}")
    ground = frozenset(range(1, ideal.nvars + 1))
    covers = minimal_transversals(ideal.supports)
    return SimplicialComplex(ideal.nvars, tuple(ground - c for c in covers))


def induced_subcomplex(delta: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    """Faces of delta contained in `vertices`."""
    w = frozenset(vertices)
    if any(v < 1 or v > delta.nverts for v in w):
        raise VariableIndexError(f"{sorted(w)} is not a subset of 1..{delta.nverts}")
    return SimplicialComplex(delta.nverts, tuple(w & set(f) for f in delta.facets))


def faces(delta: SimplicialComplex) -> Dict[int, List[Face]]:
    """All faces grouped by dimension (including -1 for ∅), each list in lex order."""
    by_size: Dict[int, set] = {}
    for facet in delta.facets:
        for k in range(len(facet) + 1):
            by_size.setdefault(k, set()).update(combinations(facet, k))
    return {k - 1: sorted(fs) for k, fs in sorted(by_size.items())}


def f_vector(delta: SimplicialComplex) -> Dict[int, int]:
    return {d: len(fs) for d, fs in faces(delta).items()}


def is_cone(delta: SimplicialComplex) -> bool:
    if delta.is_void:
        return False
    apex = set(delta.facets[0]).intersection(*delta.facets[1:])
    return bool(apex)


@dataclass(frozen=True)
class HomologyRanks:
    """Ranks of reduced homology by dimension, over QQ or GF(p)."""

    characteristic: int
    ranks: Dict[int, int] = field(default_factory=dict)

    def rank(self, d: int) -> int:
        return self.ranks.get(d, 0)

    @property
    def field(self) -> str:
        return field_label(self.characteristic)

    def nonzero(self) -> Dict[int, int]:
        return {d: r for d, r in sorted(self.ranks.items()) if r}


def _boundary_entries(upper: Sequence[Face], lower_index: Dict[Face, int]) -> Dict[int, Dict[int, int]]:
    # ∂[v_0 < ... < v_d] = Σ (-1)^i [drop v_i]
    entries: Dict[int, Dict[int, int]] = {}
    for col, face in enumerate(upper):
        for i in range(len(face)):
            row = lower_index[face[:i] + face[i + 1:]]
            entries.setdefault(row, {})[col] = -1 if i % 2 else 1
    return entries


def reduced_homology_ranks(delta: SimplicialComplex, characteristic: int = 0) -> HomologyRanks:
    """Reduced homology ranks in dimensions -1..dim delta from the augmented chain complex."""
    check_characteristic(characteristic)
    if delta.is_void:
        return HomologyRanks(characteristic, {})
    top = delta.dimension
    if is_cone(delta):
        return HomologyRanks(characteristic, {d: 0 for d in range(-1, top + 1)})

    chains = faces(delta)
    boundary_rank: Dict[int, int] = {}
    for d in range(0, top + 1):
        lower_index = {f: k for k, f in enumerate(chains[d - 1])}
        entries = _boundary_entries(chains[d], lower_index)
        shape = (len(chains[d - 1]), len(chains[d]))
        boundary_rank[d] = exact_rank(entries, shape, characteristic)

    ranks = {
        d: len(chains[d]) - boundary_rank.get(d, 0) - boundary_rank.get(d + 1, 0)
        for d in range(-1, top + 1)
    }
    return HomologyRanks(characteristic, ranks)
