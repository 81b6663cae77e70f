"""Closed forms for the matching complex of a path with n edges.

F(L_n) below is the facet ideal of that matching complex, L'_m is a path with m edges
whose labels start after `offset`, and n = 3p + d with d in {0, 1, 2} throughout.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

from .errors import ParameterRangeError
from .homology import InvariantReport
from .linalg import field_label
from .monomials import (
    MonomialIdeal,
    PrimeComponent,
    ideal_from_supports,
    ideal_sum,
    monomial,
    scale,
    unit_ideal,
)
from .settings import DEFAULT_CHARACTERISTIC, HEIGHT_ERRATA, CoverKind, InvariantSource, Side

logger = logging.getLogger(__name__)

Facet = Tuple[int, ...]

_SMALL_FACETS: Dict[int, List[Facet]] = {
    1: [(1,)],
    2: [(1,), (2,)],
    3: [(1, 3), (2,)],
}


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterRangeError(message)


def line_facets(n: int, offset: int = 0) -> List[Facet]:
    """Maximal matchings of the path with n edges, labels shifted by `offset`.

    For n >= 4 a facet starts at 1 or 2, ends at n-1 or n, and consecutive labels
    differ by 2 or 3.
    """
    _require(n >= 1, f"line_facets needs n >= 1, got {n}")
    _require(offset >= 0, f"offset must be >= 0, got {offset}")
    if n in _SMALL_FACETS:
        facets = _SMALL_FACETS[n]
    else:
        facets = []
        stack: List[Facet] = [(1,), (2,)]
        while stack:
            seq = stack.pop()
            if seq[-1] >= n - 1:
                facets.append(seq)
                continue
            stack.extend(seq + (seq[-1] + gap,) for gap in (2, 3) if seq[-1] + gap <= n)
    return sorted(tuple(i + offset for i in f) for f in facets)


def satisfies_gap_law(facet: Sequence[int], n: int) -> bool:
    if not facet:
        return False
    gaps = {b - a for a, b in zip(facet, facet[1:])}
    return facet[0] in (1, 2) and facet[-1] in (n - 1, n) and gaps <= {2, 3}


def line_facet_ideal(n: int, offset: int = 0, nvars: Optional[int] = None) -> MonomialIdeal:
    """F(L_n) on labels offset+1..offset+n inside k[x_1..x_nvars].

    n = 0 and n = -1 give the unit ideal.
    """
    _require(n >= -1, f"line_facet_ideal needs n >= -1, got {n}")
    if nvars is None:
        nvars = max(n, 0) + offset
    if n <= 0:
        return unit_ideal(nvars)
    return ideal_from_supports(nvars, line_facets(n, offset))


@dataclass(frozen=True)
class LineDecomposition:
    """Pieces of the recursion F(L_n) = J + K.

    With the left split J = x1 F(L'_{n-2}) and K = x2 F(L'_{n-3}); from n = 5 on,
    J ∩ K = x1x2 P with P = M + N, M = x4 F(L'_{n-5}) and N = x3x5 F(L'_{n-6}).
    """

    n: int
    J: MonomialIdeal
    K: MonomialIdeal
    side: Side = Side.LEFT
    P: Optional[MonomialIdeal] = None
    M: Optional[MonomialIdeal] = None
    N: Optional[MonomialIdeal] = None


def recursion_split(n: int, side: Side = Side.LEFT) -> LineDecomposition:
    _require(n >= 2, f"recursion_split needs n >= 2, got {n}")
    if side is Side.LEFT:
        J = scale(monomial(1), line_facet_ideal(n - 2, offset=2, nvars=n))
        K = scale(monomial(2), line_facet_ideal(n - 3, offset=3, nvars=n))
    else:
        J = scale(monomial(n), line_facet_ideal(n - 2, nvars=n))
        K = scale(monomial(n - 1), line_facet_ideal(n - 3, nvars=n))
    return LineDecomposition(n, J, K, side)


def line_decomposition(n: int) -> LineDecomposition:
    _require(n >= 5, f"line_decomposition needs n >= 5, got {n}")
    split = recursion_split(n)
    M = scale(monomial(4), line_facet_ideal(n - 5, offset=5, nvars=n))
    N = scale(monomial(3, 5), line_facet_ideal(n - 6, offset=6, nvars=n))
    return LineDecomposition(n, split.J, split.K, Side.LEFT, ideal_sum(M, N), M, N)


def p_ideal(n: int) -> MonomialIdeal:
    """P_n = x4 F(L'_{n-5}) + x3x5 F(L'_{n-6})."""
    _require(n >= 5, f"p_ideal needs n >= 5, got {n}")
    return line_decomposition(n).P


@dataclass(frozen=True)
class CoverMember:
    kind: CoverKind
    params: Tuple[int, ...]
    vars: FrozenSet[int]

    @property
    def key(self) -> Tuple[int, ...]:
        return tuple(sorted(self.vars))

    @property
    def label(self) -> str:
        if not self.params:
            return self.kind.value
        if len(self.params) == 1:
            return f"{self.kind.value}_{self.params[0]}"
        return f"{self.kind.value}_{{{','.join(str(k) for k in self.params)}}}"

    def __str__(self) -> str:
        return f"{self.label} = (" + ", ".join(f"x{i}" for i in self.key) + ")"


@dataclass(frozen=True)
class CoverFamily:
    """The named minimal vertex covers of M(L_n)."""

    n: int
    members: Tuple[CoverMember, ...]

    def __post_init__(self):
        sets = [m.vars for m in self.members]
        if len(set(sets)) != len(sets):
            raise ParameterRangeError(f"Repeated cover in the family for n={self.n}")

    def __len__(self) -> int:
        return len(self.members)

    def vertex_sets(self) -> List[FrozenSet[int]]:
        return sorted((m.vars for m in self.members), key=lambda s: tuple(sorted(s)))

    def components(self) -> List[PrimeComponent]:
        return [PrimeComponent(s) for s in self.vertex_sets()]


def _member(kind: CoverKind, params: Tuple[int, ...], indices) -> CoverMember:
    return CoverMember(kind, params, frozenset(indices))


_A, _A1, _B, _B1, _C, _D = CoverKind.A, CoverKind.A_PRIME, CoverKind.B, CoverKind.B_PRIME, CoverKind.C, CoverKind.D

_SMALL_FAMILIES: Dict[int, Tuple[CoverMember, ...]] = {
    1: (_member(_A, (1,), {1}),),
    2: (_member(_A, (1,), {1, 2}),),
    3: (_member(_A, (1,), {1, 2}), _member(_A1, (1,), {2, 3})),
    4: (_member(_A, (1,), {1, 2}), _member(_A1, (1,), {3, 4}), _member(_D, (), {1, 4})),
    5: (_member(_A, (1,), {1, 2}), _member(_A1, (1,), {4, 5}), _member(_A, (2,), {2, 3, 4})),
    6: (
        _member(_A, (1,), {1, 2}),
        _member(_A1, (1,), {5, 6}),
        _member(_A, (2,), {2, 3, 4}),
        _member(_A, (3,), {3, 4, 5}),
        _member(_B, (1,), {1, 4, 5}),
        _member(_B1, (1,), {2, 3, 6}),
    ),
    7: (
        _member(_A, (1,), {1, 2}),
        _member(_A1, (1,), {6, 7}),
        _member(_A, (2,), {2, 3, 4}),
        _member(_A, (3,), {3, 4, 5}),
        _member(_A, (4,), {4, 5, 6}),
        _member(_B, (1,), {1, 4, 5}),
        _member(_B1, (1,), {3, 4, 7}),
        _member(_D, (), {1, 4, 7}),
    ),
}


def omega_formula(n: int) -> CoverFamily:
    """The parameterized family, valid from n = 6 on and used for n >= 8."""
    _require(n >= 6, f"The parameterized cover family needs n >= 6, got {n}")
    p, d = divmod(n, 3)
    members = [_member(_A, (1,), {1, 2})]
    members += [_member(_A, (i,), {i, i + 1, i + 2}) for i in range(2, n - 2)]
    members.append(_member(_A1, (1,), {n - 1, n}))
    for j in range(1, p):
        members.append(_member(_B, (j,), {3 * l - 2 for l in range(1, j + 2)} | {3 * j + 2}))
    for j in range(1, p):
        members.append(_member(_B1, (j,), {n - 3 * (l - 1) for l in range(1, j + 2)} | {n - 3 * j - 1}))
    top = p - 1 if d == 2 else p - 2
    for l in range(1, top + 1):
        for k in range(2, n - 3 * (l + 1) + 1):
            indices = {k, k + 3 * l + 2} | {k + 3 * j - 2 for j in range(1, l + 2)}
            members.append(_member(_C, (k, l), indices))
    if d == 1:
        members.append(_member(_D, (), {3 * j + 1 for j in range(0, p + 1)}))
    return CoverFamily(n, tuple(members))


def omega(n: int) -> CoverFamily:
    """Minimal vertex covers of M(L_n) as named members: listed for n <= 7, by formula after."""
    _require(n >= 1, f"omega needs n >= 1, got {n}")
    if n in _SMALL_FAMILIES:
        return CoverFamily(n, _SMALL_FAMILIES[n])
    return omega_formula(n)


class PdReg(NamedTuple):
    pd: int
    reg: int


def height_discrepancy(n: int, height: int) -> Optional[str]:
    """Note for n where the published height statement differs from the decomposition."""
    printed = HEIGHT_ERRATA.get(n)
    if printed is None or printed == height:
        return None
    return f"height(F(L_{n})) = {height} from the decomposition; the published corollary prints {printed}"


def closed_form_invariants(n: int) -> InvariantReport:
    _require(n >= 1, f"closed_form_invariants needs n >= 1, got {n}")
    p, d = divmod(n, 3)
    pd = p if d in (0, 1) else p + 1
    if n == 1:
        reg = 1
    else:
        reg = 2 * p if d in (0, 1) else 2 * p + 1
    height = 1 if n == 1 else 2
    note = height_discrepancy(n, height)
    return InvariantReport(
        n=n,
        nvars=n,
        pd=pd,
        reg=reg,
        depth=2 * p if d == 0 else 2 * p + 1,
        height=height,
        bight=p + 1 if d in (0, 1) else p + 2,
        source=InvariantSource.CLOSED_FORM,
        field=field_label(DEFAULT_CHARACTERISTIC),
        flags=[note] if note else [],
    )


def sr_closed_form(n: int) -> PdReg:
    """pd and reg of the Stanley-Reisner ideal of M(L_n), the edge ideal of a path on n vertices."""
    _require(n >= 2, f"sr_closed_form needs n >= 2, got {n}")
    p, d = divmod(n, 3)
    if d in (0, 1):
        return PdReg(2 * p - 1, p + 1)
    return PdReg(2 * p, p + 2)


def p_ideal_closed_form(n: int) -> PdReg:
    """reg(P_n) exactly and an upper bound for pd(P_n)."""
    _require(n >= 5, f"p_ideal_closed_form needs n >= 5, got {n}")
    p, d = divmod(n, 3)
    if d in (0, 1):
        return PdReg(p - 1, 2 * p - 1)
    return PdReg(p, 2 * p)
