"""Monomial core: exact arithmetic on squarefree monomials and monomial ideals."""

import logging
import re
from dataclasses import dataclass
from functools import reduce
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from .errors import (
    AmbientMismatchError,
    DegenerateIdealError,
    NonSquarefreeError,
    VariableIndexError,
)

logger = logging.getLogger(__name__)

_VARIABLE = re.compile(r"x(\d+)")


@dataclass(frozen=True)
class Monomial:
    """A squarefree monomial, stored as the set of its variable indices (1-based)."""

    vars: FrozenSet[int] = frozenset()

    def __post_init__(self):
        indices = frozenset(self.vars)
        bad = [i for i in indices if not isinstance(i, int) or i < 1]
        if bad:
            raise VariableIndexError(f"Variable indices must be positive integers, got {sorted(bad)}")
        object.__setattr__(self, "vars", indices)

    @classmethod
    def of(cls, *indices: int) -> "Monomial":
        if len(set(indices)) != len(indices):
            raise NonSquarefreeError(f"Repeated variable in x{indices}")
        return cls(frozenset(indices))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Parse `1`, `x1x3x5` or `x1*x3*x5`."""
        text = text.strip()
        if text == "1":
            return ONE
        indices = [int(i) for i in _VARIABLE.findall(text)]
        if not indices or _VARIABLE.sub("", text).replace("*", "").strip():
            raise VariableIndexError(f"Cannot parse monomial '{text}'")
        return cls.of(*indices)

    @property
    def degree(self) -> int:
        return len(self.vars)

    @property
    def key(self) -> Tuple[int, ...]:
        return tuple(sorted(self.vars))

    @property
    def max_index(self) -> int:
        return max(self.vars, default=0)

    def divides(self, other: "Monomial") -> bool:
        return self.vars <= other.vars

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(self.vars | other.vars)

    def without(self, other: "Monomial") -> "Monomial":
        return Monomial(self.vars - other.vars)

    def __mul__(self, other: "Monomial") -> "Monomial":
        overlap = self.vars & other.vars
        if overlap:
            raise NonSquarefreeError(
                f"{self} * {other} is not squarefree (shared x{sorted(overlap)})"
            )
        return Monomial(self.vars | other.vars)

    def __lt__(self, other: "Monomial") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        if not self.vars:
            return "1"
        return "".join(f"x{i}" for i in self.key)


ONE = Monomial()


def monomial(*indices: int) -> Monomial:
    """Shorthand for Monomial.of."""
    return Monomial.of(*indices)


def _antichain(gens: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    unique = sorted(set(gens), key=lambda m: (m.degree, m.key))
    kept: List[Monomial] = []
    for g in unique:
        if not any(k.vars <= g.vars for k in kept):
            kept.append(g)
    return tuple(sorted(kept, key=lambda m: m.key))


@dataclass(frozen=True)
class MonomialIdeal:
    """A squarefree monomial ideal of k[x_1..x_nvars] given by its minimal generators.

    Construction canonicalizes `gens` into a divisibility antichain in lex order of
    sorted index sequences. `gens == (1,)` is the unit ideal, `gens == ()` the zero ideal.
    """

    nvars: int
    gens: Tuple[Monomial, ...] = ()

    def __post_init__(self):
        if self.nvars < 0:
            raise VariableIndexError(f"nvars must be >= 0, got {self.nvars}")
        gens = tuple(self.gens)
        for g in gens:
            if g.max_index > self.nvars:
                raise VariableIndexError(f"Generator {g} uses a variable beyond x{self.nvars}")
        object.__setattr__(self, "gens", _antichain(gens))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (ONE,)

    @property
    def is_proper(self) -> bool:
        return not (self.is_zero or self.is_unit)

    @property
    def supports(self) -> List[FrozenSet[int]]:
        return [g.vars for g in self.gens]

    def degree_census(self) -> dict:
        census: dict = {}
        for g in self.gens:
            census[g.degree] = census.get(g.degree, 0) + 1
        return census

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


@dataclass(frozen=True)
class PrimeComponent:
    """A monomial prime (x_i : i in vars), equivalently a minimal vertex cover."""

    vars: FrozenSet[int]

    def __post_init__(self):
        indices = frozenset(self.vars)
        if not indices:
            raise VariableIndexError("A prime component needs at least one variable")
        object.__setattr__(self, "vars", indices)

    @property
    def height(self) -> int:
        return len(self.vars)

    @property
    def key(self) -> Tuple[int, ...]:
        return tuple(sorted(self.vars))

    def __lt__(self, other: "PrimeComponent") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{i}" for i in self.key) + ")"


def minimalize(gens: Iterable[Monomial], nvars: int) -> MonomialIdeal:
    """Return the ideal generated by `gens`, keeping only divisibility-minimal generators."""
    return MonomialIdeal(nvars, tuple(gens))


def ideal_from_supports(nvars: int, supports: Iterable[Iterable[int]]) -> MonomialIdeal:
    return MonomialIdeal(nvars, tuple(Monomial(frozenset(s)) for s in supports))


def unit_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, (ONE,))


def zero_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, ())


def prime_ideal(component: PrimeComponent, nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, tuple(Monomial.of(i) for i in component.key))


def _check_ambient(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.nvars != J.nvars:
        raise AmbientMismatchError(f"Ideals live in {I.nvars} and {J.nvars} variables")


def _check_monomial(u: Monomial, nvars: int) -> None:
    if u.max_index > nvars:
        raise VariableIndexError(f"Monomial {u} uses a variable beyond x{nvars}")


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    """Squarefree membership: some minimal generator divides m."""
    return any(g.divides(m) for g in I.gens)


def support(I: MonomialIdeal) -> FrozenSet[int]:
    return frozenset().union(*I.supports) if I.gens else frozenset()


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_ambient(I, J)
    return MonomialIdeal(I.nvars, I.gens + J.gens)


def scale(u: Monomial, I: MonomialIdeal) -> MonomialIdeal:
    """The ideal uI. Every product u*g must stay squarefree."""
    _check_monomial(u, I.nvars)
    return MonomialIdeal(I.nvars, tuple(u * g for g in I.gens))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_ambient(I, J)
    return MonomialIdeal(I.nvars, tuple(g.lcm(h) for g in I.gens for h in J.gens))


def intersect_all(ideals: Sequence[MonomialIdeal], nvars: int) -> MonomialIdeal:
    return reduce(intersect, ideals, unit_ideal(nvars))


def colon(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """(I : u), valid because every generator is squarefree."""
    _check_monomial(u, I.nvars)
    return MonomialIdeal(I.nvars, tuple(g.without(u) for g in I.gens))


def shift(I: MonomialIdeal, offset: int, nvars: int) -> MonomialIdeal:
    """Translate x_i to x_{i+offset} inside k[x_1..x_nvars]."""
    return MonomialIdeal(
        nvars, tuple(Monomial(frozenset(i + offset for i in g.vars)) for g in I.gens)
    )


def reflect(I: MonomialIdeal) -> MonomialIdeal:
    """Apply x_i -> x_{nvars+1-i}."""
    n = I.nvars
    return MonomialIdeal(n, tuple(Monomial(frozenset(n + 1 - i for i in g.vars)) for g in I.gens))


def _mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def _indices(mask: int) -> FrozenSet[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _keeps_private_edges(chosen: int, edges: Sequence[int]) -> bool:
    # every chosen vertex must still be the only chosen vertex on some edge
    rest = chosen
    while rest:
        low = rest & -rest
        if not any(e & chosen == low for e in edges):
            return False
        rest ^= low
    return True


def minimal_transversals(edges: Iterable[Iterable[int]]) -> List[FrozenSet[int]]:
    """All inclusion-minimal vertex sets meeting every edge, in lex order.

    Branches on the first uncovered edge; vertices tried earlier in a branch are
    forbidden afterwards so each set is reached once, and partial covers in which a
    vertex has lost all private edges are absorbed immediately.
    """
    masks = sorted({_mask(e) for e in edges}, key=lambda m: (bin(m).count("1"), m))
    if not masks:
        return [frozenset()]
    if masks[0] == 0:
        return []

    found: List[int] = []

    def branch(chosen: int, forbidden: int) -> None:
        uncovered = next((e for e in masks if not e & chosen), None)
        if uncovered is None:
            found.append(chosen)
            return
        candidates = uncovered & ~forbidden
        while candidates:
            low = candidates & -candidates
            extended = chosen | low
            if _keeps_private_edges(extended, masks):
                branch(extended, forbidden)
            forbidden |= low
            candidates ^= low

    branch(0, 0)
    covers = sorted((_indices(c) for c in found), key=lambda s: tuple(sorted(s)))
    logger.debug(f"{len(covers)} minimal transversals of {len(masks)} edges")
    return covers


def irreducible_decomposition(I: MonomialIdeal) -> List[PrimeComponent]:
    """Minimal primes of a proper squarefree ideal, i.e. minimal vertex covers of G(I)."""
    if not I.is_proper:
        raise DegenerateIdealError(f"Irreducible decomposition needs a proper ideal, got {I}")
    return [PrimeComponent(c) for c in minimal_transversals(I.supports)]
