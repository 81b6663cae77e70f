"""Graded Betti numbers via Hochster's formula, and the invariants derived from them."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from .complexes import SimplicialComplex, induced_subcomplex, reduced_homology_ranks, sr_complex_of_ideal
from .errors import BettiConsistencyError, DegenerateIdealError, HochsterLimitError
from .linalg import check_characteristic, field_label
from .monomials import MonomialIdeal, irreducible_decomposition
from .settings import (
    DEFAULT_CHARACTERISTIC,
    DEFAULT_HOCHSTER_LIMIT,
    DIAGNOSTIC_CHARACTERISTIC,
    HOCHSTER_CHUNK_SIZE,
    BettiView,
    InvariantSource,
)

logger = logging.getLogger(__name__)

FineBetti = Dict[Tuple[int, FrozenSet[int]], int]


@dataclass(frozen=True)
class BettiTable:
    """Coarse graded Betti numbers β_{i,j}; zero entries are never stored.

    The default view is the ideal I. `quotient_view()` gives the table of S/I, which is
    the ideal table shifted by one homological step plus β_{0,0} = 1.
    """

    nvars: int
    characteristic: int
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)
    view: BettiView = BettiView.IDEAL

    @property
    def field(self) -> str:
        return field_label(self.characteristic)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def row(self, i: int) -> Dict[int, int]:
        return {j: b for (k, j), b in sorted(self.entries.items()) if k == i}

    def quotient_view(self) -> "BettiTable":
        if self.view is BettiView.QUOTIENT:
            return self
        shifted = {(i + 1, j): b for (i, j), b in self.entries.items()}
        shifted[(0, 0)] = 1
        return BettiTable(self.nvars, self.characteristic, shifted, BettiView.QUOTIENT)

    def as_records(self) -> List[dict]:
        return [{"i": i, "j": j, "beta": b} for (i, j), b in sorted(self.entries.items())]

    def __str__(self) -> str:
        # rows indexed by j - i, columns by i
        if not self.entries:
            return "(empty)"
        cols = range(0, self.pd + 1)
        shifts = sorted({j - i for i, j in self.entries})
        width = max(len(str(b)) for b in self.entries.values())
        width = max(width, len(str(self.pd)), len(str(max(self.totals().values()))))
        label = max(len(f"{s}:") for s in shifts + ["total"])
        lines = [" " * (label + 1) + " ".join(str(i).rjust(width) for i in cols)]
        totals = self.totals()
        lines.append("total:".rjust(label) + " " + " ".join(str(totals.get(i, 0)).rjust(width) for i in cols))
        for s in shifts:
            cells = [self.entries.get((i, i + s)) for i in cols]
            text = " ".join(("." if c is None else str(c)).rjust(width) for c in cells)
            lines.append(f"{s}:".rjust(label) + " " + text)
        return "\n".join(lines)

    def totals(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for (i, _), b in self.entries.items():
            out[i] = out.get(i, 0) + b
        return out


class InvariantReport(BaseModel):
    """pd, reg, depth, height and bight of one ideal, with where they came from."""

    n: Optional[int] = None
    nvars: int = Field(ge=0)
    pd: int = Field(ge=0)
    reg: int = Field(ge=0)
    depth: int = Field(ge=0)
    height: int = Field(ge=0)
    bight: int = Field(ge=0)
    source: InvariantSource
    field: str = field_label(DEFAULT_CHARACTERISTIC)
    flags: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_consistency(self) -> "InvariantReport":
        if self.bight < self.height:
            raise ValueError(f"bight {self.bight} below height {self.height}")
        if self.source is InvariantSource.HOCHSTER and self.depth + self.pd != self.nvars:
            raise ValueError(f"depth {self.depth} + pd {self.pd} != nvars {self.nvars}")
        return self


def check_hochster_limit(nvars: int, limit: int = DEFAULT_HOCHSTER_LIMIT, force: bool = False) -> None:
    if nvars > limit and not force:
        raise HochsterLimitError(
            f"Hochster sweep over {nvars} variables exceeds the limit {limit}; pass --force to run it"
        )


def _subset_chunks(nvars: int, size: int) -> Iterator[List[int]]:
    masks = iter(range(1, 1 << nvars))
    while True:
        chunk = list(islice(masks, size))
        if not chunk:
            return
        yield chunk


def _sweep_chunk(args: Tuple[SimplicialComplex, List[int], int]) -> List[Tuple[int, Tuple[int, ...], int]]:
    delta, masks, characteristic = args
    out = []
    for mask in masks:
        w = tuple(v for v in range(1, delta.nverts + 1) if mask >> (v - 1) & 1)
        ranks = reduced_homology_ranks(induced_subcomplex(delta, w), characteristic)
        for d, r in ranks.nonzero().items():
            # β_{i+1,|W|}(S/I) = β_{i,|W|}(I)
            i = len(w) - d - 2
            if i >= 0:
                out.append((i, w, r))
    return out


def multigraded_betti(I: MonomialIdeal, characteristic: int = DEFAULT_CHARACTERISTIC, jobs: int = 1) -> FineBetti:
    """Squarefree multigraded Betti numbers of I keyed by (i, W), from all 2^nvars subsets W."""
    if not I.is_proper:
        raise DegenerateIdealError(f"Betti numbers need a proper ideal, got {I}")
    check_characteristic(characteristic)
    delta = sr_complex_of_ideal(I)
    tasks = [(delta, chunk, characteristic) for chunk in _subset_chunks(I.nvars, HOCHSTER_CHUNK_SIZE)]
    logger.debug(f"Hochster sweep: {I.nvars} variables, {len(tasks)} chunks, {jobs} jobs")

    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_chunk, tasks))
    else:
        results = [_sweep_chunk(t) for t in tasks]

    fine: FineBetti = {}
    for chunk in results:
        for i, w, r in chunk:
            fine[(i, frozenset(w))] = r
    return fine


def graded_betti(I: MonomialIdeal, characteristic: int = DEFAULT_CHARACTERISTIC, jobs: int = 1) -> BettiTable:
    """Coarse Betti table of the ideal I over QQ (characteristic 0) or GF(p)."""
    entries: Dict[Tuple[int, int], int] = {}
    for (i, w), r in multigraded_betti(I, characteristic, jobs).items():
        key = (i, len(w))
        entries[key] = entries.get(key, 0) + r
    table = BettiTable(I.nvars, characteristic, dict(sorted(entries.items())))
    census = dict(sorted(I.degree_census().items()))
    if table.row(0) != census:
        raise BettiConsistencyError(f"Betti row 0 {table.row(0)} != generator degrees {census}")
    return table


def pd(I: MonomialIdeal, characteristic: int = DEFAULT_CHARACTERISTIC, jobs: int = 1) -> int:
    return graded_betti(I, characteristic, jobs).pd


def reg(I: MonomialIdeal, characteristic: int = DEFAULT_CHARACTERISTIC, jobs: int = 1) -> int:
    return graded_betti(I, characteristic, jobs).reg


def depth(I: MonomialIdeal, characteristic: int = DEFAULT_CHARACTERISTIC, jobs: int = 1) -> int:
    """Auslander-Buchsbaum: nvars - pd(I)."""
    return I.nvars - pd(I, characteristic, jobs)


def height(I: MonomialIdeal) -> int:
    return min(c.height for c in irreducible_decomposition(I))


def bight(I: MonomialIdeal) -> int:
    return max(c.height for c in irreducible_decomposition(I))


def compute_invariants(
    I: MonomialIdeal,
    characteristic: int = DEFAULT_CHARACTERISTIC,
    jobs: int = 1,
    n: Optional[int] = None,
) -> InvariantReport:
    """Hochster-derived pd, reg and depth with height and bight from the decomposition."""
    table = graded_betti(I, characteristic, jobs)
    components = irreducible_decomposition(I)
    heights = [c.height for c in components]
    return InvariantReport(
        n=n,
        nvars=I.nvars,
        pd=table.pd,
        reg=table.reg,
        depth=I.nvars - table.pd,
        height=min(heights),
        bight=max(heights),
        source=InvariantSource.HOCHSTER,
        field=table.field,
    )


def field_disagreement(I: MonomialIdeal, jobs: int = 1, characteristic: int = DIAGNOSTIC_CHARACTERISTIC) -> List[str]:
    """Betti entries that differ between characteristic 0 and GF(p); empty when none do."""
    rational = graded_betti(I, DEFAULT_CHARACTERISTIC, jobs)
    modular = graded_betti(I, characteristic, jobs)
    keys = sorted(set(rational.entries) | set(modular.entries))
    notes = [
        f"beta_{i},{j}: {rational.beta(i, j)} over QQ, {modular.beta(i, j)} over {modular.field}"
        for i, j in keys
        if rational.beta(i, j) != modular.beta(i, j)
    ]
    if notes:
        logger.warning(f"Betti table of {I} depends on the field: {notes}")
    return notes
