"""Verification module: sweep n and compare closed forms with brute-force oracles."""

import logging
import time
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from src.algebra.complexes import (
    independence_complex,
    matching_complex,
    path_graph,
    stanley_reisner_ideal,
)
from src.algebra.homology import compute_invariants, field_disagreement, graded_betti
from src.algebra.linalg import check_characteristic, field_label
from src.algebra.line_formulas import (
    closed_form_invariants,
    line_decomposition,
    line_facet_ideal,
    line_facets,
    omega,
    p_ideal,
    p_ideal_closed_form,
    recursion_split,
    satisfies_gap_law,
    sr_closed_form,
)
from src.algebra.monomials import (
    ideal_from_supports,
    ideal_sum,
    intersect,
    irreducible_decomposition,
    monomial,
    reflect,
    scale,
    shift,
)
from src.algebra.settings import (
    ALL_CHECKS,
    DEFAULT_CHARACTERISTIC,
    DEFAULT_HOCHSTER_LIMIT,
    EXIT_MISMATCH,
    EXIT_OK,
    HOCHSTER_CHECKS,
    Check,
    Side,
    Status,
)

logger = logging.getLogger(__name__)


class Mismatch(BaseModel):
    """One quantity whose computed value differs from the expected one."""

    quantity: str
    expected: str
    computed: str


class CaseResult(BaseModel):
    check: Check
    n: int
    status: Status = Status.PASS
    mismatches: List[Mismatch] = Field(default_factory=list)
    flags: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    seconds: Optional[float] = None


class VerificationReport(BaseModel):
    """All case results of one verify run; exit code 0 iff nothing failed."""

    checks: List[Check]
    max_n: int
    field: str
    strict: bool = False
    cases: List[CaseResult] = Field(default_factory=list)

    def failed_cases(self) -> List[CaseResult]:
        bad = {Status.FAIL, Status.FLAGGED} if self.strict else {Status.FAIL}
        return [c for c in self.cases if c.status in bad]

    @property
    def passed(self) -> bool:
        return not self.failed_cases()

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.passed else EXIT_MISMATCH

    def status_counts(self) -> Dict[str, int]:
        counts = {s.value: 0 for s in Status}
        for c in self.cases:
            counts[c.status.value] += 1
        return counts


class VerifyOptions(BaseModel):
    max_n: int = Field(ge=1)
    checks: List[Check] = Field(default_factory=lambda: list(ALL_CHECKS))
    characteristic: int = DEFAULT_CHARACTERISTIC
    strict: bool = False
    jobs: int = Field(default=1, ge=1)
    limit: int = Field(default=DEFAULT_HOCHSTER_LIMIT, ge=1)
    force: bool = False
    timings: bool = False
    diagnostic: bool = False

    @field_validator("characteristic")
    @classmethod
    def characteristic_is_zero_or_prime(cls, value: int) -> int:
        return check_characteristic(value)

    @field_validator("checks")
    @classmethod
    def canonical_check_order(cls, value: List[Check]) -> List[Check]:
        chosen = set(value)
        return [c for c in ALL_CHECKS if c in chosen]

    def hochster_allowed(self, nvars: int) -> bool:
        return self.force or nvars <= self.limit

    @property
    def runs_hochster(self) -> bool:
        return any(c in HOCHSTER_CHECKS for c in self.checks)


class _Case:
    """Mutable accumulator for one (check, n) pair."""

    def __init__(self):
        self.mismatches: List[Mismatch] = []
        self.flags: List[str] = []
        self.notes: List[str] = []

    def compare(self, quantity: str, expected, computed) -> None:
        if expected != computed:
            self.mismatches.append(Mismatch(quantity=quantity, expected=str(expected), computed=str(computed)))

    def skip_hochster(self, nvars: int, limit: int) -> None:
        self.notes.append(f"Hochster comparison skipped: {nvars} variables above limit {limit}")


def _keys(sets) -> List[Tuple[int, ...]]:
    return sorted(tuple(sorted(s)) for s in sets)


def check_facets(n: int, options: VerifyOptions, case: _Case) -> None:
    oracle = list(matching_complex(path_graph(n)).facets)
    computed = line_facets(n)
    case.compare("facets", oracle, computed)
    if n >= 4:
        broken = [f for f in computed if not satisfies_gap_law(f, n)]
        case.compare("facets violating the gap law", [], broken)


def _is_cover(vertices, facets) -> bool:
    return all(vertices & set(f) for f in facets)


def check_decomposition(n: int, options: VerifyOptions, case: _Case) -> None:
    brute = irreducible_decomposition(line_facet_ideal(n))
    family = omega(n)
    case.compare("minimal primes", _keys(c.vars for c in brute), _keys(family.vertex_sets()))

    facets = line_facets(n)
    for member in family.members:
        if not _is_cover(member.vars, facets):
            case.compare(f"{member.label} covers every facet", True, False)
        elif any(_is_cover(member.vars - {v}, facets) for v in member.vars):
            case.compare(f"{member.label} is minimal", True, False)

    expected = closed_form_invariants(n)
    heights = [c.height for c in brute]
    case.compare("height", expected.height, min(heights))
    case.compare("bight", expected.bight, max(heights))
    case.flags.extend(expected.flags)


def check_recursion(n: int, options: VerifyOptions, case: _Case) -> None:
    generators = {g.key for g in line_facet_ideal(n).gens}
    for side in Side:
        split = recursion_split(n, side)
        left = {g.key for g in split.J.gens}
        right = {g.key for g in split.K.gens}
        case.compare(f"{side.value} split overlap", [], sorted(left & right))
        case.compare(f"{side.value} split generators", sorted(generators), sorted(left | right))


def check_p_ideal(n: int, options: VerifyOptions, case: _Case) -> None:
    dec = line_decomposition(n)
    case.compare("J + K", str(line_facet_ideal(n)), str(ideal_sum(dec.J, dec.K)))
    case.compare("J ∩ K", str(scale(monomial(1, 2), dec.P)), str(intersect(dec.J, dec.K)))

    via_intersection = intersect(line_facet_ideal(n - 2, 2, n), line_facet_ideal(n - 3, 3, n))
    case.compare("P as intersection", str(dec.P), str(via_intersection))
    if n >= 8:
        expected = scale(monomial(3, 4, 5), shift(p_ideal(n - 3), 3, n))
        case.compare("M ∩ N", str(expected), str(intersect(dec.M, dec.N)))

    if not options.hochster_allowed(n):
        case.skip_hochster(n, options.limit)
        return
    table = graded_betti(dec.P, options.characteristic, options.jobs)
    bound = p_ideal_closed_form(n)
    case.compare("reg(P)", bound.reg, table.reg)
    if table.pd > bound.pd:
        case.compare("pd(P)", f"<= {bound.pd}", table.pd)


def check_invariants(n: int, options: VerifyOptions, case: _Case) -> None:
    expected = closed_form_invariants(n)
    case.flags.extend(expected.flags)
    I = line_facet_ideal(n)
    if not options.hochster_allowed(n):
        heights = [c.height for c in irreducible_decomposition(I)]
        case.compare("height", expected.height, min(heights))
        case.compare("bight", expected.bight, max(heights))
        case.skip_hochster(n, options.limit)
        return
    computed = compute_invariants(I, options.characteristic, options.jobs, n)
    for quantity in ("pd", "reg", "depth", "height", "bight"):
        case.compare(quantity, getattr(expected, quantity), getattr(computed, quantity))
    if options.diagnostic:
        case.flags.extend(field_disagreement(I, options.jobs))


def check_sr_ideal(n: int, options: VerifyOptions, case: _Case) -> None:
    delta = matching_complex(path_graph(n))
    case.compare(
        "matching complex as independence complex",
        list(delta.facets),
        list(independence_complex(path_graph(n - 1)).facets),
    )
    I = stanley_reisner_ideal(delta)
    edge_ideal = ideal_from_supports(n, [(i, i + 1) for i in range(1, n)])
    case.compare("Stanley-Reisner ideal", str(edge_ideal), str(I))

    if not options.hochster_allowed(n):
        case.skip_hochster(n, options.limit)
        return
    table = graded_betti(I, options.characteristic, options.jobs)
    expected = sr_closed_form(n)
    case.compare("pd", expected.pd, table.pd)
    case.compare("reg", expected.reg, table.reg)


def check_lemmas(n: int, options: VerifyOptions, case: _Case) -> None:
    family = _keys(omega(n).vertex_sets())
    for k in range(3, n):
        window = set(range(1, k))
        inside_n = [c for c in family if set(c) <= window]
        inside_k = [c for c in _keys(omega(k).vertex_sets()) if set(c) <= window]
        case.compare(f"covers inside x1..x{k - 1} for k={k}", inside_k, inside_n)

    mirrored = _keys({n + 1 - i for i in c} for c in family)
    case.compare("reflected covers", family, mirrored)
    I = line_facet_ideal(n)
    case.compare("reflected facet ideal", str(I), str(reflect(I)))

    if not options.hochster_allowed(n):
        case.skip_hochster(n, options.limit)
        return
    table = graded_betti(I, options.characteristic, options.jobs)
    bight = max(c.height for c in irreducible_decomposition(I))
    if bight > table.pd + 1:
        case.compare("bight <= pd + 1", f"<= {table.pd + 1}", bight)
    if n >= 3:
        base = graded_betti(line_facet_ideal(n - 2), options.characteristic, options.jobs)
        scaled = graded_betti(recursion_split(n).J, options.characteristic, options.jobs)
        case.compare("pd(x1 F(L'_{n-2}))", base.pd, scaled.pd)
        case.compare("reg(x1 F(L'_{n-2}))", base.reg + 1, scaled.reg)


CHECKS: Dict[Check, Tuple[int, Callable[[int, VerifyOptions, _Case], None]]] = {
    Check.FACETS: (1, check_facets),
    Check.DECOMPOSITION: (1, check_decomposition),
    Check.RECURSION: (2, check_recursion),
    Check.P_IDEAL: (5, check_p_ideal),
    Check.INVARIANTS: (1, check_invariants),
    Check.SR_IDEAL: (2, check_sr_ideal),
    Check.LEMMAS: (1, check_lemmas),
}


def run_case(check: Check, n: int, options: VerifyOptions) -> CaseResult:
    start, run = CHECKS[check]
    case = _Case()
    began = time.perf_counter()
    run(n, options, case)
    elapsed = time.perf_counter() - began

    if case.mismatches:
        status = Status.FAIL
        logger.warning(f"{check.value} n={n}: {len(case.mismatches)} mismatches")
    elif case.flags:
        status = Status.FLAGGED
        logger.warning(f"{check.value} n={n}: {'; '.join(case.flags)}")
    else:
        status = Status.PASS
    logger.debug(f"{check.value} n={n}: {status.value} in {elapsed:.3f}s")
    return CaseResult(
        check=check,
        n=n,
        status=status,
        mismatches=case.mismatches,
        flags=case.flags,
        notes=case.notes,
        seconds=round(elapsed, 6) if options.timings else None,
    )


def run_verification(options: VerifyOptions) -> VerificationReport:
    """Run every selected check for each n in its range up to max_n."""
    logger.info(f"Verifying {[c.value for c in options.checks]} up to n={options.max_n}")
    if options.max_n > options.limit and not options.force and options.runs_hochster:
        logger.warning(
            f"Hochster comparisons limited to n <= {options.limit}; pass --force to include larger n"
        )

    report = VerificationReport(
        checks=options.checks,
        max_n=options.max_n,
        field=field_label(options.characteristic),
        strict=options.strict,
    )
    for check in options.checks:
        start, _ = CHECKS[check]
        for n in range(start, options.max_n + 1):
            report.cases.append(run_case(check, n, options))

    counts = report.status_counts()
    logger.info(f"Verification finished: {counts}")
    return report
