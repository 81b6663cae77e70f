"""Exact matrix ranks over QQ (fraction-free over ZZ) and over prime fields."""

import logging
from typing import Dict, Tuple

from sympy import GF, ZZ, isprime
from sympy.polys.matrices import DomainMatrix

from .errors import ParameterRangeError

logger = logging.getLogger(__name__)

# row -> {column -> integer entry}; zero entries omitted
SparseEntries = Dict[int, Dict[int, int]]


def check_characteristic(characteristic: int) -> int:
    if characteristic != 0 and not isprime(characteristic):
        raise ParameterRangeError(
            f"Field characteristic must be 0 or a prime, got {characteristic}"
        )
    return characteristic


def field_label(characteristic: int) -> str:
    return "QQ" if characteristic == 0 else f"GF({characteristic})"


def exact_rank(entries: SparseEntries, shape: Tuple[int, int], characteristic: int = 0) -> int:
    """Rank of an integer matrix over QQ (characteristic 0) or GF(p).

    Characteristic 0 uses fraction-free Gauss-Jordan elimination over ZZ, so no
    rationals are formed and nothing is rounded.
    """
    nrows, ncols = shape
    rows = {r: cols for r, cols in entries.items() if cols}
    if nrows == 0 or ncols == 0 or not rows:
        return 0
    if nrows == 1 or ncols == 1:
        modulus = characteristic or None
        values = (v for cols in rows.values() for v in cols.values())
        return int(any(v % modulus if modulus else v for v in values))

    if characteristic == 0:
        domain = ZZ
        sparse = {r: {c: domain(v) for c, v in cols.items() if v} for r, cols in rows.items()}
        matrix = DomainMatrix(sparse, shape, domain)
        _, _, pivots = matrix.rref_den(method="FF")
        return len(pivots)

    domain = GF(characteristic)
    sparse = {}
    for r, cols in rows.items():
        reduced = {c: domain(v) for c, v in cols.items() if v % characteristic}
        if reduced:
            sparse[r] = reduced
    if not sparse:
        return 0
    return DomainMatrix(sparse, shape, domain).rank()
