"""Exact verification of the minimax sandwich A <= K <= B.

For a measure P the transport vector is D P: component u is the expected
distance from u to a P-random vertex.  A and B are its min and max.  The
sandwich around K = n/||w||_1 is checked by exact rational comparison; there
is no tolerance anywhere in this module.

The inner-product identity <w, D P> = n is what makes the sandwich work:
n = <n 1, P> = <D w, P> = <w, D P>, which lies between A ||w||_1 and
B ||w||_1 when w is non-negative, and below B ||w||_1 always.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .curvature import CurvatureSolution, SolveStatus, curvature_bound
from .errors import HardVerificationError, InconsistentSystemError
from .measures import Measure, measure_delta, measure_uniform, measure_uniform_on, sample_measures
from .metric import DistanceMatrix

SUBSET_SEARCH_MAX_SIZE = 12
BATTERY_PAIR_LIMIT = 12  # include pair-uniform measures in the battery up to this n


@dataclass(frozen=True)
class TransportBounds:
    dp: tuple[Fraction, ...]
    A: Fraction
    B: Fraction
    argmin: int
    argmax: int


@dataclass(frozen=True)
class MeasureRecord:
    descriptor: str
    A: Fraction
    B: Fraction
    K: Fraction
    lower_holds: bool
    upper_holds: bool
    lower_tight: bool
    upper_tight: bool


@dataclass(frozen=True)
class VerificationReport:
    records: tuple[MeasureRecord, ...]
    measures_checked: int
    lower_failures: int
    upper_failures: int
    nonneg: bool
    findings: tuple[str, ...] = field(default_factory=tuple)


def transport_vector(D: DistanceMatrix, P: Measure) -> TransportBounds:
    """D P computed exactly, with min/max and their lowest attaining indices."""
    if P.n != D.n:
        raise ValueError(f"dimension mismatch: measure on {P.n} vertices, matrix is {D.n}x{D.n}")
    den = lcm(*(x.denominator for x in P.p)) if D.n > 1 else P.p[0].denominator
    q = [int(x * den) for x in P.p]
    rows = D.row_lists()
    dp = tuple(
        Fraction(sum(d * qv for d, qv in zip(row, q) if qv), den) for row in rows
    )
    A, B = min(dp), max(dp)
    return TransportBounds(dp=dp, A=A, B=B, argmin=dp.index(A), argmax=dp.index(B))


def identity_check(w: Sequence[Fraction], D: DistanceMatrix, P: Measure) -> Fraction:
    """The inner product <w, D P>, exactly; equals n for any solution w."""
    if len(w) != D.n:
        raise ValueError(f"dimension mismatch: w has {len(w)} entries, matrix is {D.n}x{D.n}")
    dp = transport_vector(D, P).dp
    return sum((wi * di for wi, di in zip(w, dp)), Fraction(0))


def measure_battery(n: int, samples: int = 100, seed: int = 0) -> list[tuple[str, Measure]]:
    """The fixed verification battery, in deterministic order.

    All delta measures, the uniform measure, all pair-uniform measures for
    small n, then `samples` seeded random interior measures.  "For all P" is
    unverifiable; this covers the simplex's extreme points, its barycenter,
    the structured measures that produce known lower-bound failures, and a
    seeded random interior sweep.
    """
    battery: list[tuple[str, Measure]] = []
    for v in range(n):
        battery.append((f"delta:{v}", measure_delta(n, v)))
    battery.append(("uniform", measure_uniform(n)))
    if n <= BATTERY_PAIR_LIMIT:
        for u, v in itertools.combinations(range(n), 2):
            battery.append((f"uniform_on:{u},{v}", measure_uniform_on(n, (u, v))))
    if samples > 0:
        for i, mu in enumerate(sample_measures(n, samples, seed)):
            battery.append((f"sample:{i}", mu))
    return battery


def verify_minimax(
    D: DistanceMatrix,
    sol: CurvatureSolution,
    measures: Sequence[Measure] | Sequence[tuple[str, Measure]],
) -> VerificationReport:
    """Check A <= K <= B per measure by exact comparison.

    The upper bound must hold for every measure, and the lower bound for
    every measure whenever w is non-negative; either failure raises
    HardVerificationError since it falsifies the implementation, not the
    theorem.  Lower failures for signed w are recorded as findings.
    """
    if sol.status is SolveStatus.INCONSISTENT:
        raise InconsistentSystemError("cannot verify: the curvature system is inconsistent")
    K = curvature_bound(sol, D.n)
    labelled = [m if isinstance(m, tuple) else (f"measure:{i}", m) for i, m in enumerate(measures)]
    records = []
    findings = []
    lower_failures = 0
    for descriptor, mu in labelled:
        tb = transport_vector(D, mu)
        lower = tb.A <= K
        upper = K <= tb.B
        if not upper:
            raise HardVerificationError(
                f"upper bound failed for {descriptor}: K = {K} > B = {tb.B}; "
                "this contradicts the identity <w, DP> = n"
            )
        if not lower:
            if sol.nonneg:
                raise HardVerificationError(
                    f"lower bound failed for {descriptor} although min w >= 0: "
                    f"A = {tb.A} > K = {K}"
                )
            lower_failures += 1
            findings.append(
                f"lower bound fails for {descriptor}: A = {tb.A} > K = {K} "
                "(allowed: w has a negative entry)"
            )
        records.append(MeasureRecord(
            descriptor=descriptor, A=tb.A, B=tb.B, K=K,
            lower_holds=lower, upper_holds=upper,
            lower_tight=(tb.A == K), upper_tight=(K == tb.B),
        ))
    return VerificationReport(
        records=tuple(records),
        measures_checked=len(records),
        lower_failures=lower_failures,
        upper_failures=0,
        nonneg=sol.nonneg,
        findings=tuple(findings),
    )


def search_lower_violation(
    D: DistanceMatrix,
    sol: CurvatureSolution,
    budget: int = 100,
    seed: int = 0,
) -> Measure | None:
    """First measure P with A(P) > K under a fixed deterministic search order.

    Order: deltas by vertex index, uniform measures on subsets of size 2 up
    to min(n, 12) in (size, lexicographic) order, then `budget` seeded random
    samples.  For non-negative w the theorem rules a witness out, so finding
    one is a hard error.
    """
    if sol.status is not SolveStatus.UNIQUE and sol.status is not SolveStatus.UNDERDETERMINED:
        raise InconsistentSystemError("no curvature vector to search against")
    K = curvature_bound(sol, D.n)

    def check(mu: Measure) -> bool:
        return transport_vector(D, mu).A > K

    candidates = (measure_delta(D.n, v) for v in range(D.n))
    witness = _first_violation(candidates, check)
    if witness is None:
        subsets = (
            measure_uniform_on(D.n, comb)
            for size in range(2, min(D.n, SUBSET_SEARCH_MAX_SIZE) + 1)
            for comb in itertools.combinations(range(D.n), size)
        )
        witness = _first_violation(subsets, check)
    if witness is None and budget > 0:
        witness = _first_violation(iter(sample_measures(D.n, budget, seed)), check)
    if witness is not None and sol.nonneg:
        raise HardVerificationError(
            f"found lower-bound witness {witness} although min w >= 0; solver or verifier is wrong"
        )
    return witness


def _first_violation(candidates, check) -> Measure | None:
    for mu in candidates:
        if check(mu):
            return mu
    return None
