"""Exact solution of D w = n 1 and the curvature bound K = n / ||w||_1.

The exact path runs Gaussian elimination with partial pivoting over
rationals; rank and consistency are decided there and only there.  The float
path is plain LU for large instances and never classifies the solution set.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import scipy.linalg

from .errors import InconsistentSystemError, NumericallySingularError
from .metric import DistanceMatrix, row_sums

FLOAT_PIVOT_FLOOR = 1e-12  # scaled by n at use


class SolveStatus(enum.Enum):
    UNIQUE = "unique"
    UNDERDETERMINED = "underdetermined"
    INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class CurvatureSolution:
    """Outcome of solving D w = n 1 exactly.

    For underdetermined systems w is the particular solution with all free
    variables set to zero; its l1 norm (and hence K) is then not canonical,
    which every consumer must surface as a warning.
    """

    status: SolveStatus
    n: int
    nullity: int = 0
    w: tuple[Fraction, ...] | None = None
    l1_norm: Fraction | None = None
    bound_K: Fraction | None = None
    min_entry: Fraction | None = None
    nonneg: bool = False
    warnings: tuple[str, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class FloatSolution:
    w: np.ndarray
    residual_inf: float
    condition_hint: float  # reciprocal pivot-growth estimate


def solve_curvature(D: DistanceMatrix) -> CurvatureSolution:
    """Exact Gaussian elimination on [D | n 1] over rationals."""
    n = D.n
    A = [[Fraction(x) for x in row] for row in D.row_lists()]
    b = [Fraction(n)] * n
    piv_cols: list[int] = []
    rank = 0
    for col in range(n):
        # partial pivot: largest magnitude, ties to the lowest row index
        best_row, best_val = -1, Fraction(0)
        for i in range(rank, n):
            a = abs(A[i][col])
            if a > best_val:
                best_row, best_val = i, a
        if best_row < 0:
            continue
        if best_row != rank:
            A[rank], A[best_row] = A[best_row], A[rank]
            b[rank], b[best_row] = b[best_row], b[rank]
        piv = A[rank][col]
        for i in range(rank + 1, n):
            if A[i][col] != 0:
                f = A[i][col] / piv
                row_i, row_p = A[i], A[rank]
                for j in range(col, n):
                    row_i[j] -= f * row_p[j]
                b[i] -= f * b[rank]
        piv_cols.append(col)
        rank += 1
        if rank == n:
            break
    for i in range(rank, n):
        if b[i] != 0:
            return CurvatureSolution(status=SolveStatus.INCONSISTENT, n=n, nullity=n - rank)

    w = [Fraction(0)] * n
    for i in range(rank - 1, -1, -1):
        col = piv_cols[i]
        s = b[i]
        row = A[i]
        for j in range(col + 1, n):
            if w[j] != 0:
                s -= row[j] * w[j]
        w[col] = s / row[col]

    l1 = sum((abs(x) for x in w), Fraction(0))
    min_entry = min(w)
    nonneg = min_entry >= 0
    warnings: list[str] = []
    if rank < n:
        warnings.append(
            f"system is underdetermined (nullity {n - rank}); w is the particular "
            "solution with free variables zeroed, so K is not canonical"
        )
    if l1 == 0:
        warnings.append("w = 0, so the l1 norm vanishes and K is undefined")
    return CurvatureSolution(
        status=SolveStatus.UNIQUE if rank == n else SolveStatus.UNDERDETERMINED,
        n=n,
        nullity=n - rank,
        w=tuple(w),
        l1_norm=l1,
        bound_K=Fraction(n) / l1 if l1 != 0 else None,
        min_entry=min_entry,
        nonneg=nonneg,
        warnings=tuple(warnings),
    )


def curvature_bound(sol: CurvatureSolution, n: int) -> Fraction:
    """K = n / ||w||_1, exactly."""
    if sol.status is SolveStatus.INCONSISTENT:
        raise InconsistentSystemError("no curvature vector exists for this graph")
    if sol.l1_norm == 0:
        raise InconsistentSystemError("w has zero l1 norm; the bound is undefined")
    return Fraction(n) / sol.l1_norm


def solve_curvature_float(D: DistanceMatrix) -> FloatSolution:
    """Partial-pivoting LU in doubles; residual recomputed, never assumed."""
    n = D.n
    A = D.entries.astype(np.float64)
    rhs = np.full(n, float(n))
    with warnings.catch_warnings():
        # singularity is decided by the explicit pivot check below
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(A)
    u_diag = np.abs(np.diagonal(lu))
    if u_diag.min() < FLOAT_PIVOT_FLOOR * n:
        raise NumericallySingularError(
            f"pivot {u_diag.min():.3e} below {FLOAT_PIVOT_FLOOR * n:.3e}; "
            "matrix is numerically singular"
        )
    w = scipy.linalg.lu_solve((lu, piv), rhs)
    residual = float(np.abs(A @ w - rhs).max())
    cond_hint = float(u_diag.min() / np.abs(A).max()) if n > 1 else 1.0
    return FloatSolution(w=w, residual_inf=residual, condition_hint=cond_hint)


def transitive_oracle(D: DistanceMatrix) -> Fraction | None:
    """K for distance-regular row sums: if all row sums equal S, K = S/n.

    Independent of the elimination path: when every row of D sums to S the
    constant vector (n/S) 1 solves D w = n 1 with l1 norm n^2/S.
    """
    sums = row_sums(D)
    if len(set(sums.tolist())) != 1:
        return None
    S = int(sums[0])
    if S == 0:
        return None
    return Fraction(S, D.n)
