"""Exact value and optimal strategies of the zero-sum game with payoff D.

One player mixes over vertices with a measure P and collects the worst-case
expected distance min_u (D P)_u; the opponent mixes over rows.  The game is
solved by the classic LP reduction in exact rational arithmetic with Bland's
anti-cycling rule.  D has a zero diagonal, so every payoff is shifted by +1
before the reduction (making the value strictly positive, as the reduction
requires) and the shift is subtracted again at the end.

Both optimality certificates are re-verified before a solution is returned:
    min_u (D . maximin)_u  =  value  =  max_u (D^T . minimax)_u
exactly, or the solver refuses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curvature import CurvatureSolution, SolveStatus, curvature_bound, solve_curvature
from .errors import HardVerificationError
from .measures import Measure
from .metric import DistanceMatrix


@dataclass(frozen=True)
class GameSolution:
    value: Fraction
    maximin_strategy: Measure  # P attaining max_P min_u (D P)_u
    minimax_strategy: Measure  # Q attaining min_Q max_u (D^T Q)_u


@dataclass(frozen=True)
class GameCurvatureComparison:
    value: Fraction
    K: Fraction
    equal: bool
    nonneg: bool


def game_value(D: DistanceMatrix) -> GameSolution:
    """Solve the matrix game on D exactly and verify both certificates."""
    n = D.n
    if n < 1:
        raise ValueError("game needs at least one vertex")
    rows = D.row_lists()
    M = [[Fraction(x + 1) for x in row] for row in rows]  # shifted payoffs, all >= 1

    y, duals = _simplex_bland(M)
    total = sum(y)
    if total <= 0 or sum(duals) != total:
        raise HardVerificationError("simplex returned a non-closing primal/dual pair")
    shifted_value = Fraction(1) / total
    # duals solve min sum x, M^T x >= 1: the column player's (maximin) side
    maximin = Measure(x * shifted_value for x in duals)
    minimax = Measure(x * shifted_value for x in y)
    value = shifted_value - 1

    low = min(
        sum((Fraction(rows[u][v]) * maximin.p[v] for v in range(n)), Fraction(0))
        for u in range(n)
    )
    high = max(
        sum((Fraction(rows[v][u]) * minimax.p[v] for v in range(n)), Fraction(0))
        for u in range(n)
    )
    if low != value or high != value:
        raise HardVerificationError(
            f"game certificates do not close: min(D P) = {low}, value = {value}, "
            f"max(D^T Q) = {high}"
        )
    return GameSolution(value=value, maximin_strategy=maximin, minimax_strategy=minimax)


def game_vs_curvature(D: DistanceMatrix, sol: CurvatureSolution | None = None) -> GameCurvatureComparison:
    """Compare the game value with K = n/||w||_1.

    When w is non-negative the minimax sandwich forces value = K exactly, so
    any difference is a hard error.  For signed w the upper bound still pins
    K <= B for every P, and value > K is the expected reading of a
    lower-bound failure; the observed relation is reported, not asserted.
    """
    if sol is None:
        sol = solve_curvature(D)
    if sol.status is not SolveStatus.UNIQUE:
        raise ValueError(f"comparison needs a unique curvature solution, got {sol.status.value}")
    K = curvature_bound(sol, D.n)
    value = game_value(D).value
    equal = value == K
    if sol.nonneg and not equal:
        raise HardVerificationError(
            f"w is non-negative but game value {value} != K = {K}; "
            "the von Neumann equivalence is violated"
        )
    return GameCurvatureComparison(value=value, K=K, equal=equal, nonneg=sol.nonneg)


def _simplex_bland(M: list[list[Fraction]]) -> tuple[list[Fraction], list[Fraction]]:
    """Primal simplex on: max sum(y) s.t. M y <= 1, y >= 0, entries of M > 0.

    The slack basis is feasible (b = 1 > 0) and the feasible set is bounded,
    so Bland's rule terminates at an optimum.  Returns the primal solution y
    and the dual solution read off the slack columns' reduced costs.
    """
    n = len(M)
    # tableau: n constraint rows over columns [y_0..y_{n-1}, s_0..s_{n-1} | b]
    T = [[M[i][j] for j in range(n)]
         + [Fraction(int(i == k)) for k in range(n)]
         + [Fraction(1)]
         for i in range(n)]
    cost = [Fraction(1)] * n + [Fraction(0)] * (n + 1)  # reduced costs; last entry = -objective
    basis = list(range(n, 2 * n))

    while True:
        enter = next((j for j in range(2 * n) if cost[j] > 0), None)  # Bland: lowest index
        if enter is None:
            break
        leave, best_ratio = -1, None
        for i in range(n):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][2 * n] / a
                if best_ratio is None or ratio < best_ratio or (
                    ratio == best_ratio and basis[i] < basis[leave]
                ):
                    leave, best_ratio = i, ratio
        if leave < 0:
            raise HardVerificationError("unbounded LP in game reduction; payoff shift is broken")
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(n):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[leave])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, T[leave])]
        basis[leave] = enter

    y = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        if bi < n:
            y[bi] = T[i][2 * n]
    duals = [-cost[n + i] for i in range(n)]
    return y, duals
