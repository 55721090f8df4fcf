"""Independent reference implementations used only by tests.

These deliberately take different algorithmic routes than the library
(Floyd-Warshall instead of BFS, dense float LP instead of exact simplex) so
agreement is meaningful.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from scipy.optimize import linprog

from graphcurv import Graph


def floyd_warshall(g: Graph) -> np.ndarray:
    """All-pairs shortest paths by the triple loop; inf stays for unreachable."""
    n = g.n
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    for u in range(n):
        for v in g.adjacency[u]:
            dist[u, v] = 1.0
    for k in range(n):
        dist = np.minimum(dist, dist[:, k:k + 1] + dist[k:k + 1, :])
    return dist


def game_value_float(D: np.ndarray) -> float:
    """Matrix-game value via scipy's LP solver (float), for cross-checking.

    Solves min sum(x) s.t. (D + 1)^T x >= 1, x >= 0 and returns 1/sum(x) - 1.
    """
    M = D.astype(float) + 1.0
    n = M.shape[0]
    res = linprog(c=np.ones(n), A_ub=-M.T, b_ub=-np.ones(n), bounds=[(0, None)] * n,
                  method="highs")
    assert res.success, res.message
    return 1.0 / res.fun - 1.0


def solve_system_fraction_lstsq(D: np.ndarray, n: int) -> list[Fraction] | None:
    """Tiny-system solver by Cramer's rule; None when det = 0.

    Only used to double-check hand fixtures on very small unique systems.
    """
    size = D.shape[0]
    A = [[Fraction(int(D[i, j])) for j in range(size)] for i in range(size)]
    det = _det(A)
    if det == 0:
        return None
    out = []
    for col in range(size):
        Ac = [row[:] for row in A]
        for i in range(size):
            Ac[i][col] = Fraction(n)
        out.append(_det(Ac) / det)
    return out


def _det(A: list[list[Fraction]]) -> Fraction:
    n = len(A)
    if n == 1:
        return A[0][0]
    total = Fraction(0)
    for j in range(n):
        if A[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in A[1:]]
        total += (-1) ** j * A[0][j] * _det(minor)
    return total
