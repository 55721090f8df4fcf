"""The minimax sandwich A <= K <= B, certified exactly.

Pick any probability measure P on the vertices.  The transport vector D P
gives each vertex its expected distance to a P-random vertex; A and B are
its extremes.  With K = n / ||w||_1, the sandwich A <= K <= B holds for
every P when w is non-negative, and K <= B holds regardless.  The engine is
the one-line identity <w, D P> = n, which we check here exactly for every
measure in the battery.
"""

from graphcurv import (
    apsp,
    identity_check,
    measure_battery,
    measure_uniform,
    path,
    solve_curvature,
    transport_vector,
    verify_minimax,
)
from graphcurv.rationals import rational_str

g = path(3)
D = apsp(g)
sol = solve_curvature(D)
K = sol.bound_K
print(f"path(3): K = {rational_str(K)}, w = {[rational_str(x) for x in sol.w]}")

uniform = measure_uniform(3)
tb = transport_vector(D, uniform)
print("uniform measure: D P =", [rational_str(x) for x in tb.dp])
print(f"  A = {rational_str(tb.A)} <= K = {rational_str(K)} <= B = {rational_str(tb.B)}")
print("  identity <w, D P> =", identity_check(sol.w, D, uniform), "(= n)")

battery = measure_battery(g.n, samples=200, seed=0)
print(f"\nbattery of {len(battery)} measures (deltas, uniform, pairs, random):")
for _, mu in battery:
    assert identity_check(sol.w, D, mu) == g.n
print("  inner-product identity: exact on every measure")

report = verify_minimax(D, sol, battery)
print(f"  sandwich: {report.measures_checked} checked, "
      f"{report.lower_failures} lower failures, {report.upper_failures} upper failures")
tight = sum(r.upper_tight for r in report.records)
print(f"  measures where K = B exactly: {tight}")
