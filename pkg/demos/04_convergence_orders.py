"""Empirical convergence orders of the correction-term approximation.

Measures |lambda_{n,l} - lambda~_{n,l}| across grid refinements and fits
log-log slopes: second order for fixed n, and the faster uniform rate of the
correction residual for the tent potential whose folded form vanishes at 0.
Run as: python demos/04_convergence_orders.py
"""

from frozenarg import convergence_study, quadratic_potential, tent_potential

for make, ms in ((quadratic_potential, (5, 10, 20, 40)), (tent_potential, (5, 10, 20, 40))):
    pot = make()
    study = convergence_study(pot, ms=ms, ns=(1, 3))
    print(f"q = {pot.kind}")
    print("  n   m     h          |lambda_nl - lambda~_nl|")
    for n, m, h, e in study.rows:
        print(f"  {n}  {m:3d}  {h:.5f}   {e:.3e}")
    for n, slope in study.slopes.items():
        print(f"  slope at n = {n}: {slope:.3f}" if slope is not None else f"  n = {n}: exact")
    print(f"  tail residual (odd n >= m) slope:  {study.tail_slope:.3f}")
    print(f"  half-ratio trapezoid sums slope:   {study.trapezoid_slope:.3f}")
    print()
