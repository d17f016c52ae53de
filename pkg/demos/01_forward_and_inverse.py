"""Forward and inverse problems for the discrete frozen-argument system.

Walks through the basic loop: sample a potential on the grid, compute the
spectrum, then recover the coefficients back from the eigenvalues alone.
Run as: python demos/01_forward_and_inverse.py
"""

import math

import numpy as np

from frozenarg import (
    DegenerateData,
    DiscreteProblem,
    discrete_spectrum,
    sample_problem,
    solve_degenerate,
    solve_nondegenerate,
    strip_degenerate,
)

# --- forward problem -------------------------------------------------------
# grid of l = 11 points on (0, pi), frozen point at x_4 (gcd(4, 12) = 4 would
# degenerate, so pick m = 3: gcd(3, 12) = 3 degenerates too; m = 5 works)
l, m = 11, 5
h = math.pi / (l + 1)
xs = h * np.arange(1, l + 1)
q = np.cos(xs) + 0.3 * xs
problem = sample_problem(q, m)
spectrum = discrete_spectrum(problem)

print(f"l = {l}, m = {m}, gcd(m, l+1) = {math.gcd(m, l + 1)}")
print("eigenvalues lambda_{n,l}:")
print(np.array_str(spectrum.lam.real, precision=4, suppress_small=True))

# the trace identity ties the mu eigenvalues to the coefficient at the
# frozen point: sum(mu) = -w_m
print(f"\ntrace check: sum(mu) = {spectrum.mu.sum():.6f}, -w_m = {-problem.w[m - 1]:.6f}")

# --- inverse problem (non-degenerate) --------------------------------------
recovered_w = solve_nondegenerate(spectrum.mu, m)
recovered_q = recovered_w / h**2
print(f"\nrecovered q from the spectrum, worst error: "
      f"{np.abs(recovered_q - q).max():.2e}")

# --- degenerate configuration ----------------------------------------------
# with m = 4 the spectrum contains the potential-independent values
# 2 cos(pi k / 4); inversion then needs w_{m-d+1}..w_{m-1} up front
l2, m2 = 11, 4
d = math.gcd(m2, l2 + 1)
w2 = (math.pi / (l2 + 1)) ** 2 * np.sin(np.arange(1, l2 + 1))
spec2 = discrete_spectrum(DiscreteProblem.from_w(w2, m2))
print(f"\ndegenerate case l = {l2}, m = {m2}: d = {d}")
print("potential-independent mu values present:",
      np.round([2 * math.cos(math.pi * k / d) for k in range(1, d)], 6).tolist())

reduced = strip_degenerate(spec2.mu, l2, m2)
data = DegenerateData(side="left", known_w=w2[m2 - d : m2 - 1], d=d)
recovered2 = solve_degenerate(reduced, m2, l2, data)
print(f"degenerate inversion worst error: {np.abs(recovered2 - w2).max():.2e}")
