"""Recover a symmetric potential from finitely many continuous eigenvalues.

Pipeline for a = pi/2, l = 2m-1, q(x) = q(pi - x): map each continuous
eigenvalue to a surrogate discrete one with the correction term

    lambda~_{n,l} = lambda_n - n^2 + 4 sin^2(n h / 2) / h^2,     h = pi / (2m),

convert to mu = 2 - h^2 lambda~, run the symmetric discrete inversion, and
scale the psi coordinates back to potential values.  Also houses the
half-weighted trapezoid sums and the empirical convergence-order harness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .continuous import BenchmarkPotential, continuous_spectrum
from .discrete import Spectrum, discrete_spectrum, sample_problem
from .errors import WrongCount
from .inverse import solve_symmetric


def correction(lambda_n: float, n: int, m: int) -> float:
    """Surrogate discrete eigenvalue lambda_n - n^2 + 4 sin^2(n h / 2) / h^2."""
    if not 1 <= n <= 2 * m - 1:
        raise WrongCount(f"index n={n} outside [1, {2 * m - 1}]")
    h = math.pi / (2 * m)
    return lambda_n - n * n + 4.0 * math.sin(n * h / 2.0) ** 2 / h**2


@dataclass
class ReconstructionResult:
    """Output of the correction-term reconstruction.

    q_tilde covers the full grid x_1..x_l (l = 2m-1), extended from the first
    half by the assumed symmetry; delta_q is filled by error_report when the
    true potential is known.
    """

    m: int
    h: float
    tilde_lambda: np.ndarray
    mu: np.ndarray
    z: np.ndarray
    q_tilde: np.ndarray
    delta_q: np.ndarray | None = None

    @property
    def l(self) -> int:
        return 2 * self.m - 1


def reconstruct(lambdas_odd, m: int) -> ReconstructionResult:
    """Run the correction-term inversion on lambda_n, n = 1, 3, .., 2m-1.

    Shares the symmetric solver code path: the psi coordinates z are exactly
    the solve_symmetric output (pair sums and the middle value), scaled by
    q_j = z_j / (2 h^2) for j < m and q_m = z_m / h^2.
    """
    lambdas_odd = np.atleast_1d(np.asarray(lambdas_odd, dtype=float))
    if len(lambdas_odd) != m:
        raise WrongCount(f"expected {m} odd-index eigenvalues, got {len(lambdas_odd)}")
    h = math.pi / (2 * m)
    tilde = np.array(
        [correction(lam, 2 * k + 1, m) for k, lam in enumerate(lambdas_odd)]
    )
    mu = 2.0 - h * h * tilde
    wm, s = solve_symmetric(mu, m)
    z = np.append(s, wm)
    assert np.abs(z.imag).max(initial=0.0) <= 1e-9, "imaginary residue above tolerance"
    q_half = np.empty(m)
    q_half[: m - 1] = z[: m - 1].real / (2.0 * h * h)
    q_half[m - 1] = z[m - 1].real / (h * h)
    q_full = np.concatenate([q_half, q_half[: m - 1][::-1]])  # q_{l+1-j} = q_j
    return ReconstructionResult(m=m, h=h, tilde_lambda=tilde, mu=mu, z=z, q_tilde=q_full)


def reconstruct_from_potential(pot: BenchmarkPotential, m: int) -> ReconstructionResult:
    """Convenience: continuous eigenvalues of pot -> reconstruct."""
    spec = continuous_spectrum(pot, 2 * m - 1)
    return reconstruct(spec.odd_lambdas, m)


@dataclass(frozen=True)
class ErrorReport:
    """Side-by-side eigenvalue and potential tables.

    eigen_rows: (n, lambda_n, lambda_nl, lambda_tilde, delta_nl)
    potential_rows: (j, x_j, q_j, q_tilde_j, delta_j), j = 1..m
    """

    eigen_rows: tuple
    potential_rows: tuple

    def format_text(self) -> str:
        """Fixed 4-decimal layout for visual diffing against printed tables."""
        ns = [r[0] for r in self.eigen_rows]
        lines = []
        head = "            " + " ".join(f"lambda_{n:<3d}" for n in ns)
        lines.append(head)
        for label, idx in (
            ("lambda_n   ", 1),
            ("lambda_nl  ", 2),
            ("lambda~_nl ", 3),
            ("delta_nl   ", 4),
        ):
            lines.append(label + " ".join(f"{r[idx]:10.4f}" for r in self.eigen_rows))
        lines.append("            " + " ".join(f"q_{r[0]:<8d}" for r in self.potential_rows))
        lines.append("q~_j       " + " ".join(f"{r[3]:10.4f}" for r in self.potential_rows))
        lines.append("delta_j    " + " ".join(f"{r[4]:10.4f}" for r in self.potential_rows))
        return "\n".join(lines)


def error_report(
    result: ReconstructionResult,
    pot: BenchmarkPotential,
    discrete_oracle: Spectrum | None = None,
) -> ErrorReport:
    """Compare a reconstruction against the true potential and discrete spectrum.

    discrete_oracle may supply the forward spectrum of the sampled potential;
    otherwise it is computed here.  delta_nl = lambda_nl - lambda~_nl and
    delta_j = q(x_j) - q~_j are also written back into result.delta_q.
    """
    m, h = result.m, result.h
    l = result.l
    xs = h * np.arange(1, l + 1)
    if discrete_oracle is None:
        discrete_oracle = discrete_spectrum(sample_problem(pot.q(xs), m))
    lam_sorted = discrete_oracle.lam.real
    eigen_rows = []
    for k in range(m):
        n = 2 * k + 1
        tilde = result.tilde_lambda[k]
        lam_n = tilde + n * n - 4.0 * math.sin(n * h / 2.0) ** 2 / h**2
        lam_nl = float(lam_sorted[n - 1])
        eigen_rows.append((n, float(lam_n), lam_nl, float(tilde), lam_nl - float(tilde)))
    q_true = np.asarray(pot.q(xs[:m]), dtype=float)
    potential_rows = [
        (j + 1, float(xs[j]), float(q_true[j]), float(result.q_tilde[j]), float(q_true[j] - result.q_tilde[j]))
        for j in range(m)
    ]
    result.delta_q = np.array([r[4] for r in potential_rows])
    return ErrorReport(eigen_rows=tuple(eigen_rows), potential_rows=tuple(potential_rows))


def trapz_prime_sum(p_values, n: int, m: int) -> complex:
    """Half-weighted sum  1/2 p_0 sin(0) + sum_{j=1}^{m-1} p_j sin(n x_j) + 1/2 p_m sin(n x_m).

    p_values are samples at x_j = j h, j = 0..m, h = pi / (2m): the discrete
    counterpart of the sine integral under the trapezoidal rule.
    """
    p_values = np.atleast_1d(np.asarray(p_values, dtype=complex))
    if len(p_values) != m + 1:
        raise WrongCount(f"expected {m + 1} samples, got {len(p_values)}")
    h = math.pi / (2 * m)
    x = h * np.arange(m + 1)
    weights = np.ones(m + 1)
    weights[0] = weights[-1] = 0.5
    return complex(np.sum(weights * p_values * np.sin(n * x)))


def _loglog_slope(hs, es) -> float | None:
    """Least-squares slope of log(e) against log(h).

    None (meaning: exact, slope undefined) when any value sits at or below the
    round-off floor, as for the zero potential.
    """
    es = np.asarray(es, dtype=float)
    if np.any(es <= 1e-10):
        return None
    x = np.log(np.asarray(hs, dtype=float))
    y = np.log(es)
    a = np.vstack([x, np.ones_like(x)]).T
    return float(np.linalg.lstsq(a, y, rcond=None)[0][0])


@dataclass(frozen=True)
class ConvergenceStudy:
    """Empirical orders for the correction-term approximation.

    rows: (n, m, h, |lambda_nl - lambda~_nl|) for each requested n;
    slopes[n]: log-log slope of that error against h (None = identically zero,
    i.e. exact).  trapezoid_rows track |sum' p_j sin(n x_j)| at the half ratio
    n/(2m) ~ 1/2; tail_rows track the worst correction error over odd n >= m.
    """

    rows: tuple
    slopes: dict
    trapezoid_rows: tuple
    trapezoid_slope: float | None
    tail_rows: tuple
    tail_slope: float | None


def convergence_study(pot: BenchmarkPotential, ms, ns) -> ConvergenceStudy:
    """Measure correction-error decay across grid refinements.

    For each m, the full discrete spectrum of the sampled potential and the
    continuous eigenvalues (bisection on R) are computed once; errors
    e_{n,m} = |lambda_{n,l} - lambda~_{n,l}| are tabulated for the requested
    odd n, for the half-ratio trapezoid sums, and for the worst odd n >= m.
    """
    ms = [int(m) for m in ms]
    ns = [int(n) for n in ns]
    if any(n < 1 or n % 2 == 0 for n in ns):
        raise WrongCount("ns must be odd positive integers")
    lam_cont: dict[int, float] = {}

    def lam_n(n, n_max):
        if n not in lam_cont:
            spec = continuous_spectrum(pot, n_max)
            lam_cont.update(dict(spec.odd))
        return lam_cont[n]

    rows = []
    trapezoid_rows = []
    tail_rows = []
    for m in ms:
        l = 2 * m - 1
        h = math.pi / (2 * m)
        xs = h * np.arange(1, l + 1)
        spectrum = discrete_spectrum(sample_problem(pot.q(xs), m))
        lam_d = spectrum.lam.real
        for n in ns:
            if n > l:
                continue
            tilde = correction(lam_n(n, l), n, m)
            rows.append((n, m, h, abs(float(lam_d[n - 1]) - tilde)))
        worst = 0.0
        for n in range(m if m % 2 == 1 else m + 1, l + 1, 2):
            tilde = correction(lam_n(n, l), n, m)
            worst = max(worst, abs(float(lam_d[n - 1]) - tilde))
        tail_rows.append((m, h, worst))
        n_half = m if m % 2 == 1 else m + 1
        p_vals = np.asarray(pot.p(h * np.arange(m + 1)), dtype=complex)
        trapezoid_rows.append((m, h, n_half, abs(trapz_prime_sum(p_vals, n_half, m))))

    slopes = {}
    for n in ns:
        sub = [(r[2], r[3]) for r in rows if r[0] == n]
        slopes[n] = _loglog_slope([h for h, _ in sub], [e for _, e in sub]) if len(sub) >= 2 else None
    trapezoid_slope = _loglog_slope([r[1] for r in trapezoid_rows], [r[3] for r in trapezoid_rows])
    tail_slope = _loglog_slope([r[1] for r in tail_rows], [r[2] for r in tail_rows])
    return ConvergenceStudy(
        rows=tuple(rows),
        slopes=slopes,
        trapezoid_rows=tuple(trapezoid_rows),
        trapezoid_slope=trapezoid_slope,
        tail_rows=tuple(tail_rows),
        tail_slope=tail_slope,
    )
