"""The discrete frozen-argument system and its spectrum.

The system on the uniform grid x_j = j h, h = pi / (l+1), reads

    y_{j+1} + y_{j-1} - w_j y_m = mu y_j,   j = 1..l,    y_0 = y_{l+1} = 0,

with w_j = h^2 q_j and mu = 2 - h^2 lambda.  Two solution families P, Q are
anchored at the frozen index m (P_{m-1} = 1, P_m = 0; Q_{m-1} = 0, Q_m = 1) and
the eigenvalues are the l zeros of the characteristic polynomial

    D(mu) = P_0(mu) Q_{l+1}(mu) - P_{l+1}(mu) Q_0(mu),

which is monic of degree l.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .chebypoly import Poly, PsiSeries, psi_to_poly
from .errors import BadIndex, NoConvergence, WrongCount


@dataclass(frozen=True)
class DiscreteProblem:
    """Grid size l, frozen index m, step h = pi/(l+1), and coefficients w_j = h^2 q_j."""

    l: int
    m: int
    h: float
    w: np.ndarray
    q: np.ndarray | None = None

    def __post_init__(self):
        if self.l < 1:
            raise WrongCount("grid size l must be >= 1")
        if not 1 <= self.m <= self.l:
            raise BadIndex(f"frozen index m={self.m} outside [1, {self.l}]")
        w = np.atleast_1d(np.asarray(self.w, dtype=complex)).copy()
        if len(w) != self.l:
            raise WrongCount(f"expected {self.l} coefficients, got {len(w)}")
        w.setflags(write=False)
        object.__setattr__(self, "w", w)
        if self.q is not None:
            q = np.atleast_1d(np.asarray(self.q, dtype=complex)).copy()
            q.setflags(write=False)
            object.__setattr__(self, "q", q)

    @staticmethod
    def from_w(w, m: int) -> "DiscreteProblem":
        """Build directly from the scaled coefficients w_j."""
        w = np.atleast_1d(np.asarray(w, dtype=complex))
        l = len(w)
        return DiscreteProblem(l=l, m=m, h=math.pi / (l + 1), w=w)

    @property
    def x(self) -> np.ndarray:
        """Interior grid points x_1..x_l."""
        return self.h * np.arange(1, self.l + 1)


@dataclass(frozen=True)
class Spectrum:
    """Paired eigenvalue lists, ordered by ascending Re(lambda), ties by Im."""

    mu: np.ndarray
    lam: np.ndarray

    def __post_init__(self):
        mu = np.atleast_1d(np.asarray(self.mu, dtype=complex)).copy()
        lam = np.atleast_1d(np.asarray(self.lam, dtype=complex)).copy()
        if len(mu) != len(lam):
            raise WrongCount("mu and lambda lists must have equal length")
        mu.setflags(write=False)
        lam.setflags(write=False)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "lam", lam)

    @staticmethod
    def from_mu(mu, h: float) -> "Spectrum":
        mu = np.atleast_1d(np.asarray(mu, dtype=complex))
        lam = (2.0 - mu) / h**2
        order = np.lexsort((lam.imag, lam.real))
        return Spectrum(mu=mu[order], lam=lam[order])


def sample_problem(q_values, m: int) -> DiscreteProblem:
    """Sample a potential on the grid: w_j = h^2 q_j with h = pi/(l+1)."""
    q = np.atleast_1d(np.asarray(q_values, dtype=complex))
    l = len(q)
    if l < 1:
        raise WrongCount("need at least one sample")
    if not 1 <= m <= l:
        raise BadIndex(f"frozen index m={m} outside [1, {l}]")
    h = math.pi / (l + 1)
    return DiscreteProblem(l=l, m=m, h=h, w=h * h * q, q=q)


class BoundaryPolys(NamedTuple):
    """The P and Q solution families at the boundary indices 0 and l+1."""

    p0: PsiSeries
    pl1: PsiSeries
    q0: PsiSeries
    ql1: PsiSeries


def _unit(j: int, n: int) -> np.ndarray:
    v = np.zeros(max(n, 1), dtype=complex)
    if j >= 1:
        v[j - 1] = 1.0
    return v


def pq_polynomials(p: DiscreteProblem) -> BoundaryPolys:
    """Closed psi-basis forms of P_0, P_{l+1}, Q_0, Q_{l+1}.

    P_0 = psi_m and P_{l+1} = -psi_{l-m+1} carry no potential dependence;
    Q_0 = -psi_{m-1} + sum_{j<m} w_j psi_j and
    Q_{l+1} = psi_{l-m+2} + sum_{j<=l-m+1} w_{l+1-j} psi_j.
    """
    l, m, w = p.l, p.m, p.w
    p0 = PsiSeries(_unit(m, m))
    pl1 = PsiSeries(-_unit(l - m + 1, l - m + 1))
    q0c = -_unit(m - 1, m - 1)
    for j in range(1, m):
        q0c[j - 1] += w[j - 1]
    ql1c = _unit(l - m + 2, l - m + 2)
    for j in range(1, l - m + 2):
        ql1c[j - 1] += w[l - j]  # w_{l+1-j}
    return BoundaryPolys(p0=p0, pl1=pl1, q0=PsiSeries(q0c), ql1=PsiSeries(ql1c))


def _boundary_values(p: DiscreteProblem, mu: np.ndarray, derivatives: bool = False):
    """Run the recurrence both directions from the frozen index, vectorized in mu.

    Returns (P0, Pl1, Q0, Ql1) and, when requested, their mu-derivatives.
    Both families have constant value at index m, so the w-term never enters
    the derivative recurrences.
    """
    l, m, w = p.l, p.m, p.w
    one = np.ones_like(mu)
    zero = np.zeros_like(mu)

    def sweep(y_m1, y_m, y_at_m):
        # upward: equation at j = m..l yields indices m+1..l+1
        yp, yc = y_m1, y_m
        dp, dc = zero.copy(), zero.copy()
        for j in range(m, l + 1):
            yn = mu * yc - yp + w[j - 1] * y_at_m
            dn = mu * dc + yc - dp
            yp, yc = yc, yn
            dp, dc = dc, dn
        top, dtop = yc, dc
        # downward: equation at j = m-1..1 yields indices m-2..0
        yp, yc = y_m, y_m1
        dp, dc = zero.copy(), zero.copy()
        for j in range(m - 1, 0, -1):
            yn = mu * yc - yp + w[j - 1] * y_at_m
            dn = mu * dc + yc - dp
            yp, yc = yc, yn
            dp, dc = dc, dn
        return yc, dc, top, dtop

    p0, dp0, pl1, dpl1 = sweep(one, zero, 0.0)
    q0, dq0, ql1, dql1 = sweep(zero, one, 1.0)
    if derivatives:
        return (p0, pl1, q0, ql1), (dp0, dpl1, dq0, dql1)
    return (p0, pl1, q0, ql1), None


def d_eval(p: DiscreteProblem, mu):
    """Characteristic function D(mu) by running the recurrence (O(l) per point)."""
    mu_arr = np.atleast_1d(np.asarray(mu, dtype=complex))
    (p0, pl1, q0, ql1), _ = _boundary_values(p, mu_arr)
    d = p0 * ql1 - pl1 * q0
    return d if np.ndim(mu) else complex(d[0])


def _d_and_derivative(p: DiscreteProblem, mu: np.ndarray):
    (p0, pl1, q0, ql1), (dp0, dpl1, dq0, dql1) = _boundary_values(p, mu, derivatives=True)
    d = p0 * ql1 - pl1 * q0
    dd = dp0 * ql1 + p0 * dql1 - dpl1 * q0 - pl1 * dq0
    return d, dd


def char_poly(p: DiscreteProblem) -> Poly:
    """D(mu) as a monic degree-l Poly, assembled symbolically in the psi basis.

    D = psi_m * Q_{l+1} + psi_{l-m+1} * Q_0, expanded term by term with the
    unit-coefficient product rule of psi_mul, then converted to monomials.
    """
    l, m = p.l, p.m
    polys = pq_polynomials(p)
    acc = np.zeros(l + 1, dtype=complex)

    def add_product(a: int, series: PsiSeries):
        if a < 1:
            return
        for j in range(1, series.n + 1):
            c = series.coeffs[j - 1]
            if c == 0:
                continue
            for k in range(min(a, j)):
                acc[a + j - 2 - 2 * k] += c

    add_product(m, polys.ql1)
    add_product(l - m + 1, polys.q0)
    return psi_to_poly(PsiSeries(acc))


def discrete_spectrum(p: DiscreteProblem, max_iterations: int = 500) -> Spectrum:
    """All l eigenvalues of the discrete problem.

    Simultaneous Aberth iteration on the characteristic function, evaluated
    together with its derivative by the recurrence (the expanded monomial
    coefficients lose all accuracy near mu = +-2 once l grows past ~30), then
    a few Newton polishing steps per root.  Starting points sit on a circle
    that encloses the spectrum by the Gershgorin bound |mu| <= 2 + 2 max|w_j|.
    """
    l = p.l
    if l == 1:
        mu = np.array([-p.w[0]])
        return Spectrum.from_mu(mu, p.h)
    wmax = float(np.abs(p.w).max(initial=0.0))
    radius = 2.5 + 2.0 * wmax
    k = np.arange(l)
    z = radius * np.exp(1j * (2 * np.pi * k / l + 0.39))
    converged = False
    for _ in range(max_iterations):
        d, dd = _d_and_derivative(p, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = np.where(dd != 0, d / np.where(dd == 0, 1, dd), 0.0)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            s = (1.0 / diff).sum(axis=1)
            denom = 1.0 - newton * s
            step = newton / np.where(denom == 0, 1, denom)
        step = np.where(np.isfinite(step), step, 0.0)
        z = z - step
        if np.all(np.abs(step) <= 1e-14 * (1.0 + np.abs(z))):
            converged = True
            break
    if not converged:
        d, _ = _d_and_derivative(p, z)
        res = np.abs(d) / (1.0 + np.abs(z)) ** l
        raise NoConvergence(
            f"spectrum iteration hit the cap ({max_iterations}); worst residual {res.max():.3e}",
            worst_residual=float(res.max()),
        )
    for _ in range(3):
        d, dd = _d_and_derivative(p, z)
        good = dd != 0
        z = np.where(good, z - d / np.where(good, dd, 1), z)
    return Spectrum.from_mu(z, p.h)


def free_lambdas(l: int) -> np.ndarray:
    """Eigenvalues 4 sin^2(n h / 2) / h^2, n = 1..l, of the zero-potential problem."""
    h = math.pi / (l + 1)
    n = np.arange(1, l + 1)
    return 4.0 * np.sin(n * h / 2.0) ** 2 / h**2
