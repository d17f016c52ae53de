"""Polynomial substrate: the psi basis, conversions, arithmetic, interpolation, roots.

The basis polynomials are the monic second-kind-Chebyshev relatives

    psi_0 = 0,  psi_1 = 1,  psi_{n+1}(mu) = mu * psi_n(mu) - psi_{n-1}(mu),

so psi_n(2 cos theta) = sin(n theta) / sin(theta), deg(psi_n) = n - 1, and the
zeros of psi_n are 2 cos(pi k / n), k = 1..n-1.  Their monomial coefficients are
integers, exact in double precision up to n ~ 80, which several routines exploit.

Everything here works over complex double-precision coefficients.  The basis
conversions additionally carry a compensated (double-double) accumulation so the
psi -> monomial -> psi round trip stays at the 1e-12 level out to n = 64, where
plain doubles lose the low-order coordinates entirely.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DegreeMismatch, DuplicateNode, InexactDivision, NoConvergence, WrongCount

_SPLITTER = 134217729.0  # 2**27 + 1, Dekker splitting constant


# ---------------------------------------------------------------------------
# compensated arithmetic helpers (vectorized over float64 arrays)
# ---------------------------------------------------------------------------

def _two_sum(a, b):
    """Exact a + b = s + err for doubles."""
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _two_prod(a, b):
    """Exact a * b = p + err for doubles (Dekker split, no FMA needed)."""
    p = a * b
    ca = _SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def _dd_axpy(hi, lo, c, v, sign=1.0):
    """In place hi+lo += sign * c * v with c scalar float, v float array."""
    p, e = _two_prod(sign * c, v)
    s, err = _two_sum(hi, p)
    hi[:], lo[:] = _two_sum(s, err + lo + e)


# ---------------------------------------------------------------------------
# psi coefficient tables
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _psi_coeffs(n: int) -> np.ndarray:
    """Monomial coefficients of psi_n, ascending powers, as exact float integers."""
    if n == 0:
        return np.zeros(0)
    a = np.zeros(1)
    b = np.ones(1)
    for _ in range(1, n):
        c = np.zeros(len(b) + 1)
        c[1:] += b
        c[: len(a)] -= a
        a, b = b, c
    b.setflags(write=False)
    return b


# ---------------------------------------------------------------------------
# Poly
# ---------------------------------------------------------------------------

class Poly:
    """Dense polynomial in the monomial basis, complex coefficients.

    ``coeffs[k]`` is the coefficient of mu**k; trailing exact zeros are trimmed,
    so the zero polynomial has an empty coefficient array and degree -1.

    A ``Poly`` may carry a hidden low-order compensation array (``_comp``)
    produced by :func:`psi_to_poly`; :func:`poly_to_psi` consumes it.  The
    visible coefficients are always the double-rounded values.
    """

    __slots__ = ("coeffs", "_comp")

    def __init__(self, coeffs, _comp=None):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
        nz = np.nonzero(c)[0]
        end = nz[-1] + 1 if len(nz) else 0
        self.coeffs = c[:end].copy()
        self.coeffs.setflags(write=False)
        if _comp is not None:
            comp = np.zeros(end, dtype=complex)
            comp[: min(end, len(_comp))] = np.asarray(_comp, dtype=complex)[:end]
            comp.setflags(write=False)
            self._comp = comp
        else:
            self._comp = None

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly(np.zeros(0))

    @staticmethod
    def one() -> "Poly":
        return Poly([1.0])

    @staticmethod
    def monomial(k: int, c=1.0) -> "Poly":
        """c * mu**k."""
        v = np.zeros(k + 1, dtype=complex)
        v[k] = c
        return Poly(v)

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> complex:
        return complex(self.coeffs[k]) if 0 <= k <= self.degree else 0.0 + 0.0j

    def __call__(self, mu):
        """Horner evaluation; accepts scalars or arrays."""
        mu = np.asarray(mu, dtype=complex)
        out = np.zeros_like(mu)
        for c in self.coeffs[::-1]:
            out = out * mu + c
        return out if out.ndim else complex(out)

    def __repr__(self):
        return f"Poly(degree={self.degree})"

    def __eq__(self, other):
        return isinstance(other, Poly) and np.array_equal(self.coeffs, other.coeffs)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        c = np.zeros(n, dtype=complex)
        c[: len(self.coeffs)] += self.coeffs
        c[: len(other.coeffs)] += other.coeffs
        return Poly(c)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(-self.coeffs)

    def scale(self, c) -> "Poly":
        return Poly(c * self.coeffs)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.degree < 0 or other.degree < 0:
            return Poly.zero()
        return Poly(np.convolve(self.coeffs, other.coeffs))

    def divide_exact(self, divisor: "Poly", tol: float = 1e-10) -> "Poly":
        """Quotient self / divisor when the division is exact in theory.

        Synthetic division; the remainder only measures round-off, asserted
        below tol * ||self||_inf.
        """
        if divisor.degree < 0:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.degree < divisor.degree:
            if np.abs(self.coeffs).max(initial=0.0) <= tol:
                return Poly.zero()
            raise InexactDivision("dividend has lower degree than divisor")
        r = np.array(self.coeffs, dtype=complex)
        d = divisor.coeffs
        lead = d[-1]
        q = np.zeros(self.degree - divisor.degree + 1, dtype=complex)
        for k in range(len(q) - 1, -1, -1):
            q[k] = r[k + divisor.degree] / lead
            r[k : k + divisor.degree + 1] -= q[k] * d
        rem = np.abs(r[: divisor.degree]).max(initial=0.0)
        scale = np.abs(self.coeffs).max(initial=1.0)
        if rem > tol * scale:
            raise InexactDivision(
                f"remainder norm {rem:.3e} exceeds {tol:.1e} * ||dividend||"
            )
        return Poly(q)


# ---------------------------------------------------------------------------
# PsiSeries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PsiSeries:
    """Coefficients c_1..c_N of sum_j c_j psi_j (psi_j monic, degree j-1)."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        if len(c) == 0:
            c = np.zeros(1, dtype=complex)
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, j: int) -> complex:
        """Coefficient of psi_j (1-based)."""
        return complex(self.coeffs[j - 1])


def psi_eval(n: int, mu):
    """psi_n(mu) by the three-term recurrence; mu may be a scalar or array."""
    if n < 0:
        raise WrongCount("psi index must be non-negative")
    mu = np.asarray(mu, dtype=complex)
    a = np.zeros_like(mu)
    if n == 0:
        return a if a.ndim else complex(a)
    b = np.ones_like(mu)
    for _ in range(1, n):
        a, b = b, mu * b - a
    return b if b.ndim else complex(b)


def psi_poly(n: int) -> Poly:
    """psi_n as a monomial Poly (integer coefficients)."""
    return Poly(_psi_coeffs(n))


def psi_zeros(n: int) -> np.ndarray:
    """The n-1 zeros 2 cos(pi k / n), k = 1..n-1, in ascending k."""
    if n < 1:
        raise WrongCount("psi_zeros requires n >= 1")
    k = np.arange(1, n)
    return 2.0 * np.cos(np.pi * k / n)


def psi_to_poly(series: PsiSeries) -> Poly:
    """Expand a psi series into monomial coefficients (compensated)."""
    cs = series.coeffs
    n = len(cs)
    hi_r = np.zeros(n)
    lo_r = np.zeros(n)
    hi_i = np.zeros(n)
    lo_i = np.zeros(n)
    for j in range(1, n + 1):
        c = cs[j - 1]
        if c == 0:
            continue
        pj = _psi_coeffs(j)
        _dd_axpy(hi_r[:j], lo_r[:j], c.real, pj)
        _dd_axpy(hi_i[:j], lo_i[:j], c.imag, pj)
    return Poly(hi_r + 1j * hi_i, _comp=lo_r + 1j * lo_i)


def poly_to_psi(p: Poly, n: int | None = None, tol: float = 1e-9) -> PsiSeries:
    """Coordinates of p with respect to psi_1..psi_n.

    The change-of-basis matrix is unit upper triangular (psi_j monic), solved
    by back-substitution with compensated accumulation.  If n is given and p
    carries coefficients beyond mu**(n-1), they must be negligible (round-off
    from exact cancellations upstream) or DegreeMismatch is raised.
    """
    if n is None:
        n = max(p.degree + 1, 1)
    if n < 1:
        raise WrongCount("psi series length must be >= 1")
    scale = np.abs(p.coeffs).max(initial=1.0)
    for k in range(n, p.degree + 1):
        if abs(p.coeffs[k]) > tol * scale:
            raise DegreeMismatch(
                f"degree {p.degree} polynomial does not fit in psi_1..psi_{n}"
            )
    hi_r = np.zeros(n)
    lo_r = np.zeros(n)
    hi_i = np.zeros(n)
    lo_i = np.zeros(n)
    m = min(n, len(p.coeffs))
    hi_r[:m] = p.coeffs[:m].real
    hi_i[:m] = p.coeffs[:m].imag
    if p._comp is not None:
        lo_r[:m] = p._comp[:m].real
        lo_i[:m] = p._comp[:m].imag
    cs = np.zeros(n, dtype=complex)
    for j in range(n, 0, -1):
        c = complex(hi_r[j - 1] + lo_r[j - 1], hi_i[j - 1] + lo_i[j - 1])
        cs[j - 1] = c
        if c == 0:
            continue
        pj = _psi_coeffs(j)
        _dd_axpy(hi_r[:j], lo_r[:j], c.real, pj, sign=-1.0)
        _dd_axpy(hi_i[:j], lo_i[:j], c.imag, pj, sign=-1.0)
    return PsiSeries(cs)


def psi_mul(a: int, b: int) -> PsiSeries:
    """psi_a * psi_b in the psi basis.

    The product expands with unit coefficients at indices a+b-1-2k,
    k = 0..min(a,b)-1 (exact integer identity).
    """
    if a < 1 or b < 1:
        raise WrongCount("psi_mul requires indices >= 1")
    out = np.zeros(a + b - 1, dtype=complex)
    for k in range(min(a, b)):
        out[a + b - 2 - 2 * k] = 1.0
    return PsiSeries(out)


# ---------------------------------------------------------------------------
# products, interpolation, roots
# ---------------------------------------------------------------------------

def _conjugate_adjacent(roots) -> list[complex]:
    """Order pairing conjugates next to each other (real part, |imag|, imag)."""
    return sorted((complex(r) for r in roots), key=lambda z: (z.real, abs(z.imag), z.imag))


def poly_from_roots(roots) -> Poly:
    """Monic Poly with the given roots (multiset).

    The product is accumulated with conjugate roots adjacent, so conjugate-
    symmetric inputs keep the running product near-real and the final
    coefficients real to ~1e-12.
    """
    c = np.ones(1, dtype=complex)
    for r in _conjugate_adjacent(roots):
        nxt = np.zeros(len(c) + 1, dtype=complex)
        nxt[1:] += c
        nxt[:-1] -= r * c
        c = nxt
    return Poly(c)


def leja_order(points) -> list[complex]:
    """Greedy Leja ordering: start at max modulus, then maximize distance products."""
    pts = [complex(p) for p in points]
    return [pts[i] for i in _leja_index_order(pts)]


def psi_from_roots(roots) -> PsiSeries:
    """Monic product prod (mu - r) expressed directly in the psi basis.

    Accumulated via mu * psi_j = psi_{j+1} + psi_{j-1} with Leja-ordered roots,
    which keeps intermediate coefficients O(1) for roots in [-2, 2]; the
    monomial route loses ~eps * F_m there.  Leading coefficient is exactly 1.
    """
    rs = leja_order(roots)
    c = np.zeros(len(rs) + 1, dtype=complex)
    c[0] = 1.0  # psi_1
    deg = 1
    for r in rs:
        nxt = np.zeros_like(c)
        nxt[1 : deg + 1] += c[:deg]       # psi_j -> psi_{j+1}
        nxt[: deg - 1] += c[1:deg]        # psi_j -> psi_{j-1}, psi_0 = 0
        nxt[:deg] -= r * c[:deg]
        c = nxt
        deg += 1
    return PsiSeries(c)


def interpolate(nodes, values) -> Poly:
    """Unique Poly of degree < #nodes through the (node, value) pairs.

    Newton divided differences on Leja-ordered nodes; the natural node sets
    2 cos(pi k / n) cluster at +-2 and lose digits beyond n ~ 30 without the
    reordering.
    """
    nodes = [complex(x) for x in nodes]
    values = [complex(v) for v in values]
    if len(nodes) != len(values):
        raise WrongCount("nodes and values must have equal length")
    n = len(nodes)
    if n == 0:
        return Poly.zero()
    for i in range(n):
        for j in range(i + 1, n):
            if abs(nodes[i] - nodes[j]) <= 1e-14:
                raise DuplicateNode(f"nodes {i} and {j} coincide")
    order = _leja_index_order(nodes)
    xs = [nodes[i] for i in order]
    dd = [values[i] for i in order]
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k])
    # Horner on the Newton form
    c = np.array([dd[n - 1]], dtype=complex)
    for k in range(n - 2, -1, -1):
        nxt = np.zeros(len(c) + 1, dtype=complex)
        nxt[1:] += c
        nxt[:-1] -= xs[k] * c
        nxt[0] += dd[k]
        c = nxt
    return Poly(c)


def _leja_index_order(pts) -> list[int]:
    n = len(pts)
    if n == 0:
        return []
    order = [max(range(n), key=lambda i: abs(pts[i]))]
    rest = set(range(n)) - {order[0]}
    # accumulate the distance products in logs to dodge under/overflow
    logd = {i: 0.0 for i in rest}
    while rest:
        last = pts[order[-1]]
        for i in rest:
            d = abs(pts[i] - last)
            logd[i] += np.log(d) if d > 0 else -np.inf
        best = max(rest, key=lambda i: logd[i])
        order.append(best)
        rest.discard(best)
    return order


def poly_roots(p: Poly, max_iterations: int = 500) -> np.ndarray:
    """All complex roots of p with multiplicity.

    Aberth-Ehrlich simultaneous iteration started on a circle of radius
    1 + max|c_k / c_deg|, then a few Newton polishing steps per root.
    Residual contract: max |p(z)| / (||p|| (1+|z|)^deg) <= 1e-10 for deg <= 64.
    """
    deg = p.degree
    if deg < 1:
        raise DegreeMismatch("poly_roots requires degree >= 1")
    c = p.coeffs
    if deg == 1:
        return np.array([-c[0] / c[1]])
    if deg == 2:
        return _quadratic_roots(c[2], c[1], c[0])
    cn = c / c[-1]
    radius = 1.0 + np.abs(cn[:-1]).max()
    k = np.arange(deg)
    z = radius * np.exp(1j * (2 * np.pi * k / deg + 0.39))
    dcoef = c[1:] * np.arange(1, deg + 1)

    def val(x):
        out = np.zeros_like(x)
        for ck in c[::-1]:
            out = out * x + ck
        return out

    def dval(x):
        out = np.zeros_like(x)
        for ck in dcoef[::-1]:
            out = out * x + ck
        return out

    absc = np.abs(c)

    def noise_floor(x):
        # running error bound of the Horner evaluation: once |p(z)| sinks
        # below it, the iterate is as converged as the arithmetic allows
        out = np.zeros(np.shape(x))
        ax = np.abs(x)
        for ck in absc[::-1]:
            out = out * ax + ck
        return out * (2.0 * deg + 1.0) * np.finfo(float).eps

    converged = False
    for _ in range(max_iterations):
        pv = val(z)
        dv = dval(z)
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = np.where(dv != 0, pv / np.where(dv == 0, 1, dv), 0.0)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            s = (1.0 / diff).sum(axis=1)
            denom = 1.0 - newton * s
            step = newton / np.where(denom == 0, 1, denom)
        step = np.where(np.isfinite(step), step, 0.0)
        at_floor = np.abs(pv) <= noise_floor(z)
        z = z - np.where(at_floor, 0.0, step)
        if np.all(at_floor | (np.abs(step) <= 1e-14 * (1.0 + np.abs(z)))):
            converged = True
            break
    if not converged:
        res = np.abs(val(z)) / (np.abs(c).max() * (1.0 + np.abs(z)) ** deg)
        raise NoConvergence(
            f"Aberth iteration hit the cap ({max_iterations}); worst residual {res.max():.3e}",
            worst_residual=float(res.max()),
        )
    for _ in range(3):
        pv = val(z)
        dv = dval(z)
        good = (dv != 0) & (np.abs(pv) > noise_floor(z))
        z = np.where(good, z - pv / np.where(dv == 0, 1, dv), z)
    return z


def _quadratic_roots(a, b, c) -> np.ndarray:
    s = np.sqrt(b * b - 4 * a * c + 0j)
    if abs(b + s) < abs(b - s):
        s = -s
    q = -0.5 * (b + s)
    if q == 0:  # b = c = 0
        return np.array([0.0 + 0j, -b / a])
    return np.array([q / a, c / q])
