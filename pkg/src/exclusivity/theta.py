"""Lovász theta by a dense primal-dual interior-point method.

Primal (in minimisation form)::

    minimize  <-J, X>   s.t.  tr X = 1,  X_uv = 0 for uv in E,  X >= 0 (psd)

Dual::

    maximize  y_0       s.t.  Z = -J - y_0 I - sum_e y_e (E_uv + E_vu) >= 0

The search direction is HKM with a Mehrotra predictor-corrector.  Every
iterate is turned into a certified bracket: the primal iterate is repaired
into an exactly feasible matrix (lower bound) and the dual multipliers give
an upper bound through a largest-eigenvalue computation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy import linalg

from .errors import InvalidParameter, SolverFailure
from .graph import Graph

log = logging.getLogger(__name__)

EPS = np.finfo(float).eps


@dataclass
class ThetaBracket:
    lower: float
    upper: float
    primal_witness: np.ndarray = field(repr=False, default=None)
    dual_witness: np.ndarray = field(repr=False, default=None)
    iterations: int = 0

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def mid(self) -> float:
        return 0.5 * (self.lower + self.upper)

    def contains(self, value: float, slack: float = 0.0) -> bool:
        return self.lower - slack <= value <= self.upper + slack


def default_tol(n: int) -> float:
    return 1e-6 if n <= 32 else 1e-4


def certify_lower(x: np.ndarray, a: np.ndarray, b: np.ndarray):
    """Project ``x`` onto the theta feasible set; return (value, matrix).

    Edge entries are zeroed and the diagonal is lifted by the most negative
    eigenvalue (plus rounding margin), which keeps edge entries at zero.
    """
    n = x.shape[0]
    xf = 0.5 * (x + x.T)
    xf[a, b] = 0.0
    xf[b, a] = 0.0
    lam_min = np.linalg.eigvalsh(xf)[0]
    margin = 4 * n * EPS * max(1.0, np.abs(xf).max())
    shift = max(0.0, -lam_min) + margin
    xf[np.diag_indices(n)] += shift
    xf /= np.trace(xf)
    value = float(xf.sum())
    # rounding in the sum itself
    return value - n * n * EPS * max(1.0, abs(value)), xf


def certify_upper(ye: np.ndarray, n: int, a: np.ndarray, b: np.ndarray):
    """theta <= lambda_max(J + W) for any symmetric W supported on the edges."""
    w = np.ones((n, n))
    w[a, b] += ye
    w[b, a] += ye
    top = np.linalg.eigvalsh(w)[-1]
    return float(top + 4 * n * EPS * max(1.0, np.abs(w).max())), w


def _step_length(x: np.ndarray, dx: np.ndarray) -> float:
    """Largest alpha with x + alpha*dx still positive definite (inf if unbounded)."""
    try:
        chol = np.linalg.cholesky(x)
    except np.linalg.LinAlgError:
        return 0.0
    linv = linalg.solve_triangular(chol, np.eye(x.shape[0]), lower=True)
    lam = np.linalg.eigvalsh(linv @ dx @ linv.T)[0]
    return np.inf if lam >= 0 else -1.0 / lam


def theta_sdp(g: Graph, tol: float | None = None, max_iter: int = 500) -> ThetaBracket:
    if g.n < 1:
        raise InvalidParameter("theta needs at least one vertex")
    if tol is None:
        tol = default_tol(g.n)
    if not tol > 0:
        raise InvalidParameter("tol must be positive")

    n = g.n
    edges = g.edges()
    a = np.array([u for u, _ in edges], dtype=int)
    b = np.array([v for _, v in edges], dtype=int)
    m = len(edges) + 1
    rhs = np.zeros(m)
    rhs[0] = 1.0
    c_mat = -np.ones((n, n))

    def op_a(k: np.ndarray) -> np.ndarray:
        out = np.empty(m)
        out[0] = np.trace(k)
        out[1:] = k[a, b] + k[b, a]
        return out

    def op_at(y: np.ndarray) -> np.ndarray:
        out = y[0] * np.eye(n)
        out[a, b] += y[1:]
        out[b, a] += y[1:]
        return out

    x = np.eye(n) / n
    y = np.zeros(m)
    y[0] = -(n + 1.0)
    z = c_mat - op_at(y)

    best_lower, best_upper = -np.inf, np.inf
    best_x = best_w = None
    it = 0
    for it in range(1, max_iter + 1):
        lo, xw = certify_lower(x, a, b)
        up, ww = certify_upper(y[1:], n, a, b)
        if lo > best_lower:
            best_lower, best_x = lo, xw
        if up < best_upper:
            best_upper, best_w = up, ww
        if best_upper - best_lower <= tol:
            break

        mu = float(np.sum(x * z)) / n
        rp = rhs - op_a(x)
        rd = c_mat - z - op_at(y)

        try:
            zc = linalg.cho_factor(z, lower=True)
            ginv = linalg.cho_solve(zc, np.eye(n))
        except linalg.LinAlgError:
            ginv = np.linalg.inv(z)
        ginv = 0.5 * (ginv + ginv.T)

        schur = np.empty((m, m))
        xg = ginv @ x
        schur[0, 0] = np.trace(xg)
        if m > 1:
            s0 = xg[b, a] + xg[a, b]
            schur[0, 1:] = s0
            schur[1:, 0] = s0
            schur[1:, 1:] = (
                x[np.ix_(b, a)] * ginv[np.ix_(a, b)]
                + x[np.ix_(b, b)] * ginv[np.ix_(a, a)]
                + x[np.ix_(a, a)] * ginv[np.ix_(b, b)]
                + x[np.ix_(a, b)] * ginv[np.ix_(b, a)]
            )
        schur = 0.5 * (schur + schur.T)
        try:
            factor = linalg.cho_factor(schur, lower=True)

            def solve(v):
                return linalg.cho_solve(factor, v)
        except linalg.LinAlgError:
            def solve(v):
                return np.linalg.lstsq(schur, v, rcond=None)[0]

        xrdg = x @ rd @ ginv

        def direction(h):
            dy = solve(rp - op_a(h - xrdg))
            dz = rd - op_at(dy)
            dx = h - x @ dz @ ginv
            return 0.5 * (dx + dx.T), dy, dz

        # predictor
        dx, dy, dz = direction(-x)
        ap = min(1.0, _step_length(x, dx))
        ad = min(1.0, _step_length(z, dz))
        mu_aff = float(np.sum((x + ap * dx) * (z + ad * dz))) / n
        sigma = min(1.0, max(0.0, (mu_aff / mu) ** 3)) if mu > 0 else 0.0

        # corrector
        h = sigma * mu * ginv - x - dx @ dz @ ginv
        dx, dy, dz = direction(h)
        ap = min(1.0, 0.95 * _step_length(x, dx))
        ad = min(1.0, 0.95 * _step_length(z, dz))
        if ap <= 0 and ad <= 0:
            log.debug("theta: zero step at iteration %d", it)
            break
        x = x + ap * dx
        x = 0.5 * (x + x.T)
        y = y + ad * dy
        z = z + ad * dz
        z = 0.5 * (z + z.T)
        log.debug("theta it=%d mu=%.3e bracket=[%.12g, %.12g]", it, mu, best_lower, best_upper)

    bracket = ThetaBracket(best_lower, best_upper, best_x, best_w, it)
    if bracket.width > tol:
        raise SolverFailure(
            f"theta bracket width {bracket.width:.3e} exceeds tol {tol:.1e} after {it} iterations",
            bracket,
        )
    return bracket
