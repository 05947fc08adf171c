"""Exact rational LP for box-bounded packing problems.

    maximize    c.w
    subject to  A w <= b,   0 <= w <= 1

The problem is solved through its dual

    minimize    b.y + 1.z
    subject to  A^T y + z - s = c,   y, z, s >= 0

with a revised simplex in exact integer arithmetic: the basis inverse is
kept as an integer matrix over a common denominator (the basis determinant)
and updated by fraction-free Bareiss steps.  The dual has one row per primal
variable, so the basis stays small even with many thousands of packing
constraints, and the z/s columns give a feasible starting basis without a
phase 1.  The primal optimum is read off the simplex multipliers.

Pivoting uses Dantzig's rule and drops to Bland's rule after a run of
degenerate pivots (back to Dantzig after the next non-degenerate one), or
Bland's rule throughout with ``pivot_rule="bland"``.  Both terminate.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import sparse
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .errors import InvalidParameter


def _rational(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise InvalidParameter(f"non-finite coefficient {x}")
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError:
            raise InvalidParameter(f"bad rational {x!r}") from None
    raise InvalidParameter(f"unsupported coefficient type {type(x).__name__}")


@dataclass(frozen=True)
class LinearProgram:
    num_vars: int
    objective: tuple
    constraints: tuple  # ((row, bound), ...), every relation is <=

    @classmethod
    def build(cls, objective: Sequence, constraints: Sequence) -> "LinearProgram":
        obj = tuple(_rational(c) for c in objective)
        rows = []
        for entry in constraints:
            try:
                row, bound = entry
            except (TypeError, ValueError):
                raise InvalidParameter("constraints must be (row, bound) pairs") from None
            if not isinstance(row, (list, tuple)) or len(row) != len(obj):
                raise InvalidParameter(f"constraint row {row!r} does not have {len(obj)} entries")
            rows.append((tuple(_rational(a) for a in row), _rational(bound)))
        return cls(len(obj), obj, tuple(rows))

    @classmethod
    def packing(cls, n: int, sets: Sequence[Sequence[int]]) -> "LinearProgram":
        """max sum(w) with sum(w[i] for i in S) <= 1 for each S in ``sets``."""
        rows = []
        for s in sets:
            row = [0] * n
            for v in s:
                if not 0 <= v < n:
                    raise InvalidParameter(f"vertex {v} out of range")
                row[v] = 1
            rows.append((tuple(row), 1))
        return cls(n, (1,) * n, tuple(rows))

    @cached_property
    def sparse_rows(self) -> list:
        return [[(i, a) for i, a in enumerate(row) if a] for row, _ in self.constraints]

    def is_feasible(self, w: Sequence[Fraction]) -> bool:
        if len(w) != self.num_vars or any(not 0 <= x <= 1 for x in w):
            return False
        return all(
            sum(a * w[i] for i, a in row) <= b
            for row, (_, b) in zip(self.sparse_rows, self.constraints)
        )

    def evaluate(self, w: Sequence[Fraction]) -> Fraction:
        return sum((c * x for c, x in zip(self.objective, w)), Fraction(0))


@dataclass(frozen=True)
class LpSolution:
    value: Fraction
    assignment: tuple
    dual_value: Fraction
    row_duals: tuple  # multiplier per constraint row
    bound_duals: tuple  # multiplier per upper bound w_i <= 1
    pivots: int = 0


def _lcm_den(values) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, v.denominator)
    return out


DEGENERATE_RUN = 50


def lp_solve(lp: LinearProgram, pivot_rule: str = "dantzig-bland", max_pivots: int = 10_000_000) -> LpSolution:
    if not isinstance(lp, LinearProgram):
        raise InvalidParameter("expected a LinearProgram")
    if pivot_rule not in ("bland", "dantzig-bland"):
        raise InvalidParameter(f"unknown pivot rule {pivot_rule!r}")
    n = lp.num_vars
    m = len(lp.constraints)
    if len(lp.objective) != n or any(len(row) != n for row, _ in lp.constraints):
        raise InvalidParameter("malformed LinearProgram")

    # integer data: objective scaled by one factor, each constraint row by its own
    obj_scale = _lcm_den(lp.objective)
    c = [int(x * obj_scale) for x in lp.objective]
    cols = []
    cost = []
    row_scale = []
    for row, (_, bound) in zip(lp.sparse_rows, lp.constraints):
        s = math.lcm(_lcm_den(a for _, a in row), bound.denominator)
        row_scale.append(s)
        cols.append([(i, int(a * s)) for i, a in row])
        cost.append(int(bound * s))
    cols += [[(i, 1)] for i in range(n)]  # z_i: upper bounds
    cols += [[(i, -1)] for i in range(n)]  # s_i: lower bounds
    cost += [1] * n + [0] * n
    ncols = len(cols)

    # B^{-1} = q / det, x_B = xb / det, det > 0
    basis = [m + i if c[i] >= 0 else m + n + i for i in range(n)]
    det = 1
    q = [[0] * n for _ in range(n)]
    for i in range(n):
        q[i][i] = 1 if c[i] >= 0 else -1
    xb = [abs(ci) for ci in c]
    in_basis = [False] * ncols
    for j in basis:
        in_basis[j] = True

    def multipliers():
        # pi * det
        p = [0] * n
        for r, j in enumerate(basis):
            cj = cost[j]
            if cj:
                qr = q[r]
                for i in range(n):
                    if qr[i]:
                        p[i] += cj * qr[i]
        return p

    # float copies of the columns rank pricing candidates; every decision is
    # re-checked in integers and optimality is only declared by an exact scan
    nnz = [(i, j, float(a)) for j, col in enumerate(cols) for i, a in col]
    at = sparse.csr_matrix(
        ([v for _, _, v in nnz], ([j for _, j, _ in nnz], [i for i, _, _ in nnz])), shape=(ncols, n)
    )
    cost_f = np.array(cost, dtype=float)
    colmax = max((abs(a) for col in cols for _, a in col), default=1)

    def exact_reduced(j, p):
        d = cost[j] * det
        for i, a in cols[j]:
            d -= p[i] * a
        return d

    def exact_scan(p, bland):
        entering, best = -1, 0
        for j in range(ncols):
            if in_basis[j]:
                continue
            d = exact_reduced(j, p)
            if d < 0:
                if bland:
                    return j
                if d < best:
                    best, entering = d, j
        return entering

    def choose(p, bland):
        pf = np.array([x / det for x in p], dtype=float)
        d = cost_f - at @ pf
        d[basis] = np.inf
        slack = 1e-9 * (1.0 + float(np.abs(pf).max(initial=0.0)) * colmax * n)
        cand = np.flatnonzero(d < slack)
        if cand.size:
            if not bland:
                cand = cand[np.argsort(d[cand], kind="stable")]
            for j in cand[:64]:
                if exact_reduced(int(j), p) < 0:
                    return int(j)
        return exact_scan(p, bland)

    pivots = 0
    degenerate_run = 0
    while True:
        p = multipliers()
        bland = pivot_rule == "bland" or degenerate_run >= DEGENERATE_RUN
        entering = choose(p, bland)
        if entering < 0:
            break
        if pivots >= max_pivots:
            raise RuntimeError(f"simplex pivot cap {max_pivots} reached")

        col = cols[entering]
        u = [sum(q[r][i] * a for i, a in col) for r in range(n)]
        leave = -1
        key = None
        for r in range(n):
            if u[r] > 0:
                k = (Fraction(xb[r], u[r]), basis[r])
                if key is None or k < key:
                    key, leave = k, r
        if leave < 0:
            raise InvalidParameter("LP is infeasible (dual unbounded)")
        degenerate_run = degenerate_run + 1 if xb[leave] == 0 else 0

        ur = u[leave]
        qr, xr = q[leave], xb[leave]
        for r in range(n):
            if r == leave:
                continue
            f = u[r]
            if f:
                q[r] = [(a * ur - f * b) // det for a, b in zip(q[r], qr)]
                xb[r] = (xb[r] * ur - f * xr) // det
            elif ur != det:
                q[r] = [a * ur // det for a in q[r]]
                xb[r] = xb[r] * ur // det
        det = ur
        in_basis[basis[leave]] = False
        basis[leave] = entering
        in_basis[entering] = True
        pivots += 1

    p = multipliers()
    w = tuple(Fraction(pi, det) for pi in p)
    dual = [Fraction(0)] * ncols
    for r, j in enumerate(basis):
        dual[j] = Fraction(xb[r], det)
    # undo the integer scaling
    row_duals = tuple(dual[k] * row_scale[k] / obj_scale for k in range(m))
    bound_duals = tuple(x / obj_scale for x in dual[m:m + n])
    value = lp.evaluate(w)
    dual_value = sum((b * y for (_, b), y in zip(lp.constraints, row_duals)), Fraction(0)) + sum(bound_duals, Fraction(0))

    covered = list(bound_duals)
    for row, y in zip(lp.sparse_rows, row_duals):
        if y:
            for i, a in row:
                covered[i] += a * y
    dual_ok = all(x >= 0 for x in dual) and all(cv >= ci for cv, ci in zip(covered, lp.objective))
    if not lp.is_feasible(w) or not dual_ok or value != dual_value:
        raise RuntimeError("simplex terminated without an exact optimality certificate")
    return LpSolution(value, w, dual_value, row_duals, bound_duals, pivots)
