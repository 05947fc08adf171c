"""Graph invariants bounding sums of event probabilities.

alpha(G) <= theta(G) <= alpha*(G) <= alpha*(G, Gamma) for any Gamma made of
cliques of G, where alpha* without Gamma uses every maximal clique.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ResourceLimit, SolverFailure
from .graph import Graph, bits, complement
from .lp import LinearProgram, LpSolution, lp_solve
from .scenario import CliqueHypergraph
from .theta import ThetaBracket, default_tol, theta_sdp

DEFAULT_MAX_CLIQUES = 10**6


def max_cliques_cap() -> int:
    env = os.environ.get("EXCL_MAX_CLIQUES")
    return int(env) if env else DEFAULT_MAX_CLIQUES


# -- independence number ------------------------------------------------------

def _max_clique(adj: list[int], n: int) -> list[int]:
    """Branch and bound for a maximum clique with a greedy-colouring bound.

    Vertices are relabelled so that bit order is descending degree (ties by
    index); the colouring then runs in that order.
    """
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    pos = {v: i for i, v in enumerate(order)}
    nbr = [0] * n
    for v in range(n):
        nbr[pos[v]] = sum(1 << pos[w] for w in bits(adj[v]))

    best: list[int] = []

    def color_bound(p: int):
        out = []
        k = 0
        uncolored = p
        while uncolored:
            k += 1
            q = uncolored
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~nbr[v] & ~low
                uncolored &= ~low
                out.append((v, k))
        return out

    def expand(r: list[int], p: int):
        nonlocal best
        for v, k in reversed(color_bound(p)):
            if len(r) + k <= len(best):
                return
            r.append(v)
            sub = p & nbr[v]
            if sub:
                expand(r, sub)
            elif len(r) > len(best):
                best = list(r)
            r.pop()
            p &= ~(1 << v)

    if n:
        expand([], (1 << n) - 1)
    return sorted(order[v] for v in best)


def independence_number(g: Graph, with_witness: bool = False):
    """Exact alpha(G); with ``with_witness`` also one maximum independent set."""
    witness = _max_clique(list(complement(g).adj), g.n)
    return (len(witness), witness) if with_witness else len(witness)


# -- maximal cliques ----------------------------------------------------------

def _degeneracy_order(g: Graph) -> list[int]:
    deg = g.degrees()
    alive = set(range(g.n))
    order = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        order.append(v)
        alive.discard(v)
        for w in bits(g.adj[v]):
            if w in alive:
                deg[w] -= 1
    return order


def maximal_cliques(g: Graph, cap: Optional[int] = None) -> list[list[int]]:
    """All maximal cliques, each ascending, the list sorted lexicographically.

    Bron-Kerbosch with Tomita pivoting below a degeneracy-ordered outer loop.
    Isolated vertices come back as singletons.
    """
    if cap is None:
        cap = max_cliques_cap()
    adj = g.adj
    found: list[list[int]] = []

    def bk(r: list[int], p: int, x: int):
        if not p and not x:
            if len(found) >= cap:
                raise ResourceLimit(f"more than {cap} maximal cliques")
            found.append(sorted(r))
            return
        px = p | x
        pivot = max(bits(px), key=lambda u: (p & adj[u]).bit_count())
        for v in list(bits(p & ~adj[pivot])):
            r.append(v)
            bk(r, p & adj[v], x & adj[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    done = 0
    for v in _degeneracy_order(g):
        later = adj[v] & ~done
        earlier = adj[v] & done
        bk([v], later, earlier)
        done |= 1 << v
    found.sort()
    return found


# -- fractional packing -------------------------------------------------------

def _gamma_sets(g: Graph, gamma) -> list:
    if gamma is None:
        return maximal_cliques(g)
    if not isinstance(gamma, CliqueHypergraph):
        gamma = CliqueHypergraph(g, tuple(tuple(c) for c in gamma))
    elif gamma.host != g:
        raise ValueError("hypergraph host differs from the graph")
    return [list(c) for c in gamma.cliques]


def fractional_packing_solution(g: Graph, gamma=None) -> LpSolution:
    """Exact LP optimum and witness weights; ``gamma=None`` means all maximal cliques."""
    sets = _gamma_sets(g, gamma)
    return lp_solve(LinearProgram.packing(g.n, sets))


def fractional_packing(g: Graph, gamma=None) -> Fraction:
    return fractional_packing_solution(g, gamma).value


def lovasz_theta(g: Graph, tol: Optional[float] = None) -> ThetaBracket:
    return theta_sdp(g, tol)


# -- report -------------------------------------------------------------------

@dataclass
class BoundsReport:
    n: int
    num_edges: int
    tol: float
    alpha: Optional[int] = None
    alpha_witness: Optional[list] = None
    theta: Optional[ThetaBracket] = None
    alpha_star: Optional[Fraction] = None
    alpha_star_gamma: Optional[Fraction] = None
    num_cliques: Optional[int] = None
    gamma_size: Optional[int] = None
    uncovered: list = field(default_factory=list)
    errors: dict = field(default_factory=dict)
    timing_ms: dict = field(default_factory=dict)

    @property
    def separation(self) -> bool:
        """Quantum value provably above the classical one."""
        return self.theta is not None and self.alpha is not None and bool(self.theta.lower > self.alpha)

    @property
    def saturation(self) -> bool:
        """theta meets alpha* within tolerance."""
        if self.theta is None or self.alpha_star is None:
            return False
        a = float(self.alpha_star)
        return bool(self.theta.lower >= a - self.tol and self.theta.upper <= a + self.tol)

    @property
    def failed(self) -> bool:
        return bool(self.errors)


def bounds_report(g: Graph, gamma_context: Optional[CliqueHypergraph] = None, tol: Optional[float] = None) -> BoundsReport:
    if tol is None:
        tol = default_tol(g.n)
    rep = BoundsReport(g.n, g.num_edges, tol)

    def timed(name, fn):
        t0 = time.perf_counter()
        try:
            return fn()
        finally:
            rep.timing_ms[name] = round((time.perf_counter() - t0) * 1000, 3)

    rep.alpha, rep.alpha_witness = timed("alpha", lambda: independence_number(g, with_witness=True))

    try:
        rep.theta = timed("theta", lambda: theta_sdp(g, tol))
    except SolverFailure as exc:
        rep.theta = exc.bracket
        rep.errors["theta"] = str(exc)

    try:
        cliques = timed("cliques", lambda: maximal_cliques(g))
        rep.num_cliques = len(cliques)
        rep.alpha_star = timed("alpha_star", lambda: fractional_packing(g, cliques))
    except ResourceLimit as exc:
        rep.errors["alpha_star"] = str(exc)

    if gamma_context is not None:
        rep.gamma_size = len(gamma_context)
        rep.uncovered = gamma_context.uncovered()
        rep.alpha_star_gamma = timed("alpha_star_gamma", lambda: fractional_packing(g, gamma_context))
    return rep
