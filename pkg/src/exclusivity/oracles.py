"""Slow, independent reference computations used to cross-check the solvers.

Nothing here shares code with the branch-and-bound, simplex or SDP paths.
"""

import itertools
import math

from .graph import Graph


def brute_alpha(g: Graph) -> int:
    """Independence number by enumerating every vertex subset (n <= ~20)."""
    edges = g.edges()
    best = 0
    for mask in range(1 << g.n):
        size = bin(mask).count("1")
        if size <= best:
            continue
        if all(not (mask >> u & 1 and mask >> v & 1) for u, v in edges):
            best = size
    return best


def theta_odd_cycle(m: int) -> float:
    """Closed form of theta(C_m) for odd m."""
    c = math.cos(math.pi / m)
    return m * c / (1 + c)


def brute_induced(host: Graph, pattern: Graph) -> bool:
    """Does any |pattern|-subset of ``host`` induce a graph isomorphic to ``pattern``?
    Tries every subset and every ordering."""
    k = pattern.n
    pedges = {(min(u, v), max(u, v)) for u, v in pattern.edges()}
    for subset in itertools.combinations(range(host.n), k):
        for perm in itertools.permutations(subset):
            if all(
                ((p, q) in pedges) == host.has_edge(perm[p], perm[q])
                for p in range(k)
                for q in range(p + 1, k)
            ):
                return True
    return False


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    ge = set(g.edges())
    target = {frozenset(e) for e in h.edges()}
    if len(ge) != len(target):
        return False
    for perm in itertools.permutations(range(g.n)):
        if all(frozenset((perm[u], perm[v])) in target for u, v in ge):
            return True
    return False


def has_triangle(g: Graph) -> bool:
    return any(
        g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        for a, b, c in itertools.combinations(range(g.n), 3)
    )


def packing_certificate_ok(n: int, sets, sol) -> bool:
    """Check an LP answer for max sum(w), sum over each set <= 1, 0 <= w <= 1
    by exact weak duality: a feasible w and a feasible dual with equal value."""
    w = sol.assignment
    if len(w) != n or any(x < 0 or x > 1 for x in w):
        return False
    if any(sum(w[v] for v in s) > 1 for s in sets):
        return False
    y, z = sol.row_duals, sol.bound_duals
    if any(x < 0 for x in y) or any(x < 0 for x in z):
        return False
    cover = list(z)
    for s, ys in zip(sets, y):
        for v in s:
            cover[v] += ys
    if any(cv < 1 for cv in cover):
        return False
    return sum(w) == sum(y) + sum(z)
