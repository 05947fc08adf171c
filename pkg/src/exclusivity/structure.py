"""Induced-subgraph search for odd holes, odd antiholes and arbitrary patterns."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvalidParameter, ResourceLimit
from .graph import Graph, bits, complement, make_cycle

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class InducedWitness:
    pattern_name: str
    vertices: tuple  # host vertex for pattern vertex 0, 1, ...
    mapping: dict

    def verify(self, host: Graph, pattern: Graph) -> bool:
        if len(set(self.vertices)) != pattern.n:
            return False
        return all(
            pattern.has_edge(p, q) == host.has_edge(self.vertices[p], self.vertices[q])
            for p in range(pattern.n)
            for q in range(p + 1, pattern.n)
        )


def _pattern_order(pattern: Graph) -> list[int]:
    # each next vertex has as many already placed neighbours as possible
    deg = pattern.degrees()
    order: list[int] = []
    placed = 0
    left = set(range(pattern.n))
    while left:
        v = min(left, key=lambda p: (-(pattern.adj[p] & placed).bit_count(), -deg[p], p))
        order.append(v)
        placed |= 1 << v
        left.discard(v)
    return order


def find_induced(host: Graph, pattern: Graph, name: str = "pattern", budget: int = DEFAULT_BUDGET) -> Optional[InducedWitness]:
    """First induced copy of ``pattern`` in ``host``, or None once the search is exhausted.

    Raises ResourceLimit when more than ``budget`` search nodes are visited.
    """
    if pattern.n > host.n:
        return None
    if pattern.n == 0:
        return InducedWitness(name, (), {})
    order = _pattern_order(pattern)
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    full = (1 << host.n) - 1
    by_degree = {}
    for d in set(pdeg):
        by_degree[d] = sum(1 << w for w in range(host.n) if hdeg[w] >= d)
    image = [-1] * pattern.n
    nodes = 0

    def extend(k: int, used: int) -> bool:
        nonlocal nodes
        if k == pattern.n:
            return True
        p = order[k]
        cand = full & ~used & by_degree[pdeg[p]]
        for q in order[:k]:
            w = image[q]
            if pattern.has_edge(p, q):
                cand &= host.adj[w]
            else:
                cand &= ~host.adj[w]
        for w in bits(cand):
            nodes += 1
            if nodes > budget:
                raise ResourceLimit(f"induced search exceeded budget of {budget} nodes")
            image[p] = w
            if extend(k + 1, used | 1 << w):
                return True
        image[p] = -1
        return False

    if not extend(0, 0):
        return None
    return InducedWitness(name, tuple(image), {p: image[p] for p in range(pattern.n)})


def odd_patterns(max_m: int):
    """(name, graph) for C_m and its complement, m odd in 5..max_m.

    For m = 5 the two coincide (C5 is self-complementary) and one entry is
    yielded under the label ``C5=anti-C5``.
    """
    if max_m < 5 or max_m % 2 == 0:
        raise InvalidParameter(f"max_m must be odd and >= 5, got {max_m}")
    for m in range(5, max_m + 1, 2):
        cyc = make_cycle(m)
        if m == 5:
            yield "C5=anti-C5", cyc
            continue
        yield f"C{m}", cyc
        yield f"anti-C{m}", complement(cyc)


def scan_odd_structures(host: Graph, max_m: int, budget: int = DEFAULT_BUDGET) -> list[InducedWitness]:
    found = []
    for name, pat in odd_patterns(max_m):
        w = find_induced(host, pat, name, budget)
        if w is not None:
            found.append(w)
    return found
