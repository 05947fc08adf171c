"""Simple undirected graphs stored as per-vertex bitsets.

Vertex ``i`` has neighbourhood ``adj[i]``, an int whose bit ``j`` is set iff
``i`` and ``j`` are adjacent.  Graphs are immutable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import InvalidParameter, ParseError


def bits(mask: int):
    """Yield the indices of set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InvalidParameter("adjacency length must equal vertex count")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidParameter(f"vertex {u} has neighbours out of range")
            if row >> u & 1:
                raise InvalidParameter(f"self-loop at vertex {u}")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise InvalidParameter(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.adj[u]))

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = mask_of(vs)
        return all((self.adj[v] | 1 << v) & m == m for v in vs)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = mask_of(vs)
        return all(self.adj[v] & m == 0 for v in vs)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.num_edges})"


# -- generators ---------------------------------------------------------------

def make_empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def make_complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return make_circulant(n, {1})


def make_circulant(n: int, distances: Iterable[int]) -> Graph:
    """Circulant graph Ci_n(d1, d2, ...): i ~ i±d (mod n) for each distance d."""
    distances = set(distances)
    for d in distances:
        if not 1 <= d <= n / 2:
            raise InvalidParameter(f"distance {d} outside 1..{n // 2}")
    edges = [(i, (i + d) % n) for i in range(n) for d in distances]
    return Graph.from_edges(n, edges)


def make_prism() -> Graph:
    """Triangular prism: triangles {0,1,2}, {3,4,5} joined by 0-3, 1-4, 2-5."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def make_shrikhande() -> Graph:
    steps = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)]
    edges = []
    for a, b in itertools.product(range(4), repeat=2):
        for da, db in steps:
            edges.append((4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4))
    return Graph.from_edges(16, edges)


def make_shrikhande_complement() -> Graph:
    return complement(make_shrikhande())


# -- operations ---------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ row ^ (1 << u) for u, row in enumerate(g.adj)))


def or_product(g: Graph, h: Graph) -> Graph:
    """OR (co-normal) product; pair (u1, u2) gets index u1 * h.n + u2."""
    m = h.n
    # rows of the product as unions of whole blocks (from g) and per-block copies (from h)
    block = (1 << m) - 1
    h_parts = []
    for u2 in range(m):
        part = 0
        for v1 in range(g.n):
            part |= h.adj[u2] << (v1 * m)
        h_parts.append(part)
    rows = []
    for u1 in range(g.n):
        g_part = 0
        for v1 in bits(g.adj[u1]):
            g_part |= block << (v1 * m)
        rows.extend(g_part | h_part for h_part in h_parts)
    return Graph(g.n * m, tuple(rows))


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise InvalidParameter(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        rows.append(mask_of(pos[w] for w in bits(g.adj[v]) if w in pos))
    return Graph(len(vs), tuple(rows))


def equitable_colors(g: Graph, initial: Optional[list] = None) -> list[int]:
    """Colour refinement until stable. Colours are canonical ranks, so two graphs
    refined independently get comparable labels."""
    colors = list(initial) if initial is not None else [0] * g.n
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in bits(g.adj[v])))) for v in range(g.n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _joint_refine(g: Graph, h: Graph):
    # refine on the disjoint union so colour names agree between the two graphs
    n = g.n
    union = Graph(n + h.n, tuple(g.adj) + tuple(row << n for row in h.adj))
    cols = equitable_colors(union)
    return cols[:n], cols[n:]


def find_isomorphism(g: Graph, h: Graph) -> Optional[dict[int, int]]:
    """Return a vertex bijection g -> h preserving adjacency both ways, or None."""
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    n = g.n
    if n == 0:
        return {}
    cg, ch = _joint_refine(g, h)
    if sorted(cg) != sorted(ch):
        return None

    # visit g-vertices so that each new vertex has as many mapped neighbours as possible
    order = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        v = min(remaining, key=lambda x: (-(g.adj[x] & placed).bit_count(), cg.count(cg[x]), x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)

    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(ch[w], []).append(w)

    mapping: dict[int, int] = {}
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        for w in by_color[cg[v]]:
            if used >> w & 1:
                continue
            if any(g.has_edge(v, u) != h.has_edge(w, mapping[u]) for u in order[:k]):
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            used &= ~(1 << w)
            del mapping[v]
        return False

    if extend(0):
        return dict(sorted(mapping.items()))
    return None


def is_isomorphism(g: Graph, h: Graph, mapping: dict[int, int]) -> bool:
    if g.n != h.n or sorted(mapping) != list(range(g.n)) or sorted(mapping.values()) != list(range(h.n)):
        return False
    return all(
        g.has_edge(u, v) == h.has_edge(mapping[u], mapping[v])
        for u, v in itertools.combinations(range(g.n), 2)
    )


# -- text format --------------------------------------------------------------

def format_graph(g: Graph, comment: str = "") -> str:
    lines = [f"# {c}" for c in comment.splitlines() if comment]
    lines.append(f"n {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise ParseError("expected header 'n <count>'", lineno)
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"invalid edge {u} {v} for n={n}", lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing 'n <count>' header")
    return Graph.from_edges(n, edges)


def read_graph(path) -> Graph:
    with open(path) as f:
        return parse_graph(f.read())
