"""Measurement scenarios: events, contexts, and their exclusivity graphs.

Scenario files (``.scn``) are line oriented::

    # Specker's three boxes
    context 1 2
    event 1,0 | 1,2

``setting`` lines optionally declare identifiers; once any are declared,
events and contexts may only use declared settings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidParameter, ParseError
from .graph import Graph, induced


@dataclass(frozen=True, eq=False)
class Event:
    """Outcomes obtained for a tuple of settings, written ``a,b|x,y``."""

    settings: tuple
    outcomes: tuple

    def __post_init__(self):
        if not self.settings:
            raise InvalidParameter("an event needs at least one assignment")
        if len(self.settings) != len(self.outcomes):
            raise InvalidParameter("outcome/setting count mismatch")
        if len(set(self.settings)) != len(self.settings):
            raise InvalidParameter(f"repeated setting in event {self}")
        if any(not isinstance(o, int) or o < 0 for o in self.outcomes):
            raise InvalidParameter("outcomes must be non-negative integers")

    @classmethod
    def of(cls, outcomes, settings) -> "Event":
        return cls(tuple(str(s) for s in settings), tuple(outcomes))

    @property
    def assignments(self) -> dict:
        return dict(zip(self.settings, self.outcomes))

    def exclusive_with(self, other: "Event") -> bool:
        mine = self.assignments
        return any(s in mine and mine[s] != o for s, o in zip(other.settings, other.outcomes))

    def __eq__(self, other):
        if not isinstance(other, Event):
            return NotImplemented
        return self.assignments == other.assignments

    def __hash__(self):
        return hash(frozenset(self.assignments.items()))

    def __str__(self):
        return ",".join(map(str, self.outcomes)) + "|" + ",".join(self.settings)


@dataclass(frozen=True)
class Scenario:
    events: tuple
    contexts: Optional[tuple] = None
    name: str = ""

    def __post_init__(self):
        seen = set()
        for e in self.events:
            if e in seen:
                raise InvalidParameter(f"duplicate event {e}")
            seen.add(e)
        if self.contexts is not None:
            for e in self.events:
                if not any(set(e.settings) <= set(c) for c in self.contexts):
                    raise InvalidParameter(f"event {e} lies in no context")


@dataclass(frozen=True)
class CliqueHypergraph:
    """A family of cliques of ``host``; the constraint sets of a packing LP."""

    host: Graph
    cliques: tuple = field(default=())

    def __post_init__(self):
        for c in self.cliques:
            if not c:
                raise InvalidParameter("empty clique in hypergraph")
            if any(not 0 <= v < self.host.n for v in c):
                raise InvalidParameter(f"clique {c} has vertices outside the host")
            if not self.host.is_clique(c):
                raise InvalidParameter(f"{c} is not a clique of the host graph")

    def uncovered(self) -> list[int]:
        covered = set().union(*map(set, self.cliques)) if self.cliques else set()
        return [v for v in range(self.host.n) if v not in covered]

    def __len__(self):
        return len(self.cliques)


def parse_scenario(text: str, name: str = "") -> Scenario:
    declared = []
    contexts = []
    events = []
    first_line = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "setting":
            ids = rest.split()
            if not ids:
                raise ParseError("'setting' needs an identifier", lineno)
            declared.extend(ids)
        elif keyword == "context":
            ids = rest.split()
            if not ids:
                raise ParseError("'context' needs at least one setting", lineno)
            if len(set(ids)) != len(ids):
                raise ParseError("repeated setting in context", lineno)
            if declared and not set(ids) <= set(declared):
                raise ParseError(f"undeclared setting in context: {sorted(set(ids) - set(declared))}", lineno)
            contexts.append(tuple(ids))
        elif keyword == "event":
            if rest.count("|") != 1:
                raise ParseError("expected 'event <outcomes> | <settings>'", lineno)
            left, right = (part.strip() for part in rest.split("|"))
            outs = [o.strip() for o in left.split(",")]
            sets = [s.strip() for s in right.split(",")]
            if not all(outs) or not all(sets):
                raise ParseError("empty outcome or setting", lineno)
            if any(len(s.split()) != 1 for s in sets):
                raise ParseError("setting identifiers must not contain whitespace", lineno)
            if not all(o.isdigit() for o in outs):
                raise ParseError("outcomes must be non-negative integers", lineno)
            if len(outs) != len(sets):
                raise ParseError(f"{len(outs)} outcomes for {len(sets)} settings", lineno)
            if len(set(sets)) != len(sets):
                raise ParseError("repeated setting in event", lineno)
            if declared and not set(sets) <= set(declared):
                raise ParseError(f"undeclared setting: {sorted(set(sets) - set(declared))}", lineno)
            ev = Event(tuple(sets), tuple(int(o) for o in outs))
            if ev in first_line:
                raise ParseError(f"duplicate event {ev} (first on line {first_line[ev]})", lineno)
            first_line[ev] = lineno
            events.append(ev)
        else:
            raise ParseError(f"unknown directive {keyword!r}", lineno)
    if not events:
        raise ParseError("scenario has no events")
    if contexts:
        for ev in events:
            if not any(set(ev.settings) <= set(c) for c in contexts):
                raise ParseError(f"event {ev} lies in no context", first_line[ev])
    return Scenario(tuple(events), tuple(contexts) if contexts else None, name)


def read_scenario(path) -> Scenario:
    from pathlib import Path

    p = Path(path)
    return parse_scenario(p.read_text(), p.stem)


def format_scenario(s: Scenario) -> str:
    lines = []
    if s.name:
        lines.append(f"# {s.name}")
    for c in s.contexts or ():
        lines.append("context " + " ".join(c))
    for e in s.events:
        lines.append(f"event {','.join(map(str, e.outcomes))} | {','.join(e.settings)}")
    return "\n".join(lines) + "\n"


def exclusivity_graph(s: Scenario) -> tuple[Graph, CliqueHypergraph]:
    """Vertex i is the i-th event; events clash when they give a shared
    setting different outcomes.  Gamma is built per context when contexts
    exist, otherwise it is every maximal clique of the graph."""
    from .invariants import maximal_cliques

    n = len(s.events)
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(n), 2)
        if s.events[i].exclusive_with(s.events[j])
    ]
    g = Graph.from_edges(n, edges)
    if s.contexts is None:
        return g, CliqueHypergraph(g, tuple(tuple(c) for c in maximal_cliques(g)))

    gamma = set()
    for ctx in s.contexts:
        members = [i for i, e in enumerate(s.events) if set(e.settings) <= set(ctx)]
        if not members:
            continue
        for clique in maximal_cliques(induced(g, members)):
            gamma.add(tuple(members[k] for k in clique))
    return g, CliqueHypergraph(g, tuple(sorted(gamma)))


# -- builtin scenarios --------------------------------------------------------

def _three_box() -> Scenario:
    pairs = [("1", "2"), ("1", "3"), ("2", "3")]
    events = [Event.of(ab, xy) for xy in pairs for ab in ((1, 0), (0, 1))]
    return Scenario(tuple(events), tuple(pairs), "three-box")


def _kcbs() -> Scenario:
    events = []
    contexts = []
    for i in range(5):
        xy = (str(i + 1), str((i + 1) % 5 + 1))
        events.append(Event.of((1, 0), xy))
        contexts.append(xy)
    return Scenario(tuple(events), tuple(contexts), "kcbs")


def _chsh() -> Scenario:
    events = []
    contexts = []
    for x, y in itertools.product((0, 1), repeat=2):
        xy = (f"A{x}", f"B{y}")
        contexts.append(xy)
        for a, b in itertools.product((0, 1), repeat=2):
            if a ^ b == x * y:
                events.append(Event.of((a, b), xy))
    return Scenario(tuple(events), tuple(contexts), "chsh")


def _mermin() -> Scenario:
    events = []
    contexts = []
    for (x, y, z), parity in [((0, 0, 1), 0), ((0, 1, 0), 0), ((1, 0, 0), 0), ((1, 1, 1), 1)]:
        xyz = (f"A{x}", f"B{y}", f"C{z}")
        contexts.append(xyz)
        for a, b, c in itertools.product((0, 1), repeat=3):
            if a ^ b ^ c == parity:
                events.append(Event.of((a, b, c), xyz))
    return Scenario(tuple(events), tuple(contexts), "mermin")


BUILTINS = {"three-box": _three_box, "kcbs": _kcbs, "chsh": _chsh, "mermin": _mermin}


def builtin(name: str) -> Scenario:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise InvalidParameter(f"unknown scenario {name!r}; choose from {sorted(BUILTINS)}") from None
