"""Reproduction checks for the numeric claims about the named scenarios.

Each check returns a :class:`Claim`; ``run_suite`` runs them all.  Scenario
overrides let a caller substitute its own version of a builtin (used as a
negative control in the tests).
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .graph import (
    Graph,
    complement,
    find_isomorphism,
    make_circulant,
    make_complete,
    make_cycle,
    make_empty,
    make_prism,
    make_shrikhande_complement,
    or_product,
)
from .invariants import bounds_report, fractional_packing_solution, independence_number, maximal_cliques
from .oracles import brute_alpha, packing_certificate_ok, theta_odd_cycle
from .scenario import Scenario, builtin, exclusivity_graph
from .structure import find_induced
from .theta import ThetaBracket, theta_sdp

SQRT2 = math.sqrt(2.0)


@dataclass
class Claim:
    key: str
    title: str
    passed: bool = False
    checks: list = field(default_factory=list)  # (description, ok, detail)
    seconds: float = 0.0
    budget: float = 0.0
    informational: bool = False

    def check(self, description: str, ok: bool, detail: str = "") -> bool:
        self.checks.append((description, bool(ok), detail))
        return ok

    def as_dict(self) -> dict:
        d = asdict(self)
        d["checks"] = [{"check": c, "ok": ok, "detail": det} for c, ok, det in self.checks]
        return d


class SuiteContext:
    def __init__(self, tol_floor: float = 0.0, scenarios: Optional[dict] = None, seed: int = 20121):
        self.tol_floor = tol_floor
        self.scenarios = dict(scenarios or {})
        self.seed = seed
        self._theta: dict = {}

    def tol(self, stated: float) -> float:
        return max(stated, self.tol_floor)

    def scenario(self, name: str) -> Scenario:
        return self.scenarios.get(name) or builtin(name)

    def compiled(self, name: str):
        return exclusivity_graph(self.scenario(name))

    def theta(self, g: Graph, tol: float) -> ThetaBracket:
        key = (g, tol)
        if key not in self._theta:
            self._theta[key] = theta_sdp(g, tol)
        return self._theta[key]


def _near(bracket: ThetaBracket, value: float, tol: float) -> tuple[bool, str]:
    ok = bracket.width <= tol and bracket.contains(value, tol)
    return ok, f"theta in [{bracket.lower:.10f}, {bracket.upper:.10f}], expected {value:.10f} +- {tol:g}"


def _iso_check(claim: Claim, g: Graph, ref: Graph, label: str):
    iso = find_isomorphism(g, ref)
    claim.check(f"compiled graph isomorphic to {label}", iso is not None, f"map {iso}")


def claim_three_box(ctx: SuiteContext) -> Claim:
    c = Claim("1", "three-box game: alpha = theta = alpha* = 2, alpha*(G, contexts) = 3", budget=1.0)
    g, gamma = ctx.compiled("three-box")
    _iso_check(c, g, make_prism(), "the prism")
    tol = ctx.tol(1e-6)
    rep = bounds_report(g, gamma, tol)
    c.check("alpha = 2", rep.alpha == 2, f"alpha = {rep.alpha}")
    c.check("theta = 2", *_near(rep.theta, 2.0, tol))
    c.check("alpha* = 2", rep.alpha_star == 2, f"alpha* = {rep.alpha_star}")
    c.check("Gamma = 3 disjoint context edges", sorted(map(len, gamma.cliques)) == [2, 2, 2] and not gamma.uncovered(),
            f"Gamma = {gamma.cliques}")
    c.check("alpha*(G, Gamma) = 3", rep.alpha_star_gamma == 3, f"alpha*(G, Gamma) = {rep.alpha_star_gamma}")
    return c


def claim_kcbs(ctx: SuiteContext) -> Claim:
    c = Claim("2", "KCBS: graph C5, alpha = 2, theta = sqrt 5, alpha* = 5/2", budget=1.0)
    g, _ = ctx.compiled("kcbs")
    _iso_check(c, g, make_cycle(5), "C5")
    tol = ctx.tol(1e-6)
    rep = bounds_report(g, None, tol)
    c.check("alpha = 2", rep.alpha == 2, f"alpha = {rep.alpha}")
    c.check("theta = sqrt(5)", *_near(rep.theta, math.sqrt(5), tol))
    c.check("alpha* = 5/2", rep.alpha_star == Fraction(5, 2), f"alpha* = {rep.alpha_star}")
    return c


def claim_kcbs_product(ctx: SuiteContext) -> Claim:
    c = Claim("3", "KCBS product: theta(C5*C5) = alpha*(C5*C5) = 5", budget=10.0)
    g, _ = ctx.compiled("kcbs")
    p = or_product(g, g)
    tol = ctx.tol(1e-4)
    rep = bounds_report(p, None, tol)
    c.check("25 vertices", p.n == 25, f"n = {p.n}")
    c.check("theta = 5", *_near(rep.theta, 5.0, tol))
    c.check("alpha* = 5", rep.alpha_star == 5, f"alpha* = {rep.alpha_star}")
    c.check("saturation flag", rep.saturation)
    return c


def claim_mermin(ctx: SuiteContext) -> Claim:
    c = Claim("4", "Mermin: complement of Shrikhande, alpha = 3, theta = alpha* = 4", budget=10.0)
    g, _ = ctx.compiled("mermin")
    c.check("16 events", g.n == 16, f"n = {g.n}")
    _iso_check(c, g, make_shrikhande_complement(), "the Shrikhande complement")
    tol = ctx.tol(1e-6)
    rep = bounds_report(g, None, tol)
    c.check("alpha = 3", rep.alpha == 3, f"alpha = {rep.alpha}")
    c.check("theta = 4", *_near(rep.theta, 4.0, tol))
    c.check("alpha* = 4", rep.alpha_star == 4, f"alpha* = {rep.alpha_star}")
    c.check("separation flag", rep.separation)
    return c


def claim_chsh(ctx: SuiteContext) -> Claim:
    c = Claim("5", "CHSH: Ci8(1,4), alpha = 3, theta = 2 + sqrt 2, alpha* = 4 (PR value not excluded)", budget=2.0)
    g, _ = ctx.compiled("chsh")
    _iso_check(c, g, make_circulant(8, {1, 4}), "Ci8(1,4)")
    tol = ctx.tol(1e-6)
    rep = bounds_report(g, None, tol)
    c.check("alpha = 3", rep.alpha == 3, f"alpha = {rep.alpha}")
    c.check("theta = 2 + sqrt(2)", *_near(rep.theta, 2 + SQRT2, tol))
    c.check("alpha* = 4", rep.alpha_star == 4, f"alpha* = {rep.alpha_star}")
    half = Fraction(1, 2)
    cliques = maximal_cliques(g)
    pr_ok = g.n == 8 and all(half * len(q) <= 1 for q in cliques)
    c.check("uniform PR weights 1/2 satisfy every clique constraint (total 4)", pr_ok,
            f"largest clique {max(map(len, cliques))}")
    return c


def claim_pr_exclusion(ctx: SuiteContext) -> Claim:
    c = Claim("6", "PR boxes excluded on two copies: alpha* = 64/5, theta = 6 + 4 sqrt 2", budget=60.0)
    g, _ = ctx.compiled("chsh")
    p = or_product(g, g)
    cliques = maximal_cliques(p)
    sol = fractional_packing_solution(p, cliques)
    c.check("alpha* = 64/5", sol.value == Fraction(64, 5), f"alpha* = {sol.value}")
    c.check("exact LP duality certificate", packing_certificate_ok(p.n, cliques, sol))
    tol = ctx.tol(1e-3)
    c.check("theta = 6 + 4 sqrt(2)", *_near(ctx.theta(p, tol), 6 + 4 * SQRT2, tol))
    quarter = Fraction(1, 4)
    violated = next((q for q in cliques if quarter * len(q) > 1), None)
    c.check("uniform PR weights 1/4 (total 16) violate a clique constraint", violated is not None,
            f"clique {violated} carries {quarter * len(violated) if violated else 0}")
    return c


def claim_induced(ctx: SuiteContext) -> Claim:
    c = Claim("7", "Ci8(1,4) contains an induced C5", budget=1.0)
    host = make_circulant(8, {1, 4})
    pat = make_cycle(5)
    w = find_induced(host, pat, "C5")
    c.check("witness found", w is not None, f"{w.vertices if w else None}")
    c.check("witness verifies", w is not None and w.verify(host, pat))
    return c


def random_graphs(seed: int, count: int = 100, max_n: int = 12):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        p = rng.choice([0.2, 0.35, 0.5, 0.65, 0.8])
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        yield Graph.from_edges(n, edges)


def claim_sandwich(ctx: SuiteContext) -> Claim:
    c = Claim("8", "alpha <= theta <= alpha* on 100 random graphs (n <= 12)", budget=60.0)
    tol = ctx.tol(1e-6)
    bad = []
    for k, g in enumerate(random_graphs(ctx.seed)):
        alpha = brute_alpha(g)
        bnb = independence_number(g)
        th = theta_sdp(g, tol)
        cliques = maximal_cliques(g)
        sol = fractional_packing_solution(g, cliques)
        ok = (
            bnb == alpha
            and alpha <= th.upper + tol
            and th.lower <= sol.value + 2 * tol
            and th.width <= tol
            and packing_certificate_ok(g.n, cliques, sol)
        )
        if not ok:
            bad.append(k)
    c.check("all 100 graphs satisfy the sandwich with certified LP", not bad, f"failing graphs {bad}")
    return c


def claim_theta_oracle(ctx: SuiteContext) -> Claim:
    c = Claim("9", "theta matches closed forms for odd cycles, complete and empty graphs", budget=5.0)
    tol = ctx.tol(1e-6)
    for m in (5, 7, 9):
        c.check(f"theta(C{m})", *_near(theta_sdp(make_cycle(m), tol), theta_odd_cycle(m), tol))
    tight = ctx.tol(1e-8)
    for n in (1, 3, 6, 10):
        c.check(f"theta(K{n}) = 1", *_near(theta_sdp(make_complete(n), tight / 2), 1.0, tight))
        c.check(f"theta(empty {n}) = {n}", *_near(theta_sdp(make_empty(n), tight / 2), float(n), tight))
    return c


def claim_multiplicative(ctx: SuiteContext) -> Claim:
    c = Claim("10", "theta(G*H) = theta(G) theta(H) for (C5,C5) and (Ci8(1,4),Ci8(1,4))", budget=60.0)
    tol = ctx.tol(1e-3)
    for label, g in (("C5", make_cycle(5)), ("Ci8(1,4)", make_circulant(8, {1, 4}))):
        single = ctx.theta(g, min(tol, 1e-6))
        prod = ctx.theta(or_product(g, g), tol)
        worst = max(abs(prod.upper - single.lower ** 2), abs(prod.lower - single.upper ** 2))
        c.check(f"{label}: |theta(G*G) - theta(G)^2| <= {tol:g}", worst <= tol, f"deviation <= {worst:.3e}")
    return c


CLAIMS: list[Callable[[SuiteContext], Claim]] = [
    claim_three_box,
    claim_kcbs,
    claim_kcbs_product,
    claim_mermin,
    claim_chsh,
    claim_pr_exclusion,
    claim_induced,
    claim_sandwich,
    claim_theta_oracle,
    claim_multiplicative,
]


def spot_data(ctx: SuiteContext) -> list[dict]:
    """theta versus alpha* for powers of odd antiholes; recorded, never judged."""
    rows = []
    for m in (5, 7):
        base = complement(make_cycle(m))
        g = base
        for power in (1, 2):
            if power == 2:
                g = or_product(base, base)
            t0 = time.perf_counter()
            th = theta_sdp(g)
            a_star = fractional_packing_solution(g).value
            rows.append({
                "graph": f"anti-C{m}^{power}",
                "n": g.n,
                "theta": [th.lower, th.upper],
                "alpha_star": f"{a_star.numerator}/{a_star.denominator}",
                "alpha_star_decimal": f"{float(a_star):.10g}",
                "ratio": th.mid / float(a_star),
                "seconds": round(time.perf_counter() - t0, 3),
            })
    return rows


def run_claim(fn, ctx: SuiteContext) -> Claim:
    t0 = time.perf_counter()
    try:
        claim = fn(ctx)
    except Exception as exc:  # a crash is a failed claim, not a crashed suite
        claim = Claim(str(CLAIMS.index(fn) + 1) if fn in CLAIMS else "?", fn.__name__)
        claim.check("ran without error", False, f"{type(exc).__name__}: {exc}")
    claim.seconds = time.perf_counter() - t0
    values_ok = bool(claim.checks) and all(ok for _, ok, _ in claim.checks)
    in_time = claim.budget <= 0 or claim.seconds <= claim.budget
    if not in_time:
        claim.checks.append((f"runtime under {claim.budget:g} s", False, f"{claim.seconds:.2f} s"))
    claim.passed = values_ok and in_time
    return claim


def run_suite(ctx: Optional[SuiteContext] = None, only: Optional[set] = None) -> list[Claim]:
    ctx = ctx or SuiteContext()
    return [run_claim(fn, ctx) for k, fn in enumerate(CLAIMS, 1) if only is None or str(k) in only]


def format_claims(claims: list[Claim]) -> str:
    lines = []
    for c in claims:
        mark = "PASS" if c.passed else "FAIL"
        lines.append(f"[{mark}] {c.key:>2}  {c.title}  ({c.seconds:.2f} s / budget {c.budget:g} s)")
        for desc, ok, detail in c.checks:
            if not ok:
                lines.append(f"        x {desc}: {detail}")
    passed = sum(c.passed for c in claims)
    lines.append(f"{passed}/{len(claims)} claims reproduced")
    return "\n".join(lines)
