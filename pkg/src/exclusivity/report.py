"""Machine-readable report documents.

Exact rationals are written as ``{"exact": "p/q", "decimal": "..."}``; the
decimal string carries 10 significant digits and is advisory only.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from . import __version__
from .invariants import BoundsReport
from .structure import InducedWitness


def rational_json(x: Optional[Fraction]):
    if x is None:
        return None
    x = Fraction(x)
    return {"exact": f"{x.numerator}/{x.denominator}", "decimal": f"{float(x):.10g}"}


def rational_from_json(d) -> Optional[Fraction]:
    return None if d is None else Fraction(d["exact"])


@dataclass
class ReportDocument:
    input_descriptor: str
    graph_stats: dict
    bounds: Optional[dict] = None
    witnesses: Optional[list] = None
    status: str = "ok"
    claims: Optional[list] = None
    timing: dict = field(default_factory=dict)
    tool_version: str = __version__

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(asdict(self), indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls(**json.loads(text))


def bounds_json(rep: BoundsReport) -> dict:
    theta = None
    if rep.theta is not None:
        theta = [float(rep.theta.lower), float(rep.theta.upper)]
    return {
        "alpha": rep.alpha,
        "alpha_witness": rep.alpha_witness,
        "theta": theta,
        "alpha_star": rational_json(rep.alpha_star),
        "alpha_star_gamma": rational_json(rep.alpha_star_gamma),
        "num_maximal_cliques": rep.num_cliques,
        "gamma_size": rep.gamma_size,
        "uncovered_vertices": rep.uncovered,
        "tol": rep.tol,
        "flags": {
            "quantum_classical_separation": rep.separation,
            "specker_saturation": rep.saturation,
            "gamma_uncovered": bool(rep.uncovered),
        },
        "errors": dict(rep.errors),
    }


def witness_json(w: InducedWitness) -> dict:
    return {"pattern": w.pattern_name, "vertices": list(w.vertices)}


def bounds_document(descriptor: str, rep: BoundsReport) -> ReportDocument:
    status = "ok"
    if "theta" in rep.errors:
        status = "solver-failure"
    elif rep.errors:
        status = "resource-limit"
    return ReportDocument(
        input_descriptor=descriptor,
        graph_stats={"n": rep.n, "edges": rep.num_edges},
        bounds=bounds_json(rep),
        status=status,
        timing=dict(rep.timing_ms),
    )


def format_bounds_text(doc: ReportDocument) -> str:
    b = doc.bounds
    lines = [
        f"input        {doc.input_descriptor}",
        f"graph        n={doc.graph_stats['n']} edges={doc.graph_stats['edges']}",
        f"alpha        {b['alpha']}   witness {b['alpha_witness']}",
    ]
    if b["theta"] is not None:
        lo, up = b["theta"]
        lines.append(f"theta        [{lo:.10f}, {up:.10f}]")
    else:
        lines.append("theta        unavailable")

    def rat(key, label):
        v = b[key]
        if v is not None:
            lines.append(f"{label:<13}{v['exact']}  (~{v['decimal']})")

    rat("alpha_star", "alpha*")
    rat("alpha_star_gamma", "alpha*(ctx)")
    if b["num_maximal_cliques"] is not None:
        lines.append(f"cliques      {b['num_maximal_cliques']} maximal")
    if b["gamma_size"] is not None:
        lines.append(f"Gamma        {b['gamma_size']} sets, uncovered vertices {b['uncovered_vertices']}")
    flags = b["flags"]
    lines.append(f"separation   {'yes' if flags['quantum_classical_separation'] else 'no'}")
    lines.append(f"saturation   {'yes' if flags['specker_saturation'] else 'no'}")
    for k, msg in b["errors"].items():
        lines.append(f"error[{k}]   {msg}")
    lines.append("timing (ms)  " + ", ".join(f"{k}={v:.1f}" for k, v in doc.timing.items()))
    lines.append(f"status       {doc.status}")
    return "\n".join(lines)
