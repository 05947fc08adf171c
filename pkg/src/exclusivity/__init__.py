"""Exclusivity graphs of contextuality scenarios and their classical, quantum
and fractional-packing bounds."""

from .errors import InvalidParameter, ParseError, ResourceLimit, SolverFailure
from .graph import (
    Graph,
    complement,
    find_isomorphism,
    induced,
    make_circulant,
    make_complete,
    make_cycle,
    make_empty,
    make_prism,
    make_shrikhande_complement,
    or_product,
)
from .scenario import CliqueHypergraph, Event, Scenario, builtin, exclusivity_graph, parse_scenario
from .lp import LinearProgram, LpSolution, lp_solve
from .theta import ThetaBracket, theta_sdp
from .invariants import (
    BoundsReport,
    bounds_report,
    fractional_packing,
    fractional_packing_solution,
    independence_number,
    lovasz_theta,
    maximal_cliques,
)
from .structure import InducedWitness, find_induced, scan_odd_structures

__version__ = "0.1.0"
