"""Generalized (k-)power domination: propagation, forts, exact and constructive solvers."""

from powerdom.constructive import CertifiedSolution, constructive_kpds
from powerdom.edgelist import format_edge_list, parse_edge_list, read_edge_list, write_edge_list
from powerdom.families import DomainError, FamilySpec, LabeledGraph, generate
from powerdom.forts import find_l_configurations, find_minimal_forts, fort_hitting_lower_bound, verify_fort
from powerdom.graph import Graph, GraphError, VertexSet, build_graph
from powerdom.harness import ClaimRecord, verify_paper_claims
from powerdom.propagation import is_kpds, monitored_fixpoint, propagate
from powerdom.solvers import BudgetExhausted, SolveResult, gamma_exact, gamma_pk_exact, gamma_t_exact
from powerdom.transforms import blowup_clique, blowup_independent

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted",
    "CertifiedSolution",
    "ClaimRecord",
    "DomainError",
    "FamilySpec",
    "Graph",
    "GraphError",
    "LabeledGraph",
    "SolveResult",
    "VertexSet",
    "blowup_clique",
    "blowup_independent",
    "build_graph",
    "constructive_kpds",
    "find_l_configurations",
    "find_minimal_forts",
    "fort_hitting_lower_bound",
    "format_edge_list",
    "gamma_exact",
    "gamma_pk_exact",
    "gamma_t_exact",
    "generate",
    "is_kpds",
    "monitored_fixpoint",
    "parse_edge_list",
    "propagate",
    "read_edge_list",
    "verify_fort",
    "verify_paper_claims",
    "write_edge_list",
]
