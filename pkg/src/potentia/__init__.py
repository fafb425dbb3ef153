"""Degree sequences, realizations and potentially H-graphic sequences."""

from .graphs import LabeledGraph, complete_graph, cycle_graph, named_graph, parse_edge_list, path_graph
from .layoff import LayoffTrace, run_layoff
from .oracle import (
    contains_subgraph,
    count_realizations,
    enumerate_realizations,
    exact_sigma,
    oracle_potentially_H,
)
from .potential import (
    PatternGraph,
    PotentialVerdict,
    alpha,
    as_pattern,
    degree_sufficient,
    i_star,
    is_potentially_H,
    li_yin_potentially_Kk,
    nabla,
    pi_tilde,
    sigma,
    want_sequence,
)
from .realize import EmbeddingWitness, kleitman_wang_layoff, realize, two_switch
from .seqcore import DegreeSequence, is_close, is_graphic, majorizes, parse_sequence
from .witness import Certificate, thm15_certificate, thm41_certificate

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "DegreeSequence",
    "EmbeddingWitness",
    "LabeledGraph",
    "LayoffTrace",
    "PatternGraph",
    "PotentialVerdict",
    "alpha",
    "as_pattern",
    "complete_graph",
    "contains_subgraph",
    "count_realizations",
    "cycle_graph",
    "degree_sufficient",
    "enumerate_realizations",
    "exact_sigma",
    "i_star",
    "is_close",
    "is_graphic",
    "is_potentially_H",
    "kleitman_wang_layoff",
    "li_yin_potentially_Kk",
    "majorizes",
    "nabla",
    "named_graph",
    "oracle_potentially_H",
    "parse_edge_list",
    "parse_sequence",
    "path_graph",
    "pi_tilde",
    "realize",
    "run_layoff",
    "sigma",
    "thm15_certificate",
    "thm41_certificate",
    "two_switch",
    "want_sequence",
]
