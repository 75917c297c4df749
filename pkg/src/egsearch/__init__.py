"""Exhaustive small-graph search for minimal counterexamples to the
Erdős–Gyárfás conjecture (minimum degree 3, no cycle of length 2**k)."""

from .cycle_detect import (
    CycleWitness,
    cycle_spectrum_bruteforce,
    find_power_of_two_cycle,
    has_cycle_of_length,
    verify_witness,
)
from .enumeration import GeneratorSpec, canonical_form, certificate, generate, ingest_graph6
from .graph_core import (
    DegreeProfile,
    Graph,
    Graph6Error,
    GraphError,
    connected_components,
    degree_profile,
    delete_edge,
    delete_vertex,
    encode_graph6,
    graph_from_edges,
    k_core,
    parse_graph6,
)
from .search import Classification, SearchConfig, SearchSummary, classify, run_search
from .structural import (
    FilterReport,
    cubic_fraction_ok,
    degree3_dominating,
    edge_minimal,
    filter_report,
    high_degree_independent,
    regularity,
)

__version__ = "0.1.0"
