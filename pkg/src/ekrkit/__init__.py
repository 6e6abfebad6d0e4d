"""Exact Erdos-Ko-Rado computations for independent sets of graphs."""

from .graphs import (Graph, GraphError, build_graph, complete_graph, complete_multipartite,
                     cycle_graph, disjoint_union, elements, empty_graph,
                     generalized_lex_product, lex_product, named_graph, nkt, parse_named,
                     path_graph, spiky_f, spiky_g, vset)
from .graph6 import from_graph6, to_graph6
from .independent import (SetFamily, independence_number, independent_r_sets, max_star,
                          minimax_independence, star)
from .engine import (EkrReport, check_2ekr_formula, common_intersection, disjointness_graph,
                     ekr_status, is_intersecting, is_r_centre, is_strict_r_centre,
                     max_anomalous, max_intersecting)
from .search import SearchLimitExceeded

__version__ = "0.1.0"
