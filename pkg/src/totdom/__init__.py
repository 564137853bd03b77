"""Total domination polynomials: enumeration, reductions, closed forms, equivalence classes."""

from .closed_forms import (
    book_poly, corona_kbar_poly, firecracker_poly, gen_firecracker_poly, gen_friendship4_poly,
    h3_poly, helm_poly, lollipop_poly, star_poly, sunlike_poly,
)
from .engine import (
    brute_force_tdp, certify_irrelevant, dominating_vertex_reduction, irrelevant_edge_candidates,
    is_total_dominating, simplify, total_domination_number, twin_edge_reduction,
    vertex_decomposition_check,
)
from .equivalence import fingerprint, is_dt_unique, partition_catalog
from .graph import (
    FamilySpec, Graph, corona, from_edge_list, make_family, p3_attach, parse_graph6, sunlike,
    support_vertices, write_graph6,
)
from .polynomial import Polynomial, analyze_sequence, count_distinct_real_roots, is_all_real_rooted

__version__ = "0.1.0"
