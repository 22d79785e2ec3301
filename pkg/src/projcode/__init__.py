"""Exact finite-field machinery for projective [n,k]_q codes and the
desk-scale verification of structural claims about their graphs."""

__version__ = "0.1.0"

from .gf import Field, field_new, field_of_order
from .linalg import (Matrix, Subspace, canonicalize, format_matrix,
                     hyperplanes_of, intersect, intersect_dim, parse_matrix,
                     rref, subspace_sum, superspaces_in)
from .codes import (CodeProfile, code_profile, hamming_weight,
                    is_nondegenerate, is_projective, is_simplex_code,
                    is_simplex_vector, lucas_binom_mod_p,
                    monomial_equivalent, projective_system,
                    simplex_equations_satisfied, weight_distribution)
from .constructions import (ConstructionPair, bracket, fixture_binary_15_4,
                            fixture_ternary_13_3, gaussian_binomial,
                            lemma14_pair, remark1_pair, simplex_code,
                            simplex_generator_matrix)
from .graphs import (CodeGraph, bfs, build_graph, common_projective_neighbors,
                     count_geodesics, grassmann_distance,
                     grassmann_geodesic_count, incidence_graph_1_3, isomorphic)

__all__ = [
    "__version__",
    "Field", "field_new", "field_of_order",
    "Matrix", "Subspace", "canonicalize", "format_matrix", "parse_matrix",
    "rref", "intersect", "intersect_dim", "subspace_sum", "hyperplanes_of",
    "superspaces_in",
    "CodeProfile", "code_profile", "hamming_weight", "is_nondegenerate",
    "is_projective", "is_simplex_code", "is_simplex_vector",
    "lucas_binom_mod_p", "monomial_equivalent", "projective_system",
    "simplex_equations_satisfied", "weight_distribution",
    "ConstructionPair", "bracket", "gaussian_binomial", "lemma14_pair",
    "remark1_pair", "simplex_code", "simplex_generator_matrix",
    "fixture_binary_15_4", "fixture_ternary_13_3",
    "CodeGraph", "bfs", "build_graph", "common_projective_neighbors",
    "count_geodesics", "grassmann_distance", "grassmann_geodesic_count",
    "incidence_graph_1_3", "isomorphic",
]
