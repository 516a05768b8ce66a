"""Exact walk-matrix arithmetic and D_n verification (C++ core)."""

from ._walkmat import (
    Graph,
    NotApplicable,
    NotEquitable,
    ParseError,
    chebyshev_t,
    chebyshev_u,
    det,
    discriminant,
    divisor_matrix,
    dynkin_d,
    graph_walk_matrix,
    hat_walk_matrix,
    main_eigenvalue_count,
    minor_gcd,
    rank,
    rank2_corpus,
    rank_mod2,
    smith_normal_form,
    verify,
    walk_matrix,
)

__all__ = [
    "Graph",
    "NotApplicable",
    "NotEquitable",
    "ParseError",
    "chebyshev_t",
    "chebyshev_u",
    "det",
    "discriminant",
    "divisor_matrix",
    "dynkin_d",
    "graph_walk_matrix",
    "hat_walk_matrix",
    "main_eigenvalue_count",
    "minor_gcd",
    "rank",
    "rank2_corpus",
    "rank_mod2",
    "smith_normal_form",
    "verify",
    "walk_matrix",
]
