"""Null-homotopy and epimorphism decisions for 2-bridge links.

Slopes are passed and returned as text: "q/p", an integer, or "inf".
"""

from ._core import (
    cf_expand,
    cf_value,
    check_c4_t4,
    connection_criterion,
    cs_seq,
    decompose,
    fundamental_endpoints,
    has_umpp_epimorphism,
    homotopy_representative,
    is_null_homotopic,
    reduce,
    s_seq,
    satisfies_necessary_condition,
    scan,
    schubert_equivalent,
    t_seq,
    u_hat,
    u_word,
    verify,
)

__all__ = [
    "cf_expand",
    "cf_value",
    "check_c4_t4",
    "connection_criterion",
    "cs_seq",
    "decompose",
    "fundamental_endpoints",
    "has_umpp_epimorphism",
    "homotopy_representative",
    "is_null_homotopic",
    "reduce",
    "s_seq",
    "satisfies_necessary_condition",
    "scan",
    "schubert_equivalent",
    "t_seq",
    "u_hat",
    "u_word",
    "verify",
]
