"""Exact i-nullity pairs, SNIP verdicts and rooted minors of small graphs.

Matrices are nested lists with int, fractions.Fraction or "p/q" entries.
Returned matrices use fractions.Fraction.
"""

from ._sniplab import (
    RootedGraph,
    SniplabError,
    certify,
    complement,
    contains_rooted_minor,
    enumerate_pairs,
    extend_root,
    family,
    has_isnip,
    has_sap,
    index_type,
    minor_value,
    neutral_shift,
    nullity_pair,
    paper_matrix,
    schur_complement,
    south_step,
    support_graph,
    sw_step,
    west_step,
    xixi,
)

__all__ = [
    "RootedGraph",
    "SniplabError",
    "certify",
    "complement",
    "contains_rooted_minor",
    "enumerate_pairs",
    "extend_root",
    "family",
    "has_isnip",
    "has_sap",
    "index_type",
    "minor_value",
    "neutral_shift",
    "nullity_pair",
    "paper_matrix",
    "schur_complement",
    "south_step",
    "support_graph",
    "sw_step",
    "west_step",
    "xixi",
]
