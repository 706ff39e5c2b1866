"""List colorings of uniform hypergraphs distinguishing intersecting edges.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from ._core import (
    Graph,
    Hypergraph,
    IedError,
    NaeFormula,
    PermutationFamily,
    bound_iedm,
    bound_ieds,
    bound_sequences,
    brute_force_coloring,
    brute_force_gndi,
    decode,
    decode_sequences,
    difference_spectrum,
    dual_hypergraph,
    fano_incidence,
    fano_plane,
    fubini,
    gap_coloring,
    gndi,
    hardness_gadget,
    is_nice,
    line_arrangement,
    nae_satisfiable,
    property_b,
    q,
    run,
    run_sequences,
    similar_under,
    stirling2,
    total_hypergraph,
    uniformity,
    verify,
    verify_gap,
    verify_partial,
    verify_sequences,
)

__all__ = [
    "Graph",
    "Hypergraph",
    "IedError",
    "NaeFormula",
    "PermutationFamily",
    "bound_iedm",
    "bound_ieds",
    "bound_sequences",
    "brute_force_coloring",
    "brute_force_gndi",
    "decode",
    "decode_sequences",
    "difference_spectrum",
    "dual_hypergraph",
    "fano_incidence",
    "fano_plane",
    "fubini",
    "gap_coloring",
    "gndi",
    "hardness_gadget",
    "is_nice",
    "line_arrangement",
    "nae_satisfiable",
    "property_b",
    "q",
    "run",
    "run_sequences",
    "similar_under",
    "stirling2",
    "total_hypergraph",
    "uniformity",
    "verify",
    "verify_gap",
    "verify_partial",
    "verify_sequences",
]
