"""Exact spectral tools for graphs whose second largest eigenvalue is at most 1.

Integer characteristic polynomials decide lambda2 <= 1 exactly; the rest of
the package enumerates triangle-free planar classes, certifies embeddings and
minors, and re-derives the sporadic catalog of the planar characterization.
"""

from .graphcore import (
    Graph,
    Graph6Error,
    GraphError,
    canonical_form,
    decode_graph6,
    encode_graph6,
    girth,
    is_connected,
    is_triangle_free,
    new_graph,
)
from .spectral import (
    IntPoly,
    char_poly,
    count_eigenvalues_greater_than,
    lambda2_at_most_one,
    lambda2_equals_one,
    spectral_summary,
)
from .embed import has_minor, induced_embeds, is_f1_embeddable, is_planar
from .families import FamilySpec, gen_f1, gen_f2, gen_g0
from .enumerate import CLASS_G, ClassPredicate, EnumerationConfig, enumerate_connected
from .catalog import (
    derive_sporadic_maximal,
    minimal_obstructions,
    verify_main_theorem,
    verify_tree_theorem,
    verify_unicyclic_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "CLASS_G",
    "ClassPredicate",
    "EnumerationConfig",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "GraphError",
    "IntPoly",
    "canonical_form",
    "char_poly",
    "count_eigenvalues_greater_than",
    "decode_graph6",
    "derive_sporadic_maximal",
    "encode_graph6",
    "enumerate_connected",
    "gen_f1",
    "gen_f2",
    "gen_g0",
    "girth",
    "has_minor",
    "induced_embeds",
    "is_connected",
    "is_f1_embeddable",
    "is_planar",
    "is_triangle_free",
    "lambda2_at_most_one",
    "lambda2_equals_one",
    "minimal_obstructions",
    "new_graph",
    "spectral_summary",
    "verify_main_theorem",
    "verify_tree_theorem",
    "verify_unicyclic_theorem",
]
