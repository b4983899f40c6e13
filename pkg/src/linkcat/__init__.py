"""Linking diagrams as spans of injective relations, composed by pullback."""
from .compose import (brute_force_syncs, compose_flat, compose_link,
                      compose_with_loops, mediating, new_loop_count, paths,
                      pullback)
from .families import FamilyTag, enumerate_family, member_of, naive_compose
from .irel import InjRel, VertexSet
from .linking import (Link, Linking, add_loops, flatten, from_span,
                      identity_linking, is_isomorphic, to_span)

__version__ = "0.1.0"

__all__ = [
    "FamilyTag", "InjRel", "Link", "Linking", "VertexSet", "add_loops",
    "brute_force_syncs", "compose_flat", "compose_link", "compose_with_loops",
    "enumerate_family", "flatten", "from_span", "identity_linking",
    "is_isomorphic", "mediating", "member_of", "naive_compose",
    "new_loop_count", "paths", "pullback", "to_span",
]
