"""Exact models and verification for families of 9-congruent elliptic curves.

Thin wrapper over the C++ extension module. All rational numbers cross the
boundary as strings ("p/q") so nothing is ever rounded.
"""

from ._ninecong import (
    case_ids,
    forget,
    j_invariant,
    local_solubility,
    model,
    reproduce,
    search_points,
    surface,
    surface_fiber,
    verify_congruence,
    verify_paper,
)

__all__ = [
    "case_ids",
    "forget",
    "j_invariant",
    "local_solubility",
    "model",
    "reproduce",
    "search_points",
    "surface",
    "surface_fiber",
    "verify_congruence",
    "verify_paper",
]
