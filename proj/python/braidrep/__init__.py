"""Exact braid group representations.

Thin Python surface over the C++ core: braid word problem, the universal
construction and its Burau/Gassner/Lawrence/reduced specializations.
Matrices are returned as nested lists of polynomial strings.
"""

from braidrep._core import (
    ParseError,
    PreconditionError,
    artin_act,
    braid_eq,
    burau,
    gassner,
    hecke_entry_claim,
    lawrence,
    lawrence_dimension,
    normal_form,
    quadratic_check,
    reduced,
    universal,
    verify_braid_relations,
)

__all__ = [
    "ParseError",
    "PreconditionError",
    "artin_act",
    "braid_eq",
    "burau",
    "gassner",
    "hecke_entry_claim",
    "lawrence",
    "lawrence_dimension",
    "normal_form",
    "quadratic_check",
    "reduced",
    "universal",
    "verify_braid_relations",
]
