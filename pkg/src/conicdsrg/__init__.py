"""Directed strongly regular graphs from a bundle of conics in PG(2, 2^e)."""

from .construction import build_context, build_delta, build_gamma
from .digraph import Digraph, DsrgParams, verify_drg, verify_dsrg
from .gf2e import FieldSpec
from .isomorphism import automorphism_group, canonical_form, find_isomorphism

__all__ = [
    "Digraph",
    "DsrgParams",
    "FieldSpec",
    "automorphism_group",
    "build_context",
    "build_delta",
    "build_gamma",
    "canonical_form",
    "find_isomorphism",
    "verify_drg",
    "verify_dsrg",
]
