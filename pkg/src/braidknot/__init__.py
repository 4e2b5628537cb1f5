"""Braids, permutations, link diagrams, and the Conway and Jones polynomials."""

from .algebra import LaurentPoly, Permutation, compose
from .braid import BraidWord, classify, crossing_certificate, markov_simplify
from .invariants import conway_polynomial, invariants_of_braid, jones_polynomial
from .link import LinkDiagram, braid_closure, bundled_diagram, connected_sum, unlink

__all__ = [
    "BraidWord",
    "LaurentPoly",
    "LinkDiagram",
    "Permutation",
    "braid_closure",
    "bundled_diagram",
    "classify",
    "compose",
    "connected_sum",
    "conway_polynomial",
    "crossing_certificate",
    "invariants_of_braid",
    "jones_polynomial",
    "markov_simplify",
    "unlink",
]

__version__ = "0.1.0"
