"""Exact minimal-free-resolution invariants of edge ideals of simple hypergraphs.

The heavy lifting happens in the `_hyperbetti` extension module; this package
re-exports its surface under stable names.
"""

from ._hyperbetti import (
    Error,
    Hypergraph,
    betti,
    check,
    distance,
    dual,
    invariants,
    parse,
    splitting_edges,
)

__all__ = [
    "Error",
    "Hypergraph",
    "betti",
    "check",
    "distance",
    "dual",
    "invariants",
    "parse",
    "splitting_edges",
]
