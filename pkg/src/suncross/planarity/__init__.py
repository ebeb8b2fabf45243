"""Planarity decisions, planar embeddings, and face tracing.

Two interchangeable kernels implement the left-right planarity criterion: a
compiled extension and a pure-Python fallback.  The compiled one is used when
available unless SUNCROSS_PURE=1 is set.  Embedding extraction always runs in
Python; only the boolean decisions sit on solver hot paths.
"""

from __future__ import annotations

import os

from ..errors import NonPlanarError
from ..graph import Graph
from . import _lr_pure
from .faces import FaceReport, RotationSystem, validate_embedding

if os.environ.get("SUNCROSS_PURE") == "1":
    _kernel = _lr_pure
    _KERNEL_NAME = "pure"
else:
    try:
        from . import _lr_cython as _kernel  # type: ignore[no-redef]

        _KERNEL_NAME = "cython"
    except ImportError:
        _kernel = _lr_pure
        _KERNEL_NAME = "pure"


def kernel_name() -> str:
    """Which planarity kernel is active, "cython" or "pure"."""
    return _KERNEL_NAME


def is_planar_arrays(n: int, eu: list[int], ev: list[int]) -> bool:
    return _kernel.is_planar_index(n, eu, ev)


def is_planar_planarized_arrays(n: int, eu: list[int], ev: list[int],
                                pairs: list[tuple[int, int]]) -> bool:
    """Planarity of the planarization of the graph under the given
    crossing pairs (edge-index pairs, dummies chained in list order)."""
    return _kernel.is_planar_planarized_index(n, eu, ev, pairs)


def is_planar(g: Graph) -> bool:
    eu, ev = g.index_arrays()
    return _kernel.is_planar_index(g.vertex_count, eu, ev)


def planar_embedding(g: Graph) -> RotationSystem:
    """A planar rotation system of g; raises NonPlanarError if none exists."""
    eu, ev = g.index_arrays()
    rot = _lr_pure.embedding_index(g.vertex_count, eu, ev)
    if rot is None:
        raise NonPlanarError("graph is not planar")
    verts = g.vertices
    return RotationSystem(
        {verts[v]: tuple(verts[w] for w in rot[v]) for v in range(len(verts))})


__all__ = [
    "FaceReport",
    "RotationSystem",
    "is_planar",
    "is_planar_arrays",
    "is_planar_planarized_arrays",
    "kernel_name",
    "planar_embedding",
    "validate_embedding",
]
