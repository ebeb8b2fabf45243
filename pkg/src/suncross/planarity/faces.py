"""Rotation systems, face tracing, and embedding validation.

The face-tracing convention used everywhere in this package: the successor
of dart (u, v) is the dart leaving v toward the neighbor that follows u in
v's stored rotation order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from ..errors import StructuralError
from ..graph import Graph, VertexLabel

Dart = tuple[VertexLabel, VertexLabel]


class RotationSystem:
    """Cyclic order of neighbors around each vertex of a simple graph."""

    __slots__ = ("_rot", "_hash")

    def __init__(self, rotations: Mapping[VertexLabel, Sequence[VertexLabel]]):
        self._rot = {v: tuple(ns) for v, ns in rotations.items()}
        self._hash = hash(tuple(sorted((v, r) for v, r in self._rot.items())))

    @property
    def vertices(self) -> tuple[VertexLabel, ...]:
        return tuple(sorted(self._rot))

    def rotation(self, v: VertexLabel) -> tuple[VertexLabel, ...]:
        return self._rot[v]

    def items(self) -> Iterator[tuple[VertexLabel, tuple[VertexLabel, ...]]]:
        return iter(sorted(self._rot.items()))

    def __contains__(self, v: VertexLabel) -> bool:
        return v in self._rot

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RotationSystem) and self._rot == other._rot

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"RotationSystem({len(self._rot)} vertices)"


@dataclass(frozen=True)
class FaceReport:
    """Outcome of tracing the faces of a rotation system."""

    face_count: int
    genus: int
    planar: bool
    faces: tuple[tuple[Dart, ...], ...]


def trace_faces_index(rotations: list[list[int]]) -> list[list[tuple[int, int]]]:
    """Face cycles of an index-level rotation system, darts as (tail, head)."""
    pos = [{w: i for i, w in enumerate(rot)} for rot in rotations]
    seen: set[tuple[int, int]] = set()
    faces = []
    for u in range(len(rotations)):
        for w in rotations[u]:
            if (u, w) in seen:
                continue
            face = []
            a, b = u, w
            while (a, b) not in seen:
                seen.add((a, b))
                face.append((a, b))
                rot = rotations[b]
                a, b = b, rot[(pos[b][a] + 1) % len(rot)]
            faces.append(face)
    return faces


def genus_index(rotations: list[list[int]]) -> int:
    """Sum of per-component genera of an index-level rotation system."""
    n = len(rotations)
    comp = [-1] * n
    comps = 0
    for s in range(n):
        if comp[s] != -1:
            continue
        comp[s] = comps
        stack = [s]
        while stack:
            for w in rotations[stack.pop()]:
                if comp[w] == -1:
                    comp[w] = comps
                    stack.append(w)
        comps += 1
    verts = [0] * comps
    darts = [0] * comps
    faces = [0] * comps
    for v in range(n):
        verts[comp[v]] += 1
        darts[comp[v]] += len(rotations[v])
    for face in trace_faces_index(rotations):
        faces[comp[face[0][0]]] += 1
    total = 0
    for c in range(comps):
        f = faces[c] if darts[c] else 1        # isolated vertex: one face
        euler = verts[c] - darts[c] // 2 + f
        total += (2 - euler) // 2
    return total


def validate_embedding(g: Graph, r: RotationSystem) -> FaceReport:
    """Check r against g structurally, then trace faces and compute genus."""
    if set(r.vertices) != set(g.vertices):
        raise StructuralError("rotation system and graph have different vertices")
    for v in g.vertices:
        rot = r.rotation(v)
        if sorted(rot) != sorted(g.neighbors(v)):
            raise StructuralError(
                f"rotation at {v} is not a permutation of its neighbors")
    idx = {v: i for i, v in enumerate(g.vertices)}
    rotations = [[idx[w] for w in r.rotation(v)] for v in g.vertices]
    faces = trace_faces_index(rotations)
    genus = genus_index(rotations)
    verts = g.vertices
    label_faces = tuple(
        tuple((verts[a], verts[b]) for a, b in face) for face in faces)
    return FaceReport(face_count=len(faces), genus=genus,
                      planar=(genus == 0), faces=label_faces)
