"""Rotation-system embeddings of simple graphs.

A simple graph together with a cyclic order of the neighbours around each
vertex (a rotation system) determines a cellular embedding in an
orientable surface.  Faces are traced with a fixed left-face convention:

    the successor of the directed edge (u, v) is (v, w), where w
    immediately follows u in the rotation at v.

Every directed edge lies on exactly one face walk, so the traced faces
partition the 2|E| directed edges and V - E + F recovers the Euler
characteristic of the carrier surface (2 for the sphere, 0 for the
torus).  Any fixed convention yields the same face multiset; fixing this
one makes walks reproducible byte for byte.

Vertex ids are dense 1-based integers.  Index 0 of internal tables is a
dummy entry, as is conventional for 1-indexed combinatorics.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .errors import (
    AsymmetricRotationError,
    DisconnectedGraphError,
    RepeatedNeighbourError,
    SelfLoopError,
)


class EmbeddedGraph:
    """Immutable simple graph with a combinatorial embedding.

    Construct through :func:`build_embedded_graph`, which validates the
    rotation system.  Isolated vertices (empty rotations) are permitted.
    """

    __slots__ = ("_rotation", "_adjacency", "_edge_count")

    def __init__(self, rotation: tuple[tuple[int, ...], ...]):
        # rotation[0] is the dummy entry; validation happens in
        # build_embedded_graph so this stays a cheap internal constructor.
        self._rotation = rotation
        self._adjacency = tuple(frozenset(nbrs) for nbrs in rotation)
        self._edge_count = sum(len(nbrs) for nbrs in rotation) // 2

    @property
    def vertex_count(self) -> int:
        return len(self._rotation) - 1

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def vertices(self) -> range:
        return range(1, len(self._rotation))

    def rotation(self, v: int) -> tuple[int, ...]:
        """Cyclic neighbour order at v."""
        return self._rotation[v]

    def degree(self, v: int) -> int:
        return len(self._rotation[v])

    def neighbours(self, v: int) -> frozenset[int]:
        return self._adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency[u]

    def edges(self):
        """Undirected edges as (u, v) with u < v, in vertex order."""
        for u in self.vertices():
            for v in self._rotation[u]:
                if u < v:
                    yield (u, v)

    def directed_edges(self):
        for u in self.vertices():
            for v in self._rotation[u]:
                yield (u, v)

    def is_connected(self) -> bool:
        n = self.vertex_count
        if n <= 1:
            return True
        seen = [False] * (n + 1)
        stack = [1]
        seen[1] = True
        count = 1
        while stack:
            u = stack.pop()
            for w in self._rotation[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == n

    def __eq__(self, other) -> bool:
        return isinstance(other, EmbeddedGraph) and self._rotation == other._rotation

    def __hash__(self) -> int:
        return hash(self._rotation)

    def __repr__(self) -> str:
        return f"EmbeddedGraph(V={self.vertex_count}, E={self.edge_count})"


@dataclass(frozen=True)
class Face:
    """One traced face: a closed walk of directed edges.

    The walk starts at its lexicographically smallest directed edge.  The
    size of the face counts vertex appearances with multiplicity, which
    equals the number of directed edges on the walk.
    """

    walk: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.walk)

    @property
    def boundary_vertices(self) -> tuple[int, ...]:
        """Vertex appearances in walk order (with multiplicity)."""
        return tuple(u for u, _ in self.walk)


def build_embedded_graph(
    rotations: Mapping[int, Sequence[int]] | Sequence[Sequence[int]],
) -> EmbeddedGraph:
    """Validate a rotation system and wrap it in an EmbeddedGraph.

    Accepts either a mapping {vertex: neighbour sequence} whose keys must
    be exactly 1..n, or a plain sequence of neighbour sequences which is
    taken to describe vertices 1..n in order.

    Raises:
        SelfLoopError: a vertex lists itself.
        RepeatedNeighbourError: a neighbour repeated within one rotation.
        AsymmetricRotationError: u lists v but v does not list u.
        ValueError: ids out of range or malformed input.
    """
    if isinstance(rotations, Mapping):
        n = len(rotations)
        if set(rotations.keys()) != set(range(1, n + 1)):
            raise ValueError("rotation keys must be exactly 1..n")
        table = [()] + [tuple(rotations[v]) for v in range(1, n + 1)]
    else:
        table = [()] + [tuple(seq) for seq in rotations]
    n = len(table) - 1
    if n < 1:
        raise ValueError("graph must have at least one vertex")

    for v in range(1, n + 1):
        for w in table[v]:
            if not isinstance(w, int) or not (1 <= w <= n):
                raise ValueError(f"vertex {v} lists out-of-range neighbour {w!r}")
        if v in table[v]:
            raise SelfLoopError(f"vertex {v} lists itself")
        if len(set(table[v])) != len(table[v]):
            raise RepeatedNeighbourError(f"vertex {v} repeats a neighbour")

    sets = [set(nbrs) for nbrs in table]
    for v in range(1, n + 1):
        for w in table[v]:
            if v not in sets[w]:
                raise AsymmetricRotationError(
                    f"vertex {v} lists {w} but {w} does not list {v}"
                )

    return EmbeddedGraph(tuple(table))


def trace_faces(g: EmbeddedGraph) -> list[Face]:
    """Trace all faces of the embedding.

    The faces partition the directed edges; the sum of face sizes is
    2|E|.  Directed edges are visited in ascending order, so each face
    walk begins at its smallest directed edge and the returned list is
    sorted by that edge.
    """
    # next_after[v][u] = neighbour following u in rotation(v)
    next_after: list[dict[int, int]] = [{}]
    for v in g.vertices():
        rot = g.rotation(v)
        d = len(rot)
        next_after.append({rot[i]: rot[(i + 1) % d] for i in range(d)})

    visited: set[tuple[int, int]] = set()
    faces: list[Face] = []
    for start in sorted(g.directed_edges()):
        if start in visited:
            continue
        walk = []
        edge = start
        while edge not in visited:
            visited.add(edge)
            walk.append(edge)
            u, v = edge
            edge = (v, next_after[v][u])
        if edge != start:
            raise AssertionError("face tracing did not close; invalid rotation system")
        faces.append(Face(tuple(walk)))
    return faces


def euler_characteristic(g: EmbeddedGraph) -> int:
    """V - E + F for the embedding; 2 on the sphere, 0 on the torus.

    Raises:
        DisconnectedGraphError: per-component characteristics are out of
            contract.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("Euler characteristic requires a connected graph")
    return g.vertex_count - g.edge_count + len(trace_faces(g))


def is_6regular_triangulation(g: EmbeddedGraph) -> bool:
    """True iff every degree is 6, every face a triangle, and chi = 0."""
    if not g.is_connected():
        raise DisconnectedGraphError("triangulation check requires a connected graph")
    if any(g.degree(v) != 6 for v in g.vertices()):
        return False
    faces = trace_faces(g)
    if any(f.size != 3 for f in faces):
        return False
    return g.vertex_count - g.edge_count + len(faces) == 0
