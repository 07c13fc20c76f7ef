"""Combinatorial operations on triangulated disk regions.

A :class:`Region` is a triangulated disk with arbitrary vertex ids and an
explicit boundary cycle, so vertices keep their identity across the
cut-and-paste operations the extension engine performs (chord splits,
edge deletions, boundary-vertex deletions, separating-triangle surgery).
No validation happens here; callers pass regions derived from validated
triangulations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

Edge = tuple[int, int]
Triangle = tuple[int, int, int]


def _ekey(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Region:
    boundary: tuple[int, ...]
    edges: frozenset[Edge]
    faces: frozenset[Triangle]

    @property
    def boundary_len(self) -> int:
        return len(self.boundary)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def _boundary_set(self) -> frozenset[int]:
        return frozenset(self.boundary)

    @cached_property
    def _faces_by_edge(self) -> dict[Edge, tuple[Triangle, ...]]:
        out: dict[Edge, list[Triangle]] = {}
        for t in self.faces:
            a, b, c = t
            for e in (_ekey(a, b), _ekey(b, c), _ekey(a, c)):
                out.setdefault(e, []).append(t)
        return {e: tuple(ts) for e, ts in out.items()}

    def vertices(self) -> frozenset[int]:
        vs = set(self.boundary)
        for t in self.faces:
            vs.update(t)
        return frozenset(vs)

    def internal_vertices(self) -> frozenset[int]:
        return self.vertices() - self._boundary_set

    def has_edge(self, u: int, v: int) -> bool:
        return _ekey(u, v) in self.edges

    def neighbours(self, v: int) -> frozenset[int]:
        return frozenset(a if b == v else b for (a, b) in self.edges if v in (a, b))

    def is_single_triangle(self) -> bool:
        return len(self.faces) == 1 and len(self.boundary) == 3

    def faces_at_edge(self, u: int, v: int) -> tuple[Triangle, ...]:
        return self._faces_by_edge.get(_ekey(u, v), ())


def first_chord(region: Region) -> Edge | None:
    """Smallest (i, (j-i) mod l) pair of non-consecutive adjacent boundary positions.

    Returns boundary *positions*, not vertex ids.
    """
    b = region.boundary
    l = len(b)
    for i in range(l):
        for d in range(2, l - 1):
            j = (i + d) % l
            if region.has_edge(b[i], b[j]):
                return (i, j)
    return None


def split_at_chord(region: Region, pi: int, pj: int) -> tuple[Region, Region]:
    """Split at the chord between boundary positions pi < pj.

    Returns (inner, outer): inner is bounded by boundary[pi..pj] plus the
    chord, outer by boundary[0..pi] + boundary[pj..] plus the chord.
    """
    b = region.boundary
    a, c = b[pi], b[pj]
    chord = _ekey(a, c)
    seed_edge = _ekey(b[pi], b[(pi + 1) % len(b)])
    boundary_edges = {
        _ekey(b[m], b[(m + 1) % len(b)]) for m in range(len(b))
    }
    seed = region.faces_at_edge(*seed_edge)[0]
    inner_faces = {seed}
    stack = [seed]
    while stack:
        t = stack.pop()
        x, y, z = t
        for e in (_ekey(x, y), _ekey(y, z), _ekey(x, z)):
            if e == chord or e in boundary_edges:
                continue
            for t2 in region.faces_at_edge(*e):
                if t2 not in inner_faces:
                    inner_faces.add(t2)
                    stack.append(t2)
    outer_faces = region.faces - inner_faces

    def face_edges(faces) -> frozenset[Edge]:
        es = set()
        for (x, y, z) in faces:
            es.add(_ekey(x, y))
            es.add(_ekey(y, z))
            es.add(_ekey(x, z))
        return frozenset(es)

    inner = Region(
        boundary=b[pi : pj + 1],
        edges=face_edges(inner_faces) | {chord},
        faces=frozenset(inner_faces),
    )
    outer = Region(
        boundary=b[: pi + 1] + b[pj:],
        edges=face_edges(outer_faces) | {chord},
        faces=frozenset(outer_faces),
    )
    return inner, outer


def first_separating_triangle(region: Region) -> tuple[Triangle, frozenset[int]] | None:
    """Smallest sorted vertex triple forming a non-face edge-triangle with a
    non-empty interior and non-empty exterior; returns (triple, interior)."""
    adj: dict[int, set[int]] = {}
    for (u, v) in region.edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    candidates = set()
    for (u, v) in region.edges:
        for w in adj[u] & adj[v]:
            t = tuple(sorted((u, v, w)))
            if t not in region.faces:
                candidates.add(t)
    for t in sorted(candidates):
        interior = _triangle_interior(region, t, adj)
        if interior is not None:
            return t, interior
    return None


def _triangle_interior(region: Region, tri: Triangle, adj) -> frozenset[int] | None:
    removed = set(tri)
    rest = region.vertices() - removed
    if not rest:
        return None
    unseen = set(rest)
    interior: set[int] = set()
    exterior_nonempty = False
    bset = region._boundary_set
    while unseen:
        start = unseen.pop()
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj.get(x, ()):
                if y in unseen:
                    unseen.discard(y)
                    comp.add(y)
                    stack.append(y)
        if comp & bset:
            exterior_nonempty = True
        else:
            interior |= comp
    if interior and (exterior_nonempty or len(interior) < len(rest)):
        return frozenset(interior)
    return None


def delete_triangle_interior(region: Region, tri: Triangle, interior: frozenset[int]) -> Region:
    """Remove the interior of a separating triangle; the triangle becomes a face."""
    faces = frozenset(t for t in region.faces if not (set(t) & interior)) | {tri}
    edges = frozenset(e for e in region.edges if not (set(e) & interior))
    return Region(region.boundary, edges, faces)


def triangle_subregion(region: Region, tri: Triangle, interior: frozenset[int]) -> Region:
    """The sub-disk bounded by a separating triangle: the triangle plus its interior."""
    faces = frozenset(t for t in region.faces if set(t) & interior)
    edges = set()
    for (x, y, z) in faces:
        edges.add(_ekey(x, y))
        edges.add(_ekey(y, z))
        edges.add(_ekey(x, z))
    a, b, c = tri
    edges.update((_ekey(a, b), _ekey(b, c), _ekey(a, c)))
    return Region(boundary=tri, edges=frozenset(edges), faces=faces)


def fan_between(region: Region, v: int, a: int, b: int) -> tuple[int, ...]:
    """Neighbours of v in face order u_1 = a, ..., u_r = b.

    Requires (v, a) to lie on a single face (true for boundary edges);
    consecutive fan members share a face with v.
    """
    faces = region.faces_at_edge(v, a)
    assert len(faces) == 1, f"edge ({v}, {a}) lies on {len(faces)} faces"
    seq = [a]
    prev = None
    cur = a
    while cur != b:
        nxt = None
        for t in region.faces_at_edge(v, cur):
            if t != prev:
                (w,) = (x for x in t if x not in (v, cur))
                nxt = w
                prev = t
                break
        assert nxt is not None, f"fan walk around {v} stuck at {cur}"
        seq.append(nxt)
        cur = nxt
    return tuple(seq)


def delete_boundary_edge(region: Region, pos: int) -> tuple[Region, int]:
    """Remove the boundary edge at position pos; the face's third vertex joins
    the boundary between the two endpoints.  Returns (region, that vertex)."""
    b = region.boundary
    u, w = b[pos], b[(pos + 1) % len(b)]
    faces = region.faces_at_edge(u, w)
    assert len(faces) == 1
    (x,) = (t for t in faces[0] if t not in (u, w))
    assert x not in region._boundary_set, "face apex must be internal"
    new_boundary = b[: pos + 1] + (x,) + b[pos + 1 :]
    return (
        Region(
            boundary=new_boundary,
            edges=region.edges - {_ekey(u, w)},
            faces=region.faces - {faces[0]},
        ),
        x,
    )


def delete_boundary_vertex(region: Region, pos: int) -> tuple[Region, tuple[int, ...]]:
    """Remove the boundary vertex at pos, exposing its fan of neighbours.

    Returns (region, fan) where fan runs from the previous to the next
    boundary vertex; fan[1:-1] are the newly exposed (previously internal)
    vertices, spliced into the boundary in place of the deleted one.
    """
    b = region.boundary
    l = len(b)
    v = b[pos]
    a, c = b[(pos - 1) % l], b[(pos + 1) % l]
    fan = fan_between(region, v, a, c)
    assert all(x not in region._boundary_set for x in fan[1:-1]), (
        "fan of a boundary vertex in a chordless region must be internal"
    )
    new_boundary = b[:pos] + fan[1:-1] + b[pos + 1 :]
    edges = frozenset(e for e in region.edges if v not in e)
    faces = frozenset(t for t in region.faces if v not in t)
    return Region(new_boundary, edges, faces), fan
