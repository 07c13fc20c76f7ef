"""Cycle colourings, arc colour sets, and validated disk triangulations.

Conventions: colours are integers 1..k; boundary vertices of a disk
triangulation are 0..l-1 in cycle order and internal vertices are
l..l+n-1.  All indices are 0-based internally; the JSON formats in
:mod:`safecycle.io` are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _regions
from .errors import ValidationError

Edge = tuple[int, int]
Triangle = tuple[int, int, int]

CLOSED = "closed"
HALF_OPEN_RIGHT = "half_open_right"  # [i, j)
HALF_OPEN_LEFT = "half_open_left"  # (i, j]
OPEN = "open"  # (i, j)

_CLOSURES = (CLOSED, HALF_OPEN_RIGHT, HALF_OPEN_LEFT, OPEN)


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def triangle_key(a: int, b: int, c: int) -> Triangle:
    x, y, z = sorted((a, b, c))
    return (x, y, z)


@dataclass(frozen=True)
class CycleColouring:
    """A proper k-colouring of the cycle v_0, ..., v_{l-1}."""

    k: int
    colours: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colours", tuple(self.colours))
        if self.k < 2:
            raise ValidationError("palette", f"palette size {self.k} < 2")
        l = len(self.colours)
        if l < 3:
            raise ValidationError("cycle-length", f"cycle length {l} < 3")
        for c in self.colours:
            if not isinstance(c, int) or not 1 <= c <= self.k:
                raise ValidationError("colour-range", f"colour {c} outside 1..{self.k}")
        for i in range(l):
            if self.colours[i] == self.colours[(i + 1) % l]:
                raise ValidationError(
                    "not-proper", f"equal colours on cycle edge ({i}, {(i + 1) % l})"
                )

    @property
    def length(self) -> int:
        return len(self.colours)

    def at(self, i: int) -> int:
        """Colour at cyclic position i (any integer)."""
        return self.colours[i % len(self.colours)]

    def used_colours(self) -> frozenset[int]:
        return frozenset(self.colours)


@dataclass(frozen=True)
class ArcInterval:
    """A cyclic index interval with one of the four closures."""

    start: int
    stop: int
    closure: str = CLOSED

    def indices(self, l: int) -> tuple[int, ...]:
        if not (0 <= self.start < l and 0 <= self.stop < l):
            raise ValidationError(
                "arc-range", f"interval ({self.start}, {self.stop}) outside [0, {l})"
            )
        if self.closure not in _CLOSURES:
            raise ValidationError("arc-closure", f"unknown closure {self.closure!r}")
        walk = [self.start]
        i = self.start
        while i != self.stop:
            i = (i + 1) % l
            walk.append(i)
        if self.closure in (HALF_OPEN_RIGHT, OPEN):
            walk = walk[:-1]
        if self.closure in (HALF_OPEN_LEFT, OPEN):
            walk = walk[1:]
        return tuple(walk)


def arc_colour_set(c: CycleColouring, a: ArcInterval) -> frozenset[int]:
    """Set of colours occurring on the arc (the paper's F sets)."""
    return frozenset(c.colours[i] for i in a.indices(c.length))


def arc_set(c: CycleColouring, start: int, stop: int, closure: str = CLOSED) -> frozenset[int]:
    """Shorthand for ``arc_colour_set`` with inline interval data."""
    return arc_colour_set(c, ArcInterval(start, stop, closure))


@dataclass(frozen=True)
class NearTriangulation:
    """A triangulated disk: boundary cycle 0..l-1, all internal faces triangles.

    Instances should be produced by :func:`validate_near_triangulation`,
    the generator in :mod:`safecycle.enumeration`, or the gadget factory;
    all of those guarantee the invariants hold.
    """

    boundary_len: int
    internal_count: int
    edges: frozenset[Edge]
    triangles: frozenset[Triangle]

    @property
    def num_vertices(self) -> int:
        return self.boundary_len + self.internal_count

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def neighbours(self, v: int) -> frozenset[int]:
        return frozenset(a if b == v else b for (a, b) in self.edges if v in (a, b))

    def to_region(self) -> "_regions.Region":
        return _regions.Region(
            boundary=tuple(range(self.boundary_len)),
            edges=self.edges,
            faces=self.triangles,
        )


def validate_near_triangulation(
    boundary_len: int,
    internal_count: int,
    edges,
    triangles,
) -> NearTriangulation:
    """Check every disk-triangulation invariant; raise a coded error on failure."""
    l, n = boundary_len, internal_count
    if l < 3:
        raise ValidationError("cycle-length", f"boundary length {l} < 3")
    if n < 0:
        raise ValidationError("vertex-count", f"internal count {n} < 0")
    nv = l + n

    eset = set()
    for e in edges:
        u, v = e
        if not (0 <= u < nv and 0 <= v < nv):
            raise ValidationError("vertex-id", f"edge {e} endpoint outside 0..{nv - 1}")
        if u == v:
            raise ValidationError("loop", f"loop at vertex {u}")
        k = edge_key(u, v)
        if k in eset:
            raise ValidationError("multi-edge", f"duplicate edge {k}")
        eset.add(k)

    tset = set()
    for t in triangles:
        a, b, c = t
        if len({a, b, c}) != 3:
            raise ValidationError("degenerate-face", f"face {t} has repeated vertices")
        if not all(0 <= x < nv for x in t):
            raise ValidationError("vertex-id", f"face {t} vertex outside 0..{nv - 1}")
        k = triangle_key(a, b, c)
        if k in tset:
            raise ValidationError("duplicate-face", f"duplicate face {k}")
        tset.add(k)

    for i in range(l):
        if edge_key(i, (i + 1) % l) not in eset:
            raise ValidationError(
                "boundary-edge-missing", f"boundary edge ({i}, {(i + 1) % l}) absent"
            )

    if len(tset) != l + 2 * n - 2:
        raise ValidationError(
            "face-count", f"|triangles| = {len(tset)}, expected {l + 2 * n - 2}"
        )
    if len(eset) != 2 * l + 3 * n - 3:
        raise ValidationError(
            "edge-count", f"|edges| = {len(eset)}, expected {2 * l + 3 * n - 3}"
        )

    per_edge: dict[Edge, int] = {e: 0 for e in eset}
    for (a, b, c) in tset:
        for e in (edge_key(a, b), edge_key(b, c), edge_key(a, c)):
            if e not in per_edge:
                raise ValidationError("edge-face-incidence", f"face edge {e} not in edge set")
            per_edge[e] += 1
    boundary_edges = {edge_key(i, (i + 1) % l) for i in range(l)}
    for e, cnt in per_edge.items():
        want = 1 if e in boundary_edges else 2
        if cnt != want:
            raise ValidationError(
                "edge-degree", f"edge {e} lies in {cnt} faces, expected {want}"
            )

    adjacency: dict[int, set[int]] = {v: set() for v in range(nv)}
    for (u, v) in eset:
        adjacency[u].add(v)
        adjacency[v].add(u)

    for v in range(nv):
        _check_fan(v, v < l, adjacency[v], tset)

    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adjacency[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != nv:
        raise ValidationError("disconnected", f"only {len(seen)} of {nv} vertices reachable")

    return NearTriangulation(l, n, frozenset(eset), frozenset(tset))


def _check_fan(v: int, on_boundary: bool, neighbours: set[int], tset: set[Triangle]) -> None:
    """Link of an internal vertex is one closed fan; of a boundary vertex, one open fan."""
    link_deg: dict[int, int] = {u: 0 for u in neighbours}
    link_adj: dict[int, list[int]] = {u: [] for u in neighbours}
    n_link_edges = 0
    for t in tset:
        if v in t:
            a, b = (x for x in t if x != v)
            if a not in link_deg or b not in link_deg:
                raise ValidationError(
                    "edge-face-incidence", f"face {t} uses a non-edge at vertex {v}"
                )
            link_deg[a] += 1
            link_deg[b] += 1
            link_adj[a].append(b)
            link_adj[b].append(a)
            n_link_edges += 1
    if not neighbours:
        raise ValidationError("fan-condition", f"vertex {v} is isolated")
    want_edges = len(neighbours) - 1 if on_boundary else len(neighbours)
    if n_link_edges != want_edges:
        raise ValidationError(
            "fan-condition",
            f"link of vertex {v} has {n_link_edges} edges, expected {want_edges}",
        )
    degrees = sorted(link_deg.values())
    if on_boundary:
        ok = degrees[:2] == [1, 1] and all(d == 2 for d in degrees[2:])
    else:
        ok = all(d == 2 for d in degrees)
    if not ok:
        raise ValidationError("fan-condition", f"link of vertex {v} is not a single fan")
    start = next(iter(neighbours))
    comp = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in link_adj[u]:
            if w not in comp:
                comp.add(w)
                stack.append(w)
    if len(comp) != len(neighbours):
        raise ValidationError("fan-condition", f"link of vertex {v} is disconnected")


def find_chord(g: NearTriangulation) -> Edge | None:
    """Smallest chord by the (i, (j-i) mod l) tie-break, or None."""
    return _regions.first_chord(g.to_region())


def is_chordless(g: NearTriangulation) -> bool:
    return find_chord(g) is None


def find_separating_triangle(g: NearTriangulation) -> Triangle | None:
    """Lexicographically smallest triangle of edges with vertices strictly inside, or None."""
    found = _regions.first_separating_triangle(g.to_region())
    return None if found is None else found[0]


def split_at_chord(
    g: NearTriangulation, chord: Edge
) -> tuple[NearTriangulation, NearTriangulation, dict[int, int], dict[int, int]]:
    """Split at a chord (i, j) of the boundary cycle.

    Returns the outer part (boundary v_0..v_i, v_j..v_{l-1}), the inner part
    (boundary v_i..v_j), and the old-id -> new-id maps for each part.
    """
    i, j = chord
    l = g.boundary_len
    if not (0 <= i < l and 0 <= j < l):
        raise ValidationError("vertex-id", f"chord {chord} outside the boundary")
    if i > j:
        i, j = j, i
    if j - i in (0, 1) or (i == 0 and j == l - 1):
        raise ValidationError("not-a-chord", f"({i}, {j}) is not a non-consecutive pair")
    if edge_key(i, j) not in g.edges:
        raise ValidationError("not-a-chord", f"no edge between {i} and {j}")

    inner, outer = _regions.split_at_chord(g.to_region(), i, j)
    g_outer, map_outer = _region_to_triangulation(outer)
    g_inner, map_inner = _region_to_triangulation(inner)
    return g_outer, g_inner, map_outer, map_inner


def _region_to_triangulation(region) -> tuple[NearTriangulation, dict[int, int]]:
    mapping: dict[int, int] = {v: i for i, v in enumerate(region.boundary)}
    for v in sorted(region.internal_vertices()):
        mapping[v] = len(mapping)
    edges = frozenset(edge_key(mapping[u], mapping[v]) for (u, v) in region.edges)
    faces = frozenset(
        triangle_key(mapping[a], mapping[b], mapping[c]) for (a, b, c) in region.faces
    )
    g = validate_near_triangulation(
        len(region.boundary), len(mapping) - len(region.boundary), edges, faces
    )
    return g, mapping


def check_proper(edges, colouring: dict[int, int]) -> bool:
    """Independent propriety check: every edge bichromatic."""
    return all(colouring[u] != colouring[v] for (u, v) in edges)
