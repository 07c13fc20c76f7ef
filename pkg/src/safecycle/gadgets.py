"""Witness near-triangulations for bad colourings.

Each factory turns one unsafety witness into the explicit chordless
near-triangulation that the colouring cannot be extended over: a wheel
(condition 1), two stacked apexes fanned over complementary arcs
(condition 2), or an apex triangle fanned over three arcs (condition 3).
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import BadWitness
from .core import (
    CycleColouring,
    NearTriangulation,
    edge_key,
    triangle_key,
    validate_near_triangulation,
)
from .errors import ValidationError


@dataclass(frozen=True)
class Gadget:
    graph: NearTriangulation
    kind: str  # "wheel" | "two_apex" | "triangle_apex"
    source: BadWitness


def _cycle_scaffold(l: int) -> tuple[set, set]:
    edges = {edge_key(i, (i + 1) % l) for i in range(l)}
    return edges, set()


def _fan(edges: set, triangles: set, apex: int, arc: list[int]) -> None:
    for v in arc:
        edges.add(edge_key(apex, v))
    for a, b in zip(arc, arc[1:]):
        triangles.add(triangle_key(apex, a, b))


def _arc(start: int, stop: int, l: int) -> list[int]:
    """Closed cyclic arc of 0-based boundary vertices from start to stop."""
    out = [start]
    i = start
    while i != stop:
        i = (i + 1) % l
        out.append(i)
    return out


def wheel_gadget(c: CycleColouring, witness: BadWitness) -> Gadget:
    if witness.condition != 1:
        raise ValidationError("witness-mismatch", "wheel gadget needs a condition-1 witness")
    if len(c.used_colours()) != c.k:
        raise ValidationError("witness-mismatch", "colouring does not use all k colours")
    l = c.length
    edges, triangles = _cycle_scaffold(l)
    hub = l
    _fan(edges, triangles, hub, _arc(0, l - 1, l) + [0])
    graph = validate_near_triangulation(l, 1, edges, triangles)
    return Gadget(graph, "wheel", witness)


def two_apex_gadget(c: CycleColouring, witness: BadWitness) -> Gadget:
    from .core import arc_set

    if witness.condition != 2:
        raise ValidationError("witness-mismatch", "two-apex gadget needs a condition-2 witness")
    p, q = witness.indices
    l = c.length
    if len(arc_set(c, p - 1, q - 1) & arc_set(c, q - 1, p - 1)) < c.k - 1:
        raise ValidationError("witness-mismatch", "indices do not satisfy condition 2")
    u, v = l, l + 1
    edges, triangles = _cycle_scaffold(l)
    _fan(edges, triangles, u, _arc(p - 1, q - 1, l))
    _fan(edges, triangles, v, _arc(q - 1, p - 1, l))
    edges.add(edge_key(u, v))
    triangles.add(triangle_key(u, v, p - 1))
    triangles.add(triangle_key(u, v, q - 1))
    graph = validate_near_triangulation(l, 2, edges, triangles)
    return Gadget(graph, "two_apex", witness)


def triangle_apex_gadget(c: CycleColouring, witness: BadWitness) -> Gadget:
    from .core import arc_set

    if witness.condition != 3:
        raise ValidationError(
            "witness-mismatch", "triangle-apex gadget needs a condition-3 witness"
        )
    p, q, r = witness.indices
    l = c.length
    shared = (
        arc_set(c, p - 1, q - 1)
        & arc_set(c, q - 1, r - 1)
        & arc_set(c, r - 1, p - 1)
    )
    if len(shared) < c.k - 2:
        raise ValidationError("witness-mismatch", "indices do not satisfy condition 3")
    u, v, w = l, l + 1, l + 2
    edges, triangles = _cycle_scaffold(l)
    _fan(edges, triangles, u, _arc(p - 1, q - 1, l))
    _fan(edges, triangles, v, _arc(q - 1, r - 1, l))
    _fan(edges, triangles, w, _arc(r - 1, p - 1, l))
    for a, b in ((u, v), (v, w), (w, u)):
        edges.add(edge_key(a, b))
    triangles.add(triangle_key(u, v, q - 1))
    triangles.add(triangle_key(v, w, r - 1))
    triangles.add(triangle_key(w, u, p - 1))
    triangles.add(triangle_key(u, v, w))
    graph = validate_near_triangulation(l, 3, edges, triangles)
    return Gadget(graph, "triangle_apex", witness)


def gadget_for(c: CycleColouring, witness: BadWitness) -> Gadget:
    """Dispatch on the witness condition."""
    factory = {1: wheel_gadget, 2: two_apex_gadget, 3: triangle_apex_gadget}[witness.condition]
    return factory(c, witness)
