"""JSON wire formats.  All ids and indices are 1-based on the wire:
boundary vertices 1..l, internal vertices l+1..l+n, colours 1..k."""

from __future__ import annotations

import json

from .classify import BadWitness, GoodWitness
from .core import CycleColouring, NearTriangulation, validate_near_triangulation
from .errors import ValidationError


def colouring_to_json(c: CycleColouring) -> dict:
    return {"k": c.k, "colours": list(c.colours)}


def colouring_from_json(data: dict) -> CycleColouring:
    try:
        return CycleColouring(int(data["k"]), tuple(int(x) for x in data["colours"]))
    except (KeyError, TypeError) as exc:
        raise ValidationError("colouring-json", f"malformed colouring object: {exc}")


def graph_to_json(g: NearTriangulation, k: int | None = None) -> dict:
    out = {
        "boundary_len": g.boundary_len,
        "internal_count": g.internal_count,
        "edges": sorted([u + 1, v + 1] for (u, v) in g.edges),
        "triangles": sorted([a + 1, b + 1, c + 1] for (a, b, c) in g.triangles),
    }
    if k is not None:
        out["k"] = k
    return out


def graph_from_json(data: dict) -> NearTriangulation:
    try:
        edges = [(int(u) - 1, int(v) - 1) for (u, v) in data["edges"]]
        triangles = [
            (int(a) - 1, int(b) - 1, int(c) - 1) for (a, b, c) in data["triangles"]
        ]
        return validate_near_triangulation(
            int(data["boundary_len"]), int(data["internal_count"]), edges, triangles
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError("graph-json", f"malformed graph object: {exc}")


def verdict_to_json(kind: str, witness: BadWitness | GoodWitness | None) -> dict:
    out = {"verdict": kind, "condition": None, "indices": [], "A": []}
    if witness is not None:
        out["condition"] = witness.condition
        out["indices"] = list(witness.indices)
        if isinstance(witness, GoodWitness):
            out["A"] = sorted(witness.discard)
    return out


def colouring_map_to_json(col: dict) -> list:
    """A full vertex colouring as a 1-based colour list indexed by vertex id."""
    return [col[v] for v in sorted(col)]


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
