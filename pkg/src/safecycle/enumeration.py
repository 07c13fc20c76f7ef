"""Exhaustive disk-triangulation generation, the brute-force extension
oracle, the safety probe, and the conjecture explorer.

The oracle's inner loop runs on the compiled kernel when the extension
module built, otherwise on the pure-Python twin; both implement the same
ascending-colour backtracking contract.
"""

from __future__ import annotations

import itertools
from array import array
from dataclasses import dataclass

from .classify import enumerate_colourings, verdict
from .core import CycleColouring, NearTriangulation, edge_key, triangle_key
from .errors import ValidationError

try:  # pragma: no cover - exercised only when the extension is absent
    from . import _kernel as _backend

    KERNEL = "compiled"
except ImportError:  # pragma: no cover
    from . import _kernel_py as _backend

    KERNEL = "python"

from . import _kernel_py


def enumerate_disk_triangulations(l: int, n: int, chordless_only: bool = False):
    """Stream every boundary-labelled triangulated disk with exactly n
    internal vertices, deduplicated under internal-vertex relabelling.

    Generation fills one region at a time: the face on the region's first
    boundary edge gets its apex from the remaining region vertices or from
    a fresh internal vertex, then recursion continues on the sub-regions.
    """
    if l < 3:
        raise ValidationError("cycle-length", f"boundary length {l} < 3")
    if n < 0:
        raise ValidationError("vertex-count", f"internal count {n} < 0")

    edges = {edge_key(i, (i + 1) % l) for i in range(l)}
    triangles: list = []
    seen: set = set()

    def emit():
        key = _canonical_key(l, n, edges, triangles)
        if key in seen:
            return None
        seen.add(key)
        return NearTriangulation(l, n, frozenset(edges), frozenset(triangles))

    def fill(regions: tuple, budget: int, next_id: int):
        if not regions:
            if budget == 0:
                g = emit()
                if g is not None:
                    yield g
            return
        region = regions[-1]
        rest = regions[:-1]
        m = len(region)
        r0, r1 = region[0], region[1]
        for j in range(2, m):
            apex = region[j]
            new_edges = []
            if j > 2:
                e = edge_key(r1, apex)
                if e in edges:
                    continue
                new_edges.append(e)
            if j < m - 1:
                e = edge_key(apex, r0)
                if e in edges:
                    continue
                if new_edges and e == new_edges[0]:
                    continue
                new_edges.append(e)
            if chordless_only and any(a < l and b < l for (a, b) in new_edges):
                continue
            sub = []
            if j > 2:
                sub.append(region[1 : j + 1])
            if j < m - 1:
                sub.append(region[j:] + (r0,))
            edges.update(new_edges)
            triangles.append(triangle_key(r0, r1, apex))
            yield from fill(rest + tuple(sub), budget, next_id)
            triangles.pop()
            edges.difference_update(new_edges)
        if budget > 0:
            apex = next_id
            new_edges = [edge_key(r0, apex), edge_key(r1, apex)]
            edges.update(new_edges)
            triangles.append(triangle_key(r0, r1, apex))
            new_region = (r0, apex) + region[1:]
            yield from fill(rest + (new_region,), budget - 1, next_id + 1)
            triangles.pop()
            edges.difference_update(new_edges)

    yield from fill((tuple(range(l)),), n, l)


def _canonical_key(l: int, n: int, edges, triangles):
    """Minimum encoding over permutations of the internal vertex ids."""
    best = None
    for perm in itertools.permutations(range(l, l + n)):
        relabel = {**{i: i for i in range(l)}, **dict(zip(range(l, l + n), perm))}
        key = (
            tuple(sorted(edge_key(relabel[u], relabel[v]) for (u, v) in edges)),
            tuple(sorted(triangle_key(*(relabel[x] for x in t)) for t in triangles)),
        )
        if best is None or key < best:
            best = key
    return best


def _oracle_arrays(c: CycleColouring, g: NearTriangulation):
    l, n = g.boundary_len, g.internal_count
    colours = array("i", list(c.colours) + [0] * n)
    offsets = array("i", [0])
    targets = array("i")
    adjacency = {v: [] for v in range(l + n)}
    for (u, v) in g.edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    for j in range(n):
        targets.extend(sorted(adjacency[l + j]))
        offsets.append(len(targets))
    return colours, offsets, targets


def brute_force_extend(
    c: CycleColouring, g: NearTriangulation, backend: str | None = None
) -> dict | None:
    """Some proper extension of c over g, or None when none exists.

    Backtracking over internal vertices in id order, colours ascending.
    ``backend`` forces "compiled" or "python" (used by the benchmark and
    the backend-agreement tests); by default the import-time choice runs.
    """
    if c.length != g.boundary_len:
        raise ValidationError("length-mismatch", "boundary and colouring lengths differ")
    for (u, v) in g.edges:
        if u < g.boundary_len and v < g.boundary_len:
            if c.colours[u] == c.colours[v]:
                return None  # a chord already clashes; no extension exists
    colours, offsets, targets = _oracle_arrays(c, g)
    impl = _backend
    if backend == "python":
        impl = _kernel_py
    elif backend == "compiled":
        if KERNEL != "compiled":
            raise ValidationError("backend", "compiled kernel unavailable")
        impl = _backend
    ok = impl.search_extension(
        g.boundary_len, g.internal_count, c.k, colours, offsets, targets
    )
    if not ok:
        return None
    return {v: colours[v] for v in range(g.num_vertices)}


def exhaustive_extend(c: CycleColouring, g: NearTriangulation) -> dict | None:
    """Independent oracle: full cartesian scan over internal assignments.

    Exponential in the internal count; used to cross-check the
    backtracking kernels at small n.
    """
    if c.length != g.boundary_len:
        raise ValidationError("length-mismatch", "boundary and colouring lengths differ")
    l, n = g.boundary_len, g.internal_count
    base = dict(enumerate(c.colours))
    for assignment in itertools.product(range(1, c.k + 1), repeat=n):
        col = dict(base)
        col.update({l + j: assignment[j] for j in range(n)})
        if all(col[u] != col[v] for (u, v) in g.edges):
            return col
    return None


@dataclass(frozen=True)
class ProbeVerdict:
    outcome: str  # "counterexample" | "no_counterexample_up_to"
    colouring: CycleColouring
    n_max: int
    scanned: int
    counterexample: NearTriangulation | None = None


def _graph_layer(l: int, n: int):
    layer = [
        (g, _canonical_key(l, n, g.edges, g.triangles))
        for g in enumerate_disk_triangulations(l, n, chordless_only=True)
    ]
    layer.sort(key=lambda pair: pair[1])
    return [g for g, _ in layer]


def _extendable(args) -> bool:
    c, g = args
    return brute_force_extend(c, g) is not None


def safety_probe(c: CycleColouring, n_max: int, jobs: int = 1) -> ProbeVerdict:
    """Scan chordless disk triangulations in increasing internal count,
    canonical order inside each layer; first non-extendable graph wins."""
    scanned = 0
    for n in range(n_max + 1):
        layer = _graph_layer(c.length, n)
        if jobs > 1:
            import concurrent.futures

            with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_extendable, ((c, g) for g in layer), chunksize=8))
        else:
            results = [_extendable((c, g)) for g in layer]
        for g, ok in zip(layer, results):
            scanned += 1
            if not ok:
                return ProbeVerdict("counterexample", c, n_max, scanned, g)
    return ProbeVerdict("no_counterexample_up_to", c, n_max, scanned, None)


@dataclass(frozen=True)
class ExplorerReport:
    k: int
    length: int
    n_max: int
    classes_total: int
    counts: dict
    neither: tuple  # of (CycleColouring, ProbeVerdict)


def conjecture_explorer(k: int, l: int, n_max: int = 3, jobs: int = 1) -> ExplorerReport:
    """Classify every equivalence class; probe the ones that are neither
    good nor bad.  Gathers evidence only; no safety claim is made."""
    counts = {"bad": 0, "good": 0, "neither": 0}
    neither = []
    total = 0
    for c in enumerate_colourings(l, k, up_to_equivalence=True):
        total += 1
        kind, _ = verdict(c)
        counts[kind] += 1
        if kind == "neither":
            neither.append((c, safety_probe(c, n_max, jobs=jobs)))
    return ExplorerReport(k, l, n_max, total, counts, tuple(neither))
