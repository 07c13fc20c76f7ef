#!/usr/bin/env python3
"""Benchmark the brute-force extension oracle: compiled kernel vs the
pure-Python fallback.

Two views: end-to-end oracle calls on the workloads that dominate the
verification suites (gadget refutation, probe scans), and kernel-only
timings on wide instances where the backtracking tree is large.

Run:  python benchmarks/bench_oracle.py
"""

import time
from array import array

from safecycle import (
    CycleColouring,
    brute_force_extend,
    enumerate_colourings,
    enumerate_disk_triangulations,
    gadget_for,
    is_bad,
)
from safecycle import _kernel_py
from safecycle.core import edge_key, triangle_key, validate_near_triangulation
from safecycle.enumeration import KERNEL, _oracle_arrays

if KERNEL == "compiled":
    from safecycle import _kernel


def gadget_workload():
    """Every bad colouring of C_l, l <= 6, k in {4, 5}: refute its gadget."""
    jobs = []
    for k in (4, 5):
        for l in range(3, 7):
            for c in enumerate_colourings(l, k):
                w = is_bad(c)
                if w is not None:
                    jobs.append((c, gadget_for(c, w).graph))
    return jobs


def probe_workload():
    """All chordless disk triangulations of C_8 with up to 3 interior
    vertices against a handful of 6-colourings."""
    graphs = [
        g
        for n in range(4)
        for g in enumerate_disk_triangulations(8, n, chordless_only=True)
    ]
    colourings = [
        CycleColouring(6, (1, 2, 3, 4, 1, 2, 3, 4)),
        CycleColouring(6, (1, 2, 1, 3, 1, 4, 5, 4)),
        CycleColouring(6, (1, 2, 3, 1, 2, 3, 4, 5)),
    ]
    return [(c, g) for c in colourings for g in graphs]


def stacked_wheel(l, layers):
    """Concentric cycles of length l around a hub: a wide interior whose
    search tree is genuinely deep."""
    edges = {edge_key(i, (i + 1) % l) for i in range(l)}
    tris = set()
    ring = list(range(l))
    next_id = l
    for _ in range(layers):
        inner = list(range(next_id, next_id + l))
        next_id += l
        for i in range(l):
            a, b = ring[i], ring[(i + 1) % l]
            u, v = inner[i], inner[(i + 1) % l]
            edges |= {edge_key(a, u), edge_key(u, v), edge_key(b, u)}
            tris |= {triangle_key(a, b, u), triangle_key(b, u, v)}
        ring = inner
    hub = next_id
    for i in range(l):
        u, v = ring[i], ring[(i + 1) % l]
        edges |= {edge_key(u, hub)}
        tris |= {triangle_key(u, v, hub)}
    n = next_id + 1 - l
    return validate_near_triangulation(l, n, edges, tris)


def bench_oracle(name, jobs, backends):
    print(f"{name} (end to end):")
    times = {}
    for backend in backends:
        t0 = time.perf_counter()
        blocked = sum(1 for c, g in jobs if brute_force_extend(c, g, backend=backend) is None)
        times[backend] = time.perf_counter() - t0
        print(
            f"  {backend:>8}: {times[backend]:8.3f}s"
            f"  ({len(jobs)} calls, {blocked} non-extendable)"
        )
    if len(times) == 2:
        print(f"  speedup : {times['python'] / times['compiled']:8.2f}x")


def bench_kernel_only(jobs, backends):
    print("kernel only (arrays prepared once):")
    prepared = []
    for c, g in jobs:
        colours, offsets, targets = _oracle_arrays(c, g)
        prepared.append((g.boundary_len, g.internal_count, c.k, colours, offsets, targets))
    impls = {"python": _kernel_py}
    if "compiled" in backends:
        impls["compiled"] = _kernel
    times = {}
    for backend in backends:
        fn = impls[backend].search_extension
        t0 = time.perf_counter()
        hits = 0
        for base, n, k, colours, offsets, targets in prepared:
            work = array("i", colours)
            hits += fn(base, n, k, work, offsets, targets)
        times[backend] = time.perf_counter() - t0
        print(f"  {backend:>8}: {times[backend]:8.3f}s  ({len(prepared)} searches, {hits} extendable)")
    if len(times) == 2:
        print(f"  speedup : {times['python'] / times['compiled']:8.2f}x")


def main():
    print(f"import-time kernel: {KERNEL}")
    backends = ["python"] + (["compiled"] if KERNEL == "compiled" else [])
    bench_oracle("gadget refutation", gadget_workload(), backends)
    bench_oracle("probe scan", probe_workload(), backends)

    wide = stacked_wheel(9, 2)
    hard = [
        (c, wide)
        for c in enumerate_colourings(9, 4)
        if len(c.used_colours()) == 4
    ][:400]
    bench_kernel_only(hard, backends)


if __name__ == "__main__":
    main()
