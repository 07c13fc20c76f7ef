"""Constructive extension engine for good cycle colourings.

The solvers follow the inductive structure of the underlying proofs.  Zone
layout on a boundary cycle b_0..b_{l-1}: the first ``p`` vertices are of
type T1, the next ``q - p`` of type T3, the rest of type T2, where a type
Ti vertex carries either the size-3 list {c1..c4} minus {ci} or a
singleton inside S_i = {c_i, c5..ck}.  Marked edges sit on the zone
boundaries, carrying labels from the families in :mod:`safecycle.labels`;
the closing edge (b_0, b_{l-1}) is the one whose label gets derived.

Case dispatch order in every solver: chord split, separating triangle,
the length-3 table, deletion of an edge with disjoint endpoint lists,
then the singleton/fan constructions.  Symmetric cases run through an
actual instance transformation (cycle reversal with the c1/c2 swap, or
the c3/c4 swap) plus output un-transformation.

Realizations are computed on demand: the label phase returns only the
derived label, and a realization re-runs the same deterministic case
analysis with one ordered pair pinned on the closing edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _regions, labels
from ._regions import Region
from .classify import GoodWitness, is_good
from .core import CycleColouring, NearTriangulation, check_proper, find_chord
from .errors import InternalInvariantError, ValidationError
from .labels import (
    SWAP_12,
    SWAP_13,
    SWAP_23,
    SWAP_34,
    Pair,
    apply_swap,
    reverse_label,
    reverse_pair,
    swap_label,
    swap_pair,
)

CHECK_INVARIANTS = True

SIZE3 = {1: frozenset({2, 3, 4}), 2: frozenset({1, 3, 4}), 3: frozenset({1, 2, 4})}

T1, T3, T2 = 1, 3, 2  # zone tags, ordered T1 < T3 < T2 along the boundary


# ---------------------------------------------------------------------------
# public data model


@dataclass(frozen=True)
class ListAssignment:
    """Per-boundary-vertex colour lists with the zone boundaries p, q.

    The first ``p`` vertices are T1, the next ``q - p`` are T3, the rest
    T2.  Degenerate zones are allowed (``p == q``: no T3; ``p == q == l``:
    all T1).
    """

    lists: tuple[frozenset[int], ...]
    p: int
    q: int

    def __post_init__(self):
        object.__setattr__(self, "lists", tuple(frozenset(s) for s in self.lists))
        l = len(self.lists)
        if not (0 <= self.p <= self.q <= l):
            raise ValidationError("zone-bounds", f"need 0 <= p <= q <= {l}")

    @property
    def length(self) -> int:
        return len(self.lists)

    def zone(self, i: int) -> int:
        return T1 if i < self.p else (T3 if i < self.q else T2)


@dataclass(frozen=True)
class EdgeLabel:
    """A set of allowed ordered colour pairs on one marked cycle edge."""

    family: str  # "L12" | "L13" | "L32"
    pairs: frozenset

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(tuple(p) for p in self.pairs))
        if self.family not in ("L12", "L13", "L32"):
            raise ValidationError("label-family", f"unknown family {self.family!r}")


@dataclass(frozen=True)
class FeasibleResult:
    """The derived closing-edge label and one realizing colouring per pair."""

    label: EdgeLabel
    realizations: dict


# ---------------------------------------------------------------------------
# engine instances (private)


@dataclass(frozen=True)
class _T1Inst:
    region: Region
    lists: dict
    k: int


@dataclass(frozen=True)
class _T12Inst:
    region: Region
    lists: dict
    k: int
    p: int
    label2: frozenset


@dataclass(frozen=True)
class _T132Inst:
    region: Region
    lists: dict
    k: int
    p: int
    q: int
    label2: frozenset
    label3: frozenset


def _swap_set(swap: dict, s: frozenset) -> frozenset:
    return frozenset(apply_swap(swap, c) for c in s)


def _swap_col(swap: dict, col: dict) -> dict:
    return {v: apply_swap(swap, c) for v, c in col.items()}


def _die(msg: str, trace) -> InternalInvariantError:
    return InternalInvariantError(msg, tuple(trace))


def _need(cond: bool, msg: str, trace) -> None:
    if not cond:
        raise _die(msg, trace)


def _check_measure(trace) -> None:
    """Edge counts (the last field of each trace entry) never increase along
    a recursion path, and only instance rewrites (mirrors, colour swaps)
    may keep them equal, never more than a few in a row."""
    _need(len(trace) < 4000, "runaway recursion", trace)
    counts = [entry[-1] for entry in trace]
    for a, b in zip(counts, counts[1:]):
        _need(b <= a, "recursion measure increased", trace)
    if len(counts) >= 5:
        _need(len(set(counts[-5:])) > 1, "recursion measure stalled", trace)


def _merge(col1: dict, col2: dict, trace) -> dict:
    for v in col1.keys() & col2.keys():
        _need(col1[v] == col2[v], f"merge mismatch at vertex {v}", trace)
    out = dict(col1)
    out.update(col2)
    return out


def _check_t1(inst: _T1Inst, s: int, t: int, col: dict, trace) -> None:
    if not CHECK_INVARIANTS:
        return
    b = inst.region.boundary
    _need(check_proper(inst.region.edges, col), "improper colouring emitted", trace)
    _need(all(col[v] in inst.lists[v] for v in b), "list violated", trace)
    _need(col[b[0]] == s and col[b[-1]] == t, "endpoint pin violated", trace)


def _check_pins(inst, col: dict, pin, trace) -> None:
    if not CHECK_INVARIANTS or col is None:
        return
    b = inst.region.boundary
    _need(check_proper(inst.region.edges, col), "improper colouring emitted", trace)
    _need(all(col[v] in inst.lists[v] for v in b), "list violated", trace)
    if pin is not None:
        _need((col[b[0]], col[b[-1]]) == tuple(pin), "closing-edge pin violated", trace)
    e2 = (b[inst.p - 1], b[inst.p])
    _need((col[e2[0]], col[e2[1]]) in inst.label2, "marked-edge pin outside label", trace)
    if isinstance(inst, _T132Inst):
        e3 = (b[inst.q - 1], b[inst.q])
        _need((col[e3[0]], col[e3[1]]) in inst.label3, "marked-edge pin outside label", trace)


# ---------------------------------------------------------------------------
# all-T1 solver


def _solve_t1(inst: _T1Inst, s: int, t: int, trace=()) -> dict:
    region, lists, k = inst.region, inst.lists, inst.k
    b = region.boundary
    l = len(b)
    trace = trace + (("t1", l, region.num_edges),)
    _check_measure(trace)

    chord = _regions.first_chord(region)
    if chord is not None:
        pi, pj = sorted(chord)
        inner, outer = _regions.split_at_chord(region, pi, pj)
        col1 = _solve_t1(_T1Inst(outer, lists, k), s, t, trace)
        vi, vj = b[pi], b[pj]
        col2 = _solve_t1(_T1Inst(inner, lists, k), col1[vi], col1[vj], trace)
        col = _merge(col1, col2, trace)
        _check_t1(inst, s, t, col, trace)
        return col

    sep = _regions.first_separating_triangle(region)
    if sep is not None:
        tri, interior = sep
        col1 = _solve_t1(
            _T1Inst(_regions.delete_triangle_interior(region, tri, interior), lists, k),
            s,
            t,
            trace,
        )
        sub = _regions.triangle_subregion(region, tri, interior)
        col2 = _extend_triangle(sub, {v: col1[v] for v in tri}, k, trace)
        col = _merge(col1, col2, trace)
        _check_t1(inst, s, t, col, trace)
        return col

    if region.is_single_triangle():
        free = sorted(lists[b[1]] - {s, t})
        _need(bool(free), "triangle base has no free middle colour", trace)
        col = {b[0]: s, b[1]: free[0], b[2]: t}
        _check_t1(inst, s, t, col, trace)
        return col

    for e in range(l - 1):
        if not lists[b[e]] & lists[b[e + 1]]:
            region2, x = _regions.delete_boundary_edge(region, e)
            lists2 = dict(lists)
            lists2[x] = SIZE3[1]
            col = _solve_t1(_T1Inst(region2, lists2, k), s, t, trace)
            _check_t1(inst, s, t, col, trace)
            return col

    _need(
        all(lists[v] == SIZE3[1] for v in b),
        "expected all size-3 T1 lists after edge-deletion scan",
        trace,
    )
    region2, fan = _regions.delete_boundary_vertex(region, 1)
    lists2 = dict(lists)
    del lists2[b[1]]
    for i in range(1, len(fan) - 1):  # fan index i+1 in 1-based terms
        lists2[fan[i]] = frozenset({1}) if (i + 1) % 2 == 1 else frozenset({5})
    col = _solve_t1(_T1Inst(region2, lists2, k), s, t, trace)
    col = dict(col)
    col[b[1]] = min(SIZE3[1] - {col[b[0]], col[b[2]]})
    _check_t1(inst, s, t, col, trace)
    return col


def _extend_triangle(region3: Region, anchor: dict, k: int, trace) -> dict:
    """Extend a given proper colouring of a triangle boundary over its interior."""
    b = region3.boundary
    if len(region3.faces) == 1:
        return dict(anchor)
    sources = [anchor[b[0]], anchor[b[1]], anchor[b[2]]]
    perm = {sources[0]: 2, sources[1]: 3, sources[2]: 4}
    rest_src = [c for c in range(1, k + 1) if c not in perm]
    rest_dst = [c for c in range(1, k + 1) if c not in (2, 3, 4)]
    perm.update(dict(zip(rest_src, rest_dst)))
    inv = {v: u for u, v in perm.items()}
    lists = {v: SIZE3[1] for v in b}
    col = _solve_t1(_T1Inst(region3, lists, k), 2, 4, trace)
    _need(col[b[1]] == 3, "triangle interior extension lost the middle pin", trace)
    return {v: inv[c] for v, c in col.items()}


# ---------------------------------------------------------------------------
# T1|T2 solver


def _mirror_t12(inst: _T12Inst) -> _T12Inst:
    region = Region(tuple(reversed(inst.region.boundary)), inst.region.edges, inst.region.faces)
    lists = {v: _swap_set(SWAP_12, s) for v, s in inst.lists.items()}
    return _T12Inst(region, lists, inst.k, len(inst.region.boundary) - inst.p,
                    reverse_label(inst.label2))


def _solve_t12_mirrored(inst: _T12Inst, pin, trace):
    mlabel, mcol = _solve_t12(_mirror_t12(inst), None if pin is None else reverse_pair(pin), trace)
    return reverse_label(mlabel), None if mcol is None else _swap_col(SWAP_12, mcol)


def _solve_t12(inst: _T12Inst, pin, trace=()):
    """Returns (closing-edge label, colouring or None when pin is None)."""
    region, lists, k, p, label2 = inst.region, inst.lists, inst.k, inst.p, inst.label2
    b = region.boundary
    l = len(b)
    trace = trace + (("t12", l, p, region.num_edges),)
    _check_measure(trace)

    def zone(pos: int) -> int:
        return T1 if pos < p else T2

    chord = _regions.first_chord(region)
    if chord is not None:
        pi, pj = sorted(chord)
        vi, vj = b[pi], b[pj]
        inner, outer = _regions.split_at_chord(region, pi, pj)
        zi, zj = zone(pi), zone(pj)
        if zi == zj:
            shift = pj - pi - 1
            p1 = p - shift if zj == T1 else p
            label, col1 = _solve_t12(_T12Inst(outer, lists, k, p1, label2), pin, trace)
            if pin is None:
                return label, None
            swap = {} if zi == T1 else SWAP_12
            lists_in = {v: _swap_set(swap, lists[v]) for v in inner.boundary}
            col2 = _solve_t1(
                _T1Inst(inner, lists_in, k),
                apply_swap(swap, col1[vi]),
                apply_swap(swap, col1[vj]),
                trace,
            )
            col = _merge(col1, _swap_col(swap, col2), trace)
        else:
            inner_inst = _T12Inst(inner, lists, k, p - pi, label2)
            lmid, _ = _solve_t12(inner_inst, None, trace)
            outer_inst = _T12Inst(outer, lists, k, pi + 1, lmid)
            label, col1 = _solve_t12(outer_inst, pin, trace)
            if pin is None:
                return label, None
            pair_mid = (col1[vi], col1[vj])
            _need(pair_mid in lmid, "chord pin escaped the derived label", trace)
            _, col2 = _solve_t12(inner_inst, pair_mid, trace)
            col = _merge(col1, col2, trace)
        _check_pins(inst, col, pin, trace)
        return label, col

    sep = _regions.first_separating_triangle(region)
    if sep is not None:
        tri, interior = sep
        trimmed = _regions.delete_triangle_interior(region, tri, interior)
        label, col1 = _solve_t12(_T12Inst(trimmed, lists, k, p, label2), pin, trace)
        if pin is None:
            return label, None
        sub = _regions.triangle_subregion(region, tri, interior)
        col2 = _extend_triangle(sub, {v: col1[v] for v in tri}, k, trace)
        col = _merge(col1, col2, trace)
        _check_pins(inst, col, pin, trace)
        return label, col

    if l == 3:
        if p == 1:
            return _solve_t12_mirrored(inst, pin, trace)
        label = _triangle_label_t12(inst, trace)
        if pin is None:
            return label, None
        _need(pin in label, "requested pin outside derived label", trace)
        s, t = pin
        middle = [r for r in range(1, k + 1) if (r, t) in label2 and r not in (s, t)]
        _need(bool(middle), "no middle colour realizes the pin", trace)
        col = _extend_triangle(region, {b[0]: s, b[1]: middle[0], b[2]: t}, k, trace)
        _check_pins(inst, col, pin, trace)
        return label, col

    for e in range(l - 1):
        if e == p - 1 or lists[b[e]] & lists[b[e + 1]]:
            continue
        region2, x = _regions.delete_boundary_edge(region, e)
        lists2 = dict(lists)
        lists2[x] = SIZE3[1] if e <= p - 2 else SIZE3[2]
        p2 = p + 1 if e <= p - 2 else p
        label, col = _solve_t12(_T12Inst(region2, lists2, k, p2, label2), pin, trace)
        _check_pins(inst, col, pin, trace)
        return label, col

    if len(lists[b[0]]) == 1:
        _need(p == 1, "singleton first vertex forces p = 1", trace)
        (a,) = lists[b[0]]
        _need(all(pair[0] == a for pair in label2), "label must start at the singleton", trace)
        region2, x = _regions.delete_boundary_edge(region, 0)
        lists2 = dict(lists)
        lists2[x] = SIZE3[1]
        seconds = {pair[1] for pair in label2}
        if seconds <= {3, 4}:
            (xx,) = seconds
            label2b = frozenset({(2, xx), (7 - xx, xx)})
        else:
            (bb,) = seconds
            label2b = frozenset({(3, bb)})
        label, col = _solve_t12(_T12Inst(region2, lists2, k, 2, label2b), pin, trace)
        _check_pins(inst, col, pin, trace)
        return label, col
    if len(lists[b[-1]]) == 1:
        return _solve_t12_mirrored(inst, pin, trace)

    _need(all(len(lists[v]) == 3 for v in b), "unexpected interior singleton", trace)

    if p > 2:
        region2, fan = _regions.delete_boundary_vertex(region, 1)
        lists2 = dict(lists)
        del lists2[b[1]]
        for i in range(1, len(fan) - 1):
            lists2[fan[i]] = frozenset({1}) if (i + 1) % 2 == 1 else frozenset({5})
        label, col = _solve_t12(
            _T12Inst(region2, lists2, k, p + len(fan) - 3, label2), pin, trace
        )
        if col is not None:
            col = dict(col)
            col[b[1]] = min(SIZE3[1] - {col[b[0]], col[b[2]]})
        _check_pins(inst, col, pin, trace)
        return label, col
    if p < l - 2:
        return _solve_t12_mirrored(inst, pin, trace)

    _need(l == 4 and p == 2, "exhausted type-T1/T2 case analysis", trace)
    xc1 = [x for x in (3, 4) if (x, 1) in label2]
    if not xc1:
        _need((2, 3) in label2 or (2, 4) in label2, "unrecognized label shape", trace)
        return _solve_t12_mirrored(inst, pin, trace)
    x = xc1[0]
    y = 7 - x
    region2, fan = _regions.delete_boundary_vertex(region, 1)
    lists2 = dict(lists)
    del lists2[b[1]]
    lists2[b[2]] = frozenset({1})
    for i in range(len(fan) - 2, 0, -1):
        lists2[fan[i]] = frozenset({1, 5}) - lists2[fan[i + 1]]
    r = len(fan)
    label, col = _solve_t12(
        _T12Inst(region2, lists2, k, r, frozenset({(1, x)})), pin, trace
    )
    _need(label == frozenset({(2, x), (y, x)}), "unexpected label from the c1-pinned fan", trace)
    if col is not None:
        col = dict(col)
        col[b[1]] = x
    _check_pins(inst, col, pin, trace)
    return label, col


def _triangle_label_t12(inst: _T12Inst, trace) -> frozenset:
    """The length-3 table: p = 2, marked edge (b_1, b_2), closing edge (b_0, b_2)."""
    lists, label2 = inst.lists, inst.label2
    b = inst.region.boundary
    l1, l2, l3 = lists[b[0]], lists[b[1]], lists[b[2]]
    if len(l2) == 1 and len(l3) == 1:
        (a3,) = l3
        if len(l1) == 1:
            (a1,) = l1
            return frozenset({(a1, a3)})
        return frozenset({(3, a3)})
    if len(l2) == 3 and len(l3) == 1:
        ((x, bb),) = label2
        if len(l1) == 1:
            (a1,) = l1
            return frozenset({(a1, bb)})
        return frozenset({(7 - x, bb)})
    if len(l2) == 1 and len(l3) == 3:
        ((a, x),) = label2
        if len(l1) == 1:
            (a1,) = l1
            return frozenset({(a1, x)})
        return frozenset({(2, x), (7 - x, x)})
    # both interior lists of size 3
    if len(l1) == 1:
        (a1,) = l1
        two_x = [pr for pr in label2 if pr[0] == 2]
        if two_x:
            return frozenset({(a1, two_x[0][1])})
        xy = [pr for pr in label2 if pr[0] in (3, 4) and pr[1] in (3, 4)]
        _need(bool(xy), "unrecognized label shape on the marked edge", trace)
        return frozenset({(a1, xy[0][1])})
    for x in (3, 4):
        y = 7 - x
        if label2 == frozenset({(2, x), (y, x)}):
            return label2
        if label2 == frozenset({(x, 1), (x, y)}):
            return frozenset({(y, 1), (2, y)})
        if label2 == frozenset({(2, x), (x, 1)}):
            return frozenset({(y, x), (y, 1)})
    raise _die("unrecognized label shape in the length-3 table", trace)


# ---------------------------------------------------------------------------
# T1|T3|T2 solver

L13_IV = frozenset({(3, 2), (3, 4), (2, 4), (4, 2)})
L13_V = frozenset({(2, 1), (4, 1), (2, 4), (4, 2)})
L13_VI = frozenset({(3, 2), (3, 4), (2, 1), (4, 1)})
L32_IV = frozenset({(2, 1), (2, 4), (1, 4), (4, 1)})
L32_V = frozenset({(1, 3), (4, 3), (1, 4), (4, 1)})
L32_VI = frozenset({(2, 1), (2, 4), (1, 3), (4, 3)})


def _mirror_t132(inst: _T132Inst) -> _T132Inst:
    l = len(inst.region.boundary)
    region = Region(tuple(reversed(inst.region.boundary)), inst.region.edges, inst.region.faces)
    lists = {v: _swap_set(SWAP_12, s) for v, s in inst.lists.items()}
    return _T132Inst(region, lists, inst.k, l - inst.q, l - inst.p,
                     reverse_label(inst.label3), reverse_label(inst.label2))


def _solve_t132_mirrored(inst: _T132Inst, pin, trace):
    mlabel, mcol = _solve_t132(
        _mirror_t132(inst), None if pin is None else reverse_pair(pin), trace
    )
    return reverse_label(mlabel), None if mcol is None else _swap_col(SWAP_12, mcol)


def _solve_t132(inst: _T132Inst, pin, trace=()):
    """Returns (closing-edge label, colouring or None when pin is None)."""
    region, lists, k = inst.region, inst.lists, inst.k
    p, q, label2, label3 = inst.p, inst.q, inst.label2, inst.label3
    b = region.boundary
    l = len(b)
    trace = trace + (("t132", l, p, q, region.num_edges),)
    _check_measure(trace)

    def zone(pos: int) -> int:
        return T1 if pos < p else (T3 if pos < q else T2)

    chord = _regions.first_chord(region)
    if chord is not None:
        pi, pj = sorted(chord)
        vi, vj = b[pi], b[pj]
        zi, zj = zone(pi), zone(pj)
        inner, outer = _regions.split_at_chord(region, pi, pj)
        shift = pj - pi - 1
        if zi == zj:
            if zi == T1:
                p1, q1 = p - shift, q - shift
            elif zi == T3:
                p1, q1 = p, q - shift
            else:
                p1, q1 = p, q
            label, col1 = _solve_t132(
                _T132Inst(outer, lists, k, p1, q1, label2, label3), pin, trace
            )
            if pin is None:
                return label, None
            swap = {T1: {}, T3: SWAP_13, T2: SWAP_12}[zi]
            lists_in = {v: _swap_set(swap, lists[v]) for v in inner.boundary}
            col2 = _solve_t1(
                _T1Inst(inner, lists_in, k),
                apply_swap(swap, col1[vi]),
                apply_swap(swap, col1[vj]),
                trace,
            )
            col = _merge(col1, _swap_col(swap, col2), trace)
        elif zi == T1 and zj == T2:
            inner_inst = _T132Inst(inner, lists, k, p - pi, q - pi, label2, label3)
            lmid, _ = _solve_t132(inner_inst, None, trace)
            outer_inst = _T12Inst(outer, lists, k, pi + 1, lmid)
            label, col1 = _solve_t12(outer_inst, pin, trace)
            if pin is None:
                return label, None
            pair_mid = (col1[vi], col1[vj])
            _need(pair_mid in lmid, "chord pin escaped the derived label", trace)
            _, col2 = _solve_t132(inner_inst, pair_mid, trace)
            col = _merge(col1, col2, trace)
        elif zi == T1 and zj == T3:
            lists_in = {v: _swap_set(SWAP_23, lists[v]) for v in inner.boundary}
            label2_12 = labels.from_13(label2, k)
            inner2 = _T12Inst(inner, lists_in, k, p - pi, label2_12)
            lmid12, _ = _solve_t12(inner2, None, trace)
            label2_new = labels.to_13(lmid12)
            outer_inst = _T132Inst(
                outer, lists, k, pi + 1, q - pj + pi + 1, label2_new, label3
            )
            label, col1 = _solve_t132(outer_inst, pin, trace)
            if pin is None:
                return label, None
            pair_mid = (col1[vi], col1[vj])
            _need(pair_mid in label2_new, "chord pin escaped the derived label", trace)
            w = swap_pair(SWAP_23, pair_mid)
            if w in lmid12:
                _, col2s = _solve_t12(inner2, w, trace)
            else:
                w2 = swap_pair(SWAP_34, w)
                _need(w2 in lmid12, "pair outside the c3/c4 closure", trace)
                _, col2s = _solve_t12(inner2, w2, trace)
                col2s = _swap_col(SWAP_34, col2s)
            col2 = _swap_col(SWAP_23, col2s)
            col = _merge(col1, col2, trace)
        else:  # zi == T3, zj == T2: reverse the cycle and swap c1, c2
            return _solve_t132_mirrored(inst, pin, trace)
        _check_pins(inst, col, pin, trace)
        return label, col

    sep = _regions.first_separating_triangle(region)
    if sep is not None:
        tri, interior = sep
        trimmed = _regions.delete_triangle_interior(region, tri, interior)
        label, col1 = _solve_t132(
            _T132Inst(trimmed, lists, k, p, q, label2, label3), pin, trace
        )
        if pin is None:
            return label, None
        sub = _regions.triangle_subregion(region, tri, interior)
        col2 = _extend_triangle(sub, {v: col1[v] for v in tri}, k, trace)
        col = _merge(col1, col2, trace)
        _check_pins(inst, col, pin, trace)
        return label, col

    if l == 3:
        label, recipes = _triangle_table_t132(inst, trace)
        if recipes is None:  # resolved through the mirrored instance
            return (label, None) if pin is None else _solve_t132_mirrored(inst, pin, trace)
        if pin is None:
            return label, None
        if pin not in recipes:  # pair realized through the mirrored instance
            return _solve_t132_mirrored_pin(inst, pin, label, trace)
        f1, f2, f3 = recipes[pin]
        col = _extend_triangle(region, {b[0]: f1, b[1]: f2, b[2]: f3}, k, trace)
        _check_pins(inst, col, pin, trace)
        return label, col

    for e in range(l - 1):
        if e in (p - 1, q - 1) or lists[b[e]] & lists[b[e + 1]]:
            continue
        region2, x = _regions.delete_boundary_edge(region, e)
        lists2 = dict(lists)
        if e <= p - 2:
            lists2[x] = SIZE3[1]
            p2, q2 = p + 1, q + 1
        elif e <= q - 2:
            lists2[x] = SIZE3[3]
            p2, q2 = p, q + 1
        else:
            lists2[x] = SIZE3[2]
            p2, q2 = p, q
        label, col = _solve_t132(
            _T132Inst(region2, lists2, k, p2, q2, label2, label3), pin, trace
        )
        _check_pins(inst, col, pin, trace)
        return label, col

    if len(lists[b[0]]) == 1:
        _need(p == 1, "singleton first vertex forces p = 1", trace)
        (a,) = lists[b[0]]
        _need(all(pair[0] == a for pair in label2), "label must start at the singleton", trace)
        region2, x = _regions.delete_boundary_edge(region, 0)
        lists2 = dict(lists)
        lists2[x] = SIZE3[1]
        seconds = {pair[1] for pair in label2}
        if seconds == {2, 4}:
            label2b = L13_IV
        else:
            (cc,) = seconds
            label2b = frozenset({(2, cc), (4, cc)})
        label, col = _solve_t132(
            _T132Inst(region2, lists2, k, 2, q + 1, label2b, label3), pin, trace
        )
        _check_pins(inst, col, pin, trace)
        return label, col
    if len(lists[b[-1]]) == 1:
        return _solve_t132_mirrored(inst, pin, trace)

    singles = [pos for pos in range(1, l - 1) if len(lists[b[pos]]) == 1]
    if singles:
        pos = singles[0]
        _need(pos == p and q == p + 1, "interior singleton must be the lone T3 vertex", trace)
        (m,) = lists[b[pos]]
        _need(m == 3 or m >= 5, "interior singleton must lie in S3", trace)
        _need(label2 == frozenset({(2, m), (4, m)}), "unexpected label at the T3 singleton", trace)
        region2, x = _regions.delete_boundary_edge(region, p - 1)
        lists2 = dict(lists)
        lists2[x] = SIZE3[3]
        label, col = _solve_t132(
            _T132Inst(region2, lists2, k, p, q + 1, L13_V, label3), pin, trace
        )
        _check_pins(inst, col, pin, trace)
        return label, col

    _need(all(len(lists[v]) == 3 for v in b), "unexpected list sizes", trace)

    if p > 1 and q > p + 1:
        if {(2, 1), (4, 1)} <= label2:
            return _finish_t132_delete_vp(inst, pin, trace)
        _need({(3, 2), (3, 4)} <= label2, "unrecognized label shape", trace)
        region2, fan = _regions.delete_boundary_vertex(region, p)
        lists2 = dict(lists)
        del lists2[b[p]]
        lists2[b[p - 1]] = frozenset({3})
        for i in range(1, len(fan) - 1):
            lists2[fan[i]] = frozenset({3, 5}) - lists2[fan[i - 1]]
        r = len(fan)
        label, col = _solve_t132(
            _T132Inst(region2, lists2, k, p - 1, q + r - 3,
                      frozenset({(2, 3), (4, 3)}), label3),
            pin, trace,
        )
        if col is not None:
            col = dict(col)
            col[b[p]] = min({2, 4} - {col[b[p + 1]]})
        _check_pins(inst, col, pin, trace)
        return label, col

    if p > 1 and q == p + 1:
        if (2, 1) in label2:
            _need((4, 1) in label2, "label contains (c2,c1) but not (c4,c1)", trace)
            region2, fan = _regions.delete_boundary_vertex(region, p - 1)
            lists2 = dict(lists)
            del lists2[b[p - 1]]
            lists2[b[p]] = frozenset({1})
            for i in range(len(fan) - 2, 0, -1):
                lists2[fan[i]] = frozenset({1, 5}) - lists2[fan[i + 1]]
            r = len(fan)
            if (1, 3) in label3:
                label3b = frozenset({(1, 3)})
            else:
                _need(label3 == L32_IV, "unrecognized label shape", trace)
                label3b = frozenset({(1, 4)})
            label, col = _solve_t12(
                _T12Inst(region2, lists2, k, p + r - 2, label3b), pin, trace
            )
            if col is not None:
                col = dict(col)
                col[b[p - 1]] = min({2, 4} - {col[b[p - 2]]})
            _check_pins(inst, col, pin, trace)
            return label, col
        if label3 == L32_V:
            _need(label2 == L13_IV, "unrecognized label shape", trace)
            lists2 = dict(lists)
            lists2[b[p]] = frozenset({3})
            label2b = swap_label(SWAP_34, label2) & frozenset({(2, 3), (4, 3)})
            label3b = swap_label(SWAP_34, label3) & frozenset({(3, 1), (3, 4)})
            _need(label2b == frozenset({(2, 3), (4, 3)}), "c3/c4 reduction failed", trace)
            _need(label3b == frozenset({(3, 1), (3, 4)}), "c3/c4 reduction failed", trace)
            mpin = None if pin is None else swap_pair(SWAP_34, pin)
            mlabel, mcol = _solve_t132(
                _T132Inst(region, lists2, k, p, q, label2b, label3b), mpin, trace
            )
            label = swap_label(SWAP_34, mlabel)
            col = None if mcol is None else _swap_col(SWAP_34, mcol)
            _check_pins(inst, col, pin, trace)
            return label, col
        if q < l - 1:
            return _solve_t132_mirrored(inst, pin, trace)
        if p > 2:
            region2, fan = _regions.delete_boundary_vertex(region, 1)
            lists2 = dict(lists)
            del lists2[b[1]]
            for i in range(1, len(fan) - 1):
                lists2[fan[i]] = frozenset({1}) if (i + 1) % 2 == 1 else frozenset({5})
            r = len(fan)
            label, col = _solve_t132(
                _T132Inst(region2, lists2, k, p + r - 3, q + r - 3, label2, label3),
                pin, trace,
            )
            if col is not None:
                col = dict(col)
                col[b[1]] = min(SIZE3[1] - {col[b[0]], col[b[2]]})
            _check_pins(inst, col, pin, trace)
            return label, col
        return _solve_t132_mirrored(inst, pin, trace)  # l = 4, p = 2: mirrors to the gap case

    if p == 1 and q == l - 1:
        if l >= 5:
            region2, fan = _regions.delete_boundary_vertex(region, 2)
            lists2 = dict(lists)
            del lists2[b[2]]
            for i in range(1, len(fan) - 1):
                lists2[fan[i]] = frozenset({3}) if (i + 1) % 2 == 1 else frozenset({5})
            r = len(fan)
            label, col = _solve_t132(
                _T132Inst(region2, lists2, k, 1, q + r - 3, label2, label3), pin, trace
            )
            if col is not None:
                col = dict(col)
                col[b[2]] = min(SIZE3[3] - {col[b[1]], col[b[3]]})
            _check_pins(inst, col, pin, trace)
            return label, col
        return _solve_t132_l4_corner(inst, pin, trace)

    if p == 1 and q == 2:
        if l == 4 and label3 == L32_V and label2 in (L13_V, L13_VI):
            return _solve_t132_l4_gap(inst, pin, trace)
        return _solve_t132_mirrored(inst, pin, trace)

    _need(p == 1 and 2 < q < l - 1, "exhausted type-T1/T3/T2 case analysis", trace)
    return _solve_t132_mirrored(inst, pin, trace)


def _finish_t132_delete_vp(inst: _T132Inst, pin, trace):
    """Delete v_p, pin v_{p+1} to c1, and mark (v_{p+1}, v_{p+2}) instead."""
    region, lists, k, p, q = inst.region, inst.lists, inst.k, inst.p, inst.q
    b = region.boundary
    region2, fan = _regions.delete_boundary_vertex(region, p - 1)
    lists2 = dict(lists)
    del lists2[b[p - 1]]
    lists2[b[p]] = frozenset({1})
    for i in range(len(fan) - 2, 0, -1):
        lists2[fan[i]] = frozenset({1, 5}) - lists2[fan[i + 1]]
    r = len(fan)
    label, col = _solve_t132(
        _T132Inst(region2, lists2, k, p + r - 2, q + r - 3,
                  frozenset({(1, 2), (1, 4)}), inst.label3),
        pin, trace,
    )
    if col is not None:
        col = dict(col)
        col[b[p - 1]] = min({2, 4} - {col[b[p - 2]]})
    _check_pins(inst, col, pin, trace)
    return label, col


def _triangle_table_t132(inst: _T132Inst, trace):
    """Length-3 table (p=1, q=2): returns (label, {pair: boundary triple}).

    ``recipes`` may be None (whole case resolved by mirroring) or omit a
    pair (that pair realized by mirroring; see the caller).
    """
    lists, label2, label3 = inst.lists, inst.label2, inst.label3
    b = inst.region.boundary
    l1, l2v, l3v = lists[b[0]], lists[b[1]], lists[b[2]]
    if len(l1) == 1:
        (a,) = l1
        seconds2 = {pr[1] for pr in label2}
        if seconds2 != {2, 4}:  # label {(a, c)} with the middle vertex pinned
            ((_, c),) = label2
            if all(pr[0] == c for pr in label3) and {pr[1] for pr in label3} == {1, 4}:
                return frozenset({(a, 4)}), {(a, 4): (a, c, 4)}
            ((_, bb),) = label3
            return frozenset({(a, bb)}), {(a, bb): (a, c, bb)}
        # label {(a, c2), (a, c4)}
        if label3 == L32_IV:
            return frozenset({(a, 4)}), {(a, 4): (a, 2, 4)}
        if {(1, 3), (4, 3)} <= label3:
            return frozenset({(a, 3)}), {(a, 3): (a, 4, 3)}
        firsts3 = {pr[0] for pr in label3}
        _need(firsts3 == {1, 4}, "unrecognized label shape", trace)
        (bb,) = {pr[1] for pr in label3}
        return frozenset({(a, bb)}), {(a, bb): (a, 4, bb)}
    if len(l3v) == 1:
        mirrored = _mirror_t132(inst)
        mlabel, _ = _triangle_table_t132(mirrored, trace)
        return reverse_label(mlabel), None
    if len(l2v) == 1:
        (cc,) = l2v
        _need(label2 == frozenset({(2, cc), (4, cc)}), "unrecognized label shape", trace)
        _need(label3 == frozenset({(cc, 1), (cc, 4)}), "unrecognized label shape", trace)
        return (
            frozenset({(2, 4), (4, 1)}),
            {(2, 4): (2, cc, 4), (4, 1): (4, cc, 1)},
        )
    # all three lists of size 3
    if {(2, 1), (4, 1)} <= label2 and {(1, 3), (4, 3)} <= label3:
        return (
            frozenset({(2, 3), (4, 3)}),
            {(2, 3): (2, 1, 3), (4, 3): (4, 1, 3)},
        )
    if {(2, 1), (4, 1)} <= reverse_label(label3) and {(1, 3), (4, 3)} <= reverse_label(label2):
        mlabel, _ = _triangle_table_t132(_mirror_t132(inst), trace)
        return reverse_label(mlabel), None
    if label2 == L13_V and label3 == L32_IV:
        return (
            frozenset({(2, 4), (4, 1)}),
            {(2, 4): (2, 1, 4), (4, 1): (4, 2, 1)},
        )
    if label2 == L13_IV and label3 == L32_V:
        return (
            frozenset({(2, 3), (3, 1)}),
            {(3, 1): (3, 4, 1), (2, 3): (2, 4, 3)},
        )
    raise _die("exhausted the length-3 table", trace)


def _solve_t132_mirrored_pin(inst: _T132Inst, pin, label, trace):
    """Realize one pair through the mirrored instance (used by the table)."""
    mlabel, mcol = _solve_t132(_mirror_t132(inst), reverse_pair(pin), trace)
    _need(reverse_label(mlabel) == label, "mirrored label disagrees", trace)
    col = _swap_col(SWAP_12, mcol)
    _check_pins(inst, col, pin, trace)
    return label, col


def _lemma_one_pinned(region: Region, lists: dict, k: int, first: int, last: int,
                      s: int, t: int, trace) -> dict:
    """Run the all-T1 solver with the boundary re-rooted so that the cycle
    edge (first, last) carries the endpoint pins s, t."""
    b = region.boundary
    i, j = b.index(first), b.index(last)
    l = len(b)
    if (i + 1) % l == j:  # walk backwards from first
        order = tuple(b[(i - m) % l] for m in range(l))
    else:
        _need((j + 1) % l == i, "pinned pair must be a boundary edge", trace)
        order = tuple(b[(i + m) % l] for m in range(l))
    rooted = Region(order, region.edges, region.faces)
    return _solve_t1(_T1Inst(rooted, lists, k), s, t, trace)


def _solve_t132_l4_corner(inst: _T132Inst, pin, trace):
    """l = 4, p = 1, q = 3: both marked edges touch the unknown one."""
    region, lists, k = inst.region, inst.lists, inst.k
    label2, label3 = inst.label2, inst.label3
    b = region.boundary

    if {(2, 1), (4, 1)} <= label2 and {(1, 3), (4, 3)} <= label3:
        label = frozenset({(2, 3), (4, 3)})
        if pin is None:
            return label, None
        _need(pin in label, "requested pin outside derived label", trace)
        col = _l4_delete_v1(inst, v2_colour=1, pins=(b[2], 4, b[3], 3), trace=trace)
        col[b[0]] = pin[0]
        _check_pins(inst, col, pin, trace)
        return label, col
    if {(2, 1), (4, 1)} <= reverse_label(label3) and {(1, 3), (4, 3)} <= reverse_label(label2):
        return _solve_t132_mirrored(inst, pin, trace)
    if label2 == L13_V and label3 == L32_IV:
        label = frozenset({(2, 4), (4, 1)})
        if pin is None:
            return label, None
        if pin == (2, 4):
            col = _l4_delete_v1(inst, v2_colour=1, pins=(b[2], 2, b[3], 4), trace=trace)
            col[b[0]] = 2
            _check_pins(inst, col, pin, trace)
            return label, col
        _need(pin == (4, 1), "requested pin outside derived label", trace)
        return _solve_t132_mirrored_pin(inst, pin, label, trace)
    if label2 == L13_IV and label3 == L32_V:
        label = frozenset({(3, 1), (2, 3)})
        if pin is None:
            return label, None
        if pin == (3, 1):
            col = _l4_delete_v1_forward(inst, trace)
            col[b[0]] = 3
            _check_pins(inst, col, pin, trace)
            return label, col
        _need(pin == (2, 3), "requested pin outside derived label", trace)
        return _solve_t132_mirrored_pin(inst, pin, label, trace)
    raise _die("exhausted the l=4 corner table", trace)


def _solve_t132_l4_gap(inst: _T132Inst, pin, trace):
    """l = 4, p = 1, q = 2, label2 in {(v), (vi)}, label3 = (v).

    The published case analysis mirrors this instance back onto itself;
    the v_1 deletion used by the p=1, q=l-1 corner settles it directly.
    """
    region, lists, k = inst.region, inst.lists, inst.k
    b = region.boundary
    label = frozenset({(2, 3), (4, 3)})
    if pin is None:
        return label, None
    _need(pin in label, "requested pin outside derived label", trace)
    col = _l4_delete_v1(inst, v2_colour=1, pins=(b[2], 4, b[3], 3), trace=trace)
    col[b[0]] = pin[0]
    _check_pins(inst, col, pin, trace)
    return label, col


def _l4_delete_v1(inst: _T132Inst, v2_colour: int, pins, trace) -> dict:
    """Delete v_1, force v_2 to a singleton, pin two further boundary values,
    and colour the rest through the all-T1 solver.

    ``pins`` is (vertex_s, colour_s, vertex_t, colour_t) for the cycle edge
    (vertex_s, vertex_t) of the reduced boundary.
    """
    region, lists, k = inst.region, inst.lists, inst.k
    b = region.boundary
    region2, fan = _regions.delete_boundary_vertex(region, 0)
    lists2 = {b[1]: frozenset({v2_colour}), b[2]: SIZE3[1], b[3]: SIZE3[1]}
    for i in range(len(fan) - 2, 0, -1):
        lists2[fan[i]] = frozenset({1, 5}) - lists2[fan[i + 1]]
    vs, s, vt, t = pins
    col = _lemma_one_pinned(region2, lists2, k, vs, vt, s, t, trace)
    return dict(col)


def _l4_delete_v1_forward(inst: _T132Inst, trace) -> dict:
    """The corner's last case: v_4 pinned to c1, fan alternating forward."""
    region, lists, k = inst.region, inst.lists, inst.k
    b = region.boundary
    region2, fan = _regions.delete_boundary_vertex(region, 0)
    lists2 = {b[3]: frozenset({1}), b[1]: SIZE3[1], b[2]: SIZE3[1]}
    for i in range(1, len(fan) - 1):
        lists2[fan[i]] = frozenset({1, 5}) - lists2[fan[i - 1]]
    col = _lemma_one_pinned(region2, lists2, k, b[1], b[2], 2, 4, trace)
    return dict(col)


# ---------------------------------------------------------------------------
# public entry points


def _s_set(k: int, i: int) -> frozenset[int]:
    return frozenset({i, *range(5, k + 1)})


def _check_assignment(g: NearTriangulation, assignment: ListAssignment, k: int) -> None:
    l = g.boundary_len
    if assignment.length != l:
        raise ValidationError("zone-bounds", "assignment length differs from the boundary")
    if k < 5:
        raise ValidationError("palette", f"the extension engine needs k >= 5, got {k}")
    for i, lst in enumerate(assignment.lists):
        zone = assignment.zone(i)
        if not lst:
            raise ValidationError("list-type", f"empty list at vertex {i}")
        if len(lst) == 1:
            if not lst <= _s_set(k, zone):
                raise ValidationError(
                    "list-type", f"singleton at vertex {i} outside S{zone}"
                )
        elif lst != SIZE3[zone]:
            raise ValidationError(
                "list-type", f"list at vertex {i} is neither a singleton nor size-3 T{zone}"
            )
    for (u, v) in g.edges:
        if u < l and v < l:
            lu, lv = assignment.lists[u], assignment.lists[v]
            if len(lu) == 1 and lu == lv:
                raise ValidationError(
                    "inconsistent", f"edge ({u}, {v}) joins equal singleton lists"
                )


def _check_label(label: EdgeLabel, family: str, k: int, lu, lv) -> frozenset:
    if label.family != family:
        raise ValidationError("label-family", f"expected a {family} label")
    if not labels.in_family(label.pairs, family, k):
        raise ValidationError("label-family", f"pairs are not a valid {family} label")
    if not all(s in lu and t in lv for (s, t) in label.pairs):
        raise ValidationError("label-range", "label pairs leave the endpoint lists")
    return label.pairs


def lemma_one_extend(
    g: NearTriangulation, assignment: ListAssignment, s: int, t: int, k: int
) -> dict:
    """All-T1 extension with the closing-edge endpoints pinned to (s, t)."""
    _check_assignment(g, assignment, k)
    l = g.boundary_len
    if assignment.p != l:
        raise ValidationError("zone-bounds", "all vertices must be of type T1")
    if s not in assignment.lists[0] or t not in assignment.lists[l - 1] or s == t:
        raise ValidationError("endpoint-pins", "need distinct s in L(v_1), t in L(v_l)")
    lists = {i: assignment.lists[i] for i in range(l)}
    return _solve_t1(_T1Inst(g.to_region(), lists, k), s, t)


def lemma_two_feasible(
    g: NearTriangulation, assignment: ListAssignment, label2: EdgeLabel, k: int
) -> FeasibleResult:
    """Derive a feasible closing-edge label against one marked T1|T2 edge."""
    _check_assignment(g, assignment, k)
    l = g.boundary_len
    p = assignment.p
    if assignment.q != p or not 1 <= p < l:
        raise ValidationError("zone-bounds", "need T1 then T2 zones with 1 <= p < l")
    pairs = _check_label(label2, "L12", k, assignment.lists[p - 1], assignment.lists[p])
    lists = {i: assignment.lists[i] for i in range(l)}
    inst = _T12Inst(g.to_region(), lists, k, p, pairs)
    derived, _ = _solve_t12(inst, None)
    realizations = {pair: _solve_t12(inst, pair)[1] for pair in sorted(derived)}
    return FeasibleResult(EdgeLabel("L12", derived), realizations)


def lemma_three_feasible(
    g: NearTriangulation,
    assignment: ListAssignment,
    label2: EdgeLabel,
    label3: EdgeLabel,
    k: int,
) -> FeasibleResult:
    """Derive a feasible closing-edge label against marked T1|T3 and T3|T2 edges."""
    _check_assignment(g, assignment, k)
    l = g.boundary_len
    p, q = assignment.p, assignment.q
    if not 1 <= p < q < l:
        raise ValidationError("zone-bounds", "need T1, T3, T2 zones with 1 <= p < q < l")
    pairs2 = _check_label(label2, "L13", k, assignment.lists[p - 1], assignment.lists[p])
    pairs3 = _check_label(label3, "L32", k, assignment.lists[q - 1], assignment.lists[q])
    lists = {i: assignment.lists[i] for i in range(l)}
    inst = _T132Inst(g.to_region(), lists, k, p, q, pairs2, pairs3)
    derived, _ = _solve_t132(inst, None)
    realizations = {pair: _solve_t132(inst, pair)[1] for pair in sorted(derived)}
    return FeasibleResult(EdgeLabel("L12", derived), realizations)


# ---------------------------------------------------------------------------
# main driver


@dataclass(frozen=True)
class PermutationSetup:
    """Colour bijection and boundary rotation aligning a goodness witness
    with the engine's zone layout (T1 first, then T3, then T2)."""

    permutation: dict
    rotation: int
    p: int
    q: int

    def inverse(self) -> dict:
        return {v: u for u, v in self.permutation.items()}


def colour_permutation_setup(c: CycleColouring, witness: GoodWitness) -> PermutationSetup:
    from .core import HALF_OPEN_RIGHT, arc_set

    k, l = c.k, c.length
    every = list(range(1, k + 1))

    def complete(partial: dict) -> dict:
        rest_src = [x for x in every if x not in partial]
        rest_dst = [x for x in every if x not in set(partial.values())]
        partial.update(dict(zip(rest_src, rest_dst)))
        return partial

    if witness.condition == 1:
        used = sorted(c.used_colours())
        targets = sorted(_s_set(k, 1))
        if len(used) > len(targets):
            raise ValidationError("witness", "too many colours for condition 1")
        return PermutationSetup(complete(dict(zip(used, targets))), 0, l, l)

    discard = sorted(witness.discard)
    partial = {a: 4 + i + 1 for i, a in enumerate(discard)}
    if witness.condition == 2:
        p1, q1 = witness.indices
        front = arc_set(c, p1 - 1, q1 - 1, HALF_OPEN_RIGHT) - witness.discard
        back = arc_set(c, q1 - 1, p1 - 1, HALF_OPEN_RIGHT) - witness.discard
        if len(front) != 1 or len(back) != 1:
            raise ValidationError("witness", "indices do not satisfy goodness clause 2")
        partial[next(iter(front))] = 1
        partial[next(iter(back))] = 2
        return PermutationSetup(complete(partial), p1 - 1, q1 - p1, q1 - p1)
    if witness.condition == 3:
        p1, q1, r1 = witness.indices
        front = arc_set(c, p1 - 1, q1 - 1, HALF_OPEN_RIGHT) - witness.discard
        middle = arc_set(c, q1 - 1, r1 - 1, HALF_OPEN_RIGHT) - witness.discard
        back = arc_set(c, r1 - 1, p1 - 1, HALF_OPEN_RIGHT) - witness.discard
        if not len(front) == len(middle) == len(back) == 1:
            raise ValidationError("witness", "indices do not satisfy goodness clause 3")
        partial[next(iter(front))] = 1
        partial[next(iter(middle))] = 3
        partial[next(iter(back))] = 2
        return PermutationSetup(complete(partial), p1 - 1, q1 - p1, r1 - p1)
    raise ValidationError("witness", f"unknown condition {witness.condition}")


def theorem_main_extend(c: CycleColouring, g: NearTriangulation) -> dict:
    """Extend a good colouring of the boundary over a chordless near-triangulation.

    Returns a full proper colouring as vertex -> colour; raises a coded
    ValidationError when the colouring is not good or the graph has a chord.
    """
    if c.k < 5:
        raise ValidationError("palette", f"extension needs k >= 5, got {c.k}")
    if g.boundary_len != c.length:
        raise ValidationError("length-mismatch", "boundary and colouring lengths differ")
    if find_chord(g) is not None:
        raise ValidationError("not-chordless", "the graph has a chord")
    witness = is_good(c)
    if witness is None:
        raise ValidationError("not-good", "the colouring is not good")

    setup = colour_permutation_setup(c, witness)
    k, l = c.k, c.length
    perm, rot = setup.permutation, setup.rotation
    boundary = tuple((rot + i) % l for i in range(l))
    region = Region(boundary, g.edges, g.triangles)
    lists = {v: frozenset({perm[c.colours[v]]}) for v in range(l)}
    engine_cols = [perm[c.colours[boundary[i]]] for i in range(l)]

    if witness.condition == 1:
        col = _solve_t1(_T1Inst(region, lists, k), engine_cols[0], engine_cols[-1])
    else:
        want_pin = (engine_cols[0], engine_cols[-1])
        if witness.condition == 2:
            label2 = frozenset({(engine_cols[setup.p - 1], engine_cols[setup.p])})
            inst = _T12Inst(region, lists, k, setup.p, label2)
            derived, _ = _solve_t12(inst, None)
            if derived != frozenset({want_pin}):
                raise InternalInvariantError(f"unexpected label {sorted(derived)}")
            _, col = _solve_t12(inst, want_pin)
        else:
            label2 = frozenset({(engine_cols[setup.p - 1], engine_cols[setup.p])})
            label3 = frozenset({(engine_cols[setup.q - 1], engine_cols[setup.q])})
            inst = _T132Inst(region, lists, k, setup.p, setup.q, label2, label3)
            derived, _ = _solve_t132(inst, None)
            if derived != frozenset({want_pin}):
                raise InternalInvariantError(f"unexpected label {sorted(derived)}")
            _, col = _solve_t132(inst, want_pin)

    inv = setup.inverse()
    out = {v: inv[colour] for v, colour in col.items()}
    if CHECK_INVARIANTS:
        if not check_proper(g.edges, out):
            raise InternalInvariantError("emitted an improper colouring")
        if any(out[v] != c.colours[v] for v in range(l)):
            raise InternalInvariantError("boundary restriction violated")
    return out
