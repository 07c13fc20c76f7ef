"""Core data model: arc sets, triangulation validation, chords, splits."""

import itertools

import pytest
from hypothesis import given, strategies as st

from safecycle import (
    ArcInterval,
    CycleColouring,
    ValidationError,
    arc_colour_set,
    find_chord,
    find_separating_triangle,
    split_at_chord,
    validate_near_triangulation,
)
from safecycle.core import (
    CLOSED,
    HALF_OPEN_LEFT,
    HALF_OPEN_RIGHT,
    OPEN,
    arc_set,
    check_proper,
    edge_key,
    triangle_key,
)
from safecycle.enumeration import _canonical_key, enumerate_disk_triangulations


def walk_oracle(colours, start, stop, closure):
    """Independent index-walk oracle for arc colour sets."""
    l = len(colours)
    walk = [start]
    i = start
    while i != stop:
        i = (i + 1) % l
        walk.append(i)
    if closure in (HALF_OPEN_RIGHT, OPEN):
        walk = walk[:-1]
    if closure in (HALF_OPEN_LEFT, OPEN):
        walk = walk[1:]
    return frozenset(colours[i] for i in walk)


class TestCycleColouring:
    def test_rejects_improper(self):
        with pytest.raises(ValidationError):
            CycleColouring(4, (1, 1, 2))
        with pytest.raises(ValidationError):
            CycleColouring(4, (1, 2, 3, 1))  # last equals first

    def test_rejects_out_of_range(self):
        with pytest.raises(ValidationError):
            CycleColouring(3, (1, 2, 4))
        with pytest.raises(ValidationError):
            CycleColouring(4, (1, 2))


class TestArcColourSets:
    def test_full_cycle(self):
        c = CycleColouring(4, (1, 2, 1, 3))
        assert arc_set(c, 0, 3) == {1, 2, 3}

    def test_half_open_excludes_stop(self):
        # paper-style F[2,4) on (c1,c2,c1,c3) is {c2, c1}
        c = CycleColouring(4, (1, 2, 1, 3))
        assert arc_set(c, 1, 3, HALF_OPEN_RIGHT) == {1, 2}

    def test_wraparound(self):
        # F[q,p) for p=1, q=4 (1-based) on (c1,c2,c3,c1,c2,c4)
        c = CycleColouring(5, (1, 2, 3, 1, 2, 4))
        expected = walk_oracle(c.colours, 3, 0, HALF_OPEN_RIGHT)
        assert expected == {1, 2, 4}  # frozen from the oracle
        assert arc_set(c, 3, 0, HALF_OPEN_RIGHT) == expected

    def test_out_of_range(self):
        c = CycleColouring(4, (1, 2, 1, 3))
        with pytest.raises(ValidationError):
            arc_colour_set(c, ArcInterval(0, 4))

    @given(
        st.integers(3, 8).flatmap(
            lambda l: st.tuples(
                st.just(l),
                st.lists(st.integers(1, 5), min_size=l, max_size=l),
                st.integers(0, l - 1),
                st.integers(0, l - 1),
            )
        )
    )
    def test_matches_walk_oracle(self, data):
        l, raw, start, stop = data
        # repair into a proper colouring of C_l over 6 colours
        colours = []
        for i, x in enumerate(raw):
            x = ((x - 1) % 5) + 1
            if colours and x == colours[-1]:
                x = x % 5 + 1
            colours.append(x)
        if colours[-1] == colours[0]:
            colours[-1] = 6
        c = CycleColouring(6, tuple(colours))
        for closure in (CLOSED, HALF_OPEN_RIGHT, HALF_OPEN_LEFT, OPEN):
            got = arc_set(c, start, stop, closure)
            assert got == walk_oracle(c.colours, start, stop, closure)

    @given(st.integers(0, 5), st.integers(0, 5))
    def test_closure_identities(self, start, stop):
        c = CycleColouring(5, (1, 2, 3, 1, 2, 4))
        closed = arc_set(c, start, stop, CLOSED)
        half_r = arc_set(c, start, stop, HALF_OPEN_RIGHT)
        half_l = arc_set(c, start, stop, HALF_OPEN_LEFT)
        assert closed == half_r | {c.colours[stop]}
        assert closed == half_l | {c.colours[start]}


def triangle_graph():
    return validate_near_triangulation(3, 0, [(0, 1), (1, 2), (0, 2)], [(0, 1, 2)])


def wheel(l):
    edges = [(i, (i + 1) % l) for i in range(l)] + [(i, l) for i in range(l)]
    tris = [(i, (i + 1) % l, l) for i in range(l)]
    return validate_near_triangulation(l, 1, edges, tris)


class TestValidation:
    def test_triangle(self):
        g = triangle_graph()
        assert len(g.triangles) == 1

    def test_wheel_w5(self):
        g = wheel(5)
        assert len(g.triangles) == 5
        assert len(g.edges) == 10

    def test_square_without_diagonal(self):
        with pytest.raises(ValidationError) as err:
            validate_near_triangulation(4, 0, [(0, 1), (1, 2), (2, 3), (0, 3)], [])
        assert err.value.code == "face-count"

    def test_missing_boundary_edge(self):
        with pytest.raises(ValidationError) as err:
            validate_near_triangulation(3, 0, [(0, 1), (1, 2)], [(0, 1, 2)])
        assert err.value.code in ("boundary-edge-missing", "edge-count")

    def test_wrong_edge_count(self):
        with pytest.raises(ValidationError) as err:
            validate_near_triangulation(
                4, 0, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)], [(0, 1, 2), (0, 2, 3)]
            )
        assert err.value.code == "edge-count"

    def test_fan_condition(self):
        # two faces glued on a non-edge pattern: face uses a missing edge
        with pytest.raises(ValidationError):
            validate_near_triangulation(
                4, 0, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)], [(0, 1, 2), (0, 1, 3)]
            )

    def test_euler_counts_hold_for_enumerated(self):
        for l, n in itertools.product((3, 4, 5), (0, 1, 2)):
            for g in enumerate_disk_triangulations(l, n):
                assert len(g.triangles) == l + 2 * n - 2
                assert len(g.edges) == 2 * l + 3 * n - 3
                validate_near_triangulation(l, n, g.edges, g.triangles)


class TestChords:
    def test_square_with_diagonal(self):
        g, *_ = split_test_square()
        assert find_chord(g) == (0, 2)

    def test_wheel_has_none(self):
        assert find_chord(wheel(6)) is None

    def test_tie_break(self):
        # hexagon fan from vertex 0 (chords {0,2}, {0,3}, {0,4}):
        # the smallest (i, (j-i) mod l) pair wins
        edges = [(i, (i + 1) % 6) for i in range(6)] + [(0, 2), (0, 3), (0, 4)]
        tris = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5)]
        g = validate_near_triangulation(6, 0, edges, tris)
        all_chords = [
            (i, j)
            for i in range(6)
            for j in range(6)
            if g.has_edge(i, j) and (j - i) % 6 not in (0, 1, 5)
        ]
        by_tie_break = min(all_chords, key=lambda ij: (ij[0], (ij[1] - ij[0]) % 6))
        assert by_tie_break == (0, 2)  # frozen from the enumeration oracle
        assert find_chord(g) == (0, 2)


class TestSeparatingTriangle:
    def test_wheel_none(self):
        assert find_separating_triangle(wheel(4)) is None

    def test_restellated(self):
        # boundary triangle, hub 3, extra vertex 4 inside face (3, 0, 1)
        edges = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (3, 4)]
        tris = [(0, 1, 4), (0, 3, 4), (1, 3, 4), (1, 2, 3), (0, 2, 3)]
        g = validate_near_triangulation(3, 2, edges, tris)
        assert find_separating_triangle(g) == (0, 1, 3)

    def test_small_interiors_have_none(self):
        for l in (3, 4, 5):
            for n in (0, 1):
                for g in enumerate_disk_triangulations(l, n, chordless_only=True):
                    assert find_separating_triangle(g) is None


def split_test_square():
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]
    tris = [(0, 1, 2), (0, 2, 3)]
    g = validate_near_triangulation(4, 0, edges, tris)
    return (g,)


class TestSplitAtChord:
    def test_square(self):
        (g,) = split_test_square()
        outer, inner, m_out, m_in = split_at_chord(g, (0, 2))
        assert outer.boundary_len == 3 and inner.boundary_len == 3
        assert len(outer.triangles) == 1 and len(inner.triangles) == 1

    def test_rejects_non_chord(self):
        (g,) = split_test_square()
        with pytest.raises(ValidationError):
            split_at_chord(g, (0, 1))

    def test_internal_vertices_partition(self):
        # hexagon with chord (0, 3) and one internal vertex on each side
        for g in enumerate_disk_triangulations(6, 2):
            if g.has_edge(0, 3):
                outer, inner, m_out, m_in = split_at_chord(g, (0, 3))
                assert outer.internal_count + inner.internal_count == 2
                assert len(outer.triangles) == outer.boundary_len + 2 * outer.internal_count - 2
                assert len(inner.triangles) == inner.boundary_len + 2 * inner.internal_count - 2

    def test_reglue_is_identity(self):
        for g in enumerate_disk_triangulations(5, 1):
            chord = find_chord(g)
            if chord is None:
                continue
            outer, inner, m_out, m_in = split_at_chord(g, chord)
            inv_out = {v: u for u, v in m_out.items()}
            inv_in = {v: u for u, v in m_in.items()}
            edges = {edge_key(inv_out[u], inv_out[v]) for (u, v) in outer.edges}
            edges |= {edge_key(inv_in[u], inv_in[v]) for (u, v) in inner.edges}
            tris = {triangle_key(*(inv_out[x] for x in t)) for t in outer.triangles}
            tris |= {triangle_key(*(inv_in[x] for x in t)) for t in inner.triangles}
            l, n = g.boundary_len, g.internal_count
            assert _canonical_key(l, n, edges, tris) == _canonical_key(
                l, n, g.edges, g.triangles
            )


def test_check_proper():
    assert check_proper([(0, 1)], {0: 1, 1: 2})
    assert not check_proper([(0, 1)], {0: 1, 1: 1})
