"""Gadget factory: every bad witness yields a valid, refutable graph."""

import pytest

from safecycle import (
    CycleColouring,
    ValidationError,
    brute_force_extend,
    enumerate_colourings,
    exhaustive_extend,
    gadget_for,
    is_bad,
    is_chordless,
    triangle_apex_gadget,
    two_apex_gadget,
    wheel_gadget,
)
from safecycle.classify import BadWitness
from safecycle.core import validate_near_triangulation


class TestWheel:
    def test_w5_shape(self):
        c = CycleColouring(4, (1, 2, 3, 1, 4))
        g = wheel_gadget(c, is_bad(c)).graph
        assert g.internal_count == 1
        assert len(g.triangles) == 5

    def test_full_palette_pentagon(self):
        c = CycleColouring(5, (1, 2, 3, 4, 5))
        g = wheel_gadget(c, is_bad(c)).graph
        assert len(g.triangles) == 5
        assert brute_force_extend(c, g) is None

    def test_mismatch(self):
        c = CycleColouring(4, (1, 2, 1, 3))
        with pytest.raises(ValidationError):
            wheel_gadget(c, is_bad(c))  # condition-2 witness


class TestTwoApex:
    def test_corollary_example(self):
        c = CycleColouring(5, (1, 2, 3, 1, 2, 4))
        gadget = gadget_for(c, is_bad(c))
        assert gadget.kind == "two_apex"
        assert len(gadget.graph.triangles) == 8  # l + 2n - 2 = 6 + 2
        assert brute_force_extend(c, gadget.graph) is None
        assert exhaustive_extend(c, gadget.graph) is None

    def test_k4_example(self):
        c = CycleColouring(4, (1, 2, 1, 3))
        w = is_bad(c)
        assert w.condition == 2
        gadget = two_apex_gadget(c, w)
        assert exhaustive_extend(c, gadget.graph) is None

    def test_degenerate_arc(self):
        # a condition-2 witness whose first arc spans a single edge
        c = CycleColouring(4, (1, 2, 3, 1, 3, 2))
        w = is_bad(c)
        if w.condition == 2:
            g = two_apex_gadget(c, w).graph
            validate_near_triangulation(g.boundary_len, g.internal_count, g.edges, g.triangles)


class TestTriangleApex:
    def test_square_example(self):
        c = CycleColouring(4, (1, 2, 1, 2))
        w = is_bad(c)
        assert w.condition == 3
        gadget = triangle_apex_gadget(c, BadWitness(3, (1, 2, 3)))
        g = gadget.graph
        assert len(g.triangles) == 8  # 4 + 2*3 - 2
        assert brute_force_extend(c, g) is None
        assert exhaustive_extend(c, g) is None


class TestAllGadgets:
    @pytest.mark.parametrize("k,l", [(4, 4), (4, 5), (5, 5), (5, 6)])
    def test_every_bad_colouring_refuted(self, k, l):
        for c in enumerate_colourings(l, k):
            w = is_bad(c)
            if w is None:
                continue
            gadget = gadget_for(c, w)
            g = gadget.graph
            validate_near_triangulation(g.boundary_len, g.internal_count, g.edges, g.triangles)
            assert is_chordless(g)
            assert gadget.graph.internal_count == {1: 1, 2: 2, 3: 3}[w.condition]
            assert brute_force_extend(c, g) is None
