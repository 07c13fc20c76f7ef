"""Classifier: bad/good witnesses, canonical forms, colouring enumeration."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from safecycle import (
    CycleColouring,
    ValidationError,
    canonicalize,
    enumerate_colourings,
    is_bad,
    is_good,
    verdict,
)
from safecycle.core import CLOSED, HALF_OPEN_RIGHT, arc_set


def proper_colourings(l, k):
    """Strategy for proper k-colourings of C_l built by repair."""

    def fix(raw):
        out = []
        for x in raw:
            if out and x == out[-1]:
                x = x % k + 1
            out.append(x)
        if out[-1] == out[0]:
            out[-1] = out[-1] % k + 1
            if out[-1] == out[-2]:
                out[-1] = out[-1] % k + 1
        return CycleColouring(k, tuple(out))

    return st.lists(st.integers(1, k), min_size=l, max_size=l).map(fix)


class TestIsBad:
    def test_condition_two_example(self):
        w = is_bad(CycleColouring(4, (1, 2, 1, 3)))
        assert w.condition == 2
        assert w.indices == (2, 4)  # frozen from the exhaustive condition scan

    def test_two_coloured_cycle_not_bad(self):
        assert is_bad(CycleColouring(5, (1, 2, 1, 2, 1, 2))) is None

    def test_corollary_example(self):
        w = is_bad(CycleColouring(5, (1, 2, 3, 1, 2, 4)))
        assert w.condition == 2
        assert w.indices == (3, 6)  # frozen from the exhaustive condition scan

    def test_condition_one(self):
        assert is_bad(CycleColouring(5, (1, 2, 3, 4, 5))).condition == 1

    def test_rejects_small_palette(self):
        with pytest.raises(ValidationError):
            is_bad(CycleColouring(3, (1, 2, 3)))

    def test_witness_revalidates(self):
        for c in enumerate_colourings(6, 5):
            w = is_bad(c)
            if w is None or w.condition != 2:
                continue
            p, q = w.indices
            shared = arc_set(c, p - 1, q - 1, CLOSED) & arc_set(c, q - 1, p - 1, CLOSED)
            assert len(shared) >= c.k - 1


class TestIsGood:
    def test_condition_one(self):
        w = is_good(CycleColouring(5, (1, 2, 1, 2, 1, 2)))
        assert w.condition == 1

    def test_triangle_example(self):
        w = is_good(CycleColouring(5, (1, 2, 3)))
        # frozen from the exhaustive (A, p, q) scan
        assert (w.condition, w.indices, set(w.discard)) == (2, (1, 3), {1})

    def test_neither_example(self):
        c = CycleColouring(6, (1, 2, 3, 4, 1, 2, 3, 4))
        assert is_good(c) is None
        assert is_bad(c) is None
        assert verdict(c)[0] == "neither"

    def test_rejects_k4(self):
        with pytest.raises(ValidationError):
            is_good(CycleColouring(4, (1, 2, 3)))

    def test_witness_revalidates(self):
        for c in enumerate_colourings(5, 5):
            w = is_good(c)
            if w is None or w.condition != 2:
                continue
            p, q = w.indices
            a = w.discard
            assert len(a) == c.k - 4
            assert len(arc_set(c, p - 1, q - 1, HALF_OPEN_RIGHT) - a) == 1
            assert len(arc_set(c, q - 1, p - 1, HALF_OPEN_RIGHT) - a) == 1

    def test_good_implies_not_bad(self):
        # one direction of the equivalence, spot-checked beyond k=5
        for k in (5, 6):
            for c in enumerate_colourings(6, k, up_to_equivalence=True):
                if is_good(c) is not None:
                    assert is_bad(c) is None


class TestLemmaTwoEquivalence:
    @pytest.mark.parametrize("l", range(3, 8))
    def test_k5(self, l):
        for c in enumerate_colourings(l, 5, up_to_equivalence=True):
            assert (is_bad(c) is None) == (is_good(c) is not None)


class TestCanonicalize:
    def test_first_occurrence_relabelling(self):
        ec = canonicalize(CycleColouring(5, (2, 3, 2, 3)))
        assert ec.canonical.colours == (1, 2, 1, 2)

    def test_rotation_invariance(self):
        a = canonicalize(CycleColouring(3, (1, 2, 3)))
        b = canonicalize(CycleColouring(3, (3, 1, 2)))
        assert a.canonical == b.canonical

    def test_orbit_size_divides_group(self):
        import math

        c = CycleColouring(5, (1, 2, 1, 2, 1, 2))
        ec = canonicalize(c)
        group = 2 * c.length * math.factorial(c.k)
        assert group % ec.orbit_size == 0

    def test_orbit_size_counts_distinct_images(self):
        # brute-force orbit for a small palette
        c = CycleColouring(3, (1, 2, 3))
        seen = set()
        for r in range(3):
            for flip in (False, True):
                seq = c.colours[r:] + c.colours[:r]
                if flip:
                    seq = seq[::-1]
                for perm in itertools.permutations(range(1, 4)):
                    seen.add(tuple(perm[x - 1] for x in seq))
        assert canonicalize(c).orbit_size == len(seen)

    @settings(max_examples=60)
    @given(proper_colourings(6, 4), st.randoms(use_true_random=False))
    def test_class_invariance(self, c, rng):
        r = rng.randrange(c.length)
        seq = c.colours[r:] + c.colours[:r]
        if rng.random() < 0.5:
            seq = seq[::-1]
        perm = list(range(1, c.k + 1))
        rng.shuffle(perm)
        t = CycleColouring(c.k, tuple(perm[x - 1] for x in seq))
        assert canonicalize(t).canonical == canonicalize(c).canonical
        assert verdict(t)[0] == verdict(c)[0]


class TestEnumerate:
    def test_triangle_raw(self):
        assert sum(1 for _ in enumerate_colourings(3, 3)) == 6

    def test_triangle_classes(self):
        assert sum(1 for _ in enumerate_colourings(3, 3, up_to_equivalence=True)) == 1

    def test_chromatic_polynomial(self):
        # independent oracle: P(C_l, k) = (k-1)^l + (-1)^l (k-1)
        for l, k in ((4, 3), (5, 3), (4, 4), (6, 2)):
            expected = (k - 1) ** l + (-1) ** l * (k - 1)
            assert sum(1 for _ in enumerate_colourings(l, k)) == expected

    def test_classes_partition_raw(self):
        raw = list(enumerate_colourings(5, 4))
        reps = list(enumerate_colourings(5, 4, up_to_equivalence=True))
        canon = {canonicalize(c).canonical.colours for c in raw}
        assert canon == {c.colours for c in reps}
