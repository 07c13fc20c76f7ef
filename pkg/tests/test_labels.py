"""Edge-label families: generated tables against the published ones."""

from safecycle.labels import (
    SWAP_34,
    closure_34,
    family_12,
    family_13,
    family_32,
    from_13,
    reverse_label,
    swap_label,
    to_13,
    to_32,
)


def lab(*pairs):
    return frozenset(pairs)


def explicit_family_13(k):
    """The middle-family table, spelled out shape by shape."""
    s1 = {1, *range(5, k + 1)}
    s3 = {3, *range(5, k + 1)}
    out = set()
    for a in s1:
        for c in s3:
            if a != c:
                out.add(lab((a, c)))  # (i)
        out.add(lab((a, 2), (a, 4)))  # (ii)
    for c in s3:
        out.add(lab((2, c), (4, c)))  # (iii)
    out.add(lab((3, 2), (3, 4), (2, 4), (4, 2)))  # (iv)
    out.add(lab((2, 1), (4, 1), (2, 4), (4, 2)))  # (v)
    out.add(lab((3, 2), (3, 4), (2, 1), (4, 1)))  # (vi)
    return frozenset(out)


def explicit_family_32(k):
    s2 = {2, *range(5, k + 1)}
    s3 = {3, *range(5, k + 1)}
    out = set()
    for c in s3:
        for b in s2:
            if c != b:
                out.add(lab((c, b)))  # (i)
        out.add(lab((c, 1), (c, 4)))  # (ii)
    for b in s2:
        out.add(lab((1, b), (4, b)))  # (iii)
    out.add(lab((2, 1), (2, 4), (1, 4), (4, 1)))  # (iv)
    out.add(lab((1, 3), (4, 3), (1, 4), (4, 1)))  # (v)
    out.add(lab((2, 1), (2, 4), (1, 3), (4, 3)))  # (vi)
    return frozenset(out)


def test_family_sizes_k5():
    assert len(family_12(5)) == 17
    assert len(family_13(5)) == 10
    assert len(family_32(5)) == 10


def test_family_13_matches_explicit_table():
    for k in (5, 6, 7):
        assert family_13(k) == explicit_family_13(k)


def test_family_32_matches_explicit_table():
    for k in (5, 6, 7):
        assert family_32(k) == explicit_family_32(k)


def test_worked_transformation_example():
    # {(c2,c3),(c3,c1)} maps to {(c3,c2),(c2,c1),(c3,c4),(c4,c1)} and to
    # {(c2,c1),(c1,c3),(c2,c4),(c4,c3)}
    base = lab((2, 3), (3, 1))
    assert to_13(base) == lab((3, 2), (2, 1), (3, 4), (4, 1))
    assert to_32(base) == lab((2, 1), (1, 3), (2, 4), (4, 3))


def test_from_13_round_trip():
    for k in (5, 6):
        for label in family_13(k):
            rep = from_13(label, k)
            assert rep in family_12(k)
            assert to_13(rep) == label


def test_family_13_c3_c4_closed_after_c2_c3_swap():
    # after undoing the c2/c3 swap, every middle-family label is closed
    # under exchanging c3 and c4
    from safecycle.labels import SWAP_23

    for label in family_13(5):
        unswapped = swap_label(SWAP_23, label)
        assert swap_label(SWAP_34, unswapped) == unswapped


def test_family_12_closed_under_c3_c4_swap_as_family():
    fam = family_12(5)
    assert {swap_label(SWAP_34, label) for label in fam} == set(fam)


def test_reverse_label_maps_families():
    # cycle reversal with the c1/c2 swap maps the base family to itself
    # and exchanges the other two
    fam12, fam13, fam32 = family_12(5), family_13(5), family_32(5)
    assert {reverse_label(p) for p in fam12} == set(fam12)
    assert {reverse_label(p) for p in fam13} == set(fam32)
    assert {reverse_label(p) for p in fam32} == set(fam13)


def test_all_pairs_bichromatic():
    for k in (5, 6):
        for fam in (family_12(k), family_13(k), family_32(k)):
            for label in fam:
                assert all(s != t for (s, t) in label)


def test_closure_34():
    assert closure_34(lab((1, 3))) == lab((1, 3), (1, 4))
    assert closure_34(lab((1, 2))) == lab((1, 2))
