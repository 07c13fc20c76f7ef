"""Edge-label families for the list-extension engine.

A label is a frozenset of ordered colour pairs allowed on one marked cycle
edge.  The base family ``family_12`` (posted on an edge from the T1 zone to
the T2 zone) is generated shape by shape; the other two families are
derived from it: close each label under the c3<->c4 swap, then apply
c2<->c3 (giving ``family_13``) or c1<->c3 (giving ``family_32``).

Colours are plain ints; the distinguished sets are
S1 = {c1, c5..ck}, S2 = {c2, c5..ck}, S3 = {c3, c5..ck}.
"""

from __future__ import annotations

from functools import lru_cache

Pair = tuple[int, int]
Label = frozenset  # of Pair

SWAP_12 = {1: 2, 2: 1}
SWAP_13 = {1: 3, 3: 1}
SWAP_23 = {2: 3, 3: 2}
SWAP_34 = {3: 4, 4: 3}


def s1(k: int) -> frozenset[int]:
    return frozenset({1, *range(5, k + 1)})


def s2(k: int) -> frozenset[int]:
    return frozenset({2, *range(5, k + 1)})


def s3(k: int) -> frozenset[int]:
    return frozenset({3, *range(5, k + 1)})


def apply_swap(swap: dict[int, int], colour: int) -> int:
    return swap.get(colour, colour)


def swap_pair(swap: dict[int, int], pair: Pair) -> Pair:
    return (apply_swap(swap, pair[0]), apply_swap(swap, pair[1]))


def swap_label(swap: dict[int, int], label: Label) -> Label:
    return frozenset(swap_pair(swap, p) for p in label)


def closure_34(label: Label) -> Label:
    return label | swap_label(SWAP_34, label)


def reverse_pair(pair: Pair) -> Pair:
    """The pair as seen after reversing the cycle and swapping c1 with c2."""
    s, t = pair
    return (apply_swap(SWAP_12, t), apply_swap(SWAP_12, s))


def reverse_label(label: Label) -> Label:
    return frozenset(reverse_pair(p) for p in label)


@lru_cache(maxsize=None)
def family_12(k: int) -> frozenset[Label]:
    """All labels allowed on a T1|T2 boundary edge, shapes (i)-(vi)."""
    labels: set[Label] = set()
    xy = ((3, 4), (4, 3))
    for a in s1(k):
        for b in s2(k):
            if a != b:
                labels.add(frozenset({(a, b)}))  # (i)
        for x, _ in xy:
            labels.add(frozenset({(a, x)}))  # (ii)
    for x, _ in xy:
        for b in s2(k):
            labels.add(frozenset({(x, b)}))  # (iii)
    for x, y in xy:
        labels.add(frozenset({(2, x), (y, x)}))  # (iv)
        labels.add(frozenset({(x, 1), (x, y)}))  # (v)
        labels.add(frozenset({(2, x), (x, 1)}))  # (vi)
    return frozenset(labels)


@lru_cache(maxsize=None)
def family_13(k: int) -> frozenset[Label]:
    return frozenset(to_13(lab) for lab in family_12(k))


@lru_cache(maxsize=None)
def family_32(k: int) -> frozenset[Label]:
    return frozenset(to_32(lab) for lab in family_12(k))


def to_13(label_12: Label) -> Label:
    return swap_label(SWAP_23, closure_34(label_12))


def to_32(label_12: Label) -> Label:
    return swap_label(SWAP_13, closure_34(label_12))


@lru_cache(maxsize=None)
def _collapse_13(k: int) -> dict[Label, Label]:
    """For each label in family_13, its smallest corresponding family_12 label."""
    out: dict[Label, Label] = {}
    for lab in family_12(k):
        img = to_13(lab)
        cur = out.get(img)
        if cur is None or sorted(lab) < sorted(cur):
            out[img] = lab
    return out


def from_13(label_13: Label, k: int) -> Label:
    """A family_12 label whose image under ``to_13`` is the given label."""
    return _collapse_13(k)[label_13]


def in_family(label: Label, family: str, k: int) -> bool:
    table = {"L12": family_12, "L13": family_13, "L32": family_32}[family]
    return label in table(k)
