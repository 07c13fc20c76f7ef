"""Bad / good / neither classification of cycle colourings, and enumeration
of colourings up to rotation, reflection and colour permutation."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .core import CLOSED, HALF_OPEN_RIGHT, CycleColouring, arc_set
from .errors import ValidationError


@dataclass(frozen=True)
class BadWitness:
    """First witness of one of the three unsafety conditions (1-based indices)."""

    condition: int
    indices: tuple[int, ...]


@dataclass(frozen=True)
class GoodWitness:
    """First witness of one of the three goodness clauses (1-based indices).

    ``discard`` is the set A of k-4 colours for conditions 2 and 3; empty
    for condition 1, where no such set is involved.
    """

    condition: int
    indices: tuple[int, ...]
    discard: frozenset[int]


@dataclass(frozen=True)
class EquivalenceClass:
    canonical: CycleColouring
    orbit_size: int


def is_bad(c: CycleColouring) -> BadWitness | None:
    """Scan the unsafety conditions in order 1, 2, 3; first hit wins.

    Condition 1: all k colours occur.  Condition 2: two complementary
    closed arcs share at least k-1 colours.  Condition 3: three arcs
    covering the cycle share at least k-2 colours.
    """
    if c.k < 4:
        raise ValidationError("palette", f"badness is defined for k >= 4, got {c.k}")
    k, l = c.k, c.length
    if len(c.used_colours()) == k:
        return BadWitness(1, ())
    # closed arcs, 0-based endpoints; witnesses are reported 1-based
    for p in range(l):
        for q in range(p + 1, l):
            if len(arc_set(c, p, q, CLOSED) & arc_set(c, q, p, CLOSED)) >= k - 1:
                return BadWitness(2, (p + 1, q + 1))
    for p in range(l):
        for q in range(p + 1, l):
            fpq = arc_set(c, p, q, CLOSED)
            if len(fpq) < k - 2:
                continue
            for r in range(q + 1, l):
                shared = fpq & arc_set(c, q, r, CLOSED) & arc_set(c, r, p, CLOSED)
                if len(shared) >= k - 2:
                    return BadWitness(3, (p + 1, q + 1, r + 1))
    return None


def is_good(c: CycleColouring) -> GoodWitness | None:
    """Scan the goodness clauses in order 1, 2, 3.

    For clauses 2 and 3 the discard set A ranges over all (k-4)-subsets of
    the palette, outermost, in sorted order; index pairs/triples are scanned
    lexicographically inside.
    """
    if c.k < 5:
        raise ValidationError("palette", f"goodness is defined for k >= 5, got {c.k}")
    k, l = c.k, c.length
    used = c.used_colours()
    if len(used) <= k - 3:
        return GoodWitness(1, (), frozenset())
    if len(used) == k - 2:
        for a_tuple in itertools.combinations(range(1, k + 1), k - 4):
            a = frozenset(a_tuple)
            for p in range(l):
                for q in range(p + 1, l):
                    if (
                        len(arc_set(c, p, q, HALF_OPEN_RIGHT) - a) == 1
                        and len(arc_set(c, q, p, HALF_OPEN_RIGHT) - a) == 1
                    ):
                        return GoodWitness(2, (p + 1, q + 1), a)
    if len(used) == k - 1:
        for a_tuple in itertools.combinations(range(1, k + 1), k - 4):
            a = frozenset(a_tuple)
            for p in range(l):
                for q in range(p + 1, l):
                    if len(arc_set(c, p, q, HALF_OPEN_RIGHT) - a) != 1:
                        continue
                    for r in range(q + 1, l):
                        if (
                            len(arc_set(c, q, r, HALF_OPEN_RIGHT) - a) == 1
                            and len(arc_set(c, r, p, HALF_OPEN_RIGHT) - a) == 1
                        ):
                            return GoodWitness(3, (p + 1, q + 1, r + 1), a)
    return None


def verdict(c: CycleColouring) -> tuple[str, BadWitness | GoodWitness | None]:
    """One of "bad", "good", "neither" with the deciding witness.

    For k = 4 goodness is undefined, so the outcomes are "bad" or "neither".
    """
    bad = is_bad(c)
    if bad is not None:
        return "bad", bad
    if c.k >= 5:
        good = is_good(c)
        if good is not None:
            return "good", good
    return "neither", None


def _relabel_first_occurrence(seq: tuple[int, ...]) -> tuple[int, ...]:
    mapping: dict[int, int] = {}
    out = []
    for x in seq:
        if x not in mapping:
            mapping[x] = len(mapping) + 1
        out.append(mapping[x])
    return tuple(out)


def _motions(seq: tuple[int, ...]):
    l = len(seq)
    for r in range(l):
        rotated = seq[r:] + seq[:r]
        yield rotated
        yield rotated[::-1]


def canonicalize(c: CycleColouring) -> EquivalenceClass:
    """Minimum over all rotations and reflections of the first-occurrence
    relabelling; orbit size via orbit-stabilizer over the full group."""
    best = min(_relabel_first_occurrence(m) for m in _motions(c.colours))
    canonical = CycleColouring(c.k, best)

    used = len(c.used_colours())
    free = factorial(c.k - used)
    stabilizer = 0
    for m in _motions(c.colours):
        # a colour permutation fixing c exists iff positionwise colour pairs
        # (m[i], c[i]) define a consistent partial bijection
        fwd: dict[int, int] = {}
        ok = True
        for x, y in zip(m, c.colours):
            if fwd.setdefault(x, y) != y:
                ok = False
                break
        if ok and len(set(fwd.values())) == len(fwd):
            stabilizer += free
    group = 2 * c.length * factorial(c.k)
    return EquivalenceClass(canonical, group // stabilizer)


def enumerate_colourings(l: int, k: int, up_to_equivalence: bool = False):
    """Stream proper k-colourings of the l-cycle in lexicographic order.

    With the flag set, only canonical class representatives are emitted
    (sequences normalized by first occurrence, filtered to the orbit
    minimum), still in lexicographic order.
    """
    if l < 3:
        raise ValidationError("cycle-length", f"cycle length {l} < 3")
    if k < 2:
        raise ValidationError("palette", f"palette size {k} < 2")

    def extend(prefix: list[int], max_used: int):
        if len(prefix) == l:
            if prefix[-1] != prefix[0]:
                yield tuple(prefix)
            return
        top = min(k, max_used + 1) if up_to_equivalence else k
        for colour in range(1, top + 1):
            if prefix and colour == prefix[-1]:
                continue
            prefix.append(colour)
            yield from extend(prefix, max(max_used, colour))
            prefix.pop()

    for seq in extend([], 0):
        c = CycleColouring(k, seq)
        if up_to_equivalence and canonicalize(c).canonical.colours != seq:
            continue
        yield c
