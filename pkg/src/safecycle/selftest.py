"""The acceptance criteria as callable checks, shared by the CLI selftest
subcommand and the pytest acceptance module.  Each check returns
(ok, detail); bounds and tolerances are fixed here, not configurable."""

from __future__ import annotations

import random

from .classify import canonicalize, enumerate_colourings, is_bad, is_good, verdict
from .core import CycleColouring, check_proper, is_chordless, validate_near_triangulation
from .enumeration import (
    _canonical_key,
    brute_force_extend,
    enumerate_disk_triangulations,
    safety_probe,
)
from .extend import theorem_main_extend
from .gadgets import gadget_for


def criterion_1_lemma_two_equivalence():
    """k=5, l in 3..8, every class: not bad iff good."""
    checked = 0
    for l in range(3, 9):
        for c in enumerate_colourings(l, 5, up_to_equivalence=True):
            checked += 1
            if (is_bad(c) is None) != (is_good(c) is not None):
                return False, f"mismatch at {c.colours}"
    return True, f"{checked} classes checked"


def criterion_2_gadgets():
    """k in {4,5}, l in 3..7: every bad colouring's gadget is valid and
    admits no extension."""
    checked = 0
    for k in (4, 5):
        for l in range(3, 8):
            for c in enumerate_colourings(l, k):
                w = is_bad(c)
                if w is None:
                    continue
                checked += 1
                gadget = gadget_for(c, w)
                g = gadget.graph
                validate_near_triangulation(g.boundary_len, g.internal_count, g.edges, g.triangles)
                if not is_chordless(g):
                    return False, f"gadget for {c.colours} has a chord"
                if brute_force_extend(c, g) is not None:
                    return False, f"gadget for {c.colours} (k={k}) is extendable"
    return True, f"{checked} gadgets refuted"


def criterion_3_theorem_cross_validation():
    """k=5: every good class of l in 3..6 extends over every chordless
    disk triangulation with n <= 3, matching the brute-force oracle."""
    checked = 0
    for l in range(3, 7):
        graphs = [
            g
            for n in range(4)
            for g in enumerate_disk_triangulations(l, n, chordless_only=True)
        ]
        for c in enumerate_colourings(l, 5, up_to_equivalence=True):
            if is_good(c) is None:
                continue
            for g in graphs:
                checked += 1
                col = theorem_main_extend(c, g)
                if not check_proper(g.edges, col):
                    return False, f"improper extension at {c.colours}"
                if any(col[v] != c.colours[v] for v in range(l)):
                    return False, f"boundary not respected at {c.colours}"
                if brute_force_extend(c, g) is None:
                    return False, f"oracle disagrees at {c.colours}"
    return True, f"{checked} extensions verified"


def criterion_4_corollary():
    """k in {5,6,7}: every colouring of length <= 2k-5 using <= k-1 colours
    is good; the explicit length 2k-4 colouring is bad via condition 2."""
    checked = 0
    for k in (5, 6, 7):
        for l in range(3, 2 * k - 4):
            for c in enumerate_colourings(l, k, up_to_equivalence=True):
                if len(c.used_colours()) > k - 1:
                    continue
                checked += 1
                if is_good(c) is None:
                    return False, f"k={k} colouring {c.colours} not good"
        seq = [0] * (2 * k - 4)
        for i in range(1, k - 2):
            seq[i - 1] = i
            seq[k - 2 + i - 1] = i
        seq[k - 3] = k - 2
        seq[2 * k - 5] = k - 1
        bad = is_bad(CycleColouring(k, tuple(seq)))
        if bad is None or bad.condition != 2:
            return False, f"k={k} explicit example not bad via condition 2: {bad}"
        checked += 1
    return True, f"{checked} colourings checked"


def criterion_5_four_colours():
    """k=4: every colouring of l in 4..8 is bad; triangle colourings are not."""
    checked = 0
    for l in range(4, 9):
        for c in enumerate_colourings(l, 4):
            checked += 1
            if is_bad(c) is None:
                return False, f"k=4 colouring {c.colours} not bad"
    for c in enumerate_colourings(3, 4):
        checked += 1
        if is_bad(c) is not None:
            return False, f"triangle colouring {c.colours} is bad"
    return True, f"{checked} colourings checked"


def criterion_6_enumerator():
    """Catalan counts at n=0 for l in 3..8; Euler validation and
    duplicate-freeness for l in 3..6, n <= 3."""
    catalan = [1, 1]
    for m in range(2, 8):
        catalan.append(sum(catalan[i] * catalan[m - 1 - i] for i in range(m)))
    checked = 0
    for l in range(3, 9):
        count = sum(1 for _ in enumerate_disk_triangulations(l, 0))
        if count != catalan[l - 2]:
            return False, f"l={l}: {count} != Catalan({l - 2}) = {catalan[l - 2]}"
        checked += count
    for l in range(3, 7):
        for n in range(4):
            keys = set()
            for g in enumerate_disk_triangulations(l, n):
                checked += 1
                validate_near_triangulation(
                    g.boundary_len, g.internal_count, g.edges, g.triangles
                )
                key = _canonical_key(l, n, g.edges, g.triangles)
                if key in keys:
                    return False, f"duplicate emitted at l={l}, n={n}"
                keys.add(key)
    return True, f"{checked} graphs checked"


def criterion_7_conjecture_probe():
    """k=6, l=8: the doubled 4-colouring is neither; probe to n_max=3 and
    record the outcome (no safety assertion; the conjecture is open)."""
    c = CycleColouring(6, (1, 2, 3, 4, 1, 2, 3, 4))
    kind, _ = verdict(c)
    if kind != "neither":
        return False, f"expected neither, got {kind}"
    probe = safety_probe(c, 3)
    return True, f"outcome={probe.outcome} scanned={probe.scanned}"


def _random_proper_colouring(rng: random.Random, l: int, k: int) -> CycleColouring:
    while True:
        seq = [rng.randrange(1, k + 1)]
        for i in range(1, l):
            choices = [c for c in range(1, k + 1) if c != seq[-1]]
            if i == l - 1:
                choices = [c for c in choices if c != seq[0]]
            if not choices:
                break
            seq.append(rng.choice(choices))
        if len(seq) == l:
            return CycleColouring(k, tuple(seq))


def _transformed(rng: random.Random, c: CycleColouring) -> CycleColouring:
    seq = list(c.colours)
    r = rng.randrange(len(seq))
    seq = seq[r:] + seq[:r]
    if rng.random() < 0.5:
        seq.reverse()
    perm = list(range(1, c.k + 1))
    rng.shuffle(perm)
    return CycleColouring(c.k, tuple(perm[x - 1] for x in seq))


def criterion_8_equivalence_invariance():
    """1000 seeded random colourings, 10 random transforms each: the
    verdict kind, canonical form, and canonical witness condition agree."""
    rng = random.Random(9147)
    checked = 0
    for _ in range(1000):
        k = rng.choice((4, 5, 6))
        l = rng.randrange(3, 9)
        c = _random_proper_colouring(rng, l, k)
        kind, _ = verdict(c)
        canon = canonicalize(c).canonical
        base = (kind, canon.colours, verdict(canon)[0], _canonical_condition(canon))
        for _ in range(10):
            t = _transformed(rng, c)
            canon_t = canonicalize(t).canonical
            got = (verdict(t)[0], canon_t.colours, verdict(canon_t)[0], _canonical_condition(canon_t))
            if got != base:
                return False, f"verdict varies across the class of {c.colours}"
            checked += 1
    return True, f"{checked} transformed colourings checked"


def _canonical_condition(c: CycleColouring):
    kind, witness = verdict(c)
    return None if witness is None else witness.condition


CRITERIA = (
    (1, "lemma-2 equivalence, exhaustive", criterion_1_lemma_two_equivalence),
    (2, "lemma-1 gadgets refuted by the oracle", criterion_2_gadgets),
    (3, "theorem-1 cross-validation", criterion_3_theorem_cross_validation),
    (4, "corollary bounds", criterion_4_corollary),
    (5, "four-colour facts", criterion_5_four_colours),
    (6, "enumerator correctness", criterion_6_enumerator),
    (7, "conjecture probe regression", criterion_7_conjecture_probe),
    (8, "equivalence invariance", criterion_8_equivalence_invariance),
)


def run_criteria(only=None):
    for number, name, fn in CRITERIA:
        if only is not None and number not in only:
            continue
        ok, detail = fn()
        yield number, name, ok, detail
