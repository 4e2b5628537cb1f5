"""
Independent reference implementations used only by the tests.

Diagrams are handled as plain ``(crossings, free_loops)`` pairs with their own
switch and smoothing code, so a bug in the library's surgery cannot hide in
both sides of a comparison. Both oracles walk a full skein tree with no
Reidemeister cleanup; basepoints and the crossing to resolve are chosen at
random.
"""

from __future__ import annotations

import random

from braidknot.algebra import LaurentPoly
from braidknot.braid import BraidWord

Raw = tuple[tuple[tuple[int, int, int, int, int], ...], int]


def raw(d) -> Raw:
    return tuple(tuple(x) for x in d.crossings), d.free_loops


def _strands(x):
    a, b, c, d, s = x
    over = (d, b) if s > 0 else (b, d)
    return (a, c), over


def _successor(xs):
    succ = {}
    for x in xs:
        (ui, uo), (oi, oo) = _strands(x)
        succ[ui] = uo
        succ[oi] = oo
    return succ


def _cycles(xs):
    succ = _successor(xs)
    out, seen = [], set()
    for start in succ:
        if start in seen:
            continue
        cyc, a = [], start
        while a not in seen:
            seen.add(a)
            cyc.append(a)
            a = succ[a]
        out.append(cyc)
    return out


def _switch(x):
    a, b, c, d, s = x
    return (d, a, b, c, -1) if s > 0 else (b, c, d, a, 1)


def _smooth(diagram: Raw, k: int) -> Raw:
    xs, loops = diagram
    (ui, uo), (oi, oo) = _strands(xs[k])
    # glue under-in to over-out and over-in to under-out
    rename = {}

    def root(a):
        while a in rename:
            a = rename[a]
        return a

    for p, q in ((ui, oo), (oi, uo)):
        rp, rq = root(p), root(q)
        if rp != rq:
            rename[rp] = rq
    rest = tuple(
        tuple(root(v) for v in x[:4]) + (x[4],) for i, x in enumerate(xs) if i != k
    )
    alive = {v for x in rest for v in x[:4]}
    gone = {root(v) for v in xs[k][:4]} - alive
    return rest, loops + len(gone)


def _bad_crossings(xs, basepoints):
    """Crossings first met from below when walking from the given basepoints."""
    succ = _successor(xs)
    under = {x[0]: i for i, x in enumerate(xs)}
    seen, bad = set(), []
    for start in basepoints:
        a = start
        while True:
            i = under.get(a)
            if i is None:
                i = next(j for j, x in enumerate(xs) if _strands(x)[1][0] == a)
            elif i not in seen:
                bad.append(i)
            seen.add(i)
            a = succ[a]
            if a == start:
                break
    return bad


def _random_basepoints(xs, rng):
    cycles = _cycles(xs)
    rng.shuffle(cycles)
    return [rng.choice(c) for c in cycles]


def _skein_tree(diagram: Raw, rng: random.Random, base, combine, basepoints=None):
    xs, loops = diagram
    components = len(_cycles(xs)) + loops
    if not xs:
        return base(components)
    if basepoints is None:
        basepoints = _random_basepoints(xs, rng)
    bad = _bad_crossings(xs, basepoints)
    if not bad:
        return base(components)
    k = rng.choice(bad)
    switched = list(xs)
    switched[k] = _switch(xs[k])
    # same labels after a switch, so the basepoints stay valid
    other = _skein_tree((tuple(switched), loops), rng, base, combine, basepoints)
    zero = _skein_tree(_smooth(diagram, k), rng, base, combine)
    return combine(xs[k][4], other, zero)


def conway_oracle(d, seed: int = 0) -> LaurentPoly:
    z = LaurentPoly.monomial(1, 1, "z")

    def base(components):
        return LaurentPoly.constant(1 if components == 1 else 0, "z")

    def combine(sign, switched, zero):
        return switched + z * zero if sign > 0 else switched - z * zero

    return _skein_tree(raw(d), random.Random(seed), base, combine)


def jones_oracle(d, seed: int = 0) -> LaurentPoly:
    def q(e):
        return LaurentPoly.monomial(1, e, "q")

    unknot_pair = -q(1) - q(-1)

    def base(components):
        return unknot_pair ** (components - 1)

    def combine(sign, switched, zero):
        if sign > 0:
            return q(4) * switched + (q(3) - q(1)) * zero
        return q(-4) * switched - (q(-1) - q(-3)) * zero

    return _skein_tree(raw(d), random.Random(seed), base, combine)


def random_word(rng: random.Random, max_strands: int, max_len: int, min_strands: int = 2) -> BraidWord:
    n = rng.randint(min_strands, max_strands)
    if n == 1:
        return BraidWord(1, ())
    length = rng.randint(0, max_len)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))
