"""
Conway and Jones polynomials of link diagrams.

The Conway polynomial is computed by a skein tree: walk the diagram from
fixed basepoints, and at the first crossing met from below either switch it
(one step closer to a descending diagram, which is an unlink) or smooth it
(one crossing fewer). The Jones polynomial comes from the Kauffman bracket
state sum, normalized by the writhe. The two engines share no code beyond
the diagram operations, so the skein identities test one against the other.

Jones values use ``q`` with ``q**2 = t``; the bracket variable ``A`` maps to
``q**(-1/2)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .algebra import LaurentPoly
from .braid import BraidWord, markov_simplify
from .link import (
    DiagramError,
    LinkDiagram,
    braid_closure,
    component_count,
    simplify_r1_r2,
    smooth_crossing_oriented,
    switch_crossing,
    writhe,
)

DEFAULT_MAX_CROSSINGS = 16


class CrossingLimitError(ValueError):
    """The diagram has more crossings than the configured cap."""


def _check(d: LinkDiagram, max_crossings: int | None) -> None:
    if d.is_empty:
        raise DiagramError("invariants of the empty diagram are undefined")
    if max_crossings is not None and len(d) > max_crossings:
        raise CrossingLimitError(
            f"{len(d)} crossings exceeds the cap of {max_crossings}"
        )


# --------------------------------------------------------------------------
# skein triples


@dataclass(frozen=True)
class SkeinTriple:
    plus: LinkDiagram
    minus: LinkDiagram
    zero: LinkDiagram
    site: int


def skein_triple(d: LinkDiagram, c: int) -> SkeinTriple:
    switched = switch_crossing(d, c)
    zero = smooth_crossing_oriented(d, c)
    if d.crossings[c].sign > 0:
        return SkeinTriple(d, switched, zero, c)
    return SkeinTriple(switched, d, zero, c)


# --------------------------------------------------------------------------
# Conway polynomial


def first_bad_crossing(d: LinkDiagram) -> int | None:
    """
    Walk the components in order of their least arc, each from that arc.
    Return the first crossing whose first visit is along its under-strand,
    or ``None`` when the diagram is descending.
    """
    under_at = {x.under_in: i for i, x in enumerate(d.crossings)}
    over_at = {x.over_in: i for i, x in enumerate(d.crossings)}
    seen: set[int] = set()
    for cycle in d.components():
        for arc in cycle:
            if arc in under_at:
                i = under_at[arc]
                if i not in seen:
                    return i
            else:
                seen.add(over_at[arc])
    return None


def bad_crossing_count(d: LinkDiagram) -> int:
    """Crossings first reached from below in the walk of :func:`first_bad_crossing`."""
    under_at = {x.under_in: i for i, x in enumerate(d.crossings)}
    over_at = {x.over_in: i for i, x in enumerate(d.crossings)}
    seen: set[int] = set()
    bad = 0
    for cycle in d.components():
        for arc in cycle:
            i = under_at.get(arc)
            if i is None:
                seen.add(over_at[arc])
            elif i not in seen:
                seen.add(i)
                bad += 1
    return bad


def conway_polynomial(
    d: LinkDiagram, max_crossings: int | None = DEFAULT_MAX_CROSSINGS
) -> LaurentPoly:
    """
    >>> from .link import unlink
    >>> str(conway_polynomial(unlink(1))), str(conway_polynomial(unlink(2)))
    ('1', '0')
    """
    _check(d, max_crossings)
    z = LaurentPoly.monomial(1, 1, "z")
    memo: dict[LinkDiagram, LaurentPoly] = {}

    def walk(node: LinkDiagram) -> LaurentPoly:
        node = simplify_r1_r2(node)
        if node in memo:
            return memo[node]
        site = first_bad_crossing(node)
        if site is None:
            n = component_count(node)
            value = LaurentPoly.constant(1 if n == 1 else 0, "z")
        else:
            sign = node.crossings[site].sign
            rest = z * walk(smooth_crossing_oriented(node, site))
            switched = walk(switch_crossing(node, site))
            value = switched + rest if sign > 0 else switched - rest
        memo[node] = value
        return value

    return walk(d)


# --------------------------------------------------------------------------
# Jones polynomial


def _state_histogram(d: LinkDiagram) -> Counter:
    """Count states by (number of A minus number of B smoothings, loops)."""
    xs = d.crossings
    n = len(xs)
    labels = sorted(d.arcs)
    index = {a: k for k, a in enumerate(labels)}
    a_pairs = [((index[x.a], index[x.b]), (index[x.c], index[x.d])) for x in xs]
    b_pairs = [((index[x.a], index[x.d]), (index[x.b], index[x.c])) for x in xs]
    hist: Counter = Counter()
    for state in range(1 << n):
        parent = list(range(len(labels)))

        def find(u: int) -> int:
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        loops = len(labels)
        for k in range(n):
            pairs = b_pairs[k] if state >> k & 1 else a_pairs[k]
            for u, v in pairs:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    loops -= 1
        b_count = bin(state).count("1")
        hist[(n - 2 * b_count, loops + d.free_loops)] += 1
    return hist


def kauffman_bracket(
    d: LinkDiagram, max_crossings: int | None = DEFAULT_MAX_CROSSINGS
) -> LaurentPoly:
    """
    Unnormalized bracket with the one-loop state worth 1.

    >>> from .link import unlink
    >>> str(kauffman_bracket(unlink(2)))
    '-A^2 - A^-2'
    """
    _check(d, max_crossings)
    delta = LaurentPoly({2: -1, -2: -1}, "A")
    total = LaurentPoly({}, "A")
    powers: dict[int, LaurentPoly] = {}
    for (shift, loops), mult in _state_histogram(d).items():
        if loops - 1 not in powers:
            powers[loops - 1] = delta ** (loops - 1)
        total = total + LaurentPoly.monomial(mult, shift, "A") * powers[loops - 1]
    return total


def jones_polynomial(
    d: LinkDiagram, max_crossings: int | None = DEFAULT_MAX_CROSSINGS
) -> LaurentPoly:
    """
    >>> from .link import unlink
    >>> str(jones_polynomial(unlink(2)))
    '-q - q^-1'
    """
    w = writhe(d)
    bracket = kauffman_bracket(d, max_crossings)
    normalized = LaurentPoly.monomial((-1) ** (w % 2), -3 * w, "A") * bracket
    return normalized.rescale_exponents(-1, 2, "q")


# --------------------------------------------------------------------------
# mirror helpers


def mirror_conway(p: LaurentPoly) -> LaurentPoly:
    return p.negate_variable()


def mirror_jones(p: LaurentPoly) -> LaurentPoly:
    return p.substitute_inverse()


def equal_up_to_mirror(conway: LaurentPoly, jones: LaurentPoly,
                       other_conway: LaurentPoly, other_jones: LaurentPoly) -> bool:
    """Both invariants agree directly, or both agree after mirroring."""
    if conway == other_conway and jones == other_jones:
        return True
    return mirror_conway(conway) == other_conway and mirror_jones(jones) == other_jones


# --------------------------------------------------------------------------
# braid closures


@dataclass(frozen=True)
class BraidInvariants:
    components: int
    conway: LaurentPoly
    jones: LaurentPoly
    exponent_sum: int


def invariants_of_diagram(
    d: LinkDiagram, max_crossings: int | None = DEFAULT_MAX_CROSSINGS
) -> tuple[int, LaurentPoly, LaurentPoly]:
    return (
        component_count(d),
        conway_polynomial(d, max_crossings),
        jones_polynomial(d, max_crossings),
    )


def invariants_of_braid(
    word: BraidWord, max_crossings: int | None = DEFAULT_MAX_CROSSINGS
) -> BraidInvariants:
    """
    Simplify the word by Markov moves, close it, clean up with R1/R2 and
    compute both polynomials. The exponent sum is that of the input word.
    """
    small = markov_simplify(word)
    d = simplify_r1_r2(braid_closure(small))
    components, conway, jones = invariants_of_diagram(d, max_crossings)
    return BraidInvariants(components, conway, jones, word.exponent_sum())
