"""
Oriented link diagrams as planar-diagram (PD) codes.

A crossing lists four arc labels counterclockwise, starting with the arc
entering along the under-strand. Slot 3 is therefore the under-strand exit.
For a positive crossing the over-strand enters at slot 4 and leaves at slot 2;
for a negative one it enters at slot 2 and leaves at slot 4. Circles without
crossings cannot be written this way and are kept in a separate counter.

The arc set and the successor map (next arc along the orientation) are not
stored; both are read off the crossings.

>>> d = braid_closure(BraidWord.parse("1 1", 2))
>>> d.crossings
(Crossing(a=1, b=2, c=3, d=4, sign=1), Crossing(a=2, b=1, c=4, d=3, sign=1))
>>> component_count(d), writhe(d)
(2, 2)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Iterable, NamedTuple

from .braid import BraidWord


class DiagramError(ValueError):
    """Malformed PD data or an operation that does not apply."""


class Crossing(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def slots(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def under_in(self) -> int:
        return self.a

    @property
    def under_out(self) -> int:
        return self.c

    @property
    def over_in(self) -> int:
        return self.d if self.sign > 0 else self.b

    @property
    def over_out(self) -> int:
        return self.b if self.sign > 0 else self.d

    def relabel(self, f) -> Crossing:
        return Crossing(f(self.a), f(self.b), f(self.c), f(self.d), self.sign)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    def __post_init__(self) -> None:
        xs = tuple(Crossing(*map(int, x)) for x in self.crossings)
        object.__setattr__(self, "crossings", xs)
        if self.free_loops < 0:
            raise DiagramError("free_loops must be nonnegative")
        validate(self)

    @property
    def arcs(self) -> frozenset[int]:
        return frozenset(a for x in self.crossings for a in x.slots)

    @property
    def successor(self) -> dict[int, int]:
        succ = {}
        for x in self.crossings:
            succ[x.under_in] = x.under_out
            succ[x.over_in] = x.over_out
        return succ

    def components(self) -> list[tuple[int, ...]]:
        """Arc cycles of the crossing components, each starting at its least arc."""
        succ = self.successor
        seen: set[int] = set()
        out = []
        for start in sorted(succ):
            if start in seen:
                continue
            cycle = []
            arc = start
            while arc not in seen:
                seen.add(arc)
                cycle.append(arc)
                arc = succ[arc]
            out.append(tuple(cycle))
        return out

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def is_empty(self) -> bool:
        return not self.crossings and not self.free_loops


def validate(d: LinkDiagram) -> None:
    """Check that every arc has exactly one head and one tail."""
    heads: dict[int, int] = {}
    tails: dict[int, int] = {}
    for x in d.crossings:
        if x.sign not in (1, -1):
            raise DiagramError(f"crossing {tuple(x)} has sign {x.sign}")
        for arc in (x.under_in, x.over_in):
            heads[arc] = heads.get(arc, 0) + 1
        for arc in (x.under_out, x.over_out):
            tails[arc] = tails.get(arc, 0) + 1
    for arc in set(heads) | set(tails):
        if heads.get(arc, 0) != 1 or tails.get(arc, 0) != 1:
            raise DiagramError(
                f"arc {arc} must enter and leave exactly once "
                f"(enters {heads.get(arc, 0)}, leaves {tails.get(arc, 0)})"
            )


# --------------------------------------------------------------------------
# constructors


def unlink(k: int) -> LinkDiagram:
    if k < 0:
        raise DiagramError("unlink needs a nonnegative count")
    return LinkDiagram((), k)


def braid_closure(word: BraidWord) -> LinkDiagram:
    """
    Close a braid with all strands oriented downward; letter ``+i`` gives a
    positive crossing.
    """
    n = word.strands
    fresh = count(n + 1)
    current = list(range(1, n + 1))  # arc currently at each position
    crossings = []
    for ell in word.letters:
        i = abs(ell) - 1
        top_l, top_r = current[i], current[i + 1]
        bot_l, bot_r = next(fresh), next(fresh)
        if ell > 0:
            crossings.append(Crossing(top_l, bot_l, bot_r, top_r, 1))
        else:
            crossings.append(Crossing(top_r, top_l, bot_l, bot_r, -1))
        current[i], current[i + 1] = bot_l, bot_r
    # the bottom arc at each position is the top arc at the same position
    closing = {bottom: top for top, bottom in enumerate(current, 1)}
    crossings = [x.relabel(lambda a: closing.get(a, a)) for x in crossings]
    untouched = sum(1 for top, bottom in enumerate(current, 1) if top == bottom)
    return renumber(LinkDiagram(tuple(crossings), untouched))


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    shift = max(d1.arcs, default=0)
    moved = tuple(x.relabel(lambda a: a + shift) for x in d2.crossings)
    return LinkDiagram(d1.crossings + moved, d1.free_loops + d2.free_loops)


def renumber(d: LinkDiagram) -> LinkDiagram:
    """Relabel arcs 1..m in order of first appearance in the crossing list."""
    labels: dict[int, int] = {}
    for x in d.crossings:
        for a in x.slots:
            labels.setdefault(a, len(labels) + 1)
    return LinkDiagram(tuple(x.relabel(labels.__getitem__) for x in d.crossings), d.free_loops)


def relabel(d: LinkDiagram, mapping: dict[int, int]) -> LinkDiagram:
    return LinkDiagram(
        tuple(x.relabel(lambda a: mapping.get(a, a)) for x in d.crossings), d.free_loops
    )


# --------------------------------------------------------------------------
# simple queries


def component_count(d: LinkDiagram) -> int:
    if d.is_empty:
        raise DiagramError("the empty diagram has no components")
    return len(d.components()) + d.free_loops


def writhe(d: LinkDiagram) -> int:
    return sum(x.sign for x in d.crossings)


def _check_index(d: LinkDiagram, c: int) -> None:
    if not 0 <= c < len(d.crossings):
        raise DiagramError(f"crossing index {c} out of range for {len(d.crossings)} crossings")


# --------------------------------------------------------------------------
# crossing surgery


def _switched(x: Crossing) -> Crossing:
    if x.sign > 0:
        return Crossing(x.d, x.a, x.b, x.c, -1)
    return Crossing(x.b, x.c, x.d, x.a, 1)


def switch_crossing(d: LinkDiagram, c: int) -> LinkDiagram:
    """Exchange over and under at crossing ``c``; arc labels are kept."""
    _check_index(d, c)
    xs = list(d.crossings)
    xs[c] = _switched(xs[c])
    return LinkDiagram(tuple(xs), d.free_loops)


def diagram_mirror(d: LinkDiagram) -> LinkDiagram:
    return LinkDiagram(tuple(_switched(x) for x in d.crossings), d.free_loops)


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict[int, int] = {}

    def find(self, a: int) -> int:
        root = a
        while self.parent.get(root, root) != root:
            root = self.parent[root]
        while a != root:
            self.parent[a], a = root, self.parent.get(a, a)
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller label as representative
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _remove_crossings(
    d: LinkDiagram, joins: dict[int, Iterable[tuple[int, int]]]
) -> LinkDiagram:
    """
    Delete the crossings indexed by ``joins``, gluing each listed pair of arcs
    (incoming, outgoing) into one. Glued classes that no longer meet any
    crossing close up into free loops.
    """
    uf = _UnionFind()
    touched: set[int] = set()
    for c, pairs in joins.items():
        x = d.crossings[c]
        touched.update(x.slots)
        for a, b in pairs:
            uf.union(a, b)
    kept = tuple(
        x.relabel(uf.find) for i, x in enumerate(d.crossings) if i not in joins
    )
    alive = {a for x in kept for a in x.slots}
    loops = {uf.find(a) for a in touched} - alive
    return LinkDiagram(kept, d.free_loops + len(loops))


def _pass_through(x: Crossing) -> list[tuple[int, int]]:
    return [(x.under_in, x.under_out), (x.over_in, x.over_out)]


def smooth_crossing_oriented(d: LinkDiagram, c: int) -> LinkDiagram:
    """Replace crossing ``c`` by two strands that keep the orientation."""
    _check_index(d, c)
    x = d.crossings[c]
    return _remove_crossings(d, {c: [(x.under_in, x.over_out), (x.over_in, x.under_out)]})


def _reoriented(slots: list[tuple[int, int, int, int]], ends: dict[int, list]) -> tuple:
    """
    Rebuild oriented crossings after an unoriented surgery.

    ``slots`` holds unsigned crossings (indices 0 and 2 under, 1 and 3
    over); ``ends`` maps each arc to its two (crossing, index) ends.
    Components are traversed afresh and every arc gets a new label.
    """
    other_end = {}
    for arc, pts in ends.items():
        if len(pts) != 2:
            raise DiagramError(f"arc {arc} has {len(pts)} ends")
        p, q = pts
        other_end[p] = q
        other_end[q] = p
    label: dict[tuple[int, int], int] = {}
    incoming: dict[tuple[int, int], bool] = {}
    fresh = count(1)
    for start in sorted(other_end):
        if start in label:
            continue
        pos = start
        while pos not in label:
            arc = next(fresh)
            label[pos], incoming[pos] = arc, False
            head = other_end[pos]
            label[head], incoming[head] = arc, True
            pos = (head[0], (head[1] + 2) % 4)
    out = []
    for ci in range(len(slots)):
        order = (0, 1, 2, 3) if incoming[(ci, 0)] else (2, 3, 0, 1)
        sign = 1 if incoming[(ci, order[3])] else -1
        out.append(Crossing(*(label[(ci, s)] for s in order), sign))
    return tuple(out)


def kauffman_smooth(d: LinkDiagram, c: int, kind: str) -> LinkDiagram:
    """
    Unoriented smoothing of crossing ``c``: ``"A"`` joins slots 1-2 and 3-4,
    ``"B"`` joins slots 1-4 and 2-3. The result is reoriented arbitrarily and
    is meant for loop counting.
    """
    if not d.crossings:
        raise DiagramError("no crossing to smooth")
    _check_index(d, c)
    x = d.crossings[c]
    if kind == "A":
        pairs = [(x.a, x.b), (x.c, x.d)]
    elif kind == "B":
        pairs = [(x.a, x.d), (x.b, x.c)]
    else:
        raise DiagramError(f"smoothing kind must be 'A' or 'B', not {kind!r}")
    uf = _UnionFind()
    for p, q in pairs:
        uf.union(p, q)
    kept = [y.slots for i, y in enumerate(d.crossings) if i != c]
    ends: dict[int, list] = {}
    for ci, y in enumerate(kept):
        for s, arc in enumerate(y):
            ends.setdefault(uf.find(arc), []).append((ci, s))
    loops = {uf.find(a) for a in x.slots} - set(ends)
    return LinkDiagram(_reoriented(kept, ends), d.free_loops + len(loops))


# --------------------------------------------------------------------------
# Reidemeister simplification


def find_r1(d: LinkDiagram) -> int | None:
    """Index of a crossing with two adjacent slots on the same arc."""
    for i, x in enumerate(d.crossings):
        s = x.slots
        if any(s[k] == s[(k + 1) % 4] for k in range(4)):
            return i
    return None


def find_r2(d: LinkDiagram) -> tuple[int, int] | None:
    """
    A pair of crossings bounding a bigon whose one side passes over at both
    ends and whose other side passes under at both ends.
    """
    where: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(d.crossings):
        for s, arc in enumerate(x.slots):
            where.setdefault(arc, []).append((i, s))
    for x_arc, pts in where.items():
        (c1, s1), (c2, s2) = pts
        if c1 == c2 or s1 % 2 == 0 or s2 % 2 == 0:
            continue  # not over at both ends
        for y_arc, qts in where.items():
            (e1, t1), (e2, t2) = qts
            if {e1, e2} != {c1, c2} or t1 % 2 or t2 % 2:
                continue
            ty1 = t1 if e1 == c1 else t2
            ty2 = t2 if e1 == c1 else t1
            # walking the bigon boundary turns the same way at both corners
            if (s1 - ty1) % 4 == (ty2 - s2) % 4:
                return (c1, c2)
    return None


def simplify_r1_r2(d: LinkDiagram) -> LinkDiagram:
    """Remove kinks and cancelling bigons until none are left."""
    while True:
        i = find_r1(d)
        if i is not None:
            d = _remove_crossings(d, {i: _pass_through(d.crossings[i])})
            continue
        pair = find_r2(d)
        if pair is not None:
            d = _remove_crossings(
                d, {c: _pass_through(d.crossings[c]) for c in pair}
            )
            continue
        return d


# --------------------------------------------------------------------------
# connected sum


def connected_sum(
    d1: LinkDiagram, arc1: int | None, d2: LinkDiagram, arc2: int | None
) -> LinkDiagram:
    """
    Cut ``arc1`` of ``d1`` and ``arc2`` of ``d2`` and splice the ends so the
    orientations agree. Pass ``None`` to use a free loop of that diagram.
    The arcs of ``d2`` are shifted past those of ``d1``.
    """
    for d, arc, name in ((d1, arc1, "first"), (d2, arc2, "second")):
        if arc is None:
            if d.free_loops == 0:
                raise DiagramError(f"the {name} diagram has no free loop to cut")
        elif arc not in d.arcs:
            raise DiagramError(f"arc {arc} is not in the {name} diagram")
    if arc1 is None or arc2 is None:
        # cutting a free circle and splicing it in changes nothing else
        return LinkDiagram(
            disjoint_union(d1, d2).crossings, d1.free_loops + d2.free_loops - 1
        )
    shift = max(d1.arcs)
    arc2 += shift
    moved = [x.relabel(lambda a: a + shift) for x in d2.crossings]
    first = [_replace_head(x, arc1, arc2) for x in d1.crossings]
    second = [_replace_head(x, arc2, arc1) for x in moved]
    return LinkDiagram(tuple(first + second), d1.free_loops + d2.free_loops)


def _replace_head(x: Crossing, old: int, new: int) -> Crossing:
    if x.under_in == old:
        return x._replace(a=new)
    if x.over_in == old:
        return x._replace(d=new) if x.sign > 0 else x._replace(b=new)
    return x


# --------------------------------------------------------------------------
# comparison


def is_isomorphic(d1: LinkDiagram, d2: LinkDiagram) -> bool:
    """
    Equality up to relabeling arcs and reordering crossings. Components are
    matched by backtracking over the image of each component's first arc.
    """
    if (len(d1), d1.free_loops) != (len(d2), d2.free_loops):
        return False
    target = sorted(d2.crossings)
    comps1 = d1.components()
    comps2 = d2.components()
    if sorted(map(len, comps1)) != sorted(map(len, comps2)):
        return False

    def search(k: int, mapping: dict[int, int], used: set[int]) -> bool:
        if k == len(comps1):
            return sorted(x.relabel(mapping.__getitem__) for x in d1.crossings) == target
        cyc = comps1[k]
        for j, other in enumerate(comps2):
            if j in used or len(other) != len(cyc):
                continue
            for shift in range(len(other)):
                extra = {a: other[(shift + t) % len(other)] for t, a in enumerate(cyc)}
                if search(k + 1, {**mapping, **extra}, used | {j}):
                    return True
        return False

    return search(0, {}, set())


# --------------------------------------------------------------------------
# PD text format


def to_pd(d: LinkDiagram) -> str:
    lines = [f"pd {len(d.arcs)} {d.free_loops}"]
    lines += [f"x {x.a} {x.b} {x.c} {x.d} {x.sign}" for x in d.crossings]
    lines += [f"s {a} {b}" for a, b in sorted(d.successor.items())]
    return "\n".join(lines) + "\n"


def parse_pd(text: str) -> LinkDiagram:
    """
    Read the PD text format. Blank lines and ``#`` comments are skipped.
    Successor lines, when given, must agree with the crossings.
    """
    header = None
    crossings = []
    succ = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, *fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise DiagramError(f"line {lineno}: non-integer field in {raw!r}") from None
        if tag == "pd" and len(nums) == 2 and header is None:
            header = nums
        elif tag == "x" and len(nums) == 5:
            crossings.append(Crossing(*nums))
        elif tag == "s" and len(nums) == 2:
            if nums[0] in succ:
                raise DiagramError(f"line {lineno}: second successor for arc {nums[0]}")
            succ[nums[0]] = nums[1]
        else:
            raise DiagramError(f"line {lineno}: cannot read {raw!r}")
    if header is None:
        raise DiagramError("missing 'pd <arcs> <free-loops>' header")
    d = LinkDiagram(tuple(crossings), header[1])
    if len(d.arcs) != header[0]:
        raise DiagramError(f"header declares {header[0]} arcs, crossings use {len(d.arcs)}")
    if succ and succ != d.successor:
        raise DiagramError("successor lines disagree with the crossings")
    return d


BUNDLED = ("unknot", "unlink2", "hopf", "trefoil", "three_twist", "trefoil_braid", "unknotting")


def bundled_diagram(name: str) -> LinkDiagram:
    """
    Load one of the PD files shipped with the package (see ``BUNDLED``).
    The knots are stored in the chirality with all crossings positive:
    ``trefoil`` is the three-crossing trefoil, ``three_twist``
    the five-crossing twist knot, ``trefoil_braid`` the four-crossing
    trefoil closed from a braid, and ``unknotting`` the trefoil with one
    crossing switched.
    """
    from importlib.resources import files

    if name not in BUNDLED:
        raise DiagramError(f"no bundled diagram named {name!r}")
    return parse_pd(files("braidknot.data").joinpath(f"{name}.pd").read_text())
