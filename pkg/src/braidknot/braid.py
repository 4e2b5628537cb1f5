"""
Braid words in the Artin generators.

A word on ``n`` strands is a sequence of nonzero integers: ``+i`` stands for
the generator crossing strands ``i`` and ``i + 1`` and ``-i`` for its inverse.
The text form is the letters separated by whitespace, e.g. ``"1 -2"``; the
strand count is always supplied separately.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce

from .algebra import Permutation, compose


class BraidError(ValueError):
    """Raised on malformed braid words or inapplicable rewrites."""


class BraidParseError(BraidError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if self.strands < 1:
            raise BraidError("a braid needs at least one strand")
        for ell in letters:
            if ell == 0 or abs(ell) >= self.strands:
                raise BraidError(f"letter {ell} out of range for {self.strands} strands")

    @classmethod
    def parse(cls, text: str, strands: int) -> BraidWord:
        letters = []
        for tok in text.split():
            try:
                ell = int(tok)
            except ValueError:
                raise BraidParseError(f"token {tok!r} is not an integer") from None
            if ell == 0:
                raise BraidParseError(f"token {tok!r}: zero is not a generator")
            if abs(ell) >= strands:
                raise BraidParseError(
                    f"token {tok!r}: index out of range for {strands} strands"
                )
            letters.append(ell)
        return cls(strands, tuple(letters))

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands, ())

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __pow__(self, k: int) -> BraidWord:
        return power(self, k)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-ell for ell in reversed(self.letters)))

    def exponent_sum(self) -> int:
        return sum(1 if ell > 0 else -1 for ell in self.letters)

    def permutation(self) -> Permutation:
        """The induced permutation; crossing signs are forgotten."""
        images = list(range(1, self.strands + 1))
        for ell in self.letters:
            i = abs(ell)
            # right-multiplying by t_i swaps the values i and i+1
            images = [i + 1 if v == i else i if v == i + 1 else v for v in images]
        return Permutation(tuple(images))

    def is_pure(self) -> bool:
        return self.permutation().is_identity()

    def closure_components(self) -> int:
        return len(self.permutation().cycles())


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise BraidError(f"cannot stack {a.strands}-strand and {b.strands}-strand braids")
    return BraidWord(a.strands, a.letters + b.letters)


def power(a: BraidWord, k: int) -> BraidWord:
    if k < 0:
        raise BraidError("power must be nonnegative")
    return BraidWord(a.strands, a.letters * k)


def parallel(*words: BraidWord) -> BraidWord:
    """Place braids side by side, left to right."""
    if not words:
        raise BraidError("parallel needs at least one braid")
    strands = 0
    letters: list[int] = []
    for w in words:
        letters.extend(ell + strands if ell > 0 else ell - strands for ell in w.letters)
        strands += w.strands
    return BraidWord(strands, tuple(letters))


def free_reduce(a: BraidWord) -> BraidWord:
    """Cancel adjacent ``i, -i`` pairs until none remain."""
    stack: list[int] = []
    for ell in a.letters:
        if stack and stack[-1] == -ell:
            stack.pop()
        else:
            stack.append(ell)
    return BraidWord(a.strands, tuple(stack))


def cyclic_free_reduce(a: BraidWord) -> BraidWord:
    """Free reduction followed by cancelling a first letter against the last."""
    letters = list(free_reduce(a).letters)
    while len(letters) >= 2 and letters[0] == -letters[-1]:
        letters = letters[1:-1]
    return BraidWord(a.strands, tuple(letters))


class Relation(enum.Enum):
    YANG_BAXTER = "yang-baxter"
    FAR_COMMUTE = "far-commute"


def rewrite(a: BraidWord, position: int, rule: Relation) -> BraidWord:
    """
    Apply one braid relation at ``position`` (0-based), in whichever direction
    matches.

    >>> str(rewrite(BraidWord(3, (1, 2, 1)), 0, Relation.YANG_BAXTER))
    '2 1 2'
    """
    letters = list(a.letters)
    if rule is Relation.YANG_BAXTER:
        window = letters[position:position + 3]
        if position < 0 or len(window) != 3:
            raise BraidError(f"no three letters at position {position}")
        x, y, z = window
        same_sign = (x > 0) == (y > 0) == (z > 0)
        if not (same_sign and x == z and abs(abs(x) - abs(y)) == 1):
            raise BraidError(f"letters {window} do not match a Yang-Baxter side")
        letters[position:position + 3] = [y, x, y]
    elif rule is Relation.FAR_COMMUTE:
        window = letters[position:position + 2]
        if position < 0 or len(window) != 2:
            raise BraidError(f"no two letters at position {position}")
        x, y = window
        if abs(abs(x) - abs(y)) <= 1:
            raise BraidError(f"letters {window} do not commute")
        letters[position:position + 2] = [y, x]
    else:
        raise BraidError(f"unknown relation {rule!r}")
    return BraidWord(a.strands, tuple(letters))


def rewrite_sites(a: BraidWord) -> list[tuple[int, Relation]]:
    """Every position where :func:`rewrite` applies."""
    sites = []
    for pos in range(len(a)):
        for rule in Relation:
            try:
                rewrite(a, pos, rule)
            except BraidError:
                continue
            sites.append((pos, rule))
    return sites


def flip(a: BraidWord) -> BraidWord:
    """Swap generator ``i`` with ``n - i``, keeping signs."""
    n = a.strands
    return BraidWord(n, tuple(n - ell if ell > 0 else -(n + ell) for ell in a.letters))


def cyclic_shift(a: BraidWord, k: int) -> BraidWord:
    """Rotate the letters ``k`` places to the left (conjugation)."""
    if not a.letters:
        return a
    k %= len(a.letters)
    return BraidWord(a.strands, a.letters[k:] + a.letters[:k])


def commutation_normal_form(a: BraidWord) -> tuple[int, ...]:
    """
    Lexicographically least word reachable by far-commutation swaps alone.

    Greedy: repeatedly emit the smallest letter (by index, then sign) that
    could be moved to the front, i.e. that commutes with every letter before
    it. Two words agree here exactly when far-commutation relates them.
    """
    rest = list(a.letters)
    out = []
    while rest:
        best = None
        for idx, ell in enumerate(rest):
            if all(abs(abs(ell) - abs(prev)) > 1 for prev in rest[:idx]):
                key = (abs(ell), ell)
                if best is None or key < best[0]:
                    best = (key, idx)
        out.append(rest.pop(best[1]))
    return tuple(out)


def is_flip_symmetric(a: BraidWord) -> bool:
    return commutation_normal_form(flip(a)) == commutation_normal_form(a)


# --------------------------------------------------------------------------
# classification and crossing numbers


class BraidKind(enum.Enum):
    POSITIVE = "positive"
    ALTERNATING = "alternating"
    HOMOGENEOUS = "homogeneous"
    NON_HOMOGENEOUS = "non-homogeneous"


@dataclass(frozen=True)
class BraidClass:
    """
    Syntactic class of a word. ``signs[i - 1]`` is the sign used by generator
    ``i``: +1, -1, or 0 when the generator does not occur. For a
    non-homogeneous word the entries of mixed generators are ``None``.
    """

    kind: BraidKind
    signs: tuple[int | None, ...]

    @property
    def is_homogeneous(self) -> bool:
        return self.kind is not BraidKind.NON_HOMOGENEOUS

    @property
    def is_positive(self) -> bool:
        return self.is_homogeneous and all(s in (0, 1) for s in self.signs)

    @property
    def is_alternating(self) -> bool:
        return self.is_homogeneous and all(
            s == 0 or s == (1 if i % 2 else -1) for i, s in enumerate(self.signs, 1)
        )

    def sign_vector(self) -> str:
        def fmt(s):
            return {1: "+1", -1: "-1", 0: "0", None: "?"}[s]

        return "(" + ",".join(fmt(s) for s in self.signs) + ")"

    def __str__(self) -> str:
        return f"{self.kind.value} {self.sign_vector()}"


def classify(a: BraidWord) -> BraidClass:
    used: dict[int, set[int]] = {}
    for ell in a.letters:
        used.setdefault(abs(ell), set()).add(1 if ell > 0 else -1)
    signs: list[int | None] = []
    mixed = False
    for i in range(1, a.strands):
        s = used.get(i, set())
        if len(s) == 2:
            mixed = True
            signs.append(None)
        else:
            signs.append(next(iter(s)) if s else 0)
    if mixed:
        return BraidClass(BraidKind.NON_HOMOGENEOUS, tuple(signs))
    probe = BraidClass(BraidKind.HOMOGENEOUS, tuple(signs))
    if probe.is_positive:
        return BraidClass(BraidKind.POSITIVE, probe.signs)
    if probe.is_alternating:
        return BraidClass(BraidKind.ALTERNATING, probe.signs)
    return probe


TURAEV = "Turaev 1988"
ALEKSEEV_MAMEDOV = "Alekseev-Mamedov 2019"


@dataclass(frozen=True)
class CrossingCertificate:
    """
    Either a certified minimal crossing number (``certified``) or only the
    lower bound given by the inversion count of the induced permutation.
    """

    certified: bool
    count: int
    kind: BraidKind
    theorem: str | None = None

    def __str__(self) -> str:
        if self.certified:
            return f"certified {self.count} ({self.kind.value}: {self.theorem})"
        return f"lower-bound {self.count}"


def crossing_certificate(a: BraidWord) -> CrossingCertificate:
    cls = classify(a)
    if cls.kind is BraidKind.ALTERNATING:
        return CrossingCertificate(True, len(a), cls.kind, TURAEV)
    if cls.is_homogeneous:
        return CrossingCertificate(True, len(a), cls.kind, ALEKSEEV_MAMEDOV)
    return CrossingCertificate(False, a.permutation().inversions(), cls.kind)


# --------------------------------------------------------------------------
# Markov moves


def destabilize(a: BraidWord) -> BraidWord | None:
    """
    Remove the last strand when its generator ``n - 1`` occurs exactly once
    (either sign). Returns ``None`` when the move does not apply.
    """
    top = a.strands - 1
    if top < 1:
        return None
    where = [k for k, ell in enumerate(a.letters) if abs(ell) == top]
    if len(where) != 1:
        return None
    rotated = cyclic_shift(a, where[0] + 1)
    return BraidWord(a.strands - 1, rotated.letters[:-1])


def markov_simplify(a: BraidWord) -> BraidWord:
    """
    Greedy closure simplifier: free and cyclic reduction plus destabilization
    at either end of the braid. Best effort, not a normal form.
    """
    current = a
    while True:
        current = cyclic_free_reduce(current)
        smaller = destabilize(current)
        if smaller is None:
            flipped = destabilize(flip(current))
            smaller = flip(flipped) if flipped is not None else None
        if smaller is None:
            return current
        current = smaller


def permutation_of_parallel(*words: BraidWord) -> Permutation:
    """Induced permutation of :func:`parallel`, assembled blockwise."""
    return reduce(Permutation.parallel, (w.permutation() for w in words))


def permutation_by_letters(a: BraidWord) -> Permutation:
    """Induced permutation as an explicit product of transpositions."""
    n = a.strands
    return reduce(
        compose,
        (Permutation.transposition(n, abs(ell)) for ell in a.letters),
        Permutation.identity(n),
    )
