"""
Exact combinatorial primitives: permutations in one-line notation and
integer Laurent polynomials in a single variable.

Permutations act on ``{1, ..., n}``. A permutation is stored as its image
sequence, so ``Permutation((2, 3, 1))`` sends 1 to 2, 2 to 3 and 3 to 1.
Products are read left to right: ``a * b`` first applies ``a`` and then ``b``.

>>> Permutation((2, 3, 1, 5, 4)) * Permutation((3, 5, 2, 1, 4))
Permutation((5, 2, 3, 4, 1))
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Mapping, Sequence


class DegreeMismatchError(ValueError):
    """Raised when permutations of different degrees are combined."""


class VariableMismatchError(ValueError):
    """Raised when Laurent polynomials in different variables are combined."""


class ExponentConventionError(ValueError):
    """Raised when an exponent rescaling does not land on integers."""


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n < 1:
            raise ValueError("a permutation needs degree at least 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"{images} is not a rearrangement of 1..{n}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        if n < 1:
            raise ValueError("degree must be positive")
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> Permutation:
        """The elementary transposition swapping ``i`` and ``i + 1``."""
        if not 1 <= i < n:
            raise ValueError(f"transposition index {i} out of range for degree {n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse the text form ``"(3,1,2)"``."""
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"permutation must be parenthesized: {text!r}")
        try:
            images = tuple(int(tok) for tok in body[1:-1].split(","))
        except ValueError:
            raise ValueError(f"malformed permutation: {text!r}") from None
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.images)) + ")"

    def __repr__(self) -> str:
        return f"Permutation({self.images})"

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = result * base
        return result

    def __or__(self, other: Permutation) -> Permutation:
        return self.parallel(other)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, v in enumerate(self.images, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """
        Disjoint cycles, each starting at its smallest element, ordered by
        that element. Fixed points appear as singleton cycles.

        >>> Permutation((3, 1, 2, 5, 6, 4)).cycles()
        [(1, 3, 2), (4, 5, 6)]
        """
        seen = set()
        cycles = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            cycles.append(tuple(cycle))
        return cycles

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def inversions(self) -> int:
        im = self.images
        return sum(1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j])

    def transpositions(self) -> list[int]:
        """
        Indices ``[i1, ..., ik]`` with ``self == t_i1 * ... * t_ik`` where
        ``t_i`` swaps ``i`` and ``i + 1``. The word has minimal length.

        Built by selection sort: the smallest value that is out of place is
        moved one position to the left, recording the swapped position.

        >>> Permutation((2, 3, 1, 5, 4)).transpositions()
        [2, 1, 4]
        """
        seq = list(self.images)
        word = []
        for value in range(1, len(seq) + 1):
            pos = seq.index(value)
            while pos > value - 1:
                seq[pos - 1], seq[pos] = seq[pos], seq[pos - 1]
                word.append(pos)  # 1-based index of the left slot is pos
                pos -= 1
        return word

    def parallel(self, other: Permutation) -> Permutation:
        """Block sum: ``self`` on the first strands, ``other`` shifted after it."""
        shift = self.degree
        return Permutation(self.images + tuple(v + shift for v in other.images))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` first, then ``b``."""
    if a.degree != b.degree:
        raise DegreeMismatchError(f"cannot compose degree {a.degree} with degree {b.degree}")
    return Permutation(tuple(b.images[v - 1] for v in a.images))


def compose_all(perms: Iterable[Permutation], n: int) -> Permutation:
    return reduce(compose, perms, Permutation.identity(n))


# --------------------------------------------------------------------------
# Laurent polynomials

_TERM = re.compile(r"([+-])?(\d+)?(?:([A-Za-z])(?:\^(-?\d+))?)?")


class LaurentPoly:
    """
    Integer Laurent polynomial in one variable.

    The variable name is a display tag; equality and hashing look only at the
    exponent-to-coefficient map. Arithmetic between polynomials with different
    tags raises :class:`VariableMismatchError`. Plain ``int`` operands are
    treated as constants.

    >>> z = LaurentPoly.monomial(1, 1, "z")
    >>> str((1 + z**2) * z * (1 + z**2))
    'z^5 + 2z^3 + z'
    """

    __slots__ = ("_terms", "_var", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "x"):
        clean = {}
        for e, c in (terms or {}).items():
            if c:
                clean[int(e)] = int(c)
        self._terms = clean
        self._var = var
        self._hash = None

    @classmethod
    def constant(cls, c: int, var: str = "x") -> LaurentPoly:
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, coefficient: int, exponent: int, var: str = "x") -> LaurentPoly:
        return cls({exponent: coefficient}, var)

    @property
    def var(self) -> str:
        return self._var

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs by descending exponent."""
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def max_degree(self) -> int:
        return max(self._terms)

    @property
    def min_degree(self) -> int:
        return min(self._terms)

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other._var != self._var:
                raise VariableMismatchError(f"variables differ: {self._var!r} vs {other._var!r}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self._var)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self._var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self._var)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self._var)

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, self._var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial inverse needs a unit coefficient")
            return LaurentPoly({-e * -k: c ** -k}, self._var)
        result = LaurentPoly.constant(1, self._var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def substitute_inverse(self) -> LaurentPoly:
        """Replace the variable by its inverse: exponent ``e`` becomes ``-e``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()}, self._var)

    def negate_variable(self) -> LaurentPoly:
        """Replace the variable ``v`` by ``-v``."""
        return LaurentPoly({e: -c if e % 2 else c for e, c in self._terms.items()}, self._var)

    def rescale_exponents(self, num: int, den: int, var: str) -> LaurentPoly:
        """
        Map each exponent ``e`` to ``e * num / den`` and retag the variable.

        >>> A = LaurentPoly({-10: 1, -2: -1}, "A")
        >>> str(A.rescale_exponents(-1, 2, "q"))
        'q^5 - q'
        """
        if den <= 0:
            raise ValueError("den must be positive")
        out = {}
        for e, c in self._terms.items():
            scaled, rem = divmod(e * num, den)
            if rem:
                raise ExponentConventionError(
                    f"exponent {e} times {num}/{den} is not an integer"
                )
            out[scaled] = c
        return LaurentPoly(out, var)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + self._var
                if e != 1:
                    body += f"^{e}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, var={self._var!r})"

    @classmethod
    def parse(cls, text: str, var: str | None = None) -> LaurentPoly:
        """
        Parse the canonical text form, e.g. ``"-q^8 + q^6 + q^2"`` or ``"0"``.

        >>> LaurentPoly.parse("-q - q^-1").terms == {1: -1, -1: -1}
        True
        """
        if re.search(r"[\w^]\s+[\w^]", text):
            raise ValueError(f"missing operator between terms in {text!r}")
        compact = re.sub(r"\s+", "", text)
        if not compact:
            raise ValueError("empty polynomial text")
        terms: dict[int, int] = {}
        seen_var = var
        pos = 0
        while pos < len(compact):
            m = _TERM.match(compact, pos)
            sign, digits, name, power = m.groups()
            if m.end() == pos or (digits is None and name is None):
                raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
            if pos > 0 and sign is None:
                raise ValueError(f"missing sign between terms in {text!r}")
            if name is not None:
                if seen_var is not None and name != seen_var:
                    raise VariableMismatchError(f"unexpected variable {name!r} in {text!r}")
                seen_var = name
            coef = int(digits) if digits is not None else 1
            if sign == "-":
                coef = -coef
            if name is None:
                exp = 0
            else:
                exp = int(power) if power is not None else 1
            terms[exp] = terms.get(exp, 0) + coef
            pos = m.end()
        return cls(terms, seen_var or "x")

    def to_json(self) -> dict:
        return {"variable": self._var, "terms": [[e, c] for e, c in self.items()]}


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def poly_neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def product(polys: Sequence[LaurentPoly], var: str) -> LaurentPoly:
    return reduce(poly_mul, polys, LaurentPoly.constant(1, var))
