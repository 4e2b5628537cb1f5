"""
The braided blanket as data.

Three repeating patterns fill the 36 strands of the blanket. Each is a short
braid word; a column of ``k`` vertical repetitions is that word to the power
``k``, and the columns sit side by side in the fixed order ``ABACCCABA``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .algebra import Permutation
from .braid import (
    BraidWord,
    CrossingCertificate,
    classify,
    crossing_certificate,
    is_flip_symmetric,
    parallel,
)
from .invariants import BraidInvariants, invariants_of_braid


class SchemeError(ValueError):
    pass


@dataclass(frozen=True)
class PatternSpec:
    name: str
    word: BraidWord
    copies: int
    vertical_repetitions: int

    @property
    def strands_per_copy(self) -> int:
        return self.word.strands

    @property
    def crossings_per_repetition(self) -> int:
        return len(self.word)

    @property
    def total_strands(self) -> int:
        return self.strands_per_copy * self.copies

    @property
    def total_crossings(self) -> int:
        return self.copies * self.vertical_repetitions * self.crossings_per_repetition

    def column(self) -> BraidWord:
        """One vertical column of this pattern."""
        return self.word ** self.vertical_repetitions


PATTERNS: dict[str, PatternSpec] = {
    "A": PatternSpec("A", BraidWord.parse("1 -2", 3), copies=4, vertical_repetitions=36),
    "B": PatternSpec(
        "B", BraidWord.parse("-1 -1 -1 -3 -3 -5 -5 -5 2 4", 6), copies=2, vertical_repetitions=18
    ),
    "C": PatternSpec("C", BraidWord.parse("-2 -2 1 -3", 4), copies=3, vertical_repetitions=30),
}

SCHEME = "ABACCCABA"
BLANKET_STRANDS = 36

# Flip-symmetric variant of pattern C, for comparison only; not on the blanket.
PATTERN_C_SYMMETRIC = BraidWord.parse("-2 -2 1 3", 4)


def pattern_braid(name: str) -> BraidWord:
    try:
        return PATTERNS[name].word
    except KeyError:
        raise SchemeError(f"unknown pattern {name!r}; expected one of A, B, C") from None


def validate_scheme(scheme: str) -> None:
    """
    Accept only arrangements with the tabulated copy counts that fill the
    blanket and read the same from either side.
    """
    for ch in scheme:
        pattern_braid(ch)
    for name, spec in PATTERNS.items():
        if scheme.count(name) != spec.copies:
            raise SchemeError(
                f"pattern {name} appears {scheme.count(name)} times, the blanket has {spec.copies}"
            )
    width = sum(PATTERNS[ch].strands_per_copy for ch in scheme)
    if width != BLANKET_STRANDS:
        raise SchemeError(f"scheme covers {width} strands, not {BLANKET_STRANDS}")
    if scheme != scheme[::-1]:
        raise SchemeError("scheme is not symmetric about the middle")


def blanket_braid(scheme: str = SCHEME) -> BraidWord:
    validate_scheme(scheme)
    return parallel(*(PATTERNS[ch].column() for ch in scheme))


def blanket_permutation_blockwise(scheme: str = SCHEME) -> Permutation:
    """Permutation of the blanket assembled from the per-column permutations."""
    validate_scheme(scheme)
    blocks = [PATTERNS[ch].column().permutation() for ch in scheme]
    out = blocks[0]
    for p in blocks[1:]:
        out = out | p
    return out


@dataclass(frozen=True)
class PatternRow:
    name: str
    spec: PatternSpec
    permutation: Permutation
    order: int
    certificate: CrossingCertificate
    flip_symmetric: bool
    invariants: BraidInvariants


@dataclass(frozen=True)
class BlanketReport:
    scheme: str
    total_strands: int
    total_crossings: int
    is_pure: bool
    certificate: CrossingCertificate
    rows: tuple[PatternRow, ...]
    variant_flip_symmetric: bool
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "total_strands": self.total_strands,
            "total_crossings": self.total_crossings,
            "is_pure": self.is_pure,
            "certificate": str(self.certificate),
            "patterns": [
                {
                    "name": r.name,
                    "word": str(r.spec.word),
                    "strands_per_copy": r.spec.strands_per_copy,
                    "copies": r.spec.copies,
                    "total_strands": r.spec.total_strands,
                    "vertical_repetitions": r.spec.vertical_repetitions,
                    "crossings_per_repetition": r.spec.crossings_per_repetition,
                    "total_crossings": r.spec.total_crossings,
                    "permutation": str(r.permutation),
                    "order": r.order,
                    "class": str(classify(r.spec.word)),
                    "certificate": str(r.certificate),
                    "flip_symmetric": r.flip_symmetric,
                    "closure": {
                        "components": r.invariants.components,
                        "conway": r.invariants.conway.to_json(),
                        "jones": r.invariants.jones.to_json(),
                        "exponent_sum": r.invariants.exponent_sum,
                    },
                }
                for r in self.rows
            ],
            "variant_C_symmetric": {
                "word": str(PATTERN_C_SYMMETRIC),
                "flip_symmetric": self.variant_flip_symmetric,
            },
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        head = ["Pattern", "Strands/copy", "Copies", "Total strands",
                "Repetitions", "Crossings/rep.", "Total crossings"]
        body = [
            [r.name, r.spec.strands_per_copy, r.spec.copies, r.spec.total_strands,
             r.spec.vertical_repetitions, r.spec.crossings_per_repetition,
             r.spec.total_crossings]
            for r in self.rows
        ]
        body.append(["Blanket", "", "", self.total_strands, "", "", self.total_crossings])
        lines = _table(head, body)
        lines.append("")
        lines += _table(
            ["Pattern", "Word", "P(word)", "Order", "Crossings", "Flip-symmetric"],
            [[r.name, r.spec.word, r.permutation, r.order, r.certificate,
              "yes" if r.flip_symmetric else "no"] for r in self.rows],
        )
        lines.append("")
        lines += _table(
            ["Closure", "Components", "Conway", "Jones"],
            [[f"L{k}", r.invariants.components, r.invariants.conway, r.invariants.jones]
             for k, r in enumerate(self.rows, 1)],
        )
        lines.append("")
        lines.append(f"scheme: {self.scheme}")
        lines.append(f"pure braid: {'true' if self.is_pure else 'false'}")
        lines.append(f"blanket crossings: {self.certificate}")
        lines.append(
            f"variant C' = {PATTERN_C_SYMMETRIC}: flip-symmetric "
            f"{'yes' if self.variant_flip_symmetric else 'no'} (not on the blanket)"
        )
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines)


def _table(head: list, body: list[list]) -> list[str]:
    cells = [list(map(str, head))] + [list(map(str, row)) for row in body]
    widths = [max(len(row[k]) for row in cells) for k in range(len(head))]
    out = []
    for i, row in enumerate(cells):
        out.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if i == 0:
            out.append("  ".join("-" * w for w in widths))
    return out


def blanket_report() -> BlanketReport:
    beta = blanket_braid()
    rows = tuple(
        PatternRow(
            name=name,
            spec=spec,
            permutation=spec.word.permutation(),
            order=spec.word.permutation().order(),
            certificate=crossing_certificate(spec.word),
            flip_symmetric=is_flip_symmetric(spec.word),
            invariants=invariants_of_braid(spec.word),
        )
        for name, spec in PATTERNS.items()
    )
    direct = beta.permutation()
    if direct != blanket_permutation_blockwise():
        raise AssertionError("direct and blockwise blanket permutations disagree")
    notes = (
        "the closures are computed with letter +i as a positive crossing; "
        "polynomials of the opposite chirality follow by z -> -z and q -> 1/q",
        "one more copy of pattern A would give every pattern 360 crossings, "
        "but the copy counts 5/3/4 fit no arrangement symmetric about the middle; "
        "no placement search is done",
    )
    return BlanketReport(
        scheme=SCHEME,
        total_strands=beta.strands,
        total_crossings=len(beta),
        is_pure=direct.is_identity(),
        certificate=crossing_certificate(beta),
        rows=rows,
        variant_flip_symmetric=is_flip_symmetric(PATTERN_C_SYMMETRIC),
        notes=notes,
    )
