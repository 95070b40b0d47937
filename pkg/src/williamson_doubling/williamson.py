"""Williamson quads: verification, doubling and normalisation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .seqcore import (
    BinarySequence,
    OddOrderError,
    SequenceError,
    half_rotate,
    interleave,
    make_sequence,
    negate,
    paf,
    paf_spectrum,
)

LABELS = ("A", "B", "C", "D")


class NotWilliamsonError(ValueError):
    """Raised when an operation requires a verified Williamson quad."""


@dataclass(frozen=True)
class WilliamsonQuad:
    """Ordered 4-tuple of equal-length sequences.

    Order matters: doubling pairs ``a`` with ``b`` and ``c`` with ``d``.
    """

    a: BinarySequence
    b: BinarySequence
    c: BinarySequence
    d: BinarySequence

    def __post_init__(self) -> None:
        seqs = [make_sequence(x) for x in (self.a, self.b, self.c, self.d)]
        for name, s in zip("abcd", seqs):
            object.__setattr__(self, name, s)
        lengths = {len(s) for s in seqs}
        if len(lengths) != 1:
            raise SequenceError(f"quad sequences differ in length: {sorted(lengths)}")

    @classmethod
    def from_strings(cls, *rows: str) -> "WilliamsonQuad":
        if len(rows) == 1 and not isinstance(rows[0], str):
            rows = tuple(rows[0])
        if len(rows) != 4:
            raise SequenceError(f"a quad needs 4 sequences, got {len(rows)}")
        return cls(*(BinarySequence.from_string(r) for r in rows))

    @property
    def order(self) -> int:
        return len(self.a)

    @property
    def sequences(self) -> tuple[BinarySequence, ...]:
        return (self.a, self.b, self.c, self.d)

    def __iter__(self) -> Iterator[BinarySequence]:
        return iter(self.sequences)

    def strings(self) -> tuple[str, ...]:
        return tuple(str(s) for s in self.sequences)

    def __repr__(self) -> str:
        return "WilliamsonQuad({})".format(", ".join(repr(s) for s in self.strings()))


@dataclass(frozen=True)
class VerificationReport:
    symmetry_failures: tuple[tuple[str, int], ...] = field(default=())
    paf_violations: tuple[tuple[int, int], ...] = field(default=())

    @property
    def is_williamson(self) -> bool:
        return not self.symmetry_failures and not self.paf_violations

    def __bool__(self) -> bool:
        return self.is_williamson


def paf_sum(q: WilliamsonQuad, s: int) -> int:
    return sum(paf(x, s) for x in q)


def verify_quad(q: WilliamsonQuad, full_range: bool = False) -> VerificationReport:
    """Check symmetry of all four rows and the vanishing PAF sum.

    Shifts ``1..n//2`` are checked, which suffices because the PAF is
    symmetric in ``s``; ``full_range=True`` checks ``1..n-1`` instead.
    Every violation is reported, not only the first.
    """
    n = q.order
    sym = []
    for label, x in zip(LABELS, q):
        e = x.entries
        sym += [(label, k) for k in range(1, n) if e[k] != e[n - k]]
    total = [0] * n
    for x in q:
        for s, v in enumerate(paf_spectrum(x)):
            total[s] += v
    top = n - 1 if full_range else n // 2
    viol = tuple((s, total[s]) for s in range(1, top + 1) if total[s] != 0)
    return VerificationReport(tuple(sym), viol)


def double(q: WilliamsonQuad) -> WilliamsonQuad:
    """Williamson quad of order ``2n`` from one of odd order ``n``.

    Returns ``(A x B', (-A) x B', C x D', (-C) x D')`` with ``x`` the
    perfect shuffle and ``'`` the half rotation.  Only odd orders work, so
    the result cannot itself be doubled.
    """
    if q.order % 2 == 0:
        raise OddOrderError("doubling requires odd order")
    if not verify_quad(q).is_williamson:
        raise NotWilliamsonError("input is not a Williamson quad")
    b1, d1 = half_rotate(q.b), half_rotate(q.d)
    return WilliamsonQuad(
        interleave(q.a, b1),
        interleave(negate(q.a), b1),
        interleave(q.c, d1),
        interleave(negate(q.c), d1),
    )


def normalize_quad(q: WilliamsonQuad) -> WilliamsonQuad:
    """Flip each row to start with +1, then sort rows ('+' before '-')."""
    rows = [negate(x) if x[0] < 0 else x for x in q]
    rows.sort(key=str)
    return WilliamsonQuad(*rows)

