"""Exact +/-1 sequences, periodic correlation and the three sequence operations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np


class SequenceError(ValueError):
    """Raised for malformed sequences or incompatible sequence arguments."""


class OddOrderError(ValueError):
    """Raised when an operation that needs an odd length gets an even one."""


_CHAR = {1: "+", -1: "-"}
_UNITS = frozenset((1, -1))
_UNIT_INTS = frozenset((int,))
_SIGN = {"+": 1, "-": -1}


@dataclass(frozen=True)
class BinarySequence:
    """Immutable sequence of signs, stored as a tuple of Python ints."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        if not entries:
            raise SequenceError("empty sequence")
        if _UNIT_INTS.issuperset(map(type, entries)) and _UNITS.issuperset(entries):
            object.__setattr__(self, "entries", entries)
            return
        for k, x in enumerate(entries):
            # bools and floats equal to 1 are rejected too
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)) or x not in (1, -1):
                raise SequenceError(f"non-unit entry {x!r} at index {k}")
        object.__setattr__(self, "entries", tuple(int(x) for x in entries))

    @classmethod
    def from_string(cls, text: str) -> "BinarySequence":
        text = text.strip()
        if not text:
            raise SequenceError("empty sequence")
        try:
            return cls(tuple(_SIGN[c] for c in text))
        except KeyError:
            bad = next(i for i, c in enumerate(text) if c not in _SIGN)
            raise SequenceError(
                f"non-unit entry {text[bad]!r} at index {bad}"
            ) from None

    @property
    def n(self) -> int:
        return len(self.entries)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.entries, dtype=np.int64)
        arr.flags.writeable = False
        return arr

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, k: int) -> int:
        return self.entries[k]

    def __neg__(self) -> "BinarySequence":
        return negate(self)

    def __str__(self) -> str:
        return "".join(_CHAR[x] for x in self.entries)

    def __repr__(self) -> str:
        return f"BinarySequence({str(self)!r})"


@dataclass(frozen=True)
class CorrelationSpectrum:
    """PAF (or PCF) values indexed by shift ``s = 0..n-1``."""

    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, s: int) -> int:
        return self.values[s]

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


def make_sequence(signs: Iterable[int] | str) -> BinarySequence:
    """Build a validated sequence from a list of +/-1 ints or a '+'/'-' string."""
    if isinstance(signs, BinarySequence):
        return signs
    if isinstance(signs, str):
        return BinarySequence.from_string(signs)
    return BinarySequence(tuple(signs))


def _as_seq(x) -> BinarySequence:
    return x if isinstance(x, BinarySequence) else make_sequence(x)


def _check_same_length(x: BinarySequence, y: BinarySequence) -> None:
    if len(x) != len(y):
        raise SequenceError(f"length mismatch: {len(x)} != {len(y)}")


def negate(a: BinarySequence) -> BinarySequence:
    a = _as_seq(a)
    return BinarySequence(tuple(-x for x in a.entries))


def rotate(a: BinarySequence, k: int) -> BinarySequence:
    """Cyclic shift so that entry ``j`` of the result is ``a[(j + k) % n]``."""
    a = _as_seq(a)
    k %= len(a)
    return BinarySequence(a.entries[k:] + a.entries[:k])


def interleave(a: BinarySequence, b: BinarySequence) -> BinarySequence:
    """Perfect shuffle ``(a0, b0, a1, b1, ...)``."""
    a, b = _as_seq(a), _as_seq(b)
    _check_same_length(a, b)
    out: list[int] = []
    for x, y in zip(a.entries, b.entries):
        out += (x, y)
    return BinarySequence(tuple(out))


def half_rotate(a: BinarySequence) -> BinarySequence:
    """Rotate an odd-length sequence by ``(n + 1) / 2``.

    A symmetric input (``x[k] == x[n-k]``) comes out palindromic
    (``y[k] == y[n-1-k]``), which is what the doubling step needs on the
    right-hand side of the interleave.
    """
    a = _as_seq(a)
    n = len(a)
    if n % 2 == 0:
        raise OddOrderError("half_rotate requires odd order")
    return rotate(a, (n + 1) // 2)


def pcf(x: BinarySequence, y: BinarySequence, s: int) -> int:
    """Periodic cross-correlation ``sum_k x[k] * y[(k + s) % n]``."""
    x, y = _as_seq(x), _as_seq(y)
    _check_same_length(x, y)
    n = len(x)
    s %= n
    xe, ye = x.entries, y.entries
    return sum(xe[k] * ye[(k + s) % n] for k in range(n))


def paf(x: BinarySequence, s: int) -> int:
    x = _as_seq(x)
    return pcf(x, x, s)


@lru_cache(maxsize=256)
def _shift_index(n: int) -> np.ndarray:
    # row s, column k -> (k + s) % n
    idx = (np.arange(n)[None, :] + np.arange(n)[:, None]) % n
    idx.flags.writeable = False
    return idx


def pcf_spectrum(x: BinarySequence, y: BinarySequence) -> CorrelationSpectrum:
    """All ``pcf(x, y, s)`` for ``s = 0..n-1`` in one vectorised pass."""
    x, y = _as_seq(x), _as_seq(y)
    _check_same_length(x, y)
    shifted = y.array[_shift_index(len(x))]
    return CorrelationSpectrum(tuple((shifted @ x.array).tolist()))


def paf_spectrum(x: BinarySequence) -> CorrelationSpectrum:
    x = _as_seq(x)
    return pcf_spectrum(x, x)


def is_symmetric(a: BinarySequence) -> bool:
    e = _as_seq(a).entries
    n = len(e)
    return all(e[k] == e[n - k] for k in range(1, n))


def is_palindromic(a: BinarySequence) -> bool:
    e = _as_seq(a).entries
    return e == e[::-1]


def row_sum(a: BinarySequence) -> int:
    return sum(_as_seq(a).entries)


def as_sequences(items: Sequence) -> list[BinarySequence]:
    return [_as_seq(x) for x in items]
