"""Sign-bit packing with popcount correlation.

Bit ``k`` of the packed integer is set when entry ``k`` is -1.  For two
packed words the number of disagreeing positions is the popcount of their
XOR, so ``pcf = n - 2 * popcount(x ^ rot(y, s))``.
"""

from __future__ import annotations

from .seqcore import BinarySequence, CorrelationSpectrum, SequenceError


def pack(a: BinarySequence) -> int:
    word = 0
    for k, x in enumerate(a.entries):
        if x < 0:
            word |= 1 << k
    return word


def unpack(word: int, n: int) -> BinarySequence:
    return BinarySequence(tuple(-1 if (word >> k) & 1 else 1 for k in range(n)))


def rotate_word(word: int, s: int, n: int) -> int:
    """Packed counterpart of ``seqcore.rotate``: new bit j is old bit (j + s) % n."""
    s %= n
    mask = (1 << n) - 1
    return ((word >> s) | (word << (n - s))) & mask


def pcf_packed(x: int, y: int, s: int, n: int) -> int:
    return n - 2 * (x ^ rotate_word(y, s, n)).bit_count()


def paf_packed(x: int, s: int, n: int) -> int:
    return pcf_packed(x, x, s, n)


def paf_spectrum_packed(a: BinarySequence) -> CorrelationSpectrum:
    n = len(a)
    w = pack(a)
    return CorrelationSpectrum(tuple(paf_packed(w, s, n) for s in range(n)))


def pcf_spectrum_packed(a: BinarySequence, b: BinarySequence) -> CorrelationSpectrum:
    if len(a) != len(b):
        raise SequenceError(f"length mismatch: {len(a)} != {len(b)}")
    n = len(a)
    x, y = pack(a), pack(b)
    return CorrelationSpectrum(tuple(pcf_packed(x, y, s, n) for s in range(n)))
