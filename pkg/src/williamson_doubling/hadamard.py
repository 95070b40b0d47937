"""Circulant expansion, the matrix form of the Williamson identity, Hadamard arrays.

Matrices are dense ``int64`` numpy arrays with entries in {+1, -1}; all
arithmetic is exact.
"""

from __future__ import annotations

import numpy as np

from .seqcore import BinarySequence, SequenceError, is_symmetric, make_sequence
from .williamson import LABELS, NotWilliamsonError, WilliamsonQuad, verify_quad


def as_sign_matrix(m) -> np.ndarray:
    """Validate a square +/-1 matrix and return it as ``int64``."""
    arr = np.asarray(m)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise ValueError(f"expected a non-empty square matrix, got shape {arr.shape}")
    if not np.isin(arr, (1, -1)).all():
        raise ValueError("matrix entries must be +1 or -1")
    return arr.astype(np.int64)


def circulant(a: BinarySequence) -> np.ndarray:
    """Row ``i``, column ``j`` is ``a[(j - i) % n]``; row 0 is ``a`` itself."""
    a = make_sequence(a)
    n = len(a)
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return a.array[idx]


def matrix_identity_check(q: WilliamsonQuad) -> bool:
    """True iff ``A^2 + B^2 + C^2 + D^2 == 4n I`` for the circulants of ``q``."""
    for label, x in zip(LABELS, q):
        if not is_symmetric(x):
            raise SequenceError(
                f"matrix identity requires symmetric sequences (sequence {label})"
            )
    n = q.order
    total = sum(m @ m for m in map(circulant, q))
    return bool(np.array_equal(total, 4 * n * np.eye(n, dtype=np.int64)))


def williamson_array(q: WilliamsonQuad) -> np.ndarray:
    """The ``4n x 4n`` block matrix

        [[ A,  B,  C,  D],
         [-B,  A, -D,  C],
         [-C,  D,  A, -B],
         [-D, -C,  B,  A]]

    built from the circulants of a verified quad.
    """
    if not verify_quad(q).is_williamson:
        raise NotWilliamsonError("input is not a Williamson quad")
    A, B, C, D = map(circulant, q)
    return np.block([
        [A, B, C, D],
        [-B, A, -D, C],
        [-C, D, A, -B],
        [-D, -C, B, A],
    ])


def is_hadamard(m) -> bool:
    try:
        arr = as_sign_matrix(m)
    except ValueError:
        return False
    size = arr.shape[0]
    return bool(np.array_equal(arr @ arr.T, size * np.eye(size, dtype=np.int64)))
