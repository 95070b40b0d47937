"""Input validation for the array-based estimator API.

A batch of quads is an integer array of shape ``(n_quads, 4, n)`` with
entries in {+1, -1}.
"""

from __future__ import annotations

import numpy as np

from .seqcore import BinarySequence
from .williamson import WilliamsonQuad


def _coerce(item):
    if isinstance(item, WilliamsonQuad):
        return [list(s.entries) for s in item]
    if len(item) == 4 and all(isinstance(s, (str, BinarySequence)) for s in item):
        return [list(BinarySequence.from_string(s).entries) if isinstance(s, str)
                else list(s.entries) for s in item]
    return item


def check_quad_array(X, *, require_odd: bool = False) -> np.ndarray:
    """Coerce ``X`` to an ``int64`` array of shape ``(n_quads, 4, n)``.

    Accepts arrays, nested lists, ``WilliamsonQuad`` objects, or 4-tuples of
    '+'/'-' strings.  A single quad (2-D input) is rejected; wrap it in a list.
    """
    if isinstance(X, np.ndarray):
        arr = X
    else:
        try:
            arr = np.array([_coerce(item) for item in X])
        except (TypeError, ValueError) as exc:
            raise ValueError(f"could not interpret input as quads: {exc}") from None
    if arr.ndim != 3 or arr.shape[1] != 4:
        raise ValueError(f"expected shape (n_quads, 4, n), got {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[2] == 0:
        raise ValueError(f"empty input of shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.number) or not np.isin(arr, (1, -1)).all():
        raise ValueError("entries must be +1 or -1")
    if require_odd and arr.shape[2] % 2 == 0:
        raise ValueError("doubling requires odd order")
    return arr.astype(np.int64)


def array_to_quads(arr: np.ndarray) -> list[WilliamsonQuad]:
    return [
        WilliamsonQuad(*(BinarySequence(tuple(int(x) for x in row)) for row in q))
        for q in arr
    ]


def quads_to_array(quads) -> np.ndarray:
    return np.array([[list(s.entries) for s in q] for q in quads], dtype=np.int64)
