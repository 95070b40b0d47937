"""Exhaustive search for Williamson quads of small odd order.

The candidate space is every ordered 4-tuple of symmetric sequences.  Work
is sharded by the index of the first sequence; each shard is independent
and shards are merged in index order, so output does not depend on the
number of workers.
"""

from __future__ import annotations

import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .seqcore import BinarySequence, OddOrderError, paf_spectrum, row_sum
from .williamson import WilliamsonQuad, normalize_quad

logger = logging.getLogger(__name__)

DEFAULT_LIMIT = 13


class SearchLimitError(ValueError):
    """Requested order exceeds the configured search limit."""


@dataclass(frozen=True)
class SearchReport:
    order: int
    raw_count: int
    raw_quads: tuple[WilliamsonQuad, ...]
    normalized_quads: tuple[WilliamsonQuad, ...]
    candidates_examined: int
    elapsed: float
    pruned: bool = True

    def same_result(self, other: "SearchReport") -> bool:
        """Equality ignoring timing and pruning statistics."""
        return (
            self.order == other.order
            and self.raw_count == other.raw_count
            and self.raw_quads == other.raw_quads
            and self.normalized_quads == other.normalized_quads
        )


def _check_order(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise TypeError(f"order must be an integer, got {n!r}")
    if n < 1 or n % 2 == 0:
        raise OddOrderError(f"search requires a positive odd order, got {n}")


def enumerate_symmetric(n: int) -> Iterator[BinarySequence]:
    """Yield the ``2**((n+1)//2)`` symmetric sequences of odd length ``n``.

    Order is lexicographic in the free prefix ``x[0..(n-1)//2]`` with + before -.
    """
    _check_order(n)
    half = (n - 1) // 2
    for prefix in itertools.product((1, -1), repeat=half + 1):
        tail = prefix[1:][::-1]
        yield BinarySequence(prefix + tail)


def sum_of_squares_filter(sums, n: int) -> bool:
    """Necessary condition: the squared row sums of a Williamson quad total 4n."""
    return sum(int(x) ** 2 for x in sums) == 4 * n


def _shard(args) -> tuple[list[tuple[int, int, int, int]], int]:
    i, spectra, sums, n, prune = args
    m = len(sums)
    if prune:
        sq = sums * sums
        target = 4 * n - sq[i]
        ok = sq[:, None, None] + sq[None, :, None] + sq[None, None, :] == target
        j, k, l = np.nonzero(ok)
        examined = len(j)
        # accumulate shift by shift, dropping tuples at the first nonzero sum
        for s in range(spectra.shape[1]):
            total = spectra[i, s] + spectra[j, s] + spectra[k, s] + spectra[l, s]
            keep = total == 0
            j, k, l = j[keep], k[keep], l[keep]
            if len(j) == 0:
                break
    else:
        examined = m ** 3
        p = spectra
        total = p[i] + p[:, None, None, :] + p[None, :, None, :] + p[None, None, :, :]
        j, k, l = np.nonzero((total == 0).all(axis=-1))
    return [(i, int(a), int(b), int(c)) for a, b, c in zip(j, k, l)], examined


def search_williamson(
    n: int,
    *,
    prune: bool = True,
    jobs: int = 1,
    limit: int = DEFAULT_LIMIT,
) -> SearchReport:
    """Find every ordered Williamson quad of odd order ``n``.

    With ``prune=False`` each tuple has its full PAF-sum vector evaluated,
    with no row-sum filter and no early exit.  ``candidates_examined``
    counts tuples that reached PAF evaluation.
    """
    _check_order(n)
    if n > limit:
        raise SearchLimitError(f"order {n} exceeds search limit {limit}")
    start = time.perf_counter()
    seqs = list(enumerate_symmetric(n))
    half = n // 2
    spectra = np.array(
        [paf_spectrum(x).values[1 : half + 1] for x in seqs], dtype=np.int32
    ).reshape(len(seqs), half)
    sums = np.array([row_sum(x) for x in seqs], dtype=np.int32)
    tasks = [(i, spectra, sums, n, prune) for i in range(len(seqs))]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_shard, tasks))
    else:
        results = [_shard(t) for t in tasks]

    hits = sorted(h for found, _ in results for h in found)
    raw = tuple(WilliamsonQuad(*(seqs[t] for t in h)) for h in hits)
    normalized = tuple(sorted({normalize_quad(q) for q in raw}, key=lambda q: q.strings()))
    elapsed = time.perf_counter() - start
    logger.info("order %d: %d raw, %d normalized in %.2fs", n, len(raw), len(normalized), elapsed)
    return SearchReport(
        order=n,
        raw_count=len(raw),
        raw_quads=raw,
        normalized_quads=normalized,
        candidates_examined=sum(e for _, e in results),
        elapsed=elapsed,
        pruned=prune,
    )
