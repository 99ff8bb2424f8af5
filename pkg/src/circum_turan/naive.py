"""Brute-force isomorphism classing of all labeled graphs on a few vertices.

Independent of the canonical-augmentation enumerator: every labeled graph on
``n`` vertices is an integer over the ``C(n,2)`` vertex pairs, and each
unvisited integer marks its whole orbit under all ``n!`` relabellings. The
orbit images are computed for every permutation at once from per-byte lookup
tables. Practical for ``n <= 7`` (2^21 labeled graphs, 5040 permutations).
"""

from __future__ import annotations

import itertools

import numpy as np

from .graph import Graph


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _image_tables(n: int) -> np.ndarray:
    """``tables[b, x, p]``: image under permutation ``p`` of byte ``b`` holding ``x``."""
    pairs = _pairs(n)
    index = {pr: e for e, pr in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    m = len(pairs)
    nbytes = max(1, (m + 7) // 8)
    # target[p, e] = bit position of the image of pair e under permutation p
    target = np.empty((len(perms), m), dtype=np.int64)
    for p, perm in enumerate(perms):
        for e, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            target[p, e] = index[(a, b) if a < b else (b, a)]
    tables = np.zeros((nbytes, 256, len(perms)), dtype=np.int64)
    values = np.arange(256)
    for b in range(nbytes):
        for off in range(8):
            e = 8 * b + off
            if e >= m:
                break
            on = (values >> off) & 1
            tables[b] |= np.outer(on, np.int64(1) << target[:, e])
    return tables


def isomorphism_classes(n: int) -> list[int]:
    """Smallest labeled mask of every isomorphism class, in increasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 7:
        raise ValueError("the naive enumerator is limited to n <= 7")
    m = n * (n - 1) // 2
    total = 1 << m
    if n <= 1:
        return [0]
    tables = _image_tables(n)
    nbytes = tables.shape[0]
    seen = np.zeros(total, dtype=bool)
    reps: list[int] = []
    chunk = 1 << 12
    for base in range(0, total, chunk):
        for off in np.flatnonzero(~seen[base:base + chunk]):
            x = base + int(off)
            if seen[x]:
                continue
            reps.append(x)
            images = tables[0, x & 255].copy()
            for b in range(1, nbytes):
                images |= tables[b, (x >> (8 * b)) & 255]
            seen[images] = True
    return reps


def class_count(n: int) -> int:
    return len(isomorphism_classes(n))


def mask_to_graph(n: int, mask: int) -> Graph:
    pairs = _pairs(n)
    return Graph.from_edges(n, [pairs[e] for e in range(len(pairs)) if mask >> e & 1])


def representatives(n: int) -> list[Graph]:
    return [mask_to_graph(n, x) for x in isomorphism_classes(n)]
