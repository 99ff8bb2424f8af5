"""Deterministic generators for the extremal and lower-bound graphs.

Labelling conventions, so outputs are reproducible byte for byte:

* ``turan_graph`` numbers its parts consecutively, largest parts first, so
  vertex 0 always lies in a largest part;
* joins list the left side first (the clique or Turán side of G_1, G_2, G_4);
* ``construct_F`` puts the shared cut vertex at label 0, then the blocks in
  order: the ``p`` copies of T(k-1, r-1) and finally T(q+1, r-1);
* ``construct_H`` / ``construct_Gr`` label B first, then A, then C.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import (
    ConstructionId,
    RangeError,
    decomp_cycle,
    decomp_path,
    e_G1,
    e_G2,
    e_G3,
    e_G4,
    e_KX,
    f_value,
    g_value,
    h_value,
    half_circ,
    t_edges,
    turan_part_sizes,
)
from .graph import Graph, amalgam, complete_graph, disjoint_union, empty_graph, join
from .invariants import ForbiddenFamily, clique_number, is_free, is_two_connected


def turan_graph(n: int, p: int) -> Graph:
    sizes = turan_part_sizes(n, p)
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]]
    return Graph.from_edges(n, edges)


def star(n: int) -> Graph:
    """``K_{1,n-1}`` with the centre at label 0."""
    if n < 1:
        raise RangeError("a star needs at least one vertex")
    return join(complete_graph(1), empty_graph(n - 1))


def construct_F(n: int, k: int, r: int) -> Graph:
    """``p`` copies of T(k-1, r-1) and one T(q+1, r-1) sharing one vertex."""
    if not 3 <= r < k or n < 1:
        raise RangeError(f"F(n,k,r) requires 3 <= r < k and n >= 1, got n={n}, k={k}, r={r}")
    d = decomp_cycle(n, k)
    g = turan_graph(d.q + 1, r - 1) if d.p == 0 else turan_graph(k - 1, r - 1)
    for _ in range(d.p - 1):
        g = amalgam(g, 0, turan_graph(k - 1, r - 1), 0)
    if d.p >= 1 and d.q >= 1:
        g = amalgam(g, 0, turan_graph(d.q + 1, r - 1), 0)
    return g


def _check_hk(n: int, a: int, k: int) -> None:
    if not 2 <= a <= half_circ(k):
        raise RangeError(f"requires 2 <= a <= floor((k-1)/2), got a={a}, k={k}")
    if n < k:
        raise RangeError(f"requires n >= k, got n={n}, k={k}")


def _woodall(n: int, a: int, k: int, top: Graph) -> Graph:
    """B (labels 0..a-1) and A (the rest of ``top``) plus C joined to B."""
    size_c = n - k + a
    edges = top.edges()
    edges += [(b, k - a + c) for b in range(a) for c in range(size_c)]
    return Graph.from_edges(n, edges)


def construct_H(n: int, a: int, k: int) -> Graph:
    """``A u B`` a clique of order ``k-a`` with ``|B| = a``; B joined to ``|C| = n-k+a``."""
    _check_hk(n, a, k)
    return _woodall(n, a, k, complete_graph(k - a))


def _packed_turan(m: int, p: int, a: int) -> Graph:
    """T(m, p) relabelled so labels ``0..a-1`` fill the largest parts first."""
    sizes = turan_part_sizes(m, p)
    members: list[list[int]] = []
    start = 0
    for s in sizes:
        members.append(list(range(start, start + s)))
        start += s
    order = [v for part in members for v in part]
    return turan_graph(m, p).relabel(order)


def gr_b_parts(a: int, k: int, r: int) -> int:
    """Number of Turán parts the B-side of G_r(n,a,k) occupies."""
    used = 0
    filled = 0
    for s in turan_part_sizes(k - a, r - 1):
        if filled >= a:
            break
        filled += s
        used += 1
    return used


def construct_Gr(n: int, a: int, k: int, r: int) -> Graph:
    """H(n,a,k) with its ``K_{k-a}`` replaced by T(k-a, r-1).

    The ``a`` vertices of B are packed into as few Turán parts as possible,
    which keeps B's clique number (and so every clique through C) minimal.
    The graph is ``K_r``-free exactly when B occupies at most ``r-2`` parts,
    which always holds for ``r >= a + 2``.
    """
    _check_hk(n, a, k)
    if r < 3:
        raise RangeError(f"G_r(n,a,k) requires r >= 3, got r={r}")
    return _woodall(n, a, k, _packed_turan(k - a, r - 1, a))


def construct_G1(n: int, k: int) -> Graph:
    if not n >= k >= 5:
        raise RangeError(f"G_1 requires n >= k >= 5, got n={n}, k={k}")
    t = half_circ(k)
    return join(complete_graph(t), empty_graph(n - t))


def construct_G2(n: int, k: int, r: int) -> Graph:
    if not n >= k >= 5:
        raise RangeError(f"G_2 requires n >= k >= 5, got n={n}, k={k}")
    t = half_circ(k)
    if not 3 <= r <= t + 1:
        raise RangeError(f"G_2 requires 3 <= r <= floor((k-1)/2)+1, got r={r}, k={k}")
    return join(turan_graph(t, r - 2), empty_graph(n - t))


def construct_G3(n: int, k: int, r: int) -> Graph:
    """``p`` disjoint copies of T(k-1, r-1) and one T(q, r-1), ``n = p(k-1)+q``."""
    if not (k // 2 + 1 <= r < k <= n):
        raise RangeError(f"G_3 requires floor(k/2)+1 <= r < k <= n, got n={n}, k={k}, r={r}")
    d = decomp_path(n, k)
    g = empty_graph(0)
    for _ in range(d.p):
        g = disjoint_union(g, turan_graph(k - 1, r - 1))
    return disjoint_union(g, turan_graph(d.q, r - 1))


def construct_G4(n: int, k: int) -> Graph:
    if not n >= k >= 4:
        raise RangeError(f"G_4 requires n >= k >= 4, got n={n}, k={k}")
    s = k // 2 - 1
    return join(complete_graph(s), empty_graph(n - s))


def construct_KX(n: int, k: int, r: int) -> Graph:
    """``T(s, r-2) v I_{n-s}`` with ``s = floor(k/2) - 1`` (path problem, ``r <= floor(k/2)``)."""
    if not (3 <= r <= k // 2 and k <= n):
        raise RangeError(f"requires 3 <= r <= floor(k/2) and k <= n, got n={n}, k={k}, r={r}")
    s = k // 2 - 1
    return join(turan_graph(s, r - 2), empty_graph(n - s))


BUILDERS = {
    "Turan": turan_graph,
    "F": construct_F,
    "H": construct_H,
    "Gr": construct_Gr,
    "G1": construct_G1,
    "G2": construct_G2,
    "G3": construct_G3,
    "G4": construct_G4,
    "KX": construct_KX,
    "Tree": star,
}

ARITY = {
    "Turan": ("n", "p"),
    "F": ("n", "k", "r"),
    "H": ("n", "a", "k"),
    "Gr": ("n", "a", "k", "r"),
    "G1": ("n", "k"),
    "G2": ("n", "k", "r"),
    "G3": ("n", "k", "r"),
    "G4": ("n", "k"),
    "KX": ("n", "k", "r"),
    "Tree": ("n",),
}


_ALIASES = {"grnak": "Gr", "star": "Tree"}


def canonical_tag(tag: str) -> str:
    for known in BUILDERS:
        if known.lower() == tag.lower():
            return known
    if tag.lower() in _ALIASES:
        return _ALIASES[tag.lower()]
    raise KeyError(f"unknown construction {tag!r}; choose from {', '.join(BUILDERS)}")


def build(cid: ConstructionId) -> Graph:
    tag = canonical_tag(cid.tag)
    if len(cid.params) != len(ARITY[tag]):
        raise RangeError(f"{tag} takes parameters ({', '.join(ARITY[tag])})")
    return BUILDERS[tag](*cid.params)


@dataclass(frozen=True)
class Claim:
    """What a construction promises: its edge count, the family it avoids and
    whether it is 2-connected (``None`` when nothing is promised)."""

    edges: int
    family: ForbiddenFamily | None
    max_clique: int | None = None
    two_connected: bool | None = None


def claim(cid: ConstructionId) -> Claim:
    tag = canonical_tag(cid.tag)
    p = cid.params
    if tag == "Turan":
        n, parts = p
        return Claim(t_edges(n, parts), None, max_clique=min(n, parts))
    if tag == "F":
        n, k, r = p
        return Claim(f_value(n, k, r), ForbiddenFamily.cycles(r, k))
    if tag == "H":
        n, a, k = p
        return Claim(h_value(n, a, k), ForbiddenFamily.cycles(n + 1, k), two_connected=True)
    if tag == "Gr":
        n, a, k, r = p
        # K_r-free exactly when B fits in r - 2 Turán parts
        clique_r = r if gr_b_parts(a, k, r) <= r - 2 else n + 1
        return Claim(g_value(n, a, k, r), ForbiddenFamily.cycles(clique_r, k), two_connected=True)
    if tag == "G1":
        n, k = p
        return Claim(e_G1(n, k), ForbiddenFamily.cycles(half_circ(k) + 2, k))
    if tag == "G2":
        n, k, r = p
        return Claim(e_G2(n, k, r), ForbiddenFamily.cycles(r, k))
    if tag == "G3":
        n, k, r = p
        return Claim(e_G3(n, k, r), ForbiddenFamily.path(r, k))
    if tag == "G4":
        n, k = p
        return Claim(e_G4(n, k), ForbiddenFamily.path(k // 2 + 1, k))
    if tag == "KX":
        n, k, r = p
        return Claim(e_KX(n, k, r), ForbiddenFamily.path(r, k))
    (n,) = p
    return Claim(n - 1, ForbiddenFamily.cycles(3, 4))


def verify_construction(cid: ConstructionId, g: Graph | None = None) -> list[str]:
    """Problems found when re-checking a built graph against its claim (empty if none)."""
    if g is None:
        g = build(cid)
    c = claim(cid)
    problems = []
    if g.num_edges != c.edges:
        problems.append(f"{cid}: {g.num_edges} edges, formula gives {c.edges}")
    if c.family is not None:
        verdict = is_free(g, c.family)
        if not verdict.free:
            problems.append(f"{cid}: not free of {{{c.family}}}: {verdict.certificate}")
    if c.max_clique is not None and clique_number(g)[0] != c.max_clique:
        problems.append(f"{cid}: clique number differs from {c.max_clique}")
    if c.two_connected and not is_two_connected(g):
        problems.append(f"{cid}: not 2-connected")
    return problems
