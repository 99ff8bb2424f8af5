"""Isomorphism-free enumeration of small family-free graphs and brute-force
Turán numbers.

Graphs are grown one vertex at a time by canonical augmentation. A child
``G = P + v`` is kept only when ``v`` lies in the automorphism orbit of the
canonical deletion vertex of ``G``: a minimum-degree vertex, refined by the
sorted degrees of its neighbours, with remaining ties broken by nauty's
canonical labelling. On the parent side only one neighbourhood per
``Aut(P)``-orbit is tried. The result is one representative per
isomorphism class.

Freeness is hereditary and the canonical deletion of a free graph is free,
so non-free children are discarded without losing any class. Each child is
tested only for forbidden structures through ``v``:

* cliques through ``v``: ``1 + omega(P[S])`` from a per-parent subset table;
* cycles of length ``>= k`` through ``v``: some ``s1 != s2`` in ``S`` joined by
  a path of ``P`` on ``>= k - 1`` vertices (a per-parent pair table);
* paths on ``k`` vertices through ``v``: the same pair table computed on
  ``P`` plus one universal vertex ``w`` with threshold ``k``, since a path
  through ``v`` splits into two disjoint paths of ``P`` that ``w`` rejoins.

One walk to ``n_max`` records every level, every clique number and every
connectivity class, so a single run answers all queries with ``n <= n_max``
and ``r <=`` the clique bound used for pruning.
"""

from __future__ import annotations

import enum
import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import pynauty

from .graph import Graph, bits, graph6_encode
from .invariants import (
    BudgetExceeded,
    FamilyKind,
    ForbiddenFamily,
    _blocks,
    _Counter,
    _extension_bound,
    _reach,
    _smaller_twins,
    default_budget,
    find_clique,
    find_long_path,
    is_free,
    is_two_connected,
)

DEFAULT_MAX_N = 10
DEFAULT_WITNESS_CAP = 10


class Connectivity(str, enum.Enum):
    ANY = "any"
    CONNECTED = "connected"
    TWO_CONNECTED = "two_connected"

    @property
    def level(self) -> int:
        return {"any": 0, "connected": 1, "two_connected": 2}[self.value]


@dataclass(frozen=True)
class EnumerationTask:
    n: int
    family: ForbiddenFamily | None
    connectivity: Connectivity = Connectivity.ANY
    budget: int | None = None
    max_n: int = DEFAULT_MAX_N

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.n > self.max_n:
            raise ValueError(f"n={self.n} exceeds the enumeration cap {self.max_n}; raise max_n explicitly")
        if self.budget is not None and self.budget <= 0:
            raise ValueError("budget must be positive")
        object.__setattr__(self, "connectivity", Connectivity(self.connectivity))


@dataclass
class OracleResult:
    n: int
    family: str
    connectivity: str
    max_edges: int | None
    witnesses: list[str]
    optimal_classes: int
    classes: int
    explored: int
    complete: bool
    uncertified: int = 0

    def graphs(self) -> list[Graph]:
        from .graph import graph6_decode

        return [graph6_decode(w) for w in self.witnesses]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "family": self.family,
            "connectivity": self.connectivity,
            "max_edges": self.max_edges,
            "witnesses": list(self.witnesses),
            "optimal_classes": self.optimal_classes,
            "classes": self.classes,
            "explored": self.explored,
            "complete": self.complete,
            "uncertified": self.uncertified,
        }


# -- search specification -------------------------------------------------------


@dataclass(frozen=True)
class _Pruning:
    """What the walk prunes on: a clique bound and a long-cycle/path threshold."""

    r: int | None
    k: int | None
    kind: FamilyKind | None

    @classmethod
    def of(cls, family: ForbiddenFamily | None) -> "_Pruning":
        if family is None:
            return cls(None, None, None)
        return cls(family.r, family.k, family.kind)


def _long_pairs(masks: Sequence[int], m: int, need: int) -> list[int]:
    """``out[s]`` = vertices ``e != s`` joined to ``s`` by a path on ``>= need`` vertices."""
    out = [0] * m
    if need > m:
        return out
    for s in range(m):
        layer = {1 << s: 1 << s}
        size = 1
        acc = 0
        while layer and size < m:
            nxt: dict[int, int] = {}
            get = nxt.get
            for mask, ends in layer.items():
                ext = 0
                while ends:
                    low = ends & -ends
                    ext |= masks[low.bit_length() - 1]
                    ends ^= low
                ext &= ~mask
                while ext:
                    low = ext & -ext
                    nm = mask | low
                    nxt[nm] = get(nm, 0) | low
                    ext ^= low
            size += 1
            layer = nxt
            if size >= need:
                for ends in nxt.values():
                    acc |= ends
        out[s] = acc & ~(1 << s)
    return out


def _clique_table(masks: Sequence[int], m: int) -> list[int]:
    """Clique number of ``P[S]`` for every subset ``S``."""
    cl = [0] * (1 << m)
    for s in range(1, 1 << m):
        low = s & -s
        u = low.bit_length() - 1
        a = cl[s ^ low]
        b = 1 + cl[s & masks[u]]
        cl[s] = a if a > b else b
    return cl


def _perm_table(perm: Sequence[int], m: int) -> list[int]:
    img = [0] * (1 << m)
    for s in range(1, 1 << m):
        low = s & -s
        img[s] = img[s ^ low] | (1 << perm[low.bit_length() - 1])
    return img


def _nauty_graph(masks: Sequence[int], coloring: list[set[int]] | None = None) -> pynauty.Graph:
    adj = {u: list(bits(m)) for u, m in enumerate(masks)}
    if coloring:
        return pynauty.Graph(len(masks), adjacency_dict=adj, vertex_coloring=coloring)
    return pynauty.Graph(len(masks), adjacency_dict=adj)


def _is_canonical_child(child: Sequence[int], degs: Sequence[int], v: int, d: int) -> bool:
    """Whether ``v`` is in the orbit of the canonical deletion vertex of ``child``.

    ``degs`` are the child's degrees; ``d = degs[v]`` is already the minimum.
    """
    tied = [u for u in range(v) if degs[u] == d]
    if not tied:
        return True

    def inv(u: int) -> list[int]:
        return sorted(degs[x] for x in bits(child[u]))

    mine = inv(v)
    ties = {v}
    for u in tied:
        other = inv(u)
        if other < mine:
            return False
        if other == mine:
            ties.add(u)
    if len(ties) == 1:
        return True
    rest = set(range(len(child))) - ties
    coloring = [ties, rest] if rest else [ties]
    ng = _nauty_graph(child, coloring)
    lab = pynauty.canon_label(ng)
    chosen = lab[0]
    if chosen == v:
        return True
    orbits = pynauty.autgrp(ng)[3]
    return orbits[chosen] == orbits[v]


_Node = tuple[tuple[int, ...], int, int]  # (masks, clique number, edge count)


def _children(node: _Node, pruning: _Pruning) -> list[_Node]:
    masks, omega, edges = node
    m = len(masks)
    degs = [x.bit_count() for x in masks]
    delta = min(degs, default=0)

    r = pruning.r
    cl = _clique_table(masks, m)

    good: list[int] | None = None
    goodw = 0
    if pruning.kind is FamilyKind.CYCLES:
        if m >= pruning.k - 1:
            good = _long_pairs(masks, m, pruning.k - 1)
    elif pruning.kind is FamilyKind.PATH:
        w = 1 << m
        ext = [x | w for x in masks] + [(1 << m) - 1]
        if m + 1 >= pruning.k:
            full = _long_pairs(ext, m + 1, pruning.k)
            good = full[:m]
            goodw = full[m]

    imgs: list[list[int]] | None = None
    if m >= 2:
        gens = pynauty.autgrp(_nauty_graph(masks))[0]
        if gens:
            imgs = [_perm_table(p, m) for p in gens]

    out: list[_Node] = []
    vbit = 1 << m
    for size in range(0, min(delta + 1, m) + 1):
        forced = 0
        rest = []
        for u in range(m):
            if degs[u] < size:
                forced |= 1 << u
            else:
                rest.append(u)
        nf = forced.bit_count()
        if nf > size:
            continue
        for combo in itertools.combinations(rest, size - nf):
            s = forced
            for u in combo:
                s |= 1 << u
            if imgs is not None and not _orbit_min(s, imgs):
                continue
            through = 1 + cl[s]
            if r is not None and through >= r:
                continue
            c_omega = through if through > omega else omega
            if good is not None:
                if goodw & s:
                    continue
                t = s
                hit = False
                while t:
                    low = t & -t
                    if good[low.bit_length() - 1] & s:
                        hit = True
                        break
                    t ^= low
                if hit:
                    continue
            child = [x | vbit if s >> u & 1 else x for u, x in enumerate(masks)]
            child.append(s)
            cdegs = [d + (s >> u & 1) for u, d in enumerate(degs)]
            cdegs.append(size)
            if not _is_canonical_child(child, cdegs, m, size):
                continue
            out.append((tuple(child), c_omega, edges + size))
    return out


def _orbit_min(s: int, imgs: list[list[int]]) -> bool:
    """Whether ``s`` is the smallest subset in its orbit under the generated group."""
    seen = {s}
    frontier = [s]
    while frontier:
        nxt = []
        for x in frontier:
            for img in imgs:
                y = img[x]
                if y < s:
                    return False
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return True


def _walk(roots: Iterable[_Node], pruning: _Pruning, n_max: int, counter: _Counter,
          include_roots: bool = True) -> Iterator[_Node]:
    """Depth-first generation below ``roots``; yields every accepted node."""
    stack: list[_Node] = []
    for root in roots:
        if include_roots:
            counter.tick()
            yield root
        stack.append(root)
        while stack:
            node = stack.pop()
            if node is not root:
                counter.tick()
                yield node
            if len(node[0]) < n_max:
                stack.extend(reversed(_children(node, pruning)))


_K1: _Node = ((0,), 1, 0)


def _connectivity_class(masks: Sequence[int]) -> int:
    """0 disconnected, 1 connected with a cut vertex (or n < 3), 2 two-connected."""
    n = len(masks)
    full = (1 << n) - 1
    if _reach(masks, 1, full) != full:
        return 0
    if n < 3 or min(x.bit_count() for x in masks) < 2:
        return 1
    return 2 if _blocks(masks, n)[1] == 0 else 1


# -- profiles -------------------------------------------------------------------


@dataclass
class _Cell:
    count: int = 0
    best: int = -1
    best_count: int = 0
    witnesses: list[str] = field(default_factory=list)

    def add(self, edges: int, masks: Sequence[int], cap: int) -> None:
        self.count += 1
        if edges < self.best:
            return
        g6 = graph6_encode(Graph(len(masks), tuple(masks)))
        if edges > self.best:
            self.best = edges
            self.best_count = 1
            self.witnesses = [g6]
            return
        self.best_count += 1
        if len(self.witnesses) < cap:
            self.witnesses.append(g6)
            self.witnesses.sort()
        elif g6 < self.witnesses[-1]:
            self.witnesses[-1] = g6
            self.witnesses.sort()

    def merge(self, other: "_Cell", cap: int) -> None:
        self.count += other.count
        if other.best > self.best:
            self.best, self.best_count, self.witnesses = other.best, other.best_count, list(other.witnesses)
        elif other.best == self.best and other.best >= 0:
            self.best_count += other.best_count
            self.witnesses = sorted(set(self.witnesses) | set(other.witnesses))[:cap]


@dataclass
class Profile:
    """Per ``(n, connectivity class, clique number)`` statistics of one walk."""

    n_max: int
    family: ForbiddenFamily | None
    cap: int
    cells: dict[tuple[int, int, int], _Cell] = field(default_factory=dict)
    explored: int = 0
    complete: bool = True

    def record(self, node: _Node) -> None:
        masks, omega, edges = node
        key = (len(masks), _connectivity_class(masks), omega)
        cell = self.cells.get(key)
        if cell is None:
            cell = self.cells[key] = _Cell()
        cell.add(edges, masks, self.cap)

    def merge(self, other: "Profile") -> None:
        for key, cell in other.cells.items():
            mine = self.cells.get(key)
            if mine is None:
                self.cells[key] = _Cell(cell.count, cell.best, cell.best_count, list(cell.witnesses))
            else:
                mine.merge(cell, self.cap)
        self.explored += other.explored
        self.complete = self.complete and other.complete

    def covers(self, n: int, family: ForbiddenFamily | None) -> bool:
        if n > self.n_max:
            return False
        if self.family is None:
            return family is None
        if family is None:
            return False
        return (family.kind, family.k) == (self.family.kind, self.family.k) and family.r <= self.family.r

    def result(self, n: int, family: ForbiddenFamily | None,
               connectivity: Connectivity | str = Connectivity.ANY) -> OracleResult:
        conn = Connectivity(connectivity)
        if not self.covers(n, family):
            raise ValueError(f"profile does not cover n={n}, family={family}")
        r = family.r if family is not None else None
        best = -1
        picked: list[_Cell] = []
        classes = 0
        for (cn, cc, om), cell in self.cells.items():
            if cn != n or cc < conn.level or (r is not None and om >= r):
                continue
            classes += cell.count
            if cell.best > best:
                best, picked = cell.best, [cell]
            elif cell.best == best:
                picked.append(cell)
        witnesses = sorted({w for c in picked for w in c.witnesses})[: self.cap]
        return OracleResult(
            n=n,
            family=str(family) if family is not None else "none",
            connectivity=conn.value,
            max_edges=best if best >= 0 else None,
            witnesses=witnesses,
            optimal_classes=sum(c.best_count for c in picked),
            classes=classes,
            explored=self.explored,
            complete=self.complete,
        )

    def class_count(self, n: int) -> int:
        return sum(c.count for (cn, _, _), c in self.cells.items() if cn == n)


def _profile_from(roots: list[_Node], pruning: _Pruning, family: ForbiddenFamily | None, n_max: int,
                  cap: int, budget: int, include_roots: bool) -> Profile:
    prof = Profile(n_max, family, cap)
    counter = _Counter(budget)
    try:
        for node in _walk(roots, pruning, n_max, counter, include_roots):
            prof.record(node)
    except BudgetExceeded:
        prof.complete = False
        counter.count -= 1
    prof.explored = counter.count
    return prof


def _worker(args: tuple) -> Profile:
    roots, family, n_max, cap, budget = args
    return _profile_from(roots, _Pruning.of(family), family, n_max, cap, budget, include_roots=False)


def build_profile(n_max: int, family: ForbiddenFamily | None, *, cap: int = DEFAULT_WITNESS_CAP,
                  budget: int | None = None, workers: int = 1) -> Profile:
    """Walk the whole generation tree up to ``n_max`` vertices.

    With ``workers > 1`` the tree is cut three levels above the leaves and the
    subtrees are expanded in worker processes; the merged profile is identical
    to the single-process one whenever the walk completes.
    """
    if budget is None:
        budget = default_budget()
    pruning = _Pruning.of(family)
    if workers <= 1 or n_max < 5:
        return _profile_from([_K1], pruning, family, n_max, cap, budget, include_roots=True)
    split = n_max - 3
    head = Profile(n_max, family, cap)
    counter = _Counter(budget)
    roots: list[_Node] = []
    try:
        for node in _walk([_K1], pruning, split, counter):
            head.record(node)
            if len(node[0]) == split:
                roots.append(node)
    except BudgetExceeded:
        head.complete = False
        head.explored = counter.count - 1
        return head
    head.explored = counter.count
    chunks = [roots[i::workers * 4] for i in range(workers * 4)]
    jobs = [(c, family, n_max, cap, budget - head.explored) for c in chunks if c]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_worker, jobs):
            head.merge(part)
    if head.explored > budget:
        head.complete = False
    return head


_PROFILE_CACHE: list[Profile] = []


def clear_cache() -> None:
    _PROFILE_CACHE.clear()


def _cached_profile(task: EnumerationTask, cap: int, workers: int) -> Profile:
    for prof in _PROFILE_CACHE:
        if prof.complete and prof.cap == cap and prof.covers(task.n, task.family):
            return prof
    prof = build_profile(task.n, task.family, cap=cap, budget=task.budget, workers=workers)
    if prof.complete:
        _PROFILE_CACHE.append(prof)
    return prof


# -- public operations ------------------------------------------------------------


def enumerate_free_graphs(task: EnumerationTask) -> Iterator[Graph]:
    """One graph per isomorphism class of ``task.n``-vertex family-free graphs
    meeting the connectivity constraint.

    Raises :class:`BudgetExceeded` after the partial stream if the node budget
    runs out.
    """
    pruning = _Pruning.of(task.family)
    counter = _Counter(task.budget)
    level = task.connectivity.level
    for masks, _, _ in _walk([_K1], pruning, task.n, counter):
        if len(masks) == task.n and _connectivity_class(masks) >= level:
            yield Graph(task.n, masks)


def brute_force_ex(task: EnumerationTask, *, cap: int = DEFAULT_WITNESS_CAP, workers: int = 1,
                   use_cache: bool = True) -> OracleResult:
    """Largest edge count over all free graphs of the task, with witnesses.

    Complete walks are cached and reused for any later task with the same
    ``k`` and kind, no more vertices and a clique bound no larger.
    """
    if use_cache:
        prof = _cached_profile(task, cap, workers)
    else:
        prof = build_profile(task.n, task.family, cap=cap, budget=task.budget, workers=workers)
    return prof.result(task.n, task.family, task.connectivity)


# -- lower bounds for larger n ------------------------------------------------------


def _long_uv_path(masks: Sequence[int], u: int, v: int, need: int, counter: _Counter) -> bool:
    """Whether some ``u``-``v`` path has at least ``need`` vertices."""
    n = len(masks)
    comp = _reach(masks, 1 << u, (1 << n) - 1)
    if not comp >> v & 1 or comp.bit_count() < need:
        return False
    ends = (1 << u) | (1 << v)
    classes: dict[int, list[int]] = {}
    for x in bits(comp & ~ends):
        classes.setdefault(masks[x] & comp, []).append(x)
    within = ends
    for nbhd, members in classes.items():
        for x in members[: max(1, nbhd.bit_count())]:
            within |= 1 << x

    # swapping twins other than the two ends maps u-v paths to u-v paths
    twins = {x: t & ~ends for x, t in _smaller_twins(masks, within).items()}

    def dfs(cur: int, visited: int, length: int) -> bool:
        counter.tick()
        free = within & ~visited
        cand = masks[cur] & free
        if cand >> v & 1 and length + 1 >= need:
            return True
        reach = _reach(masks, cand, free)
        if not reach >> v & 1 or length + 1 + _extension_bound(masks, reach & ~(1 << v)) < need:
            return False
        for nxt in bits(cand & ~(1 << v)):
            if twins[nxt] & free:
                continue
            if dfs(nxt, visited | (1 << nxt), length + 1):
                return True
        return False

    return dfs(u, 1 << u, 1)


def _edge_keeps_free(g: Graph, u: int, v: int, family: ForbiddenFamily, counter: _Counter) -> bool:
    common = g.masks[u] & g.masks[v]
    if family.r <= 2 or find_clique(g, family.r - 2, within=common, budget=counter.budget - counter.count) is not None:
        return False
    if family.kind is FamilyKind.CYCLES:
        return not _long_uv_path(g.masks, u, v, family.k, counter)
    h = g.add_edges([(u, v)])
    return find_long_path(h, family.k, budget=counter.budget - counter.count) is None


def lower_bound_search(n: int, family: ForbiddenFamily, connectivity: Connectivity | str = Connectivity.ANY,
                       budget: int | None = None, seed: int = 0, *, restarts: int = 20,
                       start: Graph | None = None, cap: int = DEFAULT_WITNESS_CAP) -> OracleResult:
    """Random edge-addition saturation with restarts; a certified lower bound.

    Even restarts try the missing edges in a uniformly random order, odd
    restarts always try next the pair with the largest current degree sum.

    Every added edge is certified by an exact incremental check. An edge
    whose check runs out of budget is left out (counted in ``uncertified``),
    so the returned graphs are always free but may not be saturated.
    """
    conn = Connectivity(connectivity)
    if start is not None:
        if start.n != n:
            raise ValueError(f"start graph has {start.n} vertices, expected {n}")
        if not is_free(start, family):
            raise ValueError("start graph is not family-free")
    rng = random.Random(seed)
    budget = default_budget() if budget is None else budget
    explored = 0
    uncertified = 0
    best = -1
    found: set[str] = set()
    for attempt in range(restarts):
        g = start if start is not None else Graph(n, (0,) * n)
        masks = list(g.masks)
        pending = g.nonedges()
        rng.shuffle(pending)
        greedy = attempt % 2 == 1
        while pending:
            if greedy:
                # favour pairs whose endpoints already have many neighbours
                i = max(range(len(pending)),
                        key=lambda j: masks[pending[j][0]].bit_count() + masks[pending[j][1]].bit_count())
                u, v = pending.pop(i)
            else:
                u, v = pending.pop()
            cur = Graph(n, tuple(masks))
            counter = _Counter(max(1, budget - explored))
            try:
                ok = _edge_keeps_free(cur, u, v, family, counter)
            except BudgetExceeded:
                ok = False
                uncertified += 1
            explored += counter.count
            if ok:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        g = Graph(n, tuple(masks))
        level = conn.level
        if level == 1 and not g.is_connected():
            continue
        if level == 2 and not is_two_connected(g):
            continue
        if g.num_edges > best:
            best = g.num_edges
            found = {graph6_encode(g)}
        elif g.num_edges == best:
            found.add(graph6_encode(g))
        if explored >= budget:
            break
    witnesses = sorted(found)[:cap]
    return OracleResult(
        n=n,
        family=str(family),
        connectivity=conn.value,
        max_edges=best if best >= 0 else None,
        witnesses=witnesses,
        optimal_classes=len(found),
        classes=0,
        explored=explored,
        complete=False,
        uncertified=uncertified,
    )


def default_workers() -> int:
    return max(1, os.cpu_count() or 1)
