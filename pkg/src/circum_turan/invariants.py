"""Exact graph invariants with checkable witnesses.

Everything here is an exact search: clique number by branch and bound with a
greedy-colouring bound, circumference and longest path by depth-first search
over simple cycles/paths with a reachability bound. Searches count expanded
nodes and raise :class:`BudgetExceeded` instead of returning an unproven
answer.

Two exact reductions keep the searches small on the structured graphs this
package builds:

* every cycle lies inside one block, so the longest cycle is searched block
  by block;
* a class of ``m`` pairwise non-adjacent vertices with the same neighbourhood
  ``N`` can contribute at most ``|N|`` vertices to a cycle and ``|N| + 1`` to a
  path, so surplus copies are dropped before searching.

During the search, twins that remain are tried in label order only, and the
remaining gain is capped by an independent-set count on the reachable part.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .formulas import ex_clique
from .graph import Graph, GraphError, bits, components_of

DEFAULT_BUDGET = 50_000_000
BUDGET_ENV = "CIRCUM_TURAN_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
        if value <= 0:
            raise ValueError(f"{BUDGET_ENV} must be positive")
        return value
    return DEFAULT_BUDGET


class BudgetExceeded(RuntimeError):
    """A search expanded more nodes than its budget allows."""

    def __init__(self, explored: int, budget: int):
        super().__init__(f"node budget exceeded ({explored} > {budget})")
        self.explored = explored
        self.budget = budget


class _Counter:
    __slots__ = ("count", "budget")

    def __init__(self, budget: int | None):
        self.count = 0
        self.budget = default_budget() if budget is None else budget

    def tick(self) -> None:
        self.count += 1
        if self.count > self.budget:
            raise BudgetExceeded(self.count, self.budget)


# -- domain types -----------------------------------------------------------


class CertificateKind(str, enum.Enum):
    CLIQUE = "clique"
    CYCLE = "cycle"
    PATH = "path"


@dataclass(frozen=True)
class Certificate:
    kind: CertificateKind
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def verify(self, g: Graph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
            return False
        if self.kind is CertificateKind.CLIQUE:
            return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])
        consecutive = all(g.has_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))
        if self.kind is CertificateKind.PATH:
            return len(vs) >= 1 and consecutive
        return len(vs) >= 3 and consecutive and g.has_edge(vs[-1], vs[0])

    def __str__(self) -> str:
        return f"{self.kind.value} " + " ".join(map(str, self.vertices))


class FamilyKind(str, enum.Enum):
    CYCLES = "cycles_at_least_k"
    PATH = "path_on_k_vertices"


@dataclass(frozen=True)
class ForbiddenFamily:
    """``{K_r, C_{>=k}}`` or ``{K_r, P_k}``."""

    r: int
    k: int
    kind: FamilyKind = FamilyKind.CYCLES

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"clique order r must be at least 2, got {self.r}")
        low = 3 if self.kind is FamilyKind.CYCLES else 2
        if self.k < low:
            raise ValueError(f"k must be at least {low} for {self.kind.value}, got {self.k}")

    @classmethod
    def cycles(cls, r: int, k: int) -> "ForbiddenFamily":
        return cls(r, k, FamilyKind.CYCLES)

    @classmethod
    def path(cls, r: int, k: int) -> "ForbiddenFamily":
        return cls(r, k, FamilyKind.PATH)

    @classmethod
    def parse(cls, text: str) -> "ForbiddenFamily":
        """Parse ``K<r>,C>=<k>`` or ``K<r>,P<k>``."""
        s = text.replace(" ", "")
        try:
            clique, other = s.split(",")
            if not clique.upper().startswith("K"):
                raise ValueError
            r = int(clique[1:])
            if other.upper().startswith("C>="):
                return cls(r, int(other[3:]), FamilyKind.CYCLES)
            if other.upper().startswith("P"):
                return cls(r, int(other[1:]), FamilyKind.PATH)
            raise ValueError
        except ValueError as exc:
            if str(exc) and "must be" in str(exc):
                raise
            raise ValueError(
                f"cannot parse family {text!r}; expected 'K<r>,C>=<k>' or 'K<r>,P<k>'"
            ) from None

    def __str__(self) -> str:
        if self.kind is FamilyKind.CYCLES:
            return f"K{self.r},C>={self.k}"
        return f"K{self.r},P{self.k}"


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


@dataclass(frozen=True)
class CyclePartition:
    cycle: Certificate
    e_on_cycle: int
    e_off: int

    @property
    def c(self) -> int:
        return len(self.cycle)


@dataclass(frozen=True)
class Verdict:
    free: bool
    certificate: Certificate | None = None

    def __bool__(self) -> bool:
        return self.free


# -- clique number ------------------------------------------------------------


def _greedy_colour_order(masks: Sequence[int], cand: int) -> tuple[list[int], list[int]]:
    order: list[int] = []
    colours: list[int] = []
    uncoloured = cand
    colour = 0
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~masks[v] & ~low
            uncoloured &= ~low
            order.append(v)
            colours.append(colour)
    return order, colours


def _max_clique(masks: Sequence[int], cand: int, target: int | None, counter: _Counter) -> list[int]:
    best: list[int] = []

    def expand(clique: list[int], p: int) -> bool:
        nonlocal best
        counter.tick()
        order, colours = _greedy_colour_order(masks, p)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + colours[i] <= len(best):
                return False
            v = order[i]
            clique.append(v)
            sub = p & masks[v]
            if sub:
                if expand(clique, sub):
                    return True
            elif len(clique) > len(best):
                best = list(clique)
                if target is not None and len(best) >= target:
                    return True
            clique.pop()
            p &= ~(1 << v)
        return False

    if cand:
        expand([], cand)
    return best


def clique_number(g: Graph, budget: int | None = None) -> tuple[int, Certificate]:
    clique = _max_clique(g.masks, g.vertex_mask, None, _Counter(budget))
    return len(clique), Certificate(CertificateKind.CLIQUE, tuple(sorted(clique)))


def find_clique(g: Graph, size: int, within: int | None = None, budget: int | None = None) -> list[int] | None:
    """A clique on exactly ``size`` vertices inside ``within`` (a vertex bitmask), if any."""
    if size <= 0:
        return []
    cand = g.vertex_mask if within is None else within
    clique = _max_clique(g.masks, cand, size, _Counter(budget))
    if len(clique) >= size:
        return sorted(clique[:size])
    return None


# -- blocks -------------------------------------------------------------------


def _blocks(masks: Sequence[int], n: int) -> tuple[list[int], int]:
    """Blocks (vertex bitmasks) and the cut-vertex bitmask, for every component.

    Isolated vertices form singleton blocks.
    """
    disc = [-1] * n
    low = [0] * n
    blocks: list[int] = []
    cuts = 0
    time = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if masks[root] == 0:
            disc[root] = time
            time += 1
            blocks.append(1 << root)
            continue
        disc[root] = low[root] = time
        time += 1
        vstack = [root]
        # frames: (vertex, parent, remaining-neighbour mask)
        frames = [(root, -1, masks[root])]
        root_children = 0
        while frames:
            v, parent, rest = frames[-1]
            if rest:
                lowbit = rest & -rest
                w = lowbit.bit_length() - 1
                frames[-1] = (v, parent, rest ^ lowbit)
                if disc[w] == -1:
                    disc[w] = low[w] = time
                    time += 1
                    vstack.append(w)
                    frames.append((w, v, masks[w]))
                    if v == root:
                        root_children += 1
                elif w != parent:
                    low[v] = min(low[v], disc[w])
                continue
            frames.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                block = 1 << parent
                while True:
                    x = vstack.pop()
                    block |= 1 << x
                    if x == v:
                        break
                blocks.append(block)
                if parent != root:
                    cuts |= 1 << parent
        if root_children >= 2:
            cuts |= 1 << root
    return blocks, cuts


def block_decomposition(g: Graph) -> BlockDecomposition:
    if not g.is_connected():
        raise GraphError("block_decomposition needs a connected graph")
    if g.n == 0:
        return BlockDecomposition((), frozenset())
    blocks, cuts = _blocks(g.masks, g.n)
    ordered = sorted(blocks, key=lambda b: (-b.bit_count(), (b & -b).bit_length()))
    return BlockDecomposition(
        tuple(frozenset(bits(b)) for b in ordered), frozenset(bits(cuts))
    )


def cut_vertices(g: Graph) -> frozenset[int]:
    return frozenset(bits(_blocks(g.masks, g.n)[1]))


def is_two_connected(g: Graph) -> bool:
    if g.n < 3 or not g.is_connected():
        return False
    return _blocks(g.masks, g.n)[1] == 0


# -- twin reduction -----------------------------------------------------------


def _reduce_false_twins(masks: Sequence[int], within: int, extra: int) -> int:
    """Drop surplus copies among non-adjacent vertices sharing a neighbourhood.

    Keeps ``min(m, |N| + extra)`` members of each class (lowest labels first);
    ``extra`` is 0 for cycles and 1 for paths.
    """
    classes: dict[int, list[int]] = {}
    for v in bits(within):
        classes.setdefault(masks[v] & within, []).append(v)
    keep = 0
    for nbhd, members in classes.items():
        cap = max(1, nbhd.bit_count() + extra)
        for v in members[:cap]:
            keep |= 1 << v
    return keep


def _reach(masks: Sequence[int], start_mask: int, within: int) -> int:
    comp = start_mask & within
    frontier = comp
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= masks[v]
        nxt &= within & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def _extension_bound(masks: Sequence[int], reach: int) -> int:
    """Most vertices of ``reach`` a path can still pick up between two fixed
    vertices outside it.

    Members of an independent set ``I`` cannot be consecutive on the path, so
    at most ``|R - I| + 1`` of them fit. ``I`` is chosen greedily by low degree.
    """
    order = sorted(bits(reach), key=lambda v: (masks[v] & reach).bit_count())
    indep = 0
    blocked = 0
    for v in order:
        if not blocked >> v & 1:
            indep |= 1 << v
            blocked |= masks[v] | (1 << v)
    rest = reach.bit_count() - indep.bit_count()
    return rest + min(indep.bit_count(), rest + 1)


def _smaller_twins(masks: Sequence[int], within: int) -> dict[int, int]:
    """For each vertex, the lower-labelled vertices sharing its open or closed
    neighbourhood inside ``within``. Swapping two such vertices is an
    automorphism, so searches only need the lowest free member of a class."""
    seen: dict[int, int] = {}
    out: dict[int, int] = {}
    for v in bits(within):
        acc = 0
        for key in (("open", masks[v] & within), ("closed", (masks[v] | 1 << v) & within)):
            acc |= seen.get(key, 0)
            seen[key] = seen.get(key, 0) | 1 << v
        out[v] = acc
    return out


def _by_fewest_exits(masks: Sequence[int], cand: int, free: int, twins: dict[int, int]) -> list[int]:
    picks = [v for v in bits(cand) if not twins[v] & free]
    return sorted(picks, key=lambda v: (masks[v] & free).bit_count())


# -- longest cycle ------------------------------------------------------------


def _longest_cycle_in(
    masks: Sequence[int], within: int, best: int, target: int | None, counter: _Counter
) -> tuple[int, list[int] | None]:
    """Longest cycle inside the vertex set ``within`` that beats ``best``."""
    best_cycle: list[int] | None = None
    total = within.bit_count()
    path: list[int] = []
    twins = _smaller_twins(masks, within)

    def dfs(s: int, cur: int, visited: int, allowed: int) -> bool:
        nonlocal best, best_cycle
        counter.tick()
        length = len(path)
        if length >= 3 and masks[cur] >> s & 1 and length > best:
            best = length
            best_cycle = list(path)
            if (target is not None and best >= target) or best == total:
                return True
        free = allowed & ~visited
        cand = masks[cur] & free
        if not cand:
            return False
        reach = _reach(masks, cand, free)
        if not masks[s] & reach or length + _extension_bound(masks, reach) <= best:
            return False
        for nxt in _by_fewest_exits(masks, cand, free, twins):
            path.append(nxt)
            if dfs(s, nxt, visited | (1 << nxt), allowed):
                return True
            path.pop()
        return False

    for s in bits(within):
        allowed = within & ~((1 << (s + 1)) - 1)
        if allowed.bit_count() + 1 <= best:
            break
        if twins[s]:
            continue
        path.append(s)
        done = dfs(s, s, 1 << s, allowed)
        path.pop()
        if done:
            break
    return best, best_cycle


def _longest_cycle(g: Graph, target: int | None, counter: _Counter) -> tuple[int, list[int] | None]:
    blocks, _ = _blocks(g.masks, g.n)
    best = 0
    best_cycle = None
    for block in sorted(blocks, key=lambda b: -b.bit_count()):
        size = block.bit_count()
        if size < 3 or size <= best:
            continue
        reduced = _reduce_false_twins(g.masks, block, 0)
        if reduced.bit_count() <= best:
            continue
        c, cyc = _longest_cycle_in(g.masks, reduced, best, target, counter)
        if cyc is not None and c > best:
            best, best_cycle = c, cyc
            if target is not None and best >= target:
                break
    return best, best_cycle


def circumference(g: Graph, budget: int | None = None) -> tuple[int, Certificate | None]:
    """Length of a longest cycle (0 for a forest) with the cycle as witness."""
    c, cyc = _longest_cycle(g, None, _Counter(budget))
    if cyc is None:
        return 0, None
    return c, Certificate(CertificateKind.CYCLE, tuple(cyc))


def find_long_cycle(g: Graph, k: int, budget: int | None = None) -> Certificate | None:
    """A cycle of length at least ``k``, or ``None`` if the circumference is below ``k``."""
    c, cyc = _longest_cycle(g, k, _Counter(budget))
    if cyc is not None and c >= k:
        return Certificate(CertificateKind.CYCLE, tuple(cyc))
    return None


# -- longest path -------------------------------------------------------------


def _longest_path_in(
    masks: Sequence[int], within: int, best: int, target: int | None, counter: _Counter
) -> tuple[int, list[int] | None]:
    best_path: list[int] | None = None
    total = within.bit_count()
    path: list[int] = []
    twins = _smaller_twins(masks, within)

    def dfs(cur: int, visited: int) -> bool:
        nonlocal best, best_path
        counter.tick()
        length = len(path)
        if length > best:
            best = length
            best_path = list(path)
            if (target is not None and best >= target) or best == total:
                return True
        free = within & ~visited
        cand = masks[cur] & free
        if not cand:
            return False
        if length + _extension_bound(masks, _reach(masks, cand, free)) <= best:
            return False
        for nxt in _by_fewest_exits(masks, cand, free, twins):
            path.append(nxt)
            if dfs(nxt, visited | (1 << nxt)):
                return True
            path.pop()
        return False

    for s in bits(within):
        if twins[s]:
            continue
        path.append(s)
        done = dfs(s, 1 << s)
        path.pop()
        if done:
            break
    return best, best_path


def _longest_path(g: Graph, target: int | None, counter: _Counter) -> tuple[int, list[int]]:
    best = 0
    best_path: list[int] = []
    for comp in sorted(components_of(g.masks, g.vertex_mask), key=lambda c: -c.bit_count()):
        if comp.bit_count() <= best:
            continue
        reduced = _reduce_false_twins(g.masks, comp, 1)
        if reduced.bit_count() <= best:
            continue
        ell, p = _longest_path_in(g.masks, reduced, best, target, counter)
        if p is not None and ell > best:
            best, best_path = ell, p
            if target is not None and best >= target:
                break
    return best, best_path


def longest_path_order(g: Graph, budget: int | None = None) -> tuple[int, Certificate]:
    """Number of vertices on a longest path, with the path as witness."""
    if g.n == 0:
        raise GraphError("longest_path_order needs at least one vertex")
    ell, p = _longest_path(g, None, _Counter(budget))
    return ell, Certificate(CertificateKind.PATH, tuple(p))


def find_long_path(g: Graph, k: int, budget: int | None = None) -> Certificate | None:
    """A path on exactly ``k`` vertices, or ``None`` if none exists."""
    if g.n == 0:
        return None
    ell, p = _longest_path(g, k, _Counter(budget))
    if ell >= k:
        return Certificate(CertificateKind.PATH, tuple(p[:k]))
    return None


# -- freeness -------------------------------------------------------------------


def is_free(g: Graph, fam: ForbiddenFamily, budget: int | None = None) -> Verdict:
    clique = find_clique(g, fam.r, budget=budget)
    if clique is not None:
        return Verdict(False, Certificate(CertificateKind.CLIQUE, tuple(clique)))
    if fam.kind is FamilyKind.CYCLES:
        cyc = find_long_cycle(g, fam.k, budget)
        if cyc is not None:
            return Verdict(False, cyc)
    else:
        p = find_long_path(g, fam.k, budget)
        if p is not None:
            return Verdict(False, p)
    return Verdict(True)


# -- cores and saturation ---------------------------------------------------------


def core_vertices(g: Graph, d: int) -> list[int]:
    """Vertices of the ``d``-core, by iterated deletion of vertices of degree below ``d``."""
    if d < 0:
        raise ValueError("core order must be nonnegative")
    alive = g.vertex_mask
    changed = True
    while changed:
        changed = False
        for v in bits(alive):
            if (g.masks[v] & alive).bit_count() < d:
                alive &= ~(1 << v)
                changed = True
    return list(bits(alive))


def core(g: Graph, d: int) -> Graph:
    """The ``d``-core as an induced subgraph, relabelled in increasing vertex order."""
    return g.induced_subgraph(core_vertices(g, d))


def is_kr_saturated(g: Graph, r: int, budget: int | None = None) -> bool:
    if r < 2:
        raise ValueError("r must be at least 2")
    if find_clique(g, r, budget=budget) is not None:
        return False
    for u, v in g.nonedges():
        common = g.masks[u] & g.masks[v]
        if find_clique(g, r - 2, within=common, budget=budget) is None:
            return False
    return True


# -- longest-cycle edge accounting -----------------------------------------------


def cycle_partition(g: Graph, budget: int | None = None) -> CyclePartition:
    c, cyc = circumference(g, budget)
    if cyc is None:
        raise GraphError("cycle_partition needs a graph with a cycle")
    on = sum(1 << v for v in cyc.vertices)
    e_on = sum((g.masks[v] & on).bit_count() for v in cyc.vertices) // 2
    return CyclePartition(cyc, e_on, g.num_edges - e_on)


def _cycle_degrees(g: Graph, cyc: Certificate) -> dict[int, int]:
    on = sum(1 << v for v in cyc.vertices)
    return {u: (g.masks[u] & on).bit_count() for u in range(g.n) if not on >> u & 1}


def check_dirac(g: Graph, budget: int | None = None) -> bool:
    """``c(G) >= min(2 delta, n)`` for a 2-connected graph."""
    if not is_two_connected(g):
        raise GraphError("Dirac's bound needs a 2-connected graph")
    c, _ = circumference(g, budget)
    return c >= min(2 * g.min_degree(), g.n)


def check_kopylov(g: Graph, path: Certificate | Sequence[int], budget: int | None = None) -> bool:
    """A 2-connected graph with an ``x``-``y`` path of ``m`` edges has a cycle of
    length at least ``min(m + 1, d_P(x) + d_P(y))``."""
    if not isinstance(path, Certificate):
        path = Certificate(CertificateKind.PATH, tuple(path))
    if path.kind is not CertificateKind.PATH or len(path) < 2 or not path.verify(g):
        raise GraphError("check_kopylov needs a valid path with at least one edge")
    if not is_two_connected(g):
        raise GraphError("Kopylov's lemma needs a 2-connected graph")
    on = sum(1 << v for v in path.vertices)
    x, y = path.vertices[0], path.vertices[-1]
    m = len(path) - 1
    bound = min(m + 1, (g.masks[x] & on).bit_count() + (g.masks[y] & on).bit_count())
    return find_long_cycle(g, bound, budget) is not None


def check_bondy(g: Graph, budget: int | None = None) -> bool:
    """``e(G-C) + e(G-C, C) <= floor(c/2) (n - c)`` for a longest cycle ``C``.

    Only meaningful for 2-connected graphs: outside that class the inequality
    fails (two triangles sharing a vertex), so other inputs are rejected.
    """
    if not is_two_connected(g):
        raise GraphError("Bondy's inequality is checked on 2-connected graphs only")
    part = cycle_partition(g, budget)
    return part.e_off <= (part.c // 2) * (g.n - part.c)


def check_cycle_edge(g: Graph, r: int, budget: int | None = None) -> bool | None:
    """Edge bound on a longest cycle's vertex set when some outside vertex sees
    ``floor(c/2)`` of it. ``None`` when the hypotheses fail."""
    if find_clique(g, r, budget=budget) is not None:
        return None
    c, cyc = circumference(g, budget)
    if cyc is None:
        return None
    half = c // 2
    if r > half + 1 or half not in _cycle_degrees(g, cyc).values():
        return None
    part = cycle_partition_for(g, cyc)
    return part.e_on_cycle <= ex_clique(half, r - 1) + half * (c - half)


def cycle_partition_for(g: Graph, cyc: Certificate) -> CyclePartition:
    on = sum(1 << v for v in cyc.vertices)
    e_on = sum((g.masks[v] & on).bit_count() for v in cyc.vertices) // 2
    return CyclePartition(cyc, e_on, g.num_edges - e_on)


def check_g_c(g: Graph, budget: int | None = None) -> bool | None:
    """Off-cycle edge bounds for a 2-connected graph with ``4 <= c <= n - 1``.

    With an outside vertex of ``floor(c/2)`` cycle neighbours the bound is
    ``floor(c/2)(n-c)``; otherwise it is ``(floor(c/2) - 1/2)(n-c)``.
    ``None`` when the hypotheses fail.
    """
    if not is_two_connected(g):
        return None
    c, cyc = circumference(g, budget)
    if cyc is None or not 4 <= c <= g.n - 1:
        return None
    half = c // 2
    part = cycle_partition_for(g, cyc)
    if half in _cycle_degrees(g, cyc).values():
        return part.e_off <= half * (g.n - c)
    return part.e_off <= (Fraction(half) - Fraction(1, 2)) * (g.n - c)


def check_newstability(g: Graph, k: int, r: int, budget: int | None = None) -> bool | None:
    """Edge bound for a 2-connected ``{K_r, C>=k}``-free graph with
    ``n >= k >= 5`` and ``r <= floor((k-1)/2) + 1``. ``None`` when not applicable."""
    t = (k - 1) // 2
    if not (g.n >= k >= 5 and 3 <= r <= t + 1) or not is_two_connected(g):
        return None
    if not is_free(g, ForbiddenFamily.cycles(r, k), budget):
        return None
    c, cyc = circumference(g, budget)
    assert cyc is not None
    degs = _cycle_degrees(g, cyc).values()
    cap = ex_clique(t, r - 1) + t * (g.n - t)
    if c == k - 1 and t in degs:
        return g.num_edges <= cap
    if k % 2 == 0 and c == k - 2 and t in degs:
        return g.num_edges <= cap
    half = Fraction(t) - Fraction(1, 2)
    return g.num_edges <= max(half * (g.n - 1), ex_clique(k - 1, r) + half * (g.n - k + 1))


class SaturatedOutcome(str, enum.Enum):
    HOLDS = "applicable+holds"
    FAILS = "applicable+fails"
    NOT_APPLICABLE = "not_applicable"


def check_saturated_lemma(
    g: Graph, h_vertices: Iterable[int], r: int, k: int, budget: int | None = None
) -> SaturatedOutcome:
    """Completing a ``K_r``-saturated high-degree induced subgraph into a clique
    cannot create the first cycle of length at least ``k``."""
    hv = sorted(set(h_vertices))
    if any(not 0 <= v < g.n for v in hv):
        raise GraphError("h_vertices must be vertices of g")
    t = (k - 1) // 2
    if k < 5 or r < t + 2 or not hv:
        return SaturatedOutcome.NOT_APPLICABLE
    h = g.induced_subgraph(hv)
    if h.min_degree() < t + 1 or not is_kr_saturated(h, r, budget):
        return SaturatedOutcome.NOT_APPLICABLE
    completion = g.add_edges((u, v) for i, u in enumerate(hv) for v in hv[i + 1:])
    if find_long_cycle(completion, k, budget) is None:
        return SaturatedOutcome.NOT_APPLICABLE
    if find_long_cycle(g, k, budget) is not None:
        return SaturatedOutcome.HOLDS
    return SaturatedOutcome.FAILS
