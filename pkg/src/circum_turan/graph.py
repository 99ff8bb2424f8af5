"""Labeled simple undirected graphs and the graph6 text format.

Vertices are the integers ``0..n-1``. Adjacency is stored as one bitmask per
vertex, which keeps every search in this package on cheap integer operations.
Graphs are immutable: every constructor returns a new value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (bad labels, bad graph6 text)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=True)
class Graph:
    n: int
    masks: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if len(self.masks) != self.n:
            raise GraphError(f"expected {self.n} adjacency masks, got {len(self.masks)}")
        if __debug__:
            full = (1 << self.n) - 1
            for u, m in enumerate(self.masks):
                if m & ~full:
                    raise GraphError(f"vertex {u} has a neighbour outside 0..{self.n - 1}")
                if m >> u & 1:
                    raise GraphError(f"loop at vertex {u}")
                for v in bits(m):
                    if not self.masks[v] >> u & 1:
                        raise GraphError(f"asymmetric adjacency between {u} and {v}")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, tuple(masks))

    # -- queries ----------------------------------------------------------

    @cached_property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(bits(m)) for m in self.masks)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.masks[v]))

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.masks]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.masks[u] >> (u + 1) << (u + 1))]

    def nonedges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.masks[u] >> v & 1
        ]

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by smallest vertex."""
        return components_of(self.masks, self.vertex_mask)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- derived graphs ---------------------------------------------------

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``; vertex ``vertices[i]`` becomes label ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise GraphError("repeated vertex in induced_subgraph")
        masks = []
        for v in vertices:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range for n={self.n}")
            masks.append(sum(1 << index[w] for w in bits(self.masks[v]) if w in index))
        return Graph(len(vertices), tuple(masks))

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        masks = list(self.masks)
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return Graph(self.n, tuple(masks))

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~m & ~(1 << u) for u, m in enumerate(self.masks)))

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``order[i]`` is called ``i``."""
        if sorted(order) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of all vertices")
        return self.induced_subgraph(order)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, e={self.num_edges})"


def components_of(masks: Sequence[int], within: int) -> list[int]:
    """Components of the subgraph induced by the vertex bitmask ``within``."""
    out = []
    left = within
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= masks[v]
            nxt &= within & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        left &= ~comp
    return out


# -- constructors ---------------------------------------------------------


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise GraphError("n must be nonnegative")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << u) for u in range(n)))


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise GraphError("n must be nonnegative")
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1`` keeps its labels, ``g2`` is shifted up by ``g1.n``."""
    shift = g1.n
    return Graph(g1.n + g2.n, g1.masks + tuple(m << shift for m in g2.masks))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides; ``g1`` labels come first."""
    shift = g1.n
    left = g1.vertex_mask
    right = g2.vertex_mask << shift
    masks = tuple(m | right for m in g1.masks) + tuple((m << shift) | left for m in g2.masks)
    return Graph(g1.n + g2.n, masks)


def amalgam(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Identify ``v1`` of ``g1`` with ``v2`` of ``g2``.

    ``g1`` keeps its labels; the vertices of ``g2`` other than ``v2`` follow in
    their original order.
    """
    if not 0 <= v1 < g1.n:
        raise GraphError(f"vertex {v1} out of range for the first graph (n={g1.n})")
    if not 0 <= v2 < g2.n:
        raise GraphError(f"vertex {v2} out of range for the second graph (n={g2.n})")
    label = {}
    nxt = g1.n
    for w in range(g2.n):
        if w == v2:
            label[w] = v1
        else:
            label[w] = nxt
            nxt += 1
    edges = g1.edges() + [(label[a], label[b]) for a, b in g2.edges()]
    return Graph.from_edges(g1.n + g2.n - 1, edges)


# -- graph6 ---------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("graph too large for graph6")


def graph6_encode(g: Graph) -> str:
    """Standard graph6 (no header): size prefix then the upper triangle by columns."""
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.masks[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= x < 64 for x in vals):
        raise GraphError(f"invalid graph6 character in {s!r}")
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            if len(vals) < 8:
                raise GraphError("truncated graph6 size field")
            n = 0
            for x in vals[2:8]:
                n = (n << 6) | x
            body = vals[8:]
        else:
            if len(vals) < 4:
                raise GraphError("truncated graph6 size field")
            n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
            body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise GraphError(
            f"graph6 bit field has {len(body)} bytes, expected {(need + 5) // 6} for n={n}"
        )
    masks = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if body[pos // 6] >> (5 - pos % 6) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            pos += 1
    pad = len(body) * 6 - need
    if pad and body[-1] & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits in graph6 string")
    return Graph(n, tuple(masks))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Parse a newline-separated graph6 stream; yields ``(line_number, graph)``.

    Blank lines are skipped. Errors carry the 1-based line number.
    """
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield lineno, graph6_decode(line)
        except GraphError as exc:
            raise GraphError(f"line {lineno}: {exc}") from exc
