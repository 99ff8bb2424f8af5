import json
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import strategies as st

from circum_turan.graph import Graph

FROZEN = json.loads((Path(__file__).parent / "data" / "frozen_values.json").read_text())

_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def frozen():
    return FROZEN


@pytest.fixture
def acceptance_log():
    def log(criterion: int, passed: bool, detail: str) -> None:
        _ACCEPTANCE[criterion] = (passed, detail)

    return log


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_ACCEPTANCE):
        passed, detail = _ACCEPTANCE[crit]
        terminalreporter.write_line(f"criterion {crit}: {'PASS' if passed else 'FAIL'}  {detail}")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def nx_circumference(g: Graph) -> int:
    return max((len(c) for c in nx.simple_cycles(to_nx(g))), default=0)


def nx_clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(to_nx(g)))


def nx_longest_path_order(g: Graph) -> int:
    h = to_nx(g)
    best = 1

    def dfs(v, seen):
        nonlocal best
        best = max(best, len(seen))
        for w in h[v]:
            if w not in seen:
                seen.add(w)
                dfs(w, seen)
                seen.remove(w)

    for v in h:
        dfs(v, {v})
    return best


def dp_longest(g: Graph) -> tuple[int, int]:
    """(circumference, longest path order) by Held-Karp over vertex subsets."""
    n = g.n
    if n == 0:
        return 0, 0
    adj = g.masks
    # ends[S] = vertices v such that some path covering exactly S ends at v, starting at min(S)
    circ, path = 0, 1
    anywhere = [0] * (1 << n)
    for v in range(n):
        anywhere[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        e = anywhere[mask]
        if not e:
            continue
        path = max(path, mask.bit_count())
        for v in range(n):
            if e >> v & 1:
                nxt = adj[v] & ~mask
                while nxt:
                    low = nxt & -nxt
                    anywhere[mask | low] |= low
                    nxt ^= low
    rooted = [0] * (1 << n)
    for s in range(n):
        rooted[1 << s] = 1 << s
    for mask in range(1, 1 << n):
        e = rooted[mask]
        if not e:
            continue
        s = (mask & -mask).bit_length() - 1
        if mask.bit_count() >= 3 and any(e >> v & 1 and adj[v] >> s & 1 for v in range(n)):
            circ = max(circ, mask.bit_count())
        for v in range(n):
            if e >> v & 1:
                nxt = adj[v] & ~mask & ~((1 << (s + 1)) - 1)
                while nxt:
                    low = nxt & -nxt
                    rooted[mask | low] |= low
                    nxt ^= low
    return circ, path


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10, density: float | None = None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    if density is None:
        bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        p = density
        bits = [draw(st.floats(0, 1)) < p for _ in pairs]
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])
