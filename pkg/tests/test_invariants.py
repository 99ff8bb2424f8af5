import random

import networkx as nx
import pytest
from hypothesis import given, settings

from circum_turan.constructions import construct_F, turan_graph
from circum_turan.graph import (
    Graph,
    GraphError,
    amalgam,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join,
    path_graph,
)
from circum_turan.invariants import (
    BUDGET_ENV,
    BudgetExceeded,
    Certificate,
    CertificateKind,
    ForbiddenFamily,
    SaturatedOutcome,
    block_decomposition,
    check_bondy,
    check_cycle_edge,
    check_dirac,
    check_g_c,
    check_kopylov,
    check_newstability,
    check_saturated_lemma,
    circumference,
    clique_number,
    core,
    cut_vertices,
    cycle_partition,
    default_budget,
    find_clique,
    find_long_cycle,
    find_long_path,
    is_free,
    is_kr_saturated,
    is_two_connected,
    longest_path_order,
)
from circum_turan.naive import representatives

from conftest import dp_longest, from_nx, graphs, nx_circumference, nx_clique_number, nx_longest_path_order

PETERSEN = from_nx(nx.petersen_graph())
BOWTIE = amalgam(complete_graph(3), 0, complete_graph(3), 0)
K4_PENDANT = Graph.from_edges(5, complete_graph(4).edges() + [(3, 4)])


@pytest.fixture(scope="module")
def small_graphs():
    return [g for n in range(1, 8) for g in representatives(n)]


@pytest.mark.parametrize("g, omega", [(complete_graph(5), 5), (turan_graph(7, 3), 3), (PETERSEN, 2),
                                      (empty_graph(0), 0), (empty_graph(3), 1)])
def test_clique_number_examples(g, omega):
    w, cert = clique_number(g)
    assert w == omega
    assert len(cert) == omega and cert.verify(g)


@pytest.mark.parametrize("g, c", [(from_nx(nx.random_labeled_tree(7, seed=3)), 0), (cycle_graph(6), 6),
                                  (PETERSEN, 9), (BOWTIE, 3), (K4_PENDANT, 4)])
def test_circumference_examples(g, c):
    value, cert = circumference(g)
    assert value == c
    if c == 0:
        assert cert is None
    else:
        assert len(cert) == c and cert.verify(g)


@pytest.mark.parametrize("g, ell", [(empty_graph(5), 1), (complete_graph(4), 4),
                                    (join(empty_graph(1), empty_graph(4)), 3), (PETERSEN, 10)])
def test_longest_path_examples(g, ell):
    value, cert = longest_path_order(g)
    assert value == ell and len(cert) == ell and cert.verify(g)


def test_longest_path_needs_a_vertex():
    with pytest.raises(GraphError):
        longest_path_order(empty_graph(0))


def test_is_free_examples():
    assert is_free(join(empty_graph(2), empty_graph(3)), ForbiddenFamily.cycles(3, 5)).free
    v = is_free(complete_graph(4), ForbiddenFamily.cycles(4, 9))
    assert not v.free and v.certificate == Certificate(CertificateKind.CLIQUE, (0, 1, 2, 3))
    v = is_free(cycle_graph(7), ForbiddenFamily.cycles(3, 7))
    assert not v.free and v.certificate.kind is CertificateKind.CYCLE and len(v.certificate) == 7
    v = is_free(path_graph(5), ForbiddenFamily.path(3, 5))
    assert not v.free and v.certificate.kind is CertificateKind.PATH


def test_family_parsing():
    assert ForbiddenFamily.parse("K4,C>=5") == ForbiddenFamily.cycles(4, 5)
    assert ForbiddenFamily.parse("k3, p5") == ForbiddenFamily.path(3, 5)
    assert str(ForbiddenFamily.path(3, 5)) == "K3,P5"
    for bad in ["K4", "C>=5,K4", "K4,Q5", "Kx,C>=5"]:
        with pytest.raises(ValueError):
            ForbiddenFamily.parse(bad)
    with pytest.raises(ValueError):
        ForbiddenFamily.cycles(1, 5)


@pytest.mark.parametrize("g, expected", [(cycle_graph(5), True), (BOWTIE, False), (path_graph(4), False),
                                         (complete_graph(2), False), (PETERSEN, True)])
def test_two_connected_examples(g, expected):
    assert is_two_connected(g) is expected


def test_block_examples():
    d = block_decomposition(BOWTIE)
    assert sorted(map(len, d.blocks)) == [3, 3] and d.cut_vertices == frozenset({0})
    d = block_decomposition(cycle_graph(6))
    assert [len(b) for b in d.blocks] == [6] and not d.cut_vertices
    d = block_decomposition(construct_F(13, 7, 5))
    assert [len(b) for b in d.blocks] == [6, 6, 3] and d.cut_vertices == frozenset({0})
    with pytest.raises(GraphError):
        block_decomposition(empty_graph(2))


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_block_structure_properties(g):
    if not g.is_connected():
        return
    d = block_decomposition(g)
    assert sum(len(b) - 1 for b in d.blocks) == g.n - 1
    edge_owner = {}
    for i, b in enumerate(d.blocks):
        for u, v in g.edges():
            if u in b and v in b:
                assert (u, v) not in edge_owner
                edge_owner[(u, v)] = i
    assert len(edge_owner) == g.num_edges
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.n))
    assert d.cut_vertices == frozenset(nx.articulation_points(h))
    for b in d.blocks:
        if len(b) >= 3:
            assert is_two_connected(g.induced_subgraph(sorted(b)))


def test_core_examples():
    assert core(complete_graph(5), 4) == complete_graph(5)
    assert core(from_nx(nx.random_labeled_tree(9, seed=1)), 2).n == 0
    assert core(BOWTIE, 2) == BOWTIE


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_core_idempotent_and_min_degree(g):
    for d in range(4):
        c = core(g, d)
        assert core(c, d) == c
        if c.n:
            assert c.min_degree() >= d
        h = nx.Graph(g.edges())
        h.add_nodes_from(range(g.n))
        assert c.n == nx.k_core(h, d).number_of_nodes()


def test_saturation_examples():
    assert is_kr_saturated(join(empty_graph(2), empty_graph(3)), 3)
    assert is_kr_saturated(cycle_graph(5), 3)
    assert not is_kr_saturated(path_graph(4), 3)
    assert not is_kr_saturated(complete_graph(4), 4)
    assert is_kr_saturated(turan_graph(7, 3), 4)


def test_cycle_partition_examples():
    p = cycle_partition(cycle_graph(6))
    assert (p.c, p.e_on_cycle, p.e_off) == (6, 6, 0)
    p = cycle_partition(BOWTIE)
    assert (p.c, p.e_on_cycle, p.e_off) == (3, 3, 3)
    p = cycle_partition(K4_PENDANT)
    assert (p.c, p.e_on_cycle, p.e_off) == (4, 6, 1)
    with pytest.raises(GraphError):
        cycle_partition(path_graph(4))


def test_dirac_examples():
    assert check_dirac(cycle_graph(5))
    assert check_dirac(join(empty_graph(3), empty_graph(3)))
    with pytest.raises(GraphError):
        check_dirac(BOWTIE)


def test_kopylov_examples():
    assert check_kopylov(cycle_graph(6), [0, 1, 2, 3, 4, 5])
    assert check_kopylov(complete_graph(4), [2, 0, 3, 1])
    with pytest.raises(GraphError):
        check_kopylov(cycle_graph(6), [0, 2])
    with pytest.raises(GraphError):
        check_kopylov(BOWTIE, [1, 2])


def test_bondy_scope():
    # the inequality itself fails on the bowtie, so only 2-connected graphs are accepted
    p = cycle_partition(BOWTIE)
    assert p.e_off > (p.c // 2) * (BOWTIE.n - p.c)
    with pytest.raises(GraphError):
        check_bondy(BOWTIE)
    c6_plus = disjoint_union(cycle_graph(6), empty_graph(1))
    p = cycle_partition(c6_plus)
    assert p.e_off == 0 <= (p.c // 2) * (c6_plus.n - p.c)
    assert check_bondy(cycle_graph(6))
    assert check_bondy(PETERSEN)


def test_structural_checkers_on_small_graphs(small_graphs):
    for g in small_graphs:
        if is_two_connected(g):
            assert check_dirac(g)
            assert check_bondy(g)
            assert check_g_c(g) in (True, None)
        for r in range(3, 6):
            assert check_cycle_edge(g, r) in (True, None)
        for k in range(5, 8):
            for r in range(3, (k - 1) // 2 + 2):
                assert check_newstability(g, k, r) in (True, None)


def test_saturated_lemma_examples():
    k6 = complete_graph(6)
    assert check_saturated_lemma(k6, range(6), 7, 5) is SaturatedOutcome.HOLDS
    # completion still has no cycle of length >= 7
    assert check_saturated_lemma(k6, range(6), 7, 7) is SaturatedOutcome.NOT_APPLICABLE
    # r below floor((k-1)/2) + 2
    assert check_saturated_lemma(k6, range(6), 3, 7) is SaturatedOutcome.NOT_APPLICABLE
    with pytest.raises(GraphError):
        check_saturated_lemma(k6, [0, 9], 7, 5)


def test_invariants_agree_with_networkx_on_all_small_graphs(small_graphs):
    for g in small_graphs:
        c, cyc = circumference(g)
        assert c == nx_circumference(g)
        assert cyc is None or (cyc.verify(g) and len(cyc) == c)
        w, cl = clique_number(g)
        assert w == nx_clique_number(g) and cl.verify(g)
        ell, p = longest_path_order(g)
        assert ell == nx_longest_path_order(g) and p.verify(g)


def test_is_free_matches_definition_on_small_graphs(small_graphs):
    for g in small_graphs[::3]:
        w = clique_number(g)[0]
        c = circumference(g)[0]
        ell = longest_path_order(g)[0]
        for r in range(2, 6):
            for k in range(3, 8):
                v = is_free(g, ForbiddenFamily.cycles(r, k))
                assert v.free == (w < r and c <= k - 1)
                assert v.free or v.certificate.verify(g)
                v = is_free(g, ForbiddenFamily.path(r, k))
                assert v.free == (w < r and ell <= k - 1)
                assert v.free or (v.certificate.verify(g) and
                                  (len(v.certificate) >= k or v.certificate.kind is CertificateKind.CLIQUE))


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=4), graphs(min_n=1, max_n=4))
def test_twin_heavy_graphs_match_subset_dp(a, b):
    # joins with independent sets create large classes of twins
    g = join(a, disjoint_union(b, empty_graph(3)))
    assert (circumference(g)[0], longest_path_order(g)[0]) == dp_longest(g)


def test_subset_dp_reference_agrees_with_networkx(small_graphs):
    for g in small_graphs[::7]:
        assert dp_longest(g) == (nx_circumference(g), nx_longest_path_order(g))


def test_large_structured_graphs_are_fast():
    g = join(complete_graph(4), empty_graph(56))
    assert circumference(g)[0] == 8
    assert longest_path_order(g)[0] == 9
    assert find_long_cycle(g, 9) is None and find_long_path(g, 10) is None


def test_budget_exceeded_and_env_override(monkeypatch):
    g = complete_graph(9).complement().complement()
    with pytest.raises(BudgetExceeded):
        circumference(PETERSEN, budget=5)
    monkeypatch.setenv(BUDGET_ENV, "7")
    assert default_budget() == 7
    with pytest.raises(BudgetExceeded):
        circumference(PETERSEN)
    monkeypatch.setenv(BUDGET_ENV, "zero")
    with pytest.raises(ValueError):
        default_budget()
    monkeypatch.delenv(BUDGET_ENV)
    assert clique_number(g)[0] == 9


def test_find_clique_within_mask():
    g = turan_graph(6, 3)
    assert find_clique(g, 3) is not None
    assert find_clique(g, 4) is None
    assert find_clique(g, 2, within=0b11) is None  # 0 and 1 share a part
    assert cut_vertices(BOWTIE) == frozenset({0})


def test_kopylov_random_paths():
    rng = random.Random(5)
    g = PETERSEN
    for _ in range(200):
        path = [rng.randrange(10)]
        while True:
            options = [w for w in g.neighbors(path[-1]) if w not in path]
            if not options or rng.random() < 0.15:
                break
            path.append(rng.choice(options))
        if len(path) >= 2:
            assert check_kopylov(g, path)
