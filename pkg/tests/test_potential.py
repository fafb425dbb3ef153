import pytest

from _oracles import brute_alpha, brute_nabla, nx_contains
from potentia.graphs import LabeledGraph, complete_graph, named_graph
from potentia.oracle import graphic_sequences, oracle_potentially_H
from potentia.potential import (
    PatternGraph,
    alpha,
    as_pattern,
    assemble_want_realization,
    degree_sufficient,
    i_star,
    is_potentially_H,
    li_yin_potentially_Kk,
    nabla,
    pi_tilde,
    sigma,
    want_sequence,
)

NAMES = ("K2", "K3", "K4", "P3", "P4", "C4", "C5", "paw", "K3vE2")


def test_alpha_examples():
    assert alpha(complete_graph(4)) == 1
    assert alpha(named_graph("C5")) == 2
    assert alpha(LabeledGraph.from_edges(5, [(4, 5)])) == 4


@pytest.mark.parametrize("name", NAMES)
def test_profile_matches_brute_force(name):
    g = named_graph(name)
    P = as_pattern(g)
    assert P.alpha == brute_alpha(g.n, g.edges)
    assert set(P.nabla) == set(range(P.alpha + 1, P.k + 1))
    for i, v in P.nabla.items():
        assert v == brute_nabla(g.n, g.edges, i)
        F = P.F(i)
        assert F.n == i and F.max_degree() == v


def test_nabla_domain():
    with pytest.raises(ValueError):
        nabla(named_graph("C5"), 2)
    assert [nabla(complete_graph(5), i) for i in range(2, 6)] == [1, 2, 3, 4]
    assert nabla(named_graph("C5"), 3) == 1 and nabla(named_graph("C5"), 4) == 2


@pytest.mark.parametrize(
    "name, expected",
    [
        ("K2", (2, 1, 27)),
        ("K4", (2, 1, 101)),
        ("C5", (3, 2, 171)),
        ("P4", (3, 2, 113)),
        ("C4", (3, 1, 102)),
        ("paw", (3, 2, 113)),
        ("P3", (3, 1, 59)),
    ],
)
def test_i_star(name, expected):
    assert i_star(named_graph(name)) == expected


def test_pattern_needs_an_edge():
    with pytest.raises(ValueError):
        PatternGraph.from_graph(LabeledGraph(3))


@pytest.mark.parametrize(
    "name, n, i, expected",
    [
        ("K4", 8, 2, (7, 7, 2, 2, 2, 2, 2, 2)),
        ("C5", 8, 4, (7, 2, 2, 2, 2, 2, 2, 1)),
        ("K3", 6, 2, (5, 1, 1, 1, 1, 1)),
        ("K4", 6, 3, (5, 2, 2, 2, 2, 1)),
        ("P3", 5, 3, (1, 1, 1, 1, 0)),
    ],
)
def test_pi_tilde(name, n, i, expected):
    assert pi_tilde(named_graph(name), n, i) == expected


def test_pi_tilde_rejects_small_n():
    with pytest.raises(ValueError):
        pi_tilde(complete_graph(4), 3)


def test_sigma():
    assert sigma((7, 7, 2, 2, 2, 2, 2, 2)) == 26
    assert sigma(pi_tilde(complete_graph(3), 6)) == 10
    assert sigma(()) == 0


def test_degree_sufficient():
    K4 = complete_graph(4)
    assert degree_sufficient((5, 4, 3, 3, 2, 1), K4) == (True, None)
    assert degree_sufficient((5, 5, 5, 2, 2, 1), K4) == (False, 1)
    assert degree_sufficient((2, 2, 2, 2, 2, 2), K4) == (False, 4)
    assert degree_sufficient((2, 2, 2), K4) == (False, 4)


def test_li_yin_examples():
    assert li_yin_potentially_Kk((3, 3, 2, 2, 2, 2), 3)
    assert li_yin_potentially_Kk((2,) * 7, 3)
    assert not li_yin_potentially_Kk((3, 3, 3, 3), 4)
    assert oracle_potentially_H((3, 3, 2, 2, 2, 2), complete_graph(3))
    assert oracle_potentially_H((2,) * 7, complete_graph(3))


def test_want_sequence_path_example():
    g = LabeledGraph.from_edges(5, [(1, 2), (1, 3), (2, 3), (4, 5)])
    w = want_sequence((2, 2, 2, 1, 1), 1, 3, g)
    assert w.values == (1, 1, 1, 1)
    host = assemble_want_realization(w)
    assert host.degrees() == (2, 2, 2, 1, 1)
    assert host.has_edge(1, 2) and host.has_edge(1, 3)


def test_want_sequence_k4_example():
    w = want_sequence((3, 3, 3, 3), 2, 4, complete_graph(4))
    assert w.base == (1, 1) and w.values == (1, 1) and w.W == ((), ())
    assert assemble_want_realization(w) == complete_graph(4)


def test_want_sequence_with_external_moves():
    # v1 misses v3 inside S, so its outside neighbor v4 is traded in
    g = LabeledGraph.from_edges(5, [(1, 2), (1, 4), (1, 5), (2, 3), (2, 4), (3, 5)])
    assert g.degrees() == (3, 3, 2, 2, 2)
    w = want_sequence((3, 3, 2, 2, 2), 1, 3, g)
    assert w.base == (2, 2, 1, 1)
    assert w.W == ((4,),) and w.keep == ((5,),)
    assert w.values == (2, 1, 2, 1)
    host = assemble_want_realization(w)
    assert host.degrees() == (3, 3, 2, 2, 2)
    assert host.has_edge(1, 2) and host.has_edge(1, 3) and host.has_edge(1, 5)


def test_want_sequence_requires_degree_sufficiency():
    with pytest.raises(ValueError):
        want_sequence((1, 1, 1, 1), 1, 3)


def test_verdict_examples():
    K4 = complete_graph(4)
    v = is_potentially_H((9, 3, 3, 3, 3, 3, 1, 1, 1, 1), K4)
    assert v.status == "not_potentially_H" and v.route == "oracle"
    v = is_potentially_H((3, 3, 3, 3), K4)
    assert v.status == "potentially_H" and v.witness.verify((3, 3, 3, 3))
    C5 = named_graph("C5")
    v = is_potentially_H(pi_tilde(C5, 9), C5)
    assert v.status == "not_potentially_H"


def test_verdict_unknown_above_cap():
    K4 = complete_graph(4)
    seq = (11, 3, 3, 3, 3, 3) + (1,) * 6
    v = is_potentially_H(seq, K4, cap=10)
    assert v.status == "unknown" and v.witness is None


def test_routes_have_valid_witnesses_and_agree_with_oracle():
    for name in ("K3", "P4", "C5", "paw"):
        H = named_graph(name)
        for s in graphic_sequences(7, min_term=1):
            v = is_potentially_H(s, H)
            truth = oracle_potentially_H(s, H)
            assert v.positive == truth, (name, s)
            if v.positive:
                w = v.witness
                assert w.verify(s)
                assert nx_contains(w.host.n, w.host.edges, H.n, H.edges)


def test_large_routes():
    # big enough that only constructive routes can answer
    K3 = complete_graph(3)
    seq = (2,) * 30
    v = is_potentially_H(seq, K3, cap=10)
    assert v.positive and v.witness.verify(seq)
    C5 = named_graph("C5")
    seq = (4,) * 6 + (2,) * 30
    v = is_potentially_H(seq, C5, cap=10)
    assert v.positive and v.witness.verify(seq)
