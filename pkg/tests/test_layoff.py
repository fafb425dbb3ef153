import pytest

from _instances import layoff_instances
from potentia.graphs import LabeledGraph
from potentia.layoff import (
    LayoffClaimError,
    LayoffError,
    LayoffHypothesisError,
    LayoffState,
    check_hypotheses,
    choose_Np,
    initial_state,
    laying_off,
    proper_form,
    run_layoff,
    select_layoff_vertex,
)
from potentia.oracle import contains_subgraph

TRACE_SEQ = (9, 9, 9, 9, 8, 8, 7, 7, 7, 7, 4, 4, 4, 4)


def trace_steps():
    return [s for s, _ in laying_off(TRACE_SEQ, 5, 1, max_steps=4)]


def test_worked_example_residuals():
    steps = trace_steps()
    assert [s.residual for s in steps] == [
        (8,) * 6 + (7,) * 4 + (4,) * 3,
        (8, 8) + (7,) * 8 + (4, 4),
        (7,) * 8 + (6, 6, 4),
        (7,) * 4 + (6,) * 6,
    ]


def test_worked_example_choices():
    steps = trace_steps()
    assert [s.laid_off for s in steps] == [14, 13, 12, 11]
    assert steps[1].neighborhood == (1, 2, 3, 4)
    assert set(steps[2].neighborhood) == {5, 6, 9, 10}
    assert set(steps[3].neighborhood) == {1, 2, 3, 4}
    assert [s.good for s in steps] == [True, True, False, True]


def test_worked_example_proper_form():
    steps = trace_steps()
    assert steps[1].order[:6] == (5, 6, 1, 2, 3, 4)
    part = steps[1].partition
    assert part.tau2 == (5, 6) and part.tau3 == (1, 2, 3, 4)
    assert part.inconsistency == 6
    assert steps[2].partition.consistent
    assert proper_form(initial_state(TRACE_SEQ, 5, 1)).inconsistency == 0


def test_select_layoff_vertex_ties_and_minimum():
    s0 = initial_state(TRACE_SEQ, 5, 1)
    assert select_layoff_vertex(s0) == 14
    st = LayoffState((4, 4, 4, 4, 3, 4), 5, 2, 0, (4, 4, 4, 4, 3, 4), frozenset({5, 6}))
    assert select_layoff_vertex(st) == 5


def test_select_layoff_vertex_exhausted():
    st = initial_state((3, 3, 3, 3), 2, 1)
    with pytest.raises(LayoffError, match="exhausted"):
        select_layoff_vertex(st)


def test_choose_Np_rules():
    s0 = initial_state(TRACE_SEQ, 5, 1)
    nbh, rule = choose_Np(s0, 14)
    assert nbh == (1, 2, 3, 4) and rule == 1


def test_proper_form_rejects_bad_order():
    # v3 jumps ahead of v1 while v2 sits in between: not a proper form
    with pytest.raises(LayoffClaimError):
        proper_form((3, 2, 1), (5, 4, 3))


def test_hypotheses_named():
    with pytest.raises(LayoffHypothesisError, match="r\\(k\\+2\\)"):
        check_hypotheses(TRACE_SEQ, 5, 1)
    with pytest.raises(LayoffHypothesisError, match="0 < r < k"):
        check_hypotheses(TRACE_SEQ, 3, 3)
    with pytest.raises(LayoffHypothesisError, match="r\\(k\\+r\\+1\\)"):
        check_hypotheses((9, 9, 9, 3, 3, 3, 3, 3, 2, 2, 2), 4, 1)


def test_star_instance():
    seq = (15, 15, 15) + (3,) * 9 + (1,) * 12
    trace, w = run_layoff(seq, 4, 1)
    assert w.verify(seq)
    assert trace.good_count == 1 and len(trace.steps) == 1
    a = trace.good_vertices[0]
    assert all(w.host.has_edge(a, v) for v in (1, 2, 3))
    star = LabeledGraph.from_edges(4, [(1, 4), (2, 4), (3, 4)])
    assert contains_subgraph(w.host, star)


def test_random_instances():
    for seq, k, r in layoff_instances(60, seed=5):
        trace, w = run_layoff(seq, k, r)
        assert w.host.degrees() == seq
        assert trace.good_count >= r
        assert len(trace.steps) <= (r - 1) * k + 1
        assert w.verify(seq)


def test_claim_checks_run_and_trace_serializes():
    seq, k, r = layoff_instances(1, seed=9)[0]
    trace, _ = run_layoff(seq, k, r)
    d = trace.to_dict()
    assert d["good_count"] == trace.good_count
    assert "inconsistency" in trace.table()
