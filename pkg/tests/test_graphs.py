import pytest

from potentia.graphs import (
    GraphFormatError,
    LabeledGraph,
    complete_graph,
    cycle_graph,
    named_graph,
    parse_edge_list,
    path_graph,
)


def test_edges_normalized_and_degrees():
    g = LabeledGraph.from_edges(4, [(2, 1), (3, 2), (4, 3)])
    assert g.sorted_edges() == [(1, 2), (2, 3), (3, 4)]
    assert g.degrees() == (1, 2, 2, 1)
    assert g.degree_sequence() == (2, 2, 1, 1)
    assert g.has_edge(3, 2) and not g.has_edge(1, 4)


def test_rejects_loops_and_out_of_range():
    with pytest.raises(ValueError):
        LabeledGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        LabeledGraph.from_edges(3, [(1, 4)])


def test_masks_round_trip():
    g = cycle_graph(5)
    assert LabeledGraph.from_masks(list(g.masks)) == g


def test_edit_and_induced():
    g = path_graph(4)
    h = g.edit(add=[(1, 4)], remove=[(2, 3)])
    assert h.sorted_edges() == [(1, 2), (1, 4), (3, 4)]
    with pytest.raises(ValueError):
        g.edit(remove=[(1, 3)])
    with pytest.raises(ValueError):
        g.edit(add=[(1, 2)])
    assert g.induced([2, 3, 4]).sorted_edges() == [(1, 2), (2, 3)]


def test_distances():
    assert path_graph(4).distances_from(1) == {1: 0, 2: 1, 3: 2, 4: 3}


def test_edge_list_round_trip():
    g = complete_graph(4)
    assert parse_edge_list(g.to_edge_list()) == g


def test_edge_list_errors_carry_line_numbers():
    with pytest.raises(GraphFormatError) as exc:
        parse_edge_list("# pattern\nn 3\n1 2\n1 9\n")
    assert exc.value.lineno == 4
    with pytest.raises(GraphFormatError):
        parse_edge_list("1 2\n")


@pytest.mark.parametrize(
    "name, n, m",
    [("K4", 4, 6), ("C5", 5, 5), ("P3", 3, 2), ("paw", 4, 4), ("K3vE2", 5, 9), ("K2", 2, 1)],
)
def test_named_graphs(name, n, m):
    g = named_graph(name)
    assert g.n == n and len(g.edges) == m


def test_unknown_name():
    with pytest.raises(ValueError):
        named_graph("Q7")
