"""Graph construction, parsing, families, and structure queries."""

from __future__ import annotations

import random

import pytest

from spreadnum import (
    FamilySpec,
    Graph,
    GraphFormatError,
    build_family,
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    family_from_tokens,
    grid,
    parse_edge_list,
    path,
    serialize_edge_list,
    star,
    structure_report,
)

from conftest import random_graph


def test_parse_small_path():
    g = parse_edge_list("0 1\n1 2")
    assert g.n == 3
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_parse_header_only():
    g = parse_edge_list("n 3")
    assert g.n == 3
    assert g.edge_count == 0


def test_parse_hub_counterexample(hub_counterexample):
    text = "0 6\n1 6\n2 6\n6 7\n1 8\n8 9\n9 3\n3 7\n4 7\n5 7"
    g = parse_edge_list(text)
    assert g == hub_counterexample
    assert g.degree(6) == g.degree(7) == 4


def test_parse_rejects_self_loop_with_line_number():
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_edge_list("0 1\n2 2")


def test_parse_rejects_non_integer():
    with pytest.raises(GraphFormatError, match="non-integer"):
        parse_edge_list("0 x")


def test_parse_rejects_negative_and_bad_shape():
    with pytest.raises(GraphFormatError):
        parse_edge_list("0 -1")
    with pytest.raises(GraphFormatError):
        parse_edge_list("0 1 2")
    with pytest.raises(GraphFormatError):
        parse_edge_list("n 2\nn 3")


def test_parse_collapses_duplicate_edges():
    g = parse_edge_list("0 1\n1 0\n0 1")
    assert g.edge_count == 1


def test_header_with_extra_isolated_vertices():
    g = parse_edge_list("n 5\n0 1")
    assert g.n == 5
    assert g.degrees == (1, 1, 0, 0, 0)


def test_round_trip_exact():
    rng = random.Random(7)
    for _ in range(25):
        g = random_graph(rng.randrange(1, 12), rng.random(), rng)
        assert parse_edge_list(serialize_edge_list(g)) == g


def test_round_trip_degenerate_graphs():
    empty = Graph.from_edges(0, [])
    assert serialize_edge_list(empty) == "n 0\n"
    assert parse_edge_list(serialize_edge_list(empty)) == empty
    isolated = Graph.from_edges(3, [])
    assert parse_edge_list(serialize_edge_list(isolated)) == isolated
    rep = structure_report(empty)
    assert not rep.is_connected and not rep.is_tree and rep.components == ()


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 5)])


def test_star_shape():
    g = star(5)
    assert sorted(g.degrees) == [1, 1, 1, 1, 4]


def test_grid_shape():
    g = grid(3, 3)
    assert g.n == 9
    assert g.edge_count == 12
    assert g.max_degree == 4
    assert g.degree(4) == 4  # center cell (2, 2)


def test_product_of_two_edges_is_a_square():
    g = cartesian_product(path(2), path(2))
    assert g.n == 4
    assert g.degrees == (2, 2, 2, 2)
    assert g.is_connected and g.edge_count == 4


def test_grid_matches_product_vertex_for_vertex():
    for m, n in [(1, 1), (2, 3), (3, 3), (4, 2), (5, 4)]:
        assert grid(m, n) == cartesian_product(path(m), path(n))


def test_grid_id_convention():
    g = grid(4, 3)
    # cell (c, r) -> (c-1)*n + (r-1); (2,1) and (1,1) are horizontal neighbors
    assert 0 in g.adj[3]
    assert 1 in g.adj[0]


@pytest.mark.parametrize(
    "spec, n, edges",
    [
        (FamilySpec("path", (6,)), 6, 5),
        (FamilySpec("cycle", (6,)), 6, 6),
        (FamilySpec("complete", (5,)), 5, 10),
        (FamilySpec("complete_bipartite", (3, 2)), 5, 6),
        (FamilySpec("star", (7,)), 7, 6),
        (FamilySpec("grid", (4, 5)), 20, 31),
    ],
)
def test_family_sizes(spec, n, edges):
    g = build_family(spec)
    assert g.n == n
    assert g.edge_count == edges
    assert sum(g.degrees) == 2 * g.edge_count  # handshake


def test_grid_edge_count_formula():
    for m in range(1, 7):
        for n in range(1, 7):
            assert grid(m, n).edge_count == 2 * m * n - m - n


def test_complete_edge_count_formula():
    for n in range(1, 8):
        assert complete(n).edge_count == n * (n - 1) // 2


def test_family_rejects_bad_parameters():
    with pytest.raises(ValueError):
        FamilySpec("path", (0,))
    with pytest.raises(ValueError):
        FamilySpec("cycle", (2,))
    with pytest.raises(ValueError):
        FamilySpec("grid", (3,))
    with pytest.raises(ValueError):
        FamilySpec("unknown", (3,))
    with pytest.raises(ValueError):
        FamilySpec("cartesian_product", (path(2), 3))
    spec = FamilySpec("cartesian_product", (path(2), path(2)))
    assert build_family(spec).n == 4


def test_family_from_tokens():
    assert family_from_tokens(["grid", "3", "4"]) == FamilySpec("grid", (3, 4))
    with pytest.raises(ValueError):
        family_from_tokens(["grid", "3", "x"])
    with pytest.raises(ValueError):
        family_from_tokens([])


def test_structure_report_path():
    rep = structure_report(path(5))
    assert rep.max_degree == 2 and rep.min_degree == 1
    assert rep.is_tree and rep.is_connected
    assert rep.components == (frozenset(range(5)),)


def test_structure_report_cycle():
    rep = structure_report(cycle(6))
    assert rep.max_degree == rep.min_degree == 2
    assert not rep.is_tree


def test_structure_report_hub_counterexample(hub_counterexample):
    rep = structure_report(hub_counterexample)
    assert rep.max_degree == 4
    assert not rep.is_tree  # contains the cycle 6,1,8,9,3,7
    assert rep.is_connected


def test_structure_report_disconnected():
    g = Graph.from_edges(5, [(0, 1), (2, 3)])
    rep = structure_report(g)
    assert not rep.is_connected
    assert [sorted(c) for c in rep.components] == [[0, 1], [2, 3], [4]]


def test_bipartite_layout():
    g = complete_bipartite(4, 2)
    assert sorted(g.degrees) == [2, 2, 2, 2, 4, 4]


def test_induced_subgraph():
    g = cycle(6)
    sub, old = g.induced({1, 2, 3})
    assert old == (1, 2, 3)
    assert list(sub.edges()) == [(0, 1), (1, 2)]


def test_neighbor_masks():
    g = path(4)
    assert g.neighbor_masks == (0b0010, 0b0101, 0b1010, 0b0100)
