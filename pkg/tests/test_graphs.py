from itertools import combinations

import networkx as nx
import pytest

from extremal_energy.graphs import (
    Graph,
    GraphError,
    all_pairs_distances,
    build_cycle,
    build_hypercube,
    build_mobius_ladder,
    build_path,
    build_petersen,
    build_star,
    cartesian_product,
    distance_vector,
    format_edge_list,
    from_edge_list,
    is_distance_degree_regular,
    is_regular_at_every_distance,
    parse_edge_list,
    sphere,
)


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


def test_path_constructor():
    assert build_path(1).n == 1 and not build_path(1).edges
    assert build_path(2).edges == {(0, 1)}
    assert build_path(5).diameter == 4
    with pytest.raises(GraphError):
        build_path(0)


@pytest.mark.parametrize("n, diam", [(3, 1), (12, 6), (7, 3)])
def test_cycle_diameter(n, diam):
    G = build_cycle(n)
    assert G.diameter == diam
    assert all(G.degree(u) == 2 for u in range(n))


def test_cycle_rejects_small():
    with pytest.raises(GraphError):
        build_cycle(2)


@pytest.mark.parametrize("d, n, m", [(1, 2, 1), (3, 8, 12), (4, 16, 32)])
def test_hypercube_sizes(d, n, m):
    G = build_hypercube(d)
    assert (G.n, len(G.edges)) == (n, m)
    if d == 3:
        assert G.diameter == 3


def test_mobius_ladder():
    M6 = build_mobius_ladder(3)
    assert (M6.n, len(M6.edges)) == (6, 9)
    assert all(M6.degree(u) == 3 for u in range(6))
    M8 = build_mobius_ladder(4)
    assert (M8.n, len(M8.edges)) == (8, 12)
    assert is_distance_degree_regular(M8)


def test_petersen():
    P = build_petersen()
    assert len(P.edges) == 15
    assert all(P.degree(u) == 3 for u in range(10))
    assert P.diameter == 2
    assert nx.is_isomorphic(to_nx(P), nx.petersen_graph())
    # every non-adjacent pair at distance 2
    d = all_pairs_distances(P).d
    assert all(d[u][v] == (1 if P.has_edge(u, v) else 2) for u, v in combinations(range(10), 2))
    assert is_distance_degree_regular(P)


def test_cartesian_products():
    P2 = build_path(2)
    square = cartesian_product(P2, P2)
    assert nx.is_isomorphic(to_nx(square), nx.cycle_graph(4))
    cube = cartesian_product(P2, build_cycle(4))
    assert nx.is_isomorphic(to_nx(cube), to_nx(build_hypercube(3)))
    prism = cartesian_product(P2, build_cycle(5))
    assert (prism.n, len(prism.edges)) == (10, 15)


def test_product_flat_labels():
    G = cartesian_product(build_path(2), build_cycle(5))
    # (g, h) -> 5g + h; layer edges and spokes
    assert G.has_edge(0, 1) and G.has_edge(5, 6) and G.has_edge(0, 5) and G.has_edge(4, 0)
    assert not G.has_edge(0, 6)


def test_from_edge_list_validation():
    assert from_edge_list(2, [(0, 1)]) == build_path(2)
    with pytest.raises(GraphError, match="disconnected"):
        from_edge_list(3, [(0, 1)])
    with pytest.raises(GraphError, match="loop"):
        from_edge_list(3, [(0, 0)])
    with pytest.raises(GraphError, match="outside"):
        from_edge_list(2, [(0, 2)])
    with pytest.raises(GraphError, match="duplicate"):
        from_edge_list(2, [(0, 1), (1, 0)])


def test_graph_is_immutable():
    G = build_path(3)
    with pytest.raises(AttributeError):
        G.n = 4


def test_distance_examples():
    assert build_cycle(12).distances[0, 7] == 5
    assert build_path(5).distances[0, 4] == 4


def test_distance_vectors():
    P3 = build_path(3)
    assert distance_vector(P3, 1) == (1, 1)
    assert distance_vector(P3, 0) == (1, 2)
    C6 = build_cycle(6)
    assert {distance_vector(C6, u) for u in range(6)} == {(1, 1, 2, 2, 3)}


def test_spheres():
    C6 = build_cycle(6)
    assert sphere(C6, 0, 3) == (3,)
    assert sphere(C6, 0, 2) == (2, 4)
    assert sphere(C6, 4, 0) == (4,)
    with pytest.raises(GraphError):
        sphere(C6, 0, 4)


def test_ddr_examples():
    assert not is_distance_degree_regular(build_path(3))
    assert all(is_distance_degree_regular(build_cycle(n)) for n in range(3, 20))
    assert is_distance_degree_regular(cartesian_product(build_mobius_ladder(4), build_cycle(3)))


def test_distances_match_networkx(corpus):
    for G in corpus:
        ref = dict(nx.all_pairs_shortest_path_length(to_nx(G)))
        d = G.distances.d
        assert all(d[u][v] == ref[u][v] for u in range(G.n) for v in range(G.n)), G


def test_metric_axioms(corpus):
    for G in corpus:
        d, n = G.distances.d, G.n
        assert G.distances.diameter == max(max(r) for r in d)
        for u in range(n):
            assert d[u][u] == 0
            for v in range(n):
                assert d[u][v] == d[v][u]
                assert (d[u][v] == 1) == G.has_edge(u, v)
                for w in range(n):
                    assert d[u][w] <= d[u][v] + d[v][w]


def test_adjacency_symmetric(corpus):
    for G in corpus:
        for u in range(G.n):
            for v in G.adjacency[u]:
                assert u in G.adjacency[v]
        assert nx.is_connected(to_nx(G))


def test_sphere_sizes_sum(corpus):
    for G in corpus:
        for u in range(G.n):
            assert sum(len(sphere(G, u, i)) for i in range(1, G.diameter + 1)) == G.n - 1


def test_ddr_two_formulations_agree(corpus):
    for G in corpus:
        assert is_distance_degree_regular(G) == is_regular_at_every_distance(G), G


def test_products_of_ddr_graphs_are_ddr():
    family = [build_cycle(n) for n in range(3, 7)] + [
        build_mobius_ladder(3),
        build_mobius_ladder(4),
        build_hypercube(3),
    ]
    for G in family:
        for H in family:
            assert is_distance_degree_regular(cartesian_product(G, H))


def test_edge_list_roundtrip():
    G = build_petersen()
    H = parse_edge_list(format_edge_list(G))
    assert H == G


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("3 2\n0 1\n1 1\n", 3),
        ("3 2\n0 1\n1 5\n", 3),
        ("3 2\n0 1\n", 1),
        ("2 1\nx 1\n", 2),
        ("3 2\n0 1\n1 0\n", 3),
        ("3 x\n", 1),
    ],
)
def test_edge_list_errors_carry_line_numbers(text, lineno):
    with pytest.raises(GraphError, match=f"line {lineno}:"):
        parse_edge_list(text)


def test_edge_list_disconnected():
    with pytest.raises(GraphError, match="disconnected"):
        parse_edge_list("4 2\n0 1\n2 3\n")


def test_star():
    S = build_star(4)
    assert S.degree(0) == 3 and S.diameter == 2
    assert not is_distance_degree_regular(S)


def test_labeled_cycle_detection():
    assert build_cycle(5).is_labeled_cycle()
    assert not build_path(5).is_labeled_cycle()
    assert not Graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).is_labeled_cycle()
