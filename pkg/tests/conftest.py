import random

import pytest

from extremal_energy.graphs import (
    Graph,
    build_cycle,
    build_hypercube,
    build_mobius_ladder,
    build_path,
    build_petersen,
    build_star,
    cartesian_product,
)

ACCEPTANCE_KEY = pytest.StashKey[list]()


def random_connected_graph(n, extra, seed):
    rng = random.Random(seed)
    edges = {(min(v, rng.randrange(v)), v) for v in range(1, n)}  # random spanning tree
    while len(edges) < min(n - 1 + extra, n * (n - 1) // 2):
        u, v = sorted(rng.sample(range(n), 2))
        edges.add((u, v))
    return Graph(n, edges, name=f"random:{n}:{seed}")


def small_corpus(max_n=12):
    graphs = [build_path(n) for n in range(1, 9)]
    graphs += [build_cycle(n) for n in range(3, 13)]
    graphs += [build_hypercube(d) for d in range(1, 4)]
    graphs += [build_mobius_ladder(k) for k in range(3, 7)]
    graphs += [build_star(n) for n in range(2, 7)]
    graphs += [
        build_petersen(),
        cartesian_product(build_path(2), build_cycle(5)),
        cartesian_product(build_path(3), build_path(3)),
        random_connected_graph(7, 3, seed=1),
        random_connected_graph(9, 6, seed=2),
        random_connected_graph(11, 4, seed=3),
    ]
    return [G for G in graphs if G.n <= max_n]


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines):
        terminalreporter.write_line(line[1])
