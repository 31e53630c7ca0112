import random

import pytest

from cmpoly.graph_core import Graph


def random_connected_graph(seed, n_lo=4, n_hi=8, max_extra=4, m_cap=12):
    """Seeded random connected graph: random spanning tree plus extra edges."""
    rng = random.Random(seed)
    n = rng.randint(n_lo, n_hi)
    verts = list(range(1, n + 1))
    edges = set()
    for v in verts[1:]:
        u = rng.choice(verts[:v - 1])
        edges.add((min(u, v), max(u, v)))
    target = min(n * (n - 1) // 2, m_cap, len(edges) + rng.randint(0, max_extra))
    while len(edges) < target:
        u, v = rng.sample(verts, 2)
        edges.add((min(u, v), max(u, v)))
    return Graph(n, tuple(sorted(edges)))


def to_networkx(g):
    import networkx as nx
    G = nx.Graph()
    G.add_nodes_from(range(1, g.n + 1))
    G.add_edges_from(g.edges)
    return G


@pytest.fixture(scope="session")
def random_suite():
    return [random_connected_graph(seed) for seed in range(100)]
