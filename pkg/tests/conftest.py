import random
from pathlib import Path

import pytest

from pvoc.fileio import read_edge_list, read_lfr_communities
from pvoc.graph import Cover, Graph, Partition, build_graph

FIXTURES = Path(__file__).parent / "fixtures"
LFR_DIR = FIXTURES / "lfr_n1000"

# two triangles sharing vertex 0: communities {0,1,2} and {0,3,4} overlap at 0
BUTTERFLY_EDGES = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]


@pytest.fixture
def butterfly() -> Graph:
    return build_graph(BUTTERFLY_EDGES)


@pytest.fixture
def butterfly_partition(butterfly) -> Partition:
    # external ids equal internal ids here (first-appearance order 0..4)
    return Partition([0, 0, 0, 1, 1])


@pytest.fixture
def butterfly_truth() -> Cover:
    return Cover([{0, 1, 2}, {0, 3, 4}])


def balanced_hub_gadget():
    """Hub with an internal triangle of 3 neighbors plus 6 external edges
    split 2/2/2 over three foreign communities; hub degree 9."""
    edges = [("v", "x1"), ("v", "x2"), ("v", "x3"),
             ("x1", "x2"), ("x1", "x3"), ("x2", "x3")]
    ext = []
    for i in range(6):
        ext.append((f"e{i}", f"f{i}"))  # give externals a neighbor of their own
        edges.append(("v", f"e{i}"))
    edges += ext
    g = build_graph(edges)
    labels = {}
    for name in ("v", "x1", "x2", "x3"):
        labels[g.internal_id(name)] = 0
    for i in range(6):
        com = 1 + i // 2
        labels[g.internal_id(f"e{i}")] = com
        labels[g.internal_id(f"f{i}")] = com
    return g, Partition([labels[v] for v in g.vertices()])


@pytest.fixture
def two_triangles_bridge() -> Graph:
    return build_graph([(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3)])


@pytest.fixture(scope="session")
def lfr_fixture():
    g = read_edge_list(LFR_DIR / "network.dat")
    truth = read_lfr_communities(LFR_DIR / "community.dat", g)
    return g, truth


@pytest.fixture(scope="session")
def lfr_fixture_paths():
    return LFR_DIR / "network.dat", LFR_DIR / "community.dat"


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    if not edges:
        edges = [(0, 1)]
    return build_graph(edges)


def random_partition(rng: random.Random, g: Graph, k: int) -> Partition:
    return Partition([rng.randrange(k) for _ in range(g.n)])


def random_cover(rng: random.Random, n: int, k: int, max_memb: int = 3) -> Cover:
    members = [set() for _ in range(k)]
    for v in range(n):
        count = rng.randint(1, max_memb)
        for c in rng.sample(range(k), k=min(count, k)):
            members[c].add(v)
    blocks = [b for b in members if b]
    return Cover(blocks)
