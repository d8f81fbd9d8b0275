import networkx as nx
import pytest

from hyperrho.constructions import (C1, C2, C3, CyclePendantJoint, CycleStar, LooseCycle,
                                    LoosePath, build)
from hyperrho.core import Hypergraph


def konig_nx(H: Hypergraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from((("v", v) for v in range(H.n)), side=0)
    G.add_nodes_from((("e", j) for j in range(H.m)), side=1)
    G.add_edges_from((("v", v), ("e", j)) for j, e in enumerate(H.edges) for v in e)
    return G


def isomorphic(H1: Hypergraph, H2: Hypergraph) -> bool:
    """Hypergraph isomorphism via the incidence graphs (test helper only)."""
    if (H1.k, H1.n, H1.m) != (H2.k, H2.n, H2.m):
        return False
    return nx.is_isomorphic(konig_nx(H1), konig_nx(H2),
                            node_match=lambda a, b: a["side"] == b["side"])


CORPUS = [
    (LoosePath(1), 3), (LoosePath(3), 3), (LoosePath(2), 4),
    (LooseCycle(2), 3), (LooseCycle(3), 3), (LooseCycle(4), 4), (LooseCycle(6), 5),
    (CycleStar(3), 3), (CycleStar(5), 4), (CyclePendantJoint(2), 3), (CyclePendantJoint(4), 4),
    (C1(1, 1, 1), 3), (C1(2, 3, 1), 4), (C1(1, 2, 3), 3),
    (C2(1, 1, 1), 3), (C2(2, 1, 3), 4),
    (C3(1, 1), 4), (C3(2, 3), 5),
]


@pytest.fixture(params=CORPUS, ids=lambda p: f"{p[0]}-k{p[1]}")
def corpus_graph(request):
    spec, k = request.param
    return build(spec, k)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for r in sorted(RESULTS, key=lambda r: r.number):
            terminalreporter.write_line(r.line())
