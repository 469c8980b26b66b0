import networkx as nx
import pytest

from nil_graph.graph.nil_clean_graph import build_graph
from nil_graph.rings import build_ring


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """Keep config and logs out of the real home directory."""
    monkeypatch.setenv("NILGRAPH_HOME", str(tmp_path / "home"))
    monkeypatch.delenv("NILGRAPH_CONFIG", raising=False)
    monkeypatch.delenv("NILGRAPH_MAX_ORDER", raising=False)
    return tmp_path / "home"


def graph_of(spec):
    return build_graph(build_ring(spec))


def to_networkx(g):
    oracle = nx.Graph()
    oracle.add_nodes_from(range(g.order))
    oracle.add_edges_from(g.edges())
    return oracle


@pytest.fixture
def graph():
    return graph_of


@pytest.fixture
def oracle():
    return to_networkx
