import random

from hypothesis import strategies as st

from transversal.extremal import random_spanning_tree
from transversal.model import GraphCollection


@st.composite
def collections(draw, max_vertices=6, max_graphs=5, max_edges=5):
    n = draw(st.integers(2, max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    graphs = draw(
        st.lists(
            st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges),
            max_size=max_graphs,
        )
    )
    return GraphCollection.from_edge_lists(n, graphs)


@st.composite
def star_families(draw, max_vertices=6, max_graphs=6):
    n = draw(st.integers(3, max_vertices))
    delta = draw(st.integers(2, n - 1))
    graphs = []
    for _ in range(draw(st.integers(0, max_graphs))):
        c = draw(st.integers(0, n - 1))
        leaves = draw(st.lists(st.sampled_from([v for v in range(n) if v != c]), min_size=delta, max_size=delta, unique=True))
        graphs.append([(c, y) for y in leaves])
    return GraphCollection.from_edge_lists(n, graphs), delta


@st.composite
def tree_collections(draw, max_order=5, max_vertices=10, max_graphs=6):
    n = draw(st.integers(2, max_order))
    m = draw(st.integers(n, max_vertices))
    t = draw(st.integers(0, max_graphs))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    graphs = [random_spanning_tree(rng.sample(range(m), n), rng) for _ in range(t)]
    return GraphCollection.from_edge_lists(m, graphs), n


def relabel(collection, perm, shuffle_colors=None):
    graphs = [[(perm[u], perm[v]) for u, v in g] for g in collection.graphs]
    if shuffle_colors is not None:
        graphs = [graphs[i] for i in shuffle_colors]
    return GraphCollection.from_edge_lists(collection.vertex_count, graphs)
