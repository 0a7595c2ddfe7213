import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphpers.dynforest import DynForest, LinkCutTrees
from graphpers.errors import NotConnected, SameTree, StaleHandle


class NaiveForest:
    """Adjacency lists and DFS; the reference for every query."""

    def __init__(self, n):
        self.adj = {x: {} for x in range(n)}

    def link(self, u, v, w):
        self.adj[u][v] = w
        self.adj[v][u] = w

    def cut(self, u, v):
        del self.adj[u][v]
        del self.adj[v][u]

    def path(self, u, v):
        prev = {u: None}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if y not in prev:
                    prev[y] = x
                    stack.append(y)
        if v not in prev:
            return None
        out = []
        while prev[v] is not None:
            out.append(self.adj[v][prev[v]])
            v = prev[v]
        return out


def test_link_connects():
    f = DynForest()
    a, b = f.add_node(), f.add_node()
    assert not f.connected(a, b)
    f.link(a, b, 5)
    assert f.connected(a, b)


def test_link_same_tree_rejected():
    f = DynForest()
    a, b = f.add_node(), f.add_node()
    f.link(a, b, 5)
    with pytest.raises(SameTree):
        f.link(b, a, 7)


def test_path_bottleneck_is_max_weight():
    f = DynForest()
    a, b, c = (f.add_node() for _ in range(3))
    f.link(a, b, 3)
    h = f.link(b, c, 9)
    assert f.path_bottleneck(a, c) == (9, h)
    assert f.bottleneck_or_none(a, a) == -1


def test_cut_and_stale_handles():
    f = DynForest()
    a, b, c = (f.add_node() for _ in range(3))
    h = f.link(a, b, 1)
    f.link(b, c, 2)
    f.cut(h)
    assert not f.connected(a, c)
    assert f.bottleneck_edge(a, c) is None
    with pytest.raises(StaleHandle):
        f.cut(h)
    with pytest.raises(StaleHandle):
        f.weight(h)
    with pytest.raises(NotConnected):
        f.path_bottleneck(a, c)


def test_set_weight_moves_bottleneck():
    f = DynForest()
    a, b, c = (f.add_node() for _ in range(3))
    h1 = f.link(a, b, 1)
    h2 = f.link(b, c, 2)
    f.set_weight(h1, 5)
    assert f.path_bottleneck(a, c) == (5, h1)
    f.set_weight(h2, 6)
    assert f.path_bottleneck(c, a) == (6, h2)
    assert f.weight(h1) == 5


def test_copy_is_independent():
    f = DynForest()
    a, b = f.add_node(), f.add_node()
    g = f.copy()
    f.link(a, b, 1)
    assert not g.connected(a, b)


def test_rooted_lca():
    t = LinkCutTrees(5)
    # 0 is the root; 1, 2 under 0; 3, 4 under 1
    for c, p in ((1, 0), (2, 0), (3, 1), (4, 1)):
        t.link_child(c, p)
    assert t.lca(3, 4) == 1
    assert t.lca(3, 2) == 0
    assert t.find_root(4) == 0
    t.cut_parent(1)
    assert t.find_root(4) == 1


ops = st.lists(st.tuples(st.integers(0, 3), st.integers(0, 11), st.integers(0, 11), st.integers(0, 10**6)), max_size=120)


@settings(max_examples=150, deadline=None)
@given(ops)
def test_agrees_with_naive_forest(seq):
    n = 12
    f = DynForest()
    for _ in range(n):
        f.add_node()
    ref = NaiveForest(n)
    handles = {}  # (u, v) -> handle
    for op, u, v, w in seq:
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        path = ref.path(u, v)
        if op == 0:
            if path is None:
                handles[key] = f.link(u, v, w)
                ref.link(u, v, w)
            else:
                with pytest.raises(SameTree):
                    f.link(u, v, w)
        elif op == 1 and key in handles:
            f.cut(handles.pop(key))
            ref.cut(*key)
        elif op == 2 and key in handles:
            f.set_weight(handles[key], w)
            ref.link(u, v, w)
        else:
            assert f.connected(u, v) == (path is not None)
            got = f.bottleneck_edge(u, v)
            if path is None:
                assert got is None
            else:
                wmax, h = got
                assert wmax == max(path)
                assert f.weight(h) == wmax
    assert f.n_edges == len(handles)


def test_rotation_counter_is_logarithmic():
    rng = random.Random(1)
    n = 4096
    f = DynForest()
    for _ in range(n):
        f.add_node()
    # random tree, then random cut/link/query churn
    handles = []
    for x in range(1, n):
        handles.append((x, f.link(x, rng.randrange(x), rng.randrange(10**6))))
    f.rotations = 0
    n_ops = 20000
    for _ in range(n_ops // 2):
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            f.bottleneck_edge(a, b)
        j = rng.randrange(len(handles))
        x, h = handles[j]
        u, v = f.endpoints(h)
        other = v if x == u else u
        f.cut(h)
        # reattach x's side somewhere random on the other side
        y = rng.randrange(n)
        if f.connected(x, y):
            y = other
        handles[j] = (x, f.link(x, y, rng.randrange(10**6)))
    per_op = f.rotations / n_ops
    assert per_op <= 12 * math.log2(n), per_op
