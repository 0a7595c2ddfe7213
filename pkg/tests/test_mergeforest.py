import random

import pytest
from hypothesis import given, settings

from graphpers.errors import DifferentTrees, NoParent
from graphpers.mergeforest import MergeForest, build
from graphpers.model import Filtration
from graphpers.standard import UnionFind, compute_pairing
from graphpers.stdswitch import StdUpdateState
from helpers import V, standard_filtrations, tri


def tri_forest():
    f = tri()
    return build(f, compute_pairing(f))


def test_tri_forest_shape():
    mf = tri_forest()
    assert mf.dump() == "(4 (2) (3 (0) (1)))"
    shape = mf.shape()
    assert shape[V(0)] == (0, shape[V(0)][1])
    ab, bc = tri().events[3].simplex, tri().events[4].simplex
    assert shape[ab] == (3, bc)
    assert shape[bc] == (4, None)
    assert tri().events[5].simplex not in shape


def test_tri_nca_and_subtree_min():
    mf = tri_forest()
    a, c = mf.node_of[V(0)], mf.node_of[V(2)]
    bc = mf.node_of[tri().events[4].simplex]
    assert mf.nca(a, c) == bc
    assert mf.subtree_min(bc) == a


def test_change_val_moves_the_min():
    mf = tri_forest()
    a, b = mf.node_of[V(0)], mf.node_of[V(1)]
    ab = mf.node_of[tri().events[3].simplex]
    mf.change_val(a, 1)
    mf.change_val(b, 0)
    assert mf.subtree_min(ab) == b


def test_vertices_only_and_empty():
    f = Filtration.standard([V(0), V(1)])
    mf = build(f, compute_pairing(f))
    assert mf.dump() == "(0) (1)"
    assert build(Filtration.standard([]), compute_pairing(Filtration.standard([]))).dump() == ""


def test_errors():
    mf = tri_forest()
    a = mf.node_of[V(0)]
    root = mf.root(a)
    with pytest.raises(NoParent):
        mf.cut(root)
    other = mf.add_leaf(V(9), 6)
    with pytest.raises(DifferentTrees):
        mf.nca(a, other)
    with pytest.raises(DifferentTrees):
        mf.link(a, root)


def test_cut_and_link_roundtrip():
    mf = tri_forest()
    ab = mf.node_of[tri().events[3].simplex]
    bc = mf.node_of[tri().events[4].simplex]
    mf.cut(ab)
    assert mf.root(mf.node_of[V(0)]) == ab
    assert mf.dump() == "(3 (0) (1)) (4 (2))"
    mf.link(bc, ab)
    assert mf.dump() == "(4 (2) (3 (0) (1)))"
    assert mf.subtree_min(bc) == mf.node_of[V(0)]


class NaiveTree:
    """Parent pointers with a brute-force answer for each query."""

    def __init__(self):
        self.parent = {}
        self.val = {}

    def root(self, x):
        while self.parent[x] is not None:
            x = self.parent[x]
        return x

    def ancestors(self, x):
        out = [x]
        while self.parent[x] is not None:
            x = self.parent[x]
            out.append(x)
        return out

    def nca(self, a, b):
        up = set(self.ancestors(a))
        for x in self.ancestors(b):
            if x in up:
                return x

    def subtree_min(self, x):
        best = None
        for y, v in self.val.items():
            if v is not None and x in self.ancestors(y) and (best is None or v < self.val[best]):
                best = y
        return best


def test_operations_match_parent_arrays():
    rng = random.Random(7)
    for _ in range(30):
        mf = MergeForest()
        ref = NaiveTree()
        nodes = []
        for i in range(rng.randint(2, 25)):
            x = mf.add_leaf(i, rng.randrange(1000))
            ref.parent[x] = None
            ref.val[x] = mf.level[x]
            nodes.append(x)
        for step in range(80):
            op = rng.randrange(5)
            a, b = rng.choice(nodes), rng.choice(nodes)
            ra, rb = ref.root(a), ref.root(b)
            if op == 0 and ra != rb:
                x = mf.add_internal(("n", step), 2000 + step, a, b)
                ref.parent[x] = None
                ref.val[x] = None
                ref.parent[ra] = x
                ref.parent[rb] = x
                nodes.append(x)
            elif op == 1 and ref.parent[a] is not None:
                p = ref.parent[a]
                mf.cut(a)
                ref.parent[a] = None
                # give the orphaned slot back to a fresh tree so arity stays binary
                if len(mf.children[p]) < 2 and ra != ref.root(a) and rng.random() < 0.5:
                    mf.link(p, a)
                    ref.parent[a] = p
            elif op == 2 and ref.val[a] is not None:
                v = rng.randrange(1000)
                mf.change_val(a, v)
                ref.val[a] = v
            elif op == 3:
                assert mf.root(a) == ra
                if ra == rb:
                    assert mf.nca(a, b) == ref.nca(a, b)
            else:
                m = mf.subtree_min(a)
                want = ref.subtree_min(a)
                if want is None:
                    # an internal node whose leaves were all cut away
                    assert not mf.is_leaf(m)
                else:
                    assert ref.val[m] == ref.val[want]


@settings(max_examples=60, deadline=None)
@given(standard_filtrations())
def test_trees_track_components(f):
    """Trees of the level-below-i subforest are the components of G_i, for every i."""
    mf = build(f, compute_pairing(f))
    nodes = [x for x in range(len(mf)) if mf.node_of.get(mf.key[x]) == x]
    for x in nodes:
        p = mf.parent[x]
        if p is not None:
            assert mf.level[p] > mf.level[x]
            assert len(mf.children[p]) == 2
    leaves = {mf.key[x].u: x for x in nodes if mf.key[x].is_vertex}

    def top(x, i):
        while mf.parent[x] is not None and mf.level[mf.parent[x]] < i:
            x = mf.parent[x]
        return x

    uf = UnionFind()
    for i, ev in enumerate(f.events, start=1):
        s = ev.simplex
        if s.is_vertex:
            uf.add(s.u, i)
        else:
            uf.union(s.u, s.v)
        by_uf, by_tree = {}, {}
        for u in leaves:
            if u in uf:
                by_uf.setdefault(uf.find(u), set()).add(u)
                by_tree.setdefault(top(leaves[u], i), set()).add(u)
        assert sorted(map(sorted, by_uf.values())) == sorted(map(sorted, by_tree.values()))


@settings(max_examples=40, deadline=None)
@given(standard_filtrations())
def test_nca_level_is_first_connection(f):
    st = StdUpdateState.from_filtration(f)
    verts = [s.u for s in f.simplices() if s.is_vertex]
    rng = random.Random(len(verts))
    for _ in range(10):
        a, b = rng.choice(verts), rng.choice(verts)
        if a == b:
            continue
        x, y = st.leaf[a], st.leaf[b]
        first = st.first_connection(a, b)
        if st.mf.root(x) != st.mf.root(y):
            assert first is None
        else:
            assert st.mf.level[st.mf.nca(x, y)] == first - 1
