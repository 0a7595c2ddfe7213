"""Merge forests: leaves are vertices, internal nodes are negative edges.

Roots and nearest common ancestors come from a rooted link-cut tree.
Subtree minima come from an Euler-tour sequence kept in a splay forest:
every node owns an open token ``2x`` and a close token ``2x + 1``, and the
subtree of ``x`` is exactly the token range between them.  Only open tokens
of leaves carry a value.
"""

from __future__ import annotations

from .dynforest import LinkCutTrees
from .errors import DifferentTrees, NoParent
from .model import Filtration, Pairing

_BIG = float("inf")


class _TourForest:
    """Splay-tree sequences with minimum aggregate (argmin token)."""

    __slots__ = ("L", "R", "P", "val", "mn", "rotations")

    def __init__(self):
        self.L = []
        self.R = []
        self.P = []
        self.val = []
        self.mn = []
        self.rotations = 0

    def new_pair(self, value) -> None:
        """Append tokens ``open, close`` joined as one sequence."""
        o = len(self.L)
        c = o + 1
        self.L += [-1, o]
        self.R += [-1, -1]
        self.P += [c, -1]
        self.val += [value, _BIG]
        self.mn += [o, o if value < _BIG else c]

    def _pull(self, x: int) -> None:
        val, mn = self.val, self.mn
        m = x
        v = val[x]
        c = self.L[x]
        if c >= 0 and val[mn[c]] < v:
            m = mn[c]
            v = val[m]
        c = self.R[x]
        if c >= 0 and val[mn[c]] < v:
            m = mn[c]
        mn[x] = m

    def _rotate(self, x: int) -> None:
        L, R, P = self.L, self.R, self.P
        p = P[x]
        g = P[p]
        if L[p] == x:
            b = R[x]
            L[p] = b
            R[x] = p
        else:
            b = L[x]
            R[p] = b
            L[x] = p
        if b >= 0:
            P[b] = p
        if g >= 0:
            if L[g] == p:
                L[g] = x
            else:
                R[g] = x
        P[x] = g
        P[p] = x
        self._pull(p)
        self._pull(x)
        self.rotations += 1

    def splay(self, x: int) -> None:
        P, L = self.P, self.L
        rotate = self._rotate
        while P[x] >= 0:
            p = P[x]
            g = P[p]
            if g >= 0:
                rotate(p if (L[g] == p) == (L[p] == x) else x)
            rotate(x)

    def split_before(self, x: int):
        """Detach everything left of ``x``; return (left root, x)."""
        self.splay(x)
        a = self.L[x]
        if a >= 0:
            self.P[a] = -1
            self.L[x] = -1
            self._pull(x)
        return a, x

    def split_after(self, x: int):
        self.splay(x)
        b = self.R[x]
        if b >= 0:
            self.P[b] = -1
            self.R[x] = -1
            self._pull(x)
        return x, b

    def join(self, a: int, b: int) -> int:
        if a < 0:
            return b
        if b < 0:
            return a
        R = self.R
        x = a
        while R[x] >= 0:
            x = R[x]
        self.splay(x)
        R[x] = b
        self.P[b] = x
        self._pull(x)
        return x

    def root_of(self, x: int) -> int:
        self.splay(x)
        return x


class MergeForest:
    """Merge forest with the root/cut/link/nca/change_val/subtree_min set.

    Nodes are dense ids; ``key`` names what each node stands for and
    ``node_of`` maps back.  ``level`` is the event index of the node.
    """

    def __init__(self):
        self.lct = LinkCutTrees()
        self.tour = _TourForest()
        self.parent = []
        self.children = []
        self.level = []
        self.key = []
        self.node_of = {}

    @property
    def rotations(self) -> int:
        return self.lct.rotations + self.tour.rotations

    def __len__(self) -> int:
        return len(self.parent)

    def _new(self, key, level, leaf: bool) -> int:
        x = self.lct.add_node()
        self.tour.new_pair(level if leaf else _BIG)
        self.parent.append(None)
        self.children.append([])
        self.level.append(level)
        self.key.append(key)
        self.node_of[key] = x
        return x

    def add_leaf(self, key, level: int) -> int:
        return self._new(key, level, True)

    def add_internal(self, key, level: int, a: int, b: int) -> int:
        """New node over the trees containing ``a`` and ``b``."""
        ra, rb = self.root(a), self.root(b)
        if ra == rb:
            raise DifferentTrees(f"{self.key[a]} and {self.key[b]} already merged")
        x = self._new(key, level, False)
        self.link(x, ra)
        self.link(x, rb)
        return x

    def is_leaf(self, x: int) -> bool:
        return self.tour.val[2 * x] < _BIG

    # -- the six operations -----------------------------------------------

    def root(self, x: int) -> int:
        return self.lct.find_root(x)

    def cut(self, x: int) -> None:
        p = self.parent[x]
        if p is None:
            raise NoParent(f"node {self.key[x]} is a root")
        self.lct.cut_parent(x)
        self.children[p].remove(x)
        self.parent[x] = None
        t = self.tour
        a, _ = t.split_before(2 * x)
        _, c = t.split_after(2 * x + 1)
        t.join(a, c)

    def link(self, u: int, v: int) -> None:
        """Make the root of ``v``'s tree a child of ``u``."""
        r = self.root(v)
        if r == self.root(u):
            raise DifferentTrees(f"{self.key[u]} and {self.key[v]} share a tree")
        assert len(self.children[u]) < 2, "merge nodes are binary"
        self.lct.link_child(r, u)
        self.parent[r] = u
        self.children[u].append(r)
        t = self.tour
        sub = t.root_of(2 * r)
        a, b = t.split_after(2 * u)
        t.join(t.join(a, sub), b)

    def nca(self, u: int, v: int) -> int:
        if self.root(u) != self.root(v):
            raise DifferentTrees(f"{self.key[u]} and {self.key[v]} lie in different trees")
        return self.lct.lca(u, v)

    def change_val(self, x: int, value) -> None:
        """Set the value (and level) of leaf ``x``."""
        t = self.tour
        o = 2 * x
        assert t.val[o] < _BIG, "only leaves carry values"
        t.splay(o)
        t.val[o] = value
        t._pull(o)
        self.level[x] = value

    def subtree_min(self, x: int) -> int:
        """Leaf of minimum value below ``x``."""
        t = self.tour
        a, _ = t.split_before(2 * x)
        mid, c = t.split_after(2 * x + 1)
        tok = t.mn[mid]
        t.join(t.join(a, mid), c)
        return tok // 2

    # -- inspection ---------------------------------------------------------

    def set_level(self, x: int, level: int) -> None:
        if self.is_leaf(x):
            self.change_val(x, level)
        else:
            self.level[x] = level

    def shape(self) -> dict:
        """``key -> (level, parent key)``; equal shapes mean equal forests."""
        out = {}
        for x, k in enumerate(self.key):
            if self.node_of.get(k) != x:
                continue
            p = self.parent[x]
            out[k] = (self.level[x], None if p is None else self.key[p])
        return out

    def dump(self) -> str:
        """Nested ``(level children...)`` text, children ordered by level."""

        def rec(x):
            kids = sorted(self.children[x], key=lambda c: self.level[c])
            inner = "".join(" " + rec(c) for c in kids)
            return f"({self.level[x]}{inner})"

        roots = [x for x in range(len(self.parent)) if self.parent[x] is None and self.node_of.get(self.key[x]) == x]
        roots.sort(key=lambda r: self.level[r])
        return " ".join(rec(r) for r in roots)

    def relabel(self, x: int, key) -> None:
        old = self.key[x]
        if self.node_of.get(old) == x:
            del self.node_of[old]
        self.key[x] = key
        self.node_of[key] = x


def build(filtration: Filtration, pairing: Pairing) -> MergeForest:
    """Merge forest of a standard filtration given its pairing."""
    mf = MergeForest()
    negative = pairing.destroyers()
    leaf = {}
    for ev in filtration.events:
        s = ev.simplex
        if s.is_vertex:
            leaf[s.u] = mf.add_leaf(s, ev.index)
        elif ev.index in negative:
            mf.add_internal(s, ev.index, leaf[s.u], leaf[s.v])
    return mf
