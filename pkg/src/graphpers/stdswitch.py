"""Switch updates for standard graph filtrations.

The state keeps the pairing, the merge forest and a minimum spanning forest
of the final graph whose edges are exactly the negative edges, weighted by
their current positions.  The spanning forest answers the two questions a
switch of two negative-or-positive edges raises:

* a negative ``e1`` followed by a positive ``e2`` lies on a cycle with it iff
  the bottleneck between ``e2``'s ends is ``e1``;
* two vertices are connected in ``G_j`` iff their bottleneck is below ``j``.
"""

from __future__ import annotations

from .dynforest import DynForest
from .errors import InvalidSwitch, OutOfRange
from .mergeforest import MergeForest
from .model import STANDARD, Filtration, Pairing, validate
from .standard import elder

# which rule changed the pairing during the last switch
VV_SWAP = "vertex-vertex swap"
RELABEL = "negative-positive relabel"
MERGE_SWAP = "both-negative swap"


class StdUpdateState:
    """Pairing, merge forest and spanning forest of a standard filtration."""

    def __init__(self, simplices, multigraph: bool = False, check: bool = True):
        self.ev = list(simplices)
        self.multigraph = multigraph
        if check:
            validate(Filtration.standard(self.ev, multigraph))
        self.pos = {s: i for i, s in enumerate(self.ev)}
        res = elder(self.ev)
        self.uf_steps = res.uf.steps
        ev = self.ev
        self.mate = {}
        for a, b in res.pairs.items():
            self.mate[ev[a]] = ev[b]
            self.mate[ev[b]] = ev[a]

        self.mf = MergeForest()
        self.leaf = {}
        self.msf = DynForest()
        self.vnode = {}
        self.handle = {}
        for i, s in enumerate(ev):
            if s.v < 0:
                self.leaf[s.u] = self.mf.add_leaf(s, i)
                self.vnode[s.u] = self.msf.add_node()
            elif s in self.mate:
                self.mf.add_internal(s, i, self.leaf[s.u], self.leaf[s.v])
                self.handle[s] = self.msf.link(self.vnode[s.u], self.vnode[s.v], i)
        self.last_change = None
        self.ops = 0

    @classmethod
    def from_filtration(cls, filtration: Filtration) -> "StdUpdateState":
        return cls([e.simplex for e in filtration.events], filtration.multigraph)

    @property
    def m(self) -> int:
        return len(self.ev)

    @property
    def rotations(self) -> int:
        return self.mf.rotations + self.msf.rotations

    # -- queries -----------------------------------------------------------

    def filtration(self) -> Filtration:
        return Filtration.standard(self.ev, self.multigraph)

    def pairing(self) -> Pairing:
        pos = self.pos
        pairs = {}
        for s, t in self.mate.items():
            if s.v < 0:
                pairs[pos[s]] = pos[t]
        unpaired = frozenset(i for i, s in enumerate(self.ev) if s not in self.mate)
        return Pairing(pairs, unpaired)

    def negative(self, s) -> bool:
        return s.v >= 0 and s in self.mate

    def msf_edges(self) -> dict:
        return {s: self.msf.weight(h) for s, h in self.handle.items()}

    def forest_shape(self) -> dict:
        return self.mf.shape()

    def bottleneck(self, a: int, b: int):
        """Bottleneck weight between vertex ids ``a`` and ``b`` (``None`` if apart)."""
        return self.msf.bottleneck_or_none(self.vnode[a], self.vnode[b])

    def detect_cycle(self, i: int) -> bool:
        """Is the negative edge at ``i - 1`` on a cycle with the positive edge at ``i``?"""
        e2 = self.ev[i]
        return self.bottleneck(e2.u, e2.v) == i - 1

    def first_connection(self, a: int, b: int):
        """Smallest ``j`` with ``a`` and ``b`` connected in ``G_j``."""
        w = self.bottleneck(a, b)
        return None if w is None else w + 1

    # -- switching ---------------------------------------------------------

    def check_switch(self, i: int) -> None:
        if not 1 <= i <= len(self.ev) - 1:
            raise OutOfRange(f"switch position {i} outside 1..{len(self.ev) - 1}", i)
        s, t = self.ev[i - 1], self.ev[i]
        if s.v < 0 and t.v >= 0 and s.u in (t.u, t.v):
            raise InvalidSwitch(f"{s} is a face of {t}", i)

    def switch(self, i: int) -> None:
        """Exchange events ``i - 1`` and ``i`` and repair all structures."""
        self.check_switch(i)
        before = self.rotations
        self.last_change = None
        ev = self.ev
        s, t = ev[i - 1], ev[i]
        if s.v < 0 and t.v < 0:
            self._vertex_vertex(s, t)
        elif s.v >= 0 and t.v >= 0:
            self._edge_edge(s, t, i)
        ev[i - 1], ev[i] = t, s
        self.pos[t] = i - 1
        self.pos[s] = i
        for x, p in ((t, i - 1), (s, i)):
            if x.v < 0:
                self.mf.change_val(self.leaf[x.u], p)
            elif x in self.mate:
                self.mf.set_level(self.mf.node_of[x], p)
                self.msf.set_weight(self.handle[x], p)
        self.ops = self.rotations - before

    def _vertex_vertex(self, v1, v2) -> None:
        mf = self.mf
        a, b = self.leaf[v1.u], self.leaf[v2.u]
        if mf.root(a) != mf.root(b):
            return
        e = mf.key[mf.nca(a, b)]
        pe = self.pos[e]
        mate, pos = self.mate, self.pos
        m1, m2 = mate.get(v1), mate.get(v2)
        if (m1 is None or pos[m1] >= pe) and (m2 is None or pos[m2] >= pe):
            for v in (v1, v2):
                mate.pop(v, None)
            if m1 is not None:
                mate[v2] = m1
                mate[m1] = v2
            if m2 is not None:
                mate[v1] = m2
                mate[m2] = v1
            if m1 is not None or m2 is not None:
                self.last_change = VV_SWAP

    def _edge_edge(self, e1, e2, i: int) -> None:
        mate = self.mate
        neg1, neg2 = e1 in mate, e2 in mate
        if not neg1:
            return
        mf, msf = self.mf, self.msf
        if not neg2:
            if self.detect_cycle(i):
                # e1 closes the same cycle as e2: e2 takes over the merge
                x = mf.node_of[e1]
                mf.relabel(x, e2)
                v = mate.pop(e1)
                mate[e2] = v
                mate[v] = e2
                msf.cut(self.handle.pop(e1))
                self.handle[e2] = msf.link(self.vnode[e2.u], self.vnode[e2.v], i - 1)
                self.last_change = RELABEL
            return
        n1, n2 = mf.node_of[e1], mf.node_of[e2]
        if mf.parent[n1] != n2:
            return
        a, b = mf.children[n1]
        (c,) = [x for x in mf.children[n2] if x != n1]
        u, v, w = (mf.key[mf.subtree_min(x)] for x in (a, b, c))
        pos = self.pos
        if pos[v] > pos[u]:
            a, b, u, v = b, a, v, u
        # the forest must already see the switched order
        msf.set_weight(self.handle[e1], i)
        msf.set_weight(self.handle[e2], i - 1)
        fig4b = self.bottleneck(u.u, w.u) <= i - 1
        p = mf.parent[n2]
        if p is not None:
            mf.cut(n2)
        mf.cut(n1)
        mf.cut(a)
        mf.cut(b)
        mf.cut(c)
        low, high = (a, b) if fig4b else (b, a)
        mf.link(n2, low)
        mf.link(n2, c)
        mf.link(n1, n2)
        mf.link(n1, high)
        if p is not None:
            mf.link(p, n1)
        if fig4b and pos[w] < pos[u]:
            x1, x2 = mate[e1], mate[e2]
            mate[e1], mate[x2] = x2, e1
            mate[e2], mate[x1] = x1, e2
            self.last_change = MERGE_SWAP
