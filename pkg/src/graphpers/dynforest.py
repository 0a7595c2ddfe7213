"""Link-cut trees (splay-tree based) and an edge-weighted dynamic forest.

Nodes are dense integer ids; all per-node state lives in parallel lists so
that a whole forest can be duplicated with a handful of list copies.
``rotations`` counts splay rotations and is the primitive-operation counter
used by the complexity checks.
"""

from __future__ import annotations

from .errors import NotConnected, SameTree, StaleHandle

NOVAL = -1  # value of vertex nodes; all edge weights are >= 0


class LinkCutTrees:
    """Represented trees over integer nodes.

    Supports both rooted use (``link_child``/``cut_parent``/``lca``) and
    unrooted use through ``evert``.  Each node carries a value; splay
    subtrees keep the id of their maximum-value node.
    """

    __slots__ = ("L", "R", "P", "rev", "val", "mx", "rotations")

    def __init__(self, n: int = 0):
        self.L = [-1] * n
        self.R = [-1] * n
        self.P = [-1] * n
        self.rev = [False] * n
        self.val = [NOVAL] * n
        self.mx = list(range(n))
        self.rotations = 0

    def __len__(self):
        return len(self.L)

    def add_node(self, val: int = NOVAL) -> int:
        x = len(self.L)
        self.L.append(-1)
        self.R.append(-1)
        self.P.append(-1)
        self.rev.append(False)
        self.val.append(val)
        self.mx.append(x)
        return x

    def reset_node(self, x: int, val: int = NOVAL) -> None:
        self.L[x] = self.R[x] = self.P[x] = -1
        self.rev[x] = False
        self.val[x] = val
        self.mx[x] = x

    def copy(self) -> "LinkCutTrees":
        c = LinkCutTrees.__new__(LinkCutTrees)
        c.L = self.L[:]
        c.R = self.R[:]
        c.P = self.P[:]
        c.rev = self.rev[:]
        c.val = self.val[:]
        c.mx = self.mx[:]
        c.rotations = 0
        return c

    # -- splay machinery -------------------------------------------------

    def _pull(self, x: int) -> None:
        val, mx = self.val, self.mx
        m = x
        v = val[x]
        c = self.L[x]
        if c >= 0:
            cm = mx[c]
            if val[cm] > v:
                m, v = cm, val[cm]
        c = self.R[x]
        if c >= 0:
            cm = mx[c]
            if val[cm] > v:
                m = cm
        mx[x] = m

    def _splay(self, x: int) -> None:
        L, R, P, rev = self.L, self.R, self.P, self.rev
        path = [x]
        y = x
        while True:
            p = P[y]
            if p < 0 or (L[p] != y and R[p] != y):
                break
            y = p
            path.append(y)
        for y in reversed(path):
            if rev[y]:
                a = L[y]
                b = R[y]
                L[y] = b
                R[y] = a
                if a >= 0:
                    rev[a] = not rev[a]
                if b >= 0:
                    rev[b] = not rev[b]
                rev[y] = False
        if len(path) == 1:
            return
        rotate = self._rotate
        while True:
            p = P[x]
            if p < 0 or (L[p] != x and R[p] != x):
                break
            g = P[p]
            if g >= 0 and (L[g] == p or R[g] == p):
                if (L[g] == p) == (L[p] == x):
                    rotate(p)
                else:
                    rotate(x)
            rotate(x)

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
            elif R[g] == p:
                R[g] = x
        P[x] = g
        P[p] = x
        self._pull(p)
        self._pull(x)
        self.rotations += 1

    def access(self, x: int) -> int:
        """Make the root-to-``x`` path preferred; return the last node joined.

        Called right after ``access(u)``, the return value is ``lca(u, x)``.
        """
        R, P = self.R, self.P
        splay = self._splay
        pull = self._pull
        last = -1
        y = x
        while y >= 0:
            splay(y)
            R[y] = last
            pull(y)
            last = y
            y = P[y]
        splay(x)
        return last

    def evert(self, x: int) -> None:
        self.access(x)
        self.rev[x] = not self.rev[x]

    def find_root(self, x: int) -> int:
        self.access(x)
        L, rev = self.L, self.rev
        y = x
        while True:
            if rev[y]:
                self._splay(y)
            c = L[y]
            if c < 0:
                break
            y = c
        self._splay(y)
        return y

    # -- rooted operations ----------------------------------------------

    def link_child(self, c: int, p: int) -> None:
        """Hang the tree rooted at ``c`` below ``p`` (``c`` must be a root)."""
        self.access(c)
        self.P[c] = p

    def cut_parent(self, c: int) -> bool:
        self.access(c)
        a = self.L[c]
        if a < 0:
            return False
        self.P[a] = -1
        self.L[c] = -1
        self._pull(c)
        return True

    def lca(self, u: int, v: int) -> int:
        self.access(u)
        return self.access(v)


class DynForest:
    """Forest with integer-weighted edges; every edge is its own tree node.

    Vertex nodes are created with :meth:`add_node`.  :meth:`link` returns an
    edge handle (the id of the subdivision node); a handle becomes stale
    when its edge is cut and may later be recycled by another link.
    """

    __slots__ = ("t", "ends", "_free", "n_vertices")

    def __init__(self, n: int = 0):
        self.t = LinkCutTrees(n)
        self.ends = {}
        self._free = []
        self.n_vertices = n

    @property
    def rotations(self) -> int:
        return self.t.rotations

    @rotations.setter
    def rotations(self, value: int) -> None:
        self.t.rotations = value

    def add_node(self) -> int:
        self.n_vertices += 1
        return self.t.add_node(NOVAL)

    def copy(self) -> "DynForest":
        c = DynForest.__new__(DynForest)
        c.t = self.t.copy()
        c.ends = dict(self.ends)
        c._free = self._free[:]
        c.n_vertices = self.n_vertices
        return c

    @property
    def n_edges(self) -> int:
        return len(self.ends)

    def connected(self, u: int, v: int) -> bool:
        return u == v or self.t.find_root(u) == self.t.find_root(v)

    def link(self, u: int, v: int, weight: int, check: bool = True) -> int:
        if check and self.connected(u, v):
            raise SameTree(f"nodes {u} and {v} are already connected")
        t = self.t
        if self._free:
            e = self._free.pop()
            t.reset_node(e, weight)
        else:
            e = t.add_node(weight)
        t.evert(u)
        t.P[u] = e
        t.P[e] = v
        self.ends[e] = (u, v)
        return e

    def cut(self, e: int) -> None:
        ends = self.ends.pop(e, None)
        if ends is None:
            raise StaleHandle(f"edge handle {e} is not live")
        t = self.t
        t.evert(e)
        for x in ends:
            t.access(x)
            t.L[x] = -1
            t.P[e] = -1
            t._pull(x)
        t.reset_node(e)
        self._free.append(e)

    def weight(self, e: int) -> int:
        if e not in self.ends:
            raise StaleHandle(f"edge handle {e} is not live")
        return self.t.val[e]

    def endpoints(self, e: int) -> tuple:
        if e not in self.ends:
            raise StaleHandle(f"edge handle {e} is not live")
        return self.ends[e]

    def set_weight(self, e: int, weight: int) -> None:
        if e not in self.ends:
            raise StaleHandle(f"edge handle {e} is not live")
        t = self.t
        if t.val[e] == weight:
            return
        t.access(e)
        t.val[e] = weight
        t._pull(e)

    def path_bottleneck(self, u: int, v: int) -> tuple:
        """``(max weight, edge handle)`` over the tree path from ``u`` to ``v``."""
        if u == v or not self.connected(u, v):
            raise NotConnected(f"no path between {u} and {v}")
        t = self.t
        t.evert(u)
        t.access(v)
        e = t.mx[v]
        return t.val[e], e

    def bottleneck_edge(self, u: int, v: int):
        """``(weight, handle)`` of the path maximum, or ``None`` when apart."""
        if u == v:
            return None
        t = self.t
        t.evert(u)
        if t.find_root(v) != u:
            return None
        t.access(v)
        e = t.mx[v]
        return t.val[e], e

    def bottleneck_or_none(self, u: int, v: int):
        """Bottleneck weight; -1 for ``u == v`` and ``None`` when apart."""
        if u == v:
            return -1
        r = self.bottleneck_edge(u, v)
        return None if r is None else r[0]

    def edges(self):
        """``(handle, u, v, weight)`` for every live edge."""
        val = self.t.val
        return [(e, a, b, val[e]) for e, (a, b) in self.ends.items()]
