"""Barcode maintenance under the four zigzag switches.

The zigzag filtration is held through its up-down filtration on cells.
Outward and inward switches leave the up-down filtration alone and only
move the event bijection.  Forward switches swap two neighbours in the
ascending part, backward switches two neighbours in the descending part.

* vertex-edge and edge-vertex pairs live in two standard switch states, one
  for the ascending part and one for the descending part read backwards;
* closed-closed dimension-0 pairs are the oldest ascending and the oldest
  descending vertex of each component of the full graph;
* edge-edge pairs are repaired with connectivity queries on intersections
  of an ascending and a descending graph.  Those are answered from spanning
  forests of the descending graphs at every ``g``-th index
  (``g = ceil(sqrt(m))``), weighted by ascending index and extended on
  demand by at most ``g`` edges.
"""

from __future__ import annotations

import math

from .dynforest import DynForest
from .errors import InvalidSwitch, KindMismatch, OutOfRange
from .model import ZIGZAG, Filtration, Interval, endpoint_types, validate
from .standard import UnionFind
from .stdswitch import StdUpdateState
from .zigzag import convert, updown_pairs

KINDS = ("forward", "backward", "outward", "inward")


def _cid(s) -> int:
    return s.u if s.v < 0 else s.tag


def checkpoint_gap(m: int) -> int:
    """``ceil(sqrt(m))``, at least 1."""
    return math.isqrt(m - 1) + 1 if m > 1 else 1


def checkpoint_indices(m: int, k: int | None = None) -> list:
    """Indices ``m, m - g, m - 2g, ...`` that stay at or above ``k = m / 2``."""
    if k is None:
        k = m // 2
    g = checkpoint_gap(m)
    out = []
    lam = m
    while lam >= k:
        out.append(lam)
        lam -= g
    return out


class ZZUpdateState:
    def __init__(self, filtration: Filtration, check: bool = True):
        if check:
            validate(filtration)
        ud = convert(filtration)
        self.multigraph = filtration.multigraph
        self.k = k = ud.k
        self.m = m = ud.m
        self.cells = ud.cells
        self.keys = ud.keys
        # zigzag events by position
        self.fadd = [ev.add for ev in filtration.events]
        self.fcell = []
        self.fidx = []
        a = d = 0
        for ev in filtration.events:
            if ev.add:
                self.fcell.append(a)
                self.fidx.append(a)
                a += 1
            else:
                self.fcell.append(ud.desc[d])
                self.fidx.append(d)
                d += 1
        self.fpos_a = ud.phi[:k]
        self.fpos_d = ud.phi[k:]
        # up-down order
        self.acell = list(range(k))
        self.apos = list(range(k))
        self.dcell = list(ud.desc)
        self.dpos = ud.dpos()

        self.up = StdUpdateState(self.cells, multigraph=True, check=False)
        self.down = StdUpdateState([self.cells[c] for c in reversed(self.dcell)], multigraph=True, check=False)

        ps = updown_pairs(ud)
        self.mate_up = dict(ps.ee)
        self.mate_down = {b: a for a, b in ps.ee.items()}

        # components of the full graph never change
        uf = UnionFind()
        for c, s in enumerate(self.cells):
            if s.v < 0:
                uf.add(c, c)
            else:
                uf.union(s.u, s.v)
        self.comp = {}
        self.oldest_up = {}
        self.oldest_down = {}
        for c, s in enumerate(self.cells):
            if s.v < 0:
                r = uf.find(c)
                self.comp[c] = r
                if r not in self.oldest_up or self.apos[c] < self.apos[self.oldest_up[r]]:
                    self.oldest_up[r] = c
                if r not in self.oldest_down or self.dpos[c] > self.dpos[self.oldest_down[r]]:
                    self.oldest_down[r] = c

        self._build_checkpoints()
        self.touch = 0
        self.last_ops = 0
        self.last_std_ops = 0

    # -- checkpoints -------------------------------------------------------

    def _build_checkpoints(self) -> None:
        m, k = self.m, self.k
        self.lams = checkpoint_indices(m, k)
        self.gap = checkpoint_gap(m)
        self.vnode = {}
        base = DynForest()
        for c, s in enumerate(self.cells):
            if s.v < 0:
                self.vnode[c] = base.add_node()
        self.forests = [base]
        self.hnd = [{}]
        self.cell_at = [{}]
        self.disp = [set()]
        for q in range(1, len(self.lams)):
            self.forests.append(self.forests[q - 1].copy())
            self.hnd.append(dict(self.hnd[q - 1]))
            self.cell_at.append(dict(self.cell_at[q - 1]))
            log = []
            for t in range(self.lams[q] - k, self.lams[q - 1] - k):
                c = self.dcell[t]
                if self.cells[c].v >= 0:
                    self._insert(q, c, log)
            prev = self.hnd[q - 1]
            self.disp.append({c for op, c in log if op == "cut" and c in prev})
        for f in self.forests:
            f.rotations = 0

    def _insert(self, q: int, c: int, log: list) -> None:
        """Add edge cell ``c`` to checkpoint ``q`` keeping it a minimum forest."""
        f = self.forests[q]
        s = self.cells[c]
        a, b = self.vnode[s.u], self.vnode[s.v]
        w = self.apos[c]
        r = f.bottleneck_edge(a, b)
        if r is not None:
            if r[0] < w:
                return
            old = self.cell_at[q].pop(r[1])
            del self.hnd[q][old]
            f.cut(r[1])
            log.append(("cut", old))
        h = f.link(a, b, w, check=False)
        self.hnd[q][c] = h
        self.cell_at[q][h] = c
        log.append(("link", c))

    def _rollback(self, q: int, log: list) -> None:
        f = self.forests[q]
        for op, c in reversed(log):
            if op == "link":
                h = self.hnd[q].pop(c)
                del self.cell_at[q][h]
                f.cut(h)
            else:
                s = self.cells[c]
                h = f.link(self.vnode[s.u], self.vnode[s.v], self.apos[c], check=False)
                self.hnd[q][c] = h
                self.cell_at[q][h] = c

    def _fix_disp(self, q: int, c: int) -> None:
        if 1 <= q < len(self.lams):
            if c in self.hnd[q - 1] and c not in self.hnd[q]:
                self.disp[q].add(c)
            else:
                self.disp[q].discard(c)

    def connected(self, x: int, y: int, a_lt: int, d_ge: int) -> bool:
        """Are vertex cells ``x, y`` joined by edges with ascending index
        below ``a_lt`` and descending position at least ``d_ge``?"""
        if x == y:
            return True
        if a_lt <= 0:
            return False
        k, m = self.k, self.m
        lam = k + d_ge
        q = (m - lam) // self.gap
        log = []
        for t in range(d_ge, self.lams[q] - k):
            c = self.dcell[t]
            if self.cells[c].v >= 0:
                self._insert(q, c, log)
        r = self.forests[q].bottleneck_edge(self.vnode[x], self.vnode[y])
        self._rollback(q, log)
        return r is not None and r[0] < a_lt

    def _ckpt_edge_weight(self, c: int, w: int) -> None:
        for q in range(1, len(self.lams)):
            h = self.hnd[q].get(c)
            if h is not None:
                self.forests[q].set_weight(h, w)

    def _ckpt_forward(self, e1: int, e2: int, j: int) -> None:
        """Ascending edges ``e1`` (at ``j - 1``) and ``e2`` (at ``j``) trade places."""
        k = self.k
        s2 = self.cells[e2]
        for q in range(1, len(self.lams)):
            hq = self.hnd[q]
            h1, h2 = hq.get(e1), hq.get(e2)
            if h1 is None and h2 is None:
                continue
            f = self.forests[q]
            if h1 is not None and h2 is None and self.dpos[e2] >= self.lams[q] - k:
                r = f.bottleneck_edge(self.vnode[s2.u], self.vnode[s2.v])
                if r[1] == h1:
                    del hq[e1]
                    del self.cell_at[q][h1]
                    f.cut(h1)
                    h = f.link(self.vnode[s2.u], self.vnode[s2.v], j - 1, check=False)
                    hq[e2] = h
                    self.cell_at[q][h] = e2
                    for c in (e1, e2):
                        self._fix_disp(q, c)
                        self._fix_disp(q + 1, c)
                    continue
            if h1 is not None:
                f.set_weight(h1, j)
            if h2 is not None:
                f.set_weight(h2, j - 1)

    def _ckpt_backward(self, t: int, sigma: int, tau: int) -> None:
        """Repair the checkpoint at index ``k + t`` after ``tau`` moved to
        descending position ``t - 1`` and ``sigma`` to ``t``."""
        k = self.k
        lam = k + t
        if (self.m - lam) % self.gap:
            return
        q = (self.m - lam) // self.gap
        if q >= len(self.lams) or q == 0:
            return
        log = []
        hq = self.hnd[q]
        if tau in hq:
            h = hq.pop(tau)
            del self.cell_at[q][h]
            self.forests[q].cut(h)
            log.append(("cut", tau))
            cand = set(self.disp[q])
            for x in range(t, self.lams[q - 1] - k):
                c = self.dcell[x]
                if self.cells[c].v >= 0 and c not in hq:
                    cand.add(c)
            for c in sorted(cand, key=lambda c: self.apos[c]):
                if c not in hq:
                    self._insert(q, c, log)
        elif self.cells[sigma].v >= 0:
            self._insert(q, sigma, log)
        for _, c in log:
            self._fix_disp(q, c)
            self._fix_disp(q + 1, c)

    # -- switching ---------------------------------------------------------

    def kind_at(self, i: int) -> str:
        a1, a2 = self.fadd[i - 1], self.fadd[i]
        if a1 and a2:
            return "forward"
        if not a1 and not a2:
            return "backward"
        return "outward" if a1 else "inward"

    def _ops(self) -> int:
        return self.up.rotations + self.down.rotations + sum(f.rotations for f in self.forests) + self.touch

    def switch(self, kind: str, i: int) -> None:
        if kind not in KINDS:
            raise KindMismatch(f"unknown switch kind {kind!r}", i)
        if not 1 <= i <= self.m - 1:
            raise OutOfRange(f"switch position {i} outside 1..{self.m - 1}", i)
        actual = self.kind_at(i)
        if actual in ("outward", "inward") and self.keys[self.fcell[i - 1]] == self.keys[self.fcell[i]]:
            # invalid whichever mixed kind was asked for
            raise InvalidSwitch(f"cannot switch {self.keys[self.fcell[i]]} with itself", i)
        if actual != kind:
            raise KindMismatch(f"arrows at {i} make a {actual} switch, not {kind}", i)
        before = self._ops()
        self.last_std_ops = 0
        if kind == "forward":
            self._forward(i)
        elif kind == "backward":
            self._backward(i)
        else:
            self._cross(i)
        self.last_ops = self._ops() - before

    def _cross(self, i: int) -> None:
        c1, c2 = self.fcell[i - 1], self.fcell[i]
        if self.keys[c1] == self.keys[c2]:
            raise InvalidSwitch(f"cannot switch {self.keys[c1]} with itself", i)
        j1, j2 = self.fidx[i - 1], self.fidx[i]
        if self.fadd[i - 1]:
            self.fpos_a[j1] = i
            self.fpos_d[j2] = i - 1
        else:
            self.fpos_d[j1] = i
            self.fpos_a[j2] = i - 1
        self.fadd[i - 1], self.fadd[i] = self.fadd[i], self.fadd[i - 1]
        self.fcell[i - 1], self.fcell[i] = c2, c1
        self.fidx[i - 1], self.fidx[i] = j2, j1
        self.touch += 8

    def _forward(self, i: int) -> None:
        j = self.fidx[i]
        c1, c2 = self.acell[j - 1], self.acell[j]
        s1, s2 = self.cells[c1], self.cells[c2]
        if s1.v < 0 and s2.v >= 0 and s1.u in (s2.u, s2.v):
            raise InvalidSwitch(f"{self.keys[c1]} is a face of {self.keys[c2]}", i)
        edges = s1.v >= 0 and s2.v >= 0
        if edges:
            neg1, neg2 = s1 in self.up.mate, s2 in self.up.mate
            cyc = neg1 and not neg2 and self.up.detect_cycle(j)
        self.up.switch(j)
        self.last_std_ops = self.up.ops
        self.acell[j - 1], self.acell[j] = c2, c1
        self.apos[c2], self.apos[c1] = j - 1, j
        self.fcell[i - 1], self.fcell[i] = c2, c1
        if s1.v < 0 and s2.v < 0:
            r = self.comp[c1]
            if r == self.comp[c2] and self.oldest_up[r] == c1:
                self.oldest_up[r] = c2
        elif edges:
            self._ckpt_forward(c1, c2, j)
            self._edge_edge(c1, c2, j, not neg1, not neg2, cyc, self.mate_up, self.mate_down, self._view_up)
        else:
            e, w = (c1, j) if s1.v >= 0 else (c2, j - 1)
            self._ckpt_edge_weight(e, w)
        self.touch += 6

    def _backward(self, i: int) -> None:
        t = self.fidx[i]
        k = self.k
        c1, c2 = self.dcell[t - 1], self.dcell[t]  # sigma, tau
        s1, s2 = self.cells[c1], self.cells[c2]
        if s2.v < 0 and s1.v >= 0 and s2.u in (s1.u, s1.v):
            raise InvalidSwitch(f"{self.keys[c2]} is a face of {self.keys[c1]}", i)
        J = k - t  # position of sigma when the descending part is read backwards
        edges = s1.v >= 0 and s2.v >= 0
        if edges:
            neg_tau, neg_sigma = s2 in self.down.mate, s1 in self.down.mate
            cyc = neg_tau and not neg_sigma and self.down.detect_cycle(J)
        self.down.switch(J)
        self.last_std_ops = self.down.ops
        self.dcell[t - 1], self.dcell[t] = c2, c1
        self.dpos[c2], self.dpos[c1] = t - 1, t
        self.fcell[i - 1], self.fcell[i] = c2, c1
        if s1.v < 0 and s2.v < 0:
            r = self.comp[c1]
            if r == self.comp[c2] and self.oldest_down[r] == c2:
                self.oldest_down[r] = c1
        self._ckpt_backward(t, c1, c2)
        if edges:
            self._edge_edge(c2, c1, J, not neg_tau, not neg_sigma, cyc, self.mate_down, self.mate_up, self._view_down)
        self.touch += 6

    def _view_up(self):
        return (lambda c: self.apos[c]), (lambda c: self.dpos[c]), self.connected

    def _view_down(self):
        k = self.k

        def conn(x, y, a_lt, d_ge):
            return self.connected(x, y, k - d_ge, k - a_lt)

        return (lambda c: k - 1 - self.dpos[c]), (lambda c: k - 1 - self.apos[c]), conn

    def _edge_edge(self, e1, e2, j, pos1, pos2, cyc, mate_a, mate_d, view) -> None:
        """Edge-edge pairs after ``e1`` (was at ``j - 1``) and ``e2`` (was at
        ``j``) traded places in the ascending part of ``view``.

        ``pos1``/``pos2`` and ``cyc`` were read before the switch; every
        position read here is already the switched one.
        """
        if not pos1 and pos2:
            if cyc:
                eps = mate_a.pop(e2)
                mate_a[e1] = eps
                mate_d[eps] = e1
            return
        if not (pos1 and pos2):
            return
        eps, eps2 = mate_a[e1], mate_a[e2]
        apos, dpos, conn = view()
        h = dpos(eps2)
        if h <= dpos(eps):
            return
        s2, t2 = self.cells[e2], self.cells[eps2]
        keep = (
            dpos(e2) >= h
            and conn(s2.u, s2.v, j - 1, h)
            and apos(eps2) < j
            and conn(t2.u, t2.v, j, h + 1)
        )
        if not keep:
            mate_a[e1], mate_a[e2] = eps2, eps
            mate_d[eps2], mate_d[eps] = e1, e2

    # -- read-out ----------------------------------------------------------

    def filtration(self) -> Filtration:
        items = [(a, self.keys[c]) for a, c in zip(self.fadd, self.fcell)]
        return Filtration.build(items, ZIGZAG, self.multigraph)

    def _phi(self, x: int) -> int:
        k = self.k
        return self.fpos_a[x] if x < k else self.fpos_d[x - k]

    def updown_pairs(self) -> list:
        """``(dim, creator, destroyer)`` over up-down indices."""
        k, apos, dpos = self.k, self.apos, self.dpos
        out = []
        for s, e in self.up.mate.items():
            if s.v < 0:
                out.append((0, apos[s.u], apos[e.tag]))
        for s, e in self.down.mate.items():
            if s.v < 0:
                out.append((0, k + dpos[e.tag], k + dpos[s.u]))
        for r, x in self.oldest_up.items():
            out.append((0, apos[x], k + dpos[self.oldest_down[r]]))
        for a, d in self.mate_up.items():
            out.append((1, apos[a], k + dpos[d]))
        return out

    def barcode(self) -> list:
        F = self.filtration()
        out = []
        for p, c, d in self.updown_pairs():
            fc, fd = self._phi(c), self._phi(d)
            if fc < fd:
                dim, b, dd = p, fc + 1, fd
            else:
                dim, b, dd = p - 1, fd + 1, fc
            bt, dt = endpoint_types(F, b, dd)
            out.append(Interval(dim, b, dd, bt, dt))
        out.sort()
        return out

    def edge_pairs(self) -> set:
        """Edge-edge pairs as ``(addition event index, deletion event index)``."""
        return {(self.fpos_a[self.apos[a]], self.fpos_d[self.dpos[d]]) for a, d in self.mate_up.items()}

    def check_checkpoints(self, which=None) -> None:
        """Compare checkpoint forests against a fresh Kruskal run."""
        k = self.k
        qs = range(len(self.lams)) if which is None else which
        for q in qs:
            lo = self.lams[q] - k
            edges = [c for c in self.dcell[lo:] if self.cells[c].v >= 0]
            edges.sort(key=lambda c: self.apos[c])
            uf = UnionFind()
            for c in self.vnode:
                uf.add(c, c)
            want = set()
            for c in edges:
                s = self.cells[c]
                if uf.union(s.u, s.v) is not None:
                    want.add(c)
            got = set(self.hnd[q])
            assert got == want, f"checkpoint {q} differs from its minimum spanning forest"
            for c, h in self.hnd[q].items():
                assert self.forests[q].weight(h) == self.apos[c], f"checkpoint {q} has a stale weight"
            if q:
                assert self.disp[q] == set(self.hnd[q - 1]) - got, f"checkpoint {q} displaced set is stale"
