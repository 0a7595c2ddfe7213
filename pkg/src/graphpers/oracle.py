"""Brute-force references, independent of the production engines.

Only the data model is shared.  Everything here favours obviousness over
speed: boundary matrices are reduced column by column, zigzag barcodes are
read off from ranks over GF(2), and the edge-edge update keeps explicit
representative cycles.
"""

from __future__ import annotations

from .errors import InvalidRepresentative, InvalidSwitch, KindMismatch, OutOfRange, TooLarge
from .model import Filtration, Interval, Pairing, endpoint_types

MAX_RANK_ORACLE = 400


# -- standard persistence by matrix reduction --------------------------------


def reduce_standard(filtration: Filtration) -> Pairing:
    row_of = {}
    pivot = {}  # lowest row -> column
    pairs = {}
    zero = []
    for j, ev in enumerate(filtration.events):
        s = ev.simplex
        if s.v < 0:
            row_of[s.u] = j
            zero.append(j)
            continue
        col = (1 << row_of[s.u]) ^ (1 << row_of[s.v])
        while col:
            low = col.bit_length() - 1
            if low not in pivot:
                break
            col ^= pivot[low][1]
        if col:
            low = col.bit_length() - 1
            pivot[low] = (j, col)
            pairs[low] = j
        else:
            zero.append(j)
    unpaired = frozenset(j for j in zero if j not in pairs)
    return Pairing(pairs, unpaired)


# -- zigzag persistence by rank counting -------------------------------------


class _DSU:
    def __init__(self):
        self.p = {}

    def add(self, x):
        self.p.setdefault(x, x)

    def find(self, x):
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.p[ra] = rb
        return True


def _graphs(filtration: Filtration) -> list:
    """Vertex and edge sets of ``G_0 .. G_m``."""
    vs, es = set(), set()
    out = [(frozenset(), frozenset())]
    for ev in filtration.events:
        s = ev.simplex
        target = vs if s.v < 0 else es
        if ev.add:
            target.add(s)
        else:
            target.discard(s)
        out.append((frozenset(vs), frozenset(es)))
    return out


def _components(vs, es) -> dict:
    """Vertex id -> component label ``0..c-1``."""
    d = _DSU()
    for s in vs:
        d.add(s.u)
    for e in es:
        d.union(e.u, e.v)
    label = {}
    out = {}
    for s in sorted(vs):
        r = d.find(s.u)
        out[s.u] = label.setdefault(r, len(label))
    return out


def _basis(vectors) -> list:
    basis = {}
    for v in vectors:
        while v:
            hb = v.bit_length() - 1
            if hb in basis:
                v ^= basis[hb]
            else:
                basis[hb] = v
                break
    return list(basis.values())


def _rank(vectors) -> int:
    return len(_basis(vectors))


def _dim1_ranks(filtration: Filtration, graphs) -> list:
    """``rk[i][j]`` = first betti number of the intersection of ``G_i .. G_j``.

    All maps between cycle spaces are inclusions, so the rank of the zigzag
    over ``[i, j]`` is the dimension of the common cycles.
    """
    m = len(filtration)
    ev = filtration.events
    rk = [[0] * (m + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        vs, es = graphs[i]
        end = {}
        for s in list(vs) + list(es):
            end[s] = m
        for p in range(i, m):
            s = ev[p].simplex
            if not ev[p].add and s in end and end[s] == m:
                end[s] = p
        # grow the intersection while walking j downwards
        order = sorted(end, key=lambda s: -end[s])
        d = _DSU()
        beta = 0
        ptr = 0
        for j in range(m, i - 1, -1):
            while ptr < len(order) and end[order[ptr]] >= j:
                s = order[ptr]
                ptr += 1
                if s.v < 0:
                    d.add(s.u)
                elif not d.union(s.u, s.v):
                    beta += 1
            rk[i][j] = beta
    return rk


def _dim0_ranks(filtration: Filtration, graphs) -> list:
    """``rk[i][j]`` = rank of limit -> colimit of H0 over ``[i, j]``.

    The image of the limit in ``H0(G_j)`` is kept as a subspace ``W``:
    forward arrows push it, backward arrows pull it back.  The colimit has
    one generator per class of components glued along the arrows.
    """
    m = len(filtration)
    ev = filtration.events
    comps = [_components(*g) for g in graphs]
    ncomp = [len(set(c.values())) for c in comps]
    rk = [[0] * (m + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        if ncomp[i] == 0:
            continue
        W = [1 << c for c in range(ncomp[i])]
        glue = _DSU()
        for c in range(ncomp[i]):
            glue.add((i, c))
        for j in range(i, m + 1):
            if j > i:
                a = comps[j - 1]
                b = comps[j]
                for c in range(ncomp[j]):
                    glue.add((j, c))
                # every component of the smaller graph sits inside one of the bigger
                small, big = (a, b) if ev[j - 1].add else (b, a)
                si, bi = (j - 1, j) if ev[j - 1].add else (j, j - 1)
                image = {}
                for x, c in small.items():
                    image[c] = big[x]
                for c, cb in image.items():
                    glue.union((si, c), (bi, cb))
                if ev[j - 1].add:
                    W = [_push(w, image) for w in W]
                else:
                    W = _pullback(W, image, ncomp[j])
                W = _basis(W)
            cls = {}
            vecs = []
            for w in W:
                v = 0
                c = 0
                while w:
                    if w & 1:
                        r = glue.find((j, c))
                        v ^= 1 << cls.setdefault(r, len(cls))
                    w >>= 1
                    c += 1
                vecs.append(v)
            r = _rank(vecs)
            rk[i][j] = r
            if r == 0:
                break
    return rk


def _push(w: int, image: dict) -> int:
    out = 0
    c = 0
    while w:
        if w & 1:
            out ^= 1 << image[c]
        w >>= 1
        c += 1
    return out


def _pullback(W, image: dict, n_new: int) -> list:
    """Vectors ``y`` over the new components with ``g(y)`` in ``span(W)``."""
    cols = list(W) + [1 << image[c] for c in range(n_new)]
    nw = len(W)
    basis = {}  # pivot bit -> (vector, combination)
    kernel = []
    for idx, v in enumerate(cols):
        comb = 1 << idx
        while v:
            hb = v.bit_length() - 1
            if hb not in basis:
                break
            bv, bc = basis[hb]
            v ^= bv
            comb ^= bc
        if v:
            basis[v.bit_length() - 1] = (v, comb)
        else:
            kernel.append(comb >> nw)
    return kernel


def zigzag_by_ranks(filtration: Filtration) -> list:
    m = len(filtration)
    if m > MAX_RANK_ORACLE:
        raise TooLarge(f"rank oracle limited to {MAX_RANK_ORACLE} events, got {m}")
    graphs = _graphs(filtration)
    out = []
    for dim, rk in ((0, _dim0_ranks(filtration, graphs)), (1, _dim1_ranks(filtration, graphs))):

        def r(a, b):
            if a < 0 or b > m or a > b:
                return 0
            return rk[a][b]

        for b in range(1, m):
            for d in range(b, m):
                mult = r(b, d) - r(b - 1, d) - r(b, d + 1) + r(b - 1, d + 1)
                if mult < 0:
                    raise AssertionError("negative interval multiplicity")
                if mult:
                    bt, dt = endpoint_types(filtration, b, d)
                    out.extend([Interval(dim, b, d, bt, dt)] * mult)
    out.sort()
    return out


def betti_profile(filtration: Filtration) -> list:
    """``[(beta0, beta1)]`` of ``G_0 .. G_m`` straight from the graphs."""
    out = []
    for vs, es in _graphs(filtration):
        c = len(set(_components(vs, es).values()))
        out.append((c, len(es) - len(vs) + c))
    return out


# -- edge-edge pairs with explicit representative cycles ---------------------


class Alg51Oracle:
    """Edge-edge pairs of a zigzag filtration kept with representative cycles.

    The state is an up-down view of the zigzag filtration: ``asc`` lists
    cells by addition order and ``desc`` by deletion order.  Each pair maps a
    positive ascending edge to ``(positive descending edge, cycle)`` where a
    cycle is a frozenset of edge cells.  Switches follow the four cases of
    the forward update literally; backward switches run the same code on the
    reversed view.
    """

    def __init__(self, filtration: Filtration):
        self.events = []  # (add, key, cell)
        self.ends = {}  # cell -> (cell, cell) for edges, None for vertices
        live = {}
        vcell = {}
        n = 0
        for ev in filtration.events:
            s = ev.simplex
            if ev.add:
                c = n
                n += 1
                if s.v < 0:
                    vcell[s.u] = c
                    self.ends[c] = None
                else:
                    self.ends[c] = (vcell[s.u], vcell[s.v])
                live[s] = c
                self.events.append((True, s, c))
            else:
                self.events.append((False, s, live.pop(s)))
        self.pairs = self._initial()
        self.check()

    # views -------------------------------------------------------------

    def _orders(self):
        asc = [c for a, _, c in self.events if a]
        desc = [c for a, _, c in self.events if not a]
        return asc, desc

    def _positive(self, order) -> set:
        d = _DSU()
        pos = set()
        for c in order:
            e = self.ends[c]
            if e is None:
                d.add(c)
            elif not d.union(*e):
                pos.add(c)
        return pos

    def _initial(self) -> dict:
        asc, desc = self._orders()
        apos = {c: j for j, c in enumerate(asc)}
        down = desc[::-1]
        down_pos = self._positive(down)
        adj = {c: set() for c in asc if self.ends[c] is None}
        for c in down:
            e = self.ends[c]
            if e is not None and c not in down_pos:
                adj[e[0]].add((e[1], c))
                adj[e[1]].add((e[0], c))
        pairs = {}
        for c in down:
            if c not in down_pos:
                continue
            a, b = self.ends[c]
            path = self._path(adj, a, b)
            cycle = set(path) | {c}
            young = max(cycle, key=lambda x: apos[x])
            pairs[young] = (c, frozenset(cycle))
            if young != c:
                ya, yb = self.ends[young]
                adj[ya].discard((yb, young))
                adj[yb].discard((ya, young))
                adj[a].add((b, c))
                adj[b].add((a, c))
        return pairs

    @staticmethod
    def _path(adj, a, b) -> list:
        prev = {a: None}
        queue = [a]
        for x in queue:
            if x == b:
                break
            for y, e in adj[x]:
                if y not in prev:
                    prev[y] = (x, e)
                    queue.append(y)
        path = []
        x = b
        while prev[x] is not None:
            x, e = prev[x]
            path.append(e)
        return path

    # checks --------------------------------------------------------------

    def check(self) -> None:
        """Every pair's cycle is a cycle living where the pair says it does."""
        asc, desc = self._orders()
        apos = {c: j for j, c in enumerate(asc)}
        dpos = {c: t for t, c in enumerate(desc)}
        for a, (d, z) in self.pairs.items():
            deg = {}
            for e in z:
                for x in self.ends[e]:
                    deg[x] = deg.get(x, 0) ^ 1
            if any(deg.values()):
                raise InvalidRepresentative(f"representative of ({a}, {d}) is not a cycle")
            if a not in z or d not in z:
                raise InvalidRepresentative(f"representative of ({a}, {d}) misses its ends")
            if any(apos[e] > apos[a] for e in z):
                raise InvalidRepresentative(f"representative of ({a}, {d}) is not born yet")
            if any(dpos[e] < dpos[d] for e in z):
                raise InvalidRepresentative(f"representative of ({a}, {d}) is already dead")

    def pair_positions(self) -> set:
        """Pairs as ``(event index of the addition, event index of the deletion)``."""
        add_at, del_at = {}, {}
        for p, (a, _, c) in enumerate(self.events):
            (add_at if a else del_at)[c] = p
        return {(add_at[a], del_at[d]) for a, (d, _) in self.pairs.items()}

    # switching -----------------------------------------------------------

    def switch(self, kind: str, i: int) -> None:
        ev = self.events
        if not 1 <= i < len(ev):
            raise OutOfRange(f"switch position {i} outside 1..{len(ev) - 1}", i)
        (a1, s, c1), (a2, t, c2) = ev[i - 1], ev[i]
        actual = {(True, True): "forward", (False, False): "backward", (True, False): "outward", (False, True): "inward"}[
            (a1, a2)
        ]
        if actual in ("outward", "inward") and s == t:
            raise InvalidSwitch(f"cannot switch {s} with itself", i)
        if actual != kind:
            raise KindMismatch(f"arrows at {i} make a {actual} switch", i)
        if kind == "forward" and s.v < 0 and t.v >= 0 and s.u in (t.u, t.v):
            raise InvalidSwitch(f"{s} is a face of {t}", i)
        if kind == "backward" and t.v < 0 and s.v >= 0 and t.u in (s.u, s.v):
            raise InvalidSwitch(f"{t} is a face of {s}", i)
        if kind == "forward" and self.ends[c1] is not None and self.ends[c2] is not None:
            asc, desc = self._orders()
            self.pairs = _forward_update(self.ends, asc, desc, self.pairs, c1, c2)
        elif kind == "backward" and self.ends[c1] is not None and self.ends[c2] is not None:
            asc, desc = self._orders()
            # reversed view: descending order read backwards becomes ascending
            rev = {d: (a, z) for a, (d, z) in self.pairs.items()}
            rev = _forward_update(self.ends, desc[::-1], asc[::-1], rev, c2, c1)
            self.pairs = {a: (d, z) for d, (a, z) in rev.items()}
        ev[i - 1], ev[i] = ev[i], ev[i - 1]
        self.check()


def _forward_update(ends, asc, desc, pairs, e1, e2) -> dict:
    """Edge-edge pairs after swapping consecutive ascending edges ``e1, e2``."""
    d = _DSU()
    positive = set()
    for c in asc:
        if ends[c] is None:
            d.add(c)
        elif not d.union(*ends[c]):
            positive.add(c)
    dpos = {c: t for t, c in enumerate(desc)}
    pairs = dict(pairs)
    p1, p2 = e1 in positive, e2 in positive
    if not p1 and p2:
        eps, z = pairs[e2]
        if e1 in z:
            del pairs[e2]
            pairs[e1] = (eps, z)
    elif p1 and p2:
        eps, z = pairs[e1]
        eps2, z2 = pairs[e2]
        if e1 in z2:
            zz = z ^ z2
            if dpos[eps2] < dpos[eps]:
                pairs[e2] = (eps2, zz)
            else:
                pairs[e1] = (eps2, z2)
                pairs[e2] = (eps, zz)
    return pairs
