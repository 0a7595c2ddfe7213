"""Zigzag persistence of graph filtrations in O(m log m).

The zigzag filtration is rewritten as an up-down filtration on cells: every
addition becomes a fresh cell (so an edge that is added twice gives two
parallel cells), all additions come first, then all deletions in their
original order.  Intervals of the up-down filtration map back through the
event bijection ``phi``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dynforest import DynForest
from .errors import DimensionUnderflow
from .model import (
    ZIGZAG,
    Filtration,
    Interval,
    Pairing,
    Simplex,
    barcode_from_pairing,
    endpoint_types,
    validate,
)
from .standard import elder


@dataclass
class UpDown:
    """Cell-wise up-down filtration.

    Cell ``c`` is added at up-down index ``c``; ``desc[t]`` is the cell
    deleted at index ``k + t``.  ``phi[j]`` is the original event index of
    up-down event ``j``.
    """

    cells: list
    desc: list
    phi: list
    keys: list = field(default_factory=list)  # original simplex of each cell

    @property
    def k(self) -> int:
        return len(self.cells)

    @property
    def m(self) -> int:
        return 2 * len(self.cells)

    def dpos(self) -> list:
        out = [0] * len(self.cells)
        for t, c in enumerate(self.desc):
            out[c] = t
        return out

    def filtration(self) -> Filtration:
        items = [(True, s) for s in self.cells]
        items += [(False, self.cells[c]) for c in self.desc]
        return Filtration.build(items, ZIGZAG, multigraph=True)

    def dump(self) -> str:
        """Debug text: additions then deletions with cell and source indices."""
        lines = []
        k = self.k
        for j, s in enumerate(self.cells):
            lines.append(f"+ {s}  # cell {j} <- F[{self.phi[j]}]")
        for t, c in enumerate(self.desc):
            lines.append(f"- {self.cells[c]}  # cell {c} <- F[{self.phi[k + t]}]")
        return "".join(line + "\n" for line in lines)


def convert(filtration: Filtration) -> UpDown:
    cells = []
    keys = []
    desc = []
    asc_f = []
    desc_f = []
    live = {}
    vcell = {}
    for ev in filtration.events:
        s = ev.simplex
        if ev.add:
            c = len(cells)
            if s.v < 0:
                cells.append(Simplex(c))
                vcell[s.u] = c
            else:
                cells.append(Simplex.edge(vcell[s.u], vcell[s.v], c))
            keys.append(s)
            live[s] = c
            asc_f.append(ev.index)
        else:
            desc.append(live.pop(s))
            desc_f.append(ev.index)
    return UpDown(cells, desc, asc_f + desc_f, keys)


@dataclass
class EdgePairState:
    """Pairs of the up-down filtration, all keyed by cell id."""

    up: dict  # vertex cell -> edge cell, elder rule on the ascending part
    down: dict  # vertex cell -> edge cell, elder rule on the reversed descending part
    cc: dict  # oldest ascending vertex -> oldest descending vertex, per component
    ee: dict  # positive ascending edge -> positive descending edge
    up_positive: set = field(default_factory=set)
    down_positive: set = field(default_factory=set)
    ops: int = 0


def edge_edge_pairs(cells, desc, down_negative, stats=None, check_tree=False) -> dict:
    """Pair positive descending edges with positive ascending edges.

    A spanning forest of the whole graph starts as all vertices plus the
    negative edges of the descending part, weighted by ascending index.
    Each positive descending edge, taken in descending-part order, closes a
    cycle; the ascending-youngest edge of that cycle is its partner and
    leaves the forest.
    """
    vnode = {}
    forest = DynForest()
    for c, s in enumerate(cells):
        if s.v < 0:
            vnode[c] = forest.add_node()
    handle = {}
    edge_of = {}
    for c in down_negative:
        s = cells[c]
        h = forest.link(vnode[s.u], vnode[s.v], c)
        handle[c] = h
        edge_of[h] = c
    n_trees = len(vnode) - len(handle)
    pairs = {}
    for t in range(len(desc) - 1, -1, -1):
        e = desc[t]
        s = cells[e]
        if s.v < 0 or e in handle:
            continue
        w, h = forest.path_bottleneck(vnode[s.u], vnode[s.v])
        if w > e:
            eps = edge_of.pop(h)
            del handle[eps]
            forest.cut(h)
            h = forest.link(vnode[s.u], vnode[s.v], e)
            handle[e] = h
            edge_of[h] = e
            pairs[eps] = e
        else:
            pairs[e] = e
        if check_tree:
            assert forest.n_edges == len(vnode) - n_trees, "spanning forest lost an edge"
    if stats is not None:
        stats["rotations"] = stats.get("rotations", 0) + forest.rotations
    return pairs


def updown_pairs(ud: UpDown, stats: dict | None = None, check_tree: bool = False) -> EdgePairState:
    cells = ud.cells
    up = elder(cells)
    order = [cells[c] for c in reversed(ud.desc)]
    down = elder(order)
    rev = ud.desc[::-1]  # descending-part position -> cell
    up_pairs = dict(up.pairs)
    down_pairs = {rev[a]: rev[b] for a, b in down.pairs.items()}
    up_pos = {c for c in up.unpaired if cells[c].v >= 0}
    down_pos = {rev[p] for p in down.unpaired if order[p].v >= 0}
    # both unions run over the same final graph, so components agree
    cc = {}
    for p in down.unpaired:
        y = order[p]
        if y.v < 0:
            cc[up.uf.representative(y.u)] = rev[p]
    down_negative = [rev[p] for p in down.negative]
    local = {}
    ee = edge_edge_pairs(cells, ud.desc, down_negative, local, check_tree)
    ops = up.uf.steps + down.uf.steps + local.get("rotations", 0)
    if stats is not None:
        stats["ops"] = stats.get("ops", 0) + ops
    return EdgePairState(up_pairs, down_pairs, cc, ee, up_pos, down_pos, ops)


def updown_pairing(ud: UpDown, ps: EdgePairState) -> Pairing:
    """All pairs as up-down event indices (creator -> destroyer)."""
    k = ud.k
    dpos = ud.dpos()
    pairs = {}
    for v, e in ps.up.items():
        pairs[v] = e
    for v, e in ps.down.items():
        pairs[k + dpos[e]] = k + dpos[v]
    for x, y in ps.cc.items():
        pairs[x] = k + dpos[y]
    for a, d in ps.ee.items():
        pairs[a] = k + dpos[d]
    return Pairing(pairs, frozenset())


def map_intervals(ud: UpDown, filtration: Filtration, intervals) -> list:
    """Send intervals of the up-down filtration to intervals of ``filtration``."""
    phi = ud.phi
    out = []
    for iv in intervals:
        c = phi[iv.birth - 1]
        d = phi[int(iv.death)]
        if c < d:
            dim, b, dd = iv.dim, c + 1, d
        else:
            if iv.dim == 0:
                raise DimensionUnderflow(f"interval {iv} would drop below dimension 0", iv.birth - 1)
            dim, b, dd = iv.dim - 1, d + 1, c
        bt, dt = endpoint_types(filtration, b, dd)
        out.append(Interval(dim, b, dd, bt, dt))
    out.sort()
    return out


def compute_zigzag(filtration: Filtration, stats: dict | None = None, check: bool = True) -> list:
    if check:
        validate(filtration)
    ud = convert(filtration)
    ps = updown_pairs(ud, stats)
    u = ud.filtration()
    pers_u = barcode_from_pairing(u, updown_pairing(ud, ps))
    return map_intervals(ud, filtration, pers_u)


def updown_barcode(ud: UpDown, stats: dict | None = None) -> list:
    """Barcode of the up-down filtration itself."""
    ps = updown_pairs(ud, stats)
    return barcode_from_pairing(ud.filtration(), updown_pairing(ud, ps))
