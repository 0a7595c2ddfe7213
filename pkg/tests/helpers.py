"""Shared fixtures and hypothesis strategies for the test suite."""

import random
from pathlib import Path

from hypothesis import strategies as st

from graphpers.errors import GraphPersError
from graphpers.formats import parse_barcode, parse_filtration
from graphpers.generate import random_standard_m, random_zigzag, random_zz_switch
from graphpers.model import STANDARD, ZIGZAG, Filtration, Simplex

DATA = Path(__file__).parent / "data"

V = Simplex.vertex
E = Simplex.edge


def load(name, flavor=ZIGZAG):
    return parse_filtration((DATA / f"{name}.flt").read_text(), flavor)


def frozen(name):
    return parse_barcode((DATA / f"{name}.bar").read_text())


def tri():
    return load("tri", STANDARD)


def zz1():
    return load("zz1")


def ud_tri():
    return load("udtri")


def f2():
    return load("f2")


def ud2():
    """a, b and three parallel copies of ab, deleted oldest copy first."""
    a, b = 0, 1
    e1, e2, e3 = E(a, b, 1), E(a, b, 2), E(a, b, 3)
    items = [(True, V(a)), (True, V(b)), (True, e1), (True, e2), (True, e3)]
    items += [(False, e1), (False, e2), (False, e3), (False, V(b)), (False, V(a))]
    return Filtration.build(items, ZIGZAG, multigraph=True)


def case_c():
    """a, b, ab1 (merges), ab2 (closes a cycle), then everything deleted."""
    a, b = 0, 1
    e1, e2 = E(a, b, 1), E(a, b, 2)
    items = [(True, V(a)), (True, V(b)), (True, e1), (True, e2)]
    items += [(False, e1), (False, e2), (False, V(b)), (False, V(a))]
    return Filtration.build(items, ZIGZAG, multigraph=True)


def standard_from(seed, m):
    return random_standard_m(random.Random(seed), m)


def zigzag_from(seed, m):
    return random_zigzag(random.Random(seed), m)


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def standard_filtrations(draw, max_m=60):
    return standard_from(draw(seeds), draw(st.integers(1, max_m)))


@st.composite
def zigzag_filtrations(draw, max_m=60):
    return zigzag_from(draw(seeds), 2 * draw(st.integers(1, max_m // 2)))


def betti_direct(filt):
    """``(beta0, beta1)`` of every ``G_i`` by counting components and edges."""
    out = []
    live_v, live_e = set(), set()
    for i in range(filt.m + 1):
        if i:
            ev = filt.events[i - 1]
            target = live_v if ev.simplex.is_vertex else live_e
            (target.add if ev.add else target.discard)(ev.simplex)
        parent = {s.u: s.u for s in live_v}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = len(live_v)
        for e in live_e:
            ra, rb = find(e.u), find(e.v)
            if ra != rb:
                parent[ra] = rb
                comps -= 1
        out.append((comps, len(live_e) - len(live_v) + comps))
    return out


# rows of the interval type table: (up-down dim, up-down type) -> allowed (dim, type) in the input
TYPE_ROWS = {
    (0, "co"): {(0, "co")},
    (0, "oc"): {(0, "oc")},
    (0, "cc"): {(0, "cc")},
    (1, "cc"): {(1, "cc"), (0, "oo")},
}


def pick_zz_switch(rng, events, kind=None):
    """A random valid switch, or ``None`` when the filtration admits none."""
    try:
        return random_zz_switch(rng, events, kind)
    except GraphPersError:
        return None
