"""Random filtrations and random valid switch sequences."""

from __future__ import annotations

import random

from .errors import GraphPersError
from .model import STANDARD, ZIGZAG, Filtration, Simplex


def random_standard(rng: random.Random, n: int, n_edges: int) -> Filtration:
    """Random simple graph on ``n`` vertices added in a random valid order."""
    pairs = set()
    cap = n * (n - 1) // 2
    n_edges = min(n_edges, cap)
    while len(pairs) < n_edges:
        a, b = rng.sample(range(n), 2)
        pairs.add((min(a, b), max(a, b)))
    edges = sorted(pairs)
    rng.shuffle(edges)
    # each vertex appears at a random point before its first edge
    order = []
    present = set()
    pending = list(range(n))
    rng.shuffle(pending)
    for a, b in edges:
        while pending and rng.random() < 0.5:
            x = pending.pop()
            if x not in present:
                present.add(x)
                order.append(Simplex(x))
        for x in (a, b):
            if x not in present:
                present.add(x)
                order.append(Simplex(x))
        order.append(Simplex(a, b))
    for x in pending:
        if x not in present:
            present.add(x)
            order.append(Simplex(x))
    return Filtration.standard(order)


def random_standard_m(rng: random.Random, m: int) -> Filtration:
    """Random standard filtration with exactly ``m`` events."""
    if m <= 0:
        return Filtration.standard([])
    n = max(1, min(m, rng.randint(max(1, m // 3), max(1, (2 * m) // 3))))
    while n * (n - 1) // 2 < m - n:
        n += 1
    return random_standard(rng, n, m - n)


def random_zigzag(
    rng: random.Random,
    m: int,
    n_ids: int | None = None,
    p_add: float = 0.6,
) -> Filtration:
    """Random zigzag filtration of roughly ``m`` events (always even, starts and ends empty).

    Vertex ids are drawn from a pool of ``n_ids`` so simplices get deleted
    and added again.  Runs in expected O(m).
    """
    if n_ids is None:
        n_ids = max(2, int(m ** 0.5) + 2)
    items = []
    live_v = []  # swap-remove lists with index maps
    vidx = {}
    live_e = []
    eidx = {}
    deg = {}
    dead = list(range(n_ids))
    half = m // 2

    def push(lst, idx, x):
        idx[x] = len(lst)
        lst.append(x)

    def drop(lst, idx, x):
        j = idx.pop(x)
        last = lst.pop()
        if last != x:
            lst[j] = last
            idx[last] = j

    adds = 0
    while adds < half:
        r = rng.random()
        if r < p_add:
            if dead and (len(live_v) < 2 or rng.random() < 0.3):
                x = dead.pop(rng.randrange(len(dead)))
                push(live_v, vidx, x)
                deg[x] = 0
                items.append((True, Simplex(x)))
                adds += 1
            elif len(live_v) >= 2:
                a, b = rng.sample(live_v, 2)
                e = Simplex(min(a, b), max(a, b))
                if e in eidx:
                    continue
                push(live_e, eidx, e)
                deg[a] += 1
                deg[b] += 1
                items.append((True, e))
                adds += 1
        else:
            if live_e and (rng.random() < 0.7 or not live_v):
                e = live_e[rng.randrange(len(live_e))]
                drop(live_e, eidx, e)
                deg[e.u] -= 1
                deg[e.v] -= 1
                items.append((False, e))
            elif live_v:
                x = live_v[rng.randrange(len(live_v))]
                if deg[x]:
                    continue
                drop(live_v, vidx, x)
                dead.append(x)
                items.append((False, Simplex(x)))
    # empty the graph again
    rng.shuffle(live_e)
    for e in live_e:
        items.append((False, e))
    rng.shuffle(live_v)
    for x in live_v:
        items.append((False, Simplex(x)))
    return Filtration.build(items, ZIGZAG)


def std_switch_ok(ev, i: int) -> bool:
    s, t = ev[i - 1], ev[i]
    return not (s.v < 0 and t.v >= 0 and s.u in (t.u, t.v))


def random_std_switch(rng: random.Random, ev) -> int:
    """A position ``i`` whose switch is valid for the simplex list ``ev``."""
    m = len(ev)
    for _ in range(64):
        if m < 2:
            break
        i = rng.randint(1, m - 1)
        if std_switch_ok(ev, i):
            return i
    options = [i for i in range(1, m) if std_switch_ok(ev, i)]
    if not options:
        raise GraphPersError("no valid switch found")
    return rng.choice(options)


def zz_switch_kind(events, i: int):
    """Switch kind at ``i`` for ``(add, simplex)`` events, or ``None`` if invalid."""
    (a1, s), (a2, t) = events[i - 1], events[i]
    if a1 and a2:
        ok = not (s.v < 0 and t.v >= 0 and s.u in (t.u, t.v))
        return "forward" if ok else None
    if not a1 and not a2:
        ok = not (t.v < 0 and s.v >= 0 and t.u in (s.u, s.v))
        return "backward" if ok else None
    if s == t:
        return None
    return "outward" if a1 else "inward"


def random_zz_switch(rng: random.Random, events, kind: str | None = None) -> tuple:
    m = len(events)
    for _ in range(64):
        i = rng.randint(1, m - 1)
        k = zz_switch_kind(events, i)
        if k is not None and (kind is None or k == kind):
            return k, i
    options = [(zz_switch_kind(events, i), i) for i in range(1, m)]
    options = [(k, i) for k, i in options if k is not None and (kind is None or k == kind)]
    if not options:
        raise GraphPersError("no valid switch found")
    return rng.choice(options)


__all__ = [
    "STANDARD",
    "ZIGZAG",
    "random_standard",
    "random_standard_m",
    "random_zigzag",
    "random_std_switch",
    "random_zz_switch",
    "zz_switch_kind",
]
