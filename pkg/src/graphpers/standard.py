"""Standard graph persistence with union-find and the elder rule."""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .model import Filtration, Pairing


class UnionFind:
    """Union by rank with path compression over hashable items.

    ``oldest`` maps each root to ``(stamp, item)`` of the oldest member so
    the elder rule can read off representatives; the union-find root itself
    is unrelated to age.  ``steps`` counts parent-pointer hops.
    """

    __slots__ = ("parent", "rank", "oldest", "steps")

    def __init__(self):
        self.parent = {}
        self.rank = {}
        self.oldest = {}
        self.steps = 0

    def add(self, x, stamp) -> None:
        self.parent[x] = x
        self.rank[x] = 0
        self.oldest[x] = (stamp, x)

    def __contains__(self, x) -> bool:
        return x in self.parent

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
            self.steps += 1
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        """Merge the sets of ``a`` and ``b``.

        Returns ``(older, younger)`` representatives as ``(stamp, item)``
        pairs, or ``None`` when they already share a set.
        """
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return None
        oa, ob = self.oldest[ra], self.oldest[rb]
        older, younger = (oa, ob) if oa < ob else (ob, oa)
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        del self.oldest[rb]
        self.oldest[ra] = older
        return older, younger

    def representative(self, x):
        return self.oldest[self.find(x)][1]


class ElderResult(NamedTuple):
    pairs: dict  # vertex position -> negative edge position
    unpaired: set  # positions of final representatives and positive edges
    negative: set  # positions of negative edges
    uf: UnionFind  # keyed by vertex id, stamped by position


def elder(simplices: Iterable) -> ElderResult:
    """Run the elder rule over a sequence of added simplices.

    Works for multigraphs too: an edge only needs its two vertex ids.
    """
    uf = UnionFind()
    pairs = {}
    unpaired = set()
    negative = set()
    for i, s in enumerate(simplices):
        if s.v < 0:
            uf.add(s.u, i)
            unpaired.add(i)
            continue
        merged = uf.union(s.u, s.v)
        if merged is None:
            unpaired.add(i)
        else:
            young = merged[1][0]
            pairs[young] = i
            unpaired.discard(young)
            negative.add(i)
    return ElderResult(pairs, unpaired, negative, uf)


def compute_pairing(filtration: Filtration, stats: dict | None = None) -> Pairing:
    res = elder(e.simplex for e in filtration.events)
    if stats is not None:
        stats["uf_steps"] = stats.get("uf_steps", 0) + res.uf.steps
    return Pairing(res.pairs, frozenset(res.unpaired))
