"""Filtrations, events, pairings and barcodes.

A filtration is a sequence of single-simplex additions and deletions on a
graph.  Graph ``G_i`` is the graph after the first ``i`` events, so event
``i`` is the arrow ``G_i <-> G_{i+1}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import (
    DeleteAbsent,
    DeletionInStandard,
    DuplicateLive,
    EdgeBeforeVertex,
    InconsistentPairing,
    NonEmptyEnds,
    ValidationError,
)

STANDARD = "standard"
ZIGZAG = "zigzag"

INF = math.inf


class Simplex(NamedTuple):
    """A vertex ``(u,)`` or an edge ``(u, v)`` with ``u < v``.

    ``tag`` tells parallel copies of one edge apart; it stays 0 for simple
    graphs and is only used by the internal cell-wise filtrations.
    """

    u: int
    v: int = -1
    tag: int = 0

    @classmethod
    def vertex(cls, x: int) -> "Simplex":
        return cls(x)

    @classmethod
    def edge(cls, a: int, b: int, tag: int = 0) -> "Simplex":
        if a == b:
            raise ValidationError(f"edge endpoints must differ: {a}")
        return cls(a, b, tag) if a < b else cls(b, a, tag)

    @property
    def is_vertex(self) -> bool:
        return self.v < 0

    @property
    def dim(self) -> int:
        return 0 if self.v < 0 else 1

    def vertices(self) -> tuple:
        return (self.u,) if self.v < 0 else (self.u, self.v)

    def __str__(self) -> str:
        return f"v {self.u}" if self.v < 0 else f"e {self.u} {self.v}"


class Event(NamedTuple):
    add: bool
    simplex: Simplex
    index: int

    def __str__(self) -> str:
        return f"{'+' if self.add else '-'} {self.simplex}"


@dataclass(frozen=True)
class Filtration:
    events: tuple
    flavor: str = ZIGZAG
    multigraph: bool = False

    @classmethod
    def build(cls, items: Iterable, flavor: str = ZIGZAG, multigraph: bool = False) -> "Filtration":
        """Build from ``(add, simplex)`` pairs; indices are assigned here."""
        events = tuple(Event(bool(a), s, i) for i, (a, s) in enumerate(items))
        return cls(events, flavor, multigraph)

    @classmethod
    def standard(cls, simplices: Iterable, multigraph: bool = False) -> "Filtration":
        return cls.build(((True, s) for s in simplices), STANDARD, multigraph)

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    def __getitem__(self, i) -> Event:
        return self.events[i]

    @property
    def m(self) -> int:
        return len(self.events)

    @property
    def n(self) -> int:
        """Number of distinct vertex ids over the whole filtration."""
        return len({e.simplex.u for e in self.events if e.simplex.is_vertex})

    def simplices(self) -> list:
        return [e.simplex for e in self.events]

    def switched(self, i: int) -> "Filtration":
        """Copy with events ``i-1`` and ``i`` exchanged (no validity check)."""
        ev = list(self.events)
        a, b = ev[i - 1], ev[i]
        ev[i - 1] = Event(b.add, b.simplex, i - 1)
        ev[i] = Event(a.add, a.simplex, i)
        return Filtration(tuple(ev), self.flavor, self.multigraph)

    def graph_at(self, i: int) -> set:
        """Simplices of ``G_i``."""
        live = set()
        for e in self.events[:i]:
            if e.add:
                live.add(e.simplex)
            else:
                live.discard(e.simplex)
        return live


def _edge_key(s: Simplex, multigraph: bool):
    return s if multigraph else (s.u, s.v)


def validate(filtration: Filtration) -> Filtration:
    """Check that every prefix is a valid graph; raise at the first bad event."""
    standard = filtration.flavor == STANDARD
    multi = filtration.multigraph
    live_vertices = set()
    live_edges = set()
    degree: dict = {}
    for i, ev in enumerate(filtration.events):
        if ev.index != i:
            raise ValidationError(f"event index {ev.index} at position {i}", i)
        s = ev.simplex
        if s.v >= 0 and s.u >= s.v:
            raise ValidationError(f"malformed edge {s}", i)
        if ev.add:
            if s.is_vertex:
                if s.u in live_vertices:
                    raise DuplicateLive(f"vertex {s.u} already present", i)
                live_vertices.add(s.u)
                degree[s.u] = 0
            else:
                if s.u not in live_vertices or s.v not in live_vertices:
                    raise EdgeBeforeVertex(f"edge {s.u} {s.v} added before its endpoints", i)
                key = _edge_key(s, multi)
                if key in live_edges:
                    raise DuplicateLive(f"edge {s.u} {s.v} already present", i)
                live_edges.add(key)
                degree[s.u] += 1
                degree[s.v] += 1
        else:
            if standard:
                raise DeletionInStandard("standard filtrations only add simplices", i)
            if s.is_vertex:
                if s.u not in live_vertices:
                    raise DeleteAbsent(f"vertex {s.u} is not present", i)
                if degree[s.u]:
                    raise DeleteAbsent(f"vertex {s.u} still has an incident edge", i)
                live_vertices.discard(s.u)
            else:
                key = _edge_key(s, multi)
                if key not in live_edges:
                    raise DeleteAbsent(f"edge {s.u} {s.v} is not present", i)
                live_edges.discard(key)
                degree[s.u] -= 1
                degree[s.v] -= 1
    if not standard and (live_vertices or live_edges):
        raise NonEmptyEnds("zigzag filtration must end with the empty graph", len(filtration.events))
    return filtration


@dataclass
class Pairing:
    """Creator event index -> destroyer event index, plus unpaired creators."""

    pairs: dict = field(default_factory=dict)
    unpaired: frozenset = frozenset()

    def destroyers(self) -> set:
        return set(self.pairs.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Pairing):
            return NotImplemented
        return self.pairs == other.pairs and set(self.unpaired) == set(other.unpaired)


class Interval(NamedTuple):
    dim: int
    birth: int
    death: float
    btype: str
    dtype: str

    @property
    def kind(self) -> str:
        return self.btype + self.dtype

    def __str__(self) -> str:
        d = "inf" if self.death == INF else str(int(self.death))
        return f"{self.dim} {self.birth} {d} {self.btype} {self.dtype}"


def endpoint_types(filtration: Filtration, b: int, d) -> tuple:
    """Birth is closed iff arrow ``b-1`` adds; death is closed iff arrow ``d`` deletes."""
    ev = filtration.events
    btype = "c" if ev[b - 1].add else "o"
    if d == INF or d >= len(ev):
        return btype, "o"
    return btype, ("o" if ev[d].add else "c")


def creator_dim(event: Event) -> int:
    # an added simplex creates in its own dimension, a deleted edge splits a component
    return event.simplex.dim if event.add else event.simplex.dim - 1


def barcode_from_pairing(filtration: Filtration, pairing: Pairing) -> list:
    ev = filtration.events
    m = len(ev)
    seen = set()
    out = []
    for c, d in pairing.pairs.items():
        if not (0 <= c < d < m) or c in seen or d in seen:
            raise InconsistentPairing(f"bad pair ({c}, {d})", c)
        seen.add(c)
        seen.add(d)
        bt, dt = endpoint_types(filtration, c + 1, d)
        out.append(Interval(creator_dim(ev[c]), c + 1, d, bt, dt))
    for c in pairing.unpaired:
        if not (0 <= c < m) or c in seen:
            raise InconsistentPairing(f"bad unpaired creator {c}", c)
        if filtration.flavor != STANDARD:
            raise InconsistentPairing("zigzag pairings leave nothing unpaired", c)
        seen.add(c)
        out.append(Interval(creator_dim(ev[c]), c + 1, INF, "c", "o"))
    out.sort()
    return out


def betti_from_barcode(intervals: Iterable, m: int) -> list:
    """``[(beta0, beta1)]`` for ``G_0 .. G_m`` counted from closed intervals."""
    counts = [[0, 0] for _ in range(m + 1)]
    for iv in intervals:
        hi = m if iv.death == INF else int(iv.death)
        for i in range(iv.birth, hi + 1):
            counts[i][iv.dim] += 1
    return [tuple(c) for c in counts]
