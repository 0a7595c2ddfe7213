"""Operation-count benchmarks for the switch and compute paths.

Counters are the primary metric: splay rotations, union-find steps and the
constant bookkeeping writes of the zigzag state.  Per-switch numbers are
means over a batch that follows a warm-up batch, so the potential left in
the splay trees by preprocessing is not billed to the first few switches.
"""

from __future__ import annotations

import math
import random
import time
from typing import NamedTuple

from .errors import GraphPersError
from .generate import random_standard, random_std_switch, random_zigzag, random_zz_switch
from .stdswitch import StdUpdateState
from .zigzag import compute_zigzag
from .zzswitch import ZZUpdateState

ZZ_KINDS = ("forward", "backward", "outward", "inward")
DEFAULT_SIZES = (2**10, 2**12, 2**14)


class BenchRow(NamedTuple):
    path: str
    m: int
    count: int
    mean_ops: float
    norm: float  # mean_ops over the expected growth term
    seconds: float
    max_ops: int = 0


def growth(path: str, m: int) -> float:
    """Expected per-operation growth term for ``path`` at size ``m``."""
    lg = math.log2(m)
    if path in ("standard", "zz-ascending"):
        return lg
    if path in ("forward", "backward"):
        return math.sqrt(m) * lg
    if path in ("outward", "inward"):
        return 1.0
    if path == "compute":
        return m * lg
    raise ValueError(path)


def dense_standard(rng: random.Random, m: int):
    """Standard filtration of ``m`` events on ``m // 4`` vertices.

    Average degree 6 keeps almost every vertex in one component, so tree
    sizes grow with ``m`` at every scale measured.
    """
    n = max(2, m // 4)
    return random_standard(rng, n, m - n)


def std_switch_ops(m: int, seed: int = 0, warmup: int = 1024, batch: int = 2048) -> BenchRow:
    rng = random.Random(seed * 1_000_003 + m)
    st = StdUpdateState.from_filtration(dense_standard(rng, m))
    for _ in range(warmup):
        st.switch(random_std_switch(rng, st.ev))
    total = top = 0
    t0 = time.perf_counter()
    for _ in range(batch):
        st.switch(random_std_switch(rng, st.ev))
        total += st.ops
        top = max(top, st.ops)
    dt = time.perf_counter() - t0
    mean = total / batch
    return BenchRow("standard", m, batch, mean, mean / growth("standard", m), dt, top)


def zz_switch_ops(m: int, seed: int = 0, warmup: int = 64, batch: int = 128) -> list:
    """One row per switch kind, plus the ascending std sub-update of forward switches."""
    rng = random.Random(seed * 1_000_003 + m)
    filt = random_zigzag(rng, m)
    st = ZZUpdateState(filt, check=False)
    events = [(e.add, e.simplex) for e in filt.events]

    def step(kind) -> bool:
        try:
            k, i = random_zz_switch(rng, events, kind)
        except GraphPersError:
            return False  # tiny filtrations may have no switch of this kind
        st.switch(k, i)
        events[i - 1], events[i] = events[i], events[i - 1]
        return True

    rows = []
    for kind in ZZ_KINDS:
        for _ in range(warmup):
            step(kind)
        total = sub = done = top = 0
        t0 = time.perf_counter()
        for _ in range(batch):
            if not step(kind):
                break
            done += 1
            total += st.last_ops
            top = max(top, st.last_ops)
            sub += st.last_std_ops
        dt = time.perf_counter() - t0
        if not done:
            continue
        mean = total / done
        rows.append(BenchRow(kind, m, done, mean, mean / growth(kind, m), dt, top))
        if kind == "forward":
            mean = sub / done
            rows.append(BenchRow("zz-ascending", m, done, mean, mean / growth("zz-ascending", m), dt))
    return rows


def compute_ops(m: int, seed: int = 0) -> BenchRow:
    rng = random.Random(seed * 1_000_003 + m)
    filt = random_zigzag(rng, m)
    stats: dict = {}
    t0 = time.perf_counter()
    compute_zigzag(filt, stats, check=False)
    dt = time.perf_counter() - t0
    ops = stats["ops"]
    return BenchRow("compute", m, 1, float(ops), ops / growth("compute", m), dt, ops)


def run_bench(sizes=DEFAULT_SIZES, seed: int = 0, paths=("standard", "zigzag", "compute")) -> list:
    rows = []
    for m in sizes:
        if "standard" in paths:
            rows.append(std_switch_ops(m, seed))
        if "zigzag" in paths:
            rows.extend(zz_switch_ops(m, seed))
        if "compute" in paths:
            rows.append(compute_ops(m, seed))
    return rows


def format_rows(rows, wall: bool = False) -> str:
    """Tab-separated table; wall clock only on request since it is not reproducible."""
    head = ["path", "m", "count", "mean_ops", "max_ops", "norm"]
    if wall:
        head.append("seconds")
    out = ["\t".join(head)]
    for r in rows:
        cells = [r.path, str(r.m), str(r.count), f"{r.mean_ops:.3f}", str(r.max_ops), f"{r.norm:.4f}"]
        if wall:
            cells.append(f"{r.seconds:.3f}")
        out.append("\t".join(cells))
    return "\n".join(out) + "\n"
