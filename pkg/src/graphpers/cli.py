"""Command line front door.

    graphpers compute --standard F.flt | --zigzag F.flt [-o OUT] [--emit-updown P] [--figure P]
    graphpers update  --standard F.flt | --zigzag F.flt --script S.sw [--trace] [--verify] [-o OUT]
    graphpers oracle  --standard F.flt | --zigzag F.flt [-o OUT] [--figure P]
    graphpers bench   [--seed N] [--sizes M ...] [-o TABLE] [--figure P] [--wall]

Errors go to stderr as one line ``ERR <code> <event-index>`` (``-1`` when no
index applies) with exit status 2.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import bench as benchmod
from .errors import GraphPersError, KindMismatch
from .formats import format_barcode, parse_filtration, parse_script
from .model import STANDARD, ZIGZAG, Filtration, barcode_from_pairing, validate
from .oracle import reduce_standard, zigzag_by_ranks
from .standard import compute_pairing
from .stdswitch import StdUpdateState
from .zigzag import compute_zigzag, convert
from .zzswitch import ZZUpdateState


@dataclass
class RunConfig:
    mode: str
    flavor: str | None = None
    input: str | None = None
    script: str | None = None
    trace: bool = False
    verify: bool = False
    seed: int = 0
    output: str | None = None
    figure: str | None = None
    emit_updown: str | None = None
    sizes: tuple = benchmod.DEFAULT_SIZES
    wall: bool = False


class Divergence(GraphPersError):
    code = "Divergence"


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def _write(path, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def load(flavor: str, path: str) -> Filtration:
    filt = parse_filtration(_read(path), flavor)
    validate(filt)
    return filt


def barcode(filt: Filtration) -> list:
    if filt.flavor == STANDARD:
        return barcode_from_pairing(filt, compute_pairing(filt))
    return compute_zigzag(filt, check=False)


def _figure(cfg: RunConfig, intervals, m: int, title: str) -> None:
    if cfg.figure:
        from .plotting import barcode_figure

        barcode_figure(intervals, m, cfg.figure, title)


def cmd_compute(cfg: RunConfig) -> str:
    filt = load(cfg.flavor, cfg.input)
    if cfg.emit_updown:
        if filt.flavor != ZIGZAG:
            raise KindMismatch("--emit-updown needs a zigzag filtration", -1)
        _write(cfg.emit_updown, convert(filt).dump())
    ivs = barcode(filt)
    _figure(cfg, ivs, filt.m, cfg.input)
    return format_barcode(ivs)


def cmd_oracle(cfg: RunConfig) -> str:
    filt = load(cfg.flavor, cfg.input)
    if filt.flavor == STANDARD:
        ivs = barcode_from_pairing(filt, reduce_standard(filt))
    else:
        ivs = zigzag_by_ranks(filt)
    _figure(cfg, ivs, filt.m, cfg.input)
    return format_barcode(ivs)


class _Engine:
    """Uniform face over the standard and zigzag switch states."""

    def __init__(self, filt: Filtration):
        self.flavor = filt.flavor
        if filt.flavor == STANDARD:
            self.st = StdUpdateState.from_filtration(filt)
        else:
            self.st = ZZUpdateState(filt, check=False)

    def switch(self, kind: str, i: int) -> None:
        if self.flavor == STANDARD:
            if kind != "standard":
                raise KindMismatch(f"{kind} switch on a standard filtration", i)
            self.st.switch(i)
        else:
            if kind == "standard":
                raise KindMismatch("standard switch on a zigzag filtration", i)
            self.st.switch(kind, i)

    def filtration(self) -> Filtration:
        return self.st.filtration()

    def barcode(self) -> list:
        if self.flavor == STANDARD:
            return sorted(barcode_from_pairing(self.st.filtration(), self.st.pairing()))
        return self.st.barcode()


def cmd_update(cfg: RunConfig) -> str:
    filt = load(cfg.flavor, cfg.input)
    ops = parse_script(_read(cfg.script))
    eng = _Engine(filt)
    out = []
    for step, (kind, i) in enumerate(ops):
        eng.switch(kind, i)
        if cfg.verify:
            got = eng.barcode()
            want = sorted(barcode(eng.filtration()))
            if got != want:
                raise Divergence(f"maintained barcode diverged after step {step}", i)
        if cfg.trace:
            out.append(f"# step {step} {kind} {i}\n")
            out.append(format_barcode(eng.barcode()))
    ivs = eng.barcode()
    if cfg.trace:
        out.append("# final\n")
    out.append(format_barcode(ivs))
    _figure(cfg, ivs, filt.m, cfg.input)
    return "".join(out)


def cmd_bench(cfg: RunConfig) -> str:
    rows = benchmod.run_bench(cfg.sizes, cfg.seed)
    if cfg.figure:
        from .plotting import bench_figure

        bench_figure(rows, cfg.figure)
    return benchmod.format_rows(rows, cfg.wall)


COMMANDS = {"compute": cmd_compute, "update": cmd_update, "oracle": cmd_oracle, "bench": cmd_bench}


def run(cfg: RunConfig) -> int:
    try:
        text = COMMANDS[cfg.mode](cfg)
    except GraphPersError as err:
        idx = -1 if err.index is None else err.index
        print(f"ERR {err.code} {idx}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"ERR IO -1  # {err.strerror}: {err.filename}", file=sys.stderr)
        return 2
    _write(cfg.output, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphpers", description="Graph persistence barcodes and switch updates.")
    sub = p.add_subparsers(dest="mode", required=True)

    def flavor_args(sp):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--standard", metavar="FILE", help="standard (additions only) filtration")
        g.add_argument("--zigzag", metavar="FILE", help="zigzag filtration")
        sp.add_argument("-o", "--output", help="barcode file (default stdout)")
        sp.add_argument("--figure", help="write a barcode figure to this path")

    sp = sub.add_parser("compute", help="barcode of a filtration")
    flavor_args(sp)
    sp.add_argument("--emit-updown", metavar="PATH", help="dump the up-down conversion (zigzag only)")

    sp = sub.add_parser("update", help="apply a switch script with maintained state")
    flavor_args(sp)
    sp.add_argument("--script", required=True, help="switch script, one `S|F|B|O|I <i>` per line")
    sp.add_argument("--trace", action="store_true", help="emit the barcode after every switch")
    sp.add_argument("--verify", action="store_true", help="recompute from scratch after every switch")

    sp = sub.add_parser("oracle", help="barcode from the slow reference computations")
    flavor_args(sp)

    sp = sub.add_parser("bench", help="primitive-op counters for switches and compute")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--sizes", type=int, nargs="+", default=list(benchmod.DEFAULT_SIZES))
    sp.add_argument("-o", "--output", help="tab-separated table (default stdout)")
    sp.add_argument("--figure", help="write the bench figure to this path")
    sp.add_argument("--wall", action="store_true", help="add a wall-clock column")
    return p


def parse_config(argv=None) -> RunConfig:
    a = build_parser().parse_args(argv)
    cfg = RunConfig(mode=a.mode, output=a.output, figure=a.figure)
    if a.mode == "bench":
        cfg.seed = a.seed
        cfg.sizes = tuple(a.sizes)
        cfg.wall = a.wall
        return cfg
    cfg.flavor = STANDARD if a.standard else ZIGZAG
    cfg.input = a.standard or a.zigzag
    if a.mode == "compute":
        cfg.emit_updown = a.emit_updown
    if a.mode == "update":
        cfg.script = a.script
        cfg.trace = a.trace
        cfg.verify = a.verify
    return cfg


def main(argv=None) -> int:
    return run(parse_config(argv))


if __name__ == "__main__":
    sys.exit(main())
