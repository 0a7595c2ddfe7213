"""Text formats: filtrations, switch scripts and barcodes.

Filtration lines are ``+ v <id>``, ``- v <id>``, ``+ e <id> <id>`` or
``- e <id> <id>``; ``#`` starts a comment.  Barcode lines are
``dim b d btype dtype``.
"""

from __future__ import annotations

from .errors import ParseError
from .model import INF, STANDARD, ZIGZAG, Filtration, Interval, Simplex

SWITCH_CODES = {"S": "standard", "F": "forward", "B": "backward", "O": "outward", "I": "inward"}


def _lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_filtration(text: str, flavor: str = ZIGZAG) -> Filtration:
    items = []
    for pos, line in enumerate(_lines(text)):
        tok = line.split()
        try:
            if tok[0] not in ("+", "-"):
                raise ValueError
            if tok[1] == "v" and len(tok) == 3:
                s = Simplex.vertex(int(tok[2]))
            elif tok[1] == "e" and len(tok) == 4:
                s = Simplex.edge(int(tok[2]), int(tok[3]))
            else:
                raise ValueError
            if any(x < 0 for x in s.vertices()):
                raise ValueError
        except (ValueError, IndexError):
            raise ParseError(f"cannot parse event {line!r}", pos) from None
        items.append((tok[0] == "+", s))
    return Filtration.build(items, flavor)


def format_filtration(filtration: Filtration) -> str:
    return "".join(f"{ev}\n" for ev in filtration.events)


def parse_script(text: str) -> list:
    """Switch script as a list of ``(kind, position)``."""
    ops = []
    for pos, line in enumerate(_lines(text)):
        tok = line.split()
        if len(tok) != 2 or tok[0] not in SWITCH_CODES:
            raise ParseError(f"cannot parse switch {line!r}", pos)
        try:
            ops.append((SWITCH_CODES[tok[0]], int(tok[1])))
        except ValueError:
            raise ParseError(f"cannot parse switch {line!r}", pos) from None
    return ops


def format_barcode(intervals) -> str:
    return "".join(f"{iv}\n" for iv in sorted(intervals))


def parse_barcode(text: str) -> list:
    out = []
    for line in _lines(text):
        dim, b, d, bt, dt = line.split()
        out.append(Interval(int(dim), int(b), INF if d == "inf" else int(d), bt, dt))
    return sorted(out)


__all__ = [
    "STANDARD",
    "ZIGZAG",
    "parse_filtration",
    "format_filtration",
    "parse_script",
    "format_barcode",
    "parse_barcode",
]
