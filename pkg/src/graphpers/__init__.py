"""Persistence barcodes of graph filtrations, standard and zigzag, with switch updates."""

from .dynforest import DynForest
from .errors import GraphPersError
from .formats import format_barcode, format_filtration, parse_barcode, parse_filtration, parse_script
from .mergeforest import MergeForest
from .model import (
    STANDARD,
    ZIGZAG,
    Event,
    Filtration,
    Interval,
    Pairing,
    Simplex,
    barcode_from_pairing,
    betti_from_barcode,
    validate,
)
from .standard import compute_pairing
from .stdswitch import StdUpdateState
from .zigzag import UpDown, compute_zigzag, convert, updown_pairs
from .zzswitch import ZZUpdateState

__all__ = [
    "STANDARD",
    "ZIGZAG",
    "DynForest",
    "Event",
    "Filtration",
    "GraphPersError",
    "Interval",
    "MergeForest",
    "Pairing",
    "Simplex",
    "StdUpdateState",
    "UpDown",
    "ZZUpdateState",
    "barcode_from_pairing",
    "betti_from_barcode",
    "compute_pairing",
    "compute_zigzag",
    "convert",
    "format_barcode",
    "format_filtration",
    "parse_barcode",
    "parse_filtration",
    "parse_script",
    "updown_pairs",
    "validate",
]
