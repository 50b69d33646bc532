"""Search and construction toolkit for low peak-sidelobe-level binary sequences."""

from .flip import FitnessSpec, SidelobeState, fitness, flip
from .generators import LfsrSpec, legendre, mseq, random_sequence
from .rotation import RotationScanResult, rotate_left, rotation_delta, scan_rotations
from .search import SearchConfig, SearchOutcome, quake, shc_run
from .seqcore import (
    autocorrelation,
    decode_hex,
    encode_hex,
    psl,
    sidelobes,
    transform,
)

__all__ = [
    "FitnessSpec",
    "SidelobeState",
    "fitness",
    "flip",
    "LfsrSpec",
    "legendre",
    "mseq",
    "random_sequence",
    "RotationScanResult",
    "rotate_left",
    "rotation_delta",
    "scan_rotations",
    "SearchConfig",
    "SearchOutcome",
    "quake",
    "shc_run",
    "autocorrelation",
    "decode_hex",
    "encode_hex",
    "psl",
    "sidelobes",
    "transform",
]

__version__ = "0.1.0"
