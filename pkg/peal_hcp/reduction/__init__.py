"""Building HCP instances and decoding their solutions."""

from .builder import (
    Instance,
    NhCheck,
    VertexMeta,
    Wiring,
    build_erin,
    build_instance,
    build_stedman,
    expected_size,
    odd_part_length,
    trivial_nh_check,
)
from .export import export_hcp, format_meta, load_instance, sidecar_paths
from .peals import (
    CallSequence,
    DecodeError,
    InvalidCallSequence,
    PealVerdict,
    RoundBlocks,
    Verdict,
    decode,
    expand,
    verify_peal,
    wiring_edges,
)

__all__ = [
    "Instance",
    "NhCheck",
    "VertexMeta",
    "Wiring",
    "build_erin",
    "build_instance",
    "build_stedman",
    "expected_size",
    "odd_part_length",
    "trivial_nh_check",
    "export_hcp",
    "format_meta",
    "load_instance",
    "sidecar_paths",
    "CallSequence",
    "DecodeError",
    "InvalidCallSequence",
    "PealVerdict",
    "RoundBlocks",
    "Verdict",
    "decode",
    "expand",
    "verify_peal",
    "wiring_edges",
]
