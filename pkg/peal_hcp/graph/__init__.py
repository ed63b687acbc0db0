"""In-out gadgets, HCP files and the exact Hamiltonian-cycle solver."""

from .gadgets import (
    Gadget,
    GadgetKind,
    InOutCertificate,
    build_gadget,
    certificate,
    hamiltonian_paths,
    verify_in_out,
)
from .hcpfile import HcpGraph, InstanceFormatError, format_hcp, read_hcp, write_hcp
from .solver import (
    HcResult,
    HcStatus,
    Propagation,
    SearchGraph,
    SolveMode,
    canonical_cycle,
    propagate,
    solve,
    verify_cycle,
)

__all__ = [
    "Gadget",
    "GadgetKind",
    "InOutCertificate",
    "build_gadget",
    "certificate",
    "hamiltonian_paths",
    "verify_in_out",
    "HcpGraph",
    "InstanceFormatError",
    "format_hcp",
    "read_hcp",
    "write_hcp",
    "HcResult",
    "HcStatus",
    "Propagation",
    "SearchGraph",
    "SolveMode",
    "canonical_cycle",
    "propagate",
    "solve",
    "verify_cycle",
]
