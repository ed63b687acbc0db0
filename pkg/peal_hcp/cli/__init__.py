"""Command-line interface."""

from .main import main, make_parser, run
from .manifest import MANIFEST, Hamiltonicity, ManifestEntry, manifest_entry

__all__ = [
    "main",
    "make_parser",
    "run",
    "MANIFEST",
    "Hamiltonicity",
    "ManifestEntry",
    "manifest_entry",
]
