"""STO-3G RHF FCIDUMP generator for the water dissociation fixture grid."""

from .basis import build_basis, nuclear_repulsion, water_geometry
from .cli import default_grid, generate
from .fcidump import fcidump_text
from .scf import ScfError, ScfResult, mo_integrals, run_rhf

__version__ = "0.1.0"

__all__ = ["ScfError", "ScfResult", "build_basis", "default_grid",
           "fcidump_text", "generate", "mo_integrals", "nuclear_repulsion",
           "run_rhf", "water_geometry"]
