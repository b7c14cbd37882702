"""Exact diagonalization of small fixed-particle-number fermionic
Hamiltonians with the full family of spin-resolved entanglement and
correlation measures."""

from .errors import CapacityError, DomainError, NumericalError, ParseError
from .fock import (ANNIHILATE, CREATE, DOWN, UP, Determinant, Excitation,
                   SectorBasis, apply_ops, enumerate_sector, excitation_info)
from .integrals import IntegralTable, model_table, parse_fcidump, write_fcidump
from .measures import (MeasureReport, SchmidtDecomposition,
                       antisym_partial_transpose, entropy,
                       mutual_information_2body, mutual_information_total,
                       negativity_2body_fermionic, negativity_2body_updown,
                       negativity_pure, negativity_total,
                       normalized_entropies, report, schmidt)
from .rdm import (Rdm1, Rdm2, UpDownDensity, full_density_and_pt, one_body,
                  two_body, two_body_spinorb, updown_densities)
from .solver import (Ensemble, WaveFunction, build_hamiltonian, eigensolve,
                     ground_state, hamiltonian_element, sector_of,
                     solve_table, thermal_ensemble)

__version__ = "0.1.0"

__all__ = [
    "ANNIHILATE", "CREATE", "CapacityError", "DOWN", "Determinant",
    "DomainError", "Ensemble", "Excitation", "IntegralTable", "MeasureReport",
    "NumericalError", "ParseError", "Rdm1", "Rdm2", "SchmidtDecomposition",
    "SectorBasis", "UP", "UpDownDensity", "WaveFunction",
    "antisym_partial_transpose", "apply_ops", "build_hamiltonian",
    "eigensolve", "entropy", "enumerate_sector", "excitation_info",
    "full_density_and_pt", "ground_state", "hamiltonian_element",
    "model_table", "mutual_information_2body", "mutual_information_total",
    "negativity_2body_fermionic", "negativity_2body_updown",
    "negativity_pure", "negativity_total", "normalized_entropies",
    "one_body", "parse_fcidump", "report", "schmidt", "sector_of",
    "solve_table", "thermal_ensemble", "two_body", "two_body_spinorb",
    "updown_densities", "write_fcidump",
]
