"""Analytic dissociation-limit states of the water fixture and the exact
reference spectra they must reproduce.

Orbital dictionary (RHF orbitals in the separated-atom limit): 0 and 1 are
the oxygen 1s and 2s, 2 the out-of-plane oxygen 2p, 3 the in-plane oxygen 2p
perpendicular to the H-H axis, 6 the oxygen 2p along it, and 4, 5 the
hydrogen-centered orbitals.  The nondegenerate singlet limit state keeps
orbitals 0-2 doubly occupied; the 12-state degenerate band keeps only 0-1
doubly occupied, distributing four electrons over the 2p set {2, 3, 6} and
two over {4, 5}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .fock import CREATE, DOWN, UP, Determinant, SectorBasis, apply_ops
from .solver import Ensemble, WaveFunction, _shannon

ORBITAL_ROLES = {0: "oxygen 1s", 1: "oxygen 2s", 2: "oxygen 2p (out of plane)",
                 3: "oxygen 2p (in plane, perpendicular)", 4: "hydrogen A",
                 5: "hydrogen B", 6: "oxygen 2p (in plane, parallel)"}

_P_ORBS = (2, 3, 6)
_SQ12 = math.sqrt(1.0 / 12.0)
_SQ3 = math.sqrt(1.0 / 3.0)
_SQ2 = math.sqrt(0.5)


def _cu(p):
    return (CREATE, p, UP)


def _cd(p):
    return (CREATE, p, DOWN)


def _require_sector(basis: SectorBasis):
    if (basis.n_spatial, basis.n_up, basis.n_down) != (7, 5, 5):
        raise DomainError("dissociation-limit states are defined on the "
                          "(7, 5, 5) sector")


def _build_state(basis: SectorBasis, terms, energy=None) -> WaveFunction:
    """Assemble a wave function from (coefficient, creation-op string) terms
    applied to the vacuum."""
    amps = {}
    for coef, ops in terms:
        res = apply_ops(Determinant(0, 0), ops, basis.n_spatial)
        if res is None:
            raise DomainError("operator string annihilates the vacuum")
        phase, det = res
        amps[det] = amps.get(det, 0.0) + coef * phase
    coeffs = np.zeros(basis.size)
    for det, amp in amps.items():
        coeffs[basis.index_of(det)] = amp
    norm = math.sqrt(float(coeffs @ coeffs))
    if norm == 0.0:
        raise DomainError("terms cancel to the zero vector")
    return WaveFunction(basis, coeffs / norm, energy=energy)


_GS_CORE = [_cu(0), _cu(1), _cu(2), _cd(0), _cd(1), _cd(2)]


def asymptotic_gs(basis: SectorBasis) -> WaveFunction:
    """Dissociation limit of the nondegenerate singlet ground state."""
    _require_sector(basis)
    terms = [
        (+_SQ12, [_cu(3), _cu(4), _cd(5), _cd(6)] + _GS_CORE),
        (+_SQ12, [_cu(5), _cu(6), _cd(3), _cd(4)] + _GS_CORE),
        (-_SQ12, [_cu(3), _cu(5), _cd(4), _cd(6)] + _GS_CORE),
        (-_SQ12, [_cu(4), _cu(6), _cd(3), _cd(5)] + _GS_CORE),
        (-_SQ3, [_cu(3), _cu(6), _cd(4), _cd(5)] + _GS_CORE),
        (-_SQ3, [_cu(4), _cu(5), _cd(3), _cd(6)] + _GS_CORE),
    ]
    return _build_state(basis, terms)


def asymptotic_band(basis: SectorBasis) -> list:
    """The 12 orthonormal states spanning the degenerate ground band.

    Members 1-6 are Slater determinants; members 7-12 carry one singlet
    (Bell-type) pair over two of the 2p orbitals.
    """
    _require_sector(basis)
    core = [_cu(0), _cu(1), _cd(0), _cd(1)]
    states = []
    for i in _P_ORBS:                      # K = 1, 2, 3
        ops_2p = [_cu(p) for p in _P_ORBS] + [_cd(i)]
        states.append(_build_state(basis, [(1.0, [_cd(4), _cd(5)] + ops_2p
                                            + core)]))
    for i in _P_ORBS:                      # K = 4, 5, 6
        ops_2p = [_cu(i)] + [_cd(p) for p in _P_ORBS]
        states.append(_build_state(basis, [(1.0, [_cu(4), _cu(5)] + ops_2p
                                            + core)]))
    for h_ops in ([_cu(4), _cd(5)], [_cu(5), _cd(4)]):   # K = 7..9, 10..12
        for i in _P_ORBS:
            j, k = [p for p in _P_ORBS if p != i]
            pair = [_cu(i), _cd(i)]
            states.append(_build_state(basis, [
                (+_SQ2, h_ops + pair + [_cu(j), _cd(k)] + core),
                (-_SQ2, h_ops + pair + [_cu(k), _cd(j)] + core),
            ]))
    return states


def uniform_band_mixture(basis: SectorBasis) -> Ensemble:
    """Zero-temperature thermal limit: equal weights over the 12 band states."""
    members = tuple((1.0 / 12.0, wf) for wf in asymptotic_band(basis))
    return Ensemble(members=members, beta=math.inf,
                    raw_weights=(1.0,) * 12,
                    entropy_p=_shannon([1.0 / 12.0] * 12), entropy_q=0.0)


@dataclass(frozen=True)
class AsymptoticSpec:
    """Exact dissociation-limit reference data (nonzero eigenvalues with
    multiplicities, as rationals) plus the orbital-role dictionary."""

    orbital_roles: dict
    gs_spectra: dict
    thermal_spectra: dict
    gs_schmidt: dict
    gs_pair_schmidt: dict

    @staticmethod
    def expand(row: dict, size: int) -> np.ndarray:
        """Ascending float spectrum padded with zeros to ``size`` entries."""
        vals = []
        for value, count in row.items():
            vals.extend([float(value)] * count)
        if len(vals) > size:
            raise DomainError(f"row holds {len(vals)} values for size {size}")
        vals.extend([0.0] * (size - len(vals)))
        return np.array(sorted(vals))


def table_i_reference() -> AsymptoticSpec:
    """Reference eigenvalues of every tracked block in the dissociation
    limit, for the ground state and the uniform band mixture."""
    F = Fraction
    gs = {
        "rho_up": {F(1, 3): 2, F(1, 12): 4},
        "rdm1_up": {F(1, 1): 3, F(1, 2): 4},
        "rdm2_upup": {F(1, 12): 4, F(1, 3): 2, F(1, 2): 12, F(1, 1): 3},
        "rdm2_updown": {F(1, 12): 4, F(1, 3): 2, F(1, 2): 24, F(3, 4): 4,
                        F(1, 1): 9},
    }
    thermal = {
        "rho_up": {F(1, 12): 9, F(1, 4): 1},
        "rdm1_up": {F(1, 2): 2, F(2, 3): 3, F(1, 1): 2},
        "rdm2_upup": {F(1, 4): 7, F(5, 12): 3, F(1, 2): 4, F(2, 3): 6,
                      F(1, 1): 1},
        "rdm2_updown": {F(1, 4): 2, F(1, 3): 6, F(5, 12): 12, F(1, 2): 11,
                        F(2, 3): 12, F(1, 1): 4},
    }
    gs_schmidt = {F(1, 3): 2, F(1, 12): 4}            # squared values
    gs_pair_schmidt = {F(3, 4): 4, F(1, 3): 2, F(1, 12): 4}
    return AsymptoticSpec(dict(ORBITAL_ROLES), gs, thermal, gs_schmidt,
                          gs_pair_schmidt)
