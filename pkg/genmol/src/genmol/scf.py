"""Closed-shell restricted Hartree-Fock with DIIS acceleration."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .basis import build_basis, nuclear_repulsion
from .integrals import (eri_tensor, kinetic_matrix, nuclear_matrix,
                        overlap_matrix)


class ScfError(RuntimeError):
    """SCF failed to converge within the iteration budget."""


@dataclass(eq=False)
class ScfResult:
    energy: float                 # total RHF energy incl. nuclear repulsion
    mo_coefficients: np.ndarray   # columns are MOs, ascending orbital energy
    mo_energies: np.ndarray
    h_core: np.ndarray            # AO basis
    eri: np.ndarray               # AO basis, chemists' notation
    overlap: np.ndarray
    e_nuclear: float
    n_electrons: int
    iterations: int


def _density(coeffs, n_occupied):
    occ = coeffs[:, :n_occupied]
    return 2.0 * occ @ occ.T


def _fock(h_core, eri, density):
    coulomb = np.einsum("pqrs,rs->pq", eri, density)
    exchange = np.einsum("prqs,rs->pq", eri, density)
    return h_core + coulomb - 0.5 * exchange


def run_rhf(atoms, n_electrons=None, max_iterations=500,
            energy_tolerance=1e-12, diis_size=8,
            level_shift=0.3) -> ScfResult:
    """RHF on a list of (symbol, xyz-in-bohr) atoms.

    A virtual-space level shift stabilizes stretched geometries; it is
    released once the DIIS error drops below 1e-4, so the converged
    stationary point is unshifted.
    """
    basis = build_basis(atoms)
    overlap = overlap_matrix(basis)
    h_core = kinetic_matrix(basis) + nuclear_matrix(basis, atoms)
    eri = eri_tensor(basis)
    e_nuc = nuclear_repulsion(atoms)
    if n_electrons is None:
        from .basis import CHARGES
        n_electrons = sum(CHARGES[symbol] for symbol, _ in atoms)
    if n_electrons % 2:
        raise ValueError("restricted HF needs an even electron count")
    n_occ = n_electrons // 2
    n_ao = len(basis)

    # symmetric orthogonalization
    s_vals, s_vecs = np.linalg.eigh(overlap)
    x = s_vecs @ np.diag(s_vals ** -0.5) @ s_vecs.T
    x_inv = s_vecs @ np.diag(s_vals ** 0.5) @ s_vecs.T

    def solve_fock(fock, coeffs_prev, shift):
        f_ortho = x.T @ fock @ x
        if shift:
            occ_ortho = x_inv @ coeffs_prev[:, :n_occ]
            virtual = np.eye(n_ao) - occ_ortho @ occ_ortho.T
            f_ortho = f_ortho + shift * virtual
        vals, vecs = np.linalg.eigh(f_ortho)
        return vals, x @ vecs

    mo_energies, coeffs = solve_fock(h_core, np.zeros((n_ao, n_ao)), 0.0)
    density = _density(coeffs, n_occ)
    energy = 0.0
    shift = level_shift
    fock_history, error_history = [], []

    for iteration in range(1, max_iterations + 1):
        fock = _fock(h_core, eri, density)
        # DIIS residual in the orthonormal basis
        error = x.T @ (fock @ density @ overlap
                       - overlap @ density @ fock) @ x
        error_norm = float(np.max(np.abs(error)))
        if error_norm < 1e-4:
            shift = 0.0
        fock_history.append(fock)
        error_history.append(error)
        if len(fock_history) > diis_size:
            fock_history.pop(0)
            error_history.pop(0)
        if len(fock_history) > 1:
            m = len(fock_history)
            b = -np.ones((m + 1, m + 1))
            b[m, m] = 0.0
            for i in range(m):
                for j in range(m):
                    b[i, j] = float(np.sum(error_history[i]
                                           * error_history[j]))
            rhs = np.zeros(m + 1)
            rhs[m] = -1.0
            try:
                weights = np.linalg.solve(b, rhs)[:m]
                fock = sum(w * f for w, f in zip(weights, fock_history))
            except np.linalg.LinAlgError:
                pass
        mo_energies, coeffs = solve_fock(fock, coeffs, shift)
        density_new = _density(coeffs, n_occ)
        energy_new = 0.5 * float(np.sum(density_new * (h_core + _fock(
            h_core, eri, density_new)))) + e_nuc
        converged = (abs(energy_new - energy) < energy_tolerance
                     and error_norm < 1e-9
                     and shift == 0.0
                     and iteration > 2)
        density, energy = density_new, energy_new
        if converged:
            return ScfResult(energy=energy, mo_coefficients=coeffs,
                             mo_energies=mo_energies, h_core=h_core, eri=eri,
                             overlap=overlap, e_nuclear=e_nuc,
                             n_electrons=n_electrons, iterations=iteration)
    raise ScfError(f"SCF not converged after {max_iterations} iterations "
                   f"(last E = {energy:.10f})")


def mo_integrals(result: ScfResult):
    """Transform core Hamiltonian and ERIs to the MO basis."""
    c = result.mo_coefficients
    h_mo = c.T @ result.h_core @ c
    eri_mo = np.einsum("pqrs,pi,qj,rk,sl->ijkl", result.eri, c, c, c, c,
                       optimize=True)
    return h_mo, eri_mo
