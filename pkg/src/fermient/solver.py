"""Sector Hamiltonians via Slater-Condon rules, dense diagonalization, and
low-temperature thermal mixtures of eigenstates.

Matrix elements follow the chemists'-notation Hamiltonian documented in
``integrals``; the scalar core energy is *not* part of hamiltonian_element
and enters only on the diagonal in build_hamiltonian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import CapacityError, DomainError, NumericalError
from .fock import UP, Determinant, SectorBasis, enumerate_sector, excitation_info
from .integrals import IntegralTable

DENSE_LIMIT = 20_000
WEIGHT_CUTOFF = 1e-12


@dataclass(eq=False)
class WaveFunction:
    """Pure CI state: coefficients over a sector basis in row-major (up, down)
    string order, so ``coeffs.reshape(basis.shape)`` is the up/down
    coefficient tensor."""

    basis: SectorBasis
    coeffs: np.ndarray
    energy: float | None = None

    def norm_error(self) -> float:
        return abs(float(self.coeffs @ self.coeffs) - 1.0)

    def tensor(self) -> np.ndarray:
        return self.coeffs.reshape(self.basis.shape)


@dataclass(eq=False)
class Ensemble:
    """Convex mixture of same-sector eigenstates (thermal state).

    ``raw_weights`` holds the unnormalized Boltzmann factors q_n of the kept
    members; ``entropy_p``/``entropy_q`` are the base-2 Shannon entropies of
    the kept normalized/unnormalized weight distributions.
    """

    members: tuple            # ((weight, WaveFunction), ...) weights descending
    beta: float
    raw_weights: tuple
    entropy_p: float
    entropy_q: float

    @property
    def basis(self) -> SectorBasis:
        return self.members[0][1].basis


def _state_members(state):
    """Uniform view of a WaveFunction or Ensemble as (weight, wf) pairs."""
    if isinstance(state, WaveFunction):
        return ((1.0, state),)
    if isinstance(state, Ensemble):
        return state.members
    raise DomainError(f"expected WaveFunction or Ensemble, got {type(state)!r}")


def hamiltonian_element(a: Determinant, b: Determinant,
                        table: IntegralTable) -> float:
    """Slater-Condon matrix element <a|H|b> (without the core energy)."""
    if (a.n_up, a.n_down) != (b.n_up, b.n_down):
        raise DomainError(f"sector mismatch: ({a.n_up},{a.n_down}) vs "
                          f"({b.n_up},{b.n_down})")
    exc = excitation_info(a, b)
    if exc.degree > 2:
        return 0.0
    h = table.h
    eri = table.eri_dense()
    occ_u = a.occupied("up")
    occ_d = a.occupied("down")

    if exc.degree == 0:
        e = sum(h[p, p] for p in occ_u) + sum(h[p, p] for p in occ_d)
        for ii, p in enumerate(occ_u):
            for q in occ_u[ii + 1:]:
                e += eri[p, p, q, q] - eri[p, q, q, p]
        for ii, p in enumerate(occ_d):
            for q in occ_d[ii + 1:]:
                e += eri[p, p, q, q] - eri[p, q, q, p]
        for p in occ_u:
            for q in occ_d:
                e += eri[p, p, q, q]
        return float(e)

    if exc.degree == 1:
        if exc.holes_up:
            ho, pa, same = exc.holes_up[0], exc.parts_up[0], UP
        else:
            ho, pa, same = exc.holes_down[0], exc.parts_down[0], "down"
        e = h[ho, pa]
        for q in occ_u:
            if same == UP and q == ho:
                continue
            e += eri[ho, pa, q, q]
            if same == UP:
                e -= eri[ho, q, q, pa]
        for q in occ_d:
            if same == "down" and q == ho:
                continue
            e += eri[ho, pa, q, q]
            if same == "down":
                e -= eri[ho, q, q, pa]
        return float(exc.phase * e)

    # degree 2: holes/particles ascending, paired in order (fock convention)
    if len(exc.holes_up) == 2:
        h1, h2 = exc.holes_up
        p1, p2 = exc.parts_up
        return float(exc.phase * (eri[h1, p1, h2, p2] - eri[h1, p2, h2, p1]))
    if len(exc.holes_down) == 2:
        h1, h2 = exc.holes_down
        p1, p2 = exc.parts_down
        return float(exc.phase * (eri[h1, p1, h2, p2] - eri[h1, p2, h2, p1]))
    hu, pu = exc.holes_up[0], exc.parts_up[0]
    hd, pd = exc.holes_down[0], exc.parts_down[0]
    return float(exc.phase * eri[hu, pu, hd, pd])


def build_hamiltonian(basis: SectorBasis, table: IntegralTable,
                      dense_limit: int = DENSE_LIMIT) -> np.ndarray:
    """Dense symmetric sector Hamiltonian, core energy on the diagonal."""
    dim = basis.size
    if dim > dense_limit:
        raise CapacityError(f"sector dimension {dim} exceeds the dense "
                            f"limit {dense_limit}")
    if table.n_spatial < basis.n_spatial:
        raise DomainError("integral table has fewer orbitals than the basis")
    dets = list(basis.determinants())
    matrix = np.zeros((dim, dim))
    for i, a in enumerate(dets):
        matrix[i, i] = hamiltonian_element(a, a, table) + table.e_core
        for j in range(i + 1, dim):
            b = dets[j]
            if ((a.up ^ b.up).bit_count() + (a.down ^ b.down).bit_count()) > 4:
                continue
            v = hamiltonian_element(a, b, table)
            matrix[i, j] = matrix[j, i] = v
    return matrix


def eigensolve(matrix: np.ndarray):
    """All eigenpairs of a real symmetric matrix, ascending, sign-fixed.

    Returns (eigenvalues, eigenvectors) with eigenvectors in columns; each
    column is flipped so its largest-magnitude coefficient is positive.
    """
    matrix = np.asarray(matrix, dtype=float)
    if not np.all(np.isfinite(matrix)):
        raise NumericalError("matrix contains non-finite entries")
    vals, vecs = scipy.linalg.eigh(matrix)
    for k in range(vecs.shape[1]):
        lead = np.argmax(np.abs(vecs[:, k]))
        if vecs[lead, k] < 0:
            vecs[:, k] = -vecs[:, k]
    return vals, vecs


def sector_of(table: IntegralTable):
    """(n_up, n_down) implied by the table's NELEC/MS2."""
    if (table.n_electrons + table.ms2) % 2:
        raise DomainError(f"NELEC={table.n_electrons} and MS2={table.ms2} "
                          "have incompatible parity")
    n_up = (table.n_electrons + table.ms2) // 2
    n_down = (table.n_electrons - table.ms2) // 2
    if n_down < 0 or n_up > table.n_spatial or n_down > table.n_spatial:
        raise DomainError(f"sector ({n_up},{n_down}) impossible with "
                          f"{table.n_spatial} orbitals")
    return n_up, n_down


def solve_table(table: IntegralTable, n_up=None, n_down=None,
                dense_limit: int = DENSE_LIMIT):
    """Enumerate the sector, build H, diagonalize.

    Returns (basis, eigenvalues, eigenvectors); eigenvalues include e_core.
    """
    if n_up is None or n_down is None:
        n_up, n_down = sector_of(table)
    basis = enumerate_sector(table.n_spatial, n_up, n_down)
    vals, vecs = eigensolve(build_hamiltonian(basis, table, dense_limit))
    return basis, vals, vecs


def ground_state(basis: SectorBasis, vals, vecs) -> WaveFunction:
    return WaveFunction(basis, np.array(vecs[:, 0]), energy=float(vals[0]))


def _shannon(weights) -> float:
    return float(-sum(w * math.log2(w) for w in weights if w > 0.0))


def thermal_ensemble(basis: SectorBasis, vals, vecs, beta: float,
                     weight_cutoff: float = WEIGHT_CUTOFF) -> Ensemble:
    """Fixed-sector thermal mixture of eigenstates at inverse temperature beta.

    q_n = exp(-beta (E_n - E_0)); members with normalized weight below
    ``weight_cutoff`` are dropped and the remaining weights renormalized.
    """
    if beta <= 0:
        raise DomainError(f"beta must be positive, got {beta}")
    vals = np.asarray(vals, dtype=float)
    if vals.size == 0:
        raise DomainError("no eigenpairs supplied")
    q = np.exp(-beta * (vals - vals[0]))
    p = q / q.sum()
    keep = np.flatnonzero(p >= weight_cutoff)
    q = q[keep]
    p_kept = q / q.sum()
    members = tuple(
        (float(p_kept[m]), WaveFunction(basis, np.array(vecs[:, k]),
                                        energy=float(vals[k])))
        for m, k in enumerate(keep))
    return Ensemble(members=members, beta=float(beta),
                    raw_weights=tuple(float(x) for x in q),
                    entropy_p=_shannon(p_kept),
                    entropy_q=_shannon(q))
