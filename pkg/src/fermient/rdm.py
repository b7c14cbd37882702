"""Reduced objects of pure states and ensembles: total up/down reduced
density matrices, the spin-blocked one-body DM, and the three-block
two-body DM.

Conventions (real states throughout):
  rho1[sigma][i, j]          = < c+(j,s) c(i,s) >
  rho2_upup[(ij), (kl)]      = < c+(k,up) c+(l,up) c(j,up) c(i,up) >, i<j, k<l
  rho2_updown[i*n+j, k*n+l]  = < c+(k,up) c+(l,dn) c(j,dn) c(i,up) >, unrestricted
All matrices are symmetrized on emission; phases follow fock.apply_ops.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DomainError, NumericalError
from .solver import DENSE_LIMIT, _state_members

_CLAMP = 1e-9


@dataclass(eq=False)
class UpDownDensity:
    """Total up and down reduced states (unit trace each)."""

    rho_up: np.ndarray
    rho_down: np.ndarray


@dataclass(eq=False)
class Rdm1:
    """Spin blocks of the one-body density matrix."""

    up: np.ndarray
    down: np.ndarray

    @property
    def n_up(self) -> float:
        return float(np.trace(self.up))

    @property
    def n_down(self) -> float:
        return float(np.trace(self.down))


def pair_labels(n: int):
    """Ordered i<j pair labels indexing the restricted same-spin blocks."""
    return list(itertools.combinations(range(n), 2))


@dataclass(eq=False)
class Rdm2:
    """Three blocks of the two-body density matrix.

    ``upup``/``downdown`` are restricted to ordered pairs i<j (see
    pair_labels); ``updown`` uses unrestricted n^2 labels i*n+j.
    """

    n_spatial: int
    upup: np.ndarray
    downdown: np.ndarray
    updown: np.ndarray

    def _unrestricted(self, block: np.ndarray) -> np.ndarray:
        n = self.n_spatial
        labels = pair_labels(n)
        expand = np.zeros((n * n, len(labels)))
        for col, (i, j) in enumerate(labels):
            expand[i * n + j, col] = 1.0
            expand[j * n + i, col] = -1.0
        return expand @ block @ expand.T

    def upup_unrestricted(self) -> np.ndarray:
        """Antisymmetrized n^2 x n^2 view of the up-up block (trace doubles)."""
        return self._unrestricted(self.upup)

    def downdown_unrestricted(self) -> np.ndarray:
        return self._unrestricted(self.downdown)

    def updown_partial_transpose(self) -> np.ndarray:
        """Swap the down-spin ket/bra labels of the up-down block."""
        n = self.n_spatial
        four = self.updown.reshape(n, n, n, n)
        return four.transpose(0, 3, 2, 1).reshape(n * n, n * n)

    def one_body_from_updown(self, n_up: int, n_down: int) -> Rdm1:
        """Recover the one-body blocks by partial traces of the up-down block.

        The up-down block alone fixes only N_up * N_down, so the sector
        particle numbers are passed in for the normalization.
        """
        if n_up < 1 or n_down < 1:
            raise DomainError("partial-trace recovery needs N_up, N_down >= 1")
        n = self.n_spatial
        four = self.updown.reshape(n, n, n, n)
        return Rdm1(np.einsum("ijkj->ik", four) / n_down,
                    np.einsum("ijil->jl", four) / n_up)

    def traces(self):
        return (float(np.trace(self.upup)), float(np.trace(self.downdown)),
                float(np.trace(self.updown)))


def _symmetrized(m: np.ndarray) -> np.ndarray:
    return (m + m.T) / 2.0


def updown_densities(state) -> UpDownDensity:
    """Total up and down reduced density matrices of a state or mixture."""
    members = _state_members(state)
    basis = members[0][1].basis
    n_u, n_d = basis.shape
    rho_up = np.zeros((n_u, n_u))
    rho_down = np.zeros((n_d, n_d))
    for weight, wf in members:
        gamma = wf.tensor()
        rho_up += weight * (gamma @ gamma.T)
        rho_down += weight * (gamma.T @ gamma)
    return UpDownDensity(_symmetrized(rho_up), _symmetrized(rho_down))


def _below(bits: int, k: int) -> int:
    return (bits & ((1 << k) - 1)).bit_count()


def _orbs(bits: int):
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def one_body(state) -> Rdm1:
    """Spin-blocked one-body density matrix of a state or mixture."""
    members = _state_members(state)
    basis = members[0][1].basis
    n = basis.n_spatial
    blocks = {"up": np.zeros((n, n)), "down": np.zeros((n, n))}
    n_dn_strings = len(basis.down_strings)
    for weight, wf in members:
        coeffs = wf.coeffs
        for g, det in enumerate(basis.determinants()):
            c_ket = coeffs[g]
            if c_ket == 0.0:
                continue
            for spin, bits, other in (("up", det.up, det.down),
                                      ("down", det.down, det.up)):
                block = blocks[spin]
                for i in _orbs(bits):
                    removed = bits & ~(1 << i)
                    sign_i = -1 if _below(bits, i) & 1 else 1
                    for j in range(n):
                        if removed & (1 << j):
                            continue
                        new_bits = removed | (1 << j)
                        sign = sign_i * (-1 if _below(removed, j) & 1 else 1)
                        if spin == "up":
                            g2 = (basis._up_index[new_bits] * n_dn_strings
                                  + basis._down_index[other])
                        else:
                            g2 = (basis._up_index[other] * n_dn_strings
                                  + basis._down_index[new_bits])
                        block[i, j] += weight * sign * c_ket * coeffs[g2]
    return Rdm1(_symmetrized(blocks["up"]), _symmetrized(blocks["down"]))


def _same_spin_block(basis, members, spin: str) -> np.ndarray:
    """Restricted i<j same-spin two-body block."""
    n = basis.n_spatial
    labels = pair_labels(n)
    index = {lab: a for a, lab in enumerate(labels)}
    block = np.zeros((len(labels), len(labels)))
    n_dn_strings = len(basis.down_strings)
    for weight, wf in members:
        coeffs = wf.coeffs
        for g, det in enumerate(basis.determinants()):
            c_ket = coeffs[g]
            if c_ket == 0.0:
                continue
            bits = det.up if spin == "up" else det.down
            other = det.down if spin == "up" else det.up
            occ = _orbs(bits)
            for a_pos, i in enumerate(occ):
                for j in occ[a_pos + 1:]:
                    # apply c_i then c_j (product ... c_j c_i)
                    s1 = -1 if _below(bits, i) & 1 else 1
                    b1 = bits & ~(1 << i)
                    s2 = -1 if _below(b1, j) & 1 else 1
                    b2 = b1 & ~(1 << j)
                    row = index[(i, j)]
                    free = [p for p in range(n) if not b2 & (1 << p)]
                    for c_pos, k in enumerate(free):
                        for l in free[c_pos + 1:]:
                            # apply c+_l then c+_k (product c+_k c+_l ...)
                            s3 = -1 if _below(b2, l) & 1 else 1
                            b3 = b2 | (1 << l)
                            s4 = -1 if _below(b3, k) & 1 else 1
                            b4 = b3 | (1 << k)
                            if spin == "up":
                                g2 = (basis._up_index[b4] * n_dn_strings
                                      + basis._down_index[other])
                            else:
                                g2 = (basis._up_index[other] * n_dn_strings
                                      + basis._down_index[b4])
                            block[index[(k, l)], row] += (weight * s1 * s2 * s3
                                                          * s4 * c_ket
                                                          * coeffs[g2])
    return block


def _updown_block(basis, members) -> np.ndarray:
    """Unrestricted (i, j-bar) up-down two-body block, n^2 labels."""
    n = basis.n_spatial
    block = np.zeros((n * n, n * n))
    n_dn_strings = len(basis.down_strings)
    for weight, wf in members:
        coeffs = wf.coeffs
        for g, det in enumerate(basis.determinants()):
            c_ket = coeffs[g]
            if c_ket == 0.0:
                continue
            up, down = det.up, det.down
            # cross-block (-1)^(N_up) factors from the two down-spin
            # operators cancel pairwise and are omitted throughout
            for i in _orbs(up):
                s1 = -1 if _below(up, i) & 1 else 1
                up1 = up & ~(1 << i)
                for j in _orbs(down):
                    s2 = -1 if _below(down, j) & 1 else 1
                    dn1 = down & ~(1 << j)
                    col = i * n + j
                    amp0 = weight * s1 * s2 * c_ket
                    for l in range(n):
                        if dn1 & (1 << l):
                            continue
                        s3 = -1 if _below(dn1, l) & 1 else 1
                        dn2 = dn1 | (1 << l)
                        g_dn = basis._down_index[dn2]
                        for k in range(n):
                            if up1 & (1 << k):
                                continue
                            s4 = -1 if _below(up1, k) & 1 else 1
                            g2 = (basis._up_index[up1 | (1 << k)]
                                  * n_dn_strings + g_dn)
                            block[k * n + l, col] += amp0 * s3 * s4 * coeffs[g2]
    return block


def two_body(state) -> Rdm2:
    """All three spin blocks of the two-body density matrix."""
    members = _state_members(state)
    basis = members[0][1].basis
    return Rdm2(basis.n_spatial,
                _symmetrized(_same_spin_block(basis, members, "up")),
                _symmetrized(_same_spin_block(basis, members, "down")),
                _symmetrized(_updown_block(basis, members)))


def two_body_spinorb(state) -> np.ndarray:
    """Antisymmetrized two-body DM over unrestricted spin-orbital labels.

    Modes are ordered up block first: spin orbital I = p for (p, up) and
    n + p for (p, down); the result is a (2n)^2 x (2n)^2 matrix with
    element [I*2n+J, K*2n+L] = < c+_K c+_L c_J c_I >.
    """
    members = _state_members(state)
    basis = members[0][1].basis
    n = basis.n_spatial
    d = 2 * n
    out = np.zeros((d * d, d * d))
    r2 = two_body(state)
    # same-spin sectors from the restricted blocks
    for offset, block in ((0, r2.upup), (n, r2.downdown)):
        labels = pair_labels(n)
        for a, (i, j) in enumerate(labels):
            for b, (k, l) in enumerate(labels):
                v = block[b, a]
                ii, jj, kk, ll = i + offset, j + offset, k + offset, l + offset
                for (x, y, sx) in ((ii, jj, 1.0), (jj, ii, -1.0)):
                    for (z, w, sz) in ((kk, ll, 1.0), (ll, kk, -1.0)):
                        out[z * d + w, x * d + y] = sx * sz * v
    # mixed-spin sector from the up-down block
    ud = r2.updown.reshape(n, n, n, n)    # [i, j, k, l] = <c+_k c+_lbar c_jbar c_i>
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    v = ud[i, j, k, l]
                    I, J, K, L = i, n + j, k, n + l
                    out[K * d + L, I * d + J] = v
                    out[L * d + K, I * d + J] = -v
                    out[K * d + L, J * d + I] = -v
                    out[L * d + K, J * d + I] = v
    return out


def full_density_and_pt(state, dense_limit: int = DENSE_LIMIT):
    """Sector density matrix in the (up, down) product layout and its
    down-side partial transpose."""
    members = _state_members(state)
    basis = members[0][1].basis
    dim = basis.size
    if dim > dense_limit:
        raise CapacityError(f"sector dimension {dim} exceeds the dense "
                            f"limit {dense_limit}")
    rho = np.zeros((dim, dim))
    for weight, wf in members:
        rho += weight * np.outer(wf.coeffs, wf.coeffs)
    n_u, n_d = basis.shape
    four = rho.reshape(n_u, n_d, n_u, n_d)
    rho_pt = four.transpose(0, 3, 2, 1).reshape(dim, dim)
    return rho, rho_pt


def clamped_spectrum(matrix: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues with tiny negatives zeroed.

    Values in [-1e-9, 0) are reported as 0; anything more negative raises
    NumericalError (a genuinely negative RDM spectrum indicates a bug).
    """
    vals = np.linalg.eigvalsh(_symmetrized(np.asarray(matrix, dtype=float)))
    if vals.min(initial=0.0) < -_CLAMP:
        raise NumericalError(f"spectrum has eigenvalue {vals.min():.3e} "
                             f"below -{_CLAMP}")
    return np.where((vals < 0.0), 0.0, vals)
