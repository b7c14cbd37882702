import itertools
import math

import numpy as np

from fermient import WaveFunction, enumerate_sector


def random_state(basis, rng) -> WaveFunction:
    coeffs = rng.normal(size=basis.size)
    coeffs /= np.linalg.norm(coeffs)
    return WaveFunction(basis, coeffs)


def rotated_sd(basis, u_up, u_dn=None) -> WaveFunction:
    """Slater determinant occupying the first N columns of an orthogonal
    orbital-rotation matrix per spin, expanded over the sector basis.

    The coefficient on an occupation string is the corresponding minor
    determinant of the occupied column block.
    """
    if u_dn is None:
        u_dn = u_up
    n = basis.n_spatial

    def amplitudes(u, n_occ, strings):
        cols = u[:, :n_occ]
        out = np.zeros(len(strings))
        for idx, bits in enumerate(strings):
            rows = [p for p in range(n) if bits & (1 << p)]
            out[idx] = np.linalg.det(cols[rows, :]) if n_occ else 1.0
        return out

    amp_up = amplitudes(np.asarray(u_up), basis.n_up, basis.up_strings)
    amp_dn = amplitudes(np.asarray(u_dn), basis.n_down, basis.down_strings)
    coeffs = np.outer(amp_up, amp_dn).reshape(-1)
    coeffs /= np.linalg.norm(coeffs)
    return WaveFunction(basis, coeffs)


def random_orthogonal(n, rng) -> np.ndarray:
    q, r = np.linalg.qr(rng.normal(size=(n, n)))
    return q * np.sign(np.diag(r))


def basis_sd(basis, up_orbs, dn_orbs) -> WaveFunction:
    """Computational-basis Slater determinant with the given occupations."""
    coeffs = np.zeros(basis.size)
    det_up = sum(1 << p for p in up_orbs)
    det_dn = sum(1 << p for p in dn_orbs)
    from fermient import Determinant
    coeffs[basis.index_of(Determinant(det_up, det_dn))] = 1.0
    return WaveFunction(basis, coeffs)
