"""Brute-force reference implementations used by the test suite.

Everything here applies second-quantized operator strings term by term via
fock.apply_ops, with no Slater-Condon shortcuts, no excitation screening and
no use of integral symmetry, so that the fast paths in solver and rdm are
validated against a maximally independent route.
"""

from __future__ import annotations

import numpy as np

from .errors import CapacityError
from .fock import (ANNIHILATE, CREATE, DOWN, UP, Determinant, apply_ops)
from .rdm import Rdm1, Rdm2, pair_labels
from .solver import WaveFunction, _state_members

NAIVE_LIMIT = 5000


def _as_dict(wf: WaveFunction) -> dict:
    out = {}
    for g, det in enumerate(wf.basis.determinants()):
        if wf.coeffs[g] != 0.0:
            out[det] = float(wf.coeffs[g])
    return out


def _accumulate(target: dict, state: dict, ops, n_spatial, scale):
    if scale == 0.0:
        return
    for det, amp in state.items():
        res = apply_ops(det, ops, n_spatial)
        if res is None:
            continue
        phase, new_det = res
        target[new_det] = target.get(new_det, 0.0) + scale * phase * amp


def apply_hamiltonian_naive(wf: WaveFunction, table) -> np.ndarray:
    """Coefficients of H|wf> by looping every Hamiltonian term over every
    determinant; includes the core energy."""
    basis = wf.basis
    if basis.size > NAIVE_LIMIT:
        raise CapacityError(f"sector dimension {basis.size} exceeds the "
                            f"naive-path limit {NAIVE_LIMIT}")
    n = table.n_spatial
    state = _as_dict(wf)
    out = {det: table.e_core * amp for det, amp in state.items()}
    eri = table.eri_dense()
    spins = (UP, DOWN)
    for p in range(n):
        for q in range(n):
            for s in spins:
                ops = ((CREATE, p, s), (ANNIHILATE, q, s))
                _accumulate(out, state, ops, n, float(table.h[p, q]))
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for t in range(n):
                    v = 0.5 * float(eri[p, q, r, t])
                    if v == 0.0:
                        continue
                    for s1 in spins:
                        for s2 in spins:
                            ops = ((CREATE, p, s1), (CREATE, r, s2),
                                   (ANNIHILATE, t, s2), (ANNIHILATE, q, s1))
                            _accumulate(out, state, ops, n, v)
    coeffs = np.zeros(basis.size)
    for det, amp in out.items():
        if (det.n_up, det.n_down) == (basis.n_up, basis.n_down):
            coeffs[basis.index_of(det)] = amp
    return coeffs


def hamiltonian_element_naive(a: Determinant, b: Determinant, table) -> float:
    """<a|H|b> for arbitrary determinants (not restricted to one sector)."""
    n = table.n_spatial
    state = {b: 1.0}
    out = {}
    if table.e_core:
        out[b] = table.e_core
    eri = table.eri_dense()
    spins = (UP, DOWN)
    for p in range(n):
        for q in range(n):
            for s in spins:
                _accumulate(out, state, ((CREATE, p, s), (ANNIHILATE, q, s)),
                            n, float(table.h[p, q]))
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for t in range(n):
                    v = 0.5 * float(eri[p, q, r, t])
                    if v == 0.0:
                        continue
                    for s1 in spins:
                        for s2 in spins:
                            _accumulate(out, state,
                                        ((CREATE, p, s1), (CREATE, r, s2),
                                         (ANNIHILATE, t, s2),
                                         (ANNIHILATE, q, s1)), n, v)
    return out.get(a, 0.0)


def _expectation(members, ops, n_spatial) -> float:
    """Weighted expectation of one operator string over state members."""
    total = 0.0
    for weight, wf in members:
        basis = wf.basis
        acc = 0.0
        for g, det in enumerate(basis.determinants()):
            amp = wf.coeffs[g]
            if amp == 0.0:
                continue
            res = apply_ops(det, ops, n_spatial)
            if res is None:
                continue
            phase, new_det = res
            if (new_det.n_up, new_det.n_down) != (basis.n_up, basis.n_down):
                continue
            acc += phase * amp * wf.coeffs[basis.index_of(new_det)]
        total += weight * acc
    return total


def rdm_naive(state, order: int):
    """One- or two-body density matrix by explicit operator application."""
    members = _state_members(state)
    basis = members[0][1].basis
    if basis.size > NAIVE_LIMIT:
        raise CapacityError(f"sector dimension {basis.size} exceeds the "
                            f"naive-path limit {NAIVE_LIMIT}")
    n = basis.n_spatial
    if order == 1:
        up = np.zeros((n, n))
        down = np.zeros((n, n))
        for i in range(n):
            for j in range(n):
                up[i, j] = _expectation(
                    members, ((CREATE, j, UP), (ANNIHILATE, i, UP)), n)
                down[i, j] = _expectation(
                    members, ((CREATE, j, DOWN), (ANNIHILATE, i, DOWN)), n)
        return Rdm1(up, down)
    if order == 2:
        labels = pair_labels(n)
        upup = np.zeros((len(labels), len(labels)))
        downdown = np.zeros_like(upup)
        for a, (i, j) in enumerate(labels):
            for b, (k, l) in enumerate(labels):
                for block, spin in ((upup, UP), (downdown, DOWN)):
                    block[b, a] = _expectation(
                        members,
                        ((CREATE, k, spin), (CREATE, l, spin),
                         (ANNIHILATE, j, spin), (ANNIHILATE, i, spin)), n)
        updown = np.zeros((n * n, n * n))
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        updown[k * n + l, i * n + j] = _expectation(
                            members,
                            ((CREATE, k, UP), (CREATE, l, DOWN),
                             (ANNIHILATE, j, DOWN), (ANNIHILATE, i, UP)), n)
        return Rdm2(n, upup, downdown, updown)
    raise ValueError(f"order must be 1 or 2, got {order}")


def s_squared(wf: WaveFunction) -> float:
    """<S^2> via S^2 = S_z^2 + S_z + S_- S_+, applied with fock operators."""
    basis = wf.basis
    n = basis.n_spatial
    ms = (basis.n_up - basis.n_down) / 2.0
    raised = {}
    for g, det in enumerate(basis.determinants()):
        amp = wf.coeffs[g]
        if amp == 0.0:
            continue
        for p in range(n):
            res = apply_ops(det, ((CREATE, p, UP), (ANNIHILATE, p, DOWN)), n)
            if res is None:
                continue
            phase, new_det = res
            raised[new_det] = raised.get(new_det, 0.0) + phase * amp
    norm_sq = sum(v * v for v in raised.values())
    return ms * ms + ms + norm_sq
