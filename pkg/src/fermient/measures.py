"""Scalar entanglement and correlation measures.

All logarithms are base 2.  Measures cover the up/down partition (Schmidt
entropy, total mutual information, total negativity) and the reduced
one-/two-body level (block entropies, two-body mutual information, two-body
up-down negativity, and the fermionic two-body negativity built on the
antisymmetrized partial transpose).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, NumericalError
from .rdm import (Rdm1, Rdm2, UpDownDensity, full_density_and_pt, one_body,
                  two_body, updown_densities)
from .solver import Ensemble, WaveFunction

RANK_CUTOFF = 1e-8
_CLAMP = 1e-9


def entropy(spectrum) -> float:
    """-sum(x log2 x) with 0 log 0 := 0; entries above 1 contribute negatively.

    Entries in [-1e-9, 0) are treated as numerical zeros; anything more
    negative raises NumericalError.
    """
    spectrum = np.asarray(spectrum, dtype=float)
    if spectrum.size and spectrum.min() < -_CLAMP:
        raise NumericalError(f"spectrum entry {spectrum.min():.3e} below "
                             f"-{_CLAMP}")
    positive = spectrum[spectrum > 0.0]
    return float(-(positive * np.log2(positive)).sum())


@dataclass(eq=False)
class SchmidtDecomposition:
    """Up/down singular-value decomposition of a pure state's coefficient
    tensor; ``left``/``right`` columns span the up/down strings."""

    values: np.ndarray
    left: np.ndarray
    right: np.ndarray
    rank: int


def schmidt(wf: WaveFunction, cutoff: float = RANK_CUTOFF) -> SchmidtDecomposition:
    """Schmidt decomposition across the up/down partition of a pure state.

    Sign gauge: each left vector has its largest-magnitude component
    positive, with the right vector compensated.
    """
    gamma = wf.tensor()
    u, s, vh = np.linalg.svd(gamma, full_matrices=False)
    keep = s > cutoff
    u, s, vh = u[:, keep], s[keep], vh[keep, :]
    for k in range(s.size):
        lead = np.argmax(np.abs(u[:, k]))
        if u[lead, k] < 0:
            u[:, k] = -u[:, k]
            vh[k, :] = -vh[k, :]
    return SchmidtDecomposition(values=s, left=u, right=vh.T, rank=int(s.size))


def _full_entropy(state) -> float:
    if isinstance(state, WaveFunction):
        return 0.0
    rho, _ = full_density_and_pt(state)
    vals = np.linalg.eigvalsh(rho)
    return entropy(np.where(vals < 0.0, 0.0, vals))


def mutual_information_total(state, updown: UpDownDensity | None = None) -> float:
    """S(rho_up) + S(rho_down) - S(rho); equals twice the up-down
    entanglement entropy on pure states."""
    if updown is None:
        updown = updown_densities(state)
    s_up = entropy(np.linalg.eigvalsh(updown.rho_up).clip(min=0.0))
    s_dn = entropy(np.linalg.eigvalsh(updown.rho_down).clip(min=0.0))
    return s_up + s_dn - _full_entropy(state)


def mutual_information_2body(r1: Rdm1, r2: Rdm2) -> float:
    """Two-body up-down mutual information from the closed form
    N_down S(rho1_up) + N_up S(rho1_down) - S(rho2_updown)."""
    n_up, n_down = r1.n_up, r1.n_down
    if n_up * n_down < 0.5:
        raise DomainError("two-body mutual information needs N_up and "
                          "N_down both nonzero")
    s_up = entropy(np.linalg.eigvalsh(r1.up).clip(min=0.0))
    s_dn = entropy(np.linalg.eigvalsh(r1.down).clip(min=0.0))
    s_ud = entropy(np.linalg.eigvalsh(r2.updown))
    return n_down * s_up + n_up * s_dn - s_ud


def negativity_total(rho_pt: np.ndarray) -> float:
    """(trace-norm - 1)/2 of a unit-trace partial transpose."""
    vals = np.linalg.eigvalsh(np.asarray(rho_pt, dtype=float))
    return float((np.abs(vals).sum() - 1.0) / 2.0)


def negativity_pure(values) -> float:
    """Pure-state shortcut sum_{v<v'} s_v s_v' from Schmidt values."""
    values = np.asarray(values, dtype=float)
    return float((values.sum() ** 2 - (values ** 2).sum()) / 2.0)


def negativity_2body_updown(r2_updown: np.ndarray) -> float:
    """Negativity of the up-down two-body block under the down-side
    partial transpose (i jbar, k lbar) -> (i lbar, k jbar)."""
    m = np.asarray(r2_updown, dtype=float)
    n = math.isqrt(m.shape[0])
    pt = m.reshape(n, n, n, n).transpose(0, 3, 2, 1).reshape(m.shape)
    vals = np.linalg.eigvalsh((pt + pt.T) / 2.0)
    return float((np.abs(vals).sum() - np.trace(m)) / 2.0)


def antisym_partial_transpose(r2_unrestricted: np.ndarray) -> np.ndarray:
    """Antisymmetrized partial transpose over unrestricted pair labels:
    out[ij,kl] = in[il,kj] - in[ik,lj]."""
    m = np.asarray(r2_unrestricted, dtype=float)
    d = math.isqrt(m.shape[0])
    four = m.reshape(d, d, d, d)
    if not np.allclose(four, -four.transpose(1, 0, 2, 3), atol=1e-10, rtol=0.0):
        raise DomainError("input two-body matrix is not antisymmetrized "
                          "in its pair labels")
    tp = four.transpose(0, 3, 2, 1) - four.transpose(0, 3, 1, 2)
    tp = tp.reshape(m.shape)
    return (tp + tp.T) / 2.0


def negativity_2body_fermionic(r2_unrestricted: np.ndarray,
                               n_particles: int) -> float:
    """Fermionic two-body negativity of an unrestricted antisymmetrized
    block: (trace-norm of tp/2 minus N(N-1)/2) / 2.  Vanishes on convex
    mixtures of real Slater determinants."""
    tp = antisym_partial_transpose(r2_unrestricted)
    vals = np.linalg.eigvalsh(tp / 2.0)
    return float((np.abs(vals).sum() - n_particles * (n_particles - 1) / 2.0)
                 / 2.0)


def max_entropies(d: int, n_up: int, n_down: int) -> dict:
    """Saturation entropies used for the normalized-entropy ratios."""
    half = d // 2
    return {
        "rho_up": math.log2(math.comb(half, 2)) if math.comb(half, 2) else 0.0,
        "rdm1_up": n_up * math.log2(d / (2 * n_up)) if n_up else 0.0,
        "rdm2_upup": (math.comb(n_up, 2)
                      * math.log2(math.comb(half, 2) / math.comb(n_up, 2))
                      if math.comb(n_up, 2) else 0.0),
        "rdm2_updown": (n_up * n_down * math.log2(half ** 2 / (n_up * n_down))
                        if n_up * n_down else 0.0),
    }


def normalized_entropies(entropies: dict, d: int, n_up: int,
                         n_down: int) -> dict:
    """Ratios S/S_max for the four tracked blocks; zero-S_max entries are
    omitted.  ``entropies`` maps the same keys as max_entropies."""
    if d % 2:
        raise DomainError("d counts spin orbitals and must be even")
    out = {}
    for key, s_max in max_entropies(d, n_up, n_down).items():
        if key in entropies and s_max > 0.0:
            out[key] = entropies[key] / s_max
    return out


@dataclass(eq=False)
class MeasureReport:
    """Every scalar measure (and supporting spectra) for one state."""

    e_updown: float
    i_updown: float
    e1: float
    s_rdm1_up: float
    s_rdm1_down: float
    e2: float
    s_rdm2_upup: float
    s_rdm2_updown: float
    s_rdm2_downdown: float
    i2_updown: float
    n_updown: float
    n2_updown: float
    n2_upup: float
    n2_downdown: float
    lambda_max_updown: float
    schmidt_values: np.ndarray | None
    ratios: dict
    spectra: dict = field(repr=False)
    s_p: float | None = None
    s_q: float | None = None
    geometry: str | None = None
    beta: float | None = None

    SCALAR_FIELDS = ("e_updown", "i_updown", "i2_updown", "n_updown",
                     "n2_updown", "n2_upup", "e1", "e2", "lambda_max_updown",
                     "s_p", "s_q")

    def to_dict(self) -> dict:
        out = {}
        for name in ("geometry", "beta", "e_updown", "i_updown", "e1",
                     "s_rdm1_up", "s_rdm1_down", "e2", "s_rdm2_upup",
                     "s_rdm2_updown", "s_rdm2_downdown", "i2_updown",
                     "n_updown", "n2_updown", "n2_upup", "n2_downdown",
                     "lambda_max_updown", "s_p", "s_q"):
            out[name] = getattr(self, name)
        out["ratios"] = dict(self.ratios)
        out["schmidt_values"] = (None if self.schmidt_values is None
                                 else [float(v) for v in self.schmidt_values])
        out["spectra"] = {k: [float(x) for x in v]
                          for k, v in self.spectra.items()}
        return out


def report(state, geometry_tag: str | None = None,
           beta: float | None = None) -> MeasureReport:
    """Compute the full measure family for a pure state or ensemble."""
    ud = updown_densities(state)
    r1 = one_body(state)
    r2 = two_body(state)
    basis = state.basis
    n_up, n_down = basis.n_up, basis.n_down

    spec_rho_up = np.linalg.eigvalsh(ud.rho_up).clip(min=0.0)
    spec_rho_dn = np.linalg.eigvalsh(ud.rho_down).clip(min=0.0)
    spec_r1_up = np.linalg.eigvalsh(r1.up)
    spec_r1_dn = np.linalg.eigvalsh(r1.down)
    spec_uu = np.linalg.eigvalsh(r2.upup)
    spec_ud = np.linalg.eigvalsh(r2.updown)
    spec_dd = np.linalg.eigvalsh(r2.downdown)

    e_updown = entropy(spec_rho_up)
    s1u, s1d = entropy(spec_r1_up), entropy(spec_r1_dn)
    s2uu, s2ud, s2dd = entropy(spec_uu), entropy(spec_ud), entropy(spec_dd)
    i_updown = e_updown + entropy(spec_rho_dn) - _full_entropy(state)
    i2 = (mutual_information_2body(r1, r2)
          if n_up > 0 and n_down > 0 else 0.0)

    _, rho_pt = full_density_and_pt(state)
    n_tot = negativity_total(rho_pt)
    n2_ud = negativity_2body_updown(r2.updown)
    n2_uu = (negativity_2body_fermionic(r2.upup_unrestricted(), n_up)
             if n_up >= 2 else 0.0)
    n2_dd = (negativity_2body_fermionic(r2.downdown_unrestricted(), n_down)
             if n_down >= 2 else 0.0)

    sd = schmidt(state) if isinstance(state, WaveFunction) else None
    ratios = normalized_entropies(
        {"rho_up": e_updown, "rdm1_up": s1u, "rdm2_upup": s2uu,
         "rdm2_updown": s2ud},
        d=2 * basis.n_spatial, n_up=n_up, n_down=n_down)

    return MeasureReport(
        e_updown=e_updown, i_updown=i_updown,
        e1=s1u + s1d, s_rdm1_up=s1u, s_rdm1_down=s1d,
        e2=s2uu + s2ud + s2dd, s_rdm2_upup=s2uu, s_rdm2_updown=s2ud,
        s_rdm2_downdown=s2dd, i2_updown=i2,
        n_updown=n_tot, n2_updown=n2_ud, n2_upup=n2_uu, n2_downdown=n2_dd,
        lambda_max_updown=float(spec_ud[-1]),
        schmidt_values=None if sd is None else sd.values,
        ratios=ratios,
        spectra={"rho_up": spec_rho_up, "rho_down": spec_rho_dn,
                 "rdm1_up": spec_r1_up, "rdm1_down": spec_r1_dn,
                 "rdm2_upup": spec_uu, "rdm2_updown": spec_ud,
                 "rdm2_downdown": spec_dd},
        s_p=state.entropy_p if isinstance(state, Ensemble) else None,
        s_q=state.entropy_q if isinstance(state, Ensemble) else None,
        geometry=geometry_tag, beta=beta)
