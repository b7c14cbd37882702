"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s`.

  analytic-limit-suite   exact dissociation-limit states, tolerance 1e-9
  fixture-suite          committed water FCIDUMP grid (fixtures/water_sto3g)
  property-suite         randomized invariants with fixed seeds
"""

import math
import time
from pathlib import Path

import numpy as np
import pytest

from conftest import basis_sd, random_orthogonal, random_state, rotated_sd
from fermient import (CREATE, DOWN, Determinant, Ensemble, UP, WaveFunction,
                      antisym_partial_transpose, apply_ops,
                      build_hamiltonian, entropy, enumerate_sector,
                      full_density_and_pt, ground_state, model_table,
                      mutual_information_2body, mutual_information_total,
                      negativity_2body_fermionic, negativity_2body_updown,
                      negativity_pure, negativity_total, one_body,
                      parse_fcidump, report, schmidt, solve_table,
                      thermal_ensemble, two_body, two_body_spinorb,
                      updown_densities)
from fermient.limits import (AsymptoticSpec, asymptotic_gs, table_i_reference,
                             uniform_band_mixture)
from fermient.oracle import apply_hamiltonian_naive, rdm_naive, s_squared

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures" / "water_sto3g"
GRID = [round(0.4 + 0.2 * k, 1) for k in range(19)]
BETA = 1000.0


class Criterion:
    """Collects named sub-checks and prints one summary line."""

    def __init__(self, name, budget_seconds):
        self.name = name
        self.budget = budget_seconds
        self.failures = []
        self.count = 0
        self.start = time.perf_counter()

    def check(self, label, ok):
        self.count += 1
        if not ok:
            self.failures.append(label)

    def close(self, difference=1e-9):
        elapsed = time.perf_counter() - self.start
        self.check(f"runtime {elapsed:.1f}s within {self.budget}s",
                   elapsed < self.budget)
        status = "PASS" if not self.failures else "FAIL"
        print(f"\nACCEPTANCE[{self.name}] {status} "
              f"({self.count} checks, {elapsed:.1f}s)")
        for label in self.failures:
            print(f"  failed: {label}")
        assert not self.failures, f"{self.name}: {self.failures}"


def spectrum_close(matrix, row, size, tol):
    expected = AsymptoticSpec.expand(row, size)
    actual = np.sort(np.linalg.eigvalsh(matrix))
    return float(np.max(np.abs(actual - expected))) <= tol


# --------------------------------------------------------------------------
# criterion 1: analytic dissociation-limit suite (tolerance 1e-9, < 10 s)
# --------------------------------------------------------------------------

def test_acceptance_analytic_limit_suite():
    crit = Criterion("analytic-limit-suite", budget_seconds=10.0)
    tol = 1e-9
    ref = table_i_reference()
    basis = enumerate_sector(7, 5, 5)
    gs = asymptotic_gs(basis)
    thermal = uniform_band_mixture(basis)

    density = updown_densities(gs)
    r1, r2 = one_body(gs), two_body(gs)
    crit.check("gs rho_up spectrum",
               spectrum_close(density.rho_up, ref.gs_spectra["rho_up"], 21, tol))
    crit.check("gs rdm1_up spectrum",
               spectrum_close(r1.up, ref.gs_spectra["rdm1_up"], 7, tol))
    crit.check("gs rdm2_upup spectrum",
               spectrum_close(r2.upup, ref.gs_spectra["rdm2_upup"], 21, tol))
    crit.check("gs rdm2_updown spectrum",
               spectrum_close(r2.updown, ref.gs_spectra["rdm2_updown"], 49, tol))

    _, pt = full_density_and_pt(gs)
    crit.check("gs N_updown = 13/6",
               abs(negativity_total(pt) - 13 / 6) <= tol)
    crit.check("gs N2_updown = 5/6",
               abs(negativity_2body_updown(r2.updown) - 5 / 6) <= tol)
    crit.check("gs N2_upup = 0",
               abs(negativity_2body_fermionic(r2.upup_unrestricted(), 5))
               <= tol)
    target = 4 / 3 + 2 * math.log2(3)
    crit.check("gs I_updown = 4/3 + 2 log2 3",
               abs(mutual_information_total(gs) - target) <= tol)
    crit.check("gs I2_updown = I_updown",
               abs(mutual_information_2body(r1, r2) - target) <= tol)

    density = updown_densities(thermal)
    r1, r2 = one_body(thermal), two_body(thermal)
    crit.check("thermal rho_up spectrum",
               spectrum_close(density.rho_up, ref.thermal_spectra["rho_up"],
                              21, tol))
    crit.check("thermal rdm1_up spectrum",
               spectrum_close(r1.up, ref.thermal_spectra["rdm1_up"], 7, tol))
    crit.check("thermal rdm2_upup spectrum",
               spectrum_close(r2.upup, ref.thermal_spectra["rdm2_upup"], 21,
                              tol))
    crit.check("thermal rdm2_updown spectrum",
               spectrum_close(r2.updown, ref.thermal_spectra["rdm2_updown"],
                              49, tol))
    _, pt = full_density_and_pt(thermal)
    crit.check("thermal N_updown = 1/6",
               abs(negativity_total(pt) - 1 / 6) <= tol)
    vals = np.linalg.eigvalsh(pt)
    negatives = vals[vals < -1e-9]
    crit.check("thermal PT has exactly two -1/12 eigenvalues",
               negatives.size == 2
               and bool(np.allclose(negatives, -1 / 12, atol=tol)))
    crit.check("thermal N2_updown = 0",
               abs(negativity_2body_updown(r2.updown)) <= tol)
    crit.check("thermal I_updown = 2 + log2(3)/2",
               abs(mutual_information_total(thermal)
                   - (2 + 0.5 * math.log2(3))) <= tol)
    crit.check("thermal I2_updown = (-37 + 10 log2 15)/2",
               abs(mutual_information_2body(r1, r2)
                   - 0.5 * (-37 + 10 * math.log2(15))) <= tol)
    crit.close()


# --------------------------------------------------------------------------
# criterion 2: committed fixture suite (19-point grid, < 2 min)
# --------------------------------------------------------------------------

@pytest.fixture(scope="module")
def water_scan():
    if not FIXTURE_DIR.is_dir():
        pytest.fail(f"missing committed fixtures at {FIXTURE_DIR}")
    t_start = time.perf_counter()
    data = {}
    for r in GRID:
        path = FIXTURE_DIR / f"water_sto3g_R{r}.fcidump"
        table = parse_fcidump(path.read_text())
        basis, vals, vecs = solve_table(table)
        gs = ground_state(basis, vals, vecs)
        ens = thermal_ensemble(basis, vals, vecs, BETA)
        data[r] = {
            "energies": vals[:20],
            "gs_state": gs,
            "gs": report(gs, geometry_tag=str(r)),
            "thermal": report(ens, geometry_tag=str(r), beta=BETA),
            "p0": ens.members[0][0],
        }
    data["elapsed"] = time.perf_counter() - t_start
    return data


def test_acceptance_fixture_suite(water_scan):
    crit = Criterion("fixture-suite", budget_seconds=120.0)
    crit.start = time.perf_counter() - water_scan["elapsed"]
    tol = 2e-2

    e0 = {r: water_scan[r]["energies"][0] for r in GRID}
    r_min = min(GRID, key=lambda r: e0[r])
    crit.check(f"E0 minimum at R={r_min} within one step of 1.025",
               abs(r_min - 1.025) <= 0.2)
    crit.check("E0(R=4) = -74.737 within 5e-3",
               abs(e0[4.0] - (-74.737)) <= 5e-3)

    lam = {r: water_scan[r]["gs"].lambda_max_updown for r in GRID}
    r_peak = max(GRID, key=lambda r: lam[r])
    crit.check(f"lambda_max peak location R={r_peak} near 1.5",
               abs(r_peak - 1.5) <= 0.2 + 1e-12)
    crit.check(f"lambda_max peak value {lam[r_peak]:.4f} = 1.021 +- 0.005",
               abs(lam[r_peak] - 1.021) <= 0.005)

    vals4 = water_scan[4.0]["energies"]
    crit.check("twelve lowest levels at R=4 span < 1e-4",
               float(vals4[11] - vals4[0]) < 1e-4)
    crit.check("gap to level 13 = 0.095 +- 0.01",
               abs(float(vals4[12] - vals4[11]) - 0.095) <= 0.01)

    s_p = water_scan[4.0]["thermal"].s_p
    crit.check("thermal S(p) at R=4 = log2(12) +- 0.01",
               abs(s_p - math.log2(12)) <= 0.01)

    ref = table_i_reference()
    gs4 = water_scan[4.0]["gs"].spectra
    th4 = water_scan[4.0]["thermal"].spectra
    for label, spectra, key, size in (
            ("gs rho_up", gs4, "rho_up", 21),
            ("gs rdm1_up", gs4, "rdm1_up", 7),
            ("gs rdm2_upup", gs4, "rdm2_upup", 21),
            ("gs rdm2_updown", gs4, "rdm2_updown", 49)):
        expected = AsymptoticSpec.expand(ref.gs_spectra[key], size)
        worst = float(np.max(np.abs(np.sort(spectra[key]) - expected)))
        crit.check(f"R=4 {label} matches the limit row within 2e-2",
                   worst <= tol)
    for label, key, size in (("thermal rho_up", "rho_up", 21),
                             ("thermal rdm1_up", "rdm1_up", 7),
                             ("thermal rdm2_upup", "rdm2_upup", 21),
                             ("thermal rdm2_updown", "rdm2_updown", 49)):
        expected = AsymptoticSpec.expand(ref.thermal_spectra[key], size)
        worst = float(np.max(np.abs(np.sort(th4[key]) - expected)))
        crit.check(f"R=4 {label} matches the limit row within 2e-2",
                   worst <= tol)

    n2uu = {r: water_scan[r]["gs"].n2_upup for r in GRID}
    r_peak = max(GRID, key=lambda r: n2uu[r])
    crit.check(f"N2_upup interior maximum at R={r_peak} near 1.25",
               GRID[0] < r_peak < GRID[-1] and abs(r_peak - 1.25) <= 0.2)

    i_th = {r: water_scan[r]["thermal"].i_updown for r in GRID}
    r_peak = max(GRID, key=lambda r: i_th[r])
    crit.check(f"thermal I_updown interior maximum at R={r_peak} near 2.2",
               GRID[0] < r_peak < GRID[-1] and abs(r_peak - 2.2) <= 0.2)
    crit.close()


def test_fixture_eigensolver_residual(water_scan):
    # 441-dim solver contract on real data: max |Hv - Ev| < 1e-9
    path = FIXTURE_DIR / "water_sto3g_R1.0.fcidump"
    table = parse_fcidump(path.read_text())
    basis, vals, vecs = solve_table(table)
    matrix = build_hamiltonian(basis, table)
    residual = np.max(np.abs(matrix @ vecs - vecs * vals))
    assert residual < 1e-9


def test_fixture_gs_is_singlet(water_scan):
    for r in (1.0, 4.0):
        assert s_squared(water_scan[r]["gs_state"]) == pytest.approx(
            0.0, abs=1e-8)


def test_fixture_thermal_is_gs_at_small_r(water_scan):
    # the ground state dominates the ensemble through R = 2.2 (99.76%
    # there, above 99.9% for every shorter distance)
    for r in GRID:
        if r <= 2.0:
            assert water_scan[r]["p0"] > 0.999
    assert water_scan[2.2]["p0"] > 0.995


def test_fixture_trace_sum_rules_every_r(water_scan):
    for r in GRID:
        for state in ("gs", "thermal"):
            spectra = water_scan[r][state].spectra
            assert np.sum(spectra["rho_up"]) == pytest.approx(1.0, abs=1e-9)
            assert np.sum(spectra["rdm1_up"]) == pytest.approx(5.0, abs=1e-9)
            assert np.sum(spectra["rdm2_upup"]) == pytest.approx(10.0,
                                                                 abs=1e-9)
            assert np.sum(spectra["rdm2_updown"]) == pytest.approx(25.0,
                                                                   abs=1e-9)


def test_fixture_equilibrium_state_is_correlated(water_scan):
    # near equilibrium the GS deviates from a single determinant: E1 > 0
    assert water_scan[1.0]["gs"].e1 > 1e-3


def test_fixture_normalized_entropy_ordering(water_scan):
    # at R=4 the one-body ratio is the highest of the four
    ratios = water_scan[4.0]["gs"].ratios
    assert ratios["rdm1_up"] == max(ratios.values())
    assert ratios["rdm1_up"] > ratios["rdm2_upup"] > ratios["rdm2_updown"]


def test_fixture_thermal_sq_complexity_curve(water_scan):
    # S(q) vanishes at both ends of the grid and rises in between (at R=4
    # the residual 6e-6 band spread leaves S(q) ~ 0.05 at beta = 1000)
    s_q = [water_scan[r]["thermal"].s_q for r in GRID]
    assert s_q[0] < 0.01
    assert s_q[-1] < 0.1
    assert max(s_q) > 0.5


# --------------------------------------------------------------------------
# criterion 3: randomized property suite (fixed seeds, < 1 min)
# --------------------------------------------------------------------------

def test_acceptance_property_suite():
    crit = Criterion("property-suite", budget_seconds=60.0)
    rng = np.random.default_rng(1234)

    # oracle equivalence on sectors up to (5,3,3)
    for sector in [(3, 1, 1), (4, 2, 2), (5, 3, 3)]:
        basis = enumerate_sector(*sector)
        t = model_table("random_symmetric", sector[0], seed=sum(sector))
        wf = random_state(basis, rng)
        matrix = build_hamiltonian(basis, t)
        ok = np.allclose(matrix @ wf.coeffs, apply_hamiltonian_naive(wf, t),
                         atol=1e-11, rtol=0.0)
        crit.check(f"H action matches the operator oracle on {sector}", ok)
        r1, r1_ref = one_body(wf), rdm_naive(wf, 1)
        r2, r2_ref = two_body(wf), rdm_naive(wf, 2)
        crit.check(f"one-body RDM matches the oracle on {sector}",
                   np.allclose(r1.up, r1_ref.up, atol=1e-11)
                   and np.allclose(r1.down, r1_ref.down, atol=1e-11))
        crit.check(f"two-body RDM matches the oracle on {sector}",
                   np.allclose(r2.upup, r2_ref.upup, atol=1e-11)
                   and np.allclose(r2.downdown, r2_ref.downdown, atol=1e-11)
                   and np.allclose(r2.updown, r2_ref.updown, atol=1e-11))

    # Wick identity on random rotated real SDs
    basis = enumerate_sector(4, 2, 2)
    ok = True
    for _ in range(5):
        wf = rotated_sd(basis, random_orthogonal(4, rng),
                        random_orthogonal(4, rng))
        full = two_body_spinorb(wf)
        ok &= bool(np.allclose(antisym_partial_transpose(full), full,
                               atol=1e-10))
    crit.check("tp identity on real SDs (Wick)", ok)

    # positive semidefiniteness of tp on SD mixtures
    sds = [rotated_sd(basis, random_orthogonal(4, rng),
                      random_orthogonal(4, rng)) for _ in range(20)]
    ens = Ensemble(members=tuple((1 / 20, s) for s in sds), beta=1.0,
                   raw_weights=(1.0,) * 20, entropy_p=0.0, entropy_q=0.0)
    tp = antisym_partial_transpose(two_body_spinorb(ens))
    crit.check("tp PSD on a 20-SD convex mixture",
               float(np.linalg.eigvalsh(tp).min()) >= -1e-9)

    # Property 1: I2 >= 0, = 0 exactly on product (SD) states
    wf = rotated_sd(basis, random_orthogonal(4, rng),
                    random_orthogonal(4, rng))
    crit.check("I2 = 0 on product states (Property 1)",
               abs(mutual_information_2body(one_body(wf), two_body(wf)))
               <= 1e-9)
    sampled = [mutual_information_2body(one_body(s), two_body(s))
               for s in (random_state(basis, rng) for _ in range(5))]
    crit.check("I2 >= 0 on random states (Property 1)",
               all(v >= -1e-9 for v in sampled))

    # Property 2: core padding leaves I2 unchanged
    from test_measures import pad_with_core
    small = enumerate_sector(3, 1, 1)
    big = enumerate_sector(4, 2, 2)
    ok = True
    for _ in range(3):
        wf = random_state(small, rng)
        padded = pad_with_core(wf, big, core_orbital=3)
        a = mutual_information_2body(one_body(wf), two_body(wf))
        b = mutual_information_2body(one_body(padded), two_body(padded))
        ok &= abs(a - b) <= 1e-9
    crit.check("I2 core independence (Property 2)", ok)

    # Property 3: additivity over orthogonal subspaces (toy size)
    from test_measures import two_term_state
    basis_i = enumerate_sector(2, 1, 1)
    basis_full = enumerate_sector(4, 2, 2)
    part_i, part_ii = two_term_state(basis_i, 0.8), two_term_state(basis_i, 0.35)
    coeffs = np.zeros(basis_full.size)
    for g1, d1 in enumerate(basis_i.determinants()):
        for g2, d2 in enumerate(basis_i.determinants()):
            amp = part_i.coeffs[g1] * part_ii.coeffs[g2]
            ops = ([(CREATE, p, UP) for p in d1.occupied("up")]
                   + [(CREATE, p + 2, UP) for p in d2.occupied("up")]
                   + [(CREATE, p, DOWN) for p in d1.occupied("down")]
                   + [(CREATE, p + 2, DOWN) for p in d2.occupied("down")])
            phase, det = apply_ops(Determinant(0, 0), ops, 4)
            coeffs[basis_full.index_of(det)] += phase * amp
    product = WaveFunction(basis_full, coeffs)
    total = mutual_information_2body(one_body(product), two_body(product))
    parts = (mutual_information_2body(one_body(part_i), two_body(part_i))
             + mutual_information_2body(one_body(part_ii),
                                        two_body(part_ii)))
    crit.check("I2 additivity over orthogonal subspaces (Property 3)",
               abs(total - parts) <= 1e-9)

    # Property 4: classically correlated family
    p = 0.7
    a = basis_sd(basis_full, [0, 1], [0, 1])
    b = basis_sd(basis_full, [2, 3], [2, 3])
    wf = WaveFunction(basis_full, math.sqrt(p) * a.coeffs
                      + math.sqrt(1 - p) * b.coeffs)
    shannon = -(p * math.log2(p) + (1 - p) * math.log2(1 - p))
    crit.check("I2 = Nu Nd S(p) on the orthogonal-support family "
               "(Property 4)",
               abs(mutual_information_2body(one_body(wf), two_body(wf))
                   - 4 * shannon) <= 1e-9)
    crit.check("N2_updown = 0 on the orthogonal-support family (Property 4)",
               abs(negativity_2body_updown(two_body(wf).updown)) <= 1e-9)
    crit.check("E_updown = S(p) on the orthogonal-support family "
               "(Property 4)",
               abs(entropy(schmidt(wf).values ** 2) - shannon) <= 1e-9)

    # pure-state identities: I = 2E and the two negativity routes agree
    basis3 = enumerate_sector(3, 1, 1)
    ok_mi, ok_neg = True, True
    for _ in range(50):
        wf = random_state(basis3, rng)
        e_ud = entropy(schmidt(wf).values ** 2)
        ok_mi &= abs(mutual_information_total(wf) - 2 * e_ud) <= 1e-10
        _, pt = full_density_and_pt(wf)
        ok_neg &= abs(negativity_total(pt)
                      - negativity_pure(schmidt(wf).values)) <= 1e-9
    crit.check("I_updown = 2 E_updown on 50 random pure states", ok_mi)
    crit.check("eigenvalue and Schmidt negativity routes agree "
               "on 50 random pure states", ok_neg)

    # two-particle collapse identities on (1,1)
    basis11 = enumerate_sector(4, 1, 1)
    ok = True
    for _ in range(5):
        wf = random_state(basis11, rng)
        r1, r2 = one_body(wf), two_body(wf)
        _, pt = full_density_and_pt(wf)
        e1 = entropy(np.linalg.eigvalsh(r1.up).clip(min=0)) + \
            entropy(np.linalg.eigvalsh(r1.down).clip(min=0))
        i_tot = mutual_information_total(wf)
        ok &= abs(negativity_2body_updown(r2.updown)
                  - negativity_total(pt)) <= 1e-9
        ok &= abs(mutual_information_2body(r1, r2) - i_tot) <= 1e-9
        ok &= abs(e1 - i_tot) <= 1e-9
    crit.check("two-particle collapse identities on (1,1)", ok)

    # E1 = 0 iff SD; necessity of one-body entanglement
    ok_sd, ok_need = True, True
    for _ in range(5):
        wf = rotated_sd(basis, random_orthogonal(4, rng),
                        random_orthogonal(4, rng))
        r1 = one_body(wf)
        e1 = entropy(np.linalg.eigvalsh(r1.up).clip(min=0)) + \
            entropy(np.linalg.eigvalsh(r1.down).clip(min=0))
        ok_sd &= e1 <= 1e-9
    for _ in range(10):
        wf = random_state(basis, rng)
        if entropy(schmidt(wf).values ** 2) > 1e-6:
            r1 = one_body(wf)
            e1 = entropy(np.linalg.eigvalsh(r1.up).clip(min=0)) + \
                entropy(np.linalg.eigvalsh(r1.down).clip(min=0))
            ok_need &= e1 > 1e-8
    crit.check("E1 = 0 on SDs", ok_sd)
    crit.check("up-down entanglement requires one-body entanglement",
               ok_need)

    # Araki-Lieb on pure and mixed states
    ok = True
    for state in ([random_state(basis, rng) for _ in range(3)]
                  + [ens]):
        density = updown_densities(state)
        s_up = entropy(np.linalg.eigvalsh(density.rho_up).clip(min=0))
        s_dn = entropy(np.linalg.eigvalsh(density.rho_down).clip(min=0))
        ok &= mutual_information_total(state) <= 2 * min(s_up, s_dn) + 1e-9
    crit.check("Araki-Lieb bound", ok)

    # fock anticommutation, exhaustive at n <= 4
    import itertools
    ok = True
    for n in (2, 3, 4):
        nb = enumerate_sector(n, 1, 1)
        modes = [(p, s) for p in range(n) for s in (UP, DOWN)]
        for det in nb.determinants():
            for (p1, s1), (p2, s2) in itertools.combinations(modes, 2):
                r12 = apply_ops(det, [(CREATE, p1, s1), (CREATE, p2, s2)], n)
                r21 = apply_ops(det, [(CREATE, p2, s2), (CREATE, p1, s1)], n)
                if r12 is None:
                    ok &= r21 is None
                else:
                    ok &= r21 is not None and r12[0] == -r21[0] \
                        and r12[1] == r21[1]
    crit.check("creation anticommutation exhaustive n <= 4", ok)

    # t_p spectra invariant under orthogonal one-body rotations
    wf = random_state(basis3, rng)
    full = two_body_spinorb(wf)
    u = random_orthogonal(3, rng)
    u_so = np.zeros((6, 6))
    u_so[:3, :3] = u_so[3:, 3:] = u
    u2 = np.kron(u_so, u_so)
    rotated = u2 @ full @ u2.T
    ok = np.allclose(np.linalg.eigvalsh(antisym_partial_transpose(rotated)),
                     np.linalg.eigvalsh(antisym_partial_transpose(full)),
                     atol=1e-9)
    crit.check("tp spectrum invariant under orbital rotations", ok)
    crit.close()
