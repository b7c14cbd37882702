"""One- and two-electron integrals over contracted Cartesian Gaussians via
the McMurchie-Davidson scheme (Hermite expansion plus Hermite Coulomb
recursion).  Sufficient for s and p shells; angular momenta are not capped
beyond recursion depth."""

from __future__ import annotations

import math

import numpy as np
from scipy.special import hyp1f1


def boys(n: int, x: float) -> float:
    return hyp1f1(n + 0.5, n + 1.5, -x) / (2.0 * n + 1.0)


def hermite_expansion(i, j, t, q_x, a, b):
    """Coefficient E_t^{ij} of the Hermite expansion of a Gaussian pair.

    ``q_x`` is the A - B separation along this axis; a, b the exponents.
    """
    p = a + b
    mu = a * b / p
    if t < 0 or t > i + j:
        return 0.0
    if i == j == t == 0:
        return math.exp(-mu * q_x * q_x)
    if j == 0:
        return (hermite_expansion(i - 1, j, t - 1, q_x, a, b) / (2 * p)
                - (mu * q_x / a) * hermite_expansion(i - 1, j, t, q_x, a, b)
                + (t + 1) * hermite_expansion(i - 1, j, t + 1, q_x, a, b))
    return (hermite_expansion(i, j - 1, t - 1, q_x, a, b) / (2 * p)
            + (mu * q_x / b) * hermite_expansion(i, j - 1, t, q_x, a, b)
            + (t + 1) * hermite_expansion(i, j - 1, t + 1, q_x, a, b))


def _overlap_primitive(a, powers_a, center_a, b, powers_b, center_b):
    p = a + b
    value = (math.pi / p) ** 1.5
    for axis in range(3):
        value *= hermite_expansion(powers_a[axis], powers_b[axis], 0,
                                   center_a[axis] - center_b[axis], a, b)
    return value


def _kinetic_primitive(a, powers_a, center_a, b, powers_b, center_b):
    l2, m2, n2 = powers_b

    def shifted(axis, delta):
        powers = list(powers_b)
        powers[axis] += delta
        if powers[axis] < 0:
            return 0.0
        return _overlap_primitive(a, powers_a, center_a, b, tuple(powers),
                                  center_b)

    term0 = b * (2 * (l2 + m2 + n2) + 3) * _overlap_primitive(
        a, powers_a, center_a, b, powers_b, center_b)
    term1 = -2.0 * b * b * (shifted(0, 2) + shifted(1, 2) + shifted(2, 2))
    term2 = -0.5 * (l2 * (l2 - 1) * shifted(0, -2)
                    + m2 * (m2 - 1) * shifted(1, -2)
                    + n2 * (n2 - 1) * shifted(2, -2))
    return term0 + term1 + term2


def hermite_coulomb(t, u, v, n, p, pc):
    """Hermite Coulomb integral R^n_{tuv} for composite exponent p and
    Gaussian-to-charge separation ``pc``."""
    if t == u == v == 0:
        r2 = pc[0] * pc[0] + pc[1] * pc[1] + pc[2] * pc[2]
        return (-2.0 * p) ** n * boys(n, p * r2)
    if t > 0:
        value = pc[0] * hermite_coulomb(t - 1, u, v, n + 1, p, pc)
        if t > 1:
            value += (t - 1) * hermite_coulomb(t - 2, u, v, n + 1, p, pc)
        return value
    if u > 0:
        value = pc[1] * hermite_coulomb(t, u - 1, v, n + 1, p, pc)
        if u > 1:
            value += (u - 1) * hermite_coulomb(t, u - 2, v, n + 1, p, pc)
        return value
    value = pc[2] * hermite_coulomb(t, u, v - 1, n + 1, p, pc)
    if v > 1:
        value += (v - 1) * hermite_coulomb(t, u, v - 2, n + 1, p, pc)
    return value


def _nuclear_primitive(a, powers_a, center_a, b, powers_b, center_b, charge_xyz):
    p = a + b
    center_p = [(a * center_a[axis] + b * center_b[axis]) / p
                for axis in range(3)]
    pc = [center_p[axis] - charge_xyz[axis] for axis in range(3)]
    la, ma, na = powers_a
    lb, mb, nb = powers_b
    value = 0.0
    for t in range(la + lb + 1):
        ex = hermite_expansion(la, lb, t, center_a[0] - center_b[0], a, b)
        if ex == 0.0:
            continue
        for u in range(ma + mb + 1):
            ey = hermite_expansion(ma, mb, u, center_a[1] - center_b[1], a, b)
            if ey == 0.0:
                continue
            for v in range(na + nb + 1):
                ez = hermite_expansion(na, nb, v,
                                       center_a[2] - center_b[2], a, b)
                if ez == 0.0:
                    continue
                value += ex * ey * ez * hermite_coulomb(t, u, v, 0, p, pc)
    return 2.0 * math.pi / p * value


def _eri_primitive(a, pa, ca, b, pb, cb, c, pc_, cc, d, pd, cd):
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    center_p = [(a * ca[axis] + b * cb[axis]) / p for axis in range(3)]
    center_q = [(c * cc[axis] + d * cd[axis]) / q for axis in range(3)]
    pq = [center_p[axis] - center_q[axis] for axis in range(3)]

    la, ma, na = pa
    lb, mb, nb = pb
    lc, mc, nc = pc_
    ld, md, nd = pd

    bra = []
    for t in range(la + lb + 1):
        ex = hermite_expansion(la, lb, t, ca[0] - cb[0], a, b)
        for u in range(ma + mb + 1):
            ey = hermite_expansion(ma, mb, u, ca[1] - cb[1], a, b)
            for v in range(na + nb + 1):
                ez = hermite_expansion(na, nb, v, ca[2] - cb[2], a, b)
                coef = ex * ey * ez
                if coef != 0.0:
                    bra.append((t, u, v, coef))
    ket = []
    for t in range(lc + ld + 1):
        ex = hermite_expansion(lc, ld, t, cc[0] - cd[0], c, d)
        for u in range(mc + md + 1):
            ey = hermite_expansion(mc, md, u, cc[1] - cd[1], c, d)
            for v in range(nc + nd + 1):
                ez = hermite_expansion(nc, nd, v, cc[2] - cd[2], c, d)
                coef = ex * ey * ez
                if coef != 0.0:
                    ket.append((t, u, v, coef))

    value = 0.0
    for t, u, v, coef_b in bra:
        for tt, uu, vv, coef_k in ket:
            sign = -1.0 if (tt + uu + vv) % 2 else 1.0
            value += coef_b * coef_k * sign * hermite_coulomb(
                t + tt, u + uu, v + vv, 0, alpha, pq)
    return value * 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))


def _contract2(func, bf1, bf2, *extra):
    total = 0.0
    for a, ca in zip(bf1.exponents, bf1.coefficients):
        for b, cb in zip(bf2.exponents, bf2.coefficients):
            total += ca * cb * func(a, bf1.powers, bf1.center,
                                    b, bf2.powers, bf2.center, *extra)
    return total


def overlap_matrix(basis) -> np.ndarray:
    n = len(basis)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            out[i, j] = out[j, i] = _contract2(_overlap_primitive,
                                               basis[i], basis[j])
    return out


def kinetic_matrix(basis) -> np.ndarray:
    n = len(basis)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            out[i, j] = out[j, i] = _contract2(_kinetic_primitive,
                                               basis[i], basis[j])
    return out


def nuclear_matrix(basis, atoms) -> np.ndarray:
    from .basis import CHARGES
    n = len(basis)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            value = 0.0
            for symbol, xyz in atoms:
                value -= CHARGES[symbol] * _contract2(
                    _nuclear_primitive, basis[i], basis[j], xyz)
            out[i, j] = out[j, i] = value
    return out


def eri_tensor(basis) -> np.ndarray:
    """Chemists'-notation (ij|kl) tensor with 8-fold symmetry filled in."""
    n = len(basis)
    out = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(i + 1):
            ij = i * (i + 1) // 2 + j
            for k in range(i + 1):
                for l in range(k + 1):
                    kl = k * (k + 1) // 2 + l
                    if ij < kl:
                        continue
                    value = 0.0
                    b1, b2, b3, b4 = basis[i], basis[j], basis[k], basis[l]
                    for a, ca in zip(b1.exponents, b1.coefficients):
                        for b, cb in zip(b2.exponents, b2.coefficients):
                            for c, cc in zip(b3.exponents, b3.coefficients):
                                for d, cd in zip(b4.exponents,
                                                 b4.coefficients):
                                    value += ca * cb * cc * cd * \
                                        _eri_primitive(
                                            a, b1.powers, b1.center,
                                            b, b2.powers, b2.center,
                                            c, b3.powers, b3.center,
                                            d, b4.powers, b4.center)
                    for (w, x, y, z) in ((i, j, k, l), (j, i, k, l),
                                         (i, j, l, k), (j, i, l, k),
                                         (k, l, i, j), (l, k, i, j),
                                         (k, l, j, i), (l, k, j, i)):
                        out[w, x, y, z] = value
    return out
