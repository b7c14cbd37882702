"""Minimal STO-3G basis data and contracted Gaussian shells.

Exponents and contraction coefficients are the standard published STO-3G
values (Basis Set Exchange); coefficients refer to normalized primitives,
and each contracted function is renormalized to unit self-overlap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

ANGSTROM_TO_BOHR = 1.8897259886

# shell -> (exponents, coefficients); sp shells share exponents
STO3G = {
    "H": [
        ("s", (3.425250914, 0.6239137298, 0.1688554040),
         (0.1543289673, 0.5353281423, 0.4446345422)),
    ],
    "O": [
        ("s", (130.7093200, 23.80886050, 6.443608313),
         (0.1543289673, 0.5353281423, 0.4446345422)),
        ("s", (5.033151319, 1.169596125, 0.3803889600),
         (-0.09996722919, 0.3995128261, 0.7001154689)),
        ("p", (5.033151319, 1.169596125, 0.3803889600),
         (0.1559162750, 0.6076837186, 0.3919573931)),
    ],
}

CHARGES = {"H": 1, "O": 8}


@dataclass(frozen=True)
class BasisFunction:
    """Contracted Cartesian Gaussian x^l y^m z^n exp(-a r^2) at ``center``."""

    center: tuple
    powers: tuple                  # (l, m, n)
    exponents: tuple
    coefficients: tuple            # includes primitive and contraction norms

    @property
    def total_angular_momentum(self) -> int:
        return sum(self.powers)


def _double_factorial(n: int) -> int:
    return 1 if n <= 0 else n * _double_factorial(n - 2)


def _primitive_norm(alpha: float, powers) -> float:
    l, m, n = powers
    num = (2.0 * alpha / math.pi) ** 0.75 * (4.0 * alpha) ** ((l + m + n) / 2.0)
    den = math.sqrt(_double_factorial(2 * l - 1) * _double_factorial(2 * m - 1)
                    * _double_factorial(2 * n - 1))
    return num / den


def _self_overlap(exponents, coefficients, powers) -> float:
    # overlap of a contracted primitive pair at zero separation
    l, m, n = powers
    total = 0.0
    for a, ca in zip(exponents, coefficients):
        for b, cb in zip(exponents, coefficients):
            p = a + b
            pref = (math.pi / p) ** 1.5
            sx = _double_factorial(2 * l - 1) / (2 * p) ** l
            sy = _double_factorial(2 * m - 1) / (2 * p) ** m
            sz = _double_factorial(2 * n - 1) / (2 * p) ** n
            total += ca * cb * pref * sx * sy * sz
    return total


def make_basis_function(center, powers, exponents, raw_coefficients):
    coeffs = [c * _primitive_norm(a, powers)
              for a, c in zip(exponents, raw_coefficients)]
    norm = _self_overlap(exponents, coeffs, powers) ** -0.5
    coeffs = tuple(norm * c for c in coeffs)
    return BasisFunction(tuple(center), tuple(powers), tuple(exponents),
                         coeffs)


def build_basis(atoms):
    """Basis functions for a list of (symbol, xyz-in-bohr) atoms.

    Order within an atom: shells as tabulated, p shells expanded x, y, z.
    """
    functions = []
    for symbol, center in atoms:
        for kind, exponents, coefficients in STO3G[symbol]:
            if kind == "s":
                functions.append(make_basis_function(center, (0, 0, 0),
                                                     exponents, coefficients))
            elif kind == "p":
                for powers in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
                    functions.append(make_basis_function(center, powers,
                                                         exponents,
                                                         coefficients))
            else:
                raise ValueError(f"unsupported shell kind {kind!r}")
    return functions


def nuclear_repulsion(atoms) -> float:
    energy = 0.0
    for i, (sym_a, ra) in enumerate(atoms):
        for sym_b, rb in atoms[i + 1:]:
            distance = float(np.linalg.norm(np.subtract(ra, rb)))
            energy += CHARGES[sym_a] * CHARGES[sym_b] / distance
    return energy


def water_geometry(r_angstrom: float, angle_degrees: float = 104.5):
    """Water with both O-H bonds at ``r_angstrom`` and the H-O-H angle fixed.

    The molecule lies in the x-y plane with the H-H axis along x, so the
    out-of-plane oxygen p orbital is p_z.  Coordinates in bohr.
    """
    r = r_angstrom * ANGSTROM_TO_BOHR
    half = math.radians(angle_degrees) / 2.0
    return [
        ("O", (0.0, 0.0, 0.0)),
        ("H", (r * math.sin(half), r * math.cos(half), 0.0)),
        ("H", (-r * math.sin(half), r * math.cos(half), 0.0)),
    ]
