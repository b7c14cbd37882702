"""FCIDUMP serialization of MO integrals (chemists' notation, 1-based
indices, 8-fold canonical loop) matching the parser contract of the
consumer toolkit."""

from __future__ import annotations

import numpy as np

WRITE_THRESHOLD = 1e-16


def fcidump_text(h_mo: np.ndarray, eri_mo: np.ndarray, e_core: float,
                 n_electrons: int, ms2: int = 0) -> str:
    n = h_mo.shape[0]
    lines = [f" &FCI NORB={n:3d},NELEC={n_electrons:3d},MS2={ms2:d},",
             "  ORBSYM=" + "1," * n,
             "  ISYM=1,",
             " &END"]
    fmt = " {0: .16E} {1:4d} {2:4d} {3:4d} {4:4d}"
    for p in range(n):
        for q in range(p + 1):
            for r in range(p + 1):
                smax = q if r == p else r
                for s in range(smax + 1):
                    value = eri_mo[p, q, r, s]
                    if abs(value) > WRITE_THRESHOLD:
                        lines.append(fmt.format(value, p + 1, q + 1,
                                                r + 1, s + 1))
    for p in range(n):
        for q in range(p + 1):
            if abs(h_mo[p, q]) > WRITE_THRESHOLD:
                lines.append(fmt.format(h_mo[p, q], p + 1, q + 1, 0, 0))
    lines.append(fmt.format(e_core, 0, 0, 0, 0))
    return "\n".join(lines) + "\n"
