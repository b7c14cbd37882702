"""Scan the committed fixture grid for both the ground state and the
low-temperature ensemble, printing the data behind the dissociation-curve
figures: energies, entanglement measures, thermal entropies.

The ensemble at beta = 1000/Eh coincides with the ground state up to
R ~ 2.2 A, then spreads over the 12 near-degenerate levels; the total
up-down mutual information peaks at that crossover while S(p) climbs to
log2(12).
"""

import math
from pathlib import Path

from fermient import (ground_state, parse_fcidump, report, solve_table,
                      thermal_ensemble)

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures" / "water_sto3g"
GRID = [round(0.4 + 0.2 * k, 1) for k in range(19)]
BETA = 1000.0

print(f"{'R':>4} {'E0':>11} {'gsN_ud':>8} {'gsN2uu':>8} {'thI_ud':>8} "
      f"{'S(p)':>7} {'S(q)':>7} {'members':>7}")
rows = []
for r in GRID:
    path = FIXTURES / f"water_sto3g_R{r}.fcidump"
    table = parse_fcidump(path.read_text())
    basis, vals, vecs = solve_table(table)
    gs_rep = report(ground_state(basis, vals, vecs))
    ens = thermal_ensemble(basis, vals, vecs, BETA)
    th_rep = report(ens, beta=BETA)
    rows.append((r, vals[0], gs_rep, th_rep, len(ens.members)))
    print(f"{r:4.1f} {vals[0]:11.5f} {gs_rep.n_updown:8.4f} "
          f"{gs_rep.n2_upup:8.4f} {th_rep.i_updown:8.4f} "
          f"{th_rep.s_p:7.4f} {th_rep.s_q:7.4f} {len(ens.members):7d}")

r_eq = min(rows, key=lambda row: row[1])[0]
r_n2 = max(rows, key=lambda row: row[2].n2_upup)[0]
r_mi = max(rows, key=lambda row: row[3].i_updown)[0]
print()
print(f"energy minimum near R = {r_eq} A (equilibrium)")
print(f"up-up two-body negativity peaks near R = {r_n2} A "
      "(dynamic-correlation region)")
print(f"thermal I_updown peaks near R = {r_mi} A "
      "(ground state starts sharing weight with the band)")
print(f"S(p) at R = 4: {rows[-1][3].s_p:.4f} -> log2 12 = "
      f"{math.log2(12):.4f}")
print()
print("The same table is exported by the command line:")
print("  fermient scan fixtures/water_sto3g --state gs --state thermal "
      "--n-roots 13 --out scan.csv")
