"""Command-line driver for dissociation-curve studies.

Subcommands:
  solve         one FCIDUMP -> JSON document (energies + measure reports)
  scan          many FCIDUMPs -> CSV table, one row per (geometry, state)
  check-limits  assert the dissociation-limit reference values, either on
                the analytic states (--analytic, exact) or on a large-R
                FCIDUMP (finite-R tolerance)

Exit codes: 0 ok, 1 assertion failure (check-limits), 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import re
import sys
from pathlib import Path

import numpy as np

from .errors import CapacityError, DomainError, NumericalError, ParseError
from .integrals import parse_fcidump
from .limits import (AsymptoticSpec, asymptotic_gs, table_i_reference,
                     uniform_band_mixture)
from .measures import report
from .rdm import full_density_and_pt, two_body
from .solver import (DENSE_LIMIT, WEIGHT_CUTOFF, ground_state, sector_of,
                     solve_table, thermal_ensemble)
from .fock import enumerate_sector

SCHEMA_VERSION = 1
DEFAULT_BETA = 1000.0
TAG_PATTERN = re.compile(r"_R([0-9]+(?:\.[0-9]+)?)\.fcidump$", re.IGNORECASE)

CSV_COLUMNS_FIXED = ["e_updown", "i_updown", "i2_updown", "n_updown",
                     "n2_updown", "n2_upup", "e1", "e2", "lambda_max_r2ud",
                     "s_p", "s_q", "ratio_rho_up", "ratio_rdm1_up",
                     "ratio_rdm2_upup", "ratio_rdm2_updown"]


def geometry_tag(path: str) -> float | None:
    """Geometry parsed from a `*_R<value>.fcidump` file name."""
    match = TAG_PATTERN.search(Path(path).name)
    return float(match.group(1)) if match else None


def _load_table(path: str):
    with open(path, "r") as handle:
        text = handle.read()
    return parse_fcidump(text), hashlib.sha256(text.encode()).hexdigest()


def _parse_states(values):
    out = []
    for value in values or ["gs"]:
        if value in ("gs", "thermal"):
            out.append(value)
        elif value.startswith("eig:"):
            out.append(int(value.split(":", 1)[1]))
        else:
            raise DomainError(f"unknown state selector {value!r} "
                              "(use gs, thermal, or eig:K)")
    return out


def _solve_document(path, states, beta, n_roots, weight_cutoff, dense_limit,
                    tag, sector):
    table, digest = _load_table(path)
    n_up, n_down = sector if sector else sector_of(table)
    basis, vals, vecs = solve_table(table, n_up, n_down,
                                    dense_limit=dense_limit)
    reports = []
    for selector in states:
        if selector == "gs":
            state = ground_state(basis, vals, vecs)
            label, energy = "gs", float(vals[0])
        elif selector == "thermal":
            state = thermal_ensemble(basis, vals, vecs, beta,
                                     weight_cutoff=weight_cutoff)
            label, energy = "thermal", None
        else:
            k = selector
            if not 0 <= k < basis.size:
                raise DomainError(f"eigenstate index {k} outside the "
                                  f"{basis.size}-dimensional sector")
            from .solver import WaveFunction
            state = WaveFunction(basis, np.array(vecs[:, k]),
                                 energy=float(vals[k]))
            label, energy = f"eig:{k}", float(vals[k])
        rep = report(state, geometry_tag=None if tag is None else str(tag),
                     beta=beta if selector == "thermal" else None)
        reports.append({"state": label, "energy": energy,
                        "measures": rep.to_dict()})
    return {
        "schema": SCHEMA_VERSION,
        "file": str(path),
        "sha256": digest,
        "geometry": tag,
        "sector": {"n_spatial": basis.n_spatial, "n_up": basis.n_up,
                   "n_down": basis.n_down, "dimension": basis.size},
        "config": {"states": [str(s) for s in states], "beta": beta,
                   "n_roots": n_roots, "weight_cutoff": weight_cutoff,
                   "dense_limit": dense_limit},
        "energies": [float(v) for v in vals[:n_roots]],
        "reports": reports,
    }


def cmd_solve(args) -> int:
    tag = args.tag if args.tag is not None else geometry_tag(args.file)
    document = _solve_document(
        args.file, _parse_states(args.state), args.beta, args.n_roots,
        args.weight_cutoff, args.dense_limit, tag,
        (args.n_up, args.n_down) if args.n_up is not None else None)
    text = json.dumps(document, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0


def _scan_row(r_value, label, doc_entry, energies, n_roots):
    measures = doc_entry["measures"]
    row = {"R": r_value, "state": label}
    for k in range(n_roots):
        row[f"E{k}"] = energies[k] if k < len(energies) else ""
    ratios = measures["ratios"]
    values = {
        "e_updown": measures["e_updown"], "i_updown": measures["i_updown"],
        "i2_updown": measures["i2_updown"], "n_updown": measures["n_updown"],
        "n2_updown": measures["n2_updown"], "n2_upup": measures["n2_upup"],
        "e1": measures["e1"], "e2": measures["e2"],
        "lambda_max_r2ud": measures["lambda_max_updown"],
        "s_p": measures["s_p"], "s_q": measures["s_q"],
        "ratio_rho_up": ratios.get("rho_up"),
        "ratio_rdm1_up": ratios.get("rdm1_up"),
        "ratio_rdm2_upup": ratios.get("rdm2_upup"),
        "ratio_rdm2_updown": ratios.get("rdm2_updown"),
    }
    for key, value in values.items():
        row[key] = "" if value is None else repr(float(value))
    row["error"] = ""
    return row


def _collect_inputs(inputs):
    files = []
    for item in inputs:
        path = Path(item)
        if path.is_dir():
            files.extend(sorted(str(p) for p in path.glob("*.fcidump")))
        else:
            files.append(str(path))
    return files


def cmd_scan(args) -> int:
    files = _collect_inputs(args.inputs)
    if not files:
        print("error: no input files", file=sys.stderr)
        return 2
    states = _parse_states(args.state)
    rows = []
    for path in files:
        r_value = geometry_tag(path)
        r_key = math.inf if r_value is None else r_value
        try:
            sector = ((args.n_up, args.n_down)
                      if args.n_up is not None else None)
            doc = _solve_document(path, states, args.beta, args.n_roots,
                                  args.weight_cutoff, args.dense_limit,
                                  r_value, sector)
            for entry in doc["reports"]:
                rows.append((r_key, _scan_row(
                    "" if r_value is None else r_value, entry["state"],
                    entry, doc["energies"], args.n_roots)))
        except (ParseError, DomainError, CapacityError, NumericalError,
                OSError) as err:
            failed = {"R": "" if r_value is None else r_value, "state": "",
                      "error": f"{path}: {err}"}
            rows.append((r_key, failed))
    rows.sort(key=lambda pair: pair[0])

    columns = (["R", "state"] + [f"E{k}" for k in range(args.n_roots)]
               + CSV_COLUMNS_FIXED + ["error"])
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, restval="")
    writer.writeheader()
    for _, row in rows:
        writer.writerow(row)
    text = buffer.getvalue()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _limit_rows(gs_state, thermal_state, tol):
    """(name, expected, actual, ok) rows for every dissociation-limit target."""
    ref = table_i_reference()
    rows = []

    def check(name, expected, actual, width=None):
        ok = abs(actual - expected) <= (tol if width is None else width)
        rows.append((name, expected, actual, ok))

    def check_spectrum(name, row_ref, matrix, size):
        expected = AsymptoticSpec.expand(row_ref, size)
        actual = np.sort(np.linalg.eigvalsh(matrix))
        worst = float(np.max(np.abs(actual - expected)))
        rows.append((name, 0.0, worst, worst <= tol))

    gs_rep = report(gs_state)
    th_rep = report(thermal_state, beta=DEFAULT_BETA)

    from .rdm import one_body, updown_densities
    for label, state, spectra in (("gs", gs_state, ref.gs_spectra),
                                  ("thermal", thermal_state,
                                   ref.thermal_spectra)):
        density = updown_densities(state)
        r1 = one_body(state)
        r2 = two_body(state)
        check_spectrum(f"{label}.rho_up", spectra["rho_up"],
                       density.rho_up, 21)
        check_spectrum(f"{label}.rdm1_up", spectra["rdm1_up"], r1.up, 7)
        check_spectrum(f"{label}.rdm2_upup", spectra["rdm2_upup"],
                       r2.upup, 21)
        check_spectrum(f"{label}.rdm2_updown", spectra["rdm2_updown"],
                       r2.updown, 49)

    check("gs.n_updown", 13 / 6, gs_rep.n_updown)
    check("gs.n2_updown", 5 / 6, gs_rep.n2_updown)
    check("gs.n2_upup", 0.0, gs_rep.n2_upup)
    target = 4 / 3 + 2 * math.log2(3)
    check("gs.i_updown", target, gs_rep.i_updown)
    check("gs.i2_updown", target, gs_rep.i2_updown)
    check("thermal.n_updown", 1 / 6, th_rep.n_updown)
    check("thermal.n2_updown", 0.0, th_rep.n2_updown)
    check("thermal.i_updown", 2 + 0.5 * math.log2(3), th_rep.i_updown)
    check("thermal.i2_updown", 0.5 * (-37 + 10 * math.log2(15)),
          th_rep.i2_updown)
    if th_rep.s_p is not None:
        check("thermal.s_p", math.log2(12), th_rep.s_p)

    # Schmidt values of the limit ground state (sign-gauge free)
    sd_vals = np.sort(gs_rep.schmidt_values)[::-1]
    expected_sd = np.sqrt(sorted([1 / 3] * 2 + [1 / 12] * 4, reverse=True))
    worst = float(np.max(np.abs(sd_vals[:6] - expected_sd))) \
        if sd_vals.size >= 6 else math.inf
    rows.append(("gs.schmidt_values", 0.0, worst, worst <= tol))
    return rows


def _analytic_limit_extra_rows(gs_state, thermal_state, tol):
    """Negative-eigenvalue counting checks, exact limit states only."""
    rows = []
    _, gs_pt = full_density_and_pt(gs_state)
    vals = np.linalg.eigvalsh(gs_pt)
    negatives = np.sort(vals[vals < -1e-9])
    expected = np.sort([-1 / 3] + [-1 / 6] * 8 + [-1 / 12] * 6)
    ok = negatives.size == 15 and bool(
        np.max(np.abs(negatives - expected)) <= tol)
    rows.append(("gs.pt_negative_eigenvalues[15]", 0.0,
                 0.0 if ok else 1.0, ok))
    _, th_pt = full_density_and_pt(thermal_state)
    vals = np.linalg.eigvalsh(th_pt)
    negatives = vals[vals < -1e-9]
    ok = negatives.size == 2 and bool(np.allclose(negatives, -1 / 12,
                                                  atol=tol))
    rows.append(("thermal.pt_negative_eigenvalues[2 x -1/12]", 0.0,
                 0.0 if ok else 1.0, ok))
    return rows


def cmd_check_limits(args) -> int:
    if args.analytic:
        basis = enumerate_sector(7, 5, 5)
        gs_state = asymptotic_gs(basis)
        thermal_state = uniform_band_mixture(basis)
        tol = 1e-9
        rows = _limit_rows(gs_state, thermal_state, tol)
        rows += _analytic_limit_extra_rows(gs_state, thermal_state, tol)
    else:
        table, _ = _load_table(args.file)
        n_up, n_down = sector_of(table)
        if (table.n_spatial, n_up, n_down) != (7, 5, 5):
            raise DomainError(f"dissociation-limit checks need the (7,5,5) "
                              f"sector, file defines ({table.n_spatial},"
                              f"{n_up},{n_down})")
        basis, vals, vecs = solve_table(table)
        gs_state = ground_state(basis, vals, vecs)
        thermal_state = thermal_ensemble(basis, vals, vecs, args.beta)
        rows = _limit_rows(gs_state, thermal_state, args.tol)

    failures = 0
    for name, expected, actual, ok in rows:
        status = "PASS" if ok else "FAIL"
        print(f"{status}  {name:45s} expected={expected: .9f} "
              f"actual={actual: .9f}")
        failures += 0 if ok else 1
    print(f"{'OK' if failures == 0 else 'FAILED'}: "
          f"{len(rows) - failures}/{len(rows)} checks passed")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermient",
        description="Exact diagonalization with spin-resolved entanglement "
                    "measures for FCIDUMP Hamiltonians.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--state", action="append",
                       help="state selector: gs, thermal, or eig:K "
                            "(repeatable; default gs)")
        p.add_argument("--beta", type=float, default=DEFAULT_BETA,
                       help="inverse temperature in 1/Hartree for thermal "
                            "states (default 1000)")
        p.add_argument("--n-roots", type=int, default=1,
                       help="number of eigenvalues to report (default 1)")
        p.add_argument("--weight-cutoff", type=float, default=WEIGHT_CUTOFF)
        p.add_argument("--dense-limit", type=int, default=DENSE_LIMIT)
        p.add_argument("--n-up", type=int,
                       help="sector override (else derived from NELEC/MS2)")
        p.add_argument("--n-down", type=int)

    p_solve = sub.add_parser("solve", help="solve one FCIDUMP, emit JSON")
    p_solve.add_argument("file")
    common(p_solve)
    p_solve.add_argument("--tag", type=float,
                         help="geometry tag override (else parsed from "
                              "*_R<value>.fcidump)")
    p_solve.add_argument("--out", help="write JSON here instead of stdout")
    p_solve.set_defaults(func=cmd_solve)

    p_scan = sub.add_parser("scan", help="scan FCIDUMP files, emit CSV")
    p_scan.add_argument("inputs", nargs="+",
                        help="FCIDUMP files and/or directories")
    common(p_scan)
    p_scan.add_argument("--out", help="write CSV here instead of stdout")
    p_scan.set_defaults(func=cmd_scan)

    p_check = sub.add_parser("check-limits",
                             help="assert dissociation-limit reference values")
    p_check.add_argument("file", nargs="?",
                         help="large-R FCIDUMP (omit with --analytic)")
    p_check.add_argument("--analytic", action="store_true",
                         help="check the exact limit states, tolerance 1e-9")
    p_check.add_argument("--tol", type=float, default=2e-2,
                         help="finite-R tolerance for file mode (default 2e-2)")
    p_check.add_argument("--beta", type=float, default=DEFAULT_BETA)
    p_check.set_defaults(func=cmd_check_limits)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "check-limits" and not args.analytic and not args.file:
        print("error: provide an FCIDUMP file or --analytic", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ParseError, DomainError, CapacityError, NumericalError,
            OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
