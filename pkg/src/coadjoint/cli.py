"""Command-line interface.

Subcommands: classify, decompose, dress, potential, metric, betti, pairing,
verify. Reports are canonical JSON objects {config, results, residuals,
pass}; grids can be written as CSV. Complex numbers are entered as "re,im"
pairs separated by ';'; grids as "re0:re1:steps,im0:im1:steps" per
coordinate (or a constant "re,im"), also separated by ';'.

Exit codes: 0 ok, 1 verification failure, 2 invalid configuration,
3 domain error while evaluating a valid request.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import cohomology, decompose, kahler, orbit
from .errors import (AllWeightsZero, DegeneracyViolation,
                     MaximalDegenerate, NumericalBreakdown, OutsideCell,
                     PoleOnChart, QuadratureNotConverged, StepUnderflow,
                     UnsupportedGroup, ZeroTorusEntry)
from .groups import build_group, classify_initial_point, initial_point, \
    weyl_group
from .quaternion import QuaternionMatrix

CONFIG_ERRORS = (UnsupportedGroup, AllWeightsZero, ValueError)
DOMAIN_ERRORS = (DegeneracyViolation, PoleOnChart, OutsideCell, StepUnderflow,
                 ZeroTorusEntry, NumericalBreakdown, MaximalDegenerate,
                 QuadratureNotConverged)


def _parse_weights(text: str):
    return tuple(float(x) for x in text.split(","))


def _parse_z(text: str):
    out = []
    for pair in text.split(";"):
        re_s, im_s = pair.split(",")
        out.append(complex(float(re_s), float(im_s)))
    return tuple(out)


def _parse_grid(text: str):
    """Per-coordinate axis specs: 'a:b:steps,c:d:steps' or constant 're,im'."""
    axes = []
    for part in text.split(";"):
        fields = part.split(",")
        if len(fields) != 2:
            raise ValueError(f"bad grid component {part!r}")
        vals = []
        for f in fields:
            if ":" in f:
                a, b, s = f.split(":")
                vals.append(np.linspace(float(a), float(b), int(s)))
            else:
                vals.append(np.array([float(f)]))
        axes.append((vals[0], vals[1]))
    return axes


def _grid_points(axes):
    mesh = np.meshgrid(*[v for ax in axes for v in ax], indexing="ij")
    flat = [m.ravel() for m in mesh]
    pts = np.empty((flat[0].size, len(axes)), dtype=complex)
    for k in range(len(axes)):
        pts[:, k] = flat[2 * k] + 1j * flat[2 * k + 1]
    return pts


def _c(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _matrix(m):
    if isinstance(m, QuaternionMatrix):
        return {"z1": _matrix(m.z1), "z2": _matrix(m.z2)}
    return [[_c(v) for v in row] for row in np.asarray(m, dtype=complex)]


def _check(name, value, tol):
    return {"name": name, "residual": float(value), "tol": float(tol),
            "pass": bool(value < tol)}


def _spectral_mismatch(a, b) -> float:
    # sort by imaginary part first; real parts of these spectra are noise
    a = np.asarray(a)[np.lexsort((np.asarray(a).real, np.asarray(a).imag))]
    b = np.asarray(b)[np.lexsort((np.asarray(b).real, np.asarray(b).imag))]
    return float(np.max(np.abs(a - b)))


def _random_chart(spec, point, rng, scale=1.0):
    fam = spec.adapter
    mask = orbit.required_zero_mask(spec, point)
    z = scale * (rng.standard_normal(fam.chart_dim)
                 + 1j * rng.standard_normal(fam.chart_dim))
    if fam.family == "sp":
        z[fam.n * (fam.n - 1):] = 0.0   # stay on the quaternionic chart
    z[mask] = 0.0
    return decompose.chart_point(spec, z)


def _haar_unitary(n, rng):
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(m)
    q = q @ np.diag(np.exp(-1j * np.angle(np.diag(r))))
    return q / np.linalg.det(q) ** (1.0 / n)


def _get_point(args, spec):
    return initial_point(spec, _parse_weights(args.weights))


def _get_chart(args, spec, point, rng):
    if args.z is not None:
        return decompose.chart_point(spec, _parse_z(args.z))
    return _random_chart(spec, point, rng)


# ---------------------------------------------------------------------------
# subcommands


def cmd_classify(args, spec, report):
    point = _get_point(args, spec)
    cls = classify_initial_point(spec, point)
    bv = cohomology.betti(spec, point)
    res = {
        "kind": cls.kind.value,
        "vanishing_walls": list(cls.vanishing_walls),
        "real_dimension": cls.real_dimension,
        "stabilizer": cls.stabilizer,
        "betti": list(bv.b),
        "betti_total": bv.total,
    }
    flags, ratios = kahler.integrality_check(spec, point)
    res["integrality"] = {"flags": list(flags), "ratios": list(ratios)}
    try:
        fib = orbit.fibration(spec, point)
        res["fibration"] = {"total": [fib.total.label, fib.total.real_dimension],
                            "base": [fib.base.label, fib.base.real_dimension],
                            "fiber": [fib.fiber.label, fib.fiber.real_dimension]}
    except MaximalDegenerate:
        res["fibration"] = "maximal degenerate: none"
    report["results"].append(res)
    return 0


def cmd_decompose(args, spec, report):
    point = _get_point(args, spec)
    rng = np.random.default_rng(args.seed)
    chart = _get_chart(args, spec, point, rng)
    fac = decompose.iwasawa(spec, chart)
    z = decompose.chart_matrix(spec, chart)
    back = fac.multiply_back()
    if isinstance(z, QuaternionMatrix):
        res_mb = (back - z).norm_max()
        kk = fac.k @ fac.k.h
        res_un = (kk - QuaternionMatrix.eye(spec.n)).norm_max()
    else:
        res_mb = float(np.max(np.abs(back - z)))
        kk = fac.k @ np.conj(fac.k.T)
        res_un = float(np.max(np.abs(kk - np.eye(kk.shape[0]))))
    report["results"].append({
        "z": [_c(v) for v in chart.coords],
        "a_parameters": [float(x) for x in fac.a_parameters],
        "n": _matrix(fac.n),
        "k": _matrix(fac.k),
    })
    report["residuals"]["multiply_back"] = _check("multiply_back", res_mb,
                                                  args.tol or 1e-10)
    report["residuals"]["unitarity"] = _check("unitarity", res_un,
                                              args.tol or 1e-10)
    return 0


def cmd_dress(args, spec, report):
    point = _get_point(args, spec)
    if args.grid:
        if (spec.family, spec.n) != ("su", 3):
            raise ValueError("dress grids emit Gell-Mann coordinates and "
                             "are available for SU(3) only")
        pts = _grid_points(_parse_grid(args.grid))
        cols = {f"mu_{a + 1}": [] for a in range(8)}
        cols["phi"] = []
        for row in pts:
            op = orbit.dress(spec, point, decompose.chart_point(spec, row))
            for a in range(8):
                cols[f"mu_{a + 1}"].append(op.coords[a])
            cols["phi"].append(
                kahler.potential(spec, point, decompose.chart_point(spec, row)))
        report["results"].append({"grid_points": int(pts.shape[0])})
        report["csv"] = _grid_csv(pts, cols)
        return 0
    rng = np.random.default_rng(args.seed)
    chart = _get_chart(args, spec, point, rng)
    op = orbit.dress(spec, point, chart)
    spectrum = _spectral_mismatch(op.spectrum(),
                                  spec.adapter.spectrum(point.matrix_native
                                                        if spec.family == "sp"
                                                        else point.matrix))
    res = {"z": [_c(v) for v in chart.coords],
           "mu_matrix": _matrix(op.mu_matrix)}
    if op.coords:
        res["mu"] = [float(x) for x in op.coords]
        closed = orbit.su3_closed_form(point, chart)
        report["residuals"]["closed_form"] = _check(
            "closed_form", float(np.max(np.abs(np.array(op.coords) - closed))),
            args.tol or 1e-10)
    report["residuals"]["isospectrality"] = _check("isospectrality", spectrum,
                                                   args.tol or 1e-10)
    report["results"].append(res)
    return 0


def cmd_potential(args, spec, report):
    point = _get_point(args, spec)
    if args.grid:
        pts = _grid_points(_parse_grid(args.grid))
        vals = kahler.potential_batch(spec, point, pts)
        report["results"].append({"grid_points": int(len(vals))})
        report["csv"] = _grid_csv(pts, {"phi": vals})
        return 0
    rng = np.random.default_rng(args.seed)
    chart = _get_chart(args, spec, point, rng)
    val = kahler.potential(spec, point, chart)
    report["results"].append({"z": [_c(v) for v in chart.coords],
                              "phi": float(val)})
    return 0


def cmd_metric(args, spec, report):
    point = _get_point(args, spec)
    step = args.step
    if args.grid:
        pts = _grid_points(_parse_grid(args.grid))
        rows = {}
        gs = []
        for row in pts:
            kt = kahler.metric(spec, point, decompose.chart_point(spec, row),
                               step=step)
            gs.append(kt.g)
        m = gs[0].shape[0]
        for a in range(m):
            for b in range(m):
                rows[f"g_{a + 1}{b + 1}_re"] = [g[a, b].real for g in gs]
                rows[f"g_{a + 1}{b + 1}_im"] = [g[a, b].imag for g in gs]
        report["results"].append({"grid_points": len(gs)})
        report["csv"] = _grid_csv(pts, rows)
        return 0
    rng = np.random.default_rng(args.seed)
    chart = _get_chart(args, spec, point, rng)
    kt = kahler.metric(spec, point, chart, step=step)
    herm = float(np.max(np.abs(kt.g - kt.g.conj().T)))
    eig = kt.eigenvalues()
    report["results"].append({
        "z": [_c(v) for v in chart.coords],
        "active_coordinates": list(kt.active_labels),
        "g": _matrix(kt.g),
        "eigenvalues": [float(x) for x in eig],
    })
    report["residuals"]["hermitian"] = _check("hermitian", herm, 1e-9)
    report["residuals"]["positivity"] = {
        "name": "positivity", "residual": float(eig.min()), "tol": -1e-9,
        "pass": bool(eig.min() > -1e-9)}
    return 0


def cmd_betti(args, spec, report):
    point = _get_point(args, spec)
    bv = cohomology.betti(spec, point)
    lh = cohomology.leray_hirsch(spec, point)
    wg = weyl_group(spec)
    report["results"].append({
        "betti": list(bv.b),
        "total": bv.total,
        "weyl_order": wg.order,
        "leray_hirsch": {"ok": lh.ok, "total": list(lh.total),
                         "base": list(lh.base), "fiber": list(lh.fiber),
                         "note": lh.note},
    })
    if not lh.ok:
        report["pass"] = False
        return 1
    return 0


def cmd_pairing(args, spec, report):
    order = args.order
    m = cohomology.pairing_matrix(spec, order=order)
    dev = float(np.max(np.abs(m - np.eye(m.shape[0]))))
    report["results"].append({
        "matrix": [[float(x) for x in row] for row in m],
        "order": order,
        "normalization": "omega_j = (i/2pi) ddbar Phi_j",
    })
    report["residuals"]["identity"] = _check("identity", dev,
                                             args.tol or 1e-6)
    if not report["residuals"]["identity"]["pass"]:
        report["pass"] = False
        return 1
    return 0


def cmd_verify(args, spec, report):
    point = _get_point(args, spec)
    rng = np.random.default_rng(args.seed)
    checks = []
    npts = args.points

    worst_mb = worst_un = worst_spec = 0.0
    for _ in range(npts):
        chart = _random_chart(spec, point, rng)
        fac = decompose.iwasawa(spec, chart)
        z = decompose.chart_matrix(spec, chart)
        back = fac.multiply_back()
        if isinstance(z, QuaternionMatrix):
            worst_mb = max(worst_mb, (back - z).norm_max())
            worst_un = max(worst_un, (fac.k @ fac.k.h
                                      - QuaternionMatrix.eye(spec.n)).norm_max())
        else:
            worst_mb = max(worst_mb, float(np.max(np.abs(back - z))))
            kk = fac.k @ np.conj(fac.k.T)
            worst_un = max(worst_un,
                           float(np.max(np.abs(kk - np.eye(kk.shape[0])))))
        op = orbit.dress(spec, point, chart)
        ref = point.matrix_native if spec.family == "sp" else point.matrix
        worst_spec = max(worst_spec, _spectral_mismatch(
            op.spectrum(), spec.adapter.spectrum(ref)))
    checks.append(_check("iwasawa_multiply_back", worst_mb, 1e-10))
    checks.append(_check("compactness_kk*", worst_un, 1e-10))
    checks.append(_check("isospectrality", worst_spec, 1e-10))

    if (spec.family, spec.n) == ("su", 3):
        worst_cf = 0.0
        worst_cov = 0.0
        for _ in range(npts):
            chart = _random_chart(spec, point, rng)
            op = orbit.dress(spec, point, chart)
            closed = orbit.su3_closed_form(point, chart)
            worst_cf = max(worst_cf,
                           float(np.max(np.abs(np.array(op.coords) - closed))))
            g = _haar_unitary(3, rng)
            try:
                zg, shift = kahler.cocycle_shift(spec, point, chart, g)
            except OutsideCell:
                continue
            lhs = kahler.potential(spec, point, zg) \
                - kahler.potential(spec, point, chart)
            worst_cov = max(worst_cov, abs(lhs - shift))
        checks.append(_check("su3_closed_form", worst_cf, 1e-10))
        checks.append(_check("potential_covariance", worst_cov, 1e-8))

    bv = cohomology.betti(spec, point)
    wg = weyl_group(spec)
    walls = [i for i, w in enumerate(point.weights) if abs(w) < 1e-12]
    sub = cohomology._parabolic_actions(wg, walls)
    expected = wg.order // len(sub)
    checks.append({"name": "betti_sum", "residual": abs(bv.total - expected),
                   "tol": 0, "pass": bv.total == expected})

    m = cohomology.pairing_matrix(spec, order=args.order)
    dev = float(np.max(np.abs(m - np.eye(m.shape[0]))))
    checks.append(_check("pairing_identity", dev, 1e-6))

    report["results"] = checks
    report["pass"] = all(c["pass"] for c in checks)
    return 0 if report["pass"] else 1


# ---------------------------------------------------------------------------


def _grid_csv(pts, columns: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    m = pts.shape[1]
    header = []
    for k in range(m):
        header += [f"z{k + 1}_re", f"z{k + 1}_im"]
    header += list(columns.keys())
    writer.writerow(header)
    for idx in range(pts.shape[0]):
        row = []
        for k in range(m):
            row += [repr(float(pts[idx, k].real)), repr(float(pts[idx, k].imag))]
        row += [repr(float(columns[name][idx])) for name in columns]
        writer.writerow(row)
    return buf.getvalue()


COMMANDS = {
    "classify": cmd_classify,
    "decompose": cmd_decompose,
    "dress": cmd_dress,
    "potential": cmd_potential,
    "metric": cmd_metric,
    "betti": cmd_betti,
    "pairing": cmd_pairing,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="coadjoint",
        description="Coadjoint orbits of compact classical groups: "
                    "decompositions, dressing, Kahler data, cohomology.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        q = sub.add_parser(name)
        q.add_argument("--group", required=True, choices=["su", "sp", "so"])
        q.add_argument("--n", required=True, type=int)
        q.add_argument("--weights", required=True,
                       help="comma-separated chamber weights, e.g. 1,1")
        q.add_argument("--z", default=None,
                       help="chart coordinates as re,im pairs joined by ';'")
        q.add_argument("--grid", default=None,
                       help="per-coordinate grid re0:re1:steps,im0:im1:steps "
                            "joined by ';' (potential/metric)")
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--tol", type=float, default=None)
        q.add_argument("--step", type=float, default=kahler.DEFAULT_STEP)
        q.add_argument("--order", type=int, default=128,
                       help="quadrature rule size for pairing integrals")
        q.add_argument("--points", type=int, default=100,
                       help="number of random points in verify")
        q.add_argument("--out", choices=["json", "csv"], default="json")
        q.add_argument("--output-file", default=None)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    report = {
        "config": {
            "command": args.command, "group": args.group, "n": args.n,
            "weights": args.weights, "z": args.z, "grid": args.grid,
            "seed": args.seed, "tol": args.tol, "order": args.order,
        },
        "results": [],
        "residuals": {},
        "pass": True,
    }
    try:
        spec = build_group(args.group, args.n)
        code = COMMANDS[args.command](args, spec, report)
    except CONFIG_ERRORS as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)},
                         sort_keys=True), file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)},
                         sort_keys=True), file=sys.stderr)
        return 3
    if report["residuals"]:
        report["pass"] = report["pass"] and all(
            c["pass"] for c in report["residuals"].values())
        if not report["pass"] and code == 0:
            code = 1
    csv_text = report.pop("csv", None)
    if args.out == "csv" and csv_text is not None:
        payload = csv_text
    else:
        if csv_text is not None:
            report["csv_rows"] = csv_text.count("\n") - 1
        payload = json.dumps(report, sort_keys=True,
                             separators=(",", ":")) + "\n"
    if args.output_file:
        with open(args.output_file, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
