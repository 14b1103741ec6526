"""``kerov-lab`` command line: simulate | shape | moments | diagram.

Exit codes: 0 ok, 2 config/parse error, 3 eigensolver failure,
4 identity mismatch, 5 interlacing violation.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import re
import sys

from . import __version__
from .diagram import build_diagram, validate_interlacing
from .errors import InterlacingViolation, NoConvergence, OracleMismatch
from .moments import (
    g_alpha_closed_form,
    g_alpha_partial_sum,
    m_from_beta_derivative,
    wigner_limit_moment,
    wishart_moment_oracle,
)
from .randmat import EntryDist
from .shapes import omega, omega_alpha, support
from .simulate import ENSEMBLES, FORMATS, RunConfig, render, run
from .transition import mp_moments, p_to_moments, semicircle_moments, vkls_p_tilde

EXIT_OK, EXIT_CONFIG, EXIT_EIGEN, EXIT_MISMATCH, EXIT_INTERLACING = 0, 2, 3, 4, 5


def _emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_simulate(args) -> int:
    try:
        config = RunConfig(ensemble=args.ensemble, n=args.n, alpha=args.alpha, dist=args.dist,
                           trials=args.trials, seed=args.seed, k_max=args.k_max,
                           grid_step=args.grid_step, tol=args.tol, format=args.format)
    except ValueError as exc:
        print(f"invalid config: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.jobs < 1:
        print("invalid config: --jobs must be positive", file=sys.stderr)
        return EXIT_CONFIG
    try:
        records = run(config, args.jobs)
    except NoConvergence as exc:
        print(f"eigensolver failure: {exc}", file=sys.stderr)
        return EXIT_EIGEN
    except InterlacingViolation as exc:
        print(f"interlacing violation: {exc}", file=sys.stderr)
        return EXIT_INTERLACING
    _emit(render(config, records), args.out)
    return EXIT_OK


def shape_rows(kind: str, alpha: float | None, start: float, stop: float, step: float):
    if kind == "vkls":
        fn, edges = omega, (-2.0, 2.0)
    else:
        fn, edges = (lambda t: omega_alpha(t, alpha)), support(alpha)
    count = int(math.floor((stop - start) / step + 1e-9))
    xs = {start + i * step for i in range(count + 1)}
    xs.add(stop)
    xs.update(e for e in edges if start <= e <= stop)
    return [(x, float(fn(x))) for x in sorted(x for x in xs if x <= stop)]


def cmd_shape(args) -> int:
    if not (args.start < args.stop and args.step > 0):
        print("bad range: need --from < --to and --step > 0", file=sys.stderr)
        return EXIT_CONFIG
    if args.kind == "wishart" and (args.alpha is None or not args.alpha >= 1):
        print("wishart shape needs --alpha >= 1", file=sys.stderr)
        return EXIT_CONFIG
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "value"])
    for x, v in shape_rows(args.kind, args.alpha, args.start, args.stop, args.step):
        writer.writerow([repr(x), repr(v)])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def moments_report(k_max: int, alphas) -> tuple[list[list[str]], list[list[str]], bool]:
    """Per-k identity table and per-alpha generating-function residuals."""
    ok = True
    beta_route = m_from_beta_derivative(k_max)
    semicircle = p_to_moments(vkls_p_tilde(k_max))
    semicircle_ref = semicircle_moments(k_max)
    mp = p_to_moments(beta_route[1:])
    mp_ref = mp_moments(k_max)
    rows = []
    for k in range(1, k_max + 1):
        if k <= 10:
            dyck = wishart_moment_oracle(k)
            m_flag = "EXACT-EQUAL" if dyck == beta_route[k] else "MISMATCH"
            dyck_text = str(dyck)
        else:
            m_flag, dyck_text = "SKIPPED", ""
        sc_flag = "EXACT-EQUAL" if semicircle[k] == semicircle_ref[k] else "MISMATCH"
        mp_flag = "EXACT-EQUAL" if mp[k] == mp_ref[k] else "MISMATCH"
        ok &= "MISMATCH" not in (m_flag, sc_flag, mp_flag)
        rows.append([str(k), str(wigner_limit_moment(k)), dyck_text, str(beta_route[k]), m_flag,
                     str(semicircle[k]), str(semicircle_ref[k]), sc_flag,
                     str(mp[k]), str(mp_ref[k]), mp_flag])
    g_rows = []
    for alpha in alphas:
        z = 0.3 / (math.sqrt(alpha) + 1) ** 2
        residual = abs(g_alpha_closed_form(z, alpha) - g_alpha_partial_sum(z, alpha, 20))
        flag = "OK" if residual <= 1e-8 else "MISMATCH"
        ok &= flag == "OK"
        g_rows.append([repr(float(alpha)), repr(z), repr(residual), flag])
    return rows, g_rows, ok


MOMENT_COLUMNS = ["k", "wigner", "m_dyck", "m_beta", "m_flag", "mu_from_vkls", "mu_semicircle",
                  "semicircle_flag", "mu_from_m", "mu_mp", "mp_flag"]


def cmd_moments(args) -> int:
    if not 1 <= args.k_max <= 20:
        print("--k-max must be in 1..20", file=sys.stderr)
        return EXIT_CONFIG
    try:
        rows, g_rows, ok = moments_report(args.k_max, args.alpha or [1.0, 2.0, 2.25])
    except OracleMismatch as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(MOMENT_COLUMNS)
    writer.writerows(rows)
    buf.write("\n")
    writer.writerow(["alpha", "z", "g_residual_20_terms", "g_flag"])
    writer.writerows(g_rows)
    _emit(buf.getvalue(), args.out)
    return EXIT_OK if ok else EXIT_MISMATCH


def parse_spectra(text: str) -> tuple[list[float], list[float]]:
    lines = text.splitlines()
    if not lines or len(lines) > 2 and any(l.strip() for l in lines[2:]):
        raise ValueError("expected two rows: spectrum of S, spectrum of its submatrix")
    rows = [[float(tok) for tok in re.split(r"[,\s]+", line.strip()) if tok]
            for line in (lines + [""])[:2]]
    return rows[0], rows[1]


def cmd_diagram(args) -> int:
    try:
        with open(args.eigenvalues_file, encoding="utf-8") as fh:
            minima, maxima = parse_spectra(fh.read())
    except (OSError, ValueError) as exc:
        print(f"parse failure: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    tol = args.tol
    if tol is None:
        tol = 1e-8 * max((abs(v) for v in minima), default=0.0)
    try:
        pair = validate_interlacing(minima, maxima, tol)
    except InterlacingViolation as exc:
        print(f"interlacing violation: {exc}", file=sys.stderr)
        return EXIT_INTERLACING
    except ValueError as exc:
        print(f"parse failure: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    diagram = build_diagram(pair)
    points = [(x, "min") for x in pair.minima] + [(y, "max") for y in pair.maxima]
    points += [(pair.minima[-1] - 1.0, "pad"), (pair.minima[0] + 1.0, "pad")]
    buf = io.StringIO()
    buf.write(f"# center={float(diagram.center)!r}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "w", "kind"])
    for x, kind in sorted(points, key=lambda p: p[0]):
        writer.writerow([repr(float(x)), repr(float(diagram(x))), kind])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kerov-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"kerov-lab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="ensemble runs against the limit shapes")
    sim.add_argument("--ensemble", choices=ENSEMBLES, default="wigner")
    sim.add_argument("--n", type=int, default=100)
    sim.add_argument("--alpha", type=float)
    sim.add_argument("--dist", choices=[d.value for d in EntryDist], default="gaussian")
    sim.add_argument("--trials", type=int, default=1)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--k-max", type=int, default=4)
    sim.add_argument("--grid-step", type=float, default=1e-3)
    sim.add_argument("--tol", type=float)
    sim.add_argument("--format", choices=FORMATS, default="csv")
    sim.add_argument("--out")
    sim.add_argument("--jobs", type=int, default=1)
    sim.set_defaults(func=cmd_simulate)

    shp = sub.add_parser("shape", help="sample a limit shape on a grid")
    shp.add_argument("--kind", choices=("vkls", "wishart"), default="vkls")
    shp.add_argument("--alpha", type=float)
    shp.add_argument("--from", dest="start", type=float, required=True)
    shp.add_argument("--to", dest="stop", type=float, required=True)
    shp.add_argument("--step", type=float, default=0.01)
    shp.add_argument("--out")
    shp.set_defaults(func=cmd_shape)

    mom = sub.add_parser("moments", help="exact moment identities as a self-test table")
    mom.add_argument("--k-max", type=int, default=10)
    mom.add_argument("--alpha", type=float, action="append")
    mom.add_argument("--out")
    mom.set_defaults(func=cmd_moments)

    dia = sub.add_parser("diagram", help="diagram breakpoints from two spectra")
    dia.add_argument("eigenvalues_file")
    dia.add_argument("--tol", type=float)
    dia.add_argument("--out")
    dia.set_defaults(func=cmd_diagram)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
