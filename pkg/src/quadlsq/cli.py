"""Command-line front end: analyze single rules, sweep families, integrate.

Exit codes are a stable contract: 0 on success, 2 on usage/input errors,
3 on numerical failures (degree overflow, Newton non-convergence, singular
systems).

CSV and JSON outputs serialize numbers with 17 significant digits so that
parsing a file back reproduces the original doubles bit for bit, and sweep
files are deterministic: re-running a sweep produces byte-identical output.
"""

import argparse
import csv
import json
import math
import sys

from .analysis import build_report
from .errors import NumericalFailure
from .minimax import solve_rule
from .nodes import Family, FamilySpec, generate, read_nodes_file
from .poly import Interval, Polynomial
from .system import build_system

#: Fixed column order of sweep/analyze rows.
CSV_COLUMNS = (
    "family", "n", "degree", "mu_Q", "N_omega", "N_z", "angle_deg",
    "tau_inf", "alpha", "c_n", "Omega", "Gamma", "cond_inf_A",
    "r_omega_1", "r_omega_2", "r_omega_inf", "r_z_inf", "error",
)

MAX_SWEEP_N = 64


def _fmt(value):
    """17 significant digits: enough for exact float round-trips."""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _report_row(report, error=""):
    rn = report.residual_norms if report is not None else {}
    values = {
        "family": report.family if report else "",
        "n": report.n if report else "",
        "degree": report.degree if report else "",
        "mu_Q": report.mu_Q if report else "",
        "N_omega": report.N_omega if report else "",
        "N_z": report.N_z if report else "",
        "angle_deg": report.angle_deg if report else "",
        "tau_inf": report.tau_inf if report else "",
        "alpha": report.alpha if report else "",
        "c_n": report.c_n if report else "",
        "Omega": report.Omega if report else "",
        "Gamma": report.Gamma if report else "",
        "cond_inf_A": report.cond_inf_A if report else "",
        "r_omega_1": rn.get("r_omega_1", ""),
        "r_omega_2": rn.get("r_omega_2", ""),
        "r_omega_inf": rn.get("r_omega_inf", ""),
        "r_z_inf": rn.get("r_z_inf", ""),
        "error": error,
    }
    return values


def _json_object(pairs):
    """Flat JSON object with floats at 17 significant digits."""
    parts = []
    for key, value in pairs:
        if isinstance(value, float):
            text = _fmt(value)
        elif isinstance(value, (int,)) and not isinstance(value, bool):
            text = str(value)
        else:
            text = json.dumps(value)
        parts.append(f"{json.dumps(key)}: {text}")
    return "{" + ", ".join(parts) + "}"


def _resolve_nodeset(args):
    """NodeSet from --family/--n or --nodes-file, honoring --interval."""
    interval = Interval(*args.interval) if args.interval else Interval()
    family = Family.parse(args.family)
    if family is Family.CUSTOM:
        if not args.nodes_file:
            raise ValueError("custom family needs --nodes-file")
        nodes = tuple(float(v) for v in read_nodes_file(args.nodes_file))
        return generate(FamilySpec(family, custom_nodes=nodes), interval), "custom"
    if args.nodes_file:
        raise ValueError("--nodes-file only applies to --family custom")
    if args.n is None:
        raise ValueError(f"--n is required for family {family.value}")
    return generate(FamilySpec(family, args.n), interval), family.value


def _print_analyze_text(report, ns, sol, out):
    print(f"family: {report.family}   n: {report.n}   "
          f"interval: ({_fmt(ns.interval.a)}, {_fmt(ns.interval.b)})", file=out)
    print("nodes:  " + " ".join(_fmt(t) for t in ns.nodes), file=out)
    print("omega:  " + " ".join(_fmt(w) for w in sol.omega), file=out)
    print("z_star: " + " ".join(_fmt(z) for z in sol.z_star), file=out)
    print("tau:    " + " ".join(_fmt(t) for t in sol.tau), file=out)
    print(f"degree: {report.degree}", file=out)
    print(f"mu_Q: {_fmt(report.mu_Q)}", file=out)
    for name in ("N_omega", "N_z", "angle_deg", "tau_inf", "alpha", "c_n",
                 "Omega", "Gamma", "cond_inf_A"):
        print(f"{name}: {_fmt(getattr(report, name))}", file=out)
    for name in ("r_omega_1", "r_omega_2", "r_omega_3", "r_omega_inf", "r_z_inf"):
        print(f"{name}: {_fmt(report.residual_norms[name])}", file=out)


def _cmd_analyze(args, out):
    ns, label = _resolve_nodeset(args)
    fs = build_system(ns, eps_deg=args.eps_deg)
    sol = solve_rule(fs)
    report = build_report(ns, family=label, fs=fs, solution=sol)
    if args.format == "text":
        _print_analyze_text(report, ns, sol, out)
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        row = _report_row(report)
        writer.writerow([_fmt(row[c]) if row[c] != "" else "" for c in CSV_COLUMNS])
    else:
        row = _report_row(report)
        print(_json_object([(c, row[c]) for c in CSV_COLUMNS]), file=out)
    return 0


def _cmd_sweep(args, out):
    family = Family.parse(args.family)
    if family is Family.CUSTOM:
        raise ValueError("sweep needs a generated family, not custom")
    if not (1 <= args.n_min <= args.n_max <= MAX_SWEEP_N):
        raise ValueError(
            f"need 1 <= n-min <= n-max <= {MAX_SWEEP_N}, "
            f"got {args.n_min}..{args.n_max}"
        )
    interval = Interval(*args.interval) if args.interval else Interval()
    rows = []
    for n in range(args.n_min, args.n_max + 1):
        try:
            ns = generate(FamilySpec(family, n), interval)
            report = build_report(ns, family=family.value, eps_deg=args.eps_deg)
            rows.append(_report_row(report))
        except (ValueError, NumericalFailure) as exc:
            row = _report_row(None, error=str(exc))
            row["family"] = family.value
            row["n"] = n
            rows.append(row)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow([_fmt(row[c]) if row[c] != "" else "" for c in CSV_COLUMNS])
    print(f"wrote {len(rows)} rows to {args.out}", file=out)
    return 0


def _builtin_integrand(name):
    if name == "runge":
        return lambda x: 1.0 / (1.0 + 25.0 * x * x)
    if name == "expx":
        return math.exp
    raise ValueError(f"unknown integrand: {name!r} (use poly:c0,c1,... , runge, expx)")


def _parse_integrand(spec):
    if spec.startswith("poly:"):
        try:
            coeffs = [float(s) for s in spec[len("poly:"):].split(",")]
        except ValueError:
            raise ValueError(f"unknown integrand: bad coefficients in {spec!r}") from None
        return Polynomial(coeffs).eval
    return _builtin_integrand(spec)


def _cmd_integrate(args, out):
    ns, label = _resolve_nodeset(args)
    f = _parse_integrand(args.integrand)
    fs = build_system(ns, eps_deg=args.eps_deg)
    sol = solve_rule(fs)
    value = math.fsum(w * f(t) for w, t in zip(sol.omega, ns.nodes))
    c_n = fs.mu_Q / math.factorial(fs.degree + 1) if fs.degree + 1 <= 20 else (
        math.copysign(math.exp(math.log(abs(fs.mu_Q)) - math.lgamma(fs.degree + 2)),
                      fs.mu_Q) if fs.mu_Q else 0.0)
    pairs = [("family", label), ("n", ns.n), ("integrand", args.integrand),
             ("value", value), ("degree", fs.degree), ("c_n", c_n)]
    if args.format == "text":
        print(f"Q_{ns.n}(f) = {_fmt(value)}", file=out)
        print(f"degree: {fs.degree}   error constant c_n: {_fmt(c_n)}", file=out)
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([k for k, _ in pairs])
        writer.writerow([_fmt(v) for _, v in pairs])
    else:
        print(_json_object(pairs), file=out)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text",
                        help="output format (default: text)")
    common.add_argument("--eps-deg", type=float, default=None, metavar="REAL",
                        help="zero threshold override for degree detection")
    common.add_argument("--interval", type=float, nargs=2, default=None,
                        metavar=("A", "B"), help="integration interval (default -1 1)")

    parser = argparse.ArgumentParser(
        prog="quadlsq",
        description="Analyze interpolatory quadrature rules through their "
                    "fundamental system: weights, minimax solution, degree, "
                    "principal moment and conditioning diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", parents=[common],
                               help="full report for one rule")
    p_analyze.add_argument("--family", required=True,
                           help="nc, fejer1, cc, gl, or custom")
    p_analyze.add_argument("--n", type=int, default=None, help="total node count")
    p_analyze.add_argument("--nodes-file", default=None,
                           help="node file for --family custom")

    p_sweep = sub.add_parser("sweep", parents=[common],
                             help="CSV of reports over a range of n")
    p_sweep.add_argument("--family", required=True)
    p_sweep.add_argument("--n-min", type=int, required=True)
    p_sweep.add_argument("--n-max", type=int, required=True)
    p_sweep.add_argument("--out", required=True, help="output CSV path")

    p_int = sub.add_parser("integrate", parents=[common],
                           help="apply a rule to an integrand")
    p_int.add_argument("--family", required=True)
    p_int.add_argument("--n", type=int, default=None)
    p_int.add_argument("--nodes-file", default=None)
    p_int.add_argument("--integrand", required=True,
                       help="poly:c0,c1,...  or a built-in name (runge, expx)")

    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"analyze": _cmd_analyze, "sweep": _cmd_sweep,
                "integrate": _cmd_integrate}
    try:
        return handlers[args.command](args, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
