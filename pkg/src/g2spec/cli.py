"""Command-line entry point: ``g2spec <command> ...``.

Exit codes are 0 on success, 1 when a verification check fails and 2 for
usage errors (bad flags, unsupported labels, critical or uncertified rates).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import dirac, moduli, ode
from .algebraic import QuadraticSurd
from .reps import RepLabelG2, branch_g2_to_su3, dim_g2
from .verify import matrix_checks, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _num(x) -> str:
    return f"{float(x):.12g}"


def _emit(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _report(report, as_json: bool) -> int:
    sys.stdout.write(report.render_json() if as_json else report.render_text())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    return _report(run_checks(args.golden), args.json)


def cmd_verify_matrices(args) -> int:
    return _report(matrix_checks(args.golden), args.json)


def _unsupported_message(gamma: RepLabelG2) -> str:
    msg = f"{gamma} is outside the three labels with an explicit Dirac matrix"
    if gamma.i + gamma.j >= 2:
        b = dirac.bound_value(gamma)
        msg += f"; the bound certificate gives sqrt(-c-5) - 1 = {b} >= 2, so it has no eigenvalue in [0, 2)"
    return msg


def cmd_spectrum(args) -> int:
    gamma = RepLabelG2(args.i, args.j)
    if gamma not in dirac.SUPPORTED:
        raise UsageError(_unsupported_message(gamma))
    spec = dirac.eigenvalues(dirac.assemble_dirac_direct(gamma))
    value = _num if args.numeric else str
    rows = [(value(v), m) for v, m in spec]
    if args.format == "json":
        text = json.dumps({"gamma": [gamma.i, gamma.j], "eigenvalues": [{"value": v, "multiplicity": m} for v, m in rows]}, indent=2) + "\n"
    elif args.format == "csv":
        text = _csv_text(["eigenvalue", "multiplicity"], rows)
    else:
        width = max(len(v) for v, _ in rows)
        text = "".join(f"{v.rjust(width)}  x{m}\n" for v, m in rows)
    sys.stdout.write(text)
    return EXIT_OK


def _rate(text: str) -> QuadraticSurd:
    try:
        return QuadraticSurd(Fraction(text))
    except (ValueError, ZeroDivisionError):
        try:
            return QuadraticSurd.parse(text)
        except Exception as exc:
            raise UsageError(f"cannot read a rate from {text!r}") from exc


def cmd_virtdim(args) -> int:
    if (args.mu is None) == (args.rate is None):
        raise UsageError("give exactly one rate, either positionally or with --rate")
    mu = _rate(args.mu if args.rate is None else args.rate)
    try:
        print(moduli.virtual_dim(mu))
    except moduli.CriticalWeightError as exc:
        raise UsageError(f"{exc}; the virtual dimension jumps there") from exc
    except (ValueError, dirac.UncertifiedInterval) as exc:
        raise UsageError(str(exc)) from exc
    return EXIT_OK


def cmd_critical_weights(args) -> int:
    ledger = moduli.certified_ledger()
    lo, hi = _rate(args.lo), _rate(args.hi)
    ws = ledger.W if args.shift == 2 else ledger.W_crit
    rows = [(str(w), ledger.k(w + (args.shift - 2))) for w in ws if lo < w and w < hi]
    if args.format == "csv":
        sys.stdout.write(_csv_text(["weight", "jump"], rows))
    else:
        sys.stdout.write(json.dumps([{"weight": w, "jump": k} for w, k in rows], indent=2) + "\n")
    return EXIT_OK


def cmd_branch(args) -> int:
    b = branch_g2_to_su3(RepLabelG2(args.i, args.j))
    if args.json:
        payload = {"gamma": [args.i, args.j], "dimension": dim_g2(b.source), "parts": b.as_dict()}
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        print(f"{b.source} = {b.pretty()}")
    return EXIT_OK


def cmd_ode(args) -> int:
    try:
        tr = ode.integrate(args.C, args.r0, args.r1, args.tol, args.samples)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rows = [[_num(x) for x in row] for row in tr.rows()]
    _emit(_csv_text(["r", "re_f", "im_f", "W"], rows), args.csv)
    return EXIT_OK


def cmd_superpotential(args) -> int:
    try:
        rows = [[_num(x) for x in row] for row in ode.superpotential_grid(args.grid, args.extent)]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(_csv_text(["x", "y", "W"], rows), args.csv)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="g2spec", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run every reproduction check")
    v.add_argument("--json", action="store_true", help="machine-readable report")
    v.add_argument("--golden", metavar="PATH", help="reference tables to compare against instead of the packaged copy")
    v.set_defaults(fn=cmd_verify)

    vm = sub.add_parser("verify-matrices", help="compare the Dirac matrices, squares and spectra with reference tables")
    vm.add_argument("--json", action="store_true")
    vm.add_argument("--golden", metavar="PATH")
    vm.set_defaults(fn=cmd_verify_matrices)

    s = sub.add_parser("spectrum", help="exact spectrum of D0 on one of (0,0), (1,0), (0,1)",
                       epilog="CSV columns: eigenvalue, multiplicity")
    s.add_argument("i", type=int)
    s.add_argument("j", type=int)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--exact", dest="numeric", action="store_false", help="a + b*sqrt(d) strings (default)")
    g.add_argument("--numeric", dest="numeric", action="store_true", help="floats with 12 significant digits")
    s.add_argument("--format", choices=("table", "json", "csv"), default="table")
    s.set_defaults(fn=cmd_spectrum, numeric=False)

    d = sub.add_parser("virtdim", help="virtual dimension of the moduli space at a rate in (-2, 0)")
    d.add_argument("mu", nargs="?", help="rate, e.g. -0.5 (use --rate for fractions such as -3/2)")
    d.add_argument("--rate", dest="rate", help="same as the positional rate")
    d.set_defaults(fn=cmd_virtdim)

    c = sub.add_parser("critical-weights", help="critical weights in an open interval with their index jumps",
                       epilog="CSV columns: weight, jump")
    c.add_argument("--lo", default="-4")
    c.add_argument("--hi", default="0")
    c.add_argument("--shift", type=int, choices=(2, 3), default=2, help="2: deformation rates, 3: cone weights")
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.set_defaults(fn=cmd_critical_weights)

    b = sub.add_parser("branch", help="restriction of a G2 irreducible to SU(3)")
    b.add_argument("i", type=int)
    b.add_argument("j", type=int)
    b.add_argument("--json", action="store_true")
    b.set_defaults(fn=cmd_branch)

    o = sub.add_parser("ode", help="integrate the invariant instanton equation from the closed form",
                       epilog="CSV columns: r, re_f, im_f, W")
    o.add_argument("--C", type=float, default=1.0)
    o.add_argument("--r0", type=float, default=1e-3)
    o.add_argument("--r1", type=float, default=1e3)
    o.add_argument("--tol", type=float, default=1e-9)
    o.add_argument("--samples", type=int, default=401)
    o.add_argument("--csv", metavar="PATH", help="output file (default stdout)")
    o.set_defaults(fn=cmd_ode)

    w = sub.add_parser("superpotential", help="W on a square grid", epilog="CSV columns: x, y, W")
    w.add_argument("--grid", type=int, default=41)
    w.add_argument("--extent", type=float, default=1.5)
    w.add_argument("--csv", metavar="PATH")
    w.set_defaults(fn=cmd_superpotential)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"g2spec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"g2spec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
