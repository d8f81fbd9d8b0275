"""Command-line front end.

Output is line-oriented ``key=value`` text; ``--json`` switches to a
machine-readable document where supported. Exit status is 0 on success,
1 on computation or verification failure and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance
from .alpha_normal import certificate_from_eigenvector, classify
from .constructions import FAMILIES, FamilySpec, build
from .core import dumps, loads
from .errors import ConvergenceFailure, InvalidArgument, SolverFailure
from .extremal import family_sweep, min_rho_bicyclic
from .mobius import f0_star, is_pole, iterate_direct
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, spectral_radius


def fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def emit(out, **fields):
    for key, value in fields.items():
        out.write(f"{key}={fmt(value)}\n")


def _parse_params(text):
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _parse_range(text):
    try:
        lo, hi = text.split("..")
        return float(lo), float(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")


def _read_hypergraph(path):
    with open(path) as fh:
        return loads(fh.read())


def cmd_construct(args, out):
    if args.family == "PowerHypergraph":
        raise InvalidArgument("PowerHypergraph is not available from the command line")
    H = build(FamilySpec(args.family, args.params), args.k)
    text = dumps(H)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        emit(out, file=args.out, k=H.k, n=H.n, m=H.m)
    else:
        out.write(text)


def cmd_rho(args, out):
    H = _read_hypergraph(args.file)
    r = spectral_radius(H, args.tol, args.max_iter)
    if args.json:
        json.dump({"rho": r.rho, "lower_bound": r.lower_bound, "upper_bound": r.upper_bound,
                   "iterations": r.iterations, "alpha": r.rho ** (-H.k),
                   "eigenvector": r.eigenvector.tolist()}, out, indent=2)
        out.write("\n")
    else:
        emit(out, rho=r.rho, lower_bound=r.lower_bound, upper_bound=r.upper_bound,
             iterations=r.iterations, alpha=r.rho ** (-H.k))


def cmd_certificate(args, out):
    H = _read_hypergraph(args.file)
    r = spectral_radius(H, args.solver_tol)
    alpha = r.rho ** (-H.k)
    rep = classify(H, certificate_from_eigenvector(H, r), alpha, args.tol)
    if args.json:
        json.dump({"alpha": alpha, "classification": rep.classification,
                   "consistent": rep.consistent, "records": list(rep.records())}, out, indent=2)
        out.write("\n")
        return 0
    for rec in rep.records():
        out.write(f"{rec['kind']}[{rec['index']}]={fmt(rec['value'])}\n")
    emit(out, alpha=alpha, classification=rep.classification,
         consistent=str(rep.consistent).lower())
    return 0


def cmd_mobius(args, out):
    if args.table:
        if args.range is None:
            raise InvalidArgument("--table needs --range LO..HI")
        lo, hi = args.range
        steps = max(args.steps, 1)
        out.write("x,f0star\n")
        for i in range(steps + 1):
            x = lo + (hi - lo) * i / steps
            out.write(f"{fmt(x)},{fmt(f0_star(args.alpha, x))}\n")
        return
    if args.x0 is None or args.n is None:
        raise InvalidArgument("orbit mode needs --x0 and --n")
    out.write("i,x\n")
    sign = 1 if args.n >= 0 else -1
    for i, x in enumerate(iterate_direct(args.alpha, args.x0, args.n)):
        out.write(f"{sign * i},{'pole' if is_pole(x) else fmt(x)}\n")


def cmd_sweep(args, out):
    rows = family_sweep(args.m, args.k, args.family, workers=args.workers)
    if args.json:
        json.dump([r.as_dict() for r in rows], out, indent=2)
        out.write("\n")
    else:
        out.write("family,params,rho,alpha,converged\n")
        for r in rows:
            params = " ".join(map(str, r.spec.params))
            out.write(f"{r.spec.family},{params},{fmt(r.rho)},{fmt(r.alpha)},"
                      f"{str(r.converged).lower()}\n")
    return 0 if all(r.converged for r in rows) else 1


def cmd_extremal(args, out):
    s = min_rho_bicyclic(args.m, args.k)
    witnesses = [str(w) for w in s.witnesses]
    if args.json:
        json.dump({"m": s.m, "k": s.k, "q": s.q, "theta0": s.theta0, "alpha": s.alpha,
                   "rho": s.rho, "witnesses": witnesses}, out, indent=2)
        out.write("\n")
    else:
        emit(out, m=s.m, k=s.k, q=s.q, theta0=s.theta0, alpha=s.alpha, rho=s.rho,
             witnesses=";".join(witnesses))


def cmd_verify(args, out):
    results = acceptance.run_suite(args.suite)
    for r in results:
        out.write(r.line() + "\n")
    passed = sum(r.passed for r in results)
    emit(out, passed=passed, total=len(results))
    return 0 if passed == len(results) else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperrho", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named family and write it")
    p.add_argument("--family", required=True, choices=[f for f in FAMILIES if f != "PowerHypergraph"])
    p.add_argument("--params", required=True, type=_parse_params)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("rho", help="spectral radius of a hypergraph file")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("certificate", help="eigenvector certificate and its classification")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--solver-tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("mobius", help="orbits of x -> 1 - alpha/x and F0* tables")
    p.add_argument("--alpha", required=True, type=float)
    p.add_argument("--x0", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--table", choices=["f0star"])
    p.add_argument("--range", type=_parse_range)
    p.add_argument("--steps", type=int, default=20)
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("sweep", help="spectral radius of every family member of size m")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--family", required=True, choices=["C1", "C2", "C3"])
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("extremal", help="closed-form minimum over bicyclic k-graphs")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--suite", choices=["paper", "quick"], default="quick")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out) or 0
    except InvalidArgument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceFailure, SolverFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
