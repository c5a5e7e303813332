"""Command-line front end.

    qdef catalog [--json]
    qdef spectrum --algebra aq1 --N 2 --delta +1 --q 0.5
    qdef verify --suite all --max-N 2 --q 0.5
    qdef export rep --N 1 --delta +1 --q 0.25 --out rep.json

Exit codes: 0 all checks pass, 1 an identity failed, 2 usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys

import numpy as np

from qdef import coupling, hopf, reps
from qdef.algebra import CATALOG_NAMES, check_consistency, make_catalog_algebra, map_g
from qdef.hopf import CheckRecord, RSeries, Realization
from qdef.qarith import QContext, q_number

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
SUITES = ("algebra", "commutation", "casimir", "hopf", "rmatrix", "ybe", "coupling")


class UsageError(Exception):
    pass


def colour_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = None
    if value not in (1, -1):
        raise argparse.ArgumentTypeError(f"colour must be +1 or -1, got {text!r}")
    return value


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _context(args) -> QContext:
    try:
        return QContext.from_env(args.q, getattr(args, "p", None), getattr(args, "tol", None))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)


# --- catalog -------------------------------------------------------------------

def cmd_catalog(args) -> int:
    ctx = QContext(0.5, 0.7)
    entries = []
    for name in CATALOG_NAMES:
        spec = make_catalog_algebra(name, ctx)
        d = spec.descriptor
        entries.append({"name": name, "kind": spec.kind, "F": d["F"], "G": d["G"], "H": d["H"],
                        "params": d["params"], "note": d.get("note", "")})
    if args.json:
        _emit(_dumps(entries), args.out)
        return EXIT_OK
    lines = []
    for e in entries:
        lines.append(f"{e['name']:<9} {e['kind']}  params: {', '.join(e['params'])}")
        for key in "FGH":
            lines.append(f"    {key}(z) = {e[key]}")
        if e["note"]:
            lines.append(f"    {e['note']}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# --- spectrum ------------------------------------------------------------------

def cmd_spectrum(args) -> int:
    ctx = _context(args)
    try:
        spec = make_catalog_algebra(args.algebra, ctx)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    boundary = ctx.fixed_point if spec.kind == "DQA" else None

    if args.m0 is not None:
        result = reps.ladder_spectrum(spec, args.m0, args.max_steps, args.casimir)
        payload = {"algebra": spec.name, "q": ctx.q, "boundary": boundary, **result.to_dict()}
        if args.format == "json":
            _emit(_dumps(payload), args.out)
        else:
            rows = [("direction", "step", "m")]
            rows += [("raise", k + 1, m) for k, m in enumerate(result.raise_chain)]
            rows += [("lower", k + 1, m) for k, m in enumerate(result.lower_chain)]
            notes = _trailer(args.format, f"classification: {result.classification}",
                             f"boundary (q-1)^-1: {boundary!r}")
            _emit(_table(rows, args.format) + notes, args.out)
        return EXIT_OK

    if args.N is None:
        raise UsageError("spectrum needs --N (or --m0 for a ladder walk)")
    if spec.name == "aq1":
        rep = reps.build_aq1_unirrep(args.N, args.delta, ctx)
    elif spec.name == "suq2":
        rep = reps.build_suq2_unirrep(args.N, ctx)
    else:
        raise UsageError("explicit unirrep matrices are built for aq1 and suq2 only; use --m0 for ladders")
    rows = [("n", "weight", "m")]
    rows += [(n, float(w), float(m)) for n, (w, m) in enumerate(zip(rep.weights, rep.j0_eigs))]
    if args.format == "json":
        payload = {"algebra": spec.name, "q": ctx.q, "N": rep.N, "delta": rep.delta,
                   "weights": rep.weights.tolist(), "j0": rep.j0_eigs.tolist(),
                   "casimir": rep.casimir, "boundary": boundary}
        _emit(_dumps(payload), args.out)
    else:
        notes = [f"casimir: {rep.casimir!r}"]
        if boundary is not None:
            notes.append(f"boundary (q-1)^-1: {boundary!r}")
        _emit(_table(rows, args.format) + _trailer(args.format, *notes), args.out)
    return EXIT_OK


def _trailer(fmt, *lines) -> str:
    # summary lines go to stderr so csv output stays machine-readable
    if fmt == "csv":
        for line in lines:
            print(line, file=sys.stderr)
        return ""
    return "".join(line + "\n" for line in lines)


def _table(rows, fmt) -> str:
    buf = io.StringIO()
    if fmt == "csv":
        csv.writer(buf, lineterminator="\n").writerows(rows)
    else:
        for row in rows:
            buf.write("  ".join(f"{x!s:>22}" if not isinstance(x, str) else f"{x:>22}" for x in row) + "\n")
    return buf.getvalue()


# --- verify --------------------------------------------------------------------

def _grid(args, arity: int) -> list[tuple[int, ...]]:
    explicit = [getattr(args, f"N{k}") for k in (1, 2, 3)][:arity]
    if any(v is not None for v in explicit):
        fill = next(v for v in explicit if v is not None)
        return [tuple(fill if v is None else v for v in explicit)]
    return list(itertools.product(range(args.max_N + 1), repeat=arity))


def _single_ns(args) -> list[int]:
    if args.N is not None:
        return [args.N]
    return list(range(args.max_N + 1))


def run_suite(name: str, args, ctx: QContext):
    tol = args.tol
    if name == "algebra":
        rng = np.random.default_rng(0)
        samples = rng.uniform(-5.0, 5.0, 100)
        for alg in CATALOG_NAMES:
            c = QContext(ctx.q, ctx.p if ctx.p is not None else 0.7, ctx.tol_abs, ctx.tol_rel)
            r = check_consistency(make_catalog_algebra(alg, c), samples)
            yield CheckRecord(f"consistency[{alg}]", (), (), ctx.q, r.max_residual, r.passed)
        for N in _single_ns(args):
            su = reps.build_suq2_unirrep(N, ctx)
            for d in (1, -1):
                mapped = reps.apply_map_p_delta(su, d)
                direct = reps.build_aq1_unirrep(N, d, ctx)
                res = max(np.max(np.abs(mapped.j0_eigs - direct.j0_eigs)),
                          np.max(np.abs(mapped.Jp - direct.Jp)), np.max(np.abs(mapped.Jm - direct.Jm)))
                yield CheckRecord("map-p-delta", (d,), (N + 1,), ctx.q, float(res), bool(res <= ctx.tolerance(1.0)))
                back = map_g(direct.j0_eigs, ctx)
                res = float(np.max(np.abs(back - direct.weights)))
                yield CheckRecord("map-g-roundtrip", (d,), (N + 1,), ctx.q, res, res <= ctx.tolerance(1.0))
                t = reps.transmute_check(direct)
                yield CheckRecord("transmutation", (d,), (N + 1,), ctx.q, max(t.residuals.values()), t.passed)
    elif name == "commutation":
        for N in _single_ns(args):
            for d in (1, -1):
                rep = reps.build_aq1_unirrep(N, d, ctx)
                res = max(reps.rep_commutation_residuals(rep).values())
                limit = tol if tol is not None else ctx.tolerance(float(np.max(np.abs(rep.j0_eigs))))
                yield CheckRecord("commutation", (d,), (N + 1,), ctx.q, res, res <= limit)
    elif name == "casimir":
        for N in _single_ns(args):
            for d in (1, -1):
                rep = reps.build_aq1_unirrep(N, d, ctx)
                c = reps.casimir_check(rep)
                oracle = q_number(N / 2.0, ctx) * q_number(N / 2.0 + 1.0, ctx)
                res = max(c.off_scalar, c.alt_form, abs(rep.casimir - oracle))
                limit = tol if tol is not None else ctx.tolerance(abs(oracle))
                yield CheckRecord("casimir", (d,), (N + 1,), ctx.q, res, res <= limit)
    elif name == "hopf":
        for Ns in _grid(args, 3):
            yield from hopf.check_hopf_axioms([reps.build_aq1_unirrep(N, 1, ctx) for N in Ns], tol)
    elif name == "rmatrix":
        for Ns in _grid(args, 2):
            pair = [reps.build_aq1_unirrep(N, 1, ctx) for N in Ns]
            yield from hopf.check_r_matrix(pair, tol)
            yield from hopf.check_r_counit_antipode(pair, tol)
        for Ns in _grid(args, 3):
            yield from hopf.check_r_fission([reps.build_aq1_unirrep(N, 1, ctx) for N in Ns], tol)
    elif name == "ybe":
        for Ns in _grid(args, 3):
            yield from hopf.ybe_sweep([reps.build_aq1_unirrep(N, 1, ctx) for N in Ns], tol)
    elif name == "coupling":
        for N1, N2 in _grid(args, 2):
            for z, e, d in itertools.product((1, -1), repeat=3):
                yield from coupling.verify_coupled_action(
                    reps.build_aq1_unirrep(N1, z, ctx), reps.build_aq1_unirrep(N2, e, ctx), d, tol)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown suite {name!r}")


def cmd_verify(args) -> int:
    ctx = _context(args)
    if args.max_N < 0:
        raise UsageError("--max-N must be nonnegative")
    suites = SUITES if args.suite == "all" else (args.suite,)
    failed = 0
    total = 0
    sink = sys.stdout if args.out is None else open(args.out, "w", encoding="utf-8")
    try:
        for suite in suites:
            for rec in run_suite(suite, args, ctx):
                total += 1
                failed += not rec.passed
                sink.write(json.dumps({"suite": suite, **rec.to_dict()}) + "\n")
                sink.flush()
    finally:
        if sink is not sys.stdout:
            sink.close()
    print(f"{total - failed}/{total} checks passed", file=sys.stderr)
    return EXIT_OK if failed == 0 else EXIT_FAIL


# --- export --------------------------------------------------------------------

def cmd_export(args) -> int:
    ctx = _context(args)
    if args.object == "rep":
        if args.N is None:
            raise UsageError("export rep needs --N")
        if args.algebra == "aq1":
            rep = reps.build_aq1_unirrep(args.N, args.delta, ctx)
        elif args.algebra == "suq2":
            rep = reps.build_suq2_unirrep(args.N, ctx)
        else:
            raise UsageError("export rep supports --algebra aq1 or suq2")
        payload = rep.to_dict()
    elif args.object == "rmatrix":
        N1, N2 = args.N1 or 0, args.N2 or 0
        a = reps.build_aq1_unirrep(N1, args.zeta, ctx)
        b = reps.build_aq1_unirrep(N2, args.eta, ctx)
        R = RSeries(args.zeta, args.eta, ctx).evaluate(Realization.of(a), Realization.of(b))
        payload = {"zeta": args.zeta, "eta": args.eta, "N1": N1, "N2": N2, "q": ctx.q, "R": R.tolist()}
    else:
        N1, N2 = args.N1 or 0, args.N2 or 0
        table, _ = coupling.couple(reps.build_aq1_unirrep(N1, args.zeta, ctx),
                                   reps.build_aq1_unirrep(N2, args.eta, ctx), args.delta)
        payload = table.to_dict()
    _emit(_dumps(payload), args.out)
    return EXIT_OK


# --- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=float, default=0.5, help="deformation parameter in (0, 1)")
    common.add_argument("--p", type=float, default=None, help="second parameter (a3pq1)")
    common.add_argument("--tol", type=float, default=None, help="absolute tolerance override")
    common.add_argument("--out", default=None, help="write output to this path")
    common.add_argument("--json", action="store_true", help="JSON output where applicable")

    dims = argparse.ArgumentParser(add_help=False)
    dims.add_argument("--N", type=int, default=None)
    dims.add_argument("--N1", type=int, default=None)
    dims.add_argument("--N2", type=int, default=None)
    dims.add_argument("--N3", type=int, default=None)
    for flag in ("delta", "zeta", "eta", "mu"):
        dims.add_argument(f"--{flag}", type=colour_arg, default=1)

    parser = argparse.ArgumentParser(prog="qdef", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="list the catalog algebras")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("spectrum", parents=[common, dims], help="J0 spectrum or ladder chains")
    p.add_argument("--algebra", default="aq1", choices=CATALOG_NAMES)
    p.add_argument("--m0", type=float, default=None, help="seed eigenvalue for a ladder walk")
    p.add_argument("--casimir", type=float, default=None, help="Casimir value for ladder termination")
    p.add_argument("--max-steps", dest="max_steps", type=int, default=10)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", parents=[common, dims], help="run identity checks")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--max-N", dest="max_N", type=int, default=2)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", parents=[common, dims], help="write a rep, R-matrix or Wigner table as JSON")
    p.add_argument("object", choices=("rep", "rmatrix", "wigner"))
    p.add_argument("--algebra", default="aq1", choices=CATALOG_NAMES)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.command == "spectrum" and args.json:
        args.format = "json"
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qdef: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"qdef: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
