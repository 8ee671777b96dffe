"""fcq: compute in the implemented algebras and run the verification suite.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error,
3 evaluation or internal error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from fcq.checks import REGISTRY, run_check
from fcq.cli.expr import EvalError, ParseError, evaluate, int_value, parse
from fcq.coop import A_VAR, H_VAR, CohomRing, OperationImage, as_hbar, st_in, steenrod_P
from fcq.exactalg.field import is_prime
from fcq.exactalg.poly import Poly
from fcq.ore.coulomb import CoulombElement, NotInCoulomb
from fcq.ore.qtorus import QTorusElement, k_basis
from fcq.ore.weyl import WeylElement

SCHEMA = "fcq/1"
DEFAULT_GRID = {"p": [3, 5], "r": [1, 2, 3], "n": [2, 3, 4, 6]}
ALGEBRAS = ("weyl", "qtorus", "coulomb", "cohom")


class UsageError(Exception):
    pass


def int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _single(values: list[int] | None, flag: str, default: int | None) -> int | None:
    if not values:
        return default
    if len(values) > 1:
        raise UsageError(f"{flag} takes a single value for compute")
    return values[0]


def _check_p(p: int) -> int:
    if p % 2 == 0 or not is_prime(p):
        raise UsageError(f"--p must be an odd prime, got {p}")
    return p


# -- compute ------------------------------------------------------------------

def _weyl_context(args):
    p = _single(args.p, "--p", 0)
    if p:
        _check_p(p)
    names = {"x": WeylElement.x(1, p), "d": WeylElement.d(1, p), "h": WeylElement.hbar(p),
             "hbar": WeylElement.hbar(p), "w": WeylElement.w(p)}
    return names, {}, lambda c: WeylElement.const(c, p), {"p": p or None}


def _qtorus_context(args):
    cyc = _single(args.n, "--n", 0)
    r = _single(args.r, "--r", 1)
    if cyc < 0 or r < 0:
        raise UsageError("--n and --r must be nonnegative")
    names = {"x": QTorusElement.x(1, cyc), "y": QTorusElement.y(1, cyc), "q": QTorusElement.q(1, cyc)}
    funcs = {"f": lambda m: k_basis(r, int_value(m), cyc)}
    return names, funcs, lambda c: QTorusElement.const(c, cyc), {"r": r, "n": cyc or None}


def _coulomb_context(args):
    p = _check_p(_single(args.p, "--p", 3))
    r = _single(args.r, "--r", 1)
    if r < 0:
        raise UsageError("--r must be nonnegative")
    names = {"w": CoulombElement.w(r, p), "h": CoulombElement.hbar(r, p), "hbar": CoulombElement.hbar(r, p)}
    funcs = {"e": lambda n: CoulombElement.e(r, p, int_value(n))}
    return names, funcs, lambda c: CoulombElement.const(r, p, c), {"r": r, "p": p}


def _cohom_context(args):
    p = _check_p(_single(args.p, "--p", 3))
    R = CohomRing(p)
    V = R.image_vars

    def lift(c):
        return Poly.const(V, c, p) if isinstance(c, int) else c

    def restrict(f) -> Poly:
        f = lift(f)
        if f.degree(A_VAR) > 0 or f.degree(H_VAR) > 0:
            raise EvalError("operations apply to elements of F_p[b] only")
        return Poly(R.vars, {e[: len(R.vars)]: c for e, c in f.terms.items()}, p)

    def ev(node):
        return evaluate(node, names, funcs)

    names = {g: Poly.var(V, g, p) for g in V}
    names["hbar"] = names[H_VAR]
    funcs = {
        "St": lambda f: st_in(R, restrict(ev(f))).poly,
        "P": lambda s, f: steenrod_P(R, int_value(s), restrict(ev(f))).embed(V),
        "AS": lambda f: as_hbar(restrict(ev(f)), hbar=H_VAR).embed(V),
    }
    return names, funcs, lift, {"p": p}


def cmd_compute(args) -> tuple[int, str]:
    try:
        ast = parse(args.expression)
    except ParseError as exc:
        return 2, f"parse error: {exc}"
    try:
        names, funcs, lift, cfg = CONTEXTS[args.alg](args)
    except UsageError as exc:
        return 2, f"usage error: {exc}"
    try:
        value = evaluate(ast, names, funcs)
        if isinstance(value, int):
            value = lift(value)
        if args.alg == "cohom":
            value = OperationImage.of(value).poly
    except EvalError as exc:
        return 3, f"evaluation error: {exc}"
    except (ArithmeticError, ValueError, NotInCoulomb, TypeError) as exc:
        return 3, f"evaluation error: {exc}"
    text = str(value)
    if args.format == "text":
        return 0, text
    doc = {"schema": SCHEMA, "command": "compute", "alg": args.alg, "config": cfg,
           "expression": args.expression, "result": value.to_json(), "text": text}
    return 0, json.dumps(doc, indent=2, sort_keys=True)


CONTEXTS = {"weyl": _weyl_context, "qtorus": _qtorus_context, "coulomb": _coulomb_context, "cohom": _cohom_context}


# -- verify --------------------------------------------------------------------

def _run_task(task):
    check_id, params, seed, max_degree = task
    start = time.perf_counter()
    try:
        rep = run_check(check_id, params, seed=seed, max_degree=max_degree)
        return rep, None, time.perf_counter() - start
    except Exception as exc:  # reported, not raised: exit code 3
        return None, f"{type(exc).__name__}: {exc}", time.perf_counter() - start


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("FCQ_THREADS", "1")))
    except ValueError:
        return 1


def _grid(args) -> dict[str, list[int]]:
    grid = {k: (getattr(args, k) or v) for k, v in DEFAULT_GRID.items()}
    for p in grid["p"]:
        _check_p(p)
    if any(r < 0 for r in grid["r"]):
        raise UsageError("--r values must be nonnegative")
    if any(n < 1 for n in grid["n"]):
        raise UsageError("--n values must be positive")
    if args.max_degree is not None and args.max_degree < 1:
        raise UsageError("--max-degree must be at least 1")
    return grid


def select_checks(args) -> list[str]:
    if args.all:
        return list(REGISTRY)
    ids = [t.strip() for t in (args.only or "").split(",") if t.strip()]
    if not ids:
        raise UsageError("no checks selected; use --all or --only <id,...>")
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        raise UsageError(f"unknown check id(s): {', '.join(unknown)}")
    return [i for i in REGISTRY if i in ids]


def cmd_verify(args) -> tuple[int, str]:
    try:
        ids = select_checks(args)
        grid = _grid(args)
    except UsageError as exc:
        return 2, f"usage error: {exc}"
    tasks = []
    for cid in ids:
        spec = REGISTRY[cid]
        for vals in itertools.product(*(grid[g] for g in spec.grid)):
            tasks.append((cid, dict(zip(spec.grid, vals)), args.seed, args.max_degree))
    threads = _threads()
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(_run_task, tasks))
    else:
        outcomes = [_run_task(t) for t in tasks]

    results, groups = [], []
    n_fail = n_err = 0
    for (cid, params, _, _), (rep, err, elapsed) in zip(tasks, outcomes):
        group = {"check": cid, "params": params}
        if args.timings:
            group["elapsed"] = round(elapsed, 6)
        if err is not None:
            n_err += 1
            group["status"] = "error"
            group["error"] = err
            results.append({"check": cid, "params": params, "name": "(evaluation)", "status": "error",
                            "witness": err})
        else:
            group["status"] = "pass" if rep.passed else "fail"
            for c in rep.checks:
                entry = {"check": cid, "params": params, "name": c.name, "status": "pass" if c.passed else "fail"}
                if not c.passed:
                    n_fail += 1
                    entry["witness"] = c.to_json().get("witness")
                results.append(entry)
        groups.append(group)
    code = 3 if n_err else 1 if n_fail else 0
    summary = {"total": len(results), "passed": sum(r["status"] == "pass" for r in results),
               "failed": n_fail, "errors": n_err}
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": "verify", "passed": code == 0,
               "config": {"checks": ids, "seed": args.seed, "max_degree": args.max_degree, **grid},
               "summary": summary, "groups": groups, "results": results}
        return code, json.dumps(doc, indent=2, sort_keys=True)
    lines = []
    for r in results:
        mark = {"pass": "ok  ", "fail": "FAIL", "error": "ERR "}[r["status"]]
        where = " ".join(f"{k}={v}" for k, v in r["params"].items())
        lines.append(f"[{mark}] {r['check']}{' ' + where if where else ''}: {r['name']}")
        if r["status"] != "pass" and r.get("witness") is not None:
            lines.append(f"         witness: {json.dumps(r['witness'], sort_keys=True)}")
    if args.timings:
        for g in groups:
            where = " ".join(f"{k}={v}" for k, v in g["params"].items())
            lines.append(f"time {g['check']} {where}: {g['elapsed']:.3f}s")
    lines.append(f"{summary['passed']}/{summary['total']} checks passed, {n_fail} failed, {n_err} errors "
                 f"(seed {args.seed})")
    return code, "\n".join(lines)


# -- describe ------------------------------------------------------------------

def cmd_describe(args) -> tuple[int, str]:
    if args.check_id is None:
        if args.format == "json":
            return 0, json.dumps({"schema": SCHEMA, "checks": list(REGISTRY)}, indent=2)
        return 0, "\n".join(f"{cid:28s} {spec.summary}" for cid, spec in REGISTRY.items())
    spec = REGISTRY.get(args.check_id)
    if spec is None:
        return 2, f"usage error: unknown check id {args.check_id!r}"
    if args.format == "json":
        doc = {"schema": SCHEMA, "id": spec.id, "summary": spec.summary, "statement": spec.statement,
               "grid": list(spec.grid), "options": list(spec.extra)}
        return 0, json.dumps(doc, indent=2, sort_keys=True)
    lines = [f"{spec.id}: {spec.summary}", f"  certifies: {spec.statement}",
             f"  ranges over: {', '.join(spec.grid) or 'nothing (single run)'}"]
    if spec.extra:
        lines.append(f"  options: {', '.join(spec.extra)}")
    return 0, "\n".join(lines)


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int_list, help="odd prime(s), comma separated")
    common.add_argument("--r", type=int_list, help="Coulomb / quantum torus rank parameter(s)")
    common.add_argument("--n", type=int_list, help="root-of-unity order(s)")
    common.add_argument("--max-degree", type=int, default=None, help="degree cutoff for checks that take one")
    common.add_argument("--format", choices=["json", "text"], default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    ap = argparse.ArgumentParser(prog="fcq", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="evaluate an expression in normal form")
    c.add_argument("--alg", choices=ALGEBRAS, required=True)
    c.add_argument("expression")

    v = sub.add_parser("verify", parents=[common], help="run verification checks over a parameter grid")
    v.add_argument("--all", action="store_true", help="run every check")
    v.add_argument("--only", help="comma-separated check ids")
    v.add_argument("--timings", action="store_true", help="include elapsed times (output no longer reproducible)")

    d = sub.add_parser("describe", parents=[common], help="explain what a check certifies")
    d.add_argument("check_id", nargs="?")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    handler = {"compute": cmd_compute, "verify": cmd_verify, "describe": cmd_describe}[args.command]
    try:
        code, out = handler(args)
    except UsageError as exc:
        code, out = 2, f"usage error: {exc}"
    stream = sys.stdout if code in (0, 1) else sys.stderr
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
