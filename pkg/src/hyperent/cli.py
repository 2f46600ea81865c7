"""Command-line interface: ``hyperent <command> ...``.

Exit codes
----------
0  success (``convertible``: YES; ``invariance-check``: passed)
1  negative answer (``convertible``: NO; ``invariance-check``: a trial failed)
2  command-line usage error
3  input file missing or unreadable
4  malformed state, operation or point file
5  format not accepted by the command
6  hyperdeterminant does not exist for the format (polygon inequality)
7  ``apply --check-invertible`` found a singular factor
8  invalid state (e.g. the zero tensor) or unknown class name
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .classify import classes_for_format, classify, classify_report, entanglement_class
from .hyperdet import (
    HyperdetNotImplemented,
    PolygonInequalityViolated,
    concurrence,
    concurrence_sq,
    hyperdet,
    tangle,
    tangle_sq,
)
from .linalg import local_ranks
from .orbit_order import can_degrade, class_dag, order_diagram, to_dot
from .rng import random_invertible_operation, random_state
from .scalars import format_scalar
from .singularity import (
    format_pattern,
    hessian_det,
    hessian_matrix,
    is_critical_point,
    separability_pattern,
)
from .stateio import StateFileError, parse_operation, parse_point, parse_state, serialize_state
from .tensor import FormatError, apply_local, gradient, multilinear_eval

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_PARSE = 4
EXIT_FORMAT = 5
EXIT_NO_HYPERDET = 6
EXIT_SINGULAR_OP = 7
EXIT_INVALID = 8


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc.strerror or exc}") from None


def _load_state(path: str):
    try:
        return parse_state(_read(path))
    except StateFileError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from None


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _scalar_or_none(v):
    return None if v is None else format_scalar(v)


def cmd_hyperdet(args) -> int:
    a = _load_state(args.file)
    res = hyperdet(a, parallel=args.parallel)
    verdict = "zero" if res.is_zero else "nonzero"
    payload = {
        "format": list(a.dims),
        "value": format_scalar(res.value),
        "degree": res.degree,
        "zero": res.is_zero,
        "permutation": list(res.permutation),
    }
    _emit(args, payload, f"Det={format_scalar(res.value)} degree={res.degree} {verdict}")
    return EXIT_OK


def cmd_classify(args) -> int:
    a = _load_state(args.file)
    rep = classify_report(a)
    payload = {
        "format": list(a.dims),
        "class": rep.name,
        "dimension": rep.dimension,
        "local_ranks": list(rep.local_ranks),
        "pattern": [list(b) for b in rep.pattern],
        "hyperdet": _scalar_or_none(rep.hyperdet),
        "permutation": list(rep.permutation),
        "notes": list(rep.notes),
    }
    text = (
        f"{rep.name} dim={rep.dimension} ranks={','.join(map(str, rep.local_ranks))} "
        f"pattern={format_pattern(rep.pattern)}"
    )
    if rep.hyperdet is not None:
        text += f" Det={format_scalar(rep.hyperdet)}"
    if rep.permutation and rep.permutation != tuple(range(a.order)):
        text += f" permutation={','.join(str(p + 1) for p in rep.permutation)}"
    for note in rep.notes:
        text += f"\nnote: {note}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_ranks(args) -> int:
    a = _load_state(args.file)
    r = local_ranks(a)
    _emit(args, {"format": list(a.dims), "local_ranks": list(r)}, "ranks=" + ",".join(map(str, r)))
    return EXIT_OK


def cmd_separability(args) -> int:
    a = _load_state(args.file)
    p = separability_pattern(a)
    payload = {
        "format": list(a.dims),
        "pattern": [list(b) for b in p],
        "fully_separable": len(p) == a.order,
        "genuinely_entangled": len(p) == 1,
    }
    _emit(args, payload, f"pattern={format_pattern(p)}")
    return EXIT_OK


def cmd_measure(args) -> int:
    a = _load_state(args.file)
    if a.dims == (2, 2):
        name, sq, mod = "concurrence", concurrence_sq(a), concurrence(a)
        label = "C"
    elif a.dims == (2, 2, 2):
        name, sq, mod = "tangle", tangle_sq(a), tangle(a)
        label = "tau"
    else:
        raise CliError(EXIT_FORMAT, f"measure needs format 2x2 or 2x2x2, got {a.format}")
    sq_text = format_scalar(sq)
    payload = {"format": list(a.dims), "measure": name, "squared": sq_text, "modulus": mod}
    _emit(args, payload, f"{label}^2={sq_text} {label}~{mod:.12g}")
    return EXIT_OK


def cmd_apply(args) -> int:
    a = _load_state(args.file)
    try:
        op = parse_operation(_read(args.op), a.dims)
    except StateFileError as exc:
        raise CliError(EXIT_PARSE, f"{args.op}: {exc}") from None
    dets = op.determinants()
    invertible = all(not d.is_zero() for d in dets)
    if args.check_invertible and not invertible:
        bad = [j for j, d in enumerate(dets, 1) if d.is_zero()]
        raise CliError(EXIT_SINGULAR_OP, f"operation factors {bad} are singular")
    out = serialize_state(apply_local(a, op))
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    if args.json:
        payload = {
            "state": out,
            "invertible": invertible,
            "factor_determinants": [format_scalar(d) for d in dets],
        }
        print(json.dumps(payload, sort_keys=True))
    elif not args.output:
        sys.stdout.write(out)
    return EXIT_OK


def _dims(values: Sequence[int]) -> tuple[int, ...]:
    return tuple(values)


def _class(dims, name):
    try:
        return entanglement_class(dims, name)
    except KeyError as exc:
        raise CliError(EXIT_INVALID, str(exc.args[0])) from None


def cmd_convertible(args) -> int:
    dims = _dims(args.format)
    src, dst = _class(dims, args.source), _class(dims, args.target)
    ok = can_degrade(src, dst)
    payload = {"format": list(dims), "from": src.name, "to": dst.name, "convertible": ok}
    _emit(args, payload, "YES" if ok else "NO")
    return EXIT_OK if ok else EXIT_NO


def cmd_order(args) -> int:
    dims = _dims(args.format)
    if args.dot:
        sys.stdout.write(to_dot(dims))
        return EXIT_OK
    dag = class_dag(dims)
    payload = {
        "format": list(dims),
        "nodes": [{"name": c.name, "dimension": c.dimension} for c in classes_for_format(dims)],
        "edges": [{"from": e.source, "to": e.target, "derived": e.derived} for e in dag.edges],
    }
    text = "\n".join(f"{s} -> {t}" for s, t in order_diagram(dims))
    _emit(args, payload, text)
    return EXIT_OK


def cmd_random(args) -> int:
    a = random_state(_dims(args.format), args.seed, args.bound)
    out = serialize_state(a)
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    if args.json:
        print(json.dumps({"state": out}, sort_keys=True))
    elif not args.output:
        sys.stdout.write(out)
    return EXIT_OK


def cmd_check_critical(args) -> int:
    a = _load_state(args.file)
    try:
        x = parse_point(_read(args.point), a.dims)
    except StateFileError as exc:
        raise CliError(EXIT_PARSE, f"{args.point}: {exc}") from None
    crit = is_critical_point(a, x)
    value = multilinear_eval(a, x)
    grad = gradient(a, x)
    payload = {
        "format": list(a.dims),
        "critical": crit,
        "value": format_scalar(value),
        "gradient": [[format_scalar(g) for g in slot] for slot in grad],
        "hessian": None,
        "hessian_det": None,
        "chart_hessian_det": None,
    }
    lines = [f"critical={'yes' if crit else 'no'} F={format_scalar(value)}"]
    if crit:
        h = hessian_matrix(a, x)
        hd = hessian_det(a, x)
        chd = hessian_det(a, x, chart=True)
        payload["hessian"] = [[format_scalar(v) for v in h.row(i)] for i in range(h.rows)]
        payload["hessian_det"] = format_scalar(hd)
        payload["chart_hessian_det"] = format_scalar(chd)
        lines.append(f"hessian_det={format_scalar(hd)} chart_hessian_det={format_scalar(chd)}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_invariance_check(args) -> int:
    a = _load_state(args.file)
    base = classify(a)
    failures = []
    for t in range(args.trials):
        op = random_invertible_operation(a.dims, (args.seed << 20) + t, args.bound)
        got = classify(apply_local(a, op))
        if got != base:
            failures.append({"trial": t, "class": got.name})
    passed = not failures
    payload = {
        "class": base.name,
        "trials": args.trials,
        "failures": failures,
        "passed": passed,
    }
    _emit(args, payload, f"{'PASS' if passed else 'FAIL'} class={base.name} trials={args.trials} failures={len(failures)}")
    return EXIT_OK if passed else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperent", description="Hyperdeterminants and SLOCC classes of small multipartite states.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("hyperdet", cmd_hyperdet, "exact hyperdeterminant, degree and zero verdict")
    sp.add_argument("file")
    sp.add_argument("--parallel", action="store_true", help="evaluate pencil samples concurrently")

    add("classify", cmd_classify, "SLOCC class, dimension, local ranks, separability").add_argument("file")
    add("ranks", cmd_ranks, "local ranks").add_argument("file")
    add("separability", cmd_separability, "finest product partition").add_argument("file")
    add("measure", cmd_measure, "squared concurrence / 3-tangle").add_argument("file")

    sp = add("apply", cmd_apply, "apply a local operation to a state")
    sp.add_argument("file")
    sp.add_argument("--op", required=True)
    sp.add_argument("--check-invertible", action="store_true")
    sp.add_argument("-o", "--output")

    sp = add("convertible", cmd_convertible, "can class A degrade to class B")
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("--format", type=int, nargs="+", required=True)

    sp = add("order", cmd_order, "degradation diagram")
    sp.add_argument("--format", type=int, nargs="+", required=True)
    sp.add_argument("--dot", action="store_true")

    sp = add("random", cmd_random, "seeded random state")
    sp.add_argument("--format", type=int, nargs="+", required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--bound", type=int, default=3)
    sp.add_argument("-o", "--output")

    sp = add("check-critical", cmd_check_critical, "critical point and Hessian report")
    sp.add_argument("file")
    sp.add_argument("--point", required=True)

    sp = add("invariance-check", cmd_invariance_check, "classification under random invertible operations")
    sp.add_argument("file")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--trials", type=int, default=50)
    sp.add_argument("--bound", type=int, default=3)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"hyperent: {exc}", file=sys.stderr)
        return exc.code
    except PolygonInequalityViolated as exc:
        print(f"hyperent: {exc}", file=sys.stderr)
        return EXIT_NO_HYPERDET
    except (FormatError, HyperdetNotImplemented) as exc:
        print(f"hyperent: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except ValueError as exc:
        print(f"hyperent: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
