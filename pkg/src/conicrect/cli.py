"""Command-line interface.

Usage:
    conicrect agm --p 1 --q 0.8 --tol 1e-15 --json
    conicrect ellint K --k 0.70710678118654752
    conicrect ellint F --k 0.8 --phi 0.7853981633974483
    conicrect excess closed --a 1 --b 2.8284271247461903
    conicrect excess landen --m 2 --n 1 --json
    conicrect check landen-theorem --m 2 --n 1 --t 0.5
    conicrect lemniscate --radius 1
    conicrect table --op ellint-K --sweep k --from 0.1 --to 0.9 --step 0.1 --format csv
    conicrect construct --m 2 --n 1 --t 0.5 --out figure.svg

Exit codes: 0 success (for ``check``: residual within tolerance), 1 check
failed, 2 domain or usage error, 3 convergence failure.  All numeric output
carries full double precision and no environment variable affects it.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field

from . import conics as _conics
from . import construction as _construction
from . import landen as _landen
from .agm import (
    DEFAULT_AGM_TOLERANCE,
    agm,
    complete_E,
    complete_K,
    incomplete_E,
    incomplete_F,
    lemniscate,
)
from .errors import ConvergenceError, DomainError
from .quadrature import Tolerance

SCHEMA_VERSION = 1

CHECK_DEFAULT_TOL = {
    "gleichung": 1e-12,
    "borwein": 1e-12,
    "agm-invariance": 1e-10,
    "landen-theorem": 1e-9,
    "fagnano": 1e-9,
}


@dataclass
class RunReport:
    """One command's result, JSON-serializable at full double precision."""

    op: str
    inputs: dict[str, float]
    values: dict[str, object]
    residual: float | None = None
    iterations: int | None = None
    flags: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        payload = {"schema_version": SCHEMA_VERSION, **asdict(self)}
        return json.dumps(payload, sort_keys=True)

    def to_plain(self) -> str:
        parts = [f"{name}={value!r}" for name, value in self.inputs.items()]
        head = f"{self.op}({', '.join(parts)})"
        lines = []
        for name, value in self.values.items():
            if isinstance(value, float):
                lines.append(f"{head} {name} = {value!r}")
            elif name != "iterates":
                lines.append(f"{head} {name} = {value}")
        if self.residual is not None:
            lines.append(f"{head} residual = {self.residual!r}")
        if self.iterations is not None:
            lines.append(f"{head} iterations = {self.iterations}")
        for flag in self.flags:
            lines.append(f"{head} warning: {flag}")
        return "\n".join(lines)


def _emit(report: RunReport, as_json: bool) -> None:
    print(report.to_json() if as_json else report.to_plain())


def _cmd_agm(args: argparse.Namespace) -> int:
    tol = (
        Tolerance(abs_tol=args.tol, rel_tol=0.0, max_iter=60)
        if args.tol is not None
        else DEFAULT_AGM_TOLERANCE
    )
    seq = agm(args.p, args.q, tol)
    report = RunReport(
        op="agm",
        inputs={"p": args.p, "q": args.q},
        values={
            "limit": seq.limit,
            "iterates": [[pn, qn] for pn, qn in seq.iterates],
        },
        iterations=seq.iterations,
        flags=["inputs-swapped"] if seq.swapped else [],
    )
    _emit(report, args.json)
    return 0


def _cmd_ellint(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind in ("F", "Einc") and args.phi is None:
        raise DomainError(f"ellint {kind} requires --phi")
    if kind == "K":
        value = complete_K(args.k)
        inputs = {"k": args.k}
    elif kind == "E":
        value = complete_E(args.k)
        inputs = {"k": args.k}
    elif kind == "F":
        value = incomplete_F(args.phi, args.k)
        inputs = {"k": args.k, "phi": args.phi}
    else:
        value = incomplete_E(args.phi, args.k)
        inputs = {"k": args.k, "phi": args.phi}
    _emit(RunReport(op=f"ellint-{kind}", inputs=inputs, values={"value": value}), args.json)
    return 0


def _semiaxes_from_args(args: argparse.Namespace) -> tuple[float, float, dict[str, float]]:
    has_ab = args.a is not None and args.b is not None
    has_mn = args.m is not None and args.n is not None
    if has_ab == has_mn:
        raise DomainError("provide exactly one of (--a, --b) or (--m, --n)")
    if has_ab:
        return args.a, args.b, {"a": args.a, "b": args.b}
    pair = _conics.LandenPair(args.m, args.n)
    a, b = _conics.pair_to_semiaxes(pair)
    return a, b, {"m": args.m, "n": args.n}


def _cmd_excess(args: argparse.Namespace) -> int:
    a, b, inputs = _semiaxes_from_args(args)
    hyp = _conics.Hyperbola(a, b)
    flags: list[str] = []
    if args.variant == "closed":
        value = _conics.excess_infinity_closed(hyp)
    elif args.variant == "series":
        inputs["terms"] = args.terms
        value = _conics.excess_infinity_series(hyp, args.terms)
    elif args.variant == "landen":
        value = _conics.excess_infinity_landen(_conics.semiaxes_to_pair(a, b))
    else:
        if args.p is None:
            raise DomainError("excess finite requires --p")
        inputs["p"] = args.p
        if _conics.pedal_in_guard_band(hyp, args.p):
            flags.append("pedal-distance-in-guard-band")
        value = _conics.excess_finite(hyp, args.p)
    _emit(
        RunReport(op=f"excess-{args.variant}", inputs=inputs, values={"value": value}, flags=flags),
        args.json,
    )
    return 0


def _cmd_lemniscate(args: argparse.Namespace) -> int:
    arcs = lemniscate(args.radius)
    _emit(
        RunReport(
            op="lemniscate",
            inputs={"radius": args.radius},
            values={
                "quarter_arc": arcs.quarter_arc,
                "full_arc": arcs.full_arc,
                "gauss_constant": arcs.gauss_constant,
            },
        ),
        args.json,
    )
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    name = args.name
    if name == "gleichung":
        report = _landen.check_gleichung(args.phi, args.k)
    elif name == "borwein":
        report = _landen.check_borwein(args.k)
    elif name == "agm-invariance":
        report = _landen.check_agm_invariance(args.x, args.p, args.q)
    elif name == "landen-theorem":
        _, report = _conics.landen_theorem_check(_conics.LandenPair(args.m, args.n), args.t)
    else:
        report = _conics.fagnano_check(_conics.LandenPair(args.m, args.n), args.t)
    tol = args.tol if args.tol is not None else CHECK_DEFAULT_TOL[name]
    passed = report.within(tol)
    verdict = "PASS" if passed else "FAIL"
    inputs = ", ".join(f"{k}={v!r}" for k, v in report.inputs.items())
    print(
        f"check {report.name}({inputs}): lhs={report.lhs!r} rhs={report.rhs!r} "
        f"residual={report.residual!r} tol={tol!r} {verdict}"
    )
    return 0 if passed else 1


_TABLE_OPS: dict[str, tuple[tuple[str, ...], object]] = {}


def _table_op(name: str, params: tuple[str, ...]):
    def wrap(fn):
        _TABLE_OPS[name] = (params, fn)
        return fn

    return wrap


@_table_op("agm", ("p", "q"))
def _table_agm(v: dict[str, float]) -> dict[str, float]:
    seq = agm(v["p"], v["q"])
    return {"limit": seq.limit, "iterations": float(seq.iterations)}


@_table_op("ellint-K", ("k",))
def _table_k(v: dict[str, float]) -> dict[str, float]:
    return {"value": complete_K(v["k"])}


@_table_op("ellint-E", ("k",))
def _table_e(v: dict[str, float]) -> dict[str, float]:
    return {"value": complete_E(v["k"])}


@_table_op("ellint-F", ("k", "phi"))
def _table_f(v: dict[str, float]) -> dict[str, float]:
    return {"value": incomplete_F(v["phi"], v["k"])}


@_table_op("ellint-Einc", ("k", "phi"))
def _table_einc(v: dict[str, float]) -> dict[str, float]:
    return {"value": incomplete_E(v["phi"], v["k"])}


@_table_op("excess-closed", ("a", "b"))
def _table_excess_closed(v: dict[str, float]) -> dict[str, float]:
    return {"value": _conics.excess_infinity_closed(_conics.Hyperbola(v["a"], v["b"]))}


@_table_op("excess-landen", ("m", "n"))
def _table_excess_landen(v: dict[str, float]) -> dict[str, float]:
    return {"value": _conics.excess_infinity_landen(_conics.LandenPair(v["m"], v["n"]))}


@_table_op("excess-finite", ("a", "b", "p"))
def _table_excess_finite(v: dict[str, float]) -> dict[str, float]:
    return {"value": _conics.excess_finite(_conics.Hyperbola(v["a"], v["b"]), v["p"])}


@_table_op("tangent-length", ("m", "n", "x"))
def _table_tangent(v: dict[str, float]) -> dict[str, float]:
    return {"value": _conics.ellipse_tangent_length(_conics.Ellipse(v["m"], v["n"]), v["x"])}


@_table_op("lemniscate", ("radius",))
def _table_lemniscate(v: dict[str, float]) -> dict[str, float]:
    arcs = lemniscate(v["radius"])
    return {
        "quarter_arc": arcs.quarter_arc,
        "full_arc": arcs.full_arc,
        "gauss_constant": arcs.gauss_constant,
    }


def _sweep_values(start: float, stop: float, step: float) -> list[float]:
    if step <= 0.0:
        raise DomainError(f"step must be positive, got {step!r}")
    if stop < start:
        raise DomainError(f"sweep range is empty: from {start!r} to {stop!r}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(count)]


def _cmd_table(args: argparse.Namespace) -> int:
    if args.op not in _TABLE_OPS:
        raise DomainError(
            f"unknown table op {args.op!r}; choose from {sorted(_TABLE_OPS)}"
        )
    params, fn = _TABLE_OPS[args.op]
    if args.sweep not in params:
        raise DomainError(f"op {args.op!r} sweeps one of {params}, got {args.sweep!r}")
    fixed: dict[str, float] = {}
    for name in params:
        if name == args.sweep:
            continue
        value = getattr(args, name, None)
        if value is None:
            raise DomainError(f"op {args.op!r} requires --{name}")
        fixed[name] = value
    rows = []
    for v in _sweep_values(args.sweep_from, args.sweep_to, args.step):
        point = dict(fixed)
        point[args.sweep] = v
        rows.append((v, point, fn(point)))
    header = [args.sweep, *fixed.keys(), *rows[0][2].keys()]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for v, point, outputs in rows:
            writer.writerow(
                [repr(v)] + [repr(point[name]) for name in fixed] + [repr(o) for o in outputs.values()]
            )
        sys.stdout.write(buf.getvalue())
    else:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "op": args.op,
            "sweep": args.sweep,
            "rows": [
                {args.sweep: v, **{k: point[k] for k in fixed}, **outputs}
                for v, point, outputs in rows
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    pair = _conics.LandenPair(args.m, args.n)
    svg = _construction.render_svg(pair, args.t)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        raise DomainError(f"cannot write {args.out}: {exc}") from exc
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conicrect",
        description="Elliptic integrals, conic rectification, and identity checks.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_agm = sub.add_parser("agm", help="arithmetic-geometric mean with history")
    p_agm.add_argument("--p", type=float, required=True)
    p_agm.add_argument("--q", type=float, required=True)
    p_agm.add_argument("--tol", type=float, default=None)
    p_agm.add_argument("--json", action="store_true")
    p_agm.set_defaults(func=_cmd_agm)

    p_ell = sub.add_parser("ellint", help="complete/incomplete elliptic integrals")
    p_ell.add_argument("kind", choices=["K", "E", "F", "Einc"])
    p_ell.add_argument("--k", type=float, required=True)
    p_ell.add_argument("--phi", type=float, default=None)
    p_ell.add_argument("--json", action="store_true")
    p_ell.set_defaults(func=_cmd_ellint)

    p_exc = sub.add_parser("excess", help="hyperbolic excess in its four forms")
    p_exc.add_argument("variant", choices=["closed", "series", "landen", "finite"])
    p_exc.add_argument("--a", type=float, default=None)
    p_exc.add_argument("--b", type=float, default=None)
    p_exc.add_argument("--m", type=float, default=None)
    p_exc.add_argument("--n", type=float, default=None)
    p_exc.add_argument("--terms", type=int, default=3, choices=[1, 2, 3])
    p_exc.add_argument("--p", type=float, default=None)
    p_exc.add_argument("--json", action="store_true")
    p_exc.set_defaults(func=_cmd_excess)

    p_chk = sub.add_parser("check", help="residual checks; exit 0 iff within tolerance")
    chk_sub = p_chk.add_subparsers(dest="name", required=True)
    c = chk_sub.add_parser("gleichung")
    c.add_argument("--phi", type=float, required=True)
    c.add_argument("--k", type=float, required=True)
    c.add_argument("--tol", type=float, default=None)
    c.set_defaults(func=_cmd_check)
    c = chk_sub.add_parser("borwein")
    c.add_argument("--k", type=float, required=True)
    c.add_argument("--tol", type=float, default=None)
    c.set_defaults(func=_cmd_check)
    c = chk_sub.add_parser("agm-invariance")
    c.add_argument("--x", type=float, required=True)
    c.add_argument("--p", type=float, required=True)
    c.add_argument("--q", type=float, required=True)
    c.add_argument("--tol", type=float, default=None)
    c.set_defaults(func=_cmd_check)
    for name in ("landen-theorem", "fagnano"):
        c = chk_sub.add_parser(name)
        c.add_argument("--m", type=float, required=True)
        c.add_argument("--n", type=float, required=True)
        c.add_argument("--t", type=float, required=True)
        c.add_argument("--tol", type=float, default=None)
        c.set_defaults(func=_cmd_check)

    p_lem = sub.add_parser("lemniscate", help="lemniscate arc lengths")
    p_lem.add_argument("--radius", type=float, required=True)
    p_lem.add_argument("--json", action="store_true")
    p_lem.set_defaults(func=_cmd_lemniscate)

    p_tab = sub.add_parser("table", help="sweep one flag of an op into CSV or JSON")
    p_tab.add_argument("--op", required=True)
    p_tab.add_argument("--sweep", required=True)
    p_tab.add_argument("--from", dest="sweep_from", type=float, required=True)
    p_tab.add_argument("--to", dest="sweep_to", type=float, required=True)
    p_tab.add_argument("--step", type=float, required=True)
    p_tab.add_argument("--format", choices=["csv", "json"], default="csv")
    for name in ("a", "b", "k", "m", "n", "p", "q", "phi", "radius", "t", "x"):
        p_tab.add_argument(f"--{name}", type=float, default=None)
    p_tab.set_defaults(func=_cmd_table)

    p_con = sub.add_parser("construct", help="render the rectification figure as SVG")
    p_con.add_argument("--m", type=float, required=True)
    p_con.add_argument("--n", type=float, required=True)
    p_con.add_argument("--t", type=float, required=True)
    p_con.add_argument("--out", required=True)
    p_con.set_defaults(func=_cmd_construct)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
