"""``hlab`` command line.

Exit codes: 0 success / all checks pass, 1 some check failed, 2 usage or
configuration error, 3 insufficient precision (truncation or resource
ceiling) with no failures.  Errors go to stderr as one JSON line.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import algfile, checks
from .algebra import GradedAlgebra, hilbert_function
from .constructions import (BeilinsonSpec, CyclicActionSpec, beilinson, default_prime,
                            dual_numbers, kronecker, rolled_up, twisted_group_algebra,
                            veronese_hilbert)
from .errors import HlabError, InsufficientPrecisionError, ResourceLimitError
from .hochschild import COHOMOLOGY, HOMOLOGY, hh_cohomology, hh_graded_range, hh_homology
from .linalg import PrimeField
from .oracle import (BottQuery, FixedPointQuery, bott, fixed_point_hh_cohomology,
                     fixed_point_hh_homology)
from .resolution import ext_algebra_dims, global_dimension, smoothness_check
from .tables import DimTable

DEFAULT_D = 4
DEFAULT_MAX_I = 4

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- algebra inputs ---------------------------------------------------------------

def _int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {token!r}") from None


def parse_weights(text: str) -> tuple[int, ...]:
    return tuple(_int(w, "weight") for w in text.split(",") if w.strip())


def _twisted_prime(cfg: checks.RunConfig, order: int, p: int | None) -> int:
    if p is not None:
        return p
    f = cfg.field_obj()
    if isinstance(f, PrimeField) and (f.characteristic - 1) % order == 0:
        return f.characteristic
    return default_prime(order)


def algebra_from_spec(spec: str, cfg: checks.RunConfig, p: int | None = None) -> GradedAlgebra:
    """``beilinson-sym:n``, ``beilinson-ext:n``, ``rolled-up:n``,
    ``twisted:vars:order:w1,w2,...``, ``dual-numbers``, ``kronecker``."""
    f = cfg.field_obj()
    kind, _, rest = spec.partition(":")
    D = cfg.D if cfg.D is not None else DEFAULT_D
    if kind in ("beilinson-sym", "beilinson-ext"):
        n = _int(rest, "n")
        return beilinson(BeilinsonSpec(n, "symmetric" if kind.endswith("sym") else "exterior"), f)
    if kind == "rolled-up":
        return rolled_up(_int(rest, "n"), D, f)
    if kind == "twisted":
        parts = rest.split(":")
        if len(parts) != 3:
            raise UsageError("twisted spec is twisted:<vars>:<order>:<w1,w2,...>")
        action = CyclicActionSpec(_int(parts[0], "vars"), _int(parts[1], "order"),
                                  parse_weights(parts[2]))
        return twisted_group_algebra(action, D, _twisted_prime(cfg, action.group_order, p))
    if kind == "dual-numbers" and not rest:
        return dual_numbers(f)
    if kind == "kronecker" and not rest:
        return kronecker(f)
    raise UsageError(f"unknown algebra spec {spec!r}")


def load_algebra(args, cfg: checks.RunConfig) -> GradedAlgebra:
    if args.file and args.spec:
        raise UsageError("give either --spec or --file, not both")
    if args.file:
        af = algfile.read(args.file)
        field = cfg.field_obj() if args.field_given else None
        return af.build(cfg.D, field)
    if args.spec:
        return algebra_from_spec(args.spec, cfg)
    raise UsageError("an algebra is required: --spec <spec> or --file <path>")


def _default_max_i(args) -> int:
    """``2 gldim + 1`` when a Beilinson spec is given, else a fixed default."""
    spec = getattr(args, "spec", None) or ""
    if spec.startswith("beilinson-"):
        n = _int(spec.split(":", 1)[1], "n")
        return 2 * (n - 1) + 1
    return DEFAULT_MAX_I


# -- output -------------------------------------------------------------------------

def render_table(table: DimTable, fmt: str, meta: dict | None = None) -> str:
    if fmt == "json":
        payload = {"table": table.to_json()}
        if meta:
            payload.update(meta)
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if table.graded:
            w.writerow(["i", "d", "dim"])
            for i, d in table.keys():
                w.writerow([i, d, table[(i, d)]])
        else:
            w.writerow(["i", "dim"])
            for (i,) in table.keys():
                w.writerow([i, table[i]])
        return buf.getvalue()
    head = ""
    if meta:
        head = " ".join(f"{k}={v}" for k, v in sorted(meta.items())) + "\n"
    return head + table.pretty() + "\n"


def render_value(name: str, value, fmt: str, meta: dict | None = None) -> str:
    if fmt == "json":
        payload = {name: value}
        payload.update(meta or {})
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        keys = [name] + sorted(meta or {})
        row = [value] + [(meta or {})[k] for k in keys[1:]]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(keys)
        w.writerow(row)
        return buf.getvalue()
    extra = "".join(f"\n{k}: {v}" for k, v in sorted((meta or {}).items()))
    return f"{name}: {value}{extra}\n"


def emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _hilbert_table(a: GradedAlgebra) -> DimTable:
    return hilbert_function(a).as_table()


# -- commands -----------------------------------------------------------------------

def cmd_build(args, cfg) -> int:
    kind = args.kind
    if kind == "custom-file":
        if not args.file:
            raise UsageError("custom-file needs --file")
        a = algfile.read(args.file).build(cfg.D, cfg.field_obj() if args.field_given else None)
    elif kind == "twisted":
        if args.vars is None or args.order is None or args.weights is None:
            raise UsageError("twisted needs --vars, --order and --weights")
        action = CyclicActionSpec(args.vars, args.order, parse_weights(args.weights))
        D = cfg.D if cfg.D is not None else DEFAULT_D
        a = twisted_group_algebra(action, D, _twisted_prime(cfg, args.order, args.p))
    elif kind in ("beilinson-sym", "beilinson-ext", "rolled-up"):
        if args.n is None:
            raise UsageError(f"{kind} needs --n")
        a = algebra_from_spec(f"{kind}:{args.n}", cfg)
    elif kind in ("dual-numbers", "kronecker"):
        a = algebra_from_spec(kind, cfg)
    else:
        raise UsageError(f"unknown kind {kind!r}")
    text = algfile.serialize(algfile.from_algebra(a))
    hs = hilbert_function(a)
    meta = {"algebra": a.name, "total": hs.total() if hs.finite else None, "finite": hs.finite}
    report = render_table(hs.as_table(), cfg.fmt, meta)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        sys.stdout.write(report)
    else:
        sys.stdout.write(report)
        if cfg.fmt == "table":
            sys.stdout.write(text)
    return EXIT_OK


def _parse_degrees(text: str) -> range:
    if ":" in text:
        lo, hi = text.split(":", 1)
        lo_, hi_ = _int(lo, "degree"), _int(hi, "degree")
    else:
        lo_ = hi_ = _int(text, "degree")
    if lo_ < 0 or hi_ < lo_:
        raise UsageError(f"bad degree range {text!r}")
    return range(lo_, hi_ + 1)


def cmd_hh(args, cfg) -> int:
    direction = args.direction
    max_i = cfg.max_i if cfg.max_i is not None else _default_max_i(args)
    if args.degrees is not None:
        degrees = _parse_degrees(args.degrees)
        if cfg.D is None:
            # build just far enough for the requested windows
            cfg = checks.RunConfig(cfg.field, degrees[-1], cfg.max_i, cfg.fmt, cfg.jobs)
        a = load_algebra(args, cfg)
        table = hh_graded_range(a, direction, degrees, max_i, cfg.jobs)
    else:
        a = load_algebra(args, cfg)
        if not a.finite:
            raise UsageError(f"{a.name} is infinite-dimensional; pass --degrees lo:hi")
        fn = hh_homology if direction == HOMOLOGY else hh_cohomology
        table = fn(a, max_i, cfg.jobs)
    emit(render_table(table, cfg.fmt, {"algebra": a.name, "direction": direction,
                                       "field": a.field.name}), args.out)
    return EXIT_OK


def cmd_gldim(args, cfg) -> int:
    a = load_algebra(args, cfg)
    max_len = args.max_len if args.max_len is not None else (cfg.max_i or 6)
    g = global_dimension(a, max_len)
    s = smoothness_check(a, max_len)
    value = g if g is not None else "not-finished"
    emit(render_value("global_dimension", value, cfg.fmt,
                      {"algebra": a.name, "max_len": max_len, "smoothness": s.value}), args.out)
    return EXIT_OK


def cmd_ext(args, cfg) -> int:
    a = load_algebra(args, cfg)
    max_i = cfg.max_i if cfg.max_i is not None else DEFAULT_MAX_I
    emit(render_table(ext_algebra_dims(a, max_i), cfg.fmt, {"algebra": a.name}), args.out)
    return EXIT_OK


def cmd_bott(args, cfg) -> int:
    q = BottQuery(args.n, args.p, args.q, args.m)
    if args.n < 2:
        raise UsageError("bott needs n >= 2")
    if not q.in_range:
        print(json.dumps({"warning": "outside-range",
                          "message": f"p, q must lie in 0..{args.n - 1}; value is 0 by convention"}),
              file=sys.stderr)
    emit(render_value("h", bott(q), cfg.fmt, {"n": q.n, "p": q.p, "q": q.q, "m": q.m}), args.out)
    return EXIT_OK


def cmd_fixed_point(args, cfg) -> int:
    action = CyclicActionSpec(args.vars, args.order, parse_weights(args.weights))
    D = cfg.D if cfg.D is not None else DEFAULT_D
    query = FixedPointQuery(action, D, args.i)
    fn = fixed_point_hh_homology if args.direction == HOMOLOGY else fixed_point_hh_cohomology
    table = fn(query)
    meta = {"action": f"{action.n_vars}:{action.group_order}:{args.weights}",
            "direction": args.direction}
    if args.i is not None and cfg.fmt == "table":
        meta["i"] = args.i
        emit(render_value("dims", " ".join(map(str, table.row(args.i))), cfg.fmt, meta), args.out)
    else:
        emit(render_table(table, cfg.fmt, meta), args.out)
    return EXIT_OK


def cmd_hilbert(args, cfg) -> int:
    if args.veronese is not None:
        D = cfg.D if cfg.D is not None else DEFAULT_D
        hs = veronese_hilbert(args.veronese, D)
        name = f"veronese:{args.veronese}"
    else:
        a = load_algebra(args, cfg)
        hs = hilbert_function(a)
        name = a.name
    emit(render_table(hs.as_table(), cfg.fmt, {"algebra": name, "finite": hs.finite}), args.out)
    return EXIT_OK


def cmd_check(args, cfg) -> int:
    for s in args.suites:
        if s != "all" and s not in checks.SUITES:
            raise UsageError(f"unknown suite {s!r}; known: all, {', '.join(checks.SUITES)}")
    reports = checks.run_checks(args.suites, cfg)
    if cfg.fmt == "json":
        text = checks.dumps(reports)
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check_id", "verdict", "left", "right", "runtime_ms"])
        for r in reports:
            w.writerow([r.check_id, r.verdict, r.left.source, r.right.source, r.runtime_ms])
        text = buf.getvalue()
    else:
        text = "".join(r.summary() + "\n" for r in reports)
        counts = {v: sum(r.verdict == v for r in reports)
                  for v in (checks.PASS, checks.FAIL, checks.INSUFFICIENT)}
        text += " ".join(f"{k}={v}" for k, v in counts.items()) + "\n"
    emit(text, args.out)
    return checks.exit_code(reports)


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", default=None, help="rat or fp:<p> (default rat)")
    common.add_argument("--max-i", dest="max_i", type=int, default=None)
    common.add_argument("--D", dest="D", type=int, default=None, help="truncation degree")
    common.add_argument("--format", dest="fmt", choices=checks.FORMATS, default="table")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", default=None)

    alg = _Parser(add_help=False)
    alg.add_argument("--spec", default=None)
    alg.add_argument("--file", default=None)

    parser = _Parser(prog="hlab", description="Exact Hochschild and tilting computations.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    b = sub.add_parser("build", parents=[common], help="build an algebra and write its file")
    b.add_argument("kind", choices=["beilinson-sym", "beilinson-ext", "rolled-up", "twisted",
                                    "dual-numbers", "kronecker", "custom-file"])
    b.add_argument("--n", type=int)
    b.add_argument("--vars", type=int)
    b.add_argument("--order", type=int)
    b.add_argument("--weights")
    b.add_argument("--p", type=int)
    b.add_argument("--file")
    b.set_defaults(func=cmd_build)

    h = sub.add_parser("hh", parents=[common, alg], help="Hochschild (co)homology dimensions")
    h.add_argument("--direction", choices=[HOMOLOGY, COHOMOLOGY], default=COHOMOLOGY)
    h.add_argument("--degrees", default=None, help="internal degree d or range lo:hi")
    h.set_defaults(func=cmd_hh)

    g = sub.add_parser("gldim", parents=[common, alg], help="global dimension and smoothness")
    g.add_argument("--max-len", dest="max_len", type=int, default=None)
    g.set_defaults(func=cmd_gldim)

    e = sub.add_parser("ext", parents=[common, alg], help="dims of Ext(A/J, A/J)")
    e.set_defaults(func=cmd_ext)

    bo = sub.add_parser("bott", parents=[common], help="h^q(P^(n-1), Omega^p(m))")
    for name in ("n", "p", "q", "m"):
        bo.add_argument(f"--{name}", type=int, required=True)
    bo.set_defaults(func=cmd_bott)

    fp = sub.add_parser("fixed-point", parents=[common], help="fixed-point HH of S * Z/r")
    fp.add_argument("--vars", type=int, required=True)
    fp.add_argument("--order", type=int, required=True)
    fp.add_argument("--weights", required=True)
    fp.add_argument("--i", type=int, default=None)
    fp.add_argument("--direction", choices=[HOMOLOGY, COHOMOLOGY], default=HOMOLOGY)
    fp.set_defaults(func=cmd_fixed_point)

    hi = sub.add_parser("hilbert", parents=[common, alg], help="Hilbert function")
    hi.add_argument("--veronese", type=int, default=None)
    hi.set_defaults(func=cmd_hilbert)

    c = sub.add_parser("check", parents=[common], help="run verification suites")
    c.add_argument("suites", nargs="+")
    c.set_defaults(func=cmd_check)
    return parser


def _fail(kind: str, message: str, code: int) -> int:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.field_given = args.field is not None
        cfg = checks.RunConfig(args.field or "rat", args.D, args.max_i, args.fmt, args.jobs)
        return args.func(args, cfg)
    except UsageError as e:
        return _fail("usage", str(e), EXIT_USAGE)
    except (InsufficientPrecisionError, ResourceLimitError) as e:
        return _fail("insufficient-precision", str(e), EXIT_PRECISION)
    except (HlabError, ValueError, KeyError, OSError) as e:
        return _fail("config", str(e), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
