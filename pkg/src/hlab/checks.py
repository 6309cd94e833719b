"""Named verification suites: each check computes an algebraic table and an
independent table (oracle or closed form) and compares them exactly.

Suite instances (n, D, primes) are fixed; ``RunConfig.field`` only selects
the ground field for the algebras that are defined over any field.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .algebra import hilbert_function, simple_module
from .constructions import (BeilinsonSpec, CyclicActionSpec, beilinson, dual_numbers,
                            kronecker, rolled_up, rolled_up_closed_form,
                            twisted_group_algebra, veronese_hilbert)
from .errors import InsufficientPrecisionError, ResourceLimitError
from .hochschild import (COHOMOLOGY, HOMOLOGY, center_total, full_bar_complex, full_bar_dims,
                         hh_cohomology, hh_graded_range, hh_homology, reduced_complexes)
from .linalg import Field, parse_field
from .oracle import (FixedPointQuery, canonical_bundle_forms, fixed_point_hh_cohomology,
                     fixed_point_hh_homology, h, h0_by_koszul, hkr_cohomology, hodge_homology,
                     identity_summand)
from .resolution import (Smoothness, ext_algebra_dims, global_dimension, minimal_resolution,
                         smoothness_check)
from .tables import DimTable, compare

PASS = "pass"
FAIL = "fail"
INSUFFICIENT = "insufficient-precision"
FORMATS = ("table", "json", "csv")


@dataclass(frozen=True)
class RunConfig:
    field: str = "rat"
    D: int | None = None
    max_i: int | None = None
    fmt: str = "table"
    jobs: int = 1
    timing: bool = True

    def __post_init__(self):
        parse_field(self.field)  # raises ValueError on a bad or non-prime modulus
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.D is not None and self.D < 0:
            raise ValueError("D must be nonnegative")
        if self.max_i is not None and self.max_i < 0:
            raise ValueError("max_i must be nonnegative")

    def field_obj(self) -> Field:
        return parse_field(self.field)


@dataclass
class Side:
    label: str  # "algebraic" or "oracle"
    source: str
    table: DimTable | None = None
    error: str | None = None

    def to_json(self) -> dict:
        return {"label": self.label, "source": self.source,
                "table": self.table.to_json() if self.table is not None else None,
                "error": self.error}

    @classmethod
    def from_json(cls, obj: dict) -> "Side":
        t = obj["table"]
        return cls(obj["label"], obj["source"], DimTable.from_json(t) if t else None, obj["error"])


@dataclass
class CheckReport:
    check_id: str
    claim: str
    left: Side
    right: Side
    verdict: str
    parameters: dict = dc_field(default_factory=dict)
    mismatches: list = dc_field(default_factory=list)
    runtime_ms: int = 0

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id, "claim": self.claim,
            "left": self.left.to_json(), "right": self.right.to_json(),
            "verdict": self.verdict, "parameters": self.parameters,
            "mismatches": [list(k) for k in self.mismatches],
            "runtime_ms": self.runtime_ms,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CheckReport":
        return cls(obj["check_id"], obj["claim"], Side.from_json(obj["left"]),
                   Side.from_json(obj["right"]), obj["verdict"], obj["parameters"],
                   [tuple(k) for k in obj["mismatches"]], obj["runtime_ms"])

    def summary(self) -> str:
        line = f"{self.verdict.upper():<22} {self.check_id}"
        lt, rt = self.left.table, self.right.table
        if lt is not None and rt is not None and not lt.graded:
            if len(lt.as_tuple()) <= 12:
                line += f"  {self.left.label} {lt.as_tuple()} vs {self.right.label} {rt.as_tuple()}"
            else:
                line += f"  {len(lt.as_tuple())} entries compared"
        if self.mismatches:
            line += f"  mismatches at {self.mismatches[:5]}"
        for s in (self.left, self.right):
            if s.error:
                line += f"  [{s.label}: {s.error}]"
        return line


def dumps(reports: list[CheckReport]) -> str:
    return json.dumps([r.to_json() for r in reports], sort_keys=True, indent=2) + "\n"


def loads(text: str) -> list[CheckReport]:
    return [CheckReport.from_json(o) for o in json.loads(text)]


def _side(label: str, source: str, fn) -> Side:
    try:
        return Side(label, source, fn())
    except (InsufficientPrecisionError, ResourceLimitError) as e:
        return Side(label, source, None, f"{type(e).__name__}: {e}")


def run_check(check_id: str, claim: str, parameters: dict, left: tuple, right: tuple,
              cfg: RunConfig) -> CheckReport:
    """``left``/``right`` are ``(label, source description, thunk -> DimTable)``."""
    t0 = time.perf_counter()
    ls = _side(*left)
    rs = _side(*right)
    mismatches: list = []
    if ls.table is None or rs.table is None:
        verdict = INSUFFICIENT
    else:
        comparable, mismatches = compare(ls.table, rs.table)
        if not comparable:
            verdict = INSUFFICIENT
        else:
            verdict = PASS if not mismatches else FAIL
    ms = int((time.perf_counter() - t0) * 1000) if cfg.timing else 0
    return CheckReport(check_id, claim, ls, rs, verdict, parameters, mismatches, ms)


def _params(cfg: RunConfig, **kw) -> dict:
    out = {"field": cfg.field}
    out.update(kw)
    return out


# -- suites ---------------------------------------------------------------------

def _hkr(k: int, cfg: RunConfig) -> list[CheckReport]:
    n = k + 1
    max_i = 2 * (n - 1) + 1
    f = cfg.field_obj()
    return [run_check(
        f"hkr-p{k}", f"dim HH^i(A0({n})) = sum_(p+q=i) h^q(P^{n - 1}, wedge^p T)",
        _params(cfg, n=n, max_i=max_i),
        ("algebraic", f"hh_cohomology(A0({n}))",
         lambda: hh_cohomology(beilinson(BeilinsonSpec(n), f), max_i)),
        ("oracle", f"hkr_cohomology({n})", lambda: hkr_cohomology(n, max_i)), cfg)]


def _hodge(k: int, cfg: RunConfig) -> list[CheckReport]:
    n = k + 1
    max_i = 2 * (n - 1) + 1
    f = cfg.field_obj()
    return [run_check(
        f"hodge-p{k}", f"dim HH_i(A0({n})) = sum_(p-q=i) h^(p,q)(P^{n - 1}), zero for i != 0",
        _params(cfg, n=n, max_i=max_i),
        ("algebraic", f"hh_homology(A0({n}))",
         lambda: hh_homology(beilinson(BeilinsonSpec(n), f), max_i)),
        ("oracle", f"hodge_homology({n})", lambda: hodge_homology(n, max_i)), cfg)]


def _gldim_table(variant: str, ns, f: Field) -> DimTable:
    t = DimTable(max_i=max(ns), min_i=min(ns))
    for n in ns:
        g = global_dimension(beilinson(BeilinsonSpec(n, variant), f), n + 1)
        # an unfinished resolution is recorded as max_len + 1, which can never pass
        t[n] = n + 2 if g is None else g
    return t


def _smooth_table(variant: str, ns, f: Field) -> DimTable:
    t = DimTable(max_i=max(ns), min_i=min(ns))
    for n in ns:
        s = smoothness_check(beilinson(BeilinsonSpec(n, variant), f), n + 1)
        t[n] = 1 if s is Smoothness.SMOOTH else 0
    return t


def _gldim(cfg: RunConfig) -> list[CheckReport]:
    ns = (2, 3, 4)
    f = cfg.field_obj()
    out = []
    for variant, tag in (("symmetric", "A0"), ("exterior", "A1")):
        out.append(run_check(
            f"gldim:{tag}", f"gldim {tag}(n) = n - 1 (indexed by n)",
            _params(cfg, n=list(ns)),
            ("algebraic", f"max_v pd S_v over {tag}(n)", lambda v=variant: _gldim_table(v, ns, f)),
            ("oracle", "n - 1", lambda: DimTable.from_sequence([n - 1 for n in ns], min_i=2)), cfg))
        out.append(run_check(
            f"gldim:{tag}-smooth", f"{tag}(n) is smooth, 1 = smooth (indexed by n)",
            _params(cfg, n=list(ns)),
            ("algebraic", f"smoothness_check({tag}(n))", lambda v=variant: _smooth_table(v, ns, f)),
            ("oracle", "P^(n-1) is smooth", lambda: DimTable.from_sequence([1] * len(ns), min_i=2)),
            cfg))
    return out


def _koszul(n: int, cfg: RunConfig) -> list[CheckReport]:
    f = cfg.field_obj()
    out = []
    for var, dual, tv, td in (("symmetric", "exterior", "A0", "A1"),
                              ("exterior", "symmetric", "A1", "A0")):
        out.append(run_check(
            f"koszul-dual-{n}:ext({tv})=hilb({td})",
            f"dim Ext^i_{tv}(A/J, A/J) = dim {td}({n})_i", _params(cfg, n=n, max_i=n),
            ("algebraic", f"ext_algebra_dims({tv}({n}))",
             lambda v=var: ext_algebra_dims(beilinson(BeilinsonSpec(n, v), f), n)),
            ("oracle", f"hilbert_function({td}({n}))",
             lambda d=dual: hilbert_function(beilinson(BeilinsonSpec(n, d), f)).as_table(n)), cfg))
    return out


def _rolled_up_hilbert(cfg: RunConfig) -> list[CheckReport]:
    f = cfg.field_obj()
    D = 6
    return [run_check(
        f"rolled-up-hilbert:{n}", f"hilbert B0({n}) = sum_(i,j) dim S(i-j)^({n})_d",
        _params(cfg, n=n, D=D),
        ("algebraic", f"hilbert_function(rolled_up({n}, {D}))",
         lambda n=n: hilbert_function(rolled_up(n, D, f)).as_table()),
        ("oracle", "matrix-of-Veronese-shifts count",
         lambda n=n: DimTable.from_sequence(rolled_up_closed_form(n, D))), cfg)
        for n in (2, 3)]


def _dft_iso(cfg: RunConfig) -> list[CheckReport]:
    f = cfg.field_obj()
    out = []
    for n, p, D in ((2, 5, 6), (3, 7, 4)):
        spec = CyclicActionSpec.standard(n)
        out.append(run_check(
            f"dft-iso:{n}", f"hilbert(S * mu_{n}) = hilbert(B0({n}))", _params(cfg, n=n, p=p, D=D),
            ("algebraic", f"hilbert_function(twisted_group_algebra({n}, p={p}, D={D}))",
             lambda s=spec, p=p, D=D: hilbert_function(twisted_group_algebra(s, D, p)).as_table()),
            ("algebraic", f"hilbert_function(rolled_up({n}, {D}))",
             lambda n=n, D=D: hilbert_function(rolled_up(n, D, f)).as_table()), cfg))
    return out


def _b0_pd_table(n: int, f: Field) -> DimTable:
    D = 2 * n
    a = rolled_up(n, D, f)
    t = DimTable(max_i=n - 1)
    for v in range(n):
        res = minimal_resolution(simple_module(a, v), n + 1, window=D)
        t[v] = res.length if res.finished else n + 2
    return t


def _b0_gldim(cfg: RunConfig) -> list[CheckReport]:
    f = cfg.field_obj()
    return [run_check(
        f"b0-gldim:{n}", f"pd S_v = {n} for every vertex simple of B0({n}) (indexed by v)",
        _params(cfg, n=n, D=2 * n),
        ("algebraic", f"minimal_resolution over rolled_up({n}, {2 * n})",
         lambda n=n: _b0_pd_table(n, f)),
        ("oracle", "n", lambda n=n: DimTable.from_sequence([n] * n)), cfg)
        for n in (2, 3)]


def _padded(table: DimTable, max_i: int) -> DimTable:
    """Extend a form-degree table by the certified zeros above ``dim V``."""
    out = DimTable(max_i=max(max_i, table.max_i), degrees=table.degrees, min_i=table.min_i)
    out.entries.update(table.entries)
    return out


def _twisted_hh_graded(cfg: RunConfig) -> list[CheckReport]:
    D = 4
    spec = CyclicActionSpec(2, 2, (1, 1))
    oracle = ("oracle", "fixed_point_hh_homology((2, 2, (1,1)))",
              lambda: _padded(fixed_point_hh_homology(FixedPointQuery(spec, D)), D))
    f = cfg.field_obj()
    return [
        run_check("twisted-hh-graded", "dim HH_i(S * mu_2)_d = dim (Omega^i_Z)^G_d",
                  _params(cfg, n_vars=2, order=2, weights=[1, 1], p=5, D=D, max_i=D),
                  ("algebraic", "hh_graded(twisted_group_algebra(2, p=5), homology)",
                   lambda: hh_graded_range(twisted_group_algebra(spec, D, 5), HOMOLOGY,
                                           range(D + 1), D)),
                  oracle, cfg),
        run_check("twisted-hh-graded:rolled-up", "dim HH_i(B0(2))_d = dim (Omega^i_Z)^G_d",
                  _params(cfg, n=2, D=D, max_i=D),
                  ("algebraic", "hh_graded(rolled_up(2), homology)",
                   lambda: hh_graded_range(rolled_up(2, D, f), HOMOLOGY, range(D + 1), D)),
                  oracle, cfg),
    ]


def _reflect(table: DimTable, n_vars: int) -> DimTable:
    out = DimTable(max_i=n_vars, degrees=table.degrees)
    for (i, d), v in table.entries.items():
        out[(n_vars - i, d)] = v
    return out


def _sl_duality(cfg: RunConfig) -> list[CheckReport]:
    D = 5
    out = []
    for spec in (CyclicActionSpec(2, 2, (1, 1)), CyclicActionSpec(3, 3, (1, 1, 1))):
        w = ",".join(map(str, spec.weights))
        out.append(run_check(
            f"sl-duality:{spec.n_vars}", f"HH^i = HH_(dim V - i) for the SL action ({w}) mod {spec.group_order}",
            _params(cfg, n_vars=spec.n_vars, order=spec.group_order, weights=list(spec.weights), D=D),
            ("oracle", "fixed_point_hh_cohomology",
             lambda s=spec: fixed_point_hh_cohomology(FixedPointQuery(s, D))),
            ("oracle", "fixed_point_hh_homology reflected i -> dim V - i",
             lambda s=spec: _reflect(fixed_point_hh_homology(FixedPointQuery(s, D)), s.n_vars)),
            cfg))
    return out


def _veronese(cfg: RunConfig) -> list[CheckReport]:
    D = 8
    return [run_check(
        f"veronese:{n}", f"hilbert k[x_1..x_{n}]^({n}) = invariants of mu_{n}",
        _params(cfg, n=n, D=D),
        ("algebraic", f"veronese_hilbert({n}, {D})",
         lambda n=n: veronese_hilbert(n, D).as_table()),
        ("oracle", "identity summand of the fixed-point count, i = 0",
         lambda n=n: DimTable.from_sequence(identity_summand(CyclicActionSpec.standard(n), 0, D))),
        cfg) for n in (2, 3, 4)]


def _sweep(points, fn) -> DimTable:
    return DimTable.from_sequence([fn(*pt) for pt in points])


def _bott_sanity(cfg: RunConfig) -> list[CheckReport]:
    M = 8
    every = [(n, p, q, m) for n in range(2, 6) for p in range(n) for q in range(n)
             for m in range(-M, M + 1)]
    vanish = [pt for pt in every if pt[2] >= 1 and pt[3] >= 0]
    h0 = [(n, p, m) for n in (2, 3) for p in range(n) for m in range(-M, M + 1)]
    params = _params(cfg, n_range=[2, 5], m_range=[-M, M])
    return [
        run_check("bott-sanity:serre", "h^q(Omega^p(m)) = h^(N-q)(Omega^(N-p)(-m)) over the sweep",
                  params,
                  ("oracle", "bott(n, p, q, m)", lambda: _sweep(every, h)),
                  ("oracle", "bott(n, N-p, N-q, -m)",
                   lambda: _sweep(every, lambda n, p, q, m: h(n, n - 1 - p, n - 1 - q, -m))), cfg),
        run_check("bott-sanity:vanishing", "for q >= 1, m >= 0: h^q(Omega^p(m)) = [p = q and m = 0]",
                  params,
                  ("oracle", "bott(n, p, q, m)", lambda: _sweep(vanish, h)),
                  ("oracle", "indicator of p = q, m = 0",
                   lambda: _sweep(vanish, lambda n, p, q, m: int(p == q and m == 0))), cfg),
        run_check("bott-sanity:h0", "h^0(Omega^p(m)) = dim ker of Euler contraction, n <= 3",
                  _params(cfg, n_range=[2, 3], m_range=[-M, M]),
                  ("oracle", "bott(n, p, 0, m)", lambda: _sweep(h0, lambda n, p, m: h(n, p, 0, m))),
                  ("oracle", "h0_by_koszul(n, p, m)", lambda: _sweep(h0, h0_by_koszul)), cfg),
    ]


def _final_section(cfg: RunConfig) -> list[CheckReport]:
    pts = [(n, p, m) for n in (2, 3, 4) for p in range(n + 1) for m in range(4)]
    return [run_check(
        "final-section", "(Omega^p_V)^(n) in degree mn = h0(Omega^p(mn)) + h0(Omega^(p-1)(mn))",
        _params(cfg, n=[2, 3, 4], m_range=[0, 3]),
        ("oracle", "invariant p-forms on V",
         lambda: _sweep(pts, lambda n, p, m: canonical_bundle_forms(n, p, m)[0])),
        ("oracle", "Bott on P^(n-1)",
         lambda: _sweep(pts, lambda n, p, m: canonical_bundle_forms(n, p, m)[1])), cfg)]


# engine validation -------------------------------------------------------------

def _validation_algebras(f: Field):
    out = [("dual-numbers", dual_numbers(f)), ("kronecker", kronecker(f))]
    for n in (2, 3, 4):
        out.append((f"A0({n})", beilinson(BeilinsonSpec(n), f)))
        out.append((f"A1({n})", beilinson(BeilinsonSpec(n, "exterior"), f)))
    return out


def _all_complexes(f: Field):
    """Every complex the suites rely on: reduced (both directions) on the
    finite suite algebras, graded homology windows of the twisted and
    rolled-up algebras, and the full bar complexes."""
    for name, a in _validation_algebras(f):
        max_i = 4 if a.dim <= 40 else 3
        for direction in (HOMOLOGY, COHOMOLOGY):
            for d, cx in reduced_complexes(a, direction, max_i).items():
                yield f"{name}/{direction}/{d}", cx
    tw = twisted_group_algebra(CyclicActionSpec(2, 2, (1, 1)), 4, 5)
    b0 = rolled_up(2, 4, f)
    for name, a in (("twisted(2)", tw), ("B0(2)", b0)):
        for d in range(5):
            yield f"{name}/homology/{d}", reduced_complexes(a, HOMOLOGY, d, d)[d]
    for name, a in (("dual-numbers", dual_numbers(f)), ("kronecker", kronecker(f))):
        for direction in (HOMOLOGY, COHOMOLOGY):
            yield f"{name}/full-{direction}", full_bar_complex(a, direction, 3)


def _engine_validation(cfg: RunConfig) -> list[CheckReport]:
    f = cfg.field_obj()
    out = []
    cache: dict = {}

    def counts():
        if "c" not in cache:
            built = sq = eu = 0
            for _, cx in _all_complexes(f):
                built += 1
                sq += cx.check_square_zero()
                eu += cx.euler_identity()
            cache["c"] = (built, sq, eu)
        return cache["c"]

    out.append(run_check(
        "engine-validation:square-zero", "b^2 = 0 exactly on every constructed complex",
        _params(cfg), ("algebraic", "complexes with b^2 = 0", lambda: DimTable.from_sequence([counts()[1]])),
        ("oracle", "complexes built", lambda: DimTable.from_sequence([counts()[0]])), cfg))
    out.append(run_check(
        "engine-validation:euler", "Euler characteristic identity on every certified window",
        _params(cfg), ("algebraic", "complexes satisfying the identity",
                       lambda: DimTable.from_sequence([counts()[2]])),
        ("oracle", "complexes built", lambda: DimTable.from_sequence([counts()[0]])), cfg))
    for name, build in (("dual-numbers", dual_numbers), ("kronecker", kronecker)):
        for direction in (HOMOLOGY, COHOMOLOGY):
            fn = hh_homology if direction == HOMOLOGY else hh_cohomology
            out.append(run_check(
                f"engine-validation:reduced-vs-full:{name}:{direction}",
                "E-relative reduced complex = full bar complex over k", _params(cfg, max_i=3),
                ("algebraic", f"reduced {direction}", lambda b=build, fn=fn: fn(b(f), 3)),
                ("algebraic", f"full bar {direction}",
                 lambda b=build, d=direction: full_bar_dims(b(f), d, 3)), cfg))
    algs = _validation_algebras(f)
    out.append(run_check(
        "engine-validation:center", "dim HH^0 = dim of the centre (indexed by suite algebra)",
        _params(cfg, algebras=[name for name, _ in algs]),
        ("algebraic", "hh_cohomology(a, 0)",
         lambda: DimTable.from_sequence([hh_cohomology(a, 0)[0] for _, a in algs])),
        ("oracle", "center_dim summed over degrees",
         lambda: DimTable.from_sequence([center_total(a) for _, a in algs])), cfg))
    return out


SUITES = {
    "hkr-p1": lambda cfg: _hkr(1, cfg),
    "hkr-p2": lambda cfg: _hkr(2, cfg),
    "hkr-p3": lambda cfg: _hkr(3, cfg),
    "hodge-p1": lambda cfg: _hodge(1, cfg),
    "hodge-p2": lambda cfg: _hodge(2, cfg),
    "hodge-p3": lambda cfg: _hodge(3, cfg),
    "hodge-p4": lambda cfg: _hodge(4, cfg),
    "gldim": _gldim,
    "koszul-dual-2": lambda cfg: _koszul(2, cfg),
    "koszul-dual-3": lambda cfg: _koszul(3, cfg),
    "rolled-up-hilbert": _rolled_up_hilbert,
    "dft-iso": _dft_iso,
    "b0-gldim": _b0_gldim,
    "twisted-hh-graded": _twisted_hh_graded,
    "sl-duality": _sl_duality,
    "veronese": _veronese,
    "bott-sanity": _bott_sanity,
    "final-section": _final_section,
    "engine-validation": _engine_validation,
}


def run_suite(suite_id: str, cfg: RunConfig = RunConfig()) -> list[CheckReport]:
    if suite_id not in SUITES:
        raise KeyError(suite_id)
    return SUITES[suite_id](cfg)


def _suite_task(args):
    return run_suite(*args)


def run_checks(suite_ids, cfg: RunConfig = RunConfig()) -> list[CheckReport]:
    """Run suites (``"all"`` expands to every suite); fans out over
    ``cfg.jobs`` worker processes, one suite per task."""
    ids: list[str] = []
    for s in suite_ids:
        ids.extend(SUITES if s == "all" else [s])
    for s in ids:
        if s not in SUITES:
            raise KeyError(s)
    if cfg.jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            parts = list(pool.map(_suite_task, [(s, cfg) for s in ids]))
    else:
        parts = [run_suite(s, cfg) for s in ids]
    return [r for part in parts for r in part]


def exit_code(reports: list[CheckReport]) -> int:
    verdicts = {r.verdict for r in reports}
    if FAIL in verdicts:
        return 1
    if INSUFFICIENT in verdicts:
        return 3
    return 0
