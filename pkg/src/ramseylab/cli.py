"""Single CLI entry point: search, bound, count, mc, verify, table.

Exit codes: 0 success, 1 usage error, 2 budget or ceiling reached, 3 a
property check failed (bad certificate, experiment outside its bound,
bracketing violation).

Defaults: format human, seed 0, threads 1 (or RAMSEYLAB_THREADS), node
budget 10^9, no time budget, search split depth 6.  A key=value file given
with --config supplies defaults for any of these; explicit flags win.  Every
run echoes its resolved configuration into the output (a "config" object in
JSON, "#" comment lines in CSV, a header line in human format).

Seeded commands (mc, table) emit no timing fields, so a repeated run is
byte-identical.  search reports its wall time in "millis"; everything else
in its output is reproducible for a fixed split depth, whatever the thread
count.
"""

import argparse
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from .bounds import (
    BOUND_REGISTRY,
    BoundValue,
    TowerExpr,
    gowers_upper,
    q1_new_base,
    q1_vijay_beta,
    q_landman_coeff,
    sp_lower_constructive,
    sp_lower_probabilistic,
    sp_upper,
    vdw_lower_general,
    vdw_lower_primes,
    vdw_lower_probabilistic,
)
from .concentration import EXPERIMENTS, Rng
from .counting import (
    count_S,
    lambda_vector,
    mc_good_fraction,
    scope2_closed_sum,
    scopem_multinomial_sum,
    union_bound_check,
)
from .errors import (
    ApplicabilityError,
    BudgetExceededError,
    CeilingReachedError,
    RamseyLabError,
    TimeBudgetError,
)
from .progressions import Coloring, ProgressionKind, find_monochromatic
from .report import csv_lines, dumps, format_cell, render_mc_figure, render_table_figure, to_jsonable
from .search import Certificate, SearchConfig, ramsey_number, verify_certificate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_CHECK = 3

DEFAULT_SPLIT_DEPTH = 6
DEFAULT_NODE_BUDGET = 10**9
DEFAULT_SAMPLES = 10000


@dataclass
class RunConfig:
    subcommand: str
    fmt: str = "human"
    seed: int = 0
    threads: int = 1
    node_budget: int = DEFAULT_NODE_BUDGET
    time_budget: Optional[float] = None
    flags: dict = field(default_factory=dict)

    def echo(self) -> dict:
        out = {
            "subcommand": self.subcommand,
            "format": self.fmt,
            "seed": self.seed,
            "threads": self.threads,
            "node_budget": self.node_budget,
            "time_budget": self.time_budget,
        }
        out.update(self.flags)
        return out

    def echo_lines(self) -> list[str]:
        return [f"{k}={format_cell(v)}" for k, v in sorted(self.echo().items())]


@dataclass
class TableSpec:
    families: tuple[str, ...]
    params: dict
    k_lo: int
    k_hi: int
    exact: bool = False
    max_n: int = 64
    threads: int = 1
    node_budget: int = DEFAULT_NODE_BUDGET
    time_budget: Optional[float] = None


def _parse_range(text: str) -> tuple[int, int]:
    """'a..b' or a bare integer; an inverted range is empty, not an error."""
    if ".." in text:
        a, b = text.split("..", 1)
        return int(a), int(b)
    return int(text), int(text)


class _UsageError(Exception):
    pass


def _load_config_file(path: str) -> dict:
    out = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise _UsageError(f"{path}:{lineno}: expected key=value")
                key, value = line.split("=", 1)
                out[key.strip().replace("-", "_")] = value.strip()
    except OSError as e:
        raise _UsageError(f"cannot read config file: {e}") from None
    return out


_CONFIG_TYPES = {
    "seed": int,
    "threads": int,
    "node_budget": int,
    "time_budget": float,
    "split_depth": int,
    "samples": int,
    "max_n": int,
    "floor": float,
}


def _resolve(ns, filecfg: dict, name: str, default, typ=None):
    """Flag > config file > default; env only for threads."""
    val = getattr(ns, name, None)
    if val is not None:
        return val
    if name in filecfg:
        typ = typ or _CONFIG_TYPES.get(name, str)
        try:
            return typ(filecfg[name])
        except ValueError:
            raise _UsageError(f"config key {name}: cannot parse {filecfg[name]!r}") from None
    if name == "threads":
        env = os.environ.get("RAMSEYLAB_THREADS")
        if env is not None:
            try:
                return int(env)
            except ValueError:
                raise _UsageError(f"RAMSEYLAB_THREADS={env!r} is not an integer") from None
    return default


def _common_flags(sub):
    sub.add_argument("--json", action="store_true", help="emit JSON")
    sub.add_argument("--seed", type=int, default=None)
    sub.add_argument("--threads", type=int, default=None)
    sub.add_argument("--node-budget", type=int, default=None, dest="node_budget")
    sub.add_argument("--time-budget", type=float, default=None, dest="time_budget")
    sub.add_argument("--config", type=str, default=None, help="key=value defaults file")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ramseylab")
    subs = p.add_subparsers(dest="subcommand", required=True)

    s = subs.add_parser("search", help="exact Ramsey-type number by backtracking")
    s.add_argument("--kind", required=True, choices=["ap", "semi", "quasi"])
    s.add_argument("--param", type=int, default=0, help="scope m or diameter n")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--max-n", type=int, required=True, dest="max_n")
    s.add_argument("--split-depth", type=int, default=None, dest="split_depth")
    s.add_argument("--no-symmetry-break", action="store_true")
    _common_flags(s)

    b = subs.add_parser("bound", help="evaluate one closed-form bound")
    b.add_argument("--name", required=True, choices=sorted(BOUND_REGISTRY))
    for flag in ("p", "q", "k", "r", "m", "i"):
        b.add_argument(f"--{flag}", type=int, default=None)
    b.add_argument("--tol", type=float, default=None)
    _common_flags(b)

    c = subs.add_parser("count", help="exact counting oracles")
    c.add_argument("what", choices=["report", "lambda", "sums"])
    c.add_argument("--n", type=int, default=None)
    c.add_argument("--kind", choices=["ap", "semi", "quasi"], default=None)
    c.add_argument("--param", type=int, default=0)
    c.add_argument("--k", type=int, default=None)
    c.add_argument("--m", type=int, default=None)
    c.add_argument("--r", type=int, default=None)
    _common_flags(c)

    m = subs.add_parser("mc", help="seeded Monte-Carlo experiment")
    m.add_argument("experiment", choices=sorted(EXPERIMENTS) + ["good-fraction"])
    m.add_argument("--samples", type=int, default=None)
    m.add_argument("--n", type=int, default=None)
    m.add_argument("--k", type=int, default=None)
    m.add_argument("--kind", choices=["ap", "semi", "quasi"], default=None)
    m.add_argument("--param", type=int, default=0)
    m.add_argument("--p", type=float, default=None)
    m.add_argument("--a", type=float, default=None)
    m.add_argument("--c", type=float, default=None)
    m.add_argument("--t", type=float, default=None)
    m.add_argument("--lam", type=float, default=None)
    m.add_argument("--floor", type=float, default=None)
    m.add_argument("--csv", action="store_true")
    m.add_argument("--figure", type=str, default=None)
    _common_flags(m)

    v = subs.add_parser("verify", help="check a witness coloring certificate")
    v.add_argument("--kind", required=True, choices=["ap", "semi", "quasi"])
    v.add_argument("--param", type=int, default=0)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--witness", required=True, help="coloring as a 01 string")
    _common_flags(v)

    t = subs.add_parser("table", help="CSV of bounds (and optional exact values)")
    t.add_argument("--family", choices=["ap", "semi", "quasi", "all"], default="all")
    t.add_argument("--k-range", required=True, dest="k_range")
    t.add_argument("--param-range", default=None, dest="param_range")
    t.add_argument("--exact", action="store_true", help="run exact searches per row")
    t.add_argument("--max-n", type=int, default=None, dest="max_n")
    t.add_argument("--out", type=str, default=None)
    t.add_argument("--figure", type=str, default=None)
    _common_flags(t)

    return p


def _run_config(ns) -> RunConfig:
    filecfg = _load_config_file(ns.config) if getattr(ns, "config", None) else {}
    fmt = "human"
    if getattr(ns, "json", False):
        fmt = "json"
    elif getattr(ns, "csv", False):
        fmt = "csv"
    rc = RunConfig(
        subcommand=ns.subcommand,
        fmt=fmt,
        seed=_resolve(ns, filecfg, "seed", 0),
        threads=_resolve(ns, filecfg, "threads", 1),
        node_budget=_resolve(ns, filecfg, "node_budget", DEFAULT_NODE_BUDGET),
        time_budget=_resolve(ns, filecfg, "time_budget", None),
    )
    rc._filecfg = filecfg
    return rc


def _emit(payload: dict, rc: RunConfig, human_lines) -> None:
    if rc.fmt == "json":
        sys.stdout.write(dumps(payload))
    else:
        for line in rc.echo_lines():
            print(f"config {line}")
        for line in human_lines:
            print(line)


def _cmd_search(ns, rc: RunConfig) -> int:
    kind = ProgressionKind.parse(ns.kind, ns.param)
    split = _resolve(ns, rc._filecfg, "split_depth", DEFAULT_SPLIT_DEPTH)
    split = max(0, min(split, ns.max_n - 1))
    cfg = SearchConfig(
        kind=kind,
        k=ns.k,
        max_n=ns.max_n,
        symmetry_break=not ns.no_symmetry_break,
        parallel_width=split,
        threads=rc.threads,
        node_budget=rc.node_budget,
        time_budget=rc.time_budget,
    )
    rc.flags = {"kind": ns.kind, "param": ns.param, "k": ns.k, "max_n": ns.max_n,
                "split_depth": split, "symmetry_break": cfg.symmetry_break}
    t0 = time.perf_counter()
    try:
        res = ramsey_number(cfg)
    except CeilingReachedError as e:
        millis = int((time.perf_counter() - t0) * 1000)
        payload = {
            "kind": ns.kind, "param": ns.param, "k": ns.k,
            "value": None, "lower_bound": e.lower_bound,
            "witness": e.witness.coloring.to_string() if e.witness else None,
            "nodes": e.nodes, "millis": millis, "incomplete": True,
            "config": rc.echo(),
        }
        _emit(payload, rc, [f"ceiling reached: value >= {e.lower_bound}",
                            f"witness at {e.lower_bound - 1}: {payload['witness']}"])
        return EXIT_BUDGET
    payload = {
        "kind": ns.kind, "param": ns.param, "k": ns.k,
        "value": res.value, "witness": res.witness.coloring.to_string(),
        "nodes": res.nodes_explored, "millis": int(res.elapsed * 1000),
        "config": rc.echo(),
    }
    _emit(payload, rc, [
        f"{kind} k={ns.k}: value = {res.value}",
        f"witness [1,{res.value - 1}]: {payload['witness']}",
        f"nodes = {res.nodes_explored}, millis = {payload['millis']}",
    ])
    return EXIT_OK


def _cmd_bound(ns, rc: RunConfig) -> int:
    fn, argnames = BOUND_REGISTRY[ns.name]
    args = {}
    for a in argnames:
        val = getattr(ns, a)
        if val is None:
            if a == "tol":
                val = 1e-6
            else:
                raise _UsageError(f"bound {ns.name} requires --{a}")
        args[a] = val
    rc.flags = {"name": ns.name, **args}
    try:
        result = fn(**args)
    except ApplicabilityError as e:
        payload = {"name": ns.name, "args": args, "value": None, "direction": None,
                   "asymptotic": None, "applicable": False, "failed_condition": e.clause,
                   "config": rc.echo()}
        _emit(payload, rc, [f"{ns.name}: not applicable ({e.clause})"])
        return EXIT_OK
    if isinstance(result, TowerExpr):
        payload = {"name": ns.name, "args": args, "value": str(result),
                   "direction": "upper", "asymptotic": False, "applicable": True,
                   "log_profile": result.log_profile(), "config": rc.echo()}
        human = [f"{ns.name} = {result}"] + [f"  {line}" for line in result.log_profile()]
    else:
        payload = {"name": ns.name, "args": args, "value": to_jsonable(result.value),
                   "direction": result.direction, "asymptotic": result.asymptotic,
                   "applicable": True, "config": rc.echo()}
        if result.extra:
            payload["extra"] = to_jsonable(result.extra)
        human = [f"{ns.name} = {format_cell(result.value)} "
                 f"({result.direction}{', asymptotic' if result.asymptotic else ''})"]
        if result.extra:
            human.append(f"  extra: {to_jsonable(result.extra)}")
    _emit(payload, rc, human)
    return EXIT_OK


def _require_flags(ns, names):
    missing = [f"--{n}" for n in names if getattr(ns, n) is None]
    if missing:
        raise _UsageError(f"missing required flags: {', '.join(missing)}")


def _cmd_count(ns, rc: RunConfig) -> int:
    if ns.what == "report":
        _require_flags(ns, ("n", "kind", "k"))
        kind = ProgressionKind.parse(ns.kind, ns.param)
        rc.flags = {"what": "report", "n": ns.n, "kind": ns.kind, "param": ns.param, "k": ns.k}
        rep = union_bound_check(ns.n, kind, ns.k)
        payload = to_jsonable(rep)
        payload["config"] = rc.echo()
        _emit(payload, rc, [
            f"N={rep.N} kind={kind} k={rep.k}",
            f"S = {rep.S}, sum T = {rep.sum_T}, union bound = {format_cell(rep.union_bound)}",
            f"argmax = {rep.argmax}, at (1,1): {rep.argmax_at_origin}",
            f"chain S <= sum T <= bound: {'ok' if rep.chain_ok else 'VIOLATED'}",
        ])
        return EXIT_OK if rep.chain_ok else EXIT_CHECK
    if ns.what == "lambda":
        _require_flags(ns, ("k",))
        rc.flags = {"what": "lambda", "k": ns.k}
        lv = lambda_vector(ns.k)
        payload = {"k": lv.k, "v0": lv.v0, "v1": lv.v1, "sum": lv.sum}
        if ns.k > 1:
            prev = lambda_vector(ns.k - 1)
            payload["ratio_to_previous"] = float(lv.sum / prev.sum)
        payload = to_jsonable(payload)
        payload["config"] = rc.echo()
        _emit(payload, rc, [f"lambda({ns.k}) = ({format_cell(lv.v0)}, {format_cell(lv.v1)}), "
                            f"sum = {format_cell(lv.sum)}"])
        return EXIT_OK
    # sums
    _require_flags(ns, ("k", "m", "r"))
    rc.flags = {"what": "sums", "k": ns.k, "m": ns.m, "r": ns.r}
    ms = scopem_multinomial_sum(ns.k, ns.m, ns.r)
    payload = {"k": ns.k, "m": ns.m, "r": ns.r,
               "multinomial_sum": ms.value, "multinomial_bound": ms.bound,
               "attains_bound": ms.value == ms.bound}
    human = [f"scope-{ns.m} sum = {ms.value}, bound = {format_cell(ms.bound)}"]
    if ns.m == 2:
        s2 = scope2_closed_sum(ns.k, ns.r)
        payload["scope2_sum"] = s2.value
        payload["scope2_bound"] = s2.bound
        payload["matches_scope2"] = s2.value == ms.value
        human.append(f"scope-2 closed sum = {s2.value} (match: {s2.value == ms.value})")
    payload = to_jsonable(payload)
    payload["config"] = rc.echo()
    _emit(payload, rc, human)
    return EXIT_OK


def _mc_csv(payload: dict, rc: RunConfig) -> str:
    params = payload["parameters"]
    header = sorted(params) + ["samples", "seed", "estimate", "std_error", "bound", "passed"]
    row = [params[key] for key in sorted(params)]
    row += [payload["samples"], payload["seed"], payload["estimate"],
            payload["std_error"], payload["bound_value"], payload["passed"]]
    return csv_lines(header, [row], comments=rc.echo_lines())


def _cmd_mc(ns, rc: RunConfig) -> int:
    samples = _resolve(ns, rc._filecfg, "samples", DEFAULT_SAMPLES)
    if ns.experiment == "good-fraction":
        _require_flags(ns, ("n", "kind", "k"))
        kind = ProgressionKind.parse(ns.kind, ns.param)
        rc.flags = {"experiment": ns.experiment, "samples": samples,
                    "n": ns.n, "kind": ns.kind, "param": ns.param, "k": ns.k}
        est = mc_good_fraction(ns.n, kind, ns.k, samples, rc.seed)
        payload = {
            "name": "good-fraction",
            "parameters": {"n": ns.n, "kind": ns.kind, "param": ns.param, "k": ns.k},
            "samples": samples, "seed": rc.seed,
            "estimate": est.value, "std_error": est.std_error,
            "bound_value": None, "passed": True, "extra": {},
        }
        if ns.n <= 16:
            exact = 1.0 - count_S(ns.n, kind, ns.k) / 2.0**ns.n
            payload["extra"]["exact"] = exact
            payload["passed"] = abs(est.value - exact) <= 4.0 * est.std_error
    else:
        runner, required, optional = EXPERIMENTS[ns.experiment]
        _require_flags(ns, required)
        kwargs = {name: getattr(ns, name) for name in required}
        for name, default in optional.items():
            val = _resolve(ns, rc._filecfg, name, default)
            kwargs[name] = val
        rc.flags = {"experiment": ns.experiment, "samples": samples, **kwargs}
        rep = runner(samples=samples, rng=Rng(rc.seed), **kwargs)
        payload = {
            "name": rep.name, "parameters": rep.parameters,
            "samples": rep.samples, "seed": rc.seed,
            "estimate": rep.estimate, "std_error": rep.std_error,
            "bound_value": rep.bound_value, "passed": rep.passed,
            "extra": to_jsonable(rep.extra),
        }
    payload["config"] = rc.echo()
    if ns.figure:
        render_mc_figure(payload, ns.figure)
    if rc.fmt == "csv":
        sys.stdout.write(_mc_csv(payload, rc))
    elif rc.fmt == "json":
        sys.stdout.write(dumps(payload))
    else:
        _emit(payload, rc, [
            f"{payload['name']}: estimate = {payload['estimate']:.6g} "
            f"(se {payload['std_error']:.3g}, {payload['samples']} samples)",
            f"bound = {format_cell(payload['bound_value'])}, passed = {payload['passed']}",
        ])
    return EXIT_OK if payload["passed"] else EXIT_CHECK


def _cmd_verify(ns, rc: RunConfig) -> int:
    kind = ProgressionKind.parse(ns.kind, ns.param)
    coloring = Coloring.from_string(ns.witness)
    rc.flags = {"kind": ns.kind, "param": ns.param, "k": ns.k, "n": coloring.n}
    cert = Certificate(kind, ns.k, coloring.n, coloring)
    ok = verify_certificate(cert)
    violation = None
    if not ok:
        violation = str(find_monochromatic(coloring, kind, ns.k))
    payload = {"kind": ns.kind, "param": ns.param, "k": ns.k, "n": coloring.n,
               "witness": ns.witness, "verified": ok, "violation": violation,
               "config": rc.echo()}
    _emit(payload, rc, [f"verified: {ok}" if ok else f"FAILED: monochromatic {violation}"])
    return EXIT_OK if ok else EXIT_CHECK


_TABLE_HEADER = [
    "family", "param", "k", "exact",
    "lower_constructive", "lower_probabilistic", "lower_beta_pow", "lower_g_pow",
    "lower_primes", "lower_general",
    "upper_scope", "upper_landman", "upper_gowers", "flags",
]


def _exact_cell(kind: ProgressionKind, k: int, spec: TableSpec):
    """(cell, flag) for the exact-search column."""
    if not spec.exact:
        return None, None
    cfg = SearchConfig(
        kind=kind, k=k, max_n=spec.max_n, threads=spec.threads,
        node_budget=spec.node_budget, time_budget=spec.time_budget,
    )
    try:
        res = ramsey_number(cfg)
        return res.value, None
    except CeilingReachedError as e:
        return f">={e.lower_bound}", "incomplete"
    except (BudgetExceededError, TimeBudgetError) as e:
        lb = getattr(e, "lower_bound", None)
        return (f">={lb}" if lb else None), "incomplete"


def _maybe(fn, *args):
    try:
        return fn(*args).value
    except ApplicabilityError:
        return None


def emit_table(spec: TableSpec) -> tuple[list[str], list[list]]:
    """One row per (family, param, k); inapplicable cells are None (n/a)."""
    beta = q1_vijay_beta(1e-6)
    _, g = q1_new_base()
    rows = []
    for family in spec.families:
        for param in spec.params[family]:
            for k in range(spec.k_lo, spec.k_hi + 1):
                kind = ProgressionKind.parse(family, param)
                flags = []
                cells = {name: None for name in _TABLE_HEADER}
                cells["family"], cells["param"], cells["k"] = family, param, k
                exact, flag = _exact_cell(kind, k, spec)
                cells["exact"] = exact
                if flag:
                    flags.append(flag)
                if family == "ap":
                    cells["lower_probabilistic"] = vdw_lower_probabilistic(k).value
                    cells["lower_general"] = _maybe(vdw_lower_general, k, 2)
                    cells["lower_primes"] = _maybe(vdw_lower_primes, k - 1, 2)
                    cells["upper_gowers"] = str(gowers_upper(k, 2))
                elif family == "semi":
                    cells["lower_constructive"] = sp_lower_constructive(param, k).value
                    cells["lower_probabilistic"] = sp_lower_probabilistic(param, k).value
                    cells["upper_scope"] = _maybe(sp_upper, param, k)
                else:
                    cells["lower_beta_pow"] = beta**k if param == 1 else None
                    cells["lower_g_pow"] = g**k if param == 1 else None
                    landman = q_landman_coeff(k)
                    if landman.extra["diameter"] == param:
                        cells["upper_landman"] = landman.value
                    if param == 1 and not g**k > beta**k:
                        flags.append("base-order-violation")
                exact_num = exact if isinstance(exact, int) else None
                if exact_num is not None:
                    lows = [cells["lower_constructive"], cells["lower_beta_pow"],
                            cells["lower_g_pow"], cells["lower_primes"]]
                    ups = [cells["upper_scope"], cells["upper_landman"]]
                    if any(lo is not None and not lo <= exact_num for lo in lows):
                        flags.append("bracket-violation")
                    if any(up is not None and not exact_num <= up for up in ups):
                        flags.append("bracket-violation")
                cells["flags"] = ";".join(flags) if flags else "ok"
                rows.append([cells[name] for name in _TABLE_HEADER])
    return list(_TABLE_HEADER), rows


def _cmd_table(ns, rc: RunConfig) -> int:
    rc.fmt = "csv"
    k_lo, k_hi = _parse_range(ns.k_range)
    families = ("ap", "semi", "quasi") if ns.family == "all" else (ns.family,)
    default_params = {"ap": [0], "semi": [2, 3], "quasi": [1]}
    params = {}
    for family in families:
        if ns.param_range is not None:
            lo, hi = _parse_range(ns.param_range)
            params[family] = [0] if family == "ap" else list(range(lo, hi + 1))
        else:
            params[family] = default_params[family]
    max_n = _resolve(ns, rc._filecfg, "max_n", 64)
    spec = TableSpec(
        families=families, params=params, k_lo=k_lo, k_hi=k_hi,
        exact=ns.exact, max_n=max_n, threads=rc.threads,
        node_budget=rc.node_budget, time_budget=rc.time_budget,
    )
    rc.flags = {"family": ns.family, "k_range": ns.k_range,
                "param_range": ns.param_range, "exact": ns.exact, "max_n": max_n}
    header, rows = emit_table(spec)
    text = csv_lines(header, rows, comments=rc.echo_lines())
    if ns.out:
        with open(ns.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if ns.figure:
        render_table_figure(header, rows, ns.figure)
    flags = [row[header.index("flags")] for row in rows]
    if any("violation" in f for f in flags):
        return EXIT_CHECK
    if any("incomplete" in f for f in flags):
        return EXIT_BUDGET
    return EXIT_OK


_HANDLERS = {
    "search": _cmd_search,
    "bound": _cmd_bound,
    "count": _cmd_count,
    "mc": _cmd_mc,
    "verify": _cmd_verify,
    "table": _cmd_table,
}


def dispatch(argv) -> int:
    """Route argv to a subcommand handler and map errors to exit codes."""
    argv = list(argv)
    if argv[:2] == ["bound", "table"]:
        argv = ["table"] + argv[2:]
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        rc = _run_config(ns)
        return _HANDLERS[ns.subcommand](ns, rc)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        sys.stderr.write(parser.format_usage())
        return EXIT_USAGE
    except (ValueError, ApplicabilityError) as e:
        print(f"error: {e}", file=sys.stderr)
        sys.stderr.write(parser.format_usage())
        return EXIT_USAGE
    except (BudgetExceededError, TimeBudgetError, CeilingReachedError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except RamseyLabError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CHECK


def main(argv=None) -> int:
    return dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
