"""Command-line interface: ``geepress {fit,select,diagnose,simulate,replicate}``.

Exit codes: 0 success, 1 input or usage error, 2 numerical failure
(non-convergence, singular matrices, failed selection).
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import engine, harness
from .correlation import KINDS, label, normalize_kind
from .criteria import CRITERIA, gpc_contributions, sc_contributions, select
from .data import read_long_csv, write_long_csv
from .exceptions import GeePressError, InputError, ParameterError, RangeViolationError
from .inference import LinearHypothesis, wald_test
from .simgen import CARDIA_YEARS, ScenarioSpec, all_scenarios, generate_dataset, synthetic_cardia

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2

CONFIG_HELP = """\
replicate config file: one `key = value` per line, `#` starts a comment.
  tables       = 1, 9, B1          table ids 1-9 (selection) and B1-B8 (MSE)
  scenario     = binary,balanced,ar1,0.2,50   (repeatable; family,balance,structure,alpha,N)
  reps         = 1000
  seed         = 20240101          (falls back to $GEEPRESS_SEED)
  out_dir      = report
  jobs         = 4
  candidates   = indep,ar1,exch,un (for scenario lines)
  criteria     = CIC,DBAR,GPC,QIC,RJ1,RJ2,SC
  sample_sizes = 50,100
  phi          = fixed-one | estimate
"""


class _Formatter:
    def __init__(self, precision):
        self.digits = int(precision)

    def __call__(self, x):
        if x is None:
            return ""
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            return str(int(x))
        x = float(x)
        if not math.isfinite(x):
            return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")
        return f"{x:.{self.digits}g}"


def _csv_text(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _aligned(header, rows):
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) if j else c.ljust(w) for j, (c, w) in enumerate(zip(r, widths)))
                     for r in cells) + "\n"


def _emit(args, text_table, csv_table):
    if args.out:
        Path(args.out).write_bytes(csv_table.encode("utf-8"))
    else:
        sys.stdout.write(text_table)


def _seed(value):
    if value is not None:
        return int(value)
    env = os.environ.get("GEEPRESS_SEED")
    return int(env) if env else harness.DEFAULT_SEED


# ---------------------------------------------------------------- model commands


def _load(args):
    data = read_long_csv(args.data, args.family)
    return data if args.no_intercept else data.add_intercept()


def _options(args):
    return engine.FitOptions(max_iter=args.max_iter, tol=args.tol, phi_mode=args.phi)


def _format_alpha(alpha, fmt):
    if alpha is None:
        return "none"
    if np.ndim(alpha) == 0:
        return fmt(alpha)
    return "; ".join(" ".join(fmt(v) for v in row) for row in np.asarray(alpha))


def cmd_fit(args):
    data = _load(args)
    fmt = _Formatter(args.precision)
    fit = engine.fit(data, args.family, args.corr, _options(args))
    rows = []
    for j, name in enumerate(data.columns):
        z = fit.beta[j] / fit.bse_robust[j] if fit.bse_robust[j] > 0 else float("nan")
        p = wald_test(fit, LinearHypothesis.coefficients([j], fit.p)).p_value if fit.converged else float("nan")
        rows.append([name, fmt(fit.beta[j]), fmt(fit.bse_model[j]), fmt(fit.bse_robust[j]), fmt(z), fmt(p)])
    header = ["term", "estimate", "model_se", "robust_se", "wald_z", "wald_p"]
    summary = [
        ("family", args.family), ("working_correlation", label(args.corr)),
        ("alpha", _format_alpha(fit.alpha, fmt)), ("phi", fmt(fit.phi)),
        ("converged", str(fit.converged).lower()), ("iterations", str(fit.iterations)),
        ("clusters", str(fit.n_clusters)), ("observations", str(fit.n_obs)),
    ]
    text = _aligned(header, rows) + "\n" + "".join(f"{k}: {v}\n" for k, v in summary)
    csv_rows = rows + [[f"# {k}", v, "", "", "", ""] for k, v in summary]
    _emit(args, text, _csv_text(header, csv_rows))
    if not fit.converged:
        print(f"error: fit did not converge in {fit.iterations} iterations", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def cmd_select(args):
    data = _load(args)
    fmt = _Formatter(args.precision)
    candidates = [normalize_kind(c) for c in _list(args.candidates)]
    criteria = [c.upper() for c in _list(args.criteria)]
    bad = [c for c in criteria if c not in CRITERIA]
    if bad:
        raise ParameterError(f"unknown criteria {bad}; expected a subset of {CRITERIA}")
    report = select(data, args.family, candidates, _options(args), criteria)
    header = ["criterion"] + [label(k) for k in candidates]
    rows = []
    for crit, vals in report.table(criteria):
        row = [crit]
        for k in candidates:
            v = vals.get(k)
            mark = "*" if report.winners.get(crit) == k else ""
            row.append("failed" if v is None else fmt(v) + mark)
        rows.append(row)
    text = _aligned(header, rows)
    text += "\n* marks the selected structure (minimum; |RJ1-1|, |RJ2-1| and |DBAR| for the RJ family)\n"
    for k, msg in report.errors.items():
        text += f"{label(k)} excluded: {msg}\n"
    _emit(args, text, _csv_text(header, rows))
    return EXIT_OK


def cmd_diagnose(args):
    data = _load(args)
    fmt = _Formatter(args.precision)
    fit = engine.fit(data, args.family, args.corr, _options(args))
    if not fit.converged:
        print(f"error: fit did not converge in {fit.iterations} iterations", file=sys.stderr)
        return EXIT_NUMERIC
    C = engine.one_step_deletions(fit)
    g = gpc_contributions(fit)
    s = sc_contributions(fit)
    header = ["id", "n", "trace_h", "dbeta_norm", "gpc_contribution", "sc_contribution"]
    rows = []
    for i, c in enumerate(data.clusters):
        rows.append([c.id, c.n, fmt(np.trace(engine.leverage(fit, i))), fmt(np.linalg.norm(C[i])),
                     fmt(g[i]), fmt(s[i])])
    text = _aligned(header, rows)
    text += f"\nsum trace_h: {fmt(sum(np.trace(engine.leverage(fit, i)) for i in range(fit.n_clusters)))}"
    text += f" (p = {fit.p}); GPC: {fmt(g.sum())}; SC: {fmt(s.sum())}\n"
    _emit(args, text, _csv_text(header, rows))
    return EXIT_OK


# ---------------------------------------------------------------- simulation commands


def _without_intercept(dataset):
    if dataset.columns and dataset.columns[0] == "intercept":
        return dataset.with_design([c.X[:, 1:] for c in dataset.clusters], dataset.columns[1:])
    return dataset


def cardia_trend(fit, years=None, age10=0.0):
    """Predicted response by year for the three education groups (plottable rows)."""
    years = np.linspace(0.0, max(CARDIA_YEARS), 61) if years is None else np.asarray(years, dtype=float)
    rows = []
    for group, (some, degree) in (("high_school", (0, 0)), ("some_college", (1, 0)),
                                  ("college_degree", (0, 1))):
        for yr in years:
            d = yr / 10.0
            x = np.array([1.0, age10, age10**2, some, degree, d, d**2, d**3])
            rows.append((group, yr, float(fit.family.inverse_link(x @ fit.beta))))
    return rows


def cmd_simulate(args):
    fmt = _Formatter(args.precision)
    if args.list_scenarios:
        header = ["family", "balance", "structure", "alpha", "N", "descriptor"]
        rows = [[s.family, s.balance, label(s.structure), fmt(s.alpha), s.N,
                 f"{s.family},{s.balance},{s.structure},{s.alpha:g},{s.N}"] for s in all_scenarios()]
        sys.stdout.write(_csv_text(header, rows) if args.csv else _aligned(header, rows))
        return EXIT_OK
    seed = _seed(args.seed)
    out = Path(args.out_dir)
    if args.cardia:
        _mkdir(out)
        data = synthetic_cardia(n_subjects=args.subjects, seed=seed)
        write_long_csv(_without_intercept(data), out / "cardia.csv")
        fit = engine.fit(data, "binary", "ar1")
        rows = [(g, fmt(yr), fmt(v)) for g, yr, v in cardia_trend(fit)]
        (out / "cardia_trend.csv").write_bytes(_csv_text(["education", "year", "predicted"], rows).encode())
        print(f"wrote {out / 'cardia.csv'} and {out / 'cardia_trend.csv'}")
        return EXIT_OK
    if not args.scenario:
        raise InputError("simulate needs --scenario, --cardia or --list-scenarios")
    spec = ScenarioSpec.parse(args.scenario, seed=seed, reps=args.reps)
    harness.check_design_feasible(spec)
    if spec.reps == 0:
        print(f"scenario {spec.label} is feasible; nothing generated (--reps 0)")
        return EXIT_OK
    _mkdir(out)
    width = max(4, len(str(spec.reps - 1)))
    for k in range(spec.reps):
        write_long_csv(_without_intercept(generate_dataset(spec, k)), out / f"{spec.label}-{k:0{width}d}.csv")
    print(f"wrote {spec.reps} datasets for {spec.label} to {out}")
    return EXIT_OK


def _mkdir(path):
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise InputError(f"cannot create output directory {path}: {exc}") from exc


def cmd_replicate(args):
    if args.config:
        try:
            config = harness.load_config(args.config)
        except OSError as exc:
            raise InputError(f"cannot read config {args.config}: {exc}") from exc
    else:
        config = harness.ReportConfig()
    overrides = {}
    if args.tables:
        overrides["tables"] = _list(args.tables)
    if args.scenario:
        overrides["scenarios"] = tuple(args.scenario)
    if args.reps is not None:
        overrides["reps"] = args.reps
    if args.seed is not None or not args.config:
        overrides["seed"] = _seed(args.seed)
    if args.jobs is not None:
        overrides["jobs"] = args.jobs
    if args.out_dir is not None:
        overrides["out_dir"] = args.out_dir
    if args.candidates is not None:
        overrides["candidates"] = _list(args.candidates)
    if overrides:
        fields = {k: getattr(config, k) for k in harness.CONFIG_KEYS}
        fields.update(overrides)
        config = harness.ReportConfig(**fields)
    for spec in config.scenarios:
        harness.check_design_feasible(spec)
    if config.reps == 0:
        print(f"config valid: {len(config.tables)} tables, {len(config.scenarios)} scenarios; "
              "nothing run (reps = 0)")
        return EXIT_OK

    def progress(res):
        state = " DEGRADED" if res.degraded else ""
        print(f"{res.spec.label} [{'/'.join(label(c) for c in res.candidates)}]: "
              f"{res.replicates_completed} completed, {res.replicates_failed} failed, "
              f"{res.wall_time:.1f}s{state}", file=sys.stderr)

    harness.replicate_report(config, progress=progress)
    print(f"report written to {config.out_dir}")
    return EXIT_OK


# ---------------------------------------------------------------- parser


def _list(value):
    if isinstance(value, (list, tuple)):
        return tuple(value)
    return tuple(v.strip() for v in str(value).split(",") if v.strip())


def _model_args(p):
    p.add_argument("data", help="long-format CSV: id,time,y,x1..xp")
    p.add_argument("--family", choices=("binary", "poisson", "gaussian"), default="binary")
    p.add_argument("--corr", choices=KINDS, default="exch", type=str.lower)
    p.add_argument("--phi", choices=("fixed1", "fixed-one", "estimate"), default="estimate")
    p.add_argument("--max-iter", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--no-intercept", action="store_true", help="do not prepend an intercept column")
    p.add_argument("--out", help="write CSV here instead of printing a table")


def build_parser():
    parser = argparse.ArgumentParser(prog="geepress", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=6, help="significant digits (default 6)")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", parents=[common], help="fit a GEE model")
    _model_args(p)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("select", parents=[common], help="rank working correlation structures")
    _model_args(p)
    p.add_argument("--candidates", default=",".join(KINDS))
    p.add_argument("--criteria", default=",".join(CRITERIA))
    p.set_defaults(func=cmd_select)

    p = sub.add_parser("diagnose", parents=[common], help="per-cluster leverage, deletion and criterion contributions")
    _model_args(p)
    p.set_defaults(func=cmd_diagnose)

    p = sub.add_parser("simulate", parents=[common], help="generate datasets for a design cell")
    p.add_argument("--scenario", help="family,balance,structure,alpha,N e.g. binary,balanced,ar1,0.2,50")
    p.add_argument("--list-scenarios", action="store_true", help="print the 48 design cells")
    p.add_argument("--csv", action="store_true", help="with --list-scenarios, print CSV")
    p.add_argument("--cardia", action="store_true", help="write the synthetic CARDIA-shaped panel")
    p.add_argument("--subjects", type=int, default=400)
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--seed", type=int)
    p.add_argument("--out-dir", default="geepress-data")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("replicate", parents=[common], help="run simulation tables and write a report",
                       epilog=CONFIG_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--config")
    p.add_argument("--tables", help="comma-separated table ids, e.g. 1,9,B1")
    p.add_argument("--scenario", action="append", help="cell descriptor (repeatable)")
    p.add_argument("--candidates")
    p.add_argument("--reps", type=int, help="0 validates the config without running")
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int)
    p.add_argument("--out-dir")
    p.set_defaults(func=cmd_replicate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if getattr(args, "phi", None) == "fixed1":
        args.phi = "fixed-one"
    try:
        return args.func(args)
    except (InputError, ParameterError, RangeViolationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GeePressError, np.linalg.LinAlgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
