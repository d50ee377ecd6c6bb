"""Command-line surface: solve states, reproduce the benchmark table, dump wavefunctions."""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import json
import os
import sys
from dataclasses import asdict, dataclass, replace

from .errors import BracketError, HyperwellError, StateLabelError
from .numerov import find_level, resolve_config
from .potential import PotentialParams, solve_approx_constants
from .reference import (
    TABLE1_D,
    TABLE1_HBAR,
    TABLE1_MU,
    ReferenceRow,
    StateLabel,
    parse_state_label,
    reference_rows,
)
from .spectrum import QuantumState, energy_level, s_wave_energy
from .wavefunctions import sample_radial

#: Published accuracy band (percent) the benchmark table is said to satisfy.
PAPER_BAND_PERCENT = (0.001, 0.13)


@dataclass(frozen=True)
class BenchConfig:
    """Flat key=value configuration with benchmark defaults."""

    D: float = TABLE1_D
    mu: float = TABLE1_MU
    hbar: float = TABLE1_HBAR
    n_grid: int = 20000
    energy_tol: float = 1e-8
    max_bisections: int = 200
    quad_points: int = 4000
    tol_analytic: float = 1e-3       # |E_analytic - e_present| gate
    tol_numeric: float = 5e-4        # |E_numeric - e_lucha| gate
    tol_rel_err_percent: float = 0.2  # analytic-vs-numeric gate

    _INT_KEYS = ("n_grid", "max_bisections", "quad_points")


def load_config(path: str) -> BenchConfig:
    """Parse a flat key=value file ('#' comments, blank lines allowed)."""
    values: dict = {}
    valid = {k for k in BenchConfig.__dataclass_fields__ if not k.startswith("_")}
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{line_no}: expected key=value, got {raw.rstrip()!r}")
            key, _, text = line.partition("=")
            key = key.strip()
            if key not in valid:
                raise ValueError(f"{path}:{line_no}: unknown key {key!r}")
            text = text.strip()
            values[key] = int(text) if key in BenchConfig._INT_KEYS else float(text)
    return BenchConfig(**values)


@dataclass(frozen=True)
class ReportRow:
    ref: ReferenceRow
    e_analytic: float
    e_numeric: float
    rel_err_ours_percent: float
    rel_err_paper_percent: float


@dataclass(frozen=True)
class ReportSummary:
    max_rel_err: float
    mean_rel_err: float
    min_rel_err: float
    analytic_violations: tuple = ()
    numeric_violations: tuple = ()
    rel_err_violations: tuple = ()


@dataclass(frozen=True)
class ComparisonReport:
    rows: tuple
    summary: ReportSummary
    config: BenchConfig

    @property
    def passed(self) -> bool:
        s = self.summary
        return not (s.analytic_violations or s.numeric_violations or s.rel_err_violations)


def _analytic_energy(p: PotentialParams, state: QuantumState) -> float:
    if state.l == 0:
        return s_wave_energy(p, state.n).energy
    return energy_level(p, state).energy


def _numeric_energy(p: PotentialParams, state: QuantumState, config: BenchConfig) -> float:
    cfg = resolve_config(p, state.l, n_grid=config.n_grid,
                         energy_tol=config.energy_tol,
                         max_bisections=config.max_bisections)
    return find_level(p, state, cfg).energy


def run_table1(config: BenchConfig | None = None, out_dir: str | None = None) -> ComparisonReport:
    """Recompute the full benchmark table and compare against the references.

    One task per row is fanned out over a thread pool (the integrator
    kernel releases the GIL); assembly is an ordered single-threaded
    merge, so output is deterministic.  When ``out_dir`` is given, writes
    ``table1.csv`` and ``table1.json`` there.
    """
    if config is None:
        config = BenchConfig()
    refs = reference_rows()

    def one_row(ref: ReferenceRow) -> ReportRow:
        p = PotentialParams(D=config.D, alpha=ref.alpha, sigma0=ref.sigma0,
                            mu=config.mu, hbar=config.hbar)
        state = QuantumState(n=ref.label.n, l=ref.label.l)
        e_an = _analytic_energy(p, state)
        e_num = _numeric_energy(p, state, config)
        rel_ours = 100.0 * abs(e_an - e_num) / abs(e_num)
        rel_paper = 100.0 * abs(ref.e_present - ref.e_lucha) / abs(ref.e_lucha)
        return ReportRow(ref=ref, e_analytic=e_an, e_numeric=e_num,
                         rel_err_ours_percent=rel_ours, rel_err_paper_percent=rel_paper)

    # warm the jit kernel once before fanning out
    one_row(refs[0])
    workers = min(8, os.cpu_count() or 1)
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        rows = tuple(pool.map(one_row, refs))

    rels = [row.rel_err_ours_percent for row in rows]
    an_viol = tuple(
        (row.ref.label.text, row.ref.alpha, row.ref.sigma0,
         abs(row.e_analytic - row.ref.e_present))
        for row in rows if abs(row.e_analytic - row.ref.e_present) > config.tol_analytic)
    num_viol = tuple(
        (row.ref.label.text, row.ref.alpha, row.ref.sigma0,
         abs(row.e_numeric - row.ref.e_lucha))
        for row in rows if abs(row.e_numeric - row.ref.e_lucha) > config.tol_numeric)
    rel_viol = tuple(
        (row.ref.label.text, row.ref.alpha, row.ref.sigma0, row.rel_err_ours_percent)
        for row in rows if row.rel_err_ours_percent > config.tol_rel_err_percent)
    summary = ReportSummary(max_rel_err=max(rels), mean_rel_err=sum(rels) / len(rels),
                            min_rel_err=min(rels), analytic_violations=an_viol,
                            numeric_violations=num_viol, rel_err_violations=rel_viol)
    report = ComparisonReport(rows=rows, summary=summary, config=config)
    if out_dir is not None:
        write_csv(report, os.path.join(out_dir, "table1.csv"))
        write_json(report, os.path.join(out_dir, "table1.json"))
    return report


def write_csv(report: ComparisonReport, path: str) -> None:
    """One row per benchmark entry; shortest round-trip float formatting."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["state", "alpha", "sigma0", "E_analytic", "E_numeric",
                         "E_paper_present", "E_paper_lucha", "E_paper_dong",
                         "rel_err_percent"])
        for row in report.rows:
            ref = row.ref
            writer.writerow([ref.label.text, repr(ref.alpha), repr(ref.sigma0),
                             repr(row.e_analytic), repr(row.e_numeric),
                             repr(ref.e_present), repr(ref.e_lucha), repr(ref.e_dong),
                             repr(row.rel_err_ours_percent)])


def write_json(report: ComparisonReport, path: str) -> None:
    payload = {
        "config": {k: v for k, v in asdict(report.config).items()},
        "rows": [
            {
                "state": row.ref.label.text,
                "alpha": row.ref.alpha,
                "sigma0": row.ref.sigma0,
                "E_analytic": row.e_analytic,
                "E_numeric": row.e_numeric,
                "E_paper_present": row.ref.e_present,
                "E_paper_lucha": row.ref.e_lucha,
                "E_paper_dong": row.ref.e_dong,
                "rel_err_ours_percent": row.rel_err_ours_percent,
                "rel_err_paper_percent": row.rel_err_paper_percent,
            }
            for row in report.rows
        ],
        "summary": {
            "max_rel_err_percent": report.summary.max_rel_err,
            "mean_rel_err_percent": report.summary.mean_rel_err,
            "min_rel_err_percent": report.summary.min_rel_err,
            "paper_band_percent": list(PAPER_BAND_PERCENT),
            "analytic_violations": [list(v) for v in report.summary.analytic_violations],
            "numeric_violations": [list(v) for v in report.summary.numeric_violations],
            "rel_err_violations": [list(v) for v in report.summary.rel_err_violations],
        },
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def format_report(report: ComparisonReport) -> str:
    """Human-facing fixed 5-decimal table plus the violation summary."""
    lines = []
    head = (f"{'state':<6}{'alpha':<7}{'sigma0':<8}{'E_analytic':<12}{'E_numeric':<12}"
            f"{'E_present':<11}{'E_lucha':<11}{'rel_err_%':<10}")
    lines.append(head)
    lines.append("-" * len(head))
    for row in report.rows:
        ref = row.ref
        lines.append(
            f"{ref.label.text:<6}{ref.alpha:<7.2f}{ref.sigma0:<8.1f}"
            f"{row.e_analytic:<12.5f}{row.e_numeric:<12.5f}"
            f"{ref.e_present:<11.5f}{ref.e_lucha:<11.5f}"
            f"{row.rel_err_ours_percent:<10.5f}")
    s = report.summary
    lines.append("")
    lines.append(f"rel. err (analytic vs numeric, %): min {s.min_rel_err:.5f}  "
                 f"mean {s.mean_rel_err:.5f}  max {s.max_rel_err:.5f}")
    lines.append(f"published-band window [%]: {PAPER_BAND_PERCENT[0]}..{PAPER_BAND_PERCENT[1]}")
    for name, viol, tol in (
        ("analytic vs E_paper_present", s.analytic_violations, report.config.tol_analytic),
        ("numeric vs E_paper_lucha", s.numeric_violations, report.config.tol_numeric),
    ):
        if viol:
            lines.append(f"{name}: {len(viol)} rows above {tol:g}:")
            for label, alpha, sigma0, dev in viol:
                lines.append(f"    {label} alpha={alpha:g} sigma0={sigma0:g}: |dev| = {dev:.2e}")
        else:
            lines.append(f"{name}: all rows within {tol:g}")
    if s.rel_err_violations:
        lines.append(f"rel. err gate {report.config.tol_rel_err_percent:g}%: "
                     f"{len(s.rel_err_violations)} rows above")
    else:
        lines.append(f"rel. err gate {report.config.tol_rel_err_percent:g}%: all rows within")
    return "\n".join(lines)


def run_single(label: StateLabel, D: float, alpha: float, sigma0: float,
               mu: float, hbar: float, mode: str,
               config: BenchConfig | None = None) -> dict:
    """Solve one state; returns a result dict (printed by the CLI)."""
    if config is None:
        config = BenchConfig(D=D, mu=mu, hbar=hbar)
    p = PotentialParams(D=D, alpha=alpha, sigma0=sigma0, mu=mu, hbar=hbar)
    state = QuantumState(n=label.n, l=label.l)
    result: dict = {"state": label.text, "mode": mode}
    if mode in ("analytic", "both"):
        level = s_wave_energy(p, state.n) if state.l == 0 else energy_level(p, state)
        result["analytic"] = level.energy
        result["is_bound"] = level.is_bound
        result["beta"] = level.beta
    if mode in ("numeric", "both"):
        result["numeric"] = _numeric_energy(p, state, config)
    if mode == "both":
        result["rel_err_percent"] = (100.0 * abs(result["analytic"] - result["numeric"])
                                     / abs(result["numeric"]))
    return result


def dump_wavefunction(label: StateLabel, p: PotentialParams, out_path: str,
                      n_points: int = 4000) -> dict:
    """Write sampled R(r) as CSV plus a JSON sidecar with level metadata.

    The sidecar lands next to the CSV with a ``.json`` suffix.
    """
    state = QuantumState(n=label.n, l=label.l)
    level = s_wave_energy(p, state.n) if state.l == 0 else energy_level(p, state)
    solution = sample_radial(p, level, n_points=n_points)
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("r,R\n")
        for r, R in solution.samples:
            fh.write(f"{r!r},{R!r}\n")
    sidecar = {
        "state": label.text,
        "n": state.n,
        "l": state.l,
        "energy": level.energy,
        "beta": level.beta,
        "delta": level.delta,
        "norm_constant": solution.norm_constant,
        "node_count": solution.node_count,
    }
    root, _ = os.path.splitext(out_path)
    sidecar_path = root + ".json"
    with open(sidecar_path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(sidecar, fh, indent=2)
        fh.write("\n")
    return sidecar


def _add_potential_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--D", type=float, default=TABLE1_D)
    sub.add_argument("--alpha", type=float, default=0.10)
    sub.add_argument("--sigma0", type=float, default=0.1)
    sub.add_argument("--mu", type=float, default=TABLE1_MU)
    sub.add_argument("--hbar", type=float, default=TABLE1_HBAR)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperwell",
        description="Bound states of the hyperbolic coth-squared well: closed-form "
                    "spectrum, Numerov oracle, benchmark-table reproduction.")
    subs = parser.add_subparsers(dest="command", required=True)

    c = subs.add_parser("constants", help="print the centrifugal-replacement constants")
    c.add_argument("--tolerance", type=float, default=1e-12)
    c.add_argument("--json", action="store_true")

    s = subs.add_parser("solve", help="solve one state")
    s.add_argument("--state", required=True)
    _add_potential_args(s)
    s.add_argument("--mode", choices=("analytic", "numeric", "both"), default="both")
    s.add_argument("--config")

    t = subs.add_parser("table1", help="reproduce the benchmark table")
    t.add_argument("--out", default=".", help="directory for table1.csv / table1.json")
    t.add_argument("--config")

    w = subs.add_parser("wavefunction", help="dump a sampled radial wavefunction")
    w.add_argument("--state", required=True)
    _add_potential_args(w)
    w.add_argument("--out", required=True, help="CSV output path (JSON sidecar alongside)")
    w.add_argument("--config")

    return parser


def _config_from(args) -> BenchConfig:
    config = load_config(args.config) if getattr(args, "config", None) else BenchConfig()
    for name in ("D", "mu", "hbar"):
        if hasattr(args, name):
            config = replace(config, **{name: getattr(args, name)})
    return config


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "config", None):
        try:
            load_config(args.config)
        except (OSError, ValueError) as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return 2
    try:
        if args.command == "constants":
            consts = solve_approx_constants(args.tolerance)
            if args.json:
                print(json.dumps(asdict(consts), indent=2))
            else:
                print(f"gamma           = {consts.gamma!r}")
                print(f"c0              = {consts.c0!r}")
                print(f"residual_first  = {consts.residual_first:.3e}")
                print(f"residual_second = {consts.residual_second:.3e}")
            return 0

        if args.command == "solve":
            label = parse_state_label(args.state)
            config = _config_from(args)
            result = run_single(label, args.D, args.alpha, args.sigma0,
                                args.mu, args.hbar, args.mode, config)
            if "analytic" in result:
                print(f"{label.text} analytic: E = {result['analytic']:.6g}")
                if not result["is_bound"]:
                    print(f"note: state is not bound (beta = {result['beta']:.6g} <= 0); "
                          "the closed-form value is formal")
            if "numeric" in result:
                print(f"{label.text} numeric:  E = {result['numeric']:.6g}")
            if "rel_err_percent" in result:
                print(f"rel. err: {result['rel_err_percent']:.4g} %")
            return 0

        if args.command == "table1":
            config = load_config(args.config) if args.config else BenchConfig()
            report = run_table1(config, out_dir=args.out)
            print(format_report(report))
            print(f"\nwrote {os.path.join(args.out, 'table1.csv')} and table1.json")
            return 0 if report.passed else 1

        if args.command == "wavefunction":
            label = parse_state_label(args.state)
            config = _config_from(args)
            p = PotentialParams(D=args.D, alpha=args.alpha, sigma0=args.sigma0,
                                mu=args.mu, hbar=args.hbar)
            sidecar = dump_wavefunction(label, p, args.out, n_points=config.quad_points)
            print(f"wrote {args.out} (+ sidecar); E = {sidecar['energy']:.6g}, "
                  f"nodes = {sidecar['node_count']}")
            return 0
    except StateLabelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BracketError as exc:
        print(f"bracket failure: {exc}", file=sys.stderr)
        return 1
    except (HyperwellError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
