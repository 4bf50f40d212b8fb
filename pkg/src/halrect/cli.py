"""Command-line entry point: ``halrect {solve,sweep,perturb-sweep,oc,problems}``."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from . import bench
from .errors import HalrectError
from .model import Aggregation, Selection, SolverConfig
from .problems import format_manifest, instances, lookup, perturb
from .solver import run

log = logging.getLogger("halrect")


def _floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _names(text: str) -> list[str]:
    return [v.strip() for v in text.split(",") if v.strip()]


def cmd_solve(args) -> int:
    problem = lookup(args.problem, args.n)
    if args.rho:
        problem = perturb(problem, args.rho)
    config = SolverConfig(
        selection=args.selection,
        aggregation=args.agg,
        eps=args.eps,
        eps_pe=args.eps_pe,
        m_max=args.m_max,
        k_max=args.k_max,
        check_invariants=args.check_invariants,
    )
    res = run(problem, config)
    solved = res.pe <= config.eps_pe
    print(f"problem  {problem.name} n={problem.n}" + (f" rho={args.rho:g}" if args.rho else ""))
    print(f"variant  {config.variant}")
    print(f"f_min    {res.f_min:.17g}")
    print(f"x_min    {' '.join(f'{v:.17g}' for v in res.x_min)}")
    print(f"f_star   {problem.f_star:.17g}")
    print(f"pe       {res.pe:.6g}")
    print(f"m        {res.m}")
    print(f"k        {res.k}")
    print(f"solved   {'yes' if solved else 'no'}")
    return 0 if solved else 1


def _sweep_config(args, rhos: Optional[Sequence[float]] = None) -> bench.SweepConfig:
    config = bench.load_sweep_config(args.config) if args.config else bench.SweepConfig()
    changes = {}
    if args.variants:
        changes["variants"] = bench.ALL_VARIANTS if args.variants == ["all"] else tuple(args.variants)
    if args.problems:
        changes["problems"] = () if args.problems == ["all"] else tuple(args.problems)
    if args.n_max is not None:
        changes["n_max"] = args.n_max
    if args.m_max is not None:
        changes["m_max"] = args.m_max
    if rhos is not None:
        changes["rhos"] = tuple(rhos)
    if changes:
        # re-run validation on the merged fields
        merged = {f: getattr(config, f) for f in bench.SweepConfig.__dataclass_fields__}
        merged.update(changes)
        config = bench.SweepConfig(**merged)
    return config


def _do_sweep(config: bench.SweepConfig, out: Optional[str]) -> int:
    out_dir = out or config.out
    if not out_dir:
        raise ValueError("no output directory: pass --out or set out= in the config")
    done = [0]

    def progress(rec: bench.SweepRecord) -> None:
        done[0] += 1
        status = "error" if rec.error else ("solved" if rec.solved else "unsolved")
        log.info("[%d] %s n=%d %s rho=%g: %s m=%d", done[0], rec.problem, rec.n, rec.label, rec.rho, status, rec.m)

    records = bench.run_sweep(config, progress)
    paths = bench.write_outputs(records, out_dir, config.m_max)
    failed = sum(1 for r in records if not r.solved)
    errors = sum(1 for r in records if r.error)
    print(f"{len(records)} runs, {failed} unsolved, {errors} errored")
    for kind, path in paths.items():
        print(f"  {kind:8s} {path}")
    return 0


def cmd_sweep(args) -> int:
    return _do_sweep(_sweep_config(args), args.out)


def cmd_perturb_sweep(args) -> int:
    return _do_sweep(_sweep_config(args, args.rho), args.out)


def cmd_oc(args) -> int:
    records = bench.read_records(args.inp)
    points = bench.operational_characteristics(records)
    path = bench.emit_csv(bench.curves_csv(points), args.out)
    print(f"{len(points)} curve points -> {path}")
    return 0


def cmd_problems(args) -> int:
    text = format_manifest(instances(args.problems or None, n_max=args.n_max))
    if args.out:
        print(f"manifest -> {bench.emit_csv(text, args.out)}")
    else:
        sys.stdout.write(text)
    return 0


def _add_sweep_options(p: argparse.ArgumentParser, config_required: bool) -> None:
    p.add_argument("--config", required=config_required, help="key=value sweep file")
    p.add_argument("--out", help="output directory (overrides out= in the config)")
    p.add_argument("--variants", type=_names, help="comma-separated, e.g. gl/13d,ia/13b, or all")
    p.add_argument("--problems", type=_names, help="comma-separated family names, or all")
    p.add_argument("--n-max", type=int)
    p.add_argument("--m-max", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="halrect", description="Bisection-based DIRECT-type global optimizer")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="minimize one catalog problem")
    p.add_argument("--problem", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--selection", choices=[s.value for s in Selection], default="gl")
    p.add_argument("--agg", choices=[a.value for a in Aggregation], default="13d")
    p.add_argument("--eps", type=float, default=1e-4)
    p.add_argument("--eps-pe", type=float, default=1e-2)
    p.add_argument("--m-max", type=int, default=1_000_000)
    p.add_argument("--k-max", type=int)
    p.add_argument("--rho", type=float, default=0.0, help="domain shift fraction")
    p.add_argument("--check-invariants", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="run a variant x problem sweep from a config file")
    _add_sweep_options(p, config_required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("perturb-sweep", help="sweep over shifted domains")
    p.add_argument("--rho", type=_floats, required=True, help="comma-separated shift fractions")
    _add_sweep_options(p, config_required=False)
    p.set_defaults(func=cmd_perturb_sweep)

    p = sub.add_parser("oc", help="operational characteristics from results.csv")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_oc)

    p = sub.add_parser("problems", help="print the problem manifest")
    p.add_argument("--problems", type=_names)
    p.add_argument("--n-max", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_problems)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (HalrectError, ValueError, OSError) as exc:
        print(f"halrect: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
