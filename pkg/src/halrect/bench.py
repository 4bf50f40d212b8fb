"""Benchmark harness: variant sweeps, solve-rate curves and summary tables.

Sweep configs are plain ``key = value`` text::

    # comment
    variants = gl/13d, lipschitz/13a      # or "all"
    problems = all                        # or Branin, Bukin6, ...
    n_max = 4
    rho = 0, 0.025
    m_max = 1000000

Output files are byte-stable: fixed column order, LF endings, reals with 17
significant digits, rows in canonical (problem, n, variant, rho) order.
"""

from __future__ import annotations

import csv
import io
import itertools
import logging
import math
import os
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

from .model import Aggregation, Problem, Selection, SolverConfig
from .problems import instances, lookup, perturb
from .solver import run

log = logging.getLogger(__name__)

THREADS_ENV = "HALRECT_THREADS"

ALL_VARIANTS = tuple(f"{s.value}/{a.value}" for s in Selection for a in Aggregation)

RESULTS_HEADER = ("problem", "n", "variant", "rho", "solved", "m", "pe", "k", "seconds")
OC_HEADER = ("variant", "budget", "proportion")
SUMMARY_HEADER = ("variant", "subset", "problems", "failures", "median_m", "mean_m")


def parse_variant(text: str) -> tuple[Selection, Aggregation]:
    """``"gl/13d"`` -> (Selection.PARETO_GL, Aggregation.MID_MIN)."""
    try:
        sel, agg = text.strip().lower().split("/")
        return Selection(sel), Aggregation(agg)
    except ValueError:
        raise ValueError(
            f"bad variant {text!r}; expected SELECTION/AGG such as gl/13d"
        ) from None


@dataclass(frozen=True)
class SweepConfig:
    variants: tuple[str, ...] = ("gl/13d",)
    problems: tuple[str, ...] = ()  # empty means the whole catalog
    n_min: int = 1
    n_max: Optional[int] = None
    tags: tuple[str, ...] = ()
    rhos: tuple[float, ...] = (0.0,)
    eps: float = 1e-4
    eps_pe: float = 1e-2
    m_max: int = 1_000_000
    k_max: Optional[int] = None
    record_time: bool = False
    out: Optional[str] = None

    def __post_init__(self):
        if not self.variants:
            raise ValueError("sweep needs at least one variant")
        canon = []
        for v in self.variants:
            sel, agg = parse_variant(v)
            canon.append(f"{sel.value}/{agg.value}")
        object.__setattr__(self, "variants", tuple(dict.fromkeys(canon)))
        object.__setattr__(self, "rhos", tuple(dict.fromkeys(float(r) for r in self.rhos)))
        if not self.rhos or any(not r >= 0 for r in self.rhos):
            raise ValueError("rho values must be non-negative")
        # validates eps, eps_pe, m_max, k_max
        self.solver_config(self.variants[0])

    def solver_config(self, variant: str) -> SolverConfig:
        sel, agg = parse_variant(variant)
        return SolverConfig(
            selection=sel,
            aggregation=agg,
            eps=self.eps,
            eps_pe=self.eps_pe,
            m_max=self.m_max,
            k_max=self.k_max,
        )

    def problem_set(self) -> list[Problem]:
        probs = instances(self.problems or None, self.n_min, self.n_max, self.tags)
        if not probs:
            raise ValueError("problem filter matches no catalog instance")
        return probs


def _split(value: str) -> list[str]:
    return [v.strip() for v in value.split(",") if v.strip()]


def _bool(value: str) -> bool:
    v = value.strip().lower()
    if v in ("1", "true", "yes", "on"):
        return True
    if v in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {value!r}")


def _optional_int(value: str) -> Optional[int]:
    return None if value.strip().lower() in ("", "none") else int(value)


_KEYS: dict[str, tuple[str, Callable[[str], object]]] = {
    "variants": ("variants", lambda v: ALL_VARIANTS if v.strip().lower() == "all" else tuple(_split(v))),
    "problems": ("problems", lambda v: () if v.strip().lower() == "all" else tuple(_split(v))),
    "n_min": ("n_min", int),
    "n_max": ("n_max", _optional_int),
    "tags": ("tags", lambda v: tuple(_split(v))),
    "rho": ("rhos", lambda v: tuple(float(x) for x in _split(v))),
    "eps": ("eps", float),
    "eps_pe": ("eps_pe", float),
    "m_max": ("m_max", lambda v: int(float(v))),
    "k_max": ("k_max", _optional_int),
    "record_time": ("record_time", _bool),
    "out": ("out", str.strip),
}


def parse_sweep_config(text: str) -> SweepConfig:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().lower().replace("-", "_")
        if not sep or key not in _KEYS:
            raise ValueError(f"line {lineno}: expected one of {sorted(_KEYS)} as key=value, got {raw!r}")
        name, conv = _KEYS[key]
        try:
            values[name] = conv(value)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {key}: {exc}") from None
    return SweepConfig(**values)


def load_sweep_config(path) -> SweepConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read sweep config {path}: {exc.strerror}") from exc
    try:
        return parse_sweep_config(text)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


@dataclass(frozen=True)
class SweepRecord:
    problem: str
    n: int
    variant: str
    rho: float
    solved: bool
    m: int
    pe: float
    k: int
    seconds: Optional[float] = None
    error: Optional[str] = field(default=None, compare=False)

    @property
    def sort_key(self) -> tuple:
        return (self.problem, self.n, self.variant, self.rho)

    @property
    def label(self) -> str:
        """Variant name, suffixed with the shift when the domain was perturbed."""
        return self.variant if self.rho == 0 else f"{self.variant}@{self.rho:g}"


def _job(args) -> SweepRecord:
    name, n, variant, rho, config, record_time = args
    t0 = time.perf_counter()
    try:
        problem = perturb(lookup(name, n), rho)
        res = run(problem, config)
    except Exception as exc:  # noqa: BLE001 - one bad record must not sink the sweep
        return SweepRecord(name, n, variant, rho, False, 0, math.nan, 0, error=f"{type(exc).__name__}: {exc}")
    seconds = time.perf_counter() - t0 if record_time else None
    return SweepRecord(name, n, variant, rho, res.pe <= config.eps_pe, res.m, res.pe, res.k, seconds)


def worker_count(jobs: int) -> int:
    raw = os.environ.get(THREADS_ENV, "").strip()
    if raw:
        try:
            cap = int(raw)
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
        if cap < 1:
            raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    else:
        cap = os.cpu_count() or 1
    return max(1, min(cap, jobs))


def run_sweep(config: SweepConfig, progress: Optional[Callable[[SweepRecord], None]] = None) -> list[SweepRecord]:
    """One record per (problem, variant, rho), in canonical order.

    Runs go through a process pool capped by ``HALRECT_THREADS``. A run that
    raises yields a record with ``error`` set and ``solved`` false.
    """
    jobs = [
        (p.name, p.n, v, rho, config.solver_config(v), config.record_time)
        for p, v, rho in itertools.product(config.problem_set(), config.variants, config.rhos)
    ]
    workers = worker_count(len(jobs))
    log.info("sweep: %d runs on %d worker(s)", len(jobs), workers)
    records = []
    if workers == 1:
        results = map(_job, jobs)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_job, jobs)
    try:
        for rec in results:
            if rec.error:
                log.warning("%s n=%d %s rho=%g failed: %s", rec.problem, rec.n, rec.variant, rec.rho, rec.error)
            if progress is not None:
                progress(rec)
            records.append(rec)
    finally:
        if pool is not None:
            pool.shutdown()
    records.sort(key=lambda r: r.sort_key)
    return records


def budget_grid(per_decade: int = 25, lo_exp: int = 1, hi_exp: int = 6) -> list[float]:
    steps = per_decade * (hi_exp - lo_exp)
    return [10.0 ** (lo_exp + i / per_decade) for i in range(steps + 1)]


@dataclass(frozen=True)
class CurvePoint:
    variant: str
    budget: float
    proportion: float


def operational_characteristics(
    records: Sequence[SweepRecord], budgets: Optional[Sequence[float]] = None
) -> list[CurvePoint]:
    """Fraction of each variant's problems solved within every budget."""
    if not records:
        raise ValueError("no records to build curves from")
    budgets = budget_grid() if budgets is None else sorted(budgets)
    by_label: dict[str, list[SweepRecord]] = {}
    for r in records:
        by_label.setdefault(r.label, []).append(r)
    out = []
    for label in sorted(by_label):
        group = by_label[label]
        solved = sorted(r.m for r in group if r.solved)
        for b in budgets:
            hit = sum(1 for m in solved if m <= b)
            out.append(CurvePoint(label, b, hit / len(group)))
    return out


Subset = Callable[[SweepRecord, Problem], bool]

SUBSETS: dict[str, Subset] = {
    "all": lambda r, p: True,
    "n<=4": lambda r, p: r.n <= 4,
    "n>4": lambda r, p: r.n > 4,
    "convex": lambda r, p: p.convex,
    "non-convex": lambda r, p: not p.convex,
    "uni-modal": lambda r, p: not p.multimodal,
    "multi-modal": lambda r, p: p.multimodal,
}


@dataclass(frozen=True)
class SummaryRow:
    variant: str
    subset: str
    problems: int
    failures: int
    median_m: float
    mean_m: float


def summarize(
    records: Sequence[SweepRecord],
    m_max: int = 1_000_000,
    subsets: Optional[dict[str, Subset]] = None,
) -> list[SummaryRow]:
    """Failure count, median and mean evaluations per variant and subset.

    Unsolved runs count as ``m_max`` evaluations. Empty subsets are omitted.
    """
    subsets = SUBSETS if subsets is None else subsets
    problems = {(r.problem, r.n): lookup(r.problem, r.n) for r in records}
    by_label: dict[str, list[SweepRecord]] = {}
    for r in records:
        by_label.setdefault(r.label, []).append(r)
    rows = []
    for label in sorted(by_label):
        for name, pred in subsets.items():
            chosen = [r for r in by_label[label] if pred(r, problems[r.problem, r.n])]
            if not chosen:
                continue
            ms = [r.m if r.solved else m_max for r in chosen]
            rows.append(
                SummaryRow(
                    label,
                    name,
                    len(chosen),
                    sum(1 for r in chosen if not r.solved),
                    float(statistics.median(ms)),
                    math.fsum(ms) / len(ms),
                )
            )
    return rows


# ---------------------------------------------------------------------------
# CSV I/O


def _real(x: float) -> str:
    return f"{x:.17g}"


def _csv_text(header: Sequence[str], rows: Iterable[Sequence[str]], preamble: str = "") -> str:
    buf = io.StringIO()
    buf.write(preamble)
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def records_csv(records: Sequence[SweepRecord]) -> str:
    rows = (
        (
            r.problem,
            str(r.n),
            r.variant,
            _real(r.rho),
            "1" if r.solved else "0",
            str(r.m),
            _real(r.pe),
            str(r.k),
            "" if r.seconds is None else _real(r.seconds),
        )
        for r in sorted(records, key=lambda r: r.sort_key)
    )
    return _csv_text(RESULTS_HEADER, rows)


def curves_csv(points: Sequence[CurvePoint]) -> str:
    return _csv_text(OC_HEADER, ((p.variant, _real(p.budget), _real(p.proportion)) for p in points))


def summary_csv(rows: Sequence[SummaryRow], m_max: int) -> str:
    body = (
        (r.variant, r.subset, str(r.problems), str(r.failures), _real(r.median_m), _real(r.mean_m))
        for r in rows
    )
    return _csv_text(SUMMARY_HEADER, body, preamble=f"# unsolved runs counted at m_max={m_max}\n")


def emit_csv(text: str, path) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc
    return path


def _rows(text: str, header: Sequence[str], source: str) -> list[list[str]]:
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    reader = csv.reader(lines)
    got = next(reader, None)
    if got is None or tuple(got) != tuple(header):
        raise ValueError(f"{source}: expected header {','.join(header)}, got {got}")
    return [row for row in reader if row]


def parse_records_csv(text: str, source: str = "results.csv") -> list[SweepRecord]:
    out = []
    for row in _rows(text, RESULTS_HEADER, source):
        problem, n, variant, rho, solved, m, pe, k, seconds = row
        out.append(
            SweepRecord(
                problem,
                int(n),
                variant,
                float(rho),
                solved == "1",
                int(m),
                float(pe),
                int(k),
                float(seconds) if seconds else None,
            )
        )
    return out


def read_records(path) -> list[SweepRecord]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_records_csv(text, str(path))


def parse_curves_csv(text: str, source: str = "oc.csv") -> list[CurvePoint]:
    return [CurvePoint(v, float(b), float(p)) for v, b, p in _rows(text, OC_HEADER, source)]


def write_outputs(records: Sequence[SweepRecord], out_dir, m_max: int) -> dict[str, Path]:
    """results.csv, oc.csv and summary.csv under ``out_dir``."""
    out_dir = Path(out_dir)
    paths = {"results": emit_csv(records_csv(records), out_dir / "results.csv")}
    if records:
        paths["oc"] = emit_csv(curves_csv(operational_characteristics(records)), out_dir / "oc.csv")
        paths["summary"] = emit_csv(summary_csv(summarize(records, m_max), m_max), out_dir / "summary.csv")
    return paths


def with_rhos(config: SweepConfig, rhos: Sequence[float]) -> SweepConfig:
    return replace(config, rhos=tuple(rhos))


__all__ = [
    "ALL_VARIANTS",
    "CurvePoint",
    "OC_HEADER",
    "RESULTS_HEADER",
    "SUBSETS",
    "SUMMARY_HEADER",
    "SummaryRow",
    "SweepConfig",
    "SweepRecord",
    "THREADS_ENV",
    "budget_grid",
    "curves_csv",
    "emit_csv",
    "load_sweep_config",
    "operational_characteristics",
    "parse_curves_csv",
    "parse_records_csv",
    "parse_sweep_config",
    "parse_variant",
    "read_records",
    "records_csv",
    "run_sweep",
    "summarize",
    "summary_csv",
    "with_rhos",
    "worker_count",
    "write_outputs",
]
