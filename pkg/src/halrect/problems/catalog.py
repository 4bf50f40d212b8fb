"""Benchmark catalog: the box-constrained test set with its (partly modified)
domains, known optima and classification tags.

Bounds for families with index-dependent domains are generated with the
1-based coordinate index ``i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from ..errors import CatalogError, NotFoundError, UnsupportedOperationError
from ..model import Problem
from . import functions as fn

__all__ = [
    "ProblemSpec",
    "CATALOG",
    "lookup",
    "instances",
    "eval_raw",
    "perturb",
    "verify_optimum",
    "format_manifest",
    "parse_manifest",
]

BoundsFn = Callable[[int], tuple[list[float], list[float]]]


@dataclass(frozen=True)
class ProblemSpec:
    family: str
    dims: tuple[int, ...]
    bounds: BoundsFn
    objective: Callable[[np.ndarray], float]
    f_star: Callable[[int], float]
    x_star: Callable[[int], Optional[Sequence[float]]]
    convex: bool
    multimodal: bool

    def build(self, n: int) -> Problem:
        if n not in self.dims:
            raise NotFoundError(f"{self.family} has no {n}-dimensional instance")
        lower, upper = self.bounds(n)
        xs = self.x_star(n)
        return Problem(
            name=self.family,
            n=n,
            lower=tuple(float(v) for v in lower),
            upper=tuple(float(v) for v in upper),
            f_star=float(self.f_star(n)),
            objective=self.objective,
            x_star=None if xs is None else tuple(float(v) for v in xs),
            convex=self.convex,
            multimodal=self.multimodal,
        )


def _box(lo: float, hi: float) -> BoundsFn:
    return lambda n: ([lo] * n, [hi] * n)


def _indexed(lo: Callable[[int], float], hi: Callable[[int], float]) -> BoundsFn:
    return lambda n: (
        [lo(i) for i in range(1, n + 1)],
        [hi(i) for i in range(1, n + 1)],
    )


def _const(v: float) -> Callable[[int], float]:
    return lambda n: v


def _fill(v: float) -> Callable[[int], list[float]]:
    return lambda n: [v] * n


def _point(*v: float) -> Callable[[int], list[float]]:
    return lambda n: list(v)


# Separable optima (coordinate-wise 1-D minimizers, computed offline).
_ALPINE_T = 7.917052683917154
_ALPINE_V = 2.8081311800070052
_ST_T = -2.903534030279176
_ST_V = -39.166165703771405
_MICHALEWICZ_X = [
    2.2029055199529126,
    math.pi / 2,
    1.284991570272413,
    1.9230584696163617,
    1.7204697722211917,
    math.pi / 2,
    1.454413971098677,
    1.756086520760216,
    1.6557174165475732,
    math.pi / 2,
]


def _michalewicz_f_star(n: int) -> float:
    return fn.michalewicz(np.array(_MICHALEWICZ_X[:n]))


def _dixon_price_x(n: int) -> list[float]:
    return [2.0 ** (-(2.0**i - 2) / 2.0**i) for i in range(1, n + 1)]


def _trid_f_star(n: int) -> float:
    return -n * (n + 4) * (n - 1) / 6


def _trid_x(n: int) -> list[float]:
    return [float(i * (n + 1 - i)) for i in range(1, n + 1)]


def _specs() -> list[ProblemSpec]:
    S = ProblemSpec
    r2 = lambda i: 2.0 ** (1.0 / i)  # noqa: E731
    r3 = lambda i: 3.0 ** (1.0 / i)  # noqa: E731
    zero = _const(0.0)
    return [
        S("Ackley", (2, 5, 10), _box(-18, 47), fn.ackley, zero, _fill(0.0), False, True),
        S(
            "Alpine",
            (2, 5, 10),
            _indexed(r2, lambda i: 8 + r2(i)),
            fn.alpine,
            lambda n: -(_ALPINE_V**n),
            _fill(_ALPINE_T),
            False,
            True,
        ),
        S("Beale", (2,), _box(-4.5, 4.5), fn.beale, zero, _point(3, 0.5), False, True),
        S("Bohachevsky1", (2,), _box(-55, 145), fn.bohachevsky1, zero, _fill(0.0), True, False),
        S("Bohachevsky2", (2,), _box(-55, 145), fn.bohachevsky2, zero, _fill(0.0), False, True),
        S("Bohachevsky3", (2,), _box(-55, 145), fn.bohachevsky3, zero, _fill(0.0), False, True),
        S("Booth", (2,), _box(-10, 10), fn.booth, zero, _point(1, 3), True, False),
        S(
            "Branin",
            (2,),
            lambda n: ([-5.0, 10.0], [10.0, 15.0]),
            fn.branin,
            _const(0.39788735772973816),
            _point(-math.pi, 12.275),
            False,
            True,
        ),
        S(
            "Bukin6",
            (2,),
            lambda n: ([-15.0, -3.0], [5.0, 3.0]),
            fn.bukin6,
            zero,
            _point(-10, 1),
            True,
            True,
        ),
        S("Colville", (4,), _box(-10, 10), fn.colville, zero, _fill(1.0), False, True),
        S(
            "Cross_in_Tray",
            (2,),
            _box(0, 10),
            fn.cross_in_tray,
            _const(-2.0626118708227397),
            _point(1.34940658578678, 1.3494066518353967),
            False,
            True,
        ),
        S(
            "Crosslegtable",
            (2,),
            _box(-10, 15),
            fn.crosslegtable,
            _const(-1.0),
            _fill(0.0),
            False,
            True,
        ),
        S("Csendes", (2, 5, 10), _box(-10, 25), fn.csendes, zero, _fill(0.0), True, True),
        S("Damavandi", (2,), _box(0, 14), fn.damavandi, zero, _fill(2.0), False, True),
        S("Deb01", (2, 5, 10), _box(-0.55, 1.45), fn.deb01, _const(-1.0), _fill(0.1), False, True),
        S(
            "Deb02",
            (2, 5, 10),
            _box(0.225, 1.225),
            fn.deb02,
            _const(-1.0),
            _fill(0.35 ** (4.0 / 3.0)),
            False,
            True,
        ),
        S(
            "Dixon_and_Price",
            (2, 5, 10),
            _box(-10, 10),
            fn.dixon_price,
            zero,
            _dixon_price_x,
            True,
            True,
        ),
        S("Drop_wave", (2,), _box(-4, 6), fn.drop_wave, _const(-1.0), _fill(0.0), False, True),
        S(
            "Easom",
            (2,),
            _indexed(lambda i: -100 / (i + 1), lambda i: 100.0 * i),
            fn.easom,
            _const(-1.0),
            _fill(math.pi),
            False,
            True,
        ),
        S(
            "Eggholder",
            (2,),
            _box(-512, 512),
            fn.eggholder,
            _const(-959.6406627208507),
            _point(512, 404.2318049938646),
            False,
            True,
        ),
        S(
            "Goldstein_and_Price",
            (2,),
            _box(-1.1, 2.9),
            fn.goldstein_price,
            _const(3.0),
            _point(0, -1),
            False,
            True,
        ),
        S(
            "Griewank",
            (2, 5, 10),
            _indexed(lambda i: -math.sqrt(600 * i), lambda i: 600 / math.sqrt(i)),
            fn.griewank,
            zero,
            _fill(0.0),
            False,
            True,
        ),
        S(
            "Hartman3",
            (3,),
            _box(0, 1),
            fn.hartman3,
            _const(-3.862779787332663),
            _point(0.11458888122541287, 0.5556488954739371, 0.8525469842172746),
            False,
            True,
        ),
        S(
            "Hartman6",
            (6,),
            _box(0, 1),
            fn.hartman6,
            _const(-3.3223680114155147),
            _point(
                0.20168950909365746,
                0.15001069354111374,
                0.4768739729250998,
                0.2753324275220782,
                0.3116516172395686,
                0.6573005345536702,
            ),
            False,
            True,
        ),
        S(
            "Holder_Table",
            (2,),
            _box(-10, 10),
            fn.holder_table,
            _const(-19.20850256788675),
            _point(8.055023466339607, 9.664590027738118),
            False,
            True,
        ),
        S(
            "Hump",
            (2,),
            _box(-5, 5),
            fn.hump,
            _const(-1.0316284534898776),
            _point(0.08984201652927098, -0.7126564013807202),
            False,
            True,
        ),
        S(
            "Langermann",
            (2,),
            _box(0, 10),
            fn.langermann,
            _const(-4.155809291847786),
            _point(2.7934022095575592, 1.5972325020719753),
            False,
            True,
        ),
        S("Levy", (2, 5, 10), _box(-10, 10), fn.levy, zero, _fill(1.0), False, True),
        S("Matyas", (2,), _box(-5.5, 14.5), fn.matyas, zero, _fill(0.0), True, False),
        S(
            "McCormick",
            (2,),
            lambda n: ([-1.5, -3.0], [4.0, 4.0]),
            fn.mccormick,
            _const(-1.9132229549810367),
            _point(-0.5471975514842097, -1.5471975393097082),
            True,
            True,
        ),
        S(
            "Michalewicz",
            (2, 5, 10),
            _box(0, math.pi),
            fn.michalewicz,
            _michalewicz_f_star,
            lambda n: _MICHALEWICZ_X[:n],
            False,
            True,
        ),
        S(
            "Perm4",
            (4,),
            _indexed(lambda i: -float(i), lambda i: float(i)),
            fn.perm,
            zero,
            lambda n: [float(i) for i in range(1, n + 1)],
            False,
            True,
        ),
        S("Pinter", (2, 5, 10), _box(-5.5, 14.5), fn.pinter, zero, _fill(0.0), False, True),
        S("Powell", (4,), _box(-4, 5), fn.powell, zero, _fill(0.0), True, True),
        S(
            "Power_Sum",
            (4,),
            _indexed(lambda i: 1.0, lambda i: 4 + r2(i)),
            fn.power_sum,
            zero,
            _point(1, 2, 2, 3),
            True,
            True,
        ),
        S(
            "Qing",
            (2, 5, 10),
            _box(-500, 500),
            fn.qing,
            zero,
            lambda n: [math.sqrt(i) for i in range(1, n + 1)],
            False,
            True,
        ),
        S(
            "Rastrigin",
            (2, 5, 10),
            _indexed(lambda i: -5 * r2(i), lambda i: 7 + r2(i)),
            fn.rastrigin,
            zero,
            _fill(0.0),
            False,
            True,
        ),
        S(
            "Rosenbrock",
            (2, 5, 10),
            _indexed(lambda i: -5 / math.sqrt(i), lambda i: 10 * math.sqrt(i)),
            fn.rosenbrock,
            zero,
            _fill(1.0),
            False,
            False,
        ),
        S(
            "Rotated_H_Ellip",
            (2, 5, 10),
            _box(-35, 96),
            fn.rotated_hyper_ellipsoid,
            zero,
            _fill(0.0),
            True,
            False,
        ),
        S(
            "Schwefel",
            (2, 5, 10),
            _indexed(lambda i: -500 + 100 / math.sqrt(i), lambda i: 500 - 40 / math.sqrt(i)),
            fn.schwefel,
            zero,
            _fill(420.96874635998194),
            False,
            True,
        ),
        S(
            "Shekel5",
            (4,),
            _box(0, 10),
            fn.shekel5,
            _const(-10.153199679058229),
            _point(4.000037152376549, 4.000133278657566, 4.000037151057555, 4.000133277090425),
            False,
            True,
        ),
        S(
            "Shekel7",
            (4,),
            _box(0, 10),
            fn.shekel7,
            _const(-10.402940566818662),
            _point(4.000572914277084, 4.000689366040889, 3.9994897107938447, 3.9996061600067923),
            False,
            True,
        ),
        S(
            "Shekel10",
            (4,),
            _box(0, 10),
            fn.shekel10,
            _const(-10.536409816692045),
            _point(4.000746530253313, 4.000592936779709, 3.9996633957714787, 3.9995097993299975),
            False,
            True,
        ),
        S(
            "Shubert",
            (2,),
            _box(-10, 10),
            fn.shubert,
            _const(-186.73090883102392),
            _point(-7.083506409397382, 4.858056877022195),
            False,
            True,
        ),
        S("Sphere", (2, 5, 10), _box(-2.75, 7.25), fn.sphere, zero, _fill(0.0), True, False),
        S(
            "Styblinski_Tang",
            (2, 5, 10),
            _indexed(lambda i: -5.0, lambda i: 5 + r3(i)),
            fn.styblinski_tang,
            lambda n: _ST_V * n,
            _fill(_ST_T),
            False,
            True,
        ),
        S(
            "Sum_of_Powers",
            (2, 5, 10),
            _box(-0.55, 1.45),
            fn.sum_of_powers,
            zero,
            _fill(0.0),
            True,
            False,
        ),
        S("Sum_Square", (2, 5, 10), _box(-5.5, 14.5), fn.sum_squares, zero, _fill(0.0), True, False),
        S(
            "Trefethen",
            (2,),
            _box(-2, 2),
            fn.trefethen,
            _const(-3.3068686474752407),
            _point(-0.024403079674238354, 0.21061242717848194),
            False,
            True,
        ),
        S("Trid", (2, 5, 10), _box(-100, 100), fn.trid, _trid_f_star, _trid_x, True, True),
        S(
            "Vincent",
            (2, 5, 10),
            _box(0.25, 10),
            fn.vincent,
            lambda n: -float(n),
            _fill(math.exp(math.pi / 20)),
            False,
            True,
        ),
        S("Zakharov", (2, 5, 10), _box(-1.625, 13.375), fn.zakharov, zero, _fill(0.0), True, True),
    ]


CATALOG: dict[str, ProblemSpec] = {s.family: s for s in _specs()}
_LOWER_NAMES = {name.lower(): name for name in CATALOG}


def lookup(name: str, n: int) -> Problem:
    """Instantiate a catalog problem by family name (case-insensitive) and dimension."""
    key = _LOWER_NAMES.get(name.lower())
    if key is None:
        raise NotFoundError(f"unknown problem family {name!r}")
    return CATALOG[key].build(int(n))


def instances(
    names: Optional[Sequence[str]] = None,
    n_min: int = 1,
    n_max: Optional[int] = None,
    tags: Sequence[str] = (),
) -> list[Problem]:
    """All catalog instances matching the filters, ordered by (name, n)."""
    families = list(CATALOG) if not names else [_resolve(nm) for nm in names]
    out = []
    for fam in families:
        for n in CATALOG[fam].dims:
            if n < n_min or (n_max is not None and n > n_max):
                continue
            p = CATALOG[fam].build(n)
            if all(t in p.tags for t in tags):
                out.append(p)
    out.sort(key=lambda p: (p.name, p.n))
    return out


def _resolve(name: str) -> str:
    key = _LOWER_NAMES.get(name.strip().lower())
    if key is None:
        raise NotFoundError(f"unknown problem family {name!r}")
    return key


def eval_raw(problem: Problem, x) -> float:
    """Objective value at an original-space point; non-finite results map to +inf."""
    x = np.asarray(x, dtype=float)
    if x.shape != (problem.n,):
        raise ValueError(f"expected a point of dimension {problem.n}, got shape {x.shape}")
    f = problem.objective(x)
    return f if math.isfinite(f) else math.inf


def perturb(problem: Problem, rho: float) -> Problem:
    """Shift the domain upward by ``rho`` times its width, never past the minimizer."""
    if rho < 0:
        raise ValueError("rho must be non-negative")
    if problem.x_star is None:
        raise UnsupportedOperationError(f"{problem.name} has no known minimizer to clamp against")
    if rho == 0:
        return problem
    lower, upper = [], []
    for a, b, xs in zip(problem.lower, problem.upper, problem.x_star):
        d = abs(b - a)
        lower.append(min(a + rho * d, xs))
        upper.append(b + rho * d)
    return problem.with_bounds(tuple(lower), tuple(upper), rho=rho)


def verify_optimum(problem: Problem) -> float:
    """Residual |f(x*) - f*|; raises CatalogError if it exceeds 1e-6 * max(1, |f*|)."""
    if problem.x_star is None:
        raise UnsupportedOperationError(f"{problem.name} has no known minimizer")
    residual = abs(eval_raw(problem, problem.x_star) - problem.f_star)
    if not residual <= 1e-6 * max(1.0, abs(problem.f_star)):
        raise CatalogError(
            f"{problem.name} (n={problem.n}): f(x*) differs from f* by {residual:.3g}"
        )
    return residual


_MANIFEST_HEADER = "# name\tn\tlower\tupper\tf_star\ttags"


def format_manifest(problems: Sequence[Problem]) -> str:
    """Tab-separated manifest, one problem per line; reals use 17 significant digits."""
    lines = [_MANIFEST_HEADER]
    for p in problems:
        lines.append(
            "\t".join(
                [
                    p.name,
                    str(p.n),
                    ",".join(f"{v:.17g}" for v in p.lower),
                    ",".join(f"{v:.17g}" for v in p.upper),
                    f"{p.f_star:.17g}",
                    ",".join(p.tags),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def parse_manifest(text: str) -> list[dict]:
    rows = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, n, lower, upper, f_star, tags = line.split("\t")
        rows.append(
            {
                "name": name,
                "n": int(n),
                "lower": tuple(float(v) for v in lower.split(",")),
                "upper": tuple(float(v) for v in upper.split(",")),
                "f_star": float(f_star),
                "tags": tuple(tags.split(",")),
            }
        )
    return rows
