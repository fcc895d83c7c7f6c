"""Grid-based numerical verification of Turan-type and convexity properties.

Every check produces :class:`InequalityRecord` objects whose ``margin`` is
positive when the claimed inequality holds, together with an error budget
``tol`` built from the error bounds of the constituent evaluations:

    tol = 10 * (sum of propagated err bounds + rounding + 1e-11)

A record is a counterexample only when ``margin < -tol``; records with
``|margin| <= tol`` are *indeterminate* and never fail a suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from . import inverse, ptrig, specfun
from .core import (
    DEFAULT_OPTIONS,
    PQ,
    ConfigurationError,
    DivergenceError,
    DomainError,
    Eval,
    EvalOptions,
    EvalPath,
    FamilyId,
    GenTrigError,
)

__all__ = [
    "Grid",
    "InequalityRecord",
    "ScanReport",
    "family_value",
    "turan_margin",
    "scan_turan",
    "check_monotone",
    "check_convex",
    "check_log_convex",
    "check_geom_convex",
    "check_completely_monotone",
    "phi_n",
    "phi_series",
    "log_phi_derivative",
    "bernstein_check",
    "neuman_bound",
    "convexity_chains",
    "corollary_ratio",
    "corollary_sharpness",
    "remark_c_ratio_form",
]

EPS = 2.220446049250313e-16
SLACK = 1e-11
TOL_FACTOR = 10.0
DIFF_STEP = 1e-3
CM_STEP = 0.05
LOG_SQRT2 = 0.5 * math.log(2.0)

LESS = "lessthan"
GREATER = "greaterthan"


# --------------------------------------------------------------------------
# data types
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Grid:
    """Sample grid over ``[lo, hi]`` with ``n`` points."""

    lo: float
    hi: float
    n: int
    scale: str = "linear"

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ConfigurationError(f"grid needs lo < hi, got {self.lo}:{self.hi}")
        if not isinstance(self.n, int) or self.n < 3:
            raise ConfigurationError(f"grid needs n >= 3 points, got {self.n}")
        if self.scale not in ("linear", "log"):
            raise ConfigurationError(f"grid scale must be linear or log, got {self.scale!r}")
        if self.scale == "log" and self.lo <= 0:
            raise ConfigurationError("logarithmic grid needs lo > 0")

    @classmethod
    def parse(cls, text: str) -> "Grid":
        """Parse ``lo:hi:n`` with an optional ``@log`` suffix."""
        scale = "linear"
        if text.endswith("@log"):
            text, scale = text[: -len("@log")], "log"
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigurationError(f"grid must look like lo:hi:n[@log], got {text!r}")
        try:
            lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise ConfigurationError(f"grid must look like lo:hi:n[@log], got {text!r}") from None
        return cls(lo, hi, n, scale)

    def points(self) -> List[float]:
        if self.scale == "log":
            a, b = math.log(self.lo), math.log(self.hi)
            pts = [math.exp(a + (b - a) * i / (self.n - 1)) for i in range(self.n)]
        else:
            pts = [self.lo + (self.hi - self.lo) * i / (self.n - 1) for i in range(self.n)]
        pts[0], pts[-1] = self.lo, self.hi
        return pts

    def __str__(self):
        return f"{self.lo!r}:{self.hi!r}:{self.n}" + ("@log" if self.scale == "log" else "")


@dataclass(frozen=True)
class InequalityRecord:
    """One evaluated inequality; ``margin`` > 0 means the claim holds."""

    point: Dict[str, float]
    lhs: float
    rhs: float
    margin: float
    tol: float = 0.0

    @property
    def status(self) -> str:
        if self.margin < -self.tol:
            return "counterexample"
        if abs(self.margin) <= self.tol:
            return "indeterminate"
        return "ok"


def _finite_or_str(v):
    if isinstance(v, float) and not math.isfinite(v):
        return "nan" if math.isnan(v) else ("inf" if v > 0 else "-inf")
    return v


def _record_dict(rec: InequalityRecord) -> dict:
    return {
        "point": {k: _finite_or_str(v) for k, v in rec.point.items()},
        "lhs": _finite_or_str(rec.lhs),
        "rhs": _finite_or_str(rec.rhs),
        "margin": _finite_or_str(rec.margin),
        "tol": _finite_or_str(rec.tol),
        "status": rec.status,
    }


@dataclass
class ScanReport:
    """Aggregated outcome of a suite."""

    suite: str
    records: List[InequalityRecord]
    conjecture: bool = False
    meta: Dict[str, object] = field(default_factory=dict)
    notes: Dict[str, object] = field(default_factory=dict)

    @property
    def min_margin(self) -> float:
        return min((r.margin for r in self.records), default=math.inf)

    @property
    def argmin(self) -> Optional[Dict[str, float]]:
        if not self.records:
            return None
        return min(self.records, key=lambda r: r.margin).point

    @property
    def counterexamples(self) -> List[InequalityRecord]:
        return [r for r in self.records if r.status == "counterexample"]

    @property
    def indeterminate(self) -> List[InequalityRecord]:
        return [r for r in self.records if r.status == "indeterminate"]

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def tolerance(self) -> float:
        return max((r.tol for r in self.records), default=0.0)

    def to_dict(self) -> dict:
        meta = {"suite": self.suite}
        meta.update(self.meta)
        out = {
            "meta": meta,
            "records": [_record_dict(r) for r in self.records],
            "min_margin": _finite_or_str(self.min_margin),
            "argmin": None if self.argmin is None
            else {k: _finite_or_str(v) for k, v in self.argmin.items()},
            "counterexamples": [_record_dict(r) for r in self.counterexamples],
            "indeterminate": len(self.indeterminate),
            "pass": self.passed,
            "conjecture": self.conjecture,
        }
        if self.notes:
            out["notes"] = self.notes
        return out


def _tol(err_sum: float, *magnitudes: float) -> float:
    rounding = 4 * EPS * sum(abs(m) for m in magnitudes if math.isfinite(m))
    return TOL_FACTOR * (err_sum + rounding + SLACK)


def _record(point, lhs: Eval, rhs: Eval, direction: str) -> InequalityRecord:
    """Record for ``lhs < rhs`` (``LESS``) or ``lhs > rhs`` (``GREATER``)."""
    if direction == LESS:
        margin = rhs.value - lhs.value
    elif direction == GREATER:
        margin = lhs.value - rhs.value
    else:
        raise ConfigurationError(f"direction must be {LESS!r} or {GREATER!r}, got {direction!r}")
    if math.isnan(margin):
        margin = math.nan
    tol = _tol(lhs.err + rhs.err, lhs.value, rhs.value)
    if not math.isfinite(tol):
        tol = 0.0
    return InequalityRecord(dict(point), lhs.value, rhs.value, margin, tol)


def _annotate(exc: GenTrigError, point) -> GenTrigError:
    return type(exc)(f"{exc} [at {point}]")


# --------------------------------------------------------------------------
# generic family evaluation
# --------------------------------------------------------------------------

_INF = Eval(math.inf, 0.0, EvalPath.CLOSED_FORM)


def family_value(family, x: Optional[float], p: float, q: Optional[float] = None,
                 opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """Evaluate any family; divergent constants come back as ``+inf``.

    ``x`` is the argument for forward families and ``y`` for inverse ones;
    it is ignored for the constants.
    """
    family = FamilyId.parse(family)
    q = p if q is None else q
    if family.is_inverse:
        return inverse.invert(family, x, p, opts)
    try:
        return ptrig.evaluate(family, x, PQ(p, q), opts=opts)
    except DivergenceError:
        if family in (FamilyId.PiP, FamilyId.PiPQ) or x == 1.0:
            return _INF
        raise


def _mul(a: Eval, b: Eval) -> Eval:
    value = a.value * b.value
    if not math.isfinite(value):
        return Eval(value, 0.0, EvalPath.CLOSED_FORM)
    return Eval(value, abs(a.value) * b.err + abs(b.value) * a.err + a.err * b.err,
                EvalPath.CLOSED_FORM)


def _pow(a: Eval, k: float) -> Eval:
    if not math.isfinite(a.value):
        return Eval(a.value, 0.0, EvalPath.CLOSED_FORM)
    value = a.value**k
    if a.value == 0:
        return Eval(value, a.err**k if k > 0 else 0.0, EvalPath.CLOSED_FORM)
    return Eval(value, abs(k) * abs(value) * a.err / abs(a.value), EvalPath.CLOSED_FORM)


def _div(a: Eval, b: Eval) -> Eval:
    value = a.value / b.value
    err = (a.err + abs(value) * b.err) / abs(b.value) + EPS * abs(value)
    return Eval(value, err if a.value != b.value else 0.0, EvalPath.CLOSED_FORM)


def _lin(*terms: Tuple[float, Eval]) -> Eval:
    value = sum(c * e.value for c, e in terms)
    err = sum(abs(c) * e.err for c, e in terms)
    return Eval(value, err, EvalPath.CLOSED_FORM)


# --------------------------------------------------------------------------
# Turan-type inequalities
# --------------------------------------------------------------------------

def turan_margin(family, x: Optional[float], s: float, direction: str,
                 extra: Optional[float] = None, index: str = "p",
                 opts: EvalOptions = DEFAULT_OPTIONS) -> InequalityRecord:
    """Compare ``f_s(x)^2`` against ``f_{s-1}(x) f_{s+1}(x)``.

    For two-parameter families ``index`` names the varying parameter and
    ``extra`` fixes the other one.  ``direction`` is ``"lessthan"`` when the
    claim is ``f_s^2 < f_{s-1} f_{s+1}``.
    """
    family = FamilyId.parse(family)
    if not s > 1:
        raise DomainError(f"Turan margin needs s > 1, got {s}")
    if family.two_parameter and extra is None:
        raise ConfigurationError(f"{family} needs the fixed second parameter (extra)")
    if index not in ("p", "q"):
        raise ConfigurationError(f"index must be 'p' or 'q', got {index!r}")

    def f(param):
        if family.two_parameter:
            p, q = (param, extra) if index == "p" else (extra, param)
            return family_value(family, x, p, q, opts)
        return family_value(family, x, param, None, opts)

    point = {"s": s}
    if x is not None and not family.is_constant:
        point = {"x": x, "s": s}
    if family.two_parameter:
        point["q" if index == "p" else "p"] = extra
    try:
        mid, lo, hi = f(s), f(s - 1.0), f(s + 1.0)
    except GenTrigError as exc:
        raise _annotate(exc, point) from exc
    return _record(point, _pow(mid, 2), _mul(lo, hi), direction)


@dataclass(frozen=True)
class TuranSuite:
    family: FamilyId
    direction: str
    s_grid: Grid
    x_grid: Optional[Grid] = None
    index: str = "p"
    extras: Tuple[float, ...] = ()
    conjecture: bool = False
    claim: str = ""


TURAN_SUITES: Dict[str, TuranSuite] = {
    "thm1-arcsin": TuranSuite(FamilyId.ArcsinP, LESS, Grid(1.1, 5.0, 20), Grid(0.1, 0.9, 9),
                              claim="arcsin_s(x)^2 < arcsin_{s-1}(x) arcsin_{s+1}(x)"),
    "thm1-arctanh": TuranSuite(FamilyId.ArctanhP, LESS, Grid(1.1, 5.0, 20), Grid(0.1, 0.9, 9),
                               claim="arctanh_s(x)^2 < arctanh_{s-1}(x) arctanh_{s+1}(x)"),
    "thm1-arctan": TuranSuite(FamilyId.ArctanP, GREATER, Grid(1.1, 5.0, 20), Grid(0.1, 0.9, 9),
                              claim="arctan_s(x)^2 > arctan_{s-1}(x) arctan_{s+1}(x)"),
    "thm2-arcsin-pq-in-p": TuranSuite(
        FamilyId.ArcsinPQ, LESS, Grid(1.1, 5.0, 12), Grid(0.1, 0.9, 9), "p", (0.5, 1.5, 3.0),
        claim="arcsin_{s,q}^2 < arcsin_{s-1,q} arcsin_{s+1,q}, s>1, q>0"),
    "thm2-arcsinh-pq-in-p": TuranSuite(
        FamilyId.ArcsinhPQ, GREATER, Grid(1.0 + LOG_SQRT2 + 0.05, 6.0, 12), Grid(0.1, 0.9, 9),
        "p", (0.5, 1.5, 3.0),
        claim="arcsinh_{s,q}^2 > arcsinh_{s-1,q} arcsinh_{s+1,q}, s>1+log(sqrt 2), q>0"),
    "thm2-arcsin-pq-in-q": TuranSuite(
        FamilyId.ArcsinPQ, LESS, Grid(1.1, 5.0, 12), Grid(0.1, 0.9, 9), "q", (0.5, 1.5, 3.0),
        claim="arcsin_{p,s}^2 < arcsin_{p,s-1} arcsin_{p,s+1}, p>0, s>1"),
    "thm2-arcsinh-pq-in-q": TuranSuite(
        FamilyId.ArcsinhPQ, GREATER, Grid(1.1, 5.0, 12), Grid(0.1, 0.9, 9), "q", (1.5, 2.0, 4.0),
        claim="arcsinh_{p,s}^2 > arcsinh_{p,s-1} arcsinh_{p,s+1}, p>1, s>1"),
    "remC-pi": TuranSuite(FamilyId.PiP, LESS, Grid(1.5, 10.0, 30),
                          claim="pi_s^2 < pi_{s-1} pi_{s+1}, s>1 (pi_p = inf for p <= 1)"),
    "remD-b": TuranSuite(FamilyId.BP, GREATER, Grid(1.5, 3.0, 16),
                         claim="b_s^2 > b_{s-1} b_{s+1}, s>1"),
    "remE-pi-pq-in-p": TuranSuite(
        FamilyId.PiPQ, LESS, Grid(1.5, 10.0, 30), None, "p", (0.5, 1.5, 3.0),
        claim="pi_{s,q}^2 < pi_{s-1,q} pi_{s+1,q}, s>1, q>0"),
    "remE-pi-pq-in-q": TuranSuite(
        FamilyId.PiPQ, LESS, Grid(1.1, 8.0, 30), None, "q", (1.5, 2.0, 4.0),
        claim="pi_{p,s}^2 < pi_{p,s-1} pi_{p,s+1}, s>1, p>1"),
    "conj1-arcsinh": TuranSuite(
        FamilyId.ArcsinhP, GREATER, Grid(1.1, 5.0, 15), Grid(0.05, 0.95, 15), conjecture=True,
        claim="arcsinh_s(x)^2 > arcsinh_{s-1}(x) arcsinh_{s+1}(x)"),
    "conj2-sin": TuranSuite(FamilyId.SinP, GREATER, Grid(1.1, 5.0, 15), Grid(0.05, 0.95, 15),
                            conjecture=True, claim="sin_s(x)^2 > sin_{s-1}(x) sin_{s+1}(x)"),
    "conj2-cos": TuranSuite(FamilyId.CosP, GREATER, Grid(1.1, 5.0, 15), Grid(0.05, 0.95, 15),
                            conjecture=True, claim="cos_s(x)^2 > cos_{s-1}(x) cos_{s+1}(x)"),
    "conj2-tan": TuranSuite(FamilyId.TanP, LESS, Grid(1.1, 5.0, 15), Grid(0.05, 0.95, 15),
                            conjecture=True, claim="tan_s(x)^2 < tan_{s-1}(x) tan_{s+1}(x)"),
    "conj2-sinh": TuranSuite(FamilyId.SinhP, LESS, Grid(1.1, 5.0, 15), Grid(0.05, 0.95, 15),
                             conjecture=True, claim="sinh_s(x)^2 < sinh_{s-1}(x) sinh_{s+1}(x)"),
    "conj2-tanh": TuranSuite(FamilyId.TanhP, GREATER, Grid(1.1, 5.0, 15), Grid(0.05, 0.95, 15),
                             conjecture=True, claim="tanh_s(x)^2 > tanh_{s-1}(x) tanh_{s+1}(x)"),
}


def inverse_x_max(family: FamilyId, s: float) -> float:
    """Right end of the common domain of ``f_{s-1}, f_s, f_{s+1}`` within (0, 1)."""
    ends = [inverse.inverse_domain(family, p).y_max for p in (s - 1.0, s, s + 1.0)]
    finite = [e for e in ends if math.isfinite(e)]
    return min(1.0, 0.95 * min(finite)) if finite else 1.0


def remark_c_ratio_form(s: float) -> Dict[str, float]:
    """Sine-ratio rearrangement of ``pi_s^2 < pi_{s-1} pi_{s+1}`` (``s > 2``).

    Returns the ratio ``sin^2(pi/s) / (sin(pi/(s-1)) sin(pi/(s+1)))``
    together with the reciprocal bound ``s^2/(s^2-1)`` and the one that
    follows from the sine formula, ``(s^2-1)/s^2``.
    """
    if not s > 2:
        raise DomainError("the sine-ratio form needs s > 2 (pi_{s-1} finite)")
    ratio = math.sin(math.pi / s) ** 2 / (math.sin(math.pi / (s - 1)) * math.sin(math.pi / (s + 1)))
    return {"s": s, "ratio": ratio, "reciprocal_rhs": s * s / (s * s - 1.0),
            "derived_rhs": (s * s - 1.0) / (s * s)}


def scan_turan(suite: str, x_grid: Optional[Grid] = None, s_grid: Optional[Grid] = None,
               opts: EvalOptions = DEFAULT_OPTIONS, extras: Optional[Sequence[float]] = None
               ) -> ScanReport:
    """Run a Turan-type suite over its grids.

    Conjecture-2 suites (inverse functions) read ``x_grid`` as fractions of
    ``min(1, 0.95 * smallest finite right end)`` of the three functions
    involved, so every sample lies in their common domain.
    """
    if suite not in TURAN_SUITES:
        raise ConfigurationError(f"unknown Turan suite {suite!r}")
    suite_def = TURAN_SUITES[suite]
    s_grid = s_grid or suite_def.s_grid
    x_grid = x_grid or suite_def.x_grid
    extras = tuple(extras) if extras is not None else suite_def.extras
    fam = suite_def.family
    if fam.is_constant:
        xs: List[Optional[float]] = [None]
    else:
        if x_grid is None:
            raise ConfigurationError(f"{suite} needs an x grid")
        xs = list(x_grid.points())
        if not fam.is_inverse and not all(0.0 < x < 1.0 for x in xs):
            raise ConfigurationError(f"{suite}: x grid must lie inside (0, 1)")
    records = []
    for extra in extras or (None,):
        for s in s_grid.points():
            if fam.is_inverse:
                x_max = inverse_x_max(fam, s)
                if not x_max > 0:
                    raise ConfigurationError(f"{suite}: empty common domain at s={s}")
                points = [frac * x_max for frac in xs]
            else:
                points = xs
            for x in points:
                records.append(turan_margin(fam, x, s, suite_def.direction, extra, suite_def.index, opts))
    meta = {
        "grids": {"s": str(s_grid), **({"x": str(x_grid)} if not fam.is_constant else {})},
        "claim": suite_def.claim,
        "family": fam.value,
        "direction": suite_def.direction,
    }
    if extras:
        meta["fixed_" + ("q" if suite_def.index == "p" else "p")] = list(extras)
    report = ScanReport(suite, records, conjecture=suite_def.conjecture, meta=meta)
    if suite == "remC-pi":
        forms = [remark_c_ratio_form(s) for s in s_grid.points() if s > 2]
        report.notes["ratio_form"] = {
            "points": len(forms),
            "reciprocal_form_holds": sum(f["ratio"] > f["reciprocal_rhs"] for f in forms),
            "derived_form_holds": sum(f["ratio"] > f["derived_rhs"] for f in forms),
        }
    return report


# --------------------------------------------------------------------------
# monotonicity and convexity checks
# --------------------------------------------------------------------------

Section = Callable[[float], Eval]


def _step(p: float, h: float, relative: bool = True) -> float:
    return h * max(1.0, abs(p)) if relative else h


def _safe(f: Section, v: float, point) -> Eval:
    try:
        return f(v)
    except GenTrigError as exc:
        raise _annotate(exc, point) from exc


def check_monotone(f: Section, grid: Grid, direction: str, name: str = "monotone",
                   h: float = DIFF_STEP, var: str = "p") -> ScanReport:
    """Sign of ``f(v + h) - f(v - h)`` at each grid point.

    ``direction`` is ``"increasing"`` or ``"decreasing"``.
    """
    if direction not in ("increasing", "decreasing"):
        raise ConfigurationError(f"direction must be increasing/decreasing, got {direction!r}")
    records = []
    for v in grid.points():
        hv = _step(v, h)
        point = {var: v}
        left, right = _safe(f, v - hv, point), _safe(f, v + hv, point)
        rel = LESS if direction == "increasing" else GREATER
        records.append(_record(point, left, right, rel))
    return ScanReport(name, records, meta={"grids": {var: str(grid)}, "check": direction,
                                           "step": h})


def _second_difference_records(g: Section, grid_pts: Iterable[float], sense: str,
                               h: float, var: str, relative: bool, to_point=None):
    if sense not in ("convex", "concave"):
        raise ConfigurationError(f"sense must be convex/concave, got {sense!r}")
    records = []
    for v in grid_pts:
        hv = _step(v, h, relative)
        point = {var: to_point(v) if to_point else v}
        centre = _safe(g, v, point)
        avg = _lin((0.5, _safe(g, v - hv, point)), (0.5, _safe(g, v + hv, point)))
        # convex: g(v) <= mean of neighbours
        records.append(_record(point, centre, avg, LESS if sense == "convex" else GREATER))
    return records


def check_convex(f: Section, grid: Grid, sense: str, name: str = "convex",
                 h: float = DIFF_STEP, var: str = "p") -> ScanReport:
    """Second central differences of ``f`` (>= 0 for convex, <= 0 for concave)."""
    records = _second_difference_records(f, grid.points(), sense, h, var, True)
    return ScanReport(name, records, meta={"grids": {var: str(grid)}, "check": sense,
                                           "step": h})


def _log_of(f: Section) -> Section:
    def g(v):
        e = f(v)
        if not e.value > 0:
            raise DomainError(f"log-convexity needs positive values, got {e.value} at {v}")
        return Eval(math.log(e.value), e.err / e.value + EPS, e.path)
    return g


def check_log_convex(f: Section, grid: Grid, sense: str, name: str = "log-convex",
                     h: float = DIFF_STEP, var: str = "p") -> ScanReport:
    """Convexity (or concavity) of ``log f``."""
    records = _second_difference_records(_log_of(f), grid.points(), sense, h, var, True)
    return ScanReport(name, records, meta={"grids": {var: str(grid)},
                                           "check": "log-" + sense, "step": h})


def check_geom_convex(f: Section, grid: Grid, sense: str, name: str = "geom-convex",
                      h: float = DIFF_STEP, var: str = "p") -> ScanReport:
    """Convexity of ``u -> log f(e^u)``; ``grid`` holds values of the original variable."""
    if grid.lo <= 0:
        raise ConfigurationError("geometric convexity needs a positive grid")
    logf = _log_of(f)
    g = lambda u: logf(math.exp(u))
    us = [math.log(v) for v in grid.points()]
    records = _second_difference_records(g, us, sense, h, var, False, to_point=math.exp)
    return ScanReport(name, records, meta={"grids": {var: str(grid)},
                                           "check": "geometric-" + sense, "step": h})


def check_completely_monotone(f: Section, grid: Grid, max_order: int = 4,
                              h: float = CM_STEP, name: str = "completely-monotone",
                              var: str = "p") -> ScanReport:
    """Signs of alternating forward differences ``(-1)^m Delta_h^m f >= 0``."""
    if not 0 <= max_order <= 4:
        raise ConfigurationError(f"max_order must be in 0..4, got {max_order}")
    if not grid.lo > h * max_order:
        raise ConfigurationError("grid must lie in (h * max_order, inf)")
    cache: Dict[float, Eval] = {}

    def value(v, point):
        key = round(v, 12)
        if key not in cache:
            cache[key] = _safe(f, key, point)
        return cache[key]

    zero = Eval(0.0, 0.0, EvalPath.CLOSED_FORM)
    records = []
    for v in grid.points():
        for m in range(max_order + 1):
            point = {var: v, "order": m}
            terms = [((-1) ** (m - k) * math.comb(m, k), value(v + k * h, point))
                     for k in range(m + 1)]
            diff = _lin(*terms)
            signed = diff.scaled((-1) ** m)
            rec = _record(point, zero, signed, LESS)
            mags = [abs(c * e.value) for c, e in terms]
            records.append(InequalityRecord(rec.point, rec.lhs, rec.rhs, rec.margin,
                                            _tol(signed.err, *mags)))
    return ScanReport(name, records, meta={"grids": {var: str(grid)}, "check": "cm",
                                           "step": h, "max_order": max_order})


# --------------------------------------------------------------------------
# Remark-A machinery: phi_n(a) = a (a,n)/(a+n) x^(n/a) / n!
# --------------------------------------------------------------------------

def _check_phi_args(a, x, n):
    if not a > 0:
        raise DomainError(f"phi_n needs a > 0, got {a}")
    if not 0.0 < x < 1.0:
        raise DomainError(f"phi_n needs x in (0, 1), got {x}")
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"phi_n needs a nonnegative integer n, got {n!r}")


def phi_n(a: float, x: float, n: int) -> float:
    """Term ``n`` of ``F(a, a; a+1; x^(1/a)) = sum_n phi_n(a)``."""
    _check_phi_args(a, x, n)
    if n <= 170:
        # running product of (a+k)/(k+1) avoids overflow of (a)_n and n!
        ratio = 1.0
        for k in range(n):
            ratio *= (a + k) / (k + 1)
        return a * ratio / (a + n) * x ** (n / a)
    log_phi = (math.log(a) + math.lgamma(a + n) - math.lgamma(a) - math.log(a + n)
               - math.lgamma(n + 1) + n / a * math.log(x))
    return math.exp(log_phi)


def phi_series(a: float, x: float, opts: EvalOptions = DEFAULT_OPTIONS) -> Eval:
    """Partial sums of ``phi_n(a)`` to convergence, with a geometric tail bound."""
    _check_phi_args(a, x, 0)
    z = x ** (1.0 / a)
    total = 0.0
    term = 1.0
    for n in range(opts.max_terms):
        total += term
        # phi_{n+1}/phi_n = (a+n)^2/((a+n+1)(n+1)) z  <=  z max(1, (a+n)/(n+1))
        rho = z * max(1.0, (a + n) / (n + 1))
        if rho < 1.0 and term * rho / (1.0 - rho) <= 0.01 * opts.target(total):
            err = term * rho / (1.0 - rho) + 6 * (n + 1) * EPS * total
            return Eval(total, err, EvalPath.SERIES)
        term *= (a + n) ** 2 / ((a + n + 1) * (n + 1)) * z
    raise DomainError(f"phi series did not converge for a={a}, x={x}")


def log_phi_derivative(a: float, x: float, n: int, k: int) -> float:
    """Closed form of ``d^k/da^k log phi_n(a)`` for ``k`` in {1, 2, 3}."""
    _check_phi_args(a, x, n)
    if k not in (1, 2, 3):
        raise DomainError(f"k must be in {{1, 2, 3}}, got {k!r}")
    if k == 1:
        poly = specfun.digamma(a + n) - specfun.digamma(a)
    else:
        poly = specfun.polygamma(k - 1, a + n) - specfun.polygamma(k - 1, a)
    rational = (-1) ** (k - 1) * math.factorial(k - 1) * (a**-k - (a + n) ** -k)
    log_term = (-1) ** k * math.factorial(k) * n * math.log(x) / a ** (k + 1)
    return rational + poly + log_term


def bernstein_check(a: float, x: float, n: int, k: int) -> float:
    """``(-1)^k (log phi_n)^(k)(a)``; negative values confirm the Bernstein property."""
    if n < 1:
        raise DomainError(f"bernstein_check needs n >= 1, got {n}")
    return (-1) ** k * log_phi_derivative(a, x, n, k)


# --------------------------------------------------------------------------
# Neuman-type bounds, corollaries and convexity chains
# --------------------------------------------------------------------------

def neuman_bound(family, p: float, a: float, x: float, reverse: bool = False,
                 opts: EvalOptions = DEFAULT_OPTIONS
                 ) -> Tuple[InequalityRecord, InequalityRecord]:
    """Margins of ``f_p <= M <= f_2`` with ``M = (f_{2a} f_p^a / f_{ap})^(1/a)``.

    The sandwich holds as written for ``p >= 2``; for ``p < 2`` the same
    lemma gives the reversed chain ``f_2 <= M <= f_p``, selected with
    ``reverse=True``.
    """
    family = FamilyId.parse(family)
    if family not in (FamilyId.ArcsinP, FamilyId.ArctanhP):
        raise ConfigurationError(f"neuman_bound supports arcsin_p and arctanh_p, got {family}")
    if not (p > 0 and a >= 1 and 0 < x < 1):
        raise DomainError(f"neuman_bound needs p > 0, a >= 1, x in (0,1); got {p}, {a}, {x}")
    point = {"x": x, "p": p, "a": a}
    try:
        fp = family_value(family, x, p, opts=opts)
        f2a = family_value(family, x, 2 * a, opts=opts)
        fap = family_value(family, x, a * p, opts=opts)
        f2 = family_value(family, x, 2.0, opts=opts)
    except GenTrigError as exc:
        raise _annotate(exc, point) from exc
    # the ratio first, so p = 2 gives M == f_p bit for bit
    middle = _mul(_pow(_div(f2a, fap), 1.0 / a), fp)
    first = GREATER if reverse else LESS
    lower = _record({**point, "side": "lower"}, fp, middle, first)
    upper = _record({**point, "side": "upper"}, middle, f2, first)
    return lower, upper


def convexity_chain_records(suite: str, alpha: float, p1: float, p2: float,
                            fixed: Optional[float] = None,
                            opts: EvalOptions = DEFAULT_OPTIONS) -> List[InequalityRecord]:
    """Chain inequalities for ``pi_p`` (remC), ``b_p`` (remD) or ``pi_{p,q}`` (remE).

    For ``remE-pi-pq`` / ``remE-pi-pq-in-p`` the first index varies with
    ``q = fixed``; for ``remE-pi-pq-in-q`` the second index varies with
    ``p = fixed`` and only the log-convexity inequality is checked.
    """
    if not 0 < alpha < 1:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    if p1 == p2:
        raise DomainError("the chain needs distinct parameters")
    point = {"alpha": alpha, "p1": p1, "p2": p2}
    geo = p1**alpha * p2 ** (1 - alpha)
    ari = alpha * p1 + (1 - alpha) * p2

    if suite == "remC-pi":
        f = lambda v: ptrig.pi_p(v, opts=opts)
    elif suite == "remD-b":
        f = lambda v: ptrig.b_p(v, opts=opts)
    elif suite in ("remE-pi-pq", "remE-pi-pq-in-p"):
        point["q"] = fixed
        f = lambda v: ptrig.pi_pq(PQ(v, fixed), verify=False, opts=opts)
    elif suite == "remE-pi-pq-in-q":
        point = {"alpha": alpha, "q1": p1, "q2": p2, "p": fixed}
        f = lambda v: ptrig.pi_pq(PQ(fixed, v), verify=False, opts=opts)
    else:
        raise ConfigurationError(f"unknown chain suite {suite!r}")
    try:
        f1, f2, fg, fa = f(p1), f(p2), f(geo), f(ari)
    except GenTrigError as exc:
        raise _annotate(exc, point) from exc
    weighted_geo = _mul(_pow(f1, alpha), _pow(f2, 1 - alpha))
    weighted_ari = _lin((alpha, f1), (1 - alpha, f2))
    if suite == "remD-b":
        return [
            _record({**point, "link": "concave"}, fa, weighted_ari, GREATER),
            _record({**point, "link": "am-gm"}, weighted_ari, weighted_geo, GREATER),
        ]
    if suite == "remE-pi-pq-in-q":
        return [_record({**point, "link": "log-convex"}, fa, weighted_geo, LESS)]
    return [
        _record({**point, "link": "geom-convex"}, fg, weighted_geo, LESS),
        _record({**point, "link": "log-convex"}, fa, weighted_geo, LESS),
        _record({**point, "link": "geom-vs-arith"}, fg, weighted_ari, LESS),
    ]


def convexity_chains(suite: str, alphas: Sequence[float] = (0.25, 0.5, 0.75),
                     params: Sequence[float] = (1.5, 2.0, 3.0, 5.0, 8.0),
                     fixed: Sequence[Optional[float]] = (None,),
                     opts: EvalOptions = DEFAULT_OPTIONS) -> ScanReport:
    """Run the chain inequalities over all distinct pairs of ``params``."""
    records = []
    for fx in fixed:
        for alpha in alphas:
            for i, p1 in enumerate(params):
                for p2 in params[i + 1:]:
                    records.extend(convexity_chain_records(suite, alpha, p1, p2, fx, opts))
    meta = {"grids": {"alpha": list(alphas), "params": list(params)},
            "fixed": [v for v in fixed if v is not None]}
    return ScanReport(suite + "-chains", records, meta=meta)


_COR1 = {
    "arcsin": (FamilyId.ArcsinP, LESS),
    "arctanh": (FamilyId.ArctanhP, LESS),
    "arctan": (FamilyId.ArctanP, GREATER),
}
_COR2 = {
    "arcsin": (FamilyId.ArcsinPQ, FamilyId.ArcsinP, LESS),
    "arcsinh": (FamilyId.ArcsinhPQ, FamilyId.ArcsinhP, GREATER),
}


def _corollary_sides(suite, branch, x, p, opts):
    if suite == "cor1":
        if branch not in _COR1:
            raise ConfigurationError(f"cor1 branch must be one of {sorted(_COR1)}")
        fam, direction = _COR1[branch]
        f3, f4, f2 = (family_value(fam, x, s, opts=opts) for s in (3.0, 4.0, 2.0))
        ratio = _mul(_pow(f3, 2), _pow(f4, -1.0))
        return ratio, f2, direction
    if suite == "cor-thm2":
        if branch not in _COR2:
            raise ConfigurationError(f"cor-thm2 branch must be one of {sorted(_COR2)}")
        if p is None:
            raise ConfigurationError("cor-thm2 needs p")
        fam_pq, fam_p, direction = _COR2[branch]
        if branch == "arcsinh" and not p > LOG_SQRT2:
            raise DomainError(f"the arcsinh form needs p > log(sqrt 2), got {p}")
        if not p > 0:
            raise DomainError(f"cor-thm2 needs p > 0, got {p}")
        f1 = family_value(fam_pq, x, p + 1.0, p, opts)
        f2 = family_value(fam_pq, x, p + 2.0, p, opts)
        ratio = _mul(_pow(f1, 2), _pow(f2, -1.0))
        return ratio, family_value(fam_p, x, p, opts=opts), direction
    raise ConfigurationError(f"unknown corollary suite {suite!r}")


def corollary_ratio(suite: str, x: float, p: Optional[float] = None, branch: str = "arcsin",
                    opts: EvalOptions = DEFAULT_OPTIONS) -> InequalityRecord:
    """Ratio inequalities ``f_3^2/f_4 <> f_2`` (cor1) and the (p,q) analogue (cor-thm2).

    For the arctan branch of cor1 and the arcsinh branch of cor-thm2 the
    ratio is the larger side.
    """
    if not 0 < x < 1:
        raise DomainError(f"corollary needs x in (0, 1), got {x}")
    point = {"x": x} if p is None else {"x": x, "p": p}
    try:
        ratio, base, direction = _corollary_sides(suite, branch, x, p, opts)
    except GenTrigError as exc:
        raise _annotate(exc, point) from exc
    # cor-thm2 arcsinh reads  arcsinh_p < ratio, i.e. ratio > base
    return _record({**point, "branch": branch}, ratio, base, direction)


def corollary_sharpness(suite: str, branch: str, x: float = 1e-4, p: Optional[float] = None,
                        opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """``|ratio / base - 1|`` at small ``x``; tends to 0 as ``x -> 0``."""
    ratio, base, _ = _corollary_sides(suite, branch, x, p, opts)
    return abs(ratio.value / base.value - 1.0)


# --------------------------------------------------------------------------
# property suites and the registry
# --------------------------------------------------------------------------

def _section(family, x: Optional[float], fixed: Optional[float] = None, index: str = "p",
             opts: EvalOptions = DEFAULT_OPTIONS) -> Section:
    """``v -> f(x)`` with ``v`` the varying parameter of ``family``."""
    family = FamilyId.parse(family)
    if family.two_parameter:
        if index == "p":
            return lambda v: family_value(family, x, v, fixed, opts)
        return lambda v: family_value(family, x, fixed, v, opts)
    return lambda v: family_value(family, x, v, None, opts)


def _merge(name: str, reports: Sequence[ScanReport], meta: dict, tag_key: str,
           tags: Sequence) -> ScanReport:
    records = []
    for tag, rep in zip(tags, reports):
        for r in rep.records:
            point = {tag_key: tag, **r.point} if tag is not None else dict(r.point)
            records.append(InequalityRecord(point, r.lhs, r.rhs, r.margin, r.tol))
    return ScanReport(name, records, meta=meta)


PROPERTY_X = (0.3, 0.6, 0.9)
P_GRID = Grid(0.5, 8.0, 16)
P_GRID_LOG = Grid(0.5, 8.0, 16, "log")
CM_GRID = Grid(0.5, 6.0, 111)


def _per_x(name, family, check, grid, *args, xs=PROPERTY_X, fixed=None, index="p",
           opts=DEFAULT_OPTIONS, claim=""):
    reports = [check(_section(family, x, fixed, index, opts), grid, *args, name=name, var=index)
               for x in xs]
    meta = dict(reports[0].meta)
    meta["grids"] = {**meta["grids"], "x": list(xs)}
    meta["claim"] = claim
    if fixed is not None:
        meta["fixed_" + ("q" if index == "p" else "p")] = fixed
    return _merge(name, reports, meta, "x", xs)


def _multi(name, parts: Sequence[Tuple[object, ScanReport]], tag_key: str, claim: str):
    tags = [t for t, _ in parts]
    reps = [r for _, r in parts]
    meta = {"grids": reps[0].meta.get("grids", {}), "claim": claim}
    return _merge(name, reps, meta, tag_key, tags)


def _thm1_properties(opts):
    return {
        "thm1-arcsin-decreasing": lambda: _per_x(
            "thm1-arcsin-decreasing", FamilyId.ArcsinP, check_monotone, P_GRID, "decreasing",
            opts=opts, claim="p -> arcsin_p(x) decreasing"),
        "thm1-arcsin-log-convex": lambda: _per_x(
            "thm1-arcsin-log-convex", FamilyId.ArcsinP, check_log_convex, P_GRID, "convex",
            opts=opts, claim="p -> arcsin_p(x) log-convex"),
        "thm1-arcsin-geom-convex": lambda: _per_x(
            "thm1-arcsin-geom-convex", FamilyId.ArcsinP, check_geom_convex, P_GRID_LOG, "convex",
            opts=opts, claim="p -> arcsin_p(x) geometrically convex"),
        "thm1-arctanh-decreasing": lambda: _per_x(
            "thm1-arctanh-decreasing", FamilyId.ArctanhP, check_monotone, P_GRID, "decreasing",
            opts=opts, claim="p -> arctanh_p(x) decreasing"),
        "thm1-arctanh-log-convex": lambda: _per_x(
            "thm1-arctanh-log-convex", FamilyId.ArctanhP, check_log_convex, P_GRID, "convex",
            opts=opts, claim="p -> arctanh_p(x) log-convex"),
        "thm1-arctanh-geom-convex": lambda: _per_x(
            "thm1-arctanh-geom-convex", FamilyId.ArctanhP, check_geom_convex, P_GRID_LOG,
            "convex", opts=opts, claim="p -> arctanh_p(x) geometrically convex"),
        "thm1-arctan-increasing": lambda: _per_x(
            "thm1-arctan-increasing", FamilyId.ArctanP, check_monotone, P_GRID, "increasing",
            opts=opts, claim="p -> arctan_p(x) increasing"),
        "thm1-arctan-concave": lambda: _per_x(
            "thm1-arctan-concave", FamilyId.ArctanP, check_convex, P_GRID, "concave",
            opts=opts, claim="p -> arctan_p(x) concave"),
        "thm1-arcsin-cm": lambda: _per_x(
            "thm1-arcsin-cm", FamilyId.ArcsinP, check_completely_monotone, CM_GRID, 4,
            opts=opts, claim="p -> arcsin_p(x) completely monotone"),
        "thm1-arctanh-cm": lambda: _per_x(
            "thm1-arctanh-cm", FamilyId.ArctanhP, check_completely_monotone, CM_GRID, 4,
            opts=opts, claim="p -> arctanh_p(x) completely monotone"),
    }


THM2_FIXED_Q = (0.5, 1.5, 3.0)
THM2_FIXED_P = (0.5, 1.5, 3.0)
THM2_FIXED_P_ARCSINH = (1.5, 2.0, 4.0)
ARCSINH_P_GRID = Grid(LOG_SQRT2 + 0.05, 8.0, 16)


def _thm2_group(name, family, check, grid, args, fixed_values, index, opts, claim):
    key = "q" if index == "p" else "p"
    parts = [(fv, _per_x(name, family, check, grid, *args, fixed=fv, index=index, opts=opts))
             for fv in fixed_values]
    rep = _multi(name, parts, key, claim)
    rep.meta["fixed_" + key] = list(fixed_values)
    return rep


def _thm2_properties(opts):
    a, ah = FamilyId.ArcsinPQ, FamilyId.ArcsinhPQ
    return {
        "thm2-arcsin-pq-cm-in-p": lambda: _thm2_group(
            "thm2-arcsin-pq-cm-in-p", a, check_completely_monotone, CM_GRID, (4,),
            THM2_FIXED_Q, "p", opts, "p -> arcsin_{p,q}(x) completely monotone"),
        "thm2-arcsin-pq-log-convex-in-p": lambda: _thm2_group(
            "thm2-arcsin-pq-log-convex-in-p", a, check_log_convex, P_GRID, ("convex",),
            THM2_FIXED_Q, "p", opts, "p -> arcsin_{p,q}(x) log-convex"),
        "thm2-arcsin-pq-geom-convex-in-p": lambda: _thm2_group(
            "thm2-arcsin-pq-geom-convex-in-p", a, check_geom_convex, P_GRID_LOG, ("convex",),
            THM2_FIXED_Q, "p", opts, "p -> arcsin_{p,q}(x) geometrically convex"),
        "thm2-arcsin-pq-cm-in-q": lambda: _thm2_group(
            "thm2-arcsin-pq-cm-in-q", a, check_completely_monotone, CM_GRID, (4,),
            THM2_FIXED_P, "q", opts, "q -> arcsin_{p,q}(x) completely monotone"),
        "thm2-arcsin-pq-log-convex-in-q": lambda: _thm2_group(
            "thm2-arcsin-pq-log-convex-in-q", a, check_log_convex, P_GRID, ("convex",),
            THM2_FIXED_P, "q", opts, "q -> arcsin_{p,q}(x) log-convex"),
        "thm2-arcsinh-pq-increasing-in-p": lambda: _thm2_group(
            "thm2-arcsinh-pq-increasing-in-p", ah, check_monotone, ARCSINH_P_GRID,
            ("increasing",), THM2_FIXED_Q, "p", opts, "p -> arcsinh_{p,q}(x) increasing"),
        "thm2-arcsinh-pq-concave-in-p": lambda: _thm2_group(
            "thm2-arcsinh-pq-concave-in-p", ah, check_convex, ARCSINH_P_GRID,
            ("concave",), THM2_FIXED_Q, "p", opts,
            "p -> arcsinh_{p,q}(x) concave for p > log(sqrt 2)"),
        "thm2-arcsinh-pq-increasing-in-q": lambda: _thm2_group(
            "thm2-arcsinh-pq-increasing-in-q", ah, check_monotone, P_GRID, ("increasing",),
            THM2_FIXED_P_ARCSINH, "q", opts, "q -> arcsinh_{p,q}(x) increasing"),
        "thm2-arcsinh-pq-concave-in-q": lambda: _thm2_group(
            "thm2-arcsinh-pq-concave-in-q", ah, check_convex, P_GRID, ("concave",),
            THM2_FIXED_P_ARCSINH, "q", opts, "q -> arcsinh_{p,q}(x) concave for p > 1"),
    }


REMB_U_GRID = Grid(0.05, 0.95, 19, "log")
REMB_P = (1.5, 2.0, 3.0)
_REMB = {
    FamilyId.ArcsinP: "convex",
    FamilyId.ArctanhP: "convex",
    FamilyId.ArcsinhP: "concave",
    FamilyId.ArctanP: "concave",
}


def _remark_b(opts):
    parts = []
    for fam, sense in _REMB.items():
        for p in REMB_P:
            f = lambda x, fam=fam, p=p: family_value(fam, x, p, opts=opts)
            rep = check_geom_convex(f, REMB_U_GRID, sense, name="remB-geom-x", var="x")
            parts.append(((fam.value, p), rep))
    records = []
    for (fam, p), rep in parts:
        for r in rep.records:
            records.append(InequalityRecord({"family": fam, "p": p, **r.point},
                                            r.lhs, r.rhs, r.margin, r.tol))
    return ScanReport("remB-geom-x", records, meta={
        "grids": {"x": str(REMB_U_GRID), "p": list(REMB_P)},
        "claim": "x -> f_p(x) geometrically convex (arcsin, arctanh) / concave (arcsinh, arctan)",
    })


REMA_A = (0.25, 0.5, 1.0, 2.0, 4.0)
REMA_X = (0.1, 0.5, 0.9)
REMA_N = (1, 2, 5, 20)


def _remark_a() -> ScanReport:
    records = []
    zero = Eval(0.0, 0.0, EvalPath.CLOSED_FORM)
    for a in REMA_A:
        for x in REMA_X:
            for n in REMA_N:
                for k in (1, 2, 3):
                    v = bernstein_check(a, x, n, k)
                    err = 64 * EPS * (1 + abs(math.log(x)) * n / a ** (k + 1)) * (1 + k * n)
                    records.append(_record({"a": a, "x": x, "n": n, "k": k},
                                           Eval(v, err, EvalPath.CLOSED_FORM), zero, LESS))
    return ScanReport("remA-bernstein", records, meta={
        "grids": {"a": list(REMA_A), "x": list(REMA_X), "n": list(REMA_N), "k": [1, 2, 3]},
        "claim": "(-1)^k (log phi_n)^(k)(a) < 0, so a -> phi_n(a) is a Bernstein-type function",
    })


NEUMAN_A = (1.0, 1.5, 2.0, 3.0)
NEUMAN_X = (0.2, 0.5, 0.8)
NEUMAN_P_HIGH = Grid(2.0, 6.0, 9)
NEUMAN_P_LOW = Grid(0.5, 1.9, 8)


def _neuman(grid: Grid, reverse: bool, opts) -> ScanReport:
    records = []
    for fam in (FamilyId.ArcsinP, FamilyId.ArctanhP):
        for a in NEUMAN_A:
            for x in NEUMAN_X:
                for p in grid.points():
                    lower, upper = neuman_bound(fam, p, a, x, reverse, opts)
                    for r in (lower, upper):
                        records.append(InequalityRecord({"family": fam.value, **r.point},
                                                        r.lhs, r.rhs, r.margin, r.tol))
    claim = ("f_2 <= M <= f_p for p <= 2" if reverse else "f_p <= M <= f_2 for p >= 2")
    name = "neuman-reversed" if reverse else "neuman"
    return ScanReport(name, records, meta={
        "grids": {"p": str(grid), "a": list(NEUMAN_A), "x": list(NEUMAN_X)},
        "claim": claim + ", M = (f_{2a} f_p^a / f_{ap})^(1/a)",
    })


COR_X = Grid(0.05, 0.95, 19)
COR2_P = Grid(0.5, 5.0, 10)
COR2_P_ARCSINH = Grid(LOG_SQRT2 + 0.05, 5.0, 10)
SHARPNESS_X = 1e-4
SHARPNESS_P = (1.0, 2.0, 3.0)


def _cor1(opts) -> ScanReport:
    records = [corollary_ratio("cor1", x, None, branch, opts)
               for branch in _COR1 for x in COR_X.points()]
    sharp = {b: corollary_sharpness("cor1", b, SHARPNESS_X, None, opts) for b in _COR1}
    return ScanReport("cor1", records, meta={
        "grids": {"x": str(COR_X)},
        "claim": "f_3^2/f_4 < f_2 (arcsin, arctanh) and > f_2 (arctan)",
    }, notes={"sharpness_x": SHARPNESS_X, "sharpness": sharp})


def _cor_thm2(opts) -> ScanReport:
    records = []
    for branch, grid in (("arcsin", COR2_P), ("arcsinh", COR2_P_ARCSINH)):
        for p in grid.points():
            for x in COR_X.points():
                records.append(corollary_ratio("cor-thm2", x, p, branch, opts))
    sharp = {f"{b}@p={p}": corollary_sharpness("cor-thm2", b, SHARPNESS_X, p, opts)
             for b in _COR2 for p in SHARPNESS_P}
    return ScanReport("cor-thm2", records, meta={
        "grids": {"x": str(COR_X), "p": str(COR2_P), "p_arcsinh": str(COR2_P_ARCSINH)},
        "claim": "arcsin_{p+1,p}^2/arcsin_{p+2,p} < arcsin_p; "
                 "arcsinh_{p+1,p}^2/arcsinh_{p+2,p} > arcsinh_p",
    }, notes={"sharpness_x": SHARPNESS_X, "sharpness": sharp})


CHAIN_ALPHAS = (0.25, 0.5, 0.75)
CHAIN_P = (1.5, 2.0, 3.0, 5.0, 8.0)
CHAIN_B = (0.5, 1.0, 2.0, 4.0, 8.0)


def _chains(opts):
    return {
        "remC-chains": lambda: convexity_chains("remC-pi", CHAIN_ALPHAS, CHAIN_P, opts=opts),
        "remD-chains": lambda: convexity_chains("remD-b", CHAIN_ALPHAS, CHAIN_B, opts=opts),
        "remE-chains-in-p": lambda: convexity_chains(
            "remE-pi-pq-in-p", CHAIN_ALPHAS, CHAIN_P, (0.5, 1.5, 3.0), opts),
        "remE-chains-in-q": lambda: convexity_chains(
            "remE-pi-pq-in-q", CHAIN_ALPHAS, (0.5, 1.0, 2.0, 4.0), (1.5, 2.0, 4.0), opts),
    }


def _conj_properties(opts):
    return {
        "conj1-arcsinh-concave": lambda: _per_x(
            "conj1-arcsinh-concave", FamilyId.ArcsinhP, check_convex, P_GRID, "concave",
            xs=(0.1, 0.5, 0.9), opts=opts, claim="p -> arcsinh_p(x) concave"),
    }


@dataclass(frozen=True)
class SuiteInfo:
    name: str
    kind: str  # "theorem" or "conjecture"
    description: str


def _registry(opts: EvalOptions) -> Dict[str, Callable[[], ScanReport]]:
    reg: Dict[str, Callable[[], ScanReport]] = {}
    for name in TURAN_SUITES:
        reg[name] = lambda name=name: scan_turan(name, opts=opts)
    reg.update(_thm1_properties(opts))
    reg.update(_thm2_properties(opts))
    reg["remA-bernstein"] = _remark_a
    reg["remB-geom-x"] = lambda: _remark_b(opts)
    reg.update(_chains(opts))
    reg["neuman"] = lambda: _neuman(NEUMAN_P_HIGH, False, opts)
    reg["neuman-reversed"] = lambda: _neuman(NEUMAN_P_LOW, True, opts)
    reg["cor1"] = lambda: _cor1(opts)
    reg["cor-thm2"] = lambda: _cor_thm2(opts)
    reg.update(_conj_properties(opts))
    return reg


def suite_names(kind: Optional[str] = None) -> List[str]:
    """Registered suite names, optionally filtered by ``"theorem"``/``"conjecture"``."""
    names = list(_registry(DEFAULT_OPTIONS))
    if kind is None:
        return names
    return [n for n in names if suite_kind(n) == kind]


def suite_kind(name: str) -> str:
    if name.startswith("conj"):
        return "conjecture"
    return "theorem"


def run_suite(name: str, opts: EvalOptions = DEFAULT_OPTIONS,
              x_grid: Optional[Grid] = None, s_grid: Optional[Grid] = None) -> ScanReport:
    """Run a registered suite.  Grid overrides apply to Turan-type suites only."""
    reg = _registry(opts)
    if name not in reg:
        raise ConfigurationError(f"unknown suite {name!r}; choose from {', '.join(reg)}")
    if name in TURAN_SUITES and (x_grid is not None or s_grid is not None):
        report = scan_turan(name, x_grid, s_grid, opts)
    elif x_grid is not None or s_grid is not None:
        raise ConfigurationError(f"suite {name!r} does not accept grid overrides")
    else:
        report = reg[name]()
    report.suite = name
    report.conjecture = suite_kind(name) == "conjecture"
    report.meta.setdefault("grids", {})
    report.meta["kind"] = suite_kind(name)
    return report
