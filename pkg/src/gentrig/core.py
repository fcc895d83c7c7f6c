"""Shared value types and exceptions used across the package."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class GenTrigError(Exception):
    """Base class for all package errors."""


class DomainError(GenTrigError, ValueError):
    """An argument lies outside the domain of the requested function."""


class DivergenceError(DomainError):
    """The requested value is infinite (e.g. ``arcsin_p(1)`` for ``p <= 1``)."""


class ConvergenceError(GenTrigError, ArithmeticError):
    """A series or iteration hit its cap before reaching the tolerance.

    The best available estimate is kept on ``estimate`` (an :class:`Eval`
    or a plain float) so callers can still inspect it.
    """

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class AccuracyError(ConvergenceError):
    """Adaptive quadrature exhausted its subdivision budget."""


class IllConditionedError(GenTrigError, ArithmeticError):
    """The requested evaluation is numerically ill-conditioned."""


class ConsistencyError(GenTrigError, ArithmeticError):
    """Independent evaluation paths disagree beyond their error budgets."""


class ConfigurationError(GenTrigError, ValueError):
    """A scan or CLI configuration is invalid (e.g. empty effective domain)."""


class EvalPath(str, enum.Enum):
    SERIES = "series"
    QUADRATURE = "quadrature"
    CLOSED_FORM = "closed_form"
    ROOT_FIND = "root_find"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class EvalOptions:
    """Tolerances and work caps shared by series, quadrature and root finding."""

    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_terms: int = 10000
    max_depth: int = 48

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ConfigurationError(f"abs_tol must be positive, got {self.abs_tol}")
        if not self.rel_tol > 0:
            raise ConfigurationError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_terms < 16:
            raise ConfigurationError(f"max_terms must be >= 16, got {self.max_terms}")
        if self.max_depth < 4:
            raise ConfigurationError(f"max_depth must be >= 4, got {self.max_depth}")

    def target(self, value: float) -> float:
        """Absolute error target for a result of magnitude ``value``."""
        return max(self.abs_tol, self.rel_tol * abs(value))


DEFAULT_OPTIONS = EvalOptions()


@dataclass(frozen=True)
class Eval:
    """A computed value, a claimed bound on its absolute error, and its path."""

    value: float
    err: float
    path: EvalPath

    def __post_init__(self):
        if self.err < 0 or math.isnan(self.err):
            raise ValueError(f"err must be nonnegative, got {self.err}")
        if math.isfinite(self.value) and not math.isfinite(self.err):
            raise ValueError("err must be finite when value is finite")

    def __float__(self):
        return float(self.value)

    def scaled(self, factor: float) -> "Eval":
        return Eval(self.value * factor, self.err * abs(factor), self.path)


class FamilyId(str, enum.Enum):
    """Function families; the string value is the public (CLI) name."""

    ArcsinP = "arcsin_p"
    ArccosP = "arccos_p"
    ArctanP = "arctan_p"
    ArcsinhP = "arcsinh_p"
    ArctanhP = "arctanh_p"
    ArcsinPQ = "arcsin_pq"
    ArcsinhPQ = "arcsinh_pq"
    PiP = "pi_p"
    BP = "b_p"
    PiPQ = "pi_pq"
    SinP = "sin_p"
    CosP = "cos_p"
    TanP = "tan_p"
    SinhP = "sinh_p"
    TanhP = "tanh_p"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, name: "str | FamilyId") -> "FamilyId":
        if isinstance(name, FamilyId):
            return name
        for member in cls:
            if name in (member.value, member.name):
                return member
        raise ConfigurationError(f"unknown family {name!r}")

    @property
    def is_constant(self) -> bool:
        return self in (FamilyId.PiP, FamilyId.BP, FamilyId.PiPQ)

    @property
    def is_inverse(self) -> bool:
        return self in (FamilyId.SinP, FamilyId.CosP, FamilyId.TanP,
                        FamilyId.SinhP, FamilyId.TanhP)

    @property
    def two_parameter(self) -> bool:
        return self in (FamilyId.ArcsinPQ, FamilyId.ArcsinhPQ, FamilyId.PiPQ)


@dataclass(frozen=True)
class PQ:
    """Parameter pair ``(p, q)``, both strictly positive."""

    p: float
    q: float

    def __post_init__(self):
        for name, v in (("p", self.p), ("q", self.q)):
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be a finite positive real, got {v!r}")

    @classmethod
    def single(cls, p: float) -> "PQ":
        return cls(p, p)

    @property
    def diagonal(self) -> bool:
        return self.p == self.q
