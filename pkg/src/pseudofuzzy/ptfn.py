"""Pseudo triangular fuzzy numbers (PTFNs) and their level cuts.

A PTFN is a triangle (a, b, c) carrying two membership profiles over the
reals. The positive grade mu is the usual triangular hat in both kinds:

    mu(x) = 0            for x <= a
          = (x-a)/(b-a)  on [a, b]
          = (c-x)/(c-b)  on [b, c]
          = 0            for x >= c

The negative grade lam depends on the kind:

    dependent:    lam = -1 outside [a, c], (x-b)/(b-a) on [a, b],
                  (b-x)/(c-b) on [b, c].      Identity: lam = mu - 1.
    independent:  lam = 0 outside [a, c], (a-x)/(b-a) on [a, b],
                  (x-c)/(c-b) on [b, c].      Identity: lam = -mu.

A dependent number keeps |mu| + |lam| = 1 everywhere (case B); an
independent one has |mu| + |lam| = 2*mu, sweeping cases A and C.

Degenerate sides: a == b (or b == c) makes that side a step, with the
peak value 1 taken at x == b. a == b == c is rejected at construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .core import (
    DEFAULT_EPS,
    DiscretePseudoFuzzySet,
    MembershipPair,
    PseudoFuzzyElement,
    _require_eps,
    _require_finite,
    magnitude_sum,
)
from .errors import (
    AlphaOutOfRange,
    BadCount,
    BadRange,
    BetaOutOfRange,
    InvalidInterval,
    InvalidShape,
    ParamOutOfRange,
)


class Kind(enum.Enum):
    """Profile of the negative membership: lam = mu - 1 or lam = -mu."""

    DEPENDENT = "dependent"
    INDEPENDENT = "independent"


@dataclass(frozen=True)
class TriangleShape:
    """Triangle feet and peak: a <= b <= c with a < c."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        a = _require_finite("a", self.a)
        b = _require_finite("b", self.b)
        c = _require_finite("c", self.c)
        if not a <= b <= c:
            raise InvalidShape(f"need a <= b <= c, got ({a!r}, {b!r}, {c!r})")
        if a == c:
            raise InvalidShape(f"zero-width triangle a == c == {a!r}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def width(self) -> float:
        return self.c - self.a


@dataclass(frozen=True)
class Interval:
    """Closed real interval [lo, hi]."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        lo = _require_finite("lo", self.lo)
        hi = _require_finite("hi", self.hi)
        if lo > hi:
            raise InvalidInterval(f"need lo <= hi, got [{lo!r}, {hi!r}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "Interval", slack: float = 0.0) -> bool:
        return other.lo >= self.lo - slack and other.hi <= self.hi + slack


@dataclass(frozen=True)
class PseudoTfn:
    """A triangular shape tagged with its negative-membership kind."""

    shape: TriangleShape
    kind: Kind

    def __post_init__(self) -> None:
        if not isinstance(self.shape, TriangleShape):
            raise TypeError(f"shape must be a TriangleShape, got {type(self.shape).__name__}")
        if not isinstance(self.kind, Kind):
            raise TypeError(f"kind must be a Kind, got {type(self.kind).__name__}")

    @classmethod
    def dependent(cls, a: float, b: float, c: float) -> "PseudoTfn":
        return cls(TriangleShape(a, b, c), Kind.DEPENDENT)

    @classmethod
    def independent(cls, a: float, b: float, c: float) -> "PseudoTfn":
        return cls(TriangleShape(a, b, c), Kind.INDEPENDENT)

    @property
    def a(self) -> float:
        return self.shape.a

    @property
    def b(self) -> float:
        return self.shape.b

    @property
    def c(self) -> float:
        return self.shape.c

    @property
    def support(self) -> Interval:
        return Interval(self.shape.a, self.shape.c)


def mu_at(p: PseudoTfn, x: float) -> float:
    """Positive membership at x; piecewise linear, 1 at the peak."""
    x = _require_finite("x", x)
    a, b, c = p.a, p.b, p.c
    if x < a or x > c:
        return 0.0
    if x == b:
        return 1.0
    if x < b:
        return (x - a) / (b - a)
    return (c - x) / (c - b)


def lambda_at(p: PseudoTfn, x: float) -> float:
    """Negative membership at x per the number's kind."""
    x = _require_finite("x", x)
    a, b, c = p.a, p.b, p.c
    if p.kind is Kind.DEPENDENT:
        if x < a or x > c:
            return -1.0
        if x == b:
            return 0.0
        if x < b:
            return (x - b) / (b - a)
        return (b - x) / (c - b)
    # independent
    if x < a or x > c:
        return 0.0
    if x == b:
        return -1.0
    if x < b:
        return (a - x) / (b - a)
    return (x - c) / (c - b)


def pair_at(p: PseudoTfn, x: float) -> MembershipPair:
    """Both grades at x as a validated MembershipPair."""
    return MembershipPair(mu_at(p, x), lambda_at(p, x))


def alpha_cut_mu(p: PseudoTfn, alpha: float) -> Interval:
    """Level set {x : mu(x) >= alpha} as an interval.

    alpha = 0 returns the support closure [a, c]; alpha = 1 the peak
    [b, b]. Interior levels invert the two linear branches.
    """
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:  # NaN fails the chained comparison too
        raise AlphaOutOfRange(f"alpha must lie in [0, 1], got {alpha!r}")
    a, b, c = p.a, p.b, p.c
    if alpha == 1.0:
        return Interval(b, b)
    lo = a + alpha * (b - a)
    hi = c - alpha * (c - b)
    # alpha within ulps of 1 can invert the endpoints by rounding
    if lo > hi:
        lo = hi = 0.5 * (lo + hi)
    return Interval(lo, hi)


def beta_cut_lambda(p: PseudoTfn, beta: float) -> Interval:
    """Kind-oriented level cut of the negative membership.

    Dependent numbers are cut where lam is weakest (lam >= beta, near 0):
    the interval [b + beta*(b-a), b - beta*(c-b)], which coincides with
    the mu-cut at level beta + 1. Independent numbers are cut where the
    negative grade is strongest (lam <= beta), which is the mu-cut at
    level -beta.
    """
    beta = float(beta)
    if not -1.0 <= beta <= 0.0:
        raise BetaOutOfRange(f"beta must lie in [-1, 0], got {beta!r}")
    if p.kind is Kind.INDEPENDENT:
        return alpha_cut_mu(p, -beta)
    a, b, c = p.a, p.b, p.c
    if beta == 0.0:
        return Interval(b, b)
    if beta == -1.0:
        return Interval(a, c)
    lo = b + beta * (b - a)
    hi = b - beta * (c - b)
    if lo > hi:
        lo = hi = 0.5 * (lo + hi)
    return Interval(lo, hi)


def parametric_point(p: PseudoTfn, r: float, s: float) -> float:
    """Crisp point x(r, s): sweep the alpha-cut at level r by fraction s.

    s = 0 gives the left endpoint, s = 1 the right; r = 1 collapses to
    the peak b for every s.
    """
    r = float(r)
    s = float(s)
    if not 0.0 <= r <= 1.0:
        raise ParamOutOfRange(f"r must lie in [0, 1], got {r!r}")
    if not 0.0 <= s <= 1.0:
        raise ParamOutOfRange(f"s must lie in [0, 1], got {s!r}")
    cut = alpha_cut_mu(p, r)
    return cut.lo + s * (cut.hi - cut.lo)


def discretize(p: PseudoTfn, n: int, xmin: float, xmax: float) -> DiscretePseudoFuzzySet:
    """Sample both grades at n equally spaced points of [xmin, xmax]."""
    if n != int(n) or n < 2:
        raise BadCount(f"need n >= 2 sample points, got {n!r}")
    n = int(n)
    xmin = _require_finite("xmin", xmin)
    xmax = _require_finite("xmax", xmax)
    if not xmin < xmax:
        raise BadRange(f"need xmin < xmax, got [{xmin!r}, {xmax!r}]")
    span = xmax - xmin
    elements = []
    for i in range(n):
        x = xmax if i == n - 1 else xmin + (i * span) / (n - 1)
        elements.append(PseudoFuzzyElement(x, pair_at(p, x)))
    return DiscretePseudoFuzzySet(tuple(elements))


def _kind_defect(pair: MembershipPair, kind: Kind) -> float:
    """Deviation of a pair from the kind identity (0 when it holds)."""
    if kind is Kind.DEPENDENT:
        return abs(magnitude_sum(pair) - 1.0)
    return abs(pair.lam + pair.mu)


def kind_violation(p: PseudoTfn, grid: int, eps: float = DEFAULT_EPS) -> Optional[float]:
    """First sampled x where p breaks its kind identity, or None.

    Samples grid points over [a - (c-a), c + (c-a)]: one support-width
    beyond each foot, so the constant outer branches are exercised where
    the two kinds differ most.
    """
    if grid != int(grid) or grid < 2:
        raise BadCount(f"need grid >= 2 sample points, got {grid!r}")
    grid = int(grid)
    eps = _require_eps(eps)
    width = p.shape.width
    xlo = p.a - width
    xhi = p.c + width
    span = xhi - xlo
    for i in range(grid):
        x = xhi if i == grid - 1 else xlo + (i * span) / (grid - 1)
        if _kind_defect(pair_at(p, x), p.kind) > eps:
            return x
    return None


def verify_kind(p: PseudoTfn, grid: int, eps: float = DEFAULT_EPS) -> bool:
    """True iff the kind identity holds at every sampled point."""
    return kind_violation(p, grid, eps) is None


def set_kind_violation(
    dset: DiscretePseudoFuzzySet, kind: Kind, eps: float = DEFAULT_EPS
) -> Optional[float]:
    """First x of a discrete set whose pair breaks the given kind rule."""
    eps = _require_eps(eps)
    for element in dset:
        if _kind_defect(element.pair, kind) > eps:
            return element.x
    return None
