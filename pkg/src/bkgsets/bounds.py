"""Upper and lower bounds on F_{k,g}(n), the largest B_k[g] subset of [1, n].

Every formula is evaluated in the log domain so factorials of large k stay
finite. Bounds whose published form carries an unspecified correction term
(O_k(1), epsilon_k, 1 + o(1)) are evaluated with that term dropped and carry
``asymptotic=True``; they are not rigorous for small k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

REL_TOL = 1e-9


class NotApplicableError(ValueError):
    """The bound is not defined for this (k, g, n)."""


@dataclass(frozen=True)
class ProblemSpec:
    k: int
    g: int
    n: int

    def __post_init__(self):
        if self.k < 2 or self.g < 1 or self.n < 1:
            raise ValueError(f"need k >= 2, g >= 1, n >= 1; got {self}")


@dataclass(frozen=True)
class XkRoot:
    k: int
    x_k: float
    residual: float


@dataclass
class BoundEntry:
    name: str
    value: float | None
    applicable: bool
    asymptotic: bool = False
    notes: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "applicable": self.applicable,
            "asymptotic_flag": self.asymptotic,
            "notes": self.notes,
        }


@dataclass
class BoundReport:
    spec: ProblemSpec
    entries: list[BoundEntry] = field(default_factory=list)
    lower_target: float | None = None
    lower_achieved: int | None = None
    chosen_q: int | None = None

    def __getitem__(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def upper_values(self, rigorous_only: bool = False) -> dict[str, float]:
        return {e.name: e.value for e in self.entries
                if e.applicable and not (rigorous_only and e.asymptotic)}

    def to_json(self) -> dict:
        return {
            "k": self.spec.k,
            "g": self.spec.g,
            "n": self.spec.n,
            "upper_bounds": [e.to_json() for e in self.entries],
            "lower_bound": {
                "target": self.lower_target,
                "achieved": self.lower_achieved,
                "chosen_q": self.chosen_q,
            },
        }


def _lfact(m: int) -> float:
    return math.lgamma(m + 1)


def _half_factorials_log(k: int) -> float:
    """log(ceil(k/2)! floor(k/2)!)."""
    return _lfact((k + 1) // 2) + _lfact(k // 2)


def _root(log_value: float, k: int) -> float:
    return math.exp(log_value / k)


def trivial_bound(spec: ProblemSpec) -> float:
    """(g k! k n)^(1/k)."""
    k, g, n = spec.k, spec.g, spec.n
    return _root(math.log(g) + _lfact(k) + math.log(k) + math.log(n), k)


def jia_chen_bound(spec: ProblemSpec) -> float:
    """(floor(k/2)! ceil(k/2)! k n)^(1/k), main term only; g = 1."""
    if spec.g != 1:
        raise NotApplicableError("Jia/Chen bound is stated for g = 1 only")
    k, n = spec.k, spec.n
    return _root(_half_factorials_log(k) + math.log(k) + math.log(n), k)


def green_bound(spec: ProblemSpec) -> float:
    """(ceil(k/2)! floor(k/2)! sqrt(pi k / 2) n)^(1/k) with epsilon_k = 0; g = 1."""
    if spec.g != 1:
        raise NotApplicableError("Green's bound is stated for g = 1 only")
    k, n = spec.k, spec.n
    return _root(_half_factorials_log(k) + 0.5 * math.log(math.pi * k / 2) + math.log(n), k)


def crt_bound(spec: ProblemSpec) -> float:
    """(k! k g n / (1 + cos^k(pi/k)))^(1/k)."""
    k, g, n = spec.k, spec.g, spec.n
    denom = 1.0 + math.cos(math.pi / k) ** k
    return _root(_lfact(k) + math.log(k * g) + math.log(n) - math.log(denom), k)


def cj_bound(spec: ProblemSpec) -> float:
    """(sqrt(3k) k! g n)^(1/k)."""
    k, g, n = spec.k, spec.g, spec.n
    return _root(0.5 * math.log(3 * k) + _lfact(k) + math.log(g) + math.log(n), k)


def xk_rhs(k: int) -> float:
    return (4.0 / (3.0 - math.cos(math.pi / k)) - 1.0) ** k


def _sinc(x: float) -> float:
    return math.sin(x) / x if x else 1.0


def solve_xk(k: int, tol: float = 1e-12) -> XkRoot:
    """Root in (0, pi) of sin(x)/x = (4/(3 - cos(pi/k)) - 1)^k by bisection.

    sin(x)/x falls strictly from 1 to 0 on (0, pi) and the right side lies in
    (0, 1) for k >= 2, so the bracket always holds exactly one sign change.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    rhs = xk_rhs(k)
    lo, hi = 0.0, math.pi
    # h(x) = sinc(x) - rhs: positive at 0, negative at pi
    if not (_sinc(lo) - rhs > 0 > _sinc(hi) - rhs):
        raise ArithmeticError(f"no sign change for k={k}")
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        if _sinc(mid) - rhs > 0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    return XkRoot(k, x, abs(_sinc(x) - rhs))


def tait_bound(spec: ProblemSpec) -> float:
    """(x_k k! k g n / pi)^(1/k), the (1 + o(1)) factor dropped."""
    k, g, n = spec.k, spec.g, spec.n
    xk = solve_xk(k).x_k
    return _root(math.log(xk) + _lfact(k) + math.log(k * g) + math.log(n) - math.log(math.pi), k)


def max_variance(n: int) -> float:
    """Largest possible variance of a subset of [1, n]."""
    return (n - 1) ** 2 / 4


def variance_bound(spec: ProblemSpec, variance: float | None = None) -> float:
    """|A| from |A|^(2k) / (12 c^2) <= k Var(A), with the o(1) dropped.

    c = ceil(k/2)! floor(k/2)! for g = 1 and g k! for g > 1. ``variance``
    defaults to the maximum (n - 1)^2 / 4.
    """
    k, g = spec.k, spec.g
    if variance is None:
        variance = max_variance(spec.n)
    if variance <= 0:
        raise NotApplicableError("variance must be positive")
    log_c = _half_factorials_log(k) if g == 1 else math.log(g) + _lfact(k)
    return math.exp(math.log(12 * k * variance) / (2 * k) + log_c / k)


def berry_esseen_margin(k: int, g: int) -> float:
    """Coefficient L with the Berry-Esseen branch reading c n / |A|^k >= L.

    Uses t = k^(1/3) n and delta >= pi/24. For g = 1 the difference variable
    carries four Berry-Esseen errors (constant 4.48 after doubling); for
    g > 1 the plain sum carries two.
    """
    k3 = k ** (1 / 3)
    main = (1 - 12 / (math.pi * k3)) / math.sqrt(math.pi * k / 2)
    if g == 1:
        err = 4.48 / (2 * k3 * math.sqrt((k // 2) * math.pi / 24))
    else:
        err = 2 * 0.56 / (2 * k3 * math.sqrt(k * math.pi / 24))
    return main - err


def explicit_thm1_bound(spec: ProblemSpec) -> float:
    """Non-asymptotic bound from the normal-approximation argument.

    The maximum of the Berry-Esseen branch (delta >= pi/24) and the variance
    branch evaluated at delta = pi/24.
    """
    k, g, n = spec.k, spec.g, spec.n
    margin = berry_esseen_margin(k, g)
    if margin <= 0:
        raise NotApplicableError(f"Berry-Esseen branch is vacuous for k={k} (L={margin:.6g})")
    log_c = _half_factorials_log(k) if g == 1 else math.log(g) + _lfact(k)
    be = _root(log_c + math.log(n) - math.log(margin), k)
    var = variance_bound(spec, math.pi * n * n / 24)
    return max(be, var)


def lower_bound_value(spec: ProblemSpec, cert_cap: int | None = None):
    """``(target, achieved, q)``: (g n)^(1/k) and the constructed set size.

    ``achieved`` and ``q`` are None when no admissible prime exists.
    """
    from .construction import DEFAULT_CERT_CAP, NoPrimeError, construct_bkg

    target = _root(math.log(spec.g * spec.n), spec.k)
    try:
        res = construct_bkg(spec.k, spec.g, spec.n,
                            DEFAULT_CERT_CAP if cert_cap is None else cert_cap)
    except NoPrimeError:
        return target, None, None
    return target, len(res.elements), res.chosen_q


_UPPER = (
    ("trivial", trivial_bound, False, ""),
    ("jia_chen", jia_chen_bound, True, "O_k(1) additive term omitted"),
    ("green", green_bound, True, "epsilon_k = O(k^-1/8) set to 0"),
    ("crt", crt_bound, False, ""),
    ("cj", cj_bound, False, ""),
    ("tait", tait_bound, True, "(1 + o(1)) factor omitted"),
    ("variance_bound", variance_bound, True, "o(1) omitted; Var(A) <= (n-1)^2/4"),
    ("explicit_thm1", explicit_thm1_bound, False, "t = k^(1/3) n; max of both branches"),
)


def bound_report(spec: ProblemSpec, with_construction: bool = True,
                 cert_cap: int | None = None) -> BoundReport:
    report = BoundReport(spec)
    for name, fn, asymptotic, notes in _UPPER:
        try:
            value = fn(spec)
        except NotApplicableError as exc:
            report.entries.append(BoundEntry(name, None, False, asymptotic, str(exc)))
        else:
            report.entries.append(BoundEntry(name, value, True, asymptotic, notes))
    if with_construction:
        target, achieved, q = lower_bound_value(spec, cert_cap)
        report.lower_target, report.lower_achieved, report.chosen_q = target, achieved, q
    return report
