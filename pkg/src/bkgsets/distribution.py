"""Exact distributions of sums of uniform draws from a set, and their
distance to the matching normal law.

Draws X_i are uniform on A and centred by E(A). Sums are convolved on raw
integer values with integer counts, so masses are exact; the centring shift
j E(A) is a rational applied only when comparing with the normal CDF.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import erf as _erf_vec

SUPPORT_CAP = 10**7
BE_CONSTANT = 0.56


class ZeroVarianceError(ValueError):
    """A constant set has no normal approximation (delta = 0)."""


def mean(A) -> Fraction:
    return Fraction(sum(A), len(A))


def variance(A) -> Fraction:
    """Population variance, exact."""
    m = len(A)
    s1 = sum(A)
    s2 = sum(a * a for a in A)
    return Fraction(m * s2 - s1 * s1, m * m)


@dataclass
class SumPmf:
    """Counts of raw sums ``offset + i`` over ``denominator`` equally likely tuples.

    ``shift`` is the exact mean of the raw value; the centred variable is the
    raw value minus ``shift``.
    """

    offset: int
    counts: np.ndarray
    denominator: int
    j: int
    shift: Fraction

    @property
    def support(self) -> np.ndarray:
        nz = np.flatnonzero(self.counts)
        return self.offset + nz

    @property
    def total(self) -> int:
        return int(sum(int(c) for c in self.counts))

    @property
    def max_count(self) -> int:
        return int(max(int(c) for c in self.counts))

    def items(self):
        for i in np.flatnonzero(self.counts):
            yield self.offset + int(i), int(self.counts[i])

    def variance(self) -> Fraction:
        n = self.denominator
        s1 = 0
        s2 = 0
        for x, c in self.items():
            s1 += c * x
            s2 += c * x * x
        return Fraction(n * s2 - s1 * s1, n * n)

    @property
    def mean(self) -> Fraction:
        return self.shift

    def centered_support(self) -> np.ndarray:
        return self.support.astype(float) - float(self.shift)


def _convolve(a: np.ndarray, b: np.ndarray, exact_bound: int) -> np.ndarray:
    if exact_bound < 2**62 and a.dtype != object and b.dtype != object:
        out = np.convolve(a.astype(np.int64), b.astype(np.int64))
        return out
    # python ints beyond 64 bits
    a = [int(x) for x in a]
    b = [int(x) for x in b]
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return np.array(out, dtype=object)


def _indicator(A) -> tuple[int, np.ndarray]:
    lo, hi = min(A), max(A)
    vec = np.zeros(hi - lo + 1, dtype=np.int64)
    for a in A:
        vec[a - lo] += 1
    return lo, vec


def sum_pmf(A, j: int) -> SumPmf:
    """Distribution of X_1 + ... + X_j, X_i uniform on ``A``."""
    A = sorted(set(int(a) for a in A))
    if not A:
        raise ValueError("A must be nonempty")
    if j < 1:
        raise ValueError("j must be >= 1")
    support = j * (A[-1] - A[0]) + 1
    if support > SUPPORT_CAP:
        raise ValueError(f"support size {support} exceeds cap {SUPPORT_CAP}")
    lo, base = _indicator(A)
    size = len(A)
    counts = np.array([1], dtype=np.int64)
    acc_total = 1
    for _ in range(j):
        acc_total *= size
        counts = _convolve(counts, base, acc_total)
    return SumPmf(j * lo, counts, size**j, j, j * mean(A))


def _reflect(p: SumPmf) -> SumPmf:
    n = len(p.counts)
    return SumPmf(-(p.offset + n - 1), p.counts[::-1].copy(), p.denominator, p.j, -p.shift)


def difference_pmf(A, k: int) -> SumPmf:
    """Distribution of Y = Y_1 - Y_2 with ceil(k/2) and floor(k/2) draws."""
    if k < 2:
        raise ValueError("k must be >= 2")
    left = sum_pmf(A, (k + 1) // 2)
    right = _reflect(sum_pmf(A, k // 2))
    counts = _convolve(left.counts, right.counts, left.denominator * right.denominator)
    return SumPmf(left.offset + right.offset, counts, left.denominator * right.denominator,
                  k, left.shift + right.shift)


def normal_cdf(x, sigma: float):
    """CDF of N(0, sigma^2); accepts scalars or arrays."""
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    if np.isscalar(x):
        return 0.5 * (1.0 + math.erf(x / (sigma * math.sqrt(2.0))))
    return 0.5 * (1.0 + _erf_vec(np.asarray(x, dtype=float) / (sigma * math.sqrt(2.0))))


def sup_distance(pmf: SumPmf, sigma: float) -> float:
    """sup_x |F(x) - Phi(x)| for the centred pmf against N(0, sigma^2).

    F is a step function, so the supremum is reached at a jump: either the
    value at the jump or the left limit just before it.
    """
    xs = pmf.centered_support()
    masses = np.array([int(c) for c in pmf.counts if int(c)], dtype=object)
    cum = np.cumsum(masses)
    denom = pmf.denominator
    right = np.array([float(Fraction(int(c), denom)) for c in cum])
    left = np.concatenate(([0.0], right[:-1]))
    phi = normal_cdf(xs, sigma)
    return float(max(np.max(np.abs(right - phi)), np.max(np.abs(left - phi))))


@dataclass
class DistributionStats:
    n: int
    k: int
    variance: Fraction
    delta: float
    sigma: float
    psi_bound_z: float
    rho_bound: float

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "variance": float(self.variance),
            "delta": self.delta,
            "sigma": self.sigma,
            "psi_bound": self.psi_bound_z,
            "rho_bound": self.rho_bound,
        }


def distribution_stats(A, k: int, n: int | None = None) -> DistributionStats:
    A = sorted(set(int(a) for a in A))
    n = A[-1] if n is None else n
    if A[0] < 1 or A[-1] > n:
        raise ValueError(f"A must lie in [1, {n}]")
    var = variance(A)
    delta = float(var / (n * n))
    sigma = math.sqrt(k * float(var))
    psi = 1 / math.sqrt(k * delta) if delta > 0 else math.inf
    return DistributionStats(n, k, var, delta, sigma, psi, delta * n**3)


@dataclass
class BerryEsseenCertificate:
    sup_distance_z: float
    bound_z: float
    sup_distance_y: float
    bound_y: float
    stats: DistributionStats

    @property
    def passed(self) -> bool:
        return self.sup_distance_z <= self.bound_z and self.sup_distance_y <= self.bound_y

    def to_json(self) -> dict:
        return {
            "sup_distance_Z": self.sup_distance_z,
            "bound_Z": self.bound_z,
            "sup_distance_Y": self.sup_distance_y,
            "bound_Y": self.bound_y,
            "pass": self.passed,
            "stats": self.stats.to_json(),
        }


def berry_esseen_certificate(A, k: int, n: int | None = None) -> BerryEsseenCertificate:
    """Compare the exact Z and Y distributions with N(0, k Var(A))."""
    stats = distribution_stats(A, k, n)
    if stats.variance == 0:
        raise ZeroVarianceError("A has zero variance")
    z = sum_pmf(A, k)
    y = difference_pmf(A, k)
    dz = sup_distance(z, stats.sigma)
    dy = sup_distance(y, stats.sigma)
    bound_z = BE_CONSTANT / math.sqrt(k * stats.delta)
    bound_y = 4 * BE_CONSTANT / math.sqrt((k // 2) * stats.delta)
    return BerryEsseenCertificate(dz, bound_z, dy, bound_y, stats)


def pmf_rows(pmf: SumPmf, sigma: float):
    """(centred value, mass, F, Phi) rows for plotting."""
    cum = 0
    for x, c in pmf.items():
        cum += c
        xc = x - pmf.shift
        yield (float(xc), c / pmf.denominator, cum / pmf.denominator,
               normal_cdf(float(xc), sigma))


@dataclass
class PmfMaxReport:
    size: int
    k: int
    g: int
    z_max_count: int
    z_bound_count: int
    y_max_count: int | None
    y_bound_count: int | None
    y_argmax: list[int] | None

    @property
    def z_ok(self) -> bool:
        return self.z_max_count <= self.z_bound_count

    @property
    def y_ok(self) -> bool | None:
        if self.y_max_count is None:
            return None
        return self.y_max_count <= self.y_bound_count

    @property
    def passed(self) -> bool:
        return self.z_ok and self.y_ok is not False


def pmf_max_report(A, k: int, g: int) -> PmfMaxReport:
    """Exact maximal point masses of Z (and of Y when g = 1) against
    g k! / |A|^k and ceil(k/2)! floor(k/2)! / |A|^k.

    Comparisons are on integer counts over the common denominator |A|^k.
    """
    A = sorted(set(int(a) for a in A))
    z = sum_pmf(A, k)
    z_bound = g * math.factorial(k)
    y_max = y_bound = y_arg = None
    if g == 1:
        y = difference_pmf(A, k)
        y_max = y.max_count
        y_bound = math.factorial((k + 1) // 2) * math.factorial(k // 2)
        y_arg = [x for x, c in y.items() if c == y_max]
    return PmfMaxReport(len(A), k, g, z.max_count, z_bound, y_max, y_bound, y_arg)


def pmf_max_check(A, k: int, g: int) -> bool:
    return pmf_max_report(A, k, g).passed
