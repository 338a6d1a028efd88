"""Bose-Chowla B_k[1] sets and their subgroup quotients.

For a prime q and a generator theta of F_{q^k}^*, the exponents a with
theta^a - theta in F_q form a B_k[1] set of size q in Z_{q^k - 1}. Reducing
modulo mu = (q^k - 1)/g for g | q - 1 keeps all q elements distinct and gives
a B_k[g] set in Z_mu, which then embeds in [1, n] once mu <= n.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .finite_field import FieldContext, check_sizes, field_context, is_prime
from .verification import INTEGERS, CandidateSet, GroupSpec, sum_profile

DEFAULT_CERT_CAP = 10**6


class ConstructionError(RuntimeError):
    """A construction invariant failed; signals a bug upstream."""


class NoPrimeError(ValueError):
    """No admissible prime exists for the requested (k, g, n)."""


@dataclass(frozen=True)
class BoseChowlaSet:
    q: int
    k: int
    modulus: int
    elements: tuple[int, ...]
    ctx: FieldContext = field(repr=False, compare=False)

    def as_candidate(self) -> CandidateSet:
        return CandidateSet(self.elements, self.k, 1, GroupSpec.cyclic(self.modulus))


@dataclass(frozen=True)
class QuotientSet:
    q: int
    k: int
    g: int
    mu: int
    elements: tuple[int, ...]

    def as_candidate(self) -> CandidateSet:
        # Z_1 is not a group we represent; mu >= 2 whenever q^k - 1 > g
        return CandidateSet(self.elements, self.k, self.g, GroupSpec.cyclic(self.mu))


@dataclass(frozen=True)
class Certificate:
    verified: bool
    min_g: int | None = None
    max_collision_sums: tuple[int, ...] = ()
    multisets: int | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "verified": self.verified,
            "min_g": self.min_g,
            "max_collision_sums": list(self.max_collision_sums),
            "multisets": self.multisets,
            "note": self.note,
        }


@dataclass(frozen=True)
class ConstructionResult:
    k: int
    g: int
    n: int
    chosen_q: int
    elements: tuple[int, ...]
    certificate: Certificate

    def as_candidate(self) -> CandidateSet:
        return CandidateSet(self.elements, self.k, self.g, INTEGERS)


def integer_root(x: int, k: int) -> int:
    """floor(x ** (1/k)) computed exactly on integers."""
    if x < 0 or k < 1:
        raise ValueError("need x >= 0 and k >= 1")
    lo, hi = 0, 1
    while hi**k <= x:
        hi *= 2
    # invariant: lo^k <= x < hi^k
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**k <= x:
            lo = mid
        else:
            hi = mid
    return lo


def bose_chowla(q: int, k: int, backend: str | None = None) -> BoseChowlaSet:
    """The Bose-Chowla set {a : theta^a - theta in F_q} in Z_{q^k - 1}."""
    check_sizes(q, k)
    ctx = field_context(q, k)
    # a = 0 would need 1 - theta in F_q, impossible when theta has degree k >= 2
    elems = kernels.get(backend).bc_sweep(q, k, ctx.f, ctx.theta)
    if len(elems) != q:
        raise ConstructionError(f"Bose-Chowla sweep found {len(elems)} elements, expected {q}")
    return BoseChowlaSet(q, k, ctx.group_order, tuple(elems), ctx)


def subgroup_elements(q: int, k: int, g: int) -> list[int]:
    """The order-g subgroup {0, mu, ..., (g-1) mu} of Z_{q^k - 1}."""
    if g < 1 or (q - 1) % g:
        raise ValueError(f"g={g} must divide q - 1 = {q - 1}")
    mu = (q**k - 1) // g
    return [i * mu for i in range(g)]


def differences_avoid_subgroup(A: BoseChowlaSet, H) -> bool:
    """True iff the difference set A - A meets the subgroup H only in 0."""
    m = A.modulus
    diffs = {(a - b) % m for a in A.elements for b in A.elements}
    return diffs & {h % m for h in H} == {0}


check_lemma_3_1 = differences_avoid_subgroup


def quotient_set(A: BoseChowlaSet, g: int) -> QuotientSet:
    if g < 1 or (A.q - 1) % g:
        raise ValueError(f"g={g} must divide q - 1 = {A.q - 1}")
    mu = A.modulus // g
    reduced = sorted({a % mu for a in A.elements})
    if len(reduced) != len(A.elements):
        raise ConstructionError(f"reduction modulo {mu} is not injective")
    return QuotientSet(A.q, A.k, g, mu, tuple(reduced))


def select_prime(k: int, g: int, n: int) -> int | None:
    """Largest prime q = 1 (mod g) with (q^k - 1)/g <= n, or None."""
    if k < 2 or g < 1 or n < 1:
        raise ValueError("need k >= 2, g >= 1, n >= 1")
    q = integer_root(g * n + 1, k)
    while q >= 2:
        if (q - 1) % g == 0 and is_prime(q) and (q**k - 1) // g <= n:
            return q
        q -= 1
    return None


def certify(A: CandidateSet, cert_cap: int = DEFAULT_CERT_CAP,
            scale: int | None = None) -> Certificate:
    """Exact verification summary, skipped beyond ``cert_cap`` group elements."""
    scale = len(A) if scale is None else scale
    if scale > cert_cap:
        return Certificate(False, note="not verified (scale)")
    prof = sum_profile(A)
    return Certificate(
        verified=prof.max_count <= A.g,
        min_g=prof.max_count,
        max_collision_sums=tuple(prof.argmax_sums),
        multisets=prof.total,
    )


def construct_bkg(k: int, g: int, n: int, cert_cap: int = DEFAULT_CERT_CAP,
                  backend: str | None = None) -> ConstructionResult:
    """A B_k[g] subset of [1, n] of size q via Bose-Chowla plus quotient."""
    q = select_prime(k, g, n)
    if q is None:
        raise NoPrimeError(f"no prime q = 1 (mod {g}) with (q^{k} - 1)/{g} <= {n}")
    quot = quotient_set(bose_chowla(q, k, backend), g)
    # residues in [0, mu - 1] shift to [1, mu]; mu <= n by the choice of q
    elems = tuple(r + 1 for r in quot.elements)
    if elems and elems[-1] > n:
        raise ConstructionError(f"embedded set exceeds n={n}")
    cand = CandidateSet(elems, k, g, INTEGERS)
    cert = certify(cand, cert_cap, scale=q**k)
    if cert.verified is False and cert.min_g is not None:
        raise ConstructionError(f"certificate failed: min_g={cert.min_g} > g={g}")
    return ConstructionResult(k, g, n, q, elems, cert)
