"""Arithmetic in prime fields F_p and their extensions F_{p^k} = F_p[x]/(f).

Elements of F_{p^k} are tuples of ``k`` residues, constant coefficient first.
Polynomials over F_p use the same little-endian convention but carry their
full length (a monic degree-k polynomial has k + 1 coefficients).
"""

from __future__ import annotations

from dataclasses import dataclass, field

MAX_GROUP_ORDER = 2**63  # p^k - 1 must stay strictly below this

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class ParameterOverflowError(ValueError):
    """Raised when p^k - 1 does not fit the native 63-bit range."""


class FieldError(RuntimeError):
    """Internal inconsistency: should be impossible for a true field."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division.

    Stops early once the unfactored cofactor is itself prime.
    """
    factors = []
    m = n
    for d in (2, 3):
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
    d, step = 5, 2
    cofactor_prime = is_prime(m)
    while not cofactor_prime and d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
            cofactor_prime = is_prime(m)
        d += step
        step = 6 - step
    if m > 1:
        factors.append(m)
    return sorted(factors)


def check_sizes(p: int, k: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if p >= 2**31:
        raise ParameterOverflowError(f"p={p} must be below 2^31")
    if k < 2:
        raise ValueError(f"extension degree k={k} must be >= 2")
    if p**k - 1 >= MAX_GROUP_ORDER:
        raise ParameterOverflowError(f"p^k - 1 = {p}^{k} - 1 does not fit in 63 bits")


# -- polynomials over F_p ---------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo ``f`` (f need not be monic)."""
    a = _trim([c % p for c in a])
    f = _trim(list(f))
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _trim(a)
    return a


def poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return poly_mod(prod, f, p)


def poly_powmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(a, f, p)
    while e:
        if e & 1:
            result = poly_mulmod(result, base, f, p)
        base = poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial of degree >= 1 over F_p."""
    k = len(f) - 1
    x = [0, 1]
    # x^(p^k) == x mod f
    xp = x
    powers = {}
    for i in range(1, k + 1):
        xp = poly_powmod(xp, p, f, p)
        powers[i] = xp
    if _poly_sub(powers[k], x, p) != []:
        return False
    for r in prime_factors(k) if k > 1 else []:
        h = _poly_sub(powers[k // r], x, p)
        if len(poly_gcd(f, h, p)) != 1:
            return False
    return True


def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree ``k`` over F_p.

    Order is lexicographic on (c_0, c_1, ..., c_{k-1}) with the constant
    term most significant. Returns k + 1 coefficients, constant first.
    """
    check_sizes(p, k)
    # c_0 = 0 means x | f, so start the constant at 1
    for c0 in range(1, p):
        for idx in range(p ** (k - 1)):
            rest = []
            for _ in range(k - 1):
                idx, c = divmod(idx, p)
                rest.append(c)
            # c_1 is the most significant of the remaining digits
            f = [c0, *reversed(rest), 1]
            if is_irreducible(f, p):
                return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")


# -- extension field --------------------------------------------------------

@dataclass(frozen=True)
class FieldContext:
    """A concrete F_{p^k}: modulus ``f`` plus a fixed multiplicative generator."""

    p: int
    k: int
    f: tuple[int, ...]
    theta: tuple[int, ...]
    group_order: int
    order_factors: tuple[int, ...] = field(repr=False)

    @property
    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.k - 1)

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.k

    def element(self, coeffs) -> tuple[int, ...]:
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) > self.k:
            raise ValueError(f"element has {len(coeffs)} coefficients, field degree is {self.k}")
        return coeffs + (0,) * (self.k - len(coeffs))

    def constant(self, c: int) -> tuple[int, ...]:
        return self.element([c])


def _reduce(prod: list[int], f: tuple[int, ...], p: int, k: int) -> tuple[int, ...]:
    # f is monic of degree k: x^k == -(f_0 + ... + f_{k-1} x^{k-1})
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d] % p
        if c:
            base = d - k
            for i in range(k):
                prod[base + i] -= c * f[i]
        prod[d] = 0
    return tuple(c % p for c in prod[:k])


def ext_mul(ctx: FieldContext, a, b) -> tuple[int, ...]:
    k, p = ctx.k, ctx.p
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return _reduce(prod, ctx.f, p, k)


def ext_add(ctx: FieldContext, a, b) -> tuple[int, ...]:
    return tuple((x + y) % ctx.p for x, y in zip(a, b))


def ext_sub(ctx: FieldContext, a, b) -> tuple[int, ...]:
    return tuple((x - y) % ctx.p for x, y in zip(a, b))


def ext_pow(ctx: FieldContext, a, e: int) -> tuple[int, ...]:
    """``a**e`` by square-and-multiply; ``a**0`` is one."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = ctx.one
    base = tuple(a)
    while e:
        if e & 1:
            result = ext_mul(ctx, result, base)
        base = ext_mul(ctx, base, base)
        e >>= 1
    return result


def in_base_field(ctx: FieldContext, a) -> bool:
    return not any(a[1:])


def _has_full_order(ctx_like: FieldContext, a, order: int, factors) -> bool:
    if ext_pow(ctx_like, a, order) != ctx_like.one:
        return False
    return all(ext_pow(ctx_like, a, order // r) != ctx_like.one for r in factors)


def find_primitive(p: int, k: int, f) -> tuple[int, ...]:
    """First generator of F_{p^k}^* in coefficient-vector order.

    Candidates are enumerated with the constant coefficient varying fastest.
    Base-field constants are skipped since for k >= 2 none can generate.
    """
    order = p**k - 1
    factors = tuple(prime_factors(order))
    probe = FieldContext(p, k, tuple(f), (0,) * k, order, factors)
    for idx in range(p, p**k):
        coeffs = []
        m = idx
        for _ in range(k):
            m, c = divmod(m, p)
            coeffs.append(c)
        a = tuple(coeffs)
        if _has_full_order(probe, a, order, factors):
            return a
    raise FieldError(f"no generator found for F_{p}^{k}; modulus {f} is not irreducible")


def field_context(p: int, k: int, f=None) -> FieldContext:
    """Build F_{p^k} with the canonical modulus and generator."""
    check_sizes(p, k)
    if f is None:
        f = find_irreducible(p, k)
    else:
        f = tuple(int(c) % p for c in f)
        if len(f) != k + 1 or f[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not is_irreducible(list(f), p):
            raise ValueError(f"modulus {f} is reducible over F_{p}")
    theta = find_primitive(p, k, f)
    order = p**k - 1
    return FieldContext(p, k, tuple(f), theta, order, tuple(prime_factors(order)))


def multiplicative_order(ctx: FieldContext, a) -> int:
    """Order of a nonzero element, via the factorisation of p^k - 1."""
    if not any(a):
        raise ValueError("zero has no multiplicative order")
    n = ctx.group_order
    for r in ctx.order_factors:
        while n % r == 0 and ext_pow(ctx, a, n // r) == ctx.one:
            n //= r
    return n


__all__ = [
    "FieldContext",
    "FieldError",
    "ParameterOverflowError",
    "ext_add",
    "ext_mul",
    "ext_pow",
    "ext_sub",
    "field_context",
    "find_irreducible",
    "find_primitive",
    "in_base_field",
    "is_irreducible",
    "is_prime",
    "multiplicative_order",
    "prime_factors",
]
