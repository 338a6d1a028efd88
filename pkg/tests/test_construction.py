import itertools
from collections import Counter

import pytest

from bkgsets import construction

from bkgsets.construction import (
    ConstructionError,
    NoPrimeError,
    bose_chowla,
    differences_avoid_subgroup,
    construct_bkg,
    integer_root,
    quotient_set,
    select_prime,
    subgroup_elements,
)
from bkgsets.finite_field import ext_pow, ext_sub, in_base_field, is_prime
from bkgsets.verification import CandidateSet, min_g


def oracle_min_g(elems, k, m=None):
    c = Counter()
    for combo in itertools.combinations_with_replacement(elems, k):
        s = sum(combo)
        c[s % m if m else s] += 1
    return max(c.values())


def test_bose_chowla_small():
    bc = bose_chowla(2, 2)
    assert bc.modulus == 3 and len(bc.elements) == 2
    bc = bose_chowla(3, 2)
    assert bc.modulus == 8 and len(bc.elements) == 3
    assert oracle_min_g(bc.elements, 2, 8) == 1
    bc = bose_chowla(5, 3)
    assert bc.modulus == 124 and len(bc.elements) == 5
    assert oracle_min_g(bc.elements, 3, 124) == 1


def test_bose_chowla_membership_by_direct_powers():
    bc = bose_chowla(7, 2)
    ctx = bc.ctx
    direct = [a for a in range(ctx.group_order)
              if in_base_field(ctx, ext_sub(ctx, ext_pow(ctx, ctx.theta, a), ctx.theta))]
    assert tuple(direct) == bc.elements


def test_backends_agree_on_sweep(backend):
    for q, k in [(3, 2), (7, 3), (11, 2), (2, 5)]:
        assert bose_chowla(q, k, backend).elements == bose_chowla(q, k, "python").elements


def test_subgroup_examples():
    assert subgroup_elements(5, 2, 1) == [0]
    assert subgroup_elements(5, 2, 2) == [0, 12]
    assert subgroup_elements(7, 2, 3) == [0, 16, 32]
    with pytest.raises(ValueError):
        subgroup_elements(7, 2, 4)


@pytest.mark.parametrize("q,k,g", [(5, 2, 1), (5, 2, 2), (7, 2, 3), (7, 2, 6), (11, 2, 5), (13, 2, 4), (7, 3, 2)])
def test_subgroup_avoidance_and_quotient(q, k, g):
    bc = bose_chowla(q, k)
    H = subgroup_elements(q, k, g)
    assert differences_avoid_subgroup(bc, H)
    assert construction.check_lemma_3_1 is differences_avoid_subgroup
    quot = quotient_set(bc, g)
    assert quot.mu == (q**k - 1) // g
    assert len(quot.elements) == q
    assert oracle_min_g(quot.elements, k, quot.mu) <= g
    if g == 1:
        assert quot.elements == bc.elements


def test_avoidance_fails_for_non_bose_chowla_sets():
    # a set whose differences hit the subgroup must be rejected
    from bkgsets.construction import BoseChowlaSet

    fake = BoseChowlaSet(5, 2, 24, (0, 12), None)
    assert not differences_avoid_subgroup(fake, [0, 12])
    with pytest.raises(ConstructionError):
        quotient_set(fake, 2)


def test_integer_root_exact_at_perfect_powers():
    for k in range(2, 7):
        for b in range(0, 60):
            assert integer_root(b**k, k) == b
            if b:
                assert integer_root(b**k - 1, k) == b - 1
            assert integer_root(b**k + 1, k) == b + (1 if b == 0 and k else 0) or b == 0


def brute_select(k, g, n):
    best = None
    for q in range(2, n * g + 2):
        if is_prime(q) and (q - 1) % g == 0 and (q**k - 1) // g <= n:
            best = q
    return best


def test_select_prime_examples():
    assert select_prime(2, 2, 50) == 7
    assert select_prime(2, 1, 5) == 2
    assert select_prime(3, 1, 1000) == 7
    assert select_prime(2, 5, 3) is None


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("g", [1, 2, 3, 4, 6])
def test_select_prime_matches_enumeration(k, g):
    for n in list(range(1, 120)) + [500, 1000, 4321]:
        assert select_prime(k, g, n) == brute_select(k, g, n)


def test_construct_examples():
    r = construct_bkg(2, 1, 50)
    assert r.chosen_q == 7 and len(r.elements) == 7
    assert 1 <= min(r.elements) and max(r.elements) <= 49
    assert oracle_min_g(r.elements, 2) == 1
    r = construct_bkg(2, 2, 50)
    assert r.chosen_q == 7 and oracle_min_g(r.elements, 2) <= 2
    assert r.certificate.verified and r.certificate.min_g <= 2
    r = construct_bkg(2, 1, 3)
    assert r.chosen_q == 2 and len(r.elements) == 2 and max(r.elements) <= 3


def test_construct_no_prime():
    with pytest.raises(NoPrimeError):
        construct_bkg(2, 5, 3)


def test_certificate_skipped_beyond_cap():
    r = construct_bkg(2, 1, 10**4, cert_cap=100)
    assert not r.certificate.verified
    assert r.certificate.note == "not verified (scale)"


@pytest.mark.parametrize("k,g", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)])
def test_construct_size_tracks_beta(k, g):
    for n in [30, 100, 400, 2000]:
        r = construct_bkg(k, g, n)
        beta = integer_root(g * n + 1, k)
        # the size is the chosen prime, the largest admissible one <= beta
        assert len(r.elements) == r.chosen_q <= beta
        assert all(q > beta or not is_prime(q) or (q - 1) % g
                   for q in range(r.chosen_q + 1, beta + 1))
        assert max(r.elements) <= n
        assert min_g(CandidateSet(r.elements, k)) <= g
