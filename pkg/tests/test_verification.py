import itertools
import random
from collections import Counter
from math import comb, gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bkgsets.construction import bose_chowla
from bkgsets.verification import (
    INTEGERS,
    CandidateSet,
    CapExceededError,
    GroupSpec,
    difference_profile,
    is_bkg,
    min_g,
    naive_sum_profile,
    sum_profile,
)


def brute_counts(elems, k, m=None):
    """Enumerate every ordered k-tuple and divide by its orderings."""
    ordered = Counter()
    for tup in itertools.product(elems, repeat=k):
        if list(tup) == sorted(tup):
            s = sum(tup)
            ordered[s % m if m else s] += 1
    return dict(ordered)


def test_profile_examples():
    assert sum_profile(CandidateSet((1,), 2)).counts == {2: 1}
    assert sum_profile(CandidateSet((1, 2), 2)).counts == {2: 1, 3: 1, 4: 1}
    expected = brute_counts([1, 2, 3], 2)
    assert expected == {2: 1, 3: 1, 4: 2, 5: 1, 6: 1}
    prof = sum_profile(CandidateSet((1, 2, 3), 2))
    assert prof.counts == expected
    assert prof.max_count == 2 and prof.argmax_sums == [4]


def test_min_g_examples():
    assert min_g(CandidateSet((1, 2, 3), 2)) == 2
    assert brute_counts([1, 2, 5, 7], 2) and max(brute_counts([1, 2, 5, 7], 2).values()) == 1
    assert min_g(CandidateSet((1, 2, 5, 7), 2)) == 1
    assert min_g(CandidateSet((), 2)) == 0
    assert min_g(CandidateSet((9,), 5)) == 1


def test_is_bkg_examples():
    bc = bose_chowla(5, 2)
    assert bc.modulus == 24
    assert is_bkg(bc.as_candidate())
    assert max(brute_counts(bc.elements, 2, 24).values()) == 1
    assert not is_bkg(CandidateSet((1, 2, 3), 2, 1))
    assert is_bkg(CandidateSet((1, 2, 3), 2, 2))


def test_cap_exceeded_reports_count():
    A = CandidateSet(tuple(range(1, 101)), 5)
    with pytest.raises(CapExceededError) as exc:
        sum_profile(A, cap=1000)
    assert exc.value.count == comb(104, 5)


def test_sparse_path_matches_dense(monkeypatch):
    import bkgsets.verification as v

    A = CandidateSet((1, 4, 10, 11, 30), 3)
    dense = sum_profile(A).counts
    monkeypatch.setattr(v, "DENSE_LIMIT", 1)
    assert sum_profile(A).counts == dense
    C = CandidateSet((0, 3, 7, 12), 3, group=GroupSpec.cyclic(17))
    monkeypatch.setattr(v, "DENSE_LIMIT", 10**7)
    dense_c = sum_profile(C).counts
    monkeypatch.setattr(v, "DENSE_LIMIT", 1)
    assert sum_profile(C).counts == dense_c == brute_counts(C.elements, 3, 17)


def test_large_span_uses_sparse_counts():
    A = CandidateSet((1, 10**8, 3 * 10**8), 2)
    assert sum_profile(A).counts == brute_counts(A.elements, 2)


def test_candidate_validation():
    with pytest.raises(ValueError):
        CandidateSet((1, 1), 2)
    with pytest.raises(ValueError):
        CandidateSet((0, 5), 2, group=GroupSpec.cyclic(5))
    with pytest.raises(ValueError):
        CandidateSet((1,), 1)
    assert CandidateSet((3, 1, 2), 2).elements == (1, 2, 3)


sets = st.lists(st.integers(-30, 60), min_size=0, max_size=9, unique=True)


@settings(max_examples=150, deadline=None)
@given(sets, st.integers(2, 4))
def test_dp_agrees_with_naive_enumeration(elems, k):
    A = CandidateSet(tuple(elems), k)
    prof = sum_profile(A)
    assert prof.counts == naive_sum_profile(A).counts
    assert prof.total == comb(len(elems) + k - 1, k)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 40), max_size=8, unique=True), st.integers(2, 4), st.integers(41, 90))
def test_cyclic_dp_agrees_with_naive(elems, k, m):
    A = CandidateSet(tuple(elems), k, group=GroupSpec.cyclic(m))
    assert sum_profile(A).counts == naive_sum_profile(A).counts


@settings(max_examples=100, deadline=None)
@given(sets, st.integers(2, 3), st.integers(-100, 100))
def test_min_g_translation_invariant(elems, k, c):
    A = CandidateSet(tuple(elems), k)
    B = CandidateSet(tuple(e + c for e in elems), k)
    assert min_g(A) == min_g(B)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 50), max_size=8, unique=True), st.integers(2, 3), st.integers(1, 200))
def test_min_g_dilation_invariant_cyclic(elems, k, c):
    m = 51
    if gcd(c, m) != 1:
        c += 1
    if gcd(c, m) != 1:
        return
    A = CandidateSet(tuple(elems), k, group=GroupSpec.cyclic(m))
    B = CandidateSet(tuple(sorted(e * c % m for e in elems)), k, group=GroupSpec.cyclic(m))
    pa, pb = sum_profile(A), sum_profile(B)
    assert sorted(pa.counts.values()) == sorted(pb.counts.values())


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 40), min_size=1, max_size=8, unique=True), st.integers(2, 3))
def test_integer_min_g_at_most_cyclic(elems, k):
    m = 41
    cyc = CandidateSet(tuple(elems), k, group=GroupSpec.cyclic(m))
    ints = CandidateSet(tuple(e + 1 for e in elems), k)
    assert min_g(ints) <= min_g(cyc)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 40), max_size=8, unique=True), st.integers(2, 3))
def test_min_g_monotone_under_inclusion(elems, k):
    for r in range(len(elems)):
        assert min_g(CandidateSet(tuple(elems[:r]), k)) <= min_g(CandidateSet(tuple(elems), k))


def brute_difference_counts(elems, k, proper):
    hi, lo = (k + 1) // 2, k // 2
    out = Counter()
    for p in itertools.combinations_with_replacement(elems, hi):
        for q in itertools.combinations_with_replacement(elems, lo):
            if proper and set(p) & set(q):
                continue
            out[sum(p) - sum(q)] += 1
    return dict(out)


def test_difference_profile_examples():
    sidon = CandidateSet((1, 2, 5, 7), 2)
    diffs = [a - b for a in sidon.elements for b in sidon.elements if a != b]
    assert len(diffs) == 12 and len(set(diffs)) == 12
    prof = difference_profile(sidon)
    assert prof.max_count == 1
    assert set(prof.counts) == set(diffs)
    assert difference_profile(CandidateSet((4,), 3), proper=False).counts == {4: 1}
    assert difference_profile(CandidateSet((4,), 2), proper=False).counts == {0: 1}
    three = difference_profile(CandidateSet((1, 2, 3), 2))
    assert three.counts[1] == 2 and three.max_count == 2


def test_difference_profile_bose_chowla_is_injective():
    for q, k in [(5, 2), (7, 3), (5, 4)]:
        bc = bose_chowla(q, k)
        A = CandidateSet(bc.elements, k)
        assert difference_profile(A).max_count == 1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 30), min_size=1, max_size=6, unique=True), st.integers(2, 4),
       st.booleans())
def test_difference_profile_matches_brute_force(elems, k, proper):
    A = CandidateSet(tuple(elems), k)
    assert difference_profile(A, proper=proper).counts == brute_difference_counts(sorted(elems), k, proper)


def test_group_spec_json_roundtrip():
    for g in (INTEGERS, GroupSpec.cyclic(24)):
        assert GroupSpec.from_json(g.to_json()) == g


def test_random_sets_total_count():
    rng = random.Random(11)
    for _ in range(30):
        size = rng.randrange(0, 15)
        k = rng.randrange(2, 5)
        A = CandidateSet(tuple(rng.sample(range(1, 200), size)), k)
        assert sum_profile(A).total == comb(size + k - 1, k)
