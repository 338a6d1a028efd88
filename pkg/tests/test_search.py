import time

import numpy as np
import pytest

from bkgsets import kernels
from bkgsets.bounds import ProblemSpec, trivial_bound
from bkgsets.construction import construct_bkg
from bkgsets.search import exact_max, greedy_set
from bkgsets.verification import CandidateSet, min_g, sum_profile

from conftest import naive_max


@pytest.mark.parametrize("k,g", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_matches_naive_enumeration(k, g, backend):
    for n in range(1, 12):
        res = exact_max(ProblemSpec(k, g, n), backend=backend)
        size, first = naive_max(n, k, g)
        assert res.exact and res.value == size
        # lexicographically first maximum set that contains 1
        assert res.incumbent == first
        assert min_g(CandidateSet(res.incumbent, k)) <= g


def test_known_sidon_values(backend):
    known = {10: 4, 20: 6, 25: 6, 30: 7}
    for n, v in known.items():
        assert exact_max(ProblemSpec(2, 1, n), backend=backend).value == v
    assert exact_max(ProblemSpec(2, 1, 20), backend=backend).incumbent == (1, 2, 4, 9, 13, 19)


def test_n_equals_one():
    for k in (2, 3, 5):
        for g in (1, 4):
            r = exact_max(ProblemSpec(k, g, 1))
            assert r.value == 1 and r.incumbent == (1,) and r.exact


def test_monotone_and_sandwiched():
    prev = 0
    for n in range(1, 26):
        s = ProblemSpec(2, 1, n)
        r = exact_max(s)
        assert r.value >= prev
        assert r.value <= trivial_bound(s)
        assert len(greedy_set(s)) <= r.value
        prev = r.value


def test_construction_below_exact():
    for g in (1, 2):
        for n in (10, 20, 30):
            s = ProblemSpec(2, g, n)
            assert len(construct_bkg(2, g, n).elements) <= exact_max(s).value


def test_greedy_examples(backend):
    assert greedy_set(ProblemSpec(2, 1, 20), backend) == [1, 2, 4, 8, 13]
    assert greedy_set(ProblemSpec(2, 1, 25), backend) == [1, 2, 4, 8, 13, 21]


def test_greedy_backends_agree():
    for k, g, n in [(2, 1, 200), (3, 2, 150), (4, 1, 100)]:
        outs = {b: greedy_set(ProblemSpec(k, g, n), b) for b in kernels.available_backends()}
        assert len({tuple(v) for v in outs.values()}) == 1


def test_node_hook_counts_match_recomputation():
    seen = []

    def hook(chosen, top):
        seen.append((chosen, np.array(top)))

    spec = ProblemSpec(2, 2, 9)
    r = exact_max(spec, node_hook=hook)
    assert r.exact and len(seen) > 10
    for chosen, top in seen[:: max(1, len(seen) // 200)]:
        prof = sum_profile(CandidateSet(chosen, 2)).counts
        dense = np.zeros_like(top)
        for s, c in prof.items():
            dense[s] = c
        assert np.array_equal(dense, top)


def test_node_hook_rejected_by_compiled_kernel():
    if "cython" not in kernels.available_backends():
        pytest.skip("extension not built")
    with pytest.raises(ValueError):
        kernels.get("cython").branch_and_bound(5, 2, 1, [1], float("inf"), (1,), node_hook=print)


def test_threads_give_identical_answers():
    for k, g, n in [(2, 1, 30), (3, 1, 22), (2, 2, 18)]:
        s = ProblemSpec(k, g, n)
        a, b = exact_max(s), exact_max(s, threads=3)
        assert a.incumbent == b.incumbent and b.exact


def test_timeout_is_labelled():
    s = ProblemSpec(2, 1, 200)
    t0 = time.monotonic()
    r = exact_max(s, time_limit=0.05, backend="python")
    assert time.monotonic() - t0 < 5
    assert r.status == "timeout-lower-bound" and not r.exact
    assert r.value >= len(greedy_set(s))
    assert min_g(CandidateSet(r.incumbent, 2)) == 1


def test_csv_row_fields():
    row = exact_max(ProblemSpec(2, 1, 10)).csv_row()
    assert list(row) == ["n", "k", "g", "F", "witness", "status", "nodes", "wall_time"]
    assert row["F"] == 4 and row["witness"] == "1 2 4 8"
