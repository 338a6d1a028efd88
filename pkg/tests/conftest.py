import pytest

from bkgsets import kernels


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return request.param


def naive_max(n, k, g):
    """Largest B_k[g] subset of [1, n] by scanning all subsets, largest first."""
    from collections import Counter
    from itertools import combinations, combinations_with_replacement

    def ok(S):
        c = Counter(sum(m) for m in combinations_with_replacement(S, k))
        return max(c.values()) <= g

    for size in range(n, 0, -1):
        for S in combinations(range(1, n + 1), size):
            if ok(S):
                return size, S
    return 0, ()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
