"""Pure-Python reference kernels.

Same signatures and results as the compiled ``_ckernels`` module; used when the
extension is not built, and as the baseline in the benchmark.
"""

from __future__ import annotations

import time
from math import comb

import numpy as np


def bc_sweep(p: int, k: int, f, theta) -> list[int]:
    """Exponents a in [1, p^k - 2] with theta^a - theta in F_p.

    Keeps theta^a as a running product, one field multiplication per step.
    """
    f = [int(c) for c in f[:k]]
    theta = [int(c) % p for c in theta]
    target_hi = theta[1:]
    cur = list(theta)
    found = []
    order = p**k - 1
    for a in range(1, order):
        # invariant: cur == theta^a
        if cur[1:] == target_hi:
            found.append(a)
        prod = [0] * (2 * k - 1)
        for i, ci in enumerate(cur):
            if ci:
                for j, tj in enumerate(theta):
                    prod[i + j] += ci * tj
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d] % p
            if c:
                base = d - k
                for i in range(k):
                    prod[base + i] -= c * f[i]
        cur = [c % p for c in prod[:k]]
    return found


class _Counts:
    """Counts of size-j multiset sums (j = 0..k) over a growing set in [1, n]."""

    def __init__(self, n: int, k: int):
        self.k = k
        self.width = k * n + 1
        self.rows = np.zeros((k + 1, self.width), dtype=np.int64)
        self.rows[0, 0] = 1

    def add(self, x: int) -> None:
        w = self.width
        rows = self.rows
        for j in range(1, self.k + 1):
            rows[j, x:] += rows[j - 1, : w - x]

    def remove(self, x: int) -> None:
        w = self.width
        rows = self.rows
        for j in range(self.k, 0, -1):
            rows[j, x:] -= rows[j - 1, : w - x]

    def max_top(self) -> int:
        return int(self.rows[self.k].max())

    def top_ok(self, x: int, g: int) -> bool:
        # adding x only changes sums >= x
        return int(self.rows[self.k, x:].max()) <= g


def suffix_bounds(n: int, k: int, g: int) -> list[int]:
    """``b[m]``: size cap for a B_k[g] set inside an interval of m integers.

    A set of size s in an interval of length m has C(s+k-1, k) multisets whose
    sums take at most k(m-1)+1 values, each at most g times.
    """
    out = [0]
    for m in range(1, n + 1):
        cap = g * (k * (m - 1) + 1)
        s = out[-1]
        while comb(s + 1 + k - 1, k) <= cap and s + 1 <= m:
            s += 1
        out.append(s)
    return out


def greedy(n: int, k: int, g: int) -> list[int]:
    counts = _Counts(n, k)
    chosen = []
    for x in range(1, n + 1):
        counts.add(x)
        if counts.top_ok(x, g):
            chosen.append(x)
        else:
            counts.remove(x)
    return chosen


def branch_and_bound(n: int, k: int, g: int, incumbent, deadline: float,
                     prefix=(1,), node_hook=None):
    """Depth-first search for the largest B_k[g] set in [1, n] extending ``prefix``.

    Returns ``(best, nodes, complete)``; ``complete`` is False when the
    deadline (a ``time.monotonic`` value) stopped the search early.
    """
    counts = _Counts(n, k)
    chosen = []
    for x in prefix:
        counts.add(x)
        chosen.append(x)
    best = list(incumbent)
    if counts.max_top() > g:
        return best, 0, True
    if len(chosen) > len(best):
        best = list(chosen)
    bound = suffix_bounds(n, k, g)
    nodes = 0
    timed_out = False

    def dfs(last: int) -> None:
        nonlocal nodes, best, timed_out
        nodes += 1
        if node_hook is not None:
            node_hook(tuple(chosen), counts.rows[k])
        if nodes & 1023 == 0 and time.monotonic() > deadline:
            timed_out = True
            return
        for x in range(last + 1, n + 1):
            if len(chosen) + 1 + bound[n - x] <= len(best):
                break
            counts.add(x)
            if counts.top_ok(x, g):
                chosen.append(x)
                if len(chosen) > len(best):
                    best = list(chosen)
                dfs(x)
                chosen.pop()
            counts.remove(x)
            if timed_out:
                return

    dfs(chosen[-1] if chosen else 0)
    return best, nodes, not timed_out
