# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Bose-Chowla sweep, greedy seeding, branch-and-bound.

Drop-in replacements for the functions in ``_pykernels``.
"""

import time

from libc.stdlib cimport malloc, free, calloc
from libc.string cimport memcpy

ctypedef unsigned long long u64
ctypedef long long i64


def bc_sweep(u64 p, int k, f, theta):
    cdef u64 order = 1
    cdef int i, j, d
    for i in range(k):
        order *= p
    order -= 1
    cdef u64 *fc = <u64 *> malloc(k * sizeof(u64))
    cdef u64 *th = <u64 *> malloc(k * sizeof(u64))
    cdef u64 *cur = <u64 *> malloc(k * sizeof(u64))
    cdef u64 *prod = <u64 *> malloc((2 * k - 1) * sizeof(u64))
    cdef u64 a, c, t
    found = []
    try:
        for i in range(k):
            fc[i] = (<u64> f[i]) % p
            th[i] = (<u64> theta[i]) % p
            cur[i] = th[i]
        a = 1
        while a < order:
            # cur == theta^a
            for i in range(1, k):
                if cur[i] != th[i]:
                    break
            else:
                found.append(a)
            for i in range(2 * k - 1):
                prod[i] = 0
            for i in range(k):
                if cur[i]:
                    for j in range(k):
                        # p < 2^31 so each product fits below 2^62
                        prod[i + j] = (prod[i + j] + cur[i] * th[j]) % p
            for d in range(2 * k - 2, k - 1, -1):
                c = prod[d]
                if c:
                    for i in range(k):
                        t = (c * fc[i]) % p
                        prod[d - k + i] = (prod[d - k + i] + p - t) % p
            for i in range(k):
                cur[i] = prod[i]
            a += 1
    finally:
        free(fc)
        free(th)
        free(cur)
        free(prod)
    return found


cdef inline void _add(i64 *rows, int k, int width, int x) nogil:
    cdef int j, s
    cdef i64 *row
    cdef i64 *prev
    for j in range(1, k + 1):
        row = rows + j * width
        prev = rows + (j - 1) * width
        for s in range(width - 1, x - 1, -1):
            row[s] += prev[s - x]


cdef inline void _remove(i64 *rows, int k, int width, int x) nogil:
    cdef int j, s
    cdef i64 *row
    cdef i64 *prev
    for j in range(k, 0, -1):
        row = rows + j * width
        prev = rows + (j - 1) * width
        for s in range(x, width):
            row[s] -= prev[s - x]


cdef inline bint _top_ok(i64 *rows, int k, int width, int x, i64 g) nogil:
    # only sums >= x can have changed after adding x
    cdef i64 *row = rows + k * width
    cdef int s
    for s in range(x, width):
        if row[s] > g:
            return False
    return True


def greedy(int n, int k, i64 g):
    cdef int width = k * n + 1
    cdef i64 *rows = <i64 *> calloc((k + 1) * width, sizeof(i64))
    cdef int x
    chosen = []
    try:
        rows[0] = 1
        for x in range(1, n + 1):
            _add(rows, k, width, x)
            if _top_ok(rows, k, width, x, g):
                chosen.append(x)
            else:
                _remove(rows, k, width, x)
    finally:
        free(rows)
    return chosen


def branch_and_bound(int n, int k, i64 g, incumbent, double deadline,
                     prefix=(1,), node_hook=None):
    if node_hook is not None:
        raise ValueError("node hooks are only supported by the Python kernels")
    from ._pykernels import suffix_bounds

    cdef int width = k * n + 1
    cdef i64 *rows = <i64 *> calloc((k + 1) * width, sizeof(i64))
    cdef int *chosen = <int *> malloc((n + 1) * sizeof(int))
    cdef int *best = <int *> malloc((n + 1) * sizeof(int))
    cdef int *next_x = <int *> malloc((n + 2) * sizeof(int))
    cdef int *bound = <int *> malloc((n + 1) * sizeof(int))
    cdef int depth = 0, best_len, i, x, base_depth
    cdef i64 nodes = 0
    cdef bint timed_out = False, ok
    try:
        rows[0] = 1
        ok = True
        for x in prefix:
            _add(rows, k, width, x)
            chosen[depth] = x
            depth += 1
        for i in range(k * n + 1):
            if rows[k * width + i] > g:
                ok = False
        best_len = len(incumbent)
        for i in range(best_len):
            best[i] = incumbent[i]
        if not ok:
            return list(incumbent), 0, True
        if depth > best_len:
            best_len = depth
            memcpy(best, chosen, depth * sizeof(int))
        for i, b in enumerate(suffix_bounds(n, k, g)):
            bound[i] = b
        base_depth = depth

        # explicit stack: next_x[d] is the next candidate to try at depth d
        nodes = 1
        next_x[depth] = (chosen[depth - 1] + 1) if depth else 1
        while True:
            x = next_x[depth]
            if x > n or depth + 1 + bound[n - x] <= best_len:
                # subtree exhausted: backtrack
                if depth == base_depth:
                    break
                depth -= 1
                _remove(rows, k, width, chosen[depth])
                next_x[depth] = chosen[depth] + 1
                continue
            next_x[depth] = x + 1
            _add(rows, k, width, x)
            if not _top_ok(rows, k, width, x, g):
                _remove(rows, k, width, x)
                continue
            chosen[depth] = x
            depth += 1
            nodes += 1
            if depth > best_len:
                best_len = depth
                memcpy(best, chosen, depth * sizeof(int))
            next_x[depth] = x + 1
            if (nodes & 1023) == 0 and time.monotonic() > deadline:
                timed_out = True
                break
        result = [best[i] for i in range(best_len)]
    finally:
        free(rows)
        free(chosen)
        free(best)
        free(next_x)
        free(bound)
    return result, nodes, not timed_out
