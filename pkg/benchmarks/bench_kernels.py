"""Compare the compiled and pure-Python kernels on the three hot loops.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import statistics
import time

from bkgsets import kernels
from bkgsets.finite_field import field_context

CASES = {
    "bc_sweep q=101 k=3": lambda kern: kern.bc_sweep(101, 3, *_ctx(101, 3)),
    "greedy k=2 g=1 n=3000": lambda kern: kern.greedy(3000, 2, 1),
    "branch_and_bound k=2 g=1 n=40": lambda kern: kern.branch_and_bound(
        40, 2, 1, kern.greedy(40, 2, 1), float("inf"), (1,)),
    "branch_and_bound k=3 g=2 n=24": lambda kern: kern.branch_and_bound(
        24, 3, 2, kern.greedy(24, 3, 2), float("inf"), (1,)),
}

_CTX = {}


def _ctx(p, k):
    if (p, k) not in _CTX:
        ctx = field_context(p, k)
        _CTX[p, k] = (ctx.f, ctx.theta)
    return _CTX[p, k]


def timed(fn, kern, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(kern)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"{'case':34s}" + "".join(f"{b:>12s}" for b in backends) + "   speedup")
    for name, fn in CASES.items():
        res = {b: timed(fn, kernels.get(b), args.repeat) for b in backends}
        outs = {repr(list(r[1][0]) if isinstance(r[1], tuple) else list(r[1])) for r in res.values()}
        assert len(outs) == 1, f"backends disagree on {name}"
        line = f"{name:34s}" + "".join(f"{res[b][0]:11.4f}s" for b in backends)
        if "cython" in res:
            line += f"   {res['python'][0] / res['cython'][0]:6.1f}x"
        print(line)


if __name__ == "__main__":
    main()
