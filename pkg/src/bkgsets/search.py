"""Exact values of F_{k,g}(n) by branch and bound.

Every B_k[g] set translates to one containing 1, so the search only explores
increasing sequences starting at 1. Children are tried in increasing order
and only strictly larger sets replace the incumbent, so the reported witness
is the lexicographically first maximum set.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import kernels
from .bounds import ProblemSpec


@dataclass
class SearchInstance:
    spec: ProblemSpec
    time_limit: float | None
    incumbent: tuple[int, ...]
    status: str  # "exact" or "timeout-lower-bound"
    nodes: int = 0
    wall_time: float = 0.0
    backend: str = field(default="", repr=False)

    @property
    def value(self) -> int:
        return len(self.incumbent)

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    def csv_row(self) -> dict:
        return {
            "n": self.spec.n,
            "k": self.spec.k,
            "g": self.spec.g,
            "F": self.value,
            "witness": " ".join(map(str, self.incumbent)),
            "status": self.status,
            "nodes": self.nodes,
            "wall_time": f"{self.wall_time:.6f}",
        }


def greedy_set(spec: ProblemSpec, backend: str | None = None) -> list[int]:
    """Scan 1..n keeping each element that leaves the prefix B_k[g]."""
    return kernels.get(backend).greedy(spec.n, spec.k, spec.g)


def _deadline(time_limit: float | None) -> float:
    return math.inf if time_limit is None else time.monotonic() + time_limit


def _run_branch(args):
    n, k, g, incumbent, time_limit, prefix, backend = args
    kern = kernels.get(backend)
    return kern.branch_and_bound(n, k, g, incumbent, _deadline(time_limit), prefix)


def exact_max(spec: ProblemSpec, time_limit: float | None = None, threads: int = 1,
              backend: str | None = None, node_hook=None) -> SearchInstance:
    """F_{k,g}(n) with a witness, or a labelled lower bound on timeout.

    ``node_hook(chosen, top_counts)`` is called at every search node; it forces
    the Python kernels. ``threads > 1`` splits the tree on the second element
    across worker processes.
    """
    if node_hook is not None:
        backend = "python"
    name = kernels.DEFAULT_BACKEND if backend is None else backend
    kern = kernels.get(name)
    n, k, g = spec.n, spec.k, spec.g
    t0 = time.monotonic()
    incumbent = kern.greedy(n, k, g)

    if threads <= 1 or n < 3:
        best, nodes, complete = kern.branch_and_bound(
            n, k, g, incumbent, _deadline(time_limit), (1,), node_hook=node_hook)
    else:
        jobs = [(n, k, g, incumbent, time_limit, (1, x), name) for x in range(2, n + 1)]
        best, nodes, complete = list(incumbent), 1, True
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for b, nd, ok in pool.map(_run_branch, jobs):
                nodes += nd
                complete = complete and ok
                if len(b) > len(best) or (len(b) == len(best) and b < best):
                    best = list(b)
    return SearchInstance(
        spec,
        time_limit,
        tuple(best),
        "exact" if complete else "timeout-lower-bound",
        nodes,
        time.monotonic() - t0,
        name,
    )
