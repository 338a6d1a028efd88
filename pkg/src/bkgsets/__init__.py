"""B_k[g] sets: Bose-Chowla constructions, exact verification, bounds on
F_{k,g}(n), exact small-n search, and Berry-Esseen certificates."""

from importlib import resources

from .bounds import ProblemSpec, bound_report
from .construction import bose_chowla, construct_bkg, quotient_set, select_prime
from .search import exact_max, greedy_set
from .verification import INTEGERS, CandidateSet, GroupSpec, is_bkg, min_g, sum_profile

__version__ = "0.1.0"


def schema_path(name: str):
    """Path of a shipped JSON schema, e.g. ``schema_path("verify")``."""
    return resources.files(__package__) / "schemas" / f"{name}.schema.json"


__all__ = [
    "INTEGERS",
    "CandidateSet",
    "GroupSpec",
    "ProblemSpec",
    "bose_chowla",
    "bound_report",
    "construct_bkg",
    "exact_max",
    "greedy_set",
    "is_bkg",
    "min_g",
    "quotient_set",
    "schema_path",
    "select_prime",
    "sum_profile",
]
