"""Random Gale diagrams: exact face statistics, thresholds and seeded Monte Carlo."""

from fractions import Fraction

from . import _galelab
from ._galelab import (
    DegenerateInput,
    DomainError,
    Error,
    RejectionBudgetExhausted,
    entropy,
    estimate_cone_faces,
    estimate_containment,
    estimate_fk,
    estimate_neighborly_prob,
    g_exponent,
    rho_strong,
    rho_weak,
    run_cli,
    verify_gale_criterion,
)

__version__ = _galelab.__version__


def binomial(n, k):
    return int(_galelab.binomial(n, k))


def wendel(r, M):
    return Fraction(_galelab.wendel(r, M))


def origin_in_hull_prob(r, M):
    return Fraction(_galelab.origin_in_hull_prob(r, M))


def expected_fk(d, N, k):
    return Fraction(_galelab.expected_fk(d, N, k))


def expected_fk_ratio(d, N, k):
    return Fraction(_galelab.expected_fk_ratio(d, N, k))


def neighborly_prob_lower_bound(d, N, k):
    return Fraction(_galelab.neighborly_prob_lower_bound(d, N, k))


def _rows(vectors):
    # Floats are taken at their exact binary value.
    return [[str(Fraction(x)) for x in v] for v in vectors]


def contains_origin(vectors):
    """(True, weights) when o is in the convex hull, else (False, u) with <u, x> > 0 for every x."""
    feasible, cert = _galelab.contains_origin(_rows(vectors))
    return feasible, [Fraction(q) for q in cert]


def is_face(d, diagram, subset):
    """Gale criterion for the 0-based index set `subset`."""
    return _galelab.is_face(d, _rows(diagram), sorted(subset))


def count_faces(d, diagram, k):
    return int(_galelab.count_faces(d, _rows(diagram), k))


__all__ = [
    "DegenerateInput",
    "DomainError",
    "Error",
    "RejectionBudgetExhausted",
    "binomial",
    "contains_origin",
    "count_faces",
    "entropy",
    "estimate_cone_faces",
    "estimate_containment",
    "estimate_fk",
    "estimate_neighborly_prob",
    "expected_fk",
    "expected_fk_ratio",
    "g_exponent",
    "is_face",
    "neighborly_prob_lower_bound",
    "origin_in_hull_prob",
    "rho_strong",
    "rho_weak",
    "run_cli",
    "verify_gale_criterion",
    "wendel",
]
