"""Rough approximations of subsets of finite commutative rings."""

import json as _json

from ._core import (
    ApproximationSpace,
    FiniteRing,
    Ideal,
    RoughringError,
    all_ideals,
    apr,
    classify,
    coset_partition,
    direct_product,
    generated_ideal,
    ideal,
    is_ideal,
    is_maximal,
    is_prime,
    lower,
    make_zn,
    maximal_ideals,
    parse_ideal,
    parse_ring,
    principal_ideal,
    set_product,
    set_sum,
    upper,
)
from ._core import audit as _audit
from ._core import audit_space as _audit_space

__all__ = [
    "ApproximationSpace", "FiniteRing", "Ideal", "RoughringError", "all_ideals", "apr",
    "audit", "audit_json", "audit_space", "classify", "coset_partition", "direct_product",
    "generated_ideal", "ideal", "is_ideal", "is_maximal", "is_prime", "lower", "make_zn",
    "maximal_ideals", "parse_ideal", "parse_ring", "principal_ideal", "set_product",
    "set_sum", "upper",
]


def audit_json(ring, ideal, groups=("space", "4-1", "4-2"), **kwargs):
    """Audit report as the JSON text the CLI emits with --format machine."""
    return _audit(ring, ideal, list(groups), **kwargs)


def audit(ring, ideal, groups=("space", "4-1", "4-2"), **kwargs):
    """Audit report as a dict."""
    return _json.loads(audit_json(ring, ideal, groups, **kwargs))


def audit_space(space, **kwargs):
    return _json.loads(_audit_space(space, **kwargs))
