"""Exact convexity analysis of polynomials with rational coefficients.

Polynomials are passed as text ("x1^2*x2 - 3/4*x2"). Structured results come
back as plain dicts with the same layout the ``polycvx`` tool prints.
"""

import json

from . import _polyconvex as _core
from ._polyconvex import ParseError, canonical, count_real_roots, evaluate, gap, lift, version

__all__ = [
    "ParseError",
    "analyze",
    "canonical",
    "count_real_roots",
    "evaluate",
    "gap",
    "instance",
    "lift",
    "reduce",
    "refute",
    "verify_certificate",
    "version",
]

PROPERTIES = ("convex", "strict", "strong", "quasi", "pseudo")


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def analyze(poly, prop, *, arity=None, budget=2000, seed=None, certificate=None):
    """Decide `prop` for `poly`. Returns the report dict; report["answer"] is
    "YES", "NO" or "UNKNOWN"."""
    if prop not in PROPERTIES:
        raise ValueError(f"property must be one of {PROPERTIES}")
    kwargs = {"arity": arity, "budget": budget}
    if seed is not None:
        kwargs["seed"] = seed
    if certificate is not None:
        kwargs["certificate"] = _text(certificate)
    return json.loads(_core.analyze_json(poly, prop, **kwargs))


def reduce(bq):
    """Quartic f for a biquadratic form given as a dict or JSON text."""
    return json.loads(_core.reduce_json(_text(bq)))


def verify_certificate(cert):
    return _core.verify_json(_text(cert))


def instance(which, n=2, k=1, seed=0):
    """which: "choi", "random-sos" or "random-indefinite"."""
    return json.loads(_core.instance_json(which, n, k, seed))


def refute(poly, prop, *, arity=None, budget=2000, seed=None):
    """An exact witness dict, or None when the budget runs out."""
    kwargs = {"arity": arity, "budget": budget}
    if seed is not None:
        kwargs["seed"] = seed
    out = _core.refute_json(poly, prop, **kwargs)
    return None if out is None else json.loads(out)
