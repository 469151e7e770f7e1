"""Total colorings of Cayley, circulant and Kneser-complement graphs."""

import json

from . import _core

__all__ = [
    "recipe",
    "build_graph",
    "color",
    "verify",
    "exact",
    "audit_claim",
    "claim_matrix",
    "theorem_ids",
    "default_budget",
]


def recipe(family, n, k=0, t1=(), t2=(), diffs=()):
    r = {"family": family, "n": n}
    if k:
        r["k"] = k
    if t1 or t2:
        r["rotations"] = list(t1)
        r["reflections"] = list(t2)
    if diffs:
        r["diffs"] = list(diffs)
    return r


def _recipe_text(family, n, k, t1, t2, diffs):
    return json.dumps(recipe(family, n, k, t1, t2, diffs))


def default_budget():
    return _core.default_budget()


def build_graph(family, n, k=0, t1=(), t2=(), diffs=()):
    return json.loads(_core.build_graph(_recipe_text(family, n, k, t1, t2, diffs)))


def color(family, n, k=0, t1=(), t2=(), diffs=(), strategy="theorem", budget=None,
          variant="same-difference", d=0, base_index=0):
    budget = default_budget() if budget is None else budget
    text = _core.color(_recipe_text(family, n, k, t1, t2, diffs), strategy, budget, variant, d, base_index)
    return json.loads(text)


def verify(certificate):
    text = certificate if isinstance(certificate, str) else json.dumps(certificate)
    return json.loads(_core.verify(text))


def exact(family, n, k=0, t1=(), t2=(), diffs=(), budget=None):
    budget = default_budget() if budget is None else budget
    return json.loads(_core.exact(_recipe_text(family, n, k, t1, t2, diffs), budget))


def audit_claim(theorem, n=0, k=0, t1=(), t2=(), budget=None):
    budget = default_budget() if budget is None else budget
    return json.loads(_core.audit_claim(theorem, n, k, list(t1), list(t2), budget))


def claim_matrix():
    return json.loads(_core.claim_matrix())


def theorem_ids():
    return list(_core.theorem_ids())
