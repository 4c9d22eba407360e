"""Exact-arithmetic toolkit for diptych varieties.

Thin wrapper over the C++ core: values cross the boundary as JSON with exact
rationals rendered "p/q"; this module turns them back into ints and
fractions.Fraction.
"""

import json
from fractions import Fraction

from diptych._core import (  # noqa: F401
    OutOfScopeError,
    chain_equations,
    reduce_to_zero,
    verify_diptych,
)
from diptych import _core

__all__ = [
    "OutOfScopeError",
    "chain",
    "chain_equations",
    "classify",
    "enumerate_pairs",
    "eval_cf",
    "expand_fraction",
    "rectangles",
    "reduce_to_zero",
    "schedule",
    "verify_diptych",
    "weights",
]


def _frac(s):
    return Fraction(s)


def eval_cf(tags):
    """Value of a tag word as a Fraction; None for the point at infinity."""
    num, den = _core.eval_cf(list(tags)).split("/")
    if den == "0":
        return None
    return Fraction(int(num), int(den))


def expand_fraction(r, a):
    return [int(t) for t in _core.expand_fraction(r, a)]


def classify(d, e, k, variant="first"):
    out = json.loads(_core.classify_json(d, e, k, variant))
    out["pair"] = {key: int(v) for key, v in out["pair"].items()}
    cls = out["classification"]
    if not cls["exceptional"]:
        cls["d"], cls["e"] = int(cls["d"]), int(cls["e"])
    return out


def enumerate_pairs(bound):
    return json.loads(_core.enumerate_json(bound))


def rectangles(d, e, k):
    out = json.loads(_core.rectangles_json(d, e, k))
    for panel in ("ab", "lm"):
        out[panel]["x_tags"] = [int(t) for t in out[panel]["x_tags"]]
        out[panel]["y_tags"] = [int(t) for t in out[panel]["y_tags"]]
    return out


def weights(d, e, k):
    """Torus weights per generator as a dict of 4-tuples of Fractions."""
    raw = json.loads(_core.weights_json(d, e, k))
    table = {row["gen"]: tuple(_frac(c) for c in row["w"]) for row in raw["weights"]}
    return {
        "weights": table,
        "abcd": tuple(_frac(c) for c in raw["abcd"]),
        "denom_L": int(raw["denom_L"]),
        "denom_M": int(raw["denom_M"]),
    }


def schedule(d, e, k):
    return json.loads(_core.schedule_json(d, e, k))


def chain(d, e, k, direction="up"):
    return json.loads(_core.chain_json(d, e, k, direction))
