"""Finite effect algebras: validation, classification, states and witnesses."""

from fractions import Fraction

from ._effalg import (
    EffectAlgebra,
    InputError,
    classify,
    enumerate,
    even_subsets,
    jauch_piron,
    parse_ea,
    parse_omp,
    powerset,
    sod,
    theorem_violations,
    two_valued_states,
    unital,
    witness,
)
from ._effalg import extremize as _extremize


def extremize(algebra, pins, target, maximize=False):
    """Exact optimum of s(target) with pinned values; None if infeasible."""
    result = _extremize(algebra, [(a, str(Fraction(v))) for a, v in pins], target, maximize)
    if result is None:
        return None
    value, state = result
    return Fraction(value), [Fraction(v) for v in state]


def load(path):
    with open(path) as f:
        text = f.read()
    for line in text.splitlines():
        words = line.split("#", 1)[0].split()
        if words:
            return parse_omp(text) if words[0] == "base" else parse_ea(text)
    raise InputError(f"{path} is empty")


__all__ = [
    "EffectAlgebra",
    "InputError",
    "classify",
    "enumerate",
    "even_subsets",
    "extremize",
    "jauch_piron",
    "load",
    "parse_ea",
    "parse_omp",
    "powerset",
    "sod",
    "theorem_violations",
    "two_valued_states",
    "unital",
    "witness",
]
