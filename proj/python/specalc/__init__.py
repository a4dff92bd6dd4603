"""Exact spectral calculus for tensor products and elementary operators.

Operators are written in the block DSL, e.g. ``sum(pole(1, ord=1, rank=inf))``.
Matrices are lists of rows of Gaussian-rational strings such as ``"1/2-3i"``.
Reports come back as plain dicts with the same fields as the CLI's JSON.
"""

import json

from . import _specalc
from ._specalc import SpecalcError, canonical, gen

__all__ = [
    "SpecalcError",
    "canonical",
    "classify",
    "product",
    "transfer",
    "oracle",
    "gen",
    "kron",
    "elementary_rep",
    "ascent_descent",
    "drazin",
]


def classify(text, depth=64):
    return json.loads(_specalc.classify(text, depth))


def product(a, b, mode="tensor", depth=64):
    return json.loads(_specalc.product(a, b, mode, depth))


def transfer(a, b, mode="tensor", depth=64):
    return json.loads(_specalc.transfer(a, b, mode, depth))


def oracle(a, b, mode="tensor", depth=64):
    return json.loads(_specalc.oracle(a, b, mode, depth))


def kron(a, b):
    return json.loads(_specalc.kron(a, b))


def elementary_rep(a, b):
    return json.loads(_specalc.elementary_rep(a, b))


def ascent_descent(m, lam="0"):
    return json.loads(_specalc.ascent_descent(m, lam))


def drazin(m):
    return json.loads(_specalc.drazin(m))
