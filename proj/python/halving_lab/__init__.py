"""Exact point sets with many halving lines, and the oracles that check them."""

import json
from fractions import Fraction

from . import _core
from ._core import SCHEMA_VERSION, to_csv, to_svg

__all__ = [
    "SCHEMA_VERSION",
    "construct1",
    "construct2",
    "rosette",
    "highdim",
    "count_halving",
    "verify_claims",
    "density",
    "counts",
    "points",
    "to_csv",
    "to_svg",
]


def construct1(order, index):
    return _core.construct1(order, index)


def construct2(base, blocks, quant_exp=9):
    return _core.construct2(base, blocks, quant_exp)


def rosette(base):
    return _core.rosette(base)


def highdim(dim, m, seed):
    return _core.highdim(dim, m, seed)


def count_halving(doc, oracle="sweep"):
    count, pairs = _core.count_halving(doc, oracle)
    return count, [tuple(p) for p in pairs]


def verify_claims(doc):
    return json.loads(_core.verify_claims(doc))


def density(doc, gamma):
    return json.loads(_core.density(doc, str(gamma)))


def counts(i_max):
    return [tuple(int(v) for v in row) for row in _core.counts(i_max)]


def points(doc):
    """Coordinates of a document as tuples of Fractions."""
    data = json.loads(doc)
    return [tuple(Fraction(int(n), int(d)) for n, d in p) for p in data["coordinates"]]
