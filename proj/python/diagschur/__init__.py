"""Python front end for the exact diagonal Schur algorithm.

Rationals travel as "p/q" strings; this wrapper converts them to and from
fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _core
from ._core import DiagschurError, __version__

__all__ = [
    "DiagschurError",
    "hankel_det",
    "shifted_hankel_det",
    "normal_indices",
    "series_from_moments",
    "toeplitz_solve",
    "multinomial",
    "schur_decompose_ml",
    "cf_expand",
    "resolvent_matrix",
    "assemble_full",
    "roundtrip_verify",
    "run_cli",
]


def _fmt(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _fracs(value):
    # Turn every "p/q" string inside a decoded JSON value into a Fraction.
    if isinstance(value, str) and "/" in value:
        try:
            return Fraction(value)
        except ValueError:
            return value
    if isinstance(value, list):
        return [_fracs(v) for v in value]
    if isinstance(value, dict):
        return {k: _fracs(v) for k, v in value.items()}
    return value


def _load(text):
    return _fracs(json.loads(text))


def _seq(moments):
    return [_fmt(x) for x in moments]


def hankel_det(moments, n):
    return Fraction(_core.hankel_det(_seq(moments), n))


def shifted_hankel_det(moments, n):
    return Fraction(_core.shifted_hankel_det(_seq(moments), n))


def normal_indices(moments):
    return _load(_core.normal_indices(_seq(moments)))


def series_from_moments(moments):
    return _load(_core.series_from_moments(_seq(moments)))


def toeplitz_solve(column):
    return [Fraction(x) for x in _core.toeplitz_solve(_seq(column))]


def multinomial(total, parts):
    return int(_core.multinomial(total, list(parts)))


def schur_decompose_ml(moments, parity="even", strict=False):
    return _load(_core.schur_decompose_ml(_seq(moments), parity, strict))


def _cf_text(cf):
    def poly(p):
        return [_fmt(c) for c in p]

    atoms = []
    for a in cf["atoms"]:
        atom = {"m": poly(a["m"])}
        if "l" in a:
            atom["l"] = poly(a["l"])
        atoms.append(atom)
    doc = {"parity": cf["parity"], "atoms": atoms}
    if "key" in cf:
        doc["key"] = list(cf["key"])
    return json.dumps(doc)


def cf_expand(cf, order):
    return _load(_core.cf_expand(_cf_text(cf), order))


def resolvent_matrix(cf):
    return _load(_core.resolvent_matrix(_cf_text(cf)))


def assemble_full(n, entries, max_degree, parity="even"):
    doc = {
        "n": n,
        "max_degree": max_degree,
        "entries": [{"idx": list(idx), "val": _fmt(v)} for idx, v in entries.items()],
    }
    return _load(_core.assemble_full(json.dumps(doc), parity))


def roundtrip_verify(atoms, parity="even"):
    """atoms: iterable of (node, weight); node is a number or a tuple."""
    items = []
    n = 1
    for node, weight in atoms:
        coords = list(node) if isinstance(node, (list, tuple)) else [node]
        n = len(coords)
        items.append({"node": [_fmt(c) for c in coords], "weight": _fmt(weight)})
    return _load(_core.roundtrip_verify(json.dumps({"n": n, "atoms": items}), parity))


def run_cli(args, stdin=""):
    return _core.run_cli(list(args), stdin)
