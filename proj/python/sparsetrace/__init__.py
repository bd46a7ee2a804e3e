"""Exact traces, residues and sparse resultants of polynomial systems."""

import json
from fractions import Fraction

from . import _core
from ._core import DegenerateError, Error

__all__ = [
    "DegenerateError",
    "Error",
    "chow_trace",
    "discriminant",
    "global_residue",
    "mixed_volume",
    "run",
    "sparse_resultant",
    "torus_residue",
    "trace",
    "trace_oracle",
]

_RATIONAL_KEYS = ("value", "numerator", "denominator")


def _fraction(text):
    return Fraction(text)


def _convert(result):
    out = dict(result)
    for key in _RATIONAL_KEYS:
        if key in out:
            out[key] = _fraction(out[key])
    for key in ("e", "d", "index"):
        if key in out:
            out[key] = int(out[key])
    return out


def trace(p, q, f, vars, seed=1):
    """Trace of multiplication by p/q on the torus zeros of f via the sparse resultant."""
    return _convert(_core.trace(p, q, list(f), list(vars), seed))


def trace_oracle(p, q, f, vars):
    """The same trace computed from a Groebner basis of the quotient algebra."""
    return _convert(_core.trace_oracle(p, q, list(f), list(vars)))


def chow_trace(roots, degree, p, q, vars):
    """Trace from the Chow form of the ideal with the given (point, multiplicity) roots."""
    specs = [([str(Fraction(c)) for c in point], int(mult)) for point, mult in roots]
    return _convert(_core.chow_trace(specs, degree, p, q, list(vars)))


def global_residue(h, f, vars):
    return _fraction(_core.global_residue(h, list(f), list(vars)))


def torus_residue(p, f, vars):
    return _fraction(_core.torus_residue(p, list(f), list(vars)))


def mixed_volume(supports):
    return int(_core.mixed_volume([[list(pt) for pt in s] for s in supports]))


def sparse_resultant(polys, vars, seed=1):
    return _fraction(_core.sparse_resultant(list(polys), list(vars), seed))


def discriminant(f, vars):
    return _fraction(_core.discriminant(list(f), list(vars)))


def run(command, input, seed=1, backend="auto", p=None, q=None, monomial=None):
    """Run a CLI command in-process; returns (document, exit_code)."""
    text, code = _core.run(command, str(input), seed, backend, p, q, monomial)
    return json.loads(text), code
