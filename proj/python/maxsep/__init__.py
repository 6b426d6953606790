"""Maximum separating rectangle: the largest axis-aligned rectangle that holds
every red point and as few blue points as possible.

Coordinates may be ints, fractions.Fraction, decimal strings or floats (read
through their decimal repr). Results come back as Fractions.
"""

from fractions import Fraction

from . import _core
from ._core import ParseError, UnboundedError

__all__ = [
    "ParseError",
    "UnboundedError",
    "gen_fap",
    "gen_omega_m",
    "gen_random",
    "oracle_best",
    "parse_points",
    "solve",
    "solve_all",
]


def _exact(v):
    if isinstance(v, float):
        v = Fraction(repr(v))
    return str(Fraction(v))


def _pts(points):
    return [(_exact(x), _exact(y)) for x, y in points]


def _frac_pts(points):
    return [(Fraction(x), Fraction(y)) for x, y in points]


def _rect(r):
    return tuple(Fraction(v) for v in r)


def _solution(d):
    d["smin"] = _rect(d["smin"])
    if d["status"] == "bounded":
        d["rect"] = _rect(d["rect"])
        d["smax"] = _rect(d["smax"])
        d["area"] = Fraction(d["area"])
        d["supports"] = {
            k: None if v is None else (Fraction(v[0]), Fraction(v[1])) for k, v in d["supports"].items()
        }
    return d


def solve(reds, blues, presorted=False):
    """One maximum separating rectangle as a dict (status, rect, area, ...)."""
    return _solution(_core.solve(_pts(reds), _pts(blues), presorted))


def solve_all(reds, blues, all_maximal=False):
    """Every maximum-area separating rectangle as (xmin, ymin, xmax, ymax)."""
    return [_rect(r) for r in _core.solve_all(_pts(reds), _pts(blues), all_maximal)]


def oracle_best(reds, blues):
    """Brute-force reference for small instances."""
    return _solution(_core.oracle_best(_pts(reds), _pts(blues)))


def _instance(t):
    return _frac_pts(t[0]), _frac_pts(t[1])


def parse_points(text):
    return _instance(_core.parse_points(text))


def gen_omega_m(m, x0=1, y0=1):
    return _instance(_core.gen_omega_m(m, _exact(x0), _exact(y0)))


def gen_fap(values):
    return _instance(_core.gen_fap([_exact(v) for v in values]))


def gen_random(n, m, seed, lo=-10, hi=10):
    return _instance(_core.gen_random(n, m, seed, lo, hi))
