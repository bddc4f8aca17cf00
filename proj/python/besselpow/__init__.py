"""Exact B_n^(nu)(r) polynomials, Bessel zeta values and related sequences.

Concrete values come back as fractions.Fraction. Values in Q(nu) come back
as RationalFunction(num, den) with ascending Fraction coefficients.
"""

import json
from fractions import Fraction
from typing import NamedTuple

from . import _core
from ._core import ConfigError, rayleigh_degree, routes

__all__ = [
    "ConfigError",
    "RationalFunction",
    "b_polys",
    "b_value",
    "rayleigh_degree",
    "rayleigh_phi",
    "routes",
    "run_cli",
    "sequence",
    "verify",
    "walk_moment",
    "zeta",
]


class RationalFunction(NamedTuple):
    num: tuple
    den: tuple

    def __call__(self, nu):
        nu = Fraction(nu)
        ev = lambda c: sum(x * nu**i for i, x in enumerate(c))
        return ev(self.num) / ev(self.den)


def _value(v):
    if isinstance(v, str):
        return Fraction(v)
    return RationalFunction(tuple(map(Fraction, v["num"])), tuple(map(Fraction, v["den"])))


def _nu(nu):
    if nu is None or nu == "sym":
        return "sym"
    return str(Fraction(nu))


def zeta(nu, n_max):
    """[zeta_nu(2), ..., zeta_nu(2 n_max)]; nu=None keeps nu symbolic."""
    return [_value(v) for v in json.loads(_core.zeta(_nu(nu), n_max))]


def b_polys(nu, n_max, route="series", tilde=False):
    """B_0..B_n_max as ascending coefficient lists in r."""
    polys = json.loads(_core.bpoly(route, _nu(nu), n_max, tilde))
    return [[_value(c) for c in p] for p in polys]


def b_value(nu, n, r, route="series"):
    return _value(json.loads(_core.b_value(route, _nu(nu), n, str(Fraction(r)))))


def rayleigh_phi(n):
    return [int(c) for c in _core.rayleigh_phi(n)]


def sequence(name, max, nu=0):
    return [(i, _value(json.loads(v))) for i, v in _core.sequence(name, max, _nu(nu))]


def walk_moment(n, s):
    return int(Fraction(_core.walk_moment(n, s)))


def verify(max_n=8, nus=None, mutate_zeta_sign=False):
    """The verification report as a dict."""
    labels = [] if nus is None else [_nu(v) for v in nus]
    return json.loads(_core.verify(max_n, labels, mutate_zeta_sign))


def run_cli(args):
    """(exit_code, stdout, stderr) of the command-line front end."""
    return _core.run_cli(list(args))
