"""Python bindings for the germsig library.

Rational results come back as fractions.Fraction; JSON documents (germs,
group actions, suite reports) are passed as dicts.
"""

import json
from fractions import Fraction

from . import _germsig
from ._germsig import GermsigError, genus, homology_rep, meyer_tau, relative_winding, suite_names

__all__ = [
    "GermsigError",
    "chi_loc_p1",
    "cosec2_half",
    "cosec2_sum",
    "error_name",
    "genus",
    "homology_rep",
    "meyer_tau",
    "p1_germ",
    "phi",
    "relative_winding",
    "run_suite",
    "sigma_loc",
    "suite_names",
    "total_signature",
]


def error_name(exc):
    """Machine-readable name of a GermsigError ("BadSpec", ...)."""
    return exc.args[0]


def cosec2_half(num, den, digits=30):
    return _germsig.cosec2_half(num, den, digits)


def cosec2_sum(d):
    return Fraction(_germsig.cosec2_sum(d))


def phi(d, m, word):
    return Fraction(_germsig.phi(d, m, word))


def p1_germ(d, m):
    return json.loads(_germsig.p1_germ(d, m))


def sigma_loc(germ):
    return Fraction(_germsig.sigma_loc(json.dumps(germ)))


def total_signature(action):
    return Fraction(_germsig.total_signature(json.dumps(action)))


def chi_loc_p1(d, m):
    return Fraction(_germsig.chi_loc_p1(d, m))


def run_suite(name):
    return json.loads(_germsig.run_suite(name))
