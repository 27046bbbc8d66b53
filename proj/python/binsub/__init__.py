"""Exact analysis of binary subgroups of direct products of free groups.

Thin wrapper over the C++ core: reports come back as plain dicts decoded
from the tool's JSON schema.
"""

import json as _json
from fractions import Fraction as _Fraction

try:
    from binsub._core import (  # type: ignore
        BinsubError,
        BinsubInternalError,
        analyze_builtin_json,
        analyze_json,
        build_array,
        canonicalize,
        dual_weights,
        excluded_classes,
        hirsch,
        max_m_for,
        mobius,
        pc_value,
        search_json,
        witt,
    )
except ImportError:  # flat layout in the build tree
    from _core import (  # type: ignore
        BinsubError,
        BinsubInternalError,
        analyze_builtin_json,
        analyze_json,
        build_array,
        canonicalize,
        dual_weights,
        excluded_classes,
        hirsch,
        max_m_for,
        mobius,
        pc_value,
        search_json,
        witt,
    )

__all__ = [
    "BinsubError",
    "BinsubInternalError",
    "analyze",
    "analyze_builtin",
    "build_array",
    "canonicalize",
    "dual_weights",
    "excluded_classes",
    "hirsch",
    "max_m_for",
    "mobius",
    "pc",
    "search",
    "witt",
]

__version__ = "0.1.0"


def analyze(sigmas, diagonal=False, max_k=0, threads=1, budget=0.0):
    """Analysis report for r lists of m distinct positive integers."""
    return _json.loads(analyze_json(sigmas, diagonal, max_k, threads, budget))


def analyze_builtin(name, m, r=1, diagonal=False, max_k=0, threads=1,
                    budget=0.0):
    """Analysis report for the builtin families ("b0" or "b1")."""
    return _json.loads(
        analyze_builtin_json(name, m, r, diagonal, max_k, threads, budget))


def search(m, k, mode="min-rows", l=0, limit=10, diagonal=False, target="z",
           ordered=False, threads=1, budget=0.0):
    """Search document; see the command line tool for the field layout."""
    return _json.loads(
        search_json(m, k, mode, l, limit, diagonal, target, ordered, threads,
                    budget))


def pc(c, t):
    """p_c evaluated at a rational point, as a Fraction."""
    frac = _Fraction(t)
    num, den = pc_value(c, frac.numerator, frac.denominator)
    return _Fraction(num, den)
