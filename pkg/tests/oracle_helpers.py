"""Shared independent oracles used by the genus and acceptance tests.

Dict-based polynomial arithmetic over root exponent tuples, with genus
series coefficients taken from the Bernoulli closed forms; none of it uses
the package's series division or symmetric reduction.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial

from indexcalc.exact_algebra import GradedPolynomial, bernoulli


def d_mul(a, b, max_deg, weights):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if sum(w * x for w, x in zip(weights, e)) > max_deg:
                continue
            out[e] = out.get(e, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c}


def d_add(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, Fraction(0)) + c
    return {e: c for e, c in out.items() if c}


def series_coeff(kind: str, k: int) -> Fraction:
    """Series coefficients straight from the Bernoulli closed forms."""
    if kind == "L":
        if k % 2:
            return Fraction(0)
        return Fraction(2**k) * bernoulli(k) / factorial(k) if k else Fraction(1)
    if kind == "A_hat":
        if k % 2:
            return Fraction(0)
        return Fraction(2 - 2**k) * bernoulli(k) / (Fraction(2**k) * factorial(k))
    if kind == "Todd":
        return Fraction((-1) ** k) * bernoulli(k) / factorial(k)
    raise ValueError(kind)


def brute_force_product(kind: str, n_roots: int, max_deg: int, weights):
    """prod_i f(x_i) as a dict polynomial, truncated by weighted degree.

    Weight-4 roots stand for squared weight-2 roots of an even series, so
    their power k carries the x^(2k) coefficient.
    """
    prod = {(0,) * n_roots: Fraction(1)}
    for i in range(n_roots):
        factor = {}
        w = weights[i]
        for k in range(max_deg // w + 1):
            c = series_coeff(kind, k if w == 2 else 2 * k)
            if c:
                e = [0] * n_roots
                e[i] = k
                factor[tuple(e)] = c
        prod = d_mul(prod, factor, max_deg, weights)
    return prod


def elementary_expansions(n_roots: int, max_deg: int, weights):
    """e_1..e_n of the roots as dict polynomials."""
    out = []
    for k in range(1, n_roots + 1):
        poly = {}
        for combo in combinations(range(n_roots), k):
            e = [0] * n_roots
            for i in combo:
                e[i] = 1
            poly[tuple(e)] = Fraction(1)
        out.append(poly)
    return out


def expand_class_poly(class_poly: GradedPolynomial, n_roots: int, max_deg: int, weights):
    """Expand a package polynomial in e-classes back into the roots, locally."""
    elems = elementary_expansions(n_roots, max_deg, weights)
    total = {}
    for exps, coeff in class_poly.terms.items():
        term = {(0,) * n_roots: coeff}
        for k, e in enumerate(exps):
            for _ in range(e):
                term = d_mul(term, elems[k], max_deg, weights)
        total = d_add(total, term)
    return total


def genus_matches_brute_force(genus_poly: GradedPolynomial, kind: str, n: int, weight: int) -> bool:
    weights = (weight,) * n
    max_deg = weight * n
    expected = brute_force_product(kind, n, max_deg, weights)
    return expand_class_poly(genus_poly, n, max_deg, weights) == expected
