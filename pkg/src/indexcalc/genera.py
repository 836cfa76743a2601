"""Multiplicative-sequence characteristic classes and Chern/Pontryagin algebra.

A genus is defined by a power series f(x) with f(0) = 1.  Its class is the
symmetric product f(x_1)...f(x_n) over formal roots, rewritten in the
elementary symmetric classes of the roots.  For an even series the product
only depends on the squared roots, so the classes come out in Pontryagin-type
generators of degree 4k; otherwise in Chern-type generators of degree 2k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .exact_algebra import (
    GradedPolynomial,
    TaylorSeries,
    genus_series,
    symmetric_reduce,
)

__all__ = [
    "GenusClass",
    "ChernCharacter",
    "multiplicative_sequence",
    "l_class",
    "a_hat_class",
    "todd_class",
    "chern_character",
    "chern_to_pontryagin",
    "signature_integrand_identity_check",
]


@dataclass(frozen=True)
class GenusClass:
    """A genus polynomial in class generators.

    ``half_dim`` is the number of formal root blocks used: L and A_hat come
    out in p_1..p_l (degree 4k, truncation 4*half_dim), Todd in c_1..c_n
    (degree 2k, truncation 2*half_dim).
    """

    kind: str
    half_dim: int
    polynomial: GradedPolynomial
    truncation: int


@dataclass(frozen=True)
class ChernCharacter:
    """rank + ch_1 + ch_2 + ... as a polynomial in the ambient generators."""

    rank: int
    polynomial: GradedPolynomial


def multiplicative_sequence(
    f: TaylorSeries,
    n_roots: int,
    class_names: Sequence[str],
    truncation: int | None = None,
) -> GradedPolynomial:
    """Product of f over n formal roots, reduced to symmetric class generators.

    For an even f the roots are regrouped into squared-root variables of
    degree 4 (so class k has degree 4k); for a general f the roots have
    degree 2.  Default truncation keeps exactly the degrees where all n
    classes can appear: n * deg(class_1 generator step) ... i.e. 4n or 2n.
    """
    if f.coefficient(0) != 1:
        raise ValueError("a genus-defining series must have constant term 1")
    if n_roots < 0:
        raise ValueError("n_roots must be non-negative")
    if len(class_names) != n_roots:
        raise ValueError(f"need {n_roots} class names, got {len(class_names)}")
    even = f.is_even()
    d_root = 4 if even else 2
    if truncation is None:
        truncation = d_root * n_roots
    if n_roots == 0:
        return GradedPolynomial((), truncation, {(): Fraction(1)})

    basis = tuple((f"r{i + 1}", d_root) for i in range(n_roots))
    # per-root series: root power k carries coefficient f[2k] (even) or f[k]
    max_power = truncation // d_root
    coeffs = []
    for k in range(max_power + 1):
        src = 2 * k if even else k
        coeffs.append(f.coefficient(src) if src <= f.order else Fraction(0))
    product = GradedPolynomial.constant(basis, truncation, Fraction(1))
    for i in range(n_roots):
        exps_base = [0] * n_roots
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                e = list(exps_base)
                e[i] = k
                terms[tuple(e)] = c
        product = product * GradedPolynomial(basis, truncation, terms)
    return symmetric_reduce(product, n_roots, list(class_names))


def l_class(l: int) -> GenusClass:
    """L-genus 1 + L_1 + ... + L_l in p_1..p_l (series x/tanh x)."""
    if l < 0:
        raise ValueError("l must be non-negative")
    f = genus_series("L", 2 * l)
    names = [f"p{i + 1}" for i in range(l)]
    return GenusClass("L", l, multiplicative_sequence(f, l, names), 4 * l)


def a_hat_class(l: int) -> GenusClass:
    """Dirac genus 1 + A_1 + ... + A_l in p_1..p_l (series (x/2)/sinh(x/2))."""
    if l < 0:
        raise ValueError("l must be non-negative")
    f = genus_series("A_hat", 2 * l)
    names = [f"p{i + 1}" for i in range(l)]
    return GenusClass("A_hat", l, multiplicative_sequence(f, l, names), 4 * l)


def todd_class(n: int) -> GenusClass:
    """Todd class 1 + Td_1 + ... + Td_n in c_1..c_n (series x/(1 - e^(-x)))."""
    if n < 0:
        raise ValueError("n must be non-negative")
    f = genus_series("Todd", n)
    names = [f"c{i + 1}" for i in range(n)]
    return GenusClass("Todd", n, multiplicative_sequence(f, n, names), 2 * n)


def _validate_pure_degree(classes: Sequence[GradedPolynomial], step: int) -> None:
    for i, cl in enumerate(classes):
        want = step * (i + 1)
        bad = [d for d in cl.homogeneous_degrees() if d != want]
        if bad:
            raise ValueError(
                f"class {i + 1} must have pure degree {want}, found degrees {bad}"
            )


def chern_character(
    rank: int,
    chern_classes: Sequence[GradedPolynomial],
    truncation: int | None = None,
) -> ChernCharacter:
    """Chern character rank + sum_m s_m/m! via Newton's identities.

    ``chern_classes[i]`` is c_{i+1} of the bundle, a pure-degree-2(i+1)
    polynomial in the ambient manifold generators; no root splitting of the
    bundle is required.
    """
    if rank < 0:
        raise ValueError("rank must be non-negative")
    if not chern_classes:
        raise ValueError(
            "need at least one chern class polynomial; pass zero polynomials "
            "in the ambient basis for a trivial bundle"
        )
    _validate_pure_degree(chern_classes, 2)
    model = chern_classes[0]
    for cl in chern_classes[1:]:
        model._check_basis(cl)
    if truncation is None:
        truncation = model.truncation

    def zero() -> GradedPolynomial:
        return GradedPolynomial(model.generators, model.truncation, {})

    def e(i: int) -> GradedPolynomial:
        if 1 <= i <= len(chern_classes):
            return chern_classes[i - 1]
        return zero()

    max_m = truncation // 2
    # Newton: s_m = sum_{i=1}^{m-1} (-1)^(i-1) e_i s_{m-i} + (-1)^(m-1) m e_m
    s: list[GradedPolynomial] = [zero()]  # s[0] unused
    ch = GradedPolynomial.constant(model.generators, model.truncation, Fraction(rank))
    for m in range(1, max_m + 1):
        sm = Fraction((-1) ** (m - 1) * m) * e(m)
        for i in range(1, m):
            term = e(i) * s[m - i]
            sm = sm + Fraction((-1) ** (i - 1)) * term
        s.append(sm)
        ch = ch + Fraction(1, factorial(m)) * sm
    return ChernCharacter(rank, ch)


def chern_to_pontryagin(
    chern_classes: Sequence[GradedPolynomial], real_dim: int
) -> list[GradedPolynomial]:
    """Pontryagin classes of the underlying real bundle.

    From c(E)c(E-bar) = prod(1 - x_i^2):
    p_k = (-1)^k sum_{i=0}^{2k} (-1)^i c_i c_{2k-i}, so p_1 = c_1^2 - 2 c_2.
    Returns [p_1, ..., p_{real_dim//4}] in the ambient generators.
    """
    if not chern_classes:
        return []
    _validate_pure_degree(chern_classes, 2)
    model = chern_classes[0]
    one = GradedPolynomial.constant(model.generators, model.truncation, Fraction(1))

    def c(i: int) -> GradedPolynomial:
        if i == 0:
            return one
        if 1 <= i <= len(chern_classes):
            return chern_classes[i - 1]
        return GradedPolynomial(model.generators, model.truncation, {})

    out = []
    for k in range(1, real_dim // 4 + 1):
        pk = GradedPolynomial(model.generators, model.truncation, {})
        for i in range(2 * k + 1):
            pk = pk + Fraction((-1) ** (k + i)) * (c(i) * c(2 * k - i))
        out.append(pk)
    return out


def signature_integrand_identity_check(l: int) -> bool:
    """Volume-component equality of the two signature integrands.

    Compares the top (degree 2l) component of 2^l prod (x_i/2)/tanh(x_i/2)
    with that of prod x_i/tanh(x_i) over l degree-2 roots; only that
    component survives integration over a 2l-dimensional manifold, and the
    lower components genuinely differ (the constant terms are 2^l vs 1).
    """
    if l < 0:
        raise ValueError("l must be non-negative")
    truncation = 2 * l
    f = genus_series("L", 2 * l)
    half = f.scale_argument(Fraction(1, 2))  # (x/2)/tanh(x/2)
    basis = tuple((f"x{i + 1}", 2) for i in range(l))

    def root_product(series: TaylorSeries, scale: Fraction) -> GradedPolynomial:
        prod = GradedPolynomial.constant(basis, truncation, scale)
        for i in range(l):
            terms = {}
            for k in range(truncation // 2 + 1):
                c = series.coefficient(k) if k <= series.order else Fraction(0)
                if c:
                    e = [0] * l
                    e[i] = k
                    terms[tuple(e)] = c
            prod = prod * GradedPolynomial(basis, truncation, terms)
        return prod

    lhs = root_product(half, Fraction(2**l)).degree_part(truncation)
    rhs = root_product(f, Fraction(1)).degree_part(truncation)
    return lhs == rhs
