"""Topological index evaluation on characteristic-number descriptors.

A manifold is represented by its generator list, a top-degree evaluation
table (monomial -> integer), and its total tangent characteristic class:
indices are linear functionals on characteristic numbers, so no quotient
cohomology ring is needed.  Every index must come out an exact integer;
anything else flags an inconsistent descriptor (for the spin complex this is
precisely what betrays a non-spin input).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .exact_algebra import GradedPolynomial
from .genera import (
    a_hat_class,
    chern_character,
    chern_to_pontryagin,
    l_class,
    todd_class,
)

__all__ = [
    "ManifoldDescriptor",
    "BundleDescriptor",
    "IndexReport",
    "DescriptorError",
    "InconsistentIndexError",
    "evaluate",
    "signature_index",
    "dolbeault_index",
    "spin_index",
    "de_rham_euler",
    "hirzebruch_consistency",
]

INDEX_KINDS = ("signature", "dolbeault", "spin", "spin_twisted", "de_rham")


class DescriptorError(ValueError):
    """A descriptor violates its structural invariants."""


class InconsistentIndexError(ValueError):
    """An index evaluated to a non-integer: the descriptor is inconsistent."""

    def __init__(self, complex_kind: str, value: Fraction, hint: str = ""):
        self.complex_kind = complex_kind
        self.value = value
        message = f"{complex_kind} index evaluated to the non-integer {value}"
        if hint:
            message += f" ({hint})"
        super().__init__(message)


@dataclass(frozen=True)
class ManifoldDescriptor:
    """Characteristic data of a closed even-dimensional manifold.

    ``tangent_class`` is the total Chern class for kind 'complex' and the
    total Pontryagin class for kind 'oriented_real', expressed in the listed
    generators.  ``evaluation`` maps each top-degree exponent vector to the
    integer it pairs to against the fundamental class.  ``euler_class`` is
    only needed on oriented_real descriptors that want a de Rham index.
    """

    name: str
    real_dim: int
    kind: str
    generators: tuple[tuple[str, int], ...]
    evaluation: Mapping[tuple[int, ...], int]
    tangent_class: GradedPolynomial
    euler_class: GradedPolynomial | None = None

    def __post_init__(self) -> None:
        if self.real_dim <= 0 or self.real_dim % 2 != 0:
            raise DescriptorError(f"real_dim must be even and positive, got {self.real_dim}")
        if self.kind not in ("oriented_real", "complex"):
            raise DescriptorError(f"kind must be oriented_real or complex, got {self.kind!r}")
        gens = tuple((str(n), int(d)) for n, d in self.generators)
        for n, d in gens:
            if d <= 0 or d % 2 != 0:
                raise DescriptorError(f"generator {n!r} has odd generator degree {d}")
        object.__setattr__(self, "generators", gens)
        table = {}
        for exps, value in dict(self.evaluation).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(gens):
                raise DescriptorError(f"evaluation key {exps} does not match generator count")
            deg = sum(e * d for e, (_, d) in zip(exps, gens))
            if deg != self.real_dim:
                raise DescriptorError(
                    f"evaluation key {self.monomial_name(exps)} has degree {deg}, "
                    f"expected top degree {self.real_dim}"
                )
            table[exps] = int(value)
        object.__setattr__(self, "evaluation", table)
        if self.tangent_class.generators != gens:
            raise DescriptorError("tangent_class is not expressed in the manifold generators")
        if self.tangent_class.constant_term() != 1:
            raise DescriptorError("tangent_class must have degree-0 term 1")

    # -- helpers -------------------------------------------------------

    def monomial_name(self, exps: Sequence[int]) -> str:
        zero = GradedPolynomial(self.generators, self.real_dim, {})
        return zero.monomial_name(exps)

    def one(self) -> GradedPolynomial:
        return GradedPolynomial.constant(self.generators, self.real_dim, Fraction(1))

    def chern_parts(self) -> list[GradedPolynomial]:
        """c_1..c_n of a complex descriptor's tangent bundle."""
        if self.kind != "complex":
            raise DescriptorError(f"{self.name}: chern classes only exist on complex descriptors")
        n = self.real_dim // 2
        return [self.tangent_class.degree_part(2 * i) for i in range(1, n + 1)]

    def pontryagin_parts(self) -> list[GradedPolynomial]:
        """p_1..p_{m//4} of the tangent bundle, converting from Chern data if needed."""
        k_max = self.real_dim // 4
        if self.kind == "oriented_real":
            return [self.tangent_class.degree_part(4 * k) for k in range(1, k_max + 1)]
        parts = chern_to_pontryagin(self.chern_parts(), self.real_dim)
        if not parts:
            parts = [self.tangent_class.degree_part(4 * k) for k in range(1, k_max + 1)]
        return parts


@dataclass(frozen=True)
class BundleDescriptor:
    """A vector bundle given by rank and total Chern class in the manifold basis."""

    rank: int
    total_chern: GradedPolynomial

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise DescriptorError(f"bundle rank must be non-negative, got {self.rank}")
        if self.total_chern.constant_term() != 1:
            raise DescriptorError("total_chern must have degree-0 term 1")

    @classmethod
    def trivial(cls, manifold: ManifoldDescriptor, rank: int = 1) -> "BundleDescriptor":
        return cls(rank=rank, total_chern=manifold.one())

    def chern_parts(self, real_dim: int) -> list[GradedPolynomial]:
        n = max(real_dim // 2, 1)
        return [self.total_chern.degree_part(2 * i) for i in range(1, n + 1)]


@dataclass(frozen=True)
class IndexReport:
    """Result of an index evaluation: exact value, integer form, and density."""

    complex_kind: str
    value: Fraction
    integer_value: int
    density: GradedPolynomial

    manifold: str = field(default="", compare=False)


def evaluate(poly: GradedPolynomial, manifold: ManifoldDescriptor) -> Fraction:
    """Pair the top-degree component of a polynomial with the fundamental class.

    Lower-degree terms contribute nothing; a top-degree monomial missing from
    the evaluation table is an error naming that monomial.
    """
    if poly.generators != manifold.generators:
        raise DescriptorError(
            f"polynomial basis {poly.generators} does not match manifold "
            f"{manifold.name!r} generators {manifold.generators}"
        )
    total = Fraction(0)
    for exps, coeff in poly.terms.items():
        if poly.degree_of_term(exps) != manifold.real_dim:
            continue
        if exps not in manifold.evaluation:
            raise DescriptorError(
                f"{manifold.name}: top-degree monomial {manifold.monomial_name(exps)} "
                "is missing from the evaluation table"
            )
        total += coeff * manifold.evaluation[exps]
    return total


def _report(kind: str, density: GradedPolynomial, manifold: ManifoldDescriptor, hint: str = "") -> IndexReport:
    value = evaluate(density, manifold)
    if value.denominator != 1:
        raise InconsistentIndexError(kind, value, hint)
    return IndexReport(
        complex_kind=kind,
        value=value,
        integer_value=int(value),
        density=density,
        manifold=manifold.name,
    )


def _substituted_genus(names_to_parts: dict[str, GradedPolynomial], genus_poly: GradedPolynomial,
                       manifold: ManifoldDescriptor) -> GradedPolynomial:
    if not genus_poly.generators:
        return GradedPolynomial.constant(
            manifold.generators, manifold.real_dim, genus_poly.constant_term()
        )
    return genus_poly.substitute(names_to_parts)


def signature_index(manifold: ManifoldDescriptor) -> IndexReport:
    """Hirzebruch signature: the L-genus paired with the fundamental class.

    The L-polynomial has no components of degree 2 mod 4, so the index
    vanishes identically on manifolds with real_dim = 2 mod 4.
    """
    l = manifold.real_dim // 4
    genus = l_class(l)
    parts = manifold.pontryagin_parts()
    assignments = {f"p{k + 1}": parts[k] for k in range(l)}
    density = _substituted_genus(assignments, genus.polynomial, manifold)
    return _report("signature", density, manifold)


def dolbeault_index(
    manifold: ManifoldDescriptor, bundle: BundleDescriptor | None = None
) -> IndexReport:
    """Holomorphic index of the twisted Dolbeault complex: <Td(TM) ch(V), [M]>."""
    if manifold.kind != "complex":
        raise DescriptorError(
            f"{manifold.name}: the Dolbeault complex needs a complex descriptor"
        )
    if bundle is None:
        bundle = BundleDescriptor.trivial(manifold)
    n = manifold.real_dim // 2
    genus = todd_class(n)
    assignments = {f"c{i + 1}": part for i, part in enumerate(manifold.chern_parts())}
    td = _substituted_genus(assignments, genus.polynomial, manifold)
    ch = chern_character(bundle.rank, bundle.chern_parts(manifold.real_dim)).polynomial
    return _report("dolbeault", td * ch, manifold)


def spin_index(
    manifold: ManifoldDescriptor, bundle: BundleDescriptor | None = None
) -> IndexReport:
    """Twisted spin index: gravitational density A-hat times gauge density ch(V).

    The caller asserts spin-ness; a non-spin descriptor betrays itself with a
    non-integer value, which is raised as InconsistentIndexError.  Complex
    descriptors are converted to Pontryagin data automatically.
    """
    if bundle is None:
        bundle = BundleDescriptor.trivial(manifold)
    l = manifold.real_dim // 4
    genus = a_hat_class(l)
    parts = manifold.pontryagin_parts()
    assignments = {f"p{k + 1}": parts[k] for k in range(l)}
    a_hat = _substituted_genus(assignments, genus.polynomial, manifold)
    ch = chern_character(bundle.rank, bundle.chern_parts(manifold.real_dim)).polynomial
    kind = "spin" if bundle.total_chern == manifold.one() and bundle.rank == 1 else "spin_twisted"
    return _report(kind, a_hat * ch, manifold, hint="is the descriptor actually spin?")


def de_rham_euler(manifold: ManifoldDescriptor) -> IndexReport:
    """Euler characteristic: <e(TM), [M]>, with e = c_n on complex descriptors."""
    if manifold.kind == "complex":
        density = manifold.tangent_class.degree_part(manifold.real_dim)
    elif manifold.euler_class is not None:
        density = manifold.euler_class
    else:
        raise DescriptorError(
            f"{manifold.name}: oriented_real descriptor has no Euler class data"
        )
    return _report("de_rham", density, manifold)


def hirzebruch_consistency(
    manifold: ManifoldDescriptor, recorded_signature: int | None = None
) -> bool:
    """Cross-check the signature on a complex descriptor with real_dim = 0 mod 4.

    The L-genus route must give an exact integer; on four-manifolds it must
    also match the chi-type combination 4*chi(O) - chi_top, and when a
    recorded catalog value is supplied it must agree with that too.
    """
    if manifold.kind != "complex":
        raise DescriptorError("hirzebruch_consistency expects a complex descriptor")
    if manifold.real_dim % 4 != 0:
        raise DescriptorError("hirzebruch_consistency expects real_dim divisible by 4")
    report = signature_index(manifold)
    if recorded_signature is not None and report.integer_value != recorded_signature:
        return False
    if manifold.real_dim == 4:
        chi_o = dolbeault_index(manifold).integer_value
        euler = de_rham_euler(manifold).integer_value
        if report.integer_value != 4 * chi_o - euler:
            return False
    return True
