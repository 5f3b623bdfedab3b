"""Additive decomposition P(x) = outer(S(x)) + linear_part(x).

S is the largest monic linearized divisor of x^q - x for which such a
splitting exists, with deg(linear_part) < deg(S); the additive index counts
how far S falls short of x^q - x: deg(S) = p^(n - index).  Also carries the
classical multiplicative index used for bound comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd as int_gcd

from .errors import InvariantViolation, PreconditionError
from .linearized import (LinearizedPoly, Subspace, expand_in_base,
                         is_linearized, vanishing_poly)
from .poly import (Poly, gcd_with_xq_minus_x, poly_gcd, reduce_mod_xq_minus_x,
                   shift_expand)


@dataclass(frozen=True)
class AdditiveDecomposition:
    """poly == outer(subspace_poly(x)) + linear_part(x), exactly.

    subspace_poly is monic, splits over the field, divides x^q - x and has
    degree p^(n - index); linear_part is linearized with smaller degree;
    outer carries the constant term poly(0); kernel holds the roots of
    subspace_poly.
    """
    poly: Poly
    outer: Poly
    subspace_poly: LinearizedPoly
    linear_part: LinearizedPoly
    index: int
    kernel: Subspace

    def compose(self) -> Poly:
        """Reassemble outer(subspace_poly(x)) + linear_part(x)."""
        return self.outer.compose(self.subspace_poly.to_poly()) + self.linear_part.to_poly()


@dataclass(frozen=True)
class PartialDecomposition:
    """Result of decomposing against a caller-chosen base polynomial.

    When ok is false, remainder witnesses the failed divisibility of the
    maximal subspace polynomial by the requested base.
    """
    ok: bool
    outer: Poly | None
    linear_part: LinearizedPoly | None
    remainder: Poly | None


def _canonical_input(poly: Poly) -> Poly:
    """Degrees >= q are folded modulo x^q - x before kernel computations;
    the identity reported afterwards is for the reduced polynomial."""
    if poly.degree >= poly.field.q:
        return reduce_mod_xq_minus_x(poly)
    return poly


def _kernel_of_reduced(poly: Poly, method: str) -> Subspace:
    """Kernel for an input already folded below degree q.  A constant
    residue satisfies the defining identity everywhere, so its kernel is the
    whole field."""
    field = poly.field
    if method == "gcd":
        bands = [f for f in shift_expand(poly) if not f.is_zero()]
        if not bands:
            return Subspace.full(field)
        g = reduce(poly_gcd, bands)
        g = gcd_with_xq_minus_x(g)
        roots = [a for a in field.elements() if g.eval(a).code == 0]
        return Subspace(field, roots)
    if method == "brute":
        base = poly - Poly.constant(field, poly.constant_term())
        good = []
        for y in field.elements():
            shifted = base.shift_arg(y)
            if shifted == base + Poly.constant(field, base.eval(y)):
                good.append(y)
        return Subspace(field, good)
    raise PreconditionError(f"unknown method {method!r}")


def additive_kernel(poly: Poly, method: str = "gcd") -> Subspace:
    """Elements y for which P0(x+y) = P0(x) + P0(y) holds identically.

    The gcd method intersects the shift-expansion bands with x^q - x; brute
    tests the polynomial identity for every y.  Both yield the same subspace.
    """
    if poly.degree < 1:
        raise PreconditionError("additive kernel needs degree >= 1")
    return _kernel_of_reduced(_canonical_input(poly), method)


def additive_index(poly: Poly) -> int:
    """n - dim(additive kernel); zero exactly for p-affine behaviour."""
    return poly.field.n - additive_kernel(poly).dim


def maximal_decomposition(poly: Poly) -> AdditiveDecomposition:
    """Decompose against the largest admissible subspace polynomial.

    The Euclidean digits of poly - poly(0) in that base are necessarily
    constant above index zero with a linearized zeroth digit; observing
    anything else is a structural impossibility and raises
    InvariantViolation rather than being silently repaired.
    """
    if poly.degree < 1:
        raise PreconditionError("decomposition needs degree >= 1")
    poly = _canonical_input(poly)
    field = poly.field
    ker = _kernel_of_reduced(poly, "gcd")
    sub_poly = vanishing_poly(ker)
    const = poly.constant_term()
    digits = expand_in_base(poly - Poly.constant(field, const), sub_poly.to_poly())
    linear_part = is_linearized(digits[0])
    if linear_part is None:
        raise InvariantViolation("zeroth digit of the maximal expansion is not linearized")
    outer = [const]
    for d in digits[1:]:
        if d.degree > 0:
            raise InvariantViolation("higher digit of the maximal expansion is not constant")
        outer.append(d.constant_term())
    return AdditiveDecomposition(
        poly=poly,
        outer=Poly(field, outer),
        subspace_poly=sub_poly,
        linear_part=linear_part,
        index=field.n - ker.dim,
        kernel=ker,
    )


def decompose_with(poly: Poly, base: LinearizedPoly) -> PartialDecomposition:
    """Attempt the splitting against a caller-supplied monic base dividing
    x^q - x; succeeds exactly when the base divides the maximal subspace
    polynomial."""
    if poly.degree < 1:
        raise PreconditionError("decomposition needs degree >= 1")
    field = poly.field
    if not base.is_monic():
        raise PreconditionError("base must be monic")
    base_poly = base.to_poly()
    if sum(1 for a in field.elements() if base.eval(a).code == 0) != base.degree:
        raise PreconditionError("base does not divide x^q - x")
    poly = _canonical_input(poly)
    maximal = vanishing_poly(_kernel_of_reduced(poly, "gcd"))
    remainder = maximal.to_poly() % base_poly
    if not remainder.is_zero():
        return PartialDecomposition(False, None, None, remainder)
    const = poly.constant_term()
    digits = expand_in_base(poly - Poly.constant(field, const), base_poly)
    linear_part = is_linearized(digits[0])
    if linear_part is None:
        raise InvariantViolation("zeroth digit not linearized despite divisibility")
    outer = [const]
    for d in digits[1:]:
        if d.degree > 0:
            raise InvariantViolation("higher digit not constant despite divisibility")
        outer.append(d.constant_term())
    return PartialDecomposition(True, Poly(field, outer), linear_part,
                                Poly.zero(field))


def multiplicative_index(poly: Poly) -> int:
    """(q-1)/s for s = gcd of (q-1) with all exponent gaps above the lowest
    term of poly - poly(0); a monomial has index 1."""
    if poly.degree < 1:
        raise PreconditionError("multiplicative index needs degree >= 1")
    field = poly.field
    base = poly - Poly.constant(field, poly.constant_term())
    exps = [e for e, c in enumerate(base.coeffs) if c.code]
    low = exps[0]
    if len(exps) == 1:
        return 1
    s = field.q - 1
    for e in exps[1:]:
        s = int_gcd(s, e - low)
    return (field.q - 1) // s
