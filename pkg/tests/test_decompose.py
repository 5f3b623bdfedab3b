import random

import pytest

from addix.decompose import (additive_index, additive_kernel, decompose_with,
                             maximal_decomposition, multiplicative_index)
from addix.errors import PreconditionError
from addix.field import make_field
from addix.linearized import (LinearizedPoly, Subspace, is_linearized,
                              vanishing_poly, xq_minus_x_linearized)
from addix.poly import Poly, parse_poly

F4 = make_field(2, 2)
F8 = make_field(2, 3)
F9 = make_field(3, 2)
F16 = make_field(2, 4)
F27 = make_field(3, 3)


def rand_poly(rng, field, max_deg):
    while True:
        poly = Poly.from_codes(field, [rng.randrange(field.q) for _ in range(max_deg + 1)])
        if poly.degree >= 1:
            return poly


def test_additive_kernel_examples():
    affine = parse_poly("x^3+x+1", F27)
    assert additive_kernel(affine).is_full()
    assert additive_kernel(affine, "brute").is_full()
    assert additive_kernel(parse_poly("x^3", F8)).dim == 0
    mid = parse_poly("(x^3-x)^2+x", F9)
    assert [e.code for e in additive_kernel(mid).elements()] == [0, 1, 2]
    assert additive_kernel(mid, "brute") == additive_kernel(mid, "gcd")
    with pytest.raises(PreconditionError):
        additive_kernel(Poly.one(F9))


def test_additive_index_examples():
    assert additive_index(parse_poly("x^3+x+1", F27)) == 0
    assert additive_index(parse_poly("x^3", F8)) == 3
    assert additive_index(parse_poly("(x^3-x)^2+x", F9)) == 1


def test_maximal_decomposition_fixtures():
    dec = maximal_decomposition(parse_poly("(x^3-x)^2+x", F9))
    assert dec.subspace_poly.to_poly() == parse_poly("x^3-x", F9)
    assert dec.outer == parse_poly("x^2", F9)
    assert dec.linear_part == LinearizedPoly.identity(F9)
    assert dec.index == 1
    assert dec.compose() == dec.poly

    dec = maximal_decomposition(parse_poly("x^3", F8))
    assert dec.subspace_poly == LinearizedPoly.identity(F8)
    assert dec.outer == parse_poly("x^3", F8)
    assert dec.linear_part.is_zero()
    assert dec.index == 3

    c = F16.from_code(7)
    dec = maximal_decomposition(parse_poly("x^2+[7]", F16))
    assert dec.index == 0
    assert dec.subspace_poly == xq_minus_x_linearized(F16)
    assert dec.outer == Poly.constant(F16, c)
    assert dec.linear_part.to_poly() == parse_poly("x^2", F16)


def test_decomposition_random_contract():
    rng = random.Random(17)
    for field in (F4, F9, F16):
        for _ in range(60):
            poly = rand_poly(rng, field, 9)
            dec = maximal_decomposition(poly)
            assert dec.compose() == dec.poly
            assert dec.outer.constant_term() == dec.poly.constant_term()
            assert dec.linear_part.degree < dec.subspace_poly.degree
            assert dec.subspace_poly.degree == field.p ** (field.n - dec.index)
            assert additive_kernel(poly, "brute") == dec.kernel


def test_coset_shift_identity():
    # the decomposition makes the map affine on kernel cosets
    rng = random.Random(23)
    for field in (F9, F16):
        for _ in range(20):
            poly = rand_poly(rng, field, 8)
            dec = maximal_decomposition(poly)
            for a in field.elements():
                pa = dec.poly.eval(a)
                for u in dec.kernel.elements():
                    assert dec.poly.eval(a + u) == pa + dec.linear_part.eval(u)


def test_index_zero_iff_additive_map():
    rng = random.Random(29)
    for _ in range(40):
        poly = rand_poly(rng, F9, 10)
        base = poly - Poly.constant(F9, poly.constant_term())
        additive = all(base.eval(a + b) == base.eval(a) + base.eval(b)
                       for a in F9.elements() for b in F9.elements())
        assert (additive_index(poly) == 0) == additive


def test_maximality_proper_multiples_fail():
    rng = random.Random(31)
    tested = 0
    while tested < 15:
        poly = rand_poly(rng, F16, 8)
        dec = maximal_decomposition(poly)
        if dec.kernel.is_full():
            continue
        bigger = dec.kernel
        code = 1
        while bigger.dim == dec.kernel.dim:
            cand = F16.from_code(code)
            if not bigger.contains(cand):
                bigger = Subspace(F16, list(bigger.basis) + [cand])
            code += 1
        result = decompose_with(poly, vanishing_poly(bigger))
        assert not result.ok and not result.remainder.is_zero()
        tested += 1


def test_decompose_with_examples():
    poly = parse_poly("(x^3-x)^2+x", F9)
    trivial = decompose_with(poly, LinearizedPoly.identity(F9))
    assert trivial.ok and trivial.outer == poly and trivial.linear_part.is_zero()
    full = decompose_with(poly, xq_minus_x_linearized(F9))
    assert not full.ok
    assert full.remainder == parse_poly("x^3-x", F9) % xq_minus_x_linearized(F9).to_poly() \
        or not full.remainder.is_zero()
    affine = decompose_with(parse_poly("x^3+x+1", F9), xq_minus_x_linearized(F9))
    assert affine.ok
    with pytest.raises(PreconditionError):
        decompose_with(poly, is_linearized(parse_poly("x^3", F9)))  # x^3 splits nowhere


def test_degree_at_least_q_reduces_first():
    poly = parse_poly("x^9+x^3", F9)  # acts like x + x^3, additive
    assert additive_index(poly) == 0
    dec = maximal_decomposition(poly)
    assert dec.poly == parse_poly("x^3+x", F9)
    assert dec.compose() == dec.poly
    # a degree >= q input that collapses to a constant map
    zero_map = parse_poly("x^4+x", F4)
    assert additive_kernel(zero_map).is_full()
    dec = maximal_decomposition(zero_map)
    assert dec.poly.is_zero() and dec.index == 0


def test_multiplicative_index_examples():
    assert multiplicative_index(parse_poly("3*x^7+1", F16)) == 1
    assert multiplicative_index(parse_poly("x^5+x^3", F16)) == 15
    assert multiplicative_index(parse_poly("x^3+x", F9)) == 4
    with pytest.raises(PreconditionError):
        multiplicative_index(Poly.one(F9))


def test_kernel_method_agreement_sample():
    rng = random.Random(37)
    for field in (F8, F9, F16, F27):
        for _ in range(50):
            poly = rand_poly(rng, field, 12)
            assert additive_kernel(poly, "gcd") == additive_kernel(poly, "brute")
