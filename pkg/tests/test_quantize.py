import itertools
import random
from fractions import Fraction

import pytest

from orbitstar.envelope import NCPoly
from orbitstar.orbit import sphere_orbit
from orbitstar.poly import CPoly, monomials_up_to
from orbitstar.quantize import (
    bn_coefficient,
    check_deformation_axioms,
    gauge_step,
    pbw_basis_product,
    sym_inverse,
    symmetrize,
    symmetrizer_product,
)
from orbitstar.scalars import H, H_ONE, HPoly


def brute_symmetrize(L, exps):
    """Average over all p! orderings; oracle for the multiset version."""
    letters = [i for i, e in enumerate(exps) for _ in range(e)]
    total = NCPoly.zero(L)
    count = 0
    for perm in itertools.permutations(letters):
        total = total + NCPoly.word(L, perm)
        count += 1
    return (total * Fraction(1, count)).normal_form()


def test_symmetrize_against_permutation_oracle(su2):
    for exps in monomials_up_to(3, 4):
        mono = CPoly.monomial(3, exps)
        assert symmetrize(su2, mono) == brute_symmetrize(su2, exps)


def test_symmetrize_goldens(su2, xyz):
    x, y, z = xyz
    assert symmetrize(su2, x * y) == NCPoly(
        su2, {(0, 1): H_ONE, (2,): H * Fraction(-1, 2)}
    )
    assert symmetrize(su2, x * x) == NCPoly.word(su2, (0, 0))


def test_symmetrized_invariant_is_central(su2, casimir_poly, casimir_word):
    P = symmetrize(su2, casimir_poly)
    assert P == casimir_word
    assert P.is_central()


def test_symmetrize_is_degree_graded(su2):
    for exps in monomials_up_to(3, 5):
        if sum(exps) == 0:
            continue
        img = symmetrize(su2, CPoly.monomial(3, exps))
        assert img.is_graded_homogeneous()
        assert img.graded_degree() == sum(exps)


def test_sym_inverse_goldens(su2, xyz):
    x, y, z = xyz
    assert sym_inverse(su2, NCPoly.word(su2, (0, 1))) == x * y + z * (
        H * Fraction(1, 2)
    )
    assert sym_inverse(su2, NCPoly.word(su2, (0, 0))) == x * x


def test_sym_roundtrip_random(su2):
    rng = random.Random(21)
    monos = monomials_up_to(3, 5)
    for _ in range(20):
        f = CPoly.zero(3)
        for _ in range(4):
            f = f + CPoly.monomial(
                3, rng.choice(monos), HPoly([rng.randint(-3, 3), rng.randint(-1, 1)])
            )
        assert sym_inverse(su2, symmetrize(su2, f)) == f


def test_star_goldens(su2, xyz):
    x, y, z = xyz
    star = symmetrizer_product(su2)
    assert star.star(x, y) == x * y + z * (H * Fraction(1, 2))
    assert star.star(x, y) - star.star(y, x) == z * H
    assert star.star(CPoly.one(3), x * y + z) == x * y + z


def test_bn_goldens(su2, xyz):
    x, y, z = xyz
    star = symmetrizer_product(su2)
    assert bn_coefficient(star, x, y, 1) == z * Fraction(1, 2)
    assert bn_coefficient(star, x * y, y, 0) == x * y * y
    assert (
        bn_coefficient(star, x, y, 1) - bn_coefficient(star, y, x, 1) == z
    )


def test_bn_vanishes_beyond_total_degree(su2):
    # grading: every h power is traded for one polynomial degree, so the
    # h-degree of f*g never exceeds deg f + deg g
    star = symmetrizer_product(su2)
    rng = random.Random(22)
    monos = monomials_up_to(3, 4)
    for _ in range(15):
        e1, e2 = rng.choice(monos), rng.choice(monos)
        f, g = CPoly.monomial(3, e1), CPoly.monomial(3, e2)
        total = sum(e1) + sum(e2)
        for n in (total + 1, total + 2):
            assert star.bn(f, g, n).is_zero()


def test_bn_can_exceed_left_degree(su2, xyz):
    # the h-degree is not bounded by deg f alone: B2(x, y^2) = -x/6
    x, y, _ = xyz
    star = symmetrizer_product(su2)
    assert star.bn(x, y * y, 2) == x * Fraction(-1, 6)


def test_bn_requires_h_free(su2, xyz):
    star = symmetrizer_product(su2)
    with pytest.raises(ValueError):
        star.bn(xyz[0] * H, xyz[1], 1)


def test_axiom_checker_passes(su2):
    report = check_deformation_axioms(symmetrizer_product(su2), 3, assoc_degree=3)
    assert report["passed"]
    assert report["failures"] == []


def test_axiom_checker_catches_fault(su2):
    x = CPoly.variable(3, 0)
    good = symmetrizer_product(su2)
    from orbitstar.quantize import StarProduct, sym_inverse as inv, symmetrize as fwd

    broken = StarProduct(
        su2,
        lambda f: fwd(su2, f),
        lambda u: inv(su2, u) + x,  # corrupted inverse
        name="broken",
    )
    report = check_deformation_axioms(broken, 2, assoc_degree=0)
    assert not report["passed"]
    assert any(f["property"] == "product-mod-h" for f in report["failures"])


def test_pbw_product_roundtrip(su2):
    star = pbw_basis_product(su2)
    f = CPoly.monomial(3, (1, 2, 0)) + CPoly.monomial(3, (0, 0, 1))
    assert star.backward(star.forward(f)) == f


def test_gauge_step_identity(su2):
    star = symmetrizer_product(su2)
    res = gauge_step(star, star, 1, 3)
    assert res["feasible"]
    assert all(v.is_zero() for v in res["operator"].values())


def _apply(images, f):
    out = CPoly.zero(f.nvars)
    for exps, c in f.terms.items():
        out = out + images[exps] * c
    return out


def test_gauge_step_sym_vs_pbw(su2):
    star_s = symmetrizer_product(su2)
    pbw = pbw_basis_product(su2)
    res = gauge_step(star_s, pbw, 1, 3)
    assert res["feasible"]
    T1 = res["operator"]
    assert any(not v.is_zero() for v in T1.values())
    # the found operator must intertwine the products at first order
    for e1 in star_s.monomial_basis(3):
        for e2 in star_s.monomial_basis(3):
            if sum(e1) + sum(e2) > 3:
                continue
            a, b = CPoly.monomial(3, e1), CPoly.monomial(3, e2)
            lhs = _apply(T1, star_s.bn(a, b, 0)) + star_s.bn(a, b, 1)
            rhs = pbw.bn(a, b, 1) + _apply(T1, a) * b + a * _apply(T1, b)
            assert lhs == rhs


def test_gauge_step_orbit_lifts(su2):
    # same level, different lifts: outcome is recorded, and when a solution
    # comes back it must actually satisfy the order-1 equations
    orb_a = sphere_orbit(1)
    orb_b = sphere_orbit(1, lift=H_ONE + H)
    star_a, star_b = orb_a.star_product(), orb_b.star_product()
    res = gauge_step(star_a, star_b, 1, 2)
    assert res["order"] == 1
    if res["feasible"]:
        T1 = res["operator"]
        for e1 in star_a.monomial_basis(2):
            for e2 in star_a.monomial_basis(2):
                if sum(e1) + sum(e2) > 2:
                    continue
                a = CPoly.monomial(3, e1)
                b = CPoly.monomial(3, e2)
                lhs = _apply(T1, star_a.bn(a, b, 0)) + star_a.bn(a, b, 1)
                rhs = (
                    star_b.bn(a, b, 1)
                    + star_b.bn(_apply(T1, a), b, 0)
                    + star_b.bn(a, _apply(T1, b), 0)
                )
                assert lhs == rhs
    else:
        assert res["witness_pair"] is not None


def test_gauge_step_rejects_bad_partial(su2):
    star_s = symmetrizer_product(su2)
    pbw = pbw_basis_product(su2)
    # a wrong T_1 cannot make the products agree at order h
    basis = star_s.monomial_basis(2)
    bogus = {e: CPoly.monomial(3, e) for e in basis}  # T_1 = Id, not a fix
    with pytest.raises(ValueError):
        gauge_step(star_s, pbw, 2, 2, t_partial=[bogus])
