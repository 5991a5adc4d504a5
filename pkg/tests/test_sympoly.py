"""Polynomials in n variables: expanded monomial form, the symmetric
m-basis, and the exact structural operations both support."""

import random
from fractions import Fraction

import pytest

import jackideal.sympoly as sympoly
from jackideal.ratfunc import BETA, BetaPoly
from jackideal.sympoly import (ExpandedPoly, MSymPoly, NotSymmetric,
                               TermBudgetExceeded, distinct_permutations,
                               orbit_exponents, orbit_size, power_sum)


def rand_expanded(rng, n, deg, nterms=4):
    p = ExpandedPoly.zero(n)
    for _ in range(nterms):
        e = tuple(rng.randint(0, deg) for _ in range(n))
        p = p + ExpandedPoly.monomial(n, e, rng.randint(-5, 5))
    return p


def rand_symmetric(rng, n, deg):
    q = MSymPoly.zero(n)
    for _ in range(3):
        lam = tuple(sorted((rng.randint(0, deg) for _ in range(n)),
                           reverse=True))
        lam = tuple(x for x in lam if x)
        q = q + MSymPoly.monomial_sym(n, lam, rng.randint(-4, 4))
    return q


def test_distinct_permutations():
    assert sorted(distinct_permutations((1, 1, 0))) == [
        (0, 1, 1), (1, 0, 1), (1, 1, 0)]
    assert list(distinct_permutations((2, 2))) == [(2, 2)]
    rng = random.Random(3)
    for _ in range(20):
        seq = tuple(rng.randint(0, 2) for _ in range(5))
        got = list(distinct_permutations(seq))
        assert len(got) == len(set(got))
        import itertools
        assert set(got) == set(itertools.permutations(seq))


def test_orbit_size():
    assert orbit_size((2, 1), 3) == 6
    assert orbit_size((1, 1), 3) == 3
    assert orbit_size((), 4) == 1
    assert orbit_size((3, 3, 3), 3) == 1
    assert len(orbit_exponents((2, 1), 3)) == 6


def test_monomial_sym_expansion():
    m = MSymPoly.monomial_sym(2, (2, 1)).to_expanded()
    assert m.terms == {(2, 1): 1, (1, 2): 1}
    m = MSymPoly.monomial_sym(3, (2,)).to_expanded()
    assert m.terms == {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}
    assert MSymPoly.monomial_sym(3, ()).to_expanded().terms == {(0, 0, 0): 1}


def test_expanded_msym_roundtrip():
    rng = random.Random(9)
    for _ in range(25):
        n = rng.randint(1, 4)
        q = rand_symmetric(rng, n, 4)
        assert q.to_expanded().to_msym() == q


def test_to_msym_rejects_asymmetric():
    p = ExpandedPoly.monomial(2, (2, 1))
    with pytest.raises(NotSymmetric):
        p.to_msym()
    assert not p.is_symmetric()
    assert (p + ExpandedPoly.monomial(2, (1, 2))).is_symmetric()


def test_multiplication_against_evaluation():
    rng = random.Random(17)
    for _ in range(30):
        n = rng.randint(1, 3)
        a = rand_expanded(rng, n, 3)
        b = rand_expanded(rng, n, 3)
        pt = [Fraction(rng.randint(-3, 3), rng.randint(1, 3))
              for _ in range(n)]
        assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
        assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)


def test_msym_multiply_is_symmetric_product():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randint(1, 4)
        a = rand_symmetric(rng, n, 3)
        b = rand_symmetric(rng, n, 3)
        assert a.multiply(b).to_expanded() == a.to_expanded() * b.to_expanded()


def test_m_times_m_oracle():
    # m_(1) * m_(1) = m_(2) + 2 m_(1,1) in any n >= 2
    a = MSymPoly.monomial_sym(3, (1,))
    prod = a.multiply(a)
    assert prod == MSymPoly(3, {(2,): 1, (1, 1): 2})


def test_partial_and_mul_var():
    p = ExpandedPoly.monomial(2, (3, 1), 2)    # 2 x^3 y
    assert p.partial(1).terms == {(2, 1): 6}
    assert p.partial(2).terms == {(3, 0): 2}
    assert p.mul_var(2).terms == {(3, 2): 2}
    assert p.mul_var(1, 2).terms == {(5, 1): 2}
    assert ExpandedPoly.one(2).partial(1).is_zero()


def test_swap_and_divided_difference():
    p = ExpandedPoly.monomial(2, (3, 1))
    assert p.swap(1, 2).terms == {(1, 3): 1}
    # (x^3 y - x y^3)/(x - y) = x y (x + y)
    dd = p.divided_difference(1, 2)
    assert dd.terms == {(2, 1): 1, (1, 2): 1}
    # antisymmetric input: division is exact with no remainder term
    q = ExpandedPoly.monomial(2, (1, 0)) - ExpandedPoly.monomial(2, (0, 1))
    assert q.divided_difference(1, 2).terms == {(0, 0): 2}


def test_divided_difference_matches_rational_quotient():
    # evaluate (P - KP)/(x_i - x_j) at random points with x_i != x_j
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(2, 4)
        p = rand_expanded(rng, n, 3)
        i, j = rng.sample(range(1, n + 1), 2)
        dd = p.divided_difference(i, j)
        pt = [Fraction(rng.randint(-4, 4), rng.randint(1, 3))
              for _ in range(n)]
        if pt[i - 1] == pt[j - 1]:
            continue
        swapped = list(pt)
        swapped[i - 1], swapped[j - 1] = swapped[j - 1], swapped[i - 1]
        want = (p.evaluate(pt) - p.evaluate(swapped)) / (pt[i - 1] - pt[j - 1])
        assert dd.evaluate(pt) == want


def test_substitute_coincident():
    # m_(1,1) in 2 vars under x1 = x2 = t becomes t^2
    m = MSymPoly.monomial_sym(2, (1, 1))
    sub = m.substitute_coincident(2)
    assert sub.n == 1 and sub.terms == {(2,): 1}
    # power sums survive with multiplicity
    p2 = power_sum(2, 3).to_expanded().substitute_coincident(2)
    assert p2.terms == {(2, 0): 2, (0, 2): 1}
    with pytest.raises(ValueError):
        m.substitute_coincident(3)


def test_restrict_last():
    q = MSymPoly(3, {(2, 1): 1, (1, 1, 1): 5})
    low = q.restrict_last()
    assert low.n == 2 and low.terms == {(2, 1): 1}
    e = ExpandedPoly.monomial(2, (2, 0)) + ExpandedPoly.monomial(2, (1, 1))
    r = e.restrict_last()
    assert r.n == 1 and r.terms == {(2,): 1}


def test_homogeneous_components_and_degree():
    q = MSymPoly(2, {(2,): 1, (1,): 3, (): 7})
    comps = q.homogeneous_components()
    assert sorted(comps) == [0, 1, 2]
    assert comps[1] == MSymPoly(2, {(1,): 3})
    assert q.degree() == 2
    assert MSymPoly.zero(2).degree() == -1


def test_beta_coefficients_supported():
    # generic-coupling coefficients flow through products unharmed
    q = MSymPoly(2, {(1,): BETA})
    prod = q.multiply(q)
    assert prod == MSymPoly(2, {(2,): BETA * BETA, (1, 1): 2 * BETA * BETA})
    assert prod.map_coeffs(lambda c: c(Fraction(2))) == MSymPoly(
        2, {(2,): 4, (1, 1): 8})


def test_power_sum():
    assert power_sum(3, 2).to_expanded().terms == {(3, 0): 1, (0, 3): 1}
    with pytest.raises(ValueError):
        power_sum(0, 2)


def test_term_budget_guard():
    old = sympoly.TERM_BUDGET
    sympoly.TERM_BUDGET = 10
    try:
        a = rand_expanded(random.Random(1), 3, 4, nterms=6)
        with pytest.raises(TermBudgetExceeded):
            for _ in range(5):
                a = a * a
    finally:
        sympoly.TERM_BUDGET = old


def test_serialization_roundtrip():
    rng = random.Random(41)
    for _ in range(10):
        q = rand_symmetric(rng, 3, 4)
        assert MSymPoly.from_obj(q.to_obj()) == q
        e = q.to_expanded()
        assert ExpandedPoly.from_obj(e.to_obj()) == e
    q = MSymPoly(2, {(1,): BETA / (BETA + 1)})
    assert MSymPoly.from_obj(q.to_obj()) == q
