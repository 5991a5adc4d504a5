"""Differential and difference operators: Dunkl, Cherednik, Sekiguchi,
the Hamiltonian, and the graded families p, l, w."""

import random
from fractions import Fraction

import pytest

from jackideal.operators import (OperatorTag, apply_cherednik, apply_dunkl,
                                 apply_dunkl_power, apply_exchange,
                                 apply_hamiltonian, apply_l,
                                 apply_sekiguchi, apply_w,
                                 expanded_power_sum, verify_commutators)
from jackideal.partitions import (cs_eigenvalue, partitions_leq,
                                  sekiguchi_eigenvalue)
from jackideal.ratfunc import BETA, BetaPoly
from jackideal.sympoly import ExpandedPoly, MSymPoly, NotSymmetric

HALF = Fraction(1, 2)


def rand_expanded(rng, n, deg, nterms=4):
    p = ExpandedPoly.zero(n)
    for _ in range(nterms):
        e = tuple(rng.randint(0, deg) for _ in range(n))
        p = p + ExpandedPoly.monomial(n, e, rng.randint(-5, 5))
    return p


def test_dunkl_on_monomial():
    # nabla_1 x^2 = 2x + beta (x^2 - y^2)/(x - y) = 2x + beta (x + y)
    p = ExpandedPoly.monomial(2, (2, 0))
    got = apply_dunkl(p, 1, BETA)
    want = {(1, 0): BetaPoly((2, 1)), (0, 1): BETA}
    assert got == ExpandedPoly(2, want)
    # and on a symmetric input at a rational coupling
    q = MSymPoly.monomial_sym(2, (1, 1)).to_expanded()
    got = apply_dunkl(q, 1, HALF)
    assert got.terms == {(0, 1): 1}


def test_dunkl_operators_commute_on_samples():
    rng = random.Random(5)
    for _ in range(15):
        n = 3
        p = rand_expanded(rng, n, 3)
        a = apply_dunkl(apply_dunkl(p, 1, BETA), 2, BETA)
        b = apply_dunkl(apply_dunkl(p, 2, BETA), 1, BETA)
        assert a == b


def test_dunkl_power():
    rng = random.Random(6)
    p = rand_expanded(rng, 2, 3)
    assert apply_dunkl_power(p, 1, 2, HALF) == apply_dunkl(
        apply_dunkl(p, 1, HALF), 1, HALF)
    assert apply_dunkl_power(p, 1, 0, HALF) == p


def test_cherednik_alternative_form():
    # x_i nabla_i + beta sum_{j>i} K_ij equals the sweep the solver uses
    rng = random.Random(8)
    for _ in range(12):
        n = rng.randint(2, 3)
        p = rand_expanded(rng, n, 3)
        i = rng.randint(1, n)
        direct = apply_dunkl(p, i, BETA).mul_var(i)
        for j in range(i + 1, n + 1):
            direct = direct + BETA * apply_exchange(p, i, j)
        assert apply_cherednik(p, i, BETA) == direct


def test_hamiltonian_m2_row_oracle():
    # H m_(2) = (4 + 2 beta) m_(2) + 4 beta m_(1,1) at n = 2
    q = MSymPoly.monomial_sym(2, (2,))
    got = apply_hamiltonian(q, BETA)
    assert got == MSymPoly(2, {(2,): BetaPoly((4, 2)),
                               (1, 1): BetaPoly((0, 4))})
    # diagonal entries are the CS eigenvalues
    for n in (2, 3):
        for lam in [(1,), (2,), (2, 1)]:
            row = apply_hamiltonian(MSymPoly.monomial_sym(n, lam), BETA)
            assert row.terms[lam] == cs_eigenvalue(lam, n)


def test_hamiltonian_rejects_asymmetric():
    p = ExpandedPoly.monomial(2, (2, 1))
    with pytest.raises(NotSymmetric):
        apply_hamiltonian(p, BETA)


def test_hamiltonian_triangular_in_dominance():
    from jackideal.partitions import dominated_by
    for lam in partitions_leq(5, 3):
        row = apply_hamiltonian(MSymPoly.monomial_sym(3, lam), BETA)
        assert all(dominated_by(mu, lam) for mu in row.terms)


def test_sekiguchi_on_constants():
    # S(u) 1 = prod_i (u + (n-i) beta) for the empty partition
    one = ExpandedPoly.one(3)
    got = apply_sekiguchi(one, BETA)
    want = sekiguchi_eigenvalue((), 3)
    assert [g.terms.get((0, 0, 0), BetaPoly(())) for g in got] == want


def test_l_operators():
    # l_m = sum x_j^{m+1} d_j ; l_0 is the Euler grading operator
    q = MSymPoly(3, {(2, 1): 5})
    assert apply_l(q, 0) == q.scale(3)
    # l_{-1} on m_(1) gives n
    assert apply_l(MSymPoly.monomial_sym(3, (1,)), -1) == MSymPoly(
        3, {(): 3})
    with pytest.raises(ValueError):
        apply_l(q, -2)


def test_l1_against_hand_expansion():
    # l_1 m_(1,1) = m_(2,1) + ... check by direct expansion at n = 2
    q = MSymPoly.monomial_sym(2, (1, 1)).to_expanded()
    got = apply_l(q, 1)
    # sum x_j^2 d_j (xy) = x^2 y + x y^2
    assert got.terms == {(2, 1): 1, (1, 2): 1}


def test_w_family():
    # w^(2)_m = sum x^{m+1} nabla: on symmetric input w2_0 acts like l_0
    q = MSymPoly.monomial_sym(2, (2,)).to_expanded()
    got = apply_w(q, 2, 0, HALF)
    # nabla_j then x_j, summed: compare against direct construction
    direct = ExpandedPoly.zero(2)
    for j in (1, 2):
        direct = direct + apply_dunkl(q, j, HALF).mul_var(j, 1)
    assert got == direct
    with pytest.raises(ValueError):
        apply_w(q, 1, 0, HALF)
    with pytest.raises(ValueError):
        apply_w(q, 3, -3, HALF)


def test_expanded_power_sum():
    assert expanded_power_sum(2, 0).terms == {(0, 0): 2}
    assert expanded_power_sum(2, 3).terms == {(3, 0): 1, (0, 3): 1}


def test_operator_tags():
    t = OperatorTag("w", -2, 3)
    assert str(t) == "w3(-2)" and t.degree_shift() == -2
    assert str(OperatorTag("p", 2)) == "p(2)"
    assert OperatorTag("l", -1).degree_shift() == -1
    q = MSymPoly.monomial_sym(2, (2,))
    assert OperatorTag("p", 1).apply(q, HALF) == q.multiply(
        MSymPoly.monomial_sym(2, (1,)))
    with pytest.raises(ValueError):
        OperatorTag("l", -2)
    with pytest.raises(ValueError):
        OperatorTag("w", -3, 3)
    with pytest.raises(ValueError):
        OperatorTag("q", 1)


def test_commutator_suite_passes():
    rep = verify_commutators(n=3, degree=4, trials=4, seed=99, tmax=3)
    assert rep.all_pass()
    assert rep.params["seed"] == 99
    ids = {c["id"] for c in rep.cases}
    assert "l-bracket[-1,2]" in ids
    assert "w2-w3-ladder" in ids
    assert "l1-p[4]" in ids


def test_commutator_suite_catches_wrong_relation():
    # sanity: a deliberately broken check cannot sneak through the harness
    rep = verify_commutators(n=2, degree=3, trials=2, seed=1, tmax=2)
    before = rep.npass
    rep.add("bogus", False, reason="forced")
    assert rep.nfail == 1 and rep.npass == before
    assert not rep.all_pass()
