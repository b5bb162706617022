from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import assume, given, settings, strategies as st

from finequant import (DiffOp, FSym, SuperPoly, act_fine, apply, compose, density_action,
                       fine_symbol, from_canonical_basis, h_symbol, lagrange, lie_derivative,
                       lift, orders, principal_symbol, spo_basis, to_canonical_basis)
from finequant.diffops import CANONICAL_BASIS
from finequant.errors import OrderError, ParityError, WeightMismatchError

from conftest import _subsets, superpolys

n = 3
x = SuperPoly.x(n)
one = SuperPoly.const(n)
t = [None] + [SuperPoly.theta(n, i) for i in range(1, n + 1)]


def op(c=0, K=(), coef=None, lam=0, mu=None, basis="dbar"):
    return DiffOp.monomial(n, c, K, coef, lam, mu, basis)


def sym(**kw):
    return FSym.monomial(n, **kw)


@st.composite
def diffops(draw, parity=None, lam=0, mu=0, max_terms=3):
    out = DiffOp(n, None, lam, mu)
    for _ in range(draw(st.integers(1, max_terms))):
        c = draw(st.integers(0, 2))
        K = draw(st.sampled_from(_subsets(n, None)))
        cpar = None if parity is None else (parity + len(K)) % 2
        A = draw(superpolys(n, parity=cpar, max_terms=2, max_x=2))
        out = out + DiffOp.monomial(n, c, K, A, lam, mu)
    return out


monomials = [SuperPoly.monomial(n, a, T) for a in range(4) for T in _subsets(n, None)
             if a + len(T) <= 3]


# -- examples ------------------------------------------------------------------------

def test_apply_examples():
    assert apply(op(1), x * x) == x.scale(2)
    assert apply(op(0, (1,), t[1]), x) == 0
    assert apply(op(0, (1, 2)), t[2] * t[1]) == apply(op(0, (1,)), apply(op(0, (2,)), t[2] * t[1]))


def test_compose_examples():
    D1, D2 = op(0, (1,)), op(0, (2,))
    assert compose(D1, D1) == op(1).scale(-1)
    assert compose(D1, D2) + compose(D2, D1) == DiffOp(n)
    theta1 = DiffOp.multiplication(t[1])
    assert compose(D1, theta1) == DiffOp.identity(n) - op(0, (1,), t[1])


def test_compose_weight_chain():
    A = op(1, lam=Fraction(1, 3), mu=Fraction(1, 2))
    B = op(0, (1,), lam=0, mu=Fraction(1, 3))
    C = compose(A, B)
    assert (C.lam, C.mu) == (0, Fraction(1, 2))
    with pytest.raises(WeightMismatchError):
        compose(B, A)


def test_lie_derivative_examples():
    assert lie_derivative(one, op(1)) == DiffOp(n)
    assert lie_derivative(x, DiffOp.identity(n, Fraction(2, 7))) == DiffOp(n, None, Fraction(2, 7),
                                                                            Fraction(2, 7))
    D = op(0, (2,), lam=Fraction(1, 3), mu=Fraction(1, 3))
    L = lie_derivative(t[1], D)
    lam = Fraction(1, 3)
    for g in monomials:
        expected = density_action(t[1], lam, apply(D, g)) + apply(D, density_action(t[1], lam, g))
        assert apply(L, g) == expected


def test_lie_derivative_mixed_parity():
    with pytest.raises(ParityError):
        lie_derivative(x + t[1], op(1))


def test_orders_examples():
    assert orders(op(1)) == (1, 1)
    assert orders(op(0, (1,))) == (1, Fraction(1, 2))
    assert orders(op(1, (1, 2))) == (3, 2)
    with pytest.raises(OrderError):
        orders(DiffOp(n))


def test_fine_symbol_examples():
    assert fine_symbol(op(1) + op(0, (1,)), 1, 1) == sym(zexp=1)
    assert fine_symbol(op(0, (1, 2)), 2, 1) == sym(moments=(1, 2))
    assert fine_symbol(DiffOp.multiplication(x), 0, 0) == sym(xexp=1)
    with pytest.raises(OrderError):
        fine_symbol(op(2), 1, 1)


def test_h_symbol_examples():
    assert h_symbol(op(1) + op(0, (1, 2)), 1) == sym(zexp=1) + sym(moments=(1, 2))
    assert h_symbol(DiffOp.multiplication(x * t[1]), 0) == sym(xexp=1, thetas=(1,))
    assert h_symbol(op(0, (1,)), 1) == FSym(n)
    with pytest.raises(OrderError):
        h_symbol(op(2), 1)


def test_principal_symbol_keeps_top_order():
    D = op(1, (1,), x) + op(0, (1, 2)) + op(1)
    assert principal_symbol(D, 2) == sym(xexp=1, zexp=1, moments=(1,)) + sym(moments=(1, 2))


def test_canonical_basis_examples():
    dt = [None] + [op(0, (i,), basis=CANONICAL_BASIS) for i in (1, 2, 3)]
    dx = op(1, basis=CANONICAL_BASIS)
    shift = [None] + [DiffOp.monomial(n, 1, (), t[i], basis=CANONICAL_BASIS) for i in (1, 2, 3)]
    assert to_canonical_basis(op(0, (1,))) == dt[1] - shift[1]
    assert to_canonical_basis(op(1)) == dx
    expected = compose(dt[1] - shift[1], dt[2] - shift[2])
    assert to_canonical_basis(op(0, (1, 2))) == expected


def test_printing():
    D = op(2, (), t[1] * t[2]) + op(1, (1,), t[2]) + op(0, (1, 2))
    assert str(D) == "(t1*t2)*dx^2 + (t2)*dx*D1 + D1*D2"


# -- properties ----------------------------------------------------------------------

@given(diffops(), diffops(), superpolys(n))
def test_compose_matches_apply(D1, D2, g):
    assert apply(compose(D1, D2), g) == apply(D1, apply(D2, g))


@settings(max_examples=25)
@given(diffops(max_terms=2), diffops(max_terms=2), diffops(max_terms=2))
def test_compose_associative(A, B, C):
    assert compose(compose(A, B), C) == compose(A, compose(B, C))


@given(diffops())
def test_canonical_round_trip(D):
    C = to_canonical_basis(D)
    assert from_canonical_basis(C) == D
    for g in monomials[:12]:
        assert apply(C, g) == apply(D, g)


@settings(max_examples=25)
@given(diffops(parity=0, lam=Fraction(1, 3), mu=Fraction(5, 6)) |
       diffops(parity=1, lam=Fraction(1, 3), mu=Fraction(5, 6)))
def test_lie_derivative_is_the_supercommutator_of_actions(D):
    lam, mu = Fraction(1, 3), Fraction(5, 6)
    for e in spo_basis(n):
        f = e.hamiltonian
        L = lie_derivative(f, D)
        sign = (-1) ** (f.parity * D.parity)
        for g in monomials[::5]:
            expected = density_action(f, mu, apply(D, g)) - apply(D, density_action(f, lam, g)).scale(sign)
            assert apply(L, g) == expected


@settings(max_examples=8)
@given(diffops(parity=0, lam=Fraction(1, 3), mu=Fraction(5, 6), max_terms=2))
def test_lie_derivative_is_an_action(D):
    b = spo_basis(n)
    for e1 in b:
        for e2 in b:
            f, g = e1.hamiltonian, e2.hamiltonian
            sign = (-1) ** (f.parity * g.parity)
            lhs = lie_derivative(f, lie_derivative(g, D)) - lie_derivative(g, lie_derivative(f, D)).scale(sign)
            assert lhs == lie_derivative(lagrange(f, g), D)


@given(diffops(parity=0) | diffops(parity=1))
def test_lie_derivative_preserves_filtrations(D):
    assume(D)
    k, d = orders(D)
    for e in spo_basis(n):
        L = lie_derivative(e.hamiltonian, D)
        if L:
            k2, d2 = orders(L)
            assert k2 <= k and d2 <= d


def test_fine_symbol_equivariance_on_lifts():
    delta = Fraction(13, 7)
    for K in list(combinations(range(1, n + 1), 2)) + [(1,)]:
        for c in range(2):
            S = FSym.monomial(n, 1, (2,), c, K, delta=delta)
            (k, d), = S.components()
            D = lift(S, Fraction(1, 3))
            for e in spo_basis(n):
                assert fine_symbol(lie_derivative(e.hamiltonian, D), k, d) == act_fine(e.hamiltonian, S)
