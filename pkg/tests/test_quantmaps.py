from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from finequant import (CriticalValueError, DiffOp, FSym, SuperPoly, act_classical, alpha,
                       basis_symbols, c_kr, casimir, critical_report, delta_op, div_c, div_t,
                       h_symbol, lie_derivative, lift, n_sd, q_sl, quantize,
                       quantize_via_casimir, sigma_aff, sq_map, superdimension, to_canonical)
from finequant.errors import OrderError
from finequant.quantmaps import (C_CRIT, C_PRIME, I_DELTA, admissible_k, enumerate_critical,
                                 half_integers, p_crit)

from conftest import DELTA, LAM, MU

n = 3
m = superdimension(n)
half = Fraction(1, 2)
x = SuperPoly.x(n)
one = SuperPoly.const(n)


def sym(delta=DELTA, **kw):
    return FSym.monomial(n, delta=delta, **kw)


deltas = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))


# -- alpha and the critical sets -----------------------------------------------------

@given(deltas, st.integers(-4, 2))
def test_alpha_at_zero_bigrade(delta, m_):
    assert alpha(0, 0, m_, delta) == half * delta * (2 * delta - m_ - 1)


def test_alpha_examples():
    assert alpha(2, 1, -2, 0) == 0
    assert alpha(1, 1, -2, 0) == half


def test_half_integers_and_admissible_k():
    assert half_integers(Fraction(3, 2)) == [0, half, 1, Fraction(3, 2)]
    assert list(admissible_k(Fraction(3, 2))) == [2, 3]
    assert list(admissible_k(0)) == [0]


@given(deltas)
def test_alpha_difference_is_linear_in_delta(delta):
    for d in half_integers(2):
        for k in admissible_k(d):
            for dp in half_integers(2):
                for kp in admissible_k(dp):
                    diff = [alpha(k, d, m, t) - alpha(kp, dp, m, t) for t in (0, 1, delta)]
                    assert diff[2] == diff[0] + delta * (diff[1] - diff[0])


def test_c_crit_values_are_casimir_collisions():
    for name, value, w in enumerate_critical(n, 4, 2):
        if name == C_CRIT:
            assert alpha(w["k"], w["d"], m, value) == alpha(w["kp"], w["dp"], m, value)
            p = p_crit(w["k"], w["kp"], w["d"], w["dp"], m)
            assert value == Fraction(p, 4 * (w["d"] - w["dp"]))
        elif name == I_DELTA:
            assert value == Fraction(2 * w["c"] - w["j"], 2)
        else:
            assert value == Fraction(2 * w["k"] - w["i"] + m, 2)


def test_critical_report_examples():
    r = critical_report(0, n, 2, 1)
    assert r.critical
    assert (I_DELTA, {"d": half, "c": 0, "j": 0}) in r.hits
    for k_max, d_max in [(1, half), (2, 1), (4, 2), (6, 3)]:
        assert not critical_report(DELTA, n, k_max, d_max).critical


def test_critical_report_witnesses_reproduce_delta():
    for delta in [Fraction(-1, 2), Fraction(1, 4), Fraction(3, 2), Fraction(1)]:
        r = critical_report(delta, n, 4, 2)
        for name, w in r.hits:
            if name == C_PRIME:
                assert Fraction(2 * w["k"] - w["i"] + m, 2) == delta
            elif name == I_DELTA:
                assert Fraction(2 * w["c"] - w["j"], 2) == delta
            else:
                assert alpha(w["k"], w["d"], m, delta) == alpha(w["kp"], w["dp"], m, delta)


# -- c_kr, SQ, Q^sl ------------------------------------------------------------------

@given(deltas, deltas)
def test_c_kr_examples(lam, delta):
    assert c_kr(3, 0, lam, delta, m) == 1
    if m + 1 - 2 * delta != 0:
        assert c_kr(1, 1, lam, delta, m) == 2 * lam / (m + 1 - 2 * delta)
    if m + 3 - 2 * delta != 0:
        assert c_kr(2, 1, 0, delta, m) == 1 / (m + 3 - 2 * delta)


def test_c_kr_critical_denominator():
    with pytest.raises(CriticalValueError) as info:
        c_kr(1, 1, LAM, Fraction(m + 1, 2), m)
    assert info.value.witness == (C_PRIME, {"k": 1, "i": 1})


def test_sq_map_examples():
    S = sym(thetas=(1,), zexp=1)
    assert sq_map(S) == S + sym(moments=(1,)).scale(1 / (2 * (1 - DELTA)))
    free = sym(xexp=1, thetas=(2,), moments=(1, 3))
    assert sq_map(free) == free


def test_sq_map_a1_coefficient():
    for S in basis_symbols(n, d_max=2, delta=DELTA):
        k, d = S.bigrade()
        lower = sq_map(S) - S
        # the a = 1 term is the only one one half-step below d
        picked = lower.scale(0)
        for (_, dd), part in lower.components().items():
            if dd == d - half:
                picked = picked + part
        assert picked == delta_op(S).scale(1 / (2 * (2 * d - k - DELTA)))


def test_sq_map_critical_witness():
    with pytest.raises(CriticalValueError) as info:
        sq_map(sym(delta=1, thetas=(1,), zexp=1))
    assert info.value.witness[0] == I_DELTA


def test_q_sl_examples():
    g = x * x + SuperPoly.monomial(n, 1, (1, 2), 3)
    S = FSym.from_superpoly(g, DELTA)
    assert q_sl(S, LAM, MU) == DiffOp.multiplication(g, LAM, MU)
    assert q_sl(sym(delta=0, zexp=1), 0, DELTA) == DiffOp.monomial(n, 1, (), None, 0, DELTA)


def test_q_sl_equivariance_on_zeta_squared():
    S = sym(zexp=2)
    Q = q_sl(S, LAM, MU)
    x2 = x * x
    assert lie_derivative(x2, Q) == q_sl(act_classical(x2, S), LAM, MU)


def test_q_sl_keeps_principal_symbol():
    for S in basis_symbols(n, k_max=3, delta=DELTA)[::7]:
        k = S.degree()
        top = sigma_aff(q_sl(S, LAM, MU)).degree_parts()[k]
        assert top == to_canonical(S)


# -- quantize ------------------------------------------------------------------------

def test_quantize_examples():
    g = x * SuperPoly.theta(n, 2)
    assert quantize(FSym.from_superpoly(g), LAM, MU) == DiffOp.multiplication(g, LAM, MU)
    S = sym(moments=(1, 2))
    assert quantize(S, LAM, MU) == q_sl(to_canonical(S), LAM, MU)


def test_quantize_normalization():
    S = sym(thetas=(1,), zexp=1)
    assert h_symbol(quantize(S, LAM, MU), 1) == S


def test_quantize_reports_critical_witness():
    with pytest.raises(CriticalValueError) as info:
        quantize(sym(moments=(1, 2)), LAM, LAM)
    assert info.value.witness == (I_DELTA, {"c": 0, "j": 0, "d": 1})


def test_quantize_via_casimir_examples():
    g = FSym.from_superpoly(x)
    assert quantize_via_casimir(g, LAM, MU) == lift(g.with_delta(DELTA), LAM)
    S = sym(thetas=(1,), zexp=1)
    Q = quantize_via_casimir(S, LAM, MU)
    assert Q == quantize(S, LAM, MU)
    assert casimir("operators", Q) == Q.scale(alpha(1, 1, m, DELTA))


def test_quantize_via_casimir_singular_system():
    S = sym(thetas=(1,), zexp=1)
    with pytest.raises(CriticalValueError) as info:
        quantize_via_casimir(S, LAM, LAM + 1)
    assert info.value.witness == (C_CRIT, {"k": 1, "d": 1, "kp": 1, "dp": half})


# -- Casimir -------------------------------------------------------------------------

def test_casimir_fine_and_classical():
    for S in basis_symbols(n, d_max=1, delta=DELTA):
        k, d = S.bigrade()
        C = casimir("fine", S)
        assert C == S.scale(alpha(k, d, m, DELTA))
        assert casimir("classical", S) == C + delta_op(S).scale(half)


def test_casimir_is_linear():
    S = sym(xexp=1, zexp=1) + sym(thetas=(1,), moments=(2,))
    assert casimir("fine", S) == casimir("fine", sym(xexp=1, zexp=1)) + \
        casimir("fine", sym(thetas=(1,), moments=(2,)))


def test_casimir_unknown_representation():
    with pytest.raises(ValueError):
        casimir("adjoint", sym(zexp=1))


def test_n_sd_examples():
    assert n_sd(sym(xexp=1, thetas=(1,)), LAM) == sym(xexp=1, thetas=(1,)).scale(0)
    S = sym(xexp=1, zexp=1, moments=(1,))
    assert n_sd(S, Fraction(-1, 2)) == S.scale(0)
    expected = (div_c(S).scale(2) + div_t(S)).scale((2 * LAM + 1) / 2)
    assert n_sd(S, LAM) == expected
    assert expected == (sym(moments=(1,)).scale(2) + div_t(S)).scale((2 * LAM + 1) / 2)
    with pytest.raises(OrderError):
        n_sd(sym(zexp=1) + sym(zexp=2), LAM)
