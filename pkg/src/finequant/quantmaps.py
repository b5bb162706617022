"""Equivariant quantization maps, Casimir operators and critical weights."""

import math
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction

from ._graded import to_fraction
from .contactfields import spo_basis, superdimension, weight_value
from .diffops import DiffOp, lie_derivative, lift
from .errors import CriticalValueError, FlavorError, OrderError
from .finesymbols import (act_classical, act_fine, delta_op, div_c, div_symbol,
                          div_t, q_aff, to_canonical)
from .fsym import CONTACT, FSym
from .superring import SuperPoly

HALF = Fraction(1, 2)


def half_integers(upto):
    """``0, 1/2, 1, ..., upto``."""
    return [Fraction(j, 2) for j in range(int(2 * to_fraction(upto)) + 1)]


def admissible_k(d):
    """Orders ``k`` with ``ceil(d) <= k <= 2d``."""
    return range(math.ceil(d), int(2 * d) + 1)


# -- scalar formulas ----------------------------------------------------------------

def alpha(k, d, m, delta):
    """Casimir eigenvalue on fine symbols of bigrade ``(k, d)``."""
    d, delta = to_fraction(d), to_fraction(delta)
    return (k * k + 2 * (d * d - k * d) + (k - d) * (m - 2 * delta)
            + HALF * (2 * d - k) * (m + 1 - 4 * delta)
            + HALF * delta * (2 * delta - m - 1))


def c_kr(k, r, lam, delta, m):
    """Coefficient of ``Q_Aff(div^r S)`` in the projectively equivariant map."""
    lam = weight_value(lam)
    delta = weight_value(delta)
    num = Fraction(1)
    den = Fraction(math.factorial(r))
    for j in range(1, r + 1):
        num *= 2 * lam + k - j
        factor = m + 2 * k - j - 2 * delta
        if factor == 0:
            raise CriticalValueError(
                f"delta = {delta} is critical: C_{{{k},{r}}} has a zero denominator",
                ("C'", {"k": k, "i": j}))
        den *= factor
    return num / den


def p_crit(k, kp, d, dp, m):
    """Numerator of the Casimir-collision critical value."""
    return ((k - kp) * (2 * (k + kp) + m - 1) - 4 * (k * d - kp * dp)
            + 2 * (d - dp) * (2 * d + 2 * dp + 1))


# -- SQ and the projective quantization ------------------------------------------------

def sq_map(S, delta=None):
    """The Delta-series map from fine/Heisenberg symbols to classical symbols.

    Applied per bigrade component; ``c`` is the zeta-degree ``2d - k``.
    """
    if S.flavor != CONTACT:
        raise FlavorError("sq_map expects a contact-moment symbol")
    if delta is not None:
        S = S.with_delta(weight_value(delta))
    delta = S.delta
    out = S.scale(0)
    for (k, d), part in S.components().items():
        c = 2 * d - k
        coef = Fraction(1)
        term = part
        a = 0
        while term:
            out = out + term.scale(coef)
            a += 1
            nxt = delta_op(term)
            if not nxt:
                break
            j = a - 1
            den = c - delta - Fraction(j, 2)
            if den == 0:
                raise CriticalValueError(
                    f"delta = {delta} is critical for SQ at c = {c}",
                    ("I_delta", {"c": int(c), "j": j, "d": d}))
            coef = coef / (2 * a * den)
            term = nxt
    return out


def q_sl(S, lam, mu=None):
    """Projectively equivariant quantization ``sum_r C_{k,r} Q_Aff(div^r S)``."""
    lam = weight_value(lam)
    if mu is not None:
        S = S.with_delta(weight_value(mu) - lam)
    if S.flavor == CONTACT:
        S = to_canonical(S)
    m = superdimension(S.n)
    total = DiffOp(S.n, None, lam, lam + S.delta)
    for k, part in S.degree_parts().items():
        t = part
        for r in range(k + 1):
            if not t:
                break
            total = total + q_aff(t.scale(c_kr(k, r, lam, S.delta, m)), lam)
            t = div_symbol(t)
    return total


def check_existence(delta, n, bigrades):
    """Raise :class:`CriticalValueError` if ``delta`` obstructs ``quantize``."""
    m = superdimension(n)
    for d in sorted({d for _, d in bigrades}):
        for c in range(int(d) + 1):
            for j in range(int(2 * d)):
                if Fraction(2 * c - j, 2) == delta:
                    raise CriticalValueError(
                        f"delta = {delta} lies in I_delta (c={c}, j={j})",
                        ("I_delta", {"c": c, "j": j, "d": d}))
        for k in admissible_k(d):
            for i in range(1, k + 1):
                if Fraction(2 * k - i + m, 2) == delta:
                    raise CriticalValueError(
                        f"delta = {delta} lies in C'_{k} (i={i})", ("C'", {"k": k, "i": i}))


def quantize(S, lam, mu):
    """Fine spo(2|n)-equivariant quantization ``Q^sl o SQ``."""
    lam, mu = weight_value(lam), weight_value(mu)
    if S.flavor != CONTACT:
        raise FlavorError("quantize expects a contact-moment symbol")
    S = S.with_delta(mu - lam)
    check_existence(S.delta, S.n, S.components())
    return q_sl(to_canonical(sq_map(S)), lam, mu)


# -- Casimir operators ----------------------------------------------------------------

REPRESENTATIONS = ("fine", "classical", "operators")


def _action(rep):
    if rep == "fine":
        return act_fine
    if rep == "classical":
        return act_classical
    if rep == "operators":
        return lie_derivative
    raise ValueError(f"unknown representation {rep!r}")


def _casimir_direct(rep, value, basis):
    act = _action(rep)
    total = value.scale(0)
    for e in basis:
        inner = act(e.hamiltonian, value)
        if inner:
            total = total + act(e.dual, inner).scale(e.scalar)
    return total


@lru_cache(maxsize=1 << 16)
def _casimir_monomial(rep, basis, ident):
    if rep == "operators":
        n, lam, mu, kind, c, K, key = ident
        mono = DiffOp(n, {(c, K): SuperPoly(n, {key: 1})}, lam, mu, kind)
    else:
        n, delta, flavor, key = ident
        mono = FSym(n, {key: 1}, delta, flavor)
    return _casimir_direct(rep, mono, basis)


def casimir(rep, value, basis=None):
    """``sum_i rho(u_i^*) rho(u_i)`` over the K-dual spo(2|n) bases.

    ``value`` is a contact symbol (``fine``/``classical``) or an operator.
    Computed monomial by monomial; results per monomial are memoized.
    """
    _action(rep)
    if basis is None:
        basis = spo_basis(value.n)
    total = value.scale(0)
    if rep == "operators":
        for (c, K), A in value.terms.items():
            for key, coef in A.terms.items():
                ident = (value.n, value.lam, value.mu, value.basis, c, K, key)
                total = total + _casimir_monomial(rep, basis, ident).scale(coef)
    else:
        for key, coef in value.terms.items():
            ident = (value.n, value.delta, value.flavor, key)
            total = total + _casimir_monomial(rep, basis, ident).scale(coef)
    return total


def n_sd(S, lam):
    """``(2 lam + k - 1)/2 (2 Div_C + Div_T)`` on a degree-``k`` symbol."""
    lam = weight_value(lam)
    k = S.degree()
    if k is None:
        if not S:
            return S
        raise OrderError("n_sd needs a symbol homogeneous in total degree")
    return (div_c(S).scale(2) + div_t(S)).scale((2 * lam + k - 1) / 2)


# -- critical values -------------------------------------------------------------------

I_DELTA, C_PRIME, C_CRIT = "I_delta", "C'", "C_crit"


@dataclass
class CriticalReport:
    delta: Fraction
    hits: list = field(default_factory=list)

    @property
    def critical(self):
        return bool(self.hits)


def enumerate_critical(n, k_max, d_max):
    """Every critical value within bounds as ``(set, value, witness)`` triples."""
    m = superdimension(n)
    d_max = to_fraction(d_max)
    out = []
    for d in half_integers(d_max):
        for c in range(int(d) + 1):
            for j in range(int(2 * d)):
                out.append((I_DELTA, Fraction(2 * c - j, 2), {"d": d, "c": c, "j": j}))
    for k in range(1, k_max + 1):
        for i in range(1, k + 1):
            out.append((C_PRIME, Fraction(2 * k - i + m, 2), {"k": k, "i": i}))
    for d in half_integers(d_max):
        for k in admissible_k(d):
            if k > k_max:
                continue
            for dp in half_integers(d_max):
                if dp >= d:
                    continue
                for kp in admissible_k(dp):
                    if kp > k_max:
                        continue
                    val = Fraction(p_crit(k, kp, d, dp, m)) / (4 * (d - dp))
                    out.append((C_CRIT, val, {"k": k, "kp": kp, "d": d, "dp": dp}))
    return out


def critical_report(delta, n, k_max, d_max):
    """Which critical sets (within bounds) contain ``delta``."""
    delta = weight_value(delta)
    report = CriticalReport(delta)
    for name, value, witness in enumerate_critical(n, k_max, d_max):
        if value == delta:
            report.hits.append((name, witness))
    return report


# -- uniqueness: Casimir eigenvector construction ------------------------------------

def _strata(D):
    parts = {}
    for (c, K), A in D.terms.items():
        g = K.bit_count()
        parts.setdefault((c + g, c + Fraction(g, 2)), {})[(c, K)] = A
    return parts


def quantize_via_casimir(S, lam, mu, max_steps=200):
    """Build the unique ``alpha_{k,d}``-eigenvector of the operator Casimir
    whose Heisenberg symbol is ``S``, one lower stratum at a time."""
    lam, mu = weight_value(lam), weight_value(mu)
    if S.flavor != CONTACT:
        raise FlavorError("quantize_via_casimir expects a contact-moment symbol")
    S = S.with_delta(mu - lam)
    m = superdimension(S.n)
    delta = S.delta
    basis = spo_basis(S.n)
    total = DiffOp(S.n, None, lam, mu)
    for (k, d), part in S.components().items():
        target = alpha(k, d, m, delta)
        op = lift(part, lam)
        for _ in range(max_steps):
            residual = casimir("operators", op, basis) - op.scale(target)
            if not residual:
                break
            strata = _strata(residual)
            top = max(kk + dd for kk, dd in strata)
            for (kk, dd), terms in strata.items():
                if kk + dd != top:
                    continue
                if (kk, dd) == (k, d):
                    raise OrderError(f"Casimir is not scalar on the ({k},{d}) stratum")
                gap = target - alpha(kk, dd, m, delta)
                if gap == 0:
                    raise CriticalValueError(
                        f"delta = {delta} is critical: alpha_({k},{d}) = alpha_({kk},{dd})",
                        (C_CRIT, {"k": k, "d": d, "kp": kk, "dp": dd}))
                op = op + DiffOp(S.n, terms, lam, mu).scale(1 / gap)
        else:
            raise OrderError("eigenvector construction did not terminate")
        total = total + op
    return total
