"""Symbol calculus: fine, Heisenberg and classical actions of spo(2|n).

Symbols are :class:`~finequant.fsym.FSym` values.  ``d/dx`` and ``Dbar_i``
below act on coefficients only; moment derivatives are left derivatives in
the full Grassmann algebra of thetas and moments.
"""

from fractions import Fraction
from itertools import combinations

from ._graded import to_fraction
from .contactfields import weight_value
from .diffops import (CANONICAL_BASIS, DiffOp, fine_symbol, from_canonical_basis,
                      h_symbol, lie_derivative, lift, principal_symbol,
                      to_canonical_basis)
from .errors import FlavorError, OrderError, ParityError
from .fsym import CANONICAL, CONTACT, FSym
from .superring import d_x, dbar

HALF = Fraction(1, 2)


def _need(S, flavor):
    if S.flavor != flavor:
        raise FlavorError(f"expected a {flavor} symbol, got {S.flavor}")


def _hamiltonian_parity(f):
    p = f.parity
    if p is None:
        raise ParityError(f"Hamiltonian {f} is not parity-homogeneous")
    return p


def basis_symbols(n, d_max=None, k_max=None, x_max=1, delta=0, flavor=CONTACT):
    """Monomials ``x^a theta^T zeta^c m^K`` with ``a <= x_max``.

    Bounded by Heisenberg order ``c + |K|/2 <= d_max`` and/or total degree
    ``c + |K| <= k_max``; at least one bound is required.
    """
    if d_max is None and k_max is None:
        raise OrderError("basis_symbols needs d_max or k_max")
    d_max = None if d_max is None else to_fraction(d_max)
    subsets = [c for r in range(n + 1) for c in combinations(range(1, n + 1), r)]
    top = int(d_max) if d_max is not None else k_max
    out = []
    for K in subsets:
        for c in range(top + 1):
            if d_max is not None and c + Fraction(len(K), 2) > d_max:
                continue
            if k_max is not None and c + len(K) > k_max:
                continue
            for a in range(x_max + 1):
                for T in subsets:
                    out.append(FSym.monomial(n, a, T, c, K, delta=delta, flavor=flavor))
    return out


# -- closed-form actions --------------------------------------------------------

def act_fine(f, S):
    """Closed-form fine-symbol action ``L^Sigma_{X_f}``."""
    _need(S, CONTACT)
    p = _hamiltonian_parity(f)
    n = S.n
    fp = d_x(f)
    out = S.d_x().times(f)
    if fp:
        out = out + (S.scale(S.delta) - S.zeta_d_zeta()).times(fp)
    sign = Fraction(-1 if p == 0 else 1, 2)
    dbars = [dbar(i, f) for i in range(1, n + 1)]
    for i, Di in enumerate(dbars, start=1):
        if Di:
            out = out + S.dbar(i).times(Di).scale(sign)
    for j in range(1, n + 1):
        dS = S.d_moment(j)
        if not dS:
            continue
        for k, Dk in enumerate(dbars, start=1):
            c = dbar(j, Dk)
            if c:
                out = out + dS.times_moment(k).times(c).scale(HALF)
    return out


def classical_correction(f, S):
    """``1/2 (-1)^p(f) sum_i Dbar_i(f') gamma_i d/dzeta``."""
    p = _hamiltonian_parity(f)
    fp = d_x(f)
    dz = S.d_zeta()
    out = S.scale(0)
    if not dz:
        return out
    sign = Fraction(-1 if p else 1, 2)
    for i in range(1, S.n + 1):
        c = dbar(i, fp)
        if c:
            out = out + dz.times_moment(i).times(c).scale(sign)
    return out


def act_classical(f, S):
    """Closed-form classical-symbol action ``L^S_{X_f}`` in contact moments."""
    _need(S, CONTACT)
    return act_fine(f, S) + classical_correction(f, S)


def act_classical_canonical(f, S):
    """``L^S_{X_f}`` on a symbol written in canonical moments."""
    _need(S, CANONICAL)
    return to_canonical(act_classical(f, to_contact(S)))


# -- definitional actions -------------------------------------------------------

def act_fine_definitional(f, S, lam=0):
    """``fsigma_{k,d} o Lie_{X_f} o lift`` on each bigrade component of ``S``."""
    _need(S, CONTACT)
    out = S.scale(0)
    for (k, d), part in S.components().items():
        op = lie_derivative(f, lift(part, lam))
        out = out + fine_symbol(op, k, d)
    return out


def act_heisenberg(f, S, lam=0):
    """Action on Heisenberg symbols: ``hsigma_d o Lie_{X_f} o lift`` per ``d``."""
    _need(S, CONTACT)
    out = S.scale(0)
    by_d = {}
    for (k, d), part in S.components().items():
        by_d[d] = by_d[d] + part if d in by_d else part
    for d, part in by_d.items():
        out = out + h_symbol(lie_derivative(f, lift(part, lam)), d)
    return out


def act_classical_definitional(f, S, lam=0):
    """``sigma_k o Lie_{X_f} o lift`` on each degree-``k`` part."""
    _need(S, CONTACT)
    out = S.scale(0)
    for k, part in S.degree_parts().items():
        out = out + principal_symbol(lie_derivative(f, lift(part, lam)), k)
    return out


def act_x2_dropped_term(S):
    """The x^2 action with the theta_j theta_k gamma_k d/dgamma_j term dropped.

    Kept to document which variant of the quadratic action satisfies the
    Delta-power commutator identity (only the full action does).
    """
    n = S.n
    x = FSym.monomial(n, 1, delta=S.delta)
    out = S.d_x().times(x * x) + (S.scale(S.delta) - S.zeta_d_zeta()).times(x.scale(2))
    for i in range(1, n + 1):
        out = out + S.dbar(i).times_theta(i).times(x)
        out = out - S.d_moment(i).times_moment(i).times(x)
    return out


# -- Delta, divergences, interior products ---------------------------------------

def delta_op(S):
    """``Delta S = sum_i gamma_i Dbar_i d/dzeta S``."""
    _need(S, CONTACT)
    dz = S.d_zeta()
    out = S.scale(0)
    for i in range(1, S.n + 1):
        out = out + dz.dbar(i).times_moment(i)
    return out


def delta_power(S, a):
    for _ in range(a):
        S = delta_op(S)
    return S


def div_c(S):
    """Contact divergence ``d/dx d/dzeta``."""
    _need(S, CONTACT)
    return S.d_zeta().d_x()


def div_t(S):
    """Tangential divergence ``sum_r Dbar_r d/dgamma_r``."""
    _need(S, CONTACT)
    out = S.scale(0)
    for r in range(1, S.n + 1):
        out = out + S.d_moment(r).dbar(r)
    return out


def interior(j, S):
    """Interior product by the j-th dual basis vector, in contact moments.

    ``j = 1`` is ``d/dzeta - theta_k d/dgamma_k``; ``j = k + 1`` is
    ``-1/2 d/dgamma_k``.
    """
    _need(S, CONTACT)
    if j == 1:
        out = S.d_zeta()
        for k in range(1, S.n + 1):
            out = out - S.d_moment(k).times_theta(k)
        return out
    if 2 <= j <= S.n + 1:
        return S.d_moment(j - 1).scale(-HALF)
    raise OrderError(f"interior index {j} outside 1..{S.n + 1}")


def interior_canonical(j, S):
    """Interior product in canonical moments: ``d/dzeta`` or ``d/deta_{j-1}``."""
    _need(S, CANONICAL)
    if j == 1:
        return S.d_zeta()
    if 2 <= j <= S.n + 1:
        return S.d_moment(j - 1)
    raise OrderError(f"interior index {j} outside 1..{S.n + 1}")


def div_symbol(S):
    """Divergence ``sum_j (-1)^p(y_j) i(eps^j) d/dy^j`` on canonical symbols."""
    _need(S, CANONICAL)
    out = S.d_x().d_zeta()
    for k in range(1, S.n + 1):
        out = out - S.d_theta(k).d_moment(k)
    return out


# -- contact <-> canonical moments --------------------------------------------------

def _substitute(S, flavor, sign):
    n = S.n
    out = FSym(n, {}, S.delta, flavor)
    for A, ze, mm in S.split():
        term = FSym.from_superpoly(A, S.delta, flavor).times_zeta(ze)
        for i in range(1, n + 1):
            if mm >> (i - 1) & 1:
                m = FSym.monomial(n, moments=(i,), delta=S.delta, flavor=flavor)
                tz = FSym.monomial(n, thetas=(i,), zexp=1, coef=sign, delta=S.delta, flavor=flavor)
                term = term * (m + tz)
        out = out + term
    return out


def to_canonical(S):
    """``gamma_i = eta_i - theta_i zeta``."""
    if S.flavor == CANONICAL:
        return S
    return _substitute(S, CANONICAL, -1)


def to_contact(S):
    """``eta_i = gamma_i + theta_i zeta``."""
    if S.flavor == CONTACT:
        return S
    return _substitute(S, CONTACT, 1)


# -- affine quantization --------------------------------------------------------------

def q_aff(S, lam=0, mu=None):
    """Affine quantization ``A zeta^c eta^I -> A dx^c dt^I`` (normal form)."""
    _need(S, CANONICAL)
    lam = weight_value(lam)
    mu = lam + S.delta if mu is None else weight_value(mu)
    terms = {}
    for A, ze, mm in S.split():
        terms[(ze, mm)] = A
    return from_canonical_basis(DiffOp(S.n, terms, lam, mu, CANONICAL_BASIS))


def sigma_aff(D):
    """Total symbol in canonical moments; inverse of :func:`q_aff`."""
    C = to_canonical_basis(D)
    pieces = [(A, c, K) for (c, K), A in C.terms.items()]
    return FSym.assemble(D.n, pieces, D.delta, CANONICAL)


def affine_action(f, S, lam=0):
    """``Q_Aff^{-1} o Lie_{X_f} o Q_Aff`` on canonical symbols."""
    return sigma_aff(lie_derivative(f, q_aff(S, lam)))


def gamma_map(f, lam, delta, S):
    """``gamma(X_f) = Q_Aff^{-1} Lie_{X_f} Q_Aff - L^S_{X_f}`` on canonical symbols.

    ``delta=None`` keeps the weight already carried by ``S``.
    """
    _need(S, CANONICAL)
    if delta is not None:
        S = S.with_delta(weight_value(delta))
    return affine_action(f, S, lam) - act_classical_canonical(f, S)
