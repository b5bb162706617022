"""Differential operators between contact densities on S^{1|n}.

An operator is stored in normal form ``sum A_{cK} dx^c O^K`` with
superfunction coefficients on the left and ``O^K = O_{i1}...O_{ir}`` for
increasing ``i1 < ... < ir``.  ``O_i`` is ``Dbar_i`` in the contact basis
(the default) and ``d/dtheta_i`` in the canonical basis.
"""

from fractions import Fraction
from functools import lru_cache

from ._graded import bits, to_fraction
from .contactfields import weight_value
from .errors import DimensionError, FlavorError, OrderError, ParityError, WeightMismatchError
from .fsym import CONTACT, FSym
from .superring import SuperPoly, d_theta, d_x, dbar

DBAR = "dbar"
CANONICAL_BASIS = "canonical"


def _accumulate(out, key, coef):
    if not coef:
        return
    prev = out.get(key)
    val = coef if prev is None else prev + coef
    if val:
        out[key] = val
    else:
        out.pop(key, None)


class DiffOp:
    """A differential operator from ``lam``- to ``mu``-densities."""

    __slots__ = ("n", "lam", "mu", "basis", "terms")

    def __init__(self, n, terms=None, lam=0, mu=0, basis=DBAR):
        self.n = n
        self.lam = weight_value(lam)
        self.mu = weight_value(mu)
        self.basis = basis
        clean = {}
        for key, coef in (terms or {}).items():
            if isinstance(coef, (int, Fraction)):
                coef = SuperPoly.const(n, coef)
            if coef.n != n:
                raise DimensionError("coefficient over the wrong n")
            if coef:
                clean[key] = coef
        self.terms = clean

    def _like(self, terms, lam=None, mu=None):
        out = DiffOp(self.n, None, self.lam if lam is None else lam,
                     self.mu if mu is None else mu, self.basis)
        out.terms = terms
        return out

    @property
    def delta(self):
        return self.mu - self.lam

    # -- constructors ------------------------------------------------------
    @classmethod
    def identity(cls, n, lam=0, mu=None, basis=DBAR):
        return cls(n, {(0, 0): SuperPoly.const(n)}, lam, lam if mu is None else mu, basis)

    @classmethod
    def multiplication(cls, f, lam=0, mu=None):
        return cls(f.n, {(0, 0): f}, lam, lam if mu is None else mu)

    @classmethod
    def monomial(cls, n, c=0, K=(), coef=None, lam=0, mu=None, basis=DBAR):
        """``coef * dx^c * O_{K[0]} O_{K[1]} ...`` (any order of ``K``)."""
        op = cls.identity(n, lam, lam, basis)
        for i in reversed(list(K)):
            op = _left_odd(i, op)
        for _ in range(c):
            op = _left_dx(op)
        if coef is not None:
            op = _left_coef(coef, op)
        op.mu = op.lam if mu is None else weight_value(mu)
        return op

    # -- arithmetic --------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, DiffOp) or other.n != self.n or other.basis != self.basis:
            raise DimensionError("operators over different n or basis")
        if (other.lam, other.mu) != (self.lam, self.mu):
            raise WeightMismatchError("operators act between different densities")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, coef in other.terms.items():
            _accumulate(out, key, coef)
        return self._like(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = to_fraction(c)
        if not c:
            return self._like({})
        return self._like({k: a.scale(c) for k, a in self.terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return (self.n, self.lam, self.mu, self.basis, self.terms) == (
            other.n, other.lam, other.mu, other.basis, other.terms)

    def __hash__(self):
        return hash((self.n, self.lam, self.mu, self.basis, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    @property
    def parity(self):
        found = set()
        for (c, K), A in self.terms.items():
            p = A.parity
            if p is None:
                return None
            found.add((p + K.bit_count()) & 1)
        if len(found) > 1:
            return None
        return found.pop() if found else 0

    def parity_parts(self):
        even, odd = {}, {}
        for (c, K), A in self.terms.items():
            Ae, Ao = A.parity_parts()
            for part, p in ((Ae, 0), (Ao, 1)):
                if part:
                    ((odd if (p + K.bit_count()) & 1 else even))[(c, K)] = part
        return self._like(even), self._like(odd)

    def with_weights(self, lam, mu):
        return self._like(dict(self.terms), weight_value(lam), weight_value(mu))

    # -- printing ----------------------------------------------------------
    def _op_word(self, c, K):
        name = "D" if self.basis == DBAR else "dt"
        parts = []
        if c == 1:
            parts.append("dx")
        elif c > 1:
            parts.append(f"dx^{c}")
        parts.extend(f"{name}{b + 1}" for b in bits(K))
        return "*".join(parts)

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (-(kv[0][0] + kv[0][1].bit_count()), -kv[0][0], bits(kv[0][1])))

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for (c, K), A in self.sorted_terms():
            word = self._op_word(c, K)
            coef = str(A)
            if not word:
                chunks.append(f"({coef})")
            elif coef == "1":
                chunks.append(word)
            else:
                chunks.append(f"({coef})*{word}")
        return " + ".join(chunks)

    def __repr__(self):
        return f"DiffOp[{self.lam}->{self.mu}]({self})"


# -- normal-form rewriting ---------------------------------------------------

def _odd_coef_derivative(basis, i, A):
    return dbar(i, A) if basis == DBAR else d_theta(i, A)


def _left_odd(i, op):
    """``O_i o op`` in normal form."""
    out = {}
    bit = 1 << (i - 1)
    square_to_dx = op.basis == DBAR
    for (c, K), A in op.terms.items():
        _accumulate(out, (c, K), _odd_coef_derivative(op.basis, i, A))
        sign = -1 if (K & (bit - 1)).bit_count() & 1 else 1
        if K & bit:
            if not square_to_dx:
                continue
            # Dbar_i Dbar_i = -dx, and dx is central
            key, sign = (c + 1, K ^ bit), -sign
        else:
            key = (c, K | bit)
        _accumulate(out, key, A.parity_signed(sign, -sign))
    return op._like(out)


def _left_dx(op):
    out = {}
    for (c, K), A in op.terms.items():
        _accumulate(out, (c, K), d_x(A))
        _accumulate(out, (c + 1, K), A)
    return op._like(out)


def _left_coef(B, op):
    out = {}
    for key, A in op.terms.items():
        _accumulate(out, key, B * A)
    return op._like(out)


def compose(D1, D2):
    """Normal form of ``D1 o D2``; requires ``D2.mu == D1.lam``."""
    if D1.n != D2.n or D1.basis != D2.basis:
        raise DimensionError("cannot compose operators over different n or basis")
    if D2.mu != D1.lam:
        raise WeightMismatchError(f"cannot compose: {D2.mu} != {D1.lam}")
    result = {}
    inner = D2._like(dict(D2.terms))
    for (c, K), A in D1.terms.items():
        t = inner
        for b in reversed(bits(K)):
            t = _left_odd(b + 1, t)
        for _ in range(c):
            t = _left_dx(t)
        for key, coef in t.terms.items():
            _accumulate(result, key, A * coef)
    return D2._like(result, D2.lam, D1.mu)


def apply(D, g):
    """Evaluate ``D`` on the superfunction ``g``."""
    out = SuperPoly(D.n)
    cache = {}
    for (c, K), A in D.terms.items():
        h = cache.get((c, K))
        if h is None:
            h = g
            for b in reversed(bits(K)):
                h = _odd_coef_derivative(D.basis, b + 1, h)
            for _ in range(c):
                h = d_x(h)
            cache[(c, K)] = h
        out = out + A * h
    return out


def supercommutator(A, B):
    """``A o B - (-1)^{|A||B|} B o A`` for operators on a single density module."""
    total = None
    for Ap in A.parity_parts():
        for Bp in B.parity_parts():
            if not Ap or not Bp:
                continue
            sign = -1 if Ap.parity and Bp.parity else 1
            term = compose(Ap, Bp) - compose(Bp, Ap).scale(sign)
            total = term if total is None else total + term
    if total is None:
        return compose(A, B).scale(0)
    return total


# -- densities and the Lie derivative -----------------------------------------

def density_operator(f, lam):
    """``L^lam_{X_f}`` as a normal-form operator on ``lam``-densities."""
    p = f.parity
    if p is None:
        raise ParityError("Hamiltonian must be parity-homogeneous")
    n = f.n
    lam = weight_value(lam)
    terms = {(1, 0): f}
    half = Fraction(-1 if p == 0 else 1, 2)
    for i in range(1, n + 1):
        c = dbar(i, f).scale(half)
        if c:
            terms[(0, 1 << (i - 1))] = c
    fp = d_x(f).scale(lam)
    if fp:
        terms[(0, 0)] = fp
    return DiffOp(n, terms, lam, lam)


def lie_derivative(f, D):
    """``L^mu_{X_f} o D - (-1)^{p(f) p(D)} D o L^lam_{X_f}``."""
    if f.parity is None:
        raise ParityError("Hamiltonian must be parity-homogeneous")
    if D.basis != DBAR:
        D = from_canonical_basis(D)
    Lmu = density_operator(f, D.mu)
    Llam = density_operator(f, D.lam)
    total = D.scale(0)
    for part in D.parity_parts():
        if not part:
            continue
        sign = -1 if f.parity and part.parity else 1
        total = total + compose(Lmu, part) - compose(part, Llam).scale(sign)
    return total


# -- orders and symbols --------------------------------------------------------

def orders(D):
    """``(k, d)``: the order and the Heisenberg order of a nonzero operator."""
    if not D.terms:
        raise OrderError("the zero operator has no order")
    if D.basis != DBAR:
        D = from_canonical_basis(D)
    k = max(c + K.bit_count() for c, K in D.terms)
    d = max(c + Fraction(K.bit_count(), 2) for c, K in D.terms)
    return k, d


def lift(S, lam=0):
    """Canonical section: ``A zeta^c gamma^K  ->  A dx^c Dbar^K``."""
    if S.flavor != CONTACT:
        raise FlavorError("lift expects a contact-moment symbol")
    lam = weight_value(lam)
    terms = {}
    for A, ze, mm in S.split():
        _accumulate(terms, (ze, mm), A)
    return DiffOp(S.n, terms, lam, lam + S.delta)


def _project(D, keep):
    if D.basis != DBAR:
        D = from_canonical_basis(D)
    pieces = [(A, c, K) for (c, K), A in D.terms.items() if keep(c, K)]
    return FSym.assemble(D.n, pieces, D.delta, CONTACT)


def fine_symbol(D, k, d):
    """Fine symbol at bigrade ``(k, d)``; the operator must lie in D^{k,d}."""
    d = to_fraction(d)
    if D.basis != DBAR:
        D = from_canonical_basis(D)
    for c, K in D.terms:
        if c + K.bit_count() > k or c + Fraction(K.bit_count(), 2) > d:
            raise OrderError(f"operator is not in D^({k},{d})")
    return _project(D, lambda c, K: c + K.bit_count() == k and 2 * c + K.bit_count() == 2 * d)


def h_symbol(D, d):
    """Heisenberg symbol: the part of Heisenberg order exactly ``d``."""
    d = to_fraction(d)
    if D.terms and orders(D)[1] > d:
        raise OrderError(f"Heisenberg order {orders(D)[1]} exceeds {d}")
    return _project(D, lambda c, K: 2 * c + K.bit_count() == 2 * d)


def principal_symbol(D, k):
    """Classical order-``k`` symbol in contact moments."""
    if D.terms and orders(D)[0] > k:
        raise OrderError(f"order {orders(D)[0]} exceeds {k}")
    return _project(D, lambda c, K: c + K.bit_count() == k)


# -- change of basis -------------------------------------------------------------

@lru_cache(maxsize=None)
def _basis_word(n, c, K, target):
    """``dx^c O_{i1}...O_{ir}`` rewritten in the target basis, as a term tuple."""
    one = SuperPoly.const(n)
    op = DiffOp(n, {(0, 0): one}, 0, 0, target)
    for b in reversed(bits(K)):
        t = SuperPoly.theta(n, b + 1)
        shift = DiffOp(n, {(1, 0): t}, 0, 0, target)
        odd = DiffOp(n, {(0, 1 << b): one}, 0, 0, target)
        # dt_i = Dbar_i + theta_i dx ; Dbar_i = dt_i - theta_i dx
        factor = odd + shift if target == DBAR else odd - shift
        op = compose(factor, op)
    for _ in range(c):
        op = _left_dx(op)
    return tuple(op.terms.items())


def _rebase(D, target):
    result = DiffOp(D.n, None, D.lam, D.mu, target)
    for (c, K), A in D.terms.items():
        word = DiffOp(D.n, dict(_basis_word(D.n, c, K, target)), D.lam, D.mu, target)
        result = result + _left_coef(A, word)
    return result


def to_canonical_basis(D):
    """Rewrite ``Dbar_i = d/dtheta_i - theta_i dx`` into the canonical basis."""
    if D.basis == CANONICAL_BASIS:
        return D
    return _rebase(D, CANONICAL_BASIS)


def from_canonical_basis(D):
    """Inverse of :func:`to_canonical_basis` (``d/dtheta_i = Dbar_i + theta_i dx``)."""
    if D.basis == DBAR:
        return D
    return _rebase(D, DBAR)
