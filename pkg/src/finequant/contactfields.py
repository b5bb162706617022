"""Contact vector fields on S^{1|n}, density modules, and the spo(2|n) basis."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ._graded import to_fraction
from .errors import DimensionError, FlavorError, ParityError, SuperdimensionError
from .superring import SuperPoly, d_theta, d_x, dbar

CONTACT = "contact"
BEREZINIAN = "berezinian"


@dataclass(frozen=True)
class Weight:
    """A density weight together with the module it refers to."""

    value: Fraction
    flavor: str = CONTACT

    def __post_init__(self):
        object.__setattr__(self, "value", to_fraction(self.value))
        if self.flavor not in (CONTACT, BEREZINIAN):
            raise FlavorError(f"unknown weight flavor {self.flavor!r}")

    def __str__(self):
        return str(self.value)


def weight_value(w, flavor=CONTACT):
    """Rational value of ``w``; plain numbers are read as ``flavor`` weights."""
    if isinstance(w, Weight):
        if w.flavor != flavor:
            raise FlavorError(f"expected a {flavor} weight, got {w.flavor}")
        return w.value
    return to_fraction(w)


def superdimension(n):
    return 1 - n


class VField:
    """``f d/dx + sum_i g[i] d/dtheta_i``."""

    __slots__ = ("f", "g")

    def __init__(self, f, g):
        g = tuple(g)
        if len(g) != f.n or any(gi.n != f.n for gi in g):
            raise DimensionError("vector field components disagree on n")
        self.f = f
        self.g = g

    @property
    def n(self):
        return self.f.n

    @property
    def parity(self):
        found = set()
        if self.f:
            found.add(self.f.parity)
        for gi in self.g:
            if gi:
                p = gi.parity
                found.add(None if p is None else 1 - p)
        if len(found) > 1 or None in found:
            return None
        return found.pop() if found else 0

    def __call__(self, h):
        out = self.f * d_x(h)
        for i, gi in enumerate(self.g, start=1):
            if gi:
                out = out + gi * d_theta(i, h)
        return out

    def __add__(self, other):
        return VField(self.f + other.f, [a + b for a, b in zip(self.g, other.g)])

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return VField(self.f.scale(c), [gi.scale(c) for gi in self.g])

    def times(self, h):
        """Left multiplication of every component by the superfunction ``h``."""
        return VField(h * self.f, [h * gi for gi in self.g])

    def divergence(self):
        out = d_x(self.f)
        for i, gi in enumerate(self.g, start=1):
            for part in gi.parity_parts():
                if part:
                    sign = -1 if part.parity else 1
                    out = out + d_theta(i, part).scale(sign)
        return out

    def __eq__(self, other):
        if not isinstance(other, VField):
            return NotImplemented
        return self.f == other.f and self.g == other.g

    def __hash__(self):
        return hash((self.f, self.g))

    def __repr__(self):
        parts = [f"({self.f})*dx"] + [f"({gi})*dt{i}" for i, gi in enumerate(self.g, 1) if gi]
        return "VField(" + " + ".join(parts) + ")"

    @classmethod
    def dx(cls, n):
        zero = SuperPoly(n)
        return cls(SuperPoly.const(n), [zero] * n)

    @classmethod
    def dbar(cls, n, i):
        g = [SuperPoly(n)] * n
        g[i - 1] = SuperPoly.const(n)
        return cls(-SuperPoly.theta(n, i), g)


def _split_homogeneous(field):
    """Split a vector field into its even and odd parts."""
    fe, fo = field.f.parity_parts()
    ge, go = [], []
    for gi in field.g:
        e, o = gi.parity_parts()
        ge.append(o)  # odd coefficient on an odd derivation -> even field
        go.append(e)
    return VField(fe, ge), VField(fo, go)


def bracket(X, Y):
    """Supercommutator of vector fields, extended bilinearly over parity parts."""
    n = X.n
    total = VField(SuperPoly(n), [SuperPoly(n)] * n)
    for Xp in _split_homogeneous(X):
        for Yp in _split_homogeneous(Y):
            px, py = Xp.parity, Yp.parity
            sign = -1 if px * py else 1
            f = Xp(Yp.f) - Yp(Xp.f).scale(sign)
            g = [Xp(b) - Yp(a).scale(sign) for a, b in zip(Xp.g, Yp.g)]
            total = total + VField(f, g)
    return total


def _require_homogeneous(f):
    p = f.parity
    if p is None:
        raise ParityError(f"expected a parity-homogeneous superfunction, got {f}")
    return p


def hamiltonian_field(f):
    """The contact vector field ``X_f = f dx - (-1)^p(f) 1/2 sum Dbar_i(f) Dbar_i``."""
    p = _require_homogeneous(f)
    n = f.n
    half = Fraction(-1 if p == 0 else 1, 2)
    coeffs = [dbar(i, f).scale(half) for i in range(1, n + 1)]
    fx = f
    for i, c in enumerate(coeffs, start=1):
        fx = fx - c * SuperPoly.theta(n, i)
    return VField(fx, coeffs)


def lagrange(f, g):
    """Lagrange bracket ``{f, g}``; bilinear in ``g``, ``f`` must be homogeneous."""
    p = _require_homogeneous(f)
    out = f * d_x(g) - d_x(f) * g
    half = Fraction(-1 if p == 0 else 1, 2)
    for i in range(1, f.n + 1):
        out = out + (dbar(i, f) * dbar(i, g)).scale(half)
    return out


def density_action(f, lam, g):
    """``L^lam_{X_f}(g) = X_f(g) + lam f' g`` on contact densities."""
    lam = weight_value(lam, CONTACT)
    return hamiltonian_field(f)(g) + (d_x(f) * g).scale(lam)


def ber_action(X, lam, g):
    """Berezinian-density action ``X(g) + lam div(X) g``."""
    lam = weight_value(lam, BEREZINIAN)
    if X.parity is None:
        raise ParityError("ber_action needs a parity-homogeneous vector field")
    return X(g) + (X.divergence() * g).scale(lam)


def phi_iso(g, lam):
    """Identify contact ``lam``-densities with Berezinian ``2 lam/(m+1)``-densities."""
    lam = weight_value(lam, CONTACT)
    m = superdimension(g.n)
    if m + 1 == 0:
        raise SuperdimensionError("phi is undefined for n = 2 (m + 1 = 0)")
    return g, Weight(2 * lam / (m + 1), BEREZINIAN)


@dataclass(frozen=True)
class SpoElement:
    """A basis Hamiltonian with its K-dual Hamiltonian and scalar.

    The dual basis vector is ``scalar * X_dual``.
    """

    name: str
    hamiltonian: SuperPoly
    dual: SuperPoly
    scalar: Fraction


class SpoBasis(tuple):
    """Ordered tuple of :class:`SpoElement` with a few conveniences."""

    @property
    def n(self):
        return self[0].hamiltonian.n

    def hamiltonians(self):
        return [e.hamiltonian for e in self]

    def by_name(self, name):
        for e in self:
            if e.name == name:
                return e
        raise KeyError(name)


def spo_basis(n):
    """Hamiltonians of spo(2|n) paired with their K-duals.

    The so(n) block contains every ``theta_i theta_j`` with ``i < j``.
    """
    if n < 1:
        raise DimensionError("spo(2|n) needs n >= 1")
    one = SuperPoly.const(n)
    x = SuperPoly.x(n)
    x2 = SuperPoly.x(n, 2)
    half = Fraction(1, 2)
    els = [
        SpoElement("1", one, x2, -half),
        SpoElement("x", x, x, Fraction(1)),
        SpoElement("x^2", x2, one, -half),
    ]
    for i in range(1, n + 1):
        t = SuperPoly.theta(n, i)
        els.append(SpoElement(f"t{i}", t, x * t, Fraction(-1)))
    for i in range(1, n + 1):
        t = SuperPoly.theta(n, i)
        els.append(SpoElement(f"x*t{i}", x * t, t, Fraction(1)))
    for i, j in combinations(range(1, n + 1), 2):
        tt = SuperPoly.theta(n, i) * SuperPoly.theta(n, j)
        els.append(SpoElement(f"t{i}*t{j}", tt, tt, Fraction(1)))
    return SpoBasis(els)


def span_coordinates(basis, h):
    """Coordinates of ``h`` in the basis Hamiltonians, or ``None`` if outside.

    Every basis Hamiltonian is a single monomial with coefficient 1, so the
    decomposition is read off term by term.
    """
    index = {}
    for k, e in enumerate(basis):
        (key, coef), = e.hamiltonian.terms.items()
        index[key] = (k, coef)
    coords = {}
    for key, coef in h.terms.items():
        if key not in index:
            return None
        k, c0 = index[key]
        coords[k] = coef / c0
    return coords
