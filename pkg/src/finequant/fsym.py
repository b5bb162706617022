"""Symbol polynomials in Q[x, zeta] (x) Lambda(theta, moments)."""

from fractions import Fraction

from ._graded import GradedPoly, bits, merge_sign, to_fraction
from .errors import DimensionError, FlavorError, GeneratorIndexError
from .superring import SuperPoly

CONTACT = "contact"
CANONICAL = "canonical"


class FSym(GradedPoly):
    """A symbol ``sum A(x, theta) zeta^c m^K`` carrying its weight ``delta``.

    ``flavor`` selects the odd moments: ``gamma_i`` (dual to Dbar_i) for
    ``"contact"``, ``eta_i`` (dual to d/dtheta_i) for ``"canonical"``.
    Bits ``0..n-1`` of a mask are the thetas, bits ``n..2n-1`` the moments,
    so every monomial is stored as coefficient-then-moments.
    """

    __slots__ = ("n", "delta", "flavor")
    even_names = ("x", "z")

    def __init__(self, n, terms=None, delta=0, flavor=CONTACT):
        if flavor not in (CONTACT, CANONICAL):
            raise FlavorError(f"unknown symbol flavor {flavor!r}")
        self.n = n
        self.delta = to_fraction(delta)
        self.flavor = flavor
        super().__init__(terms)

    def _like(self, terms):
        return FSym(self.n, terms, self.delta, self.flavor)

    def _meta(self):
        return (self.n, self.delta, self.flavor)

    def _compatible(self, other):
        if not isinstance(other, FSym) or other.n != self.n:
            raise DimensionError("symbols over different odd dimensions")
        if other.flavor != self.flavor:
            raise FlavorError(f"cannot combine {self.flavor} and {other.flavor} symbols")
        if other.delta != self.delta:
            raise FlavorError(f"symbol weights differ ({self.delta} vs {other.delta})")

    def odd_name(self, bit):
        if bit < self.n:
            return f"t{bit + 1}"
        return ("g" if self.flavor == CONTACT else "e") + str(bit - self.n + 1)

    def with_delta(self, delta):
        return FSym(self.n, self.terms, delta, self.flavor)

    # -- constructors ------------------------------------------------------
    @classmethod
    def from_superpoly(cls, f, delta=0, flavor=CONTACT):
        return cls(f.n, {((e[0], 0), m): c for (e, m), c in f.terms.items()}, delta, flavor)

    @classmethod
    def monomial(cls, n, xexp=0, thetas=(), zexp=0, moments=(), coef=1,
                 delta=0, flavor=CONTACT):
        """``coef * x^xexp * prod(theta) * zeta^zexp * prod(moments)``."""
        mask, sign = 0, 1
        for i in list(thetas) + [n + j for j in moments]:
            j = i if i <= n else i - n
            if not 1 <= j <= n:
                raise GeneratorIndexError(f"odd index {j} outside 1..{n}")
            s = merge_sign(mask, 1 << (i - 1))
            if not s:
                return cls(n, {}, delta, flavor)
            sign *= s
            mask |= 1 << (i - 1)
        return cls(n, {((xexp, zexp), mask): sign * to_fraction(coef)}, delta, flavor)

    # -- structure ---------------------------------------------------------
    def moment_mask(self, mask):
        return mask >> self.n

    def bigrade_of(self, key):
        (_, z), mask = key
        g = (mask >> self.n).bit_count()
        return z + g, z + Fraction(g, 2)

    def components(self):
        """Split into bigrade-homogeneous pieces ``{(k, d): FSym}``."""
        parts = {}
        for key, coef in self.terms.items():
            parts.setdefault(self.bigrade_of(key), {})[key] = coef
        return {bd: self._like(t) for bd, t in sorted(parts.items())}

    def degree_parts(self):
        """Split by total moment degree ``k``."""
        parts = {}
        for key, coef in self.terms.items():
            parts.setdefault(self.bigrade_of(key)[0], {})[key] = coef
        return {k: self._like(t) for k, t in sorted(parts.items())}

    def bigrade(self):
        """``(k, d)`` of a bigrade-homogeneous symbol, else ``None``."""
        found = {self.bigrade_of(key) for key in self.terms}
        return found.pop() if len(found) == 1 else None

    def degree(self):
        found = {self.bigrade_of(key)[0] for key in self.terms}
        return found.pop() if len(found) == 1 else None

    def max_degree(self):
        return max((self.bigrade_of(k)[0] for k in self.terms), default=0)

    def split(self):
        """Yield ``(A, zexp, moment_mask)`` with ``A`` a SuperPoly coefficient."""
        groups = {}
        low = (1 << self.n) - 1
        for ((xe, ze), mask), coef in self.terms.items():
            groups.setdefault((ze, mask >> self.n), {})[((xe,), mask & low)] = coef
        for (ze, mm), t in sorted(groups.items()):
            yield SuperPoly(self.n, t), ze, mm

    @classmethod
    def assemble(cls, n, pieces, delta=0, flavor=CONTACT):
        """Inverse of :meth:`split`."""
        terms = {}
        for A, ze, mm in pieces:
            for ((xe,), m), c in A.terms.items():
                key = ((xe, ze), m | (mm << n))
                terms[key] = terms.get(key, 0) + c
        return cls(n, terms, delta, flavor)

    # -- elementary operators ----------------------------------------------
    def times(self, f):
        """Left multiplication by a superfunction or symbol."""
        if isinstance(f, SuperPoly):
            f = FSym.from_superpoly(f, self.delta, self.flavor)
        return f * self

    def d_x(self):
        return self._d_even(0)

    def d_zeta(self):
        return self._d_even(1)

    def zeta_d_zeta(self):
        return self._euler(1)

    def times_zeta(self, power=1):
        return self._times_even(1, power)

    def d_theta(self, i):
        self._index(i)
        return self._d_odd(i - 1)

    def dbar(self, i):
        """Dbar_i acting on the coefficients only."""
        self._index(i)
        return self._d_odd(i - 1) - self._d_even(0)._times_odd(i - 1)

    def d_moment(self, i):
        """Left derivative along gamma_i (or eta_i)."""
        self._index(i)
        return self._d_odd(self.n + i - 1)

    def times_moment(self, i):
        self._index(i)
        return self._times_odd(self.n + i - 1)

    def times_theta(self, i):
        self._index(i)
        return self._times_odd(i - 1)

    def _index(self, i):
        if not 1 <= i <= self.n:
            raise GeneratorIndexError(f"odd index {i} outside 1..{self.n}")

    def moment_bits(self, mask):
        return [b - self.n + 1 for b in bits(mask) if b >= self.n]
