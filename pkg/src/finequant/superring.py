"""The superfunction ring Q[x] (x) Lambda(theta_1..theta_n) and its derivations."""

from ._graded import GradedPoly, merge_sign, to_fraction
from .errors import DimensionError, GeneratorIndexError


class SuperPoly(GradedPoly):
    """Polynomial superfunction on S^{1|n}.

    Keys are ``((xexp,), mask)`` with bit ``i-1`` of ``mask`` standing for
    theta_i.

    >>> t1, t2 = SuperPoly.theta(2, 1), SuperPoly.theta(2, 2)
    >>> str(t2 * t1)
    '-t1*t2'
    """

    __slots__ = ("n",)
    even_names = ("x",)

    def __init__(self, n, terms=None):
        if n < 0:
            raise DimensionError("n must be nonnegative")
        self.n = n
        super().__init__(terms)

    def _like(self, terms):
        return SuperPoly(self.n, terms)

    def _meta(self):
        return (self.n,)

    def _compatible(self, other):
        if not isinstance(other, SuperPoly) or other.n != self.n:
            raise DimensionError(
                f"superfunctions over different odd dimensions "
                f"({self.n} vs {getattr(other, 'n', '?')})")

    def odd_name(self, bit):
        return f"t{bit + 1}"

    # -- constructors ------------------------------------------------------
    @classmethod
    def const(cls, n, value=1):
        return cls(n, {((0,), 0): value})

    @classmethod
    def x(cls, n, power=1):
        return cls(n, {((power,), 0): 1})

    @classmethod
    def theta(cls, n, i):
        _check_index(n, i)
        return cls(n, {((0,), 1 << (i - 1)): 1})

    @classmethod
    def monomial(cls, n, xexp=0, odd=(), coef=1):
        """``coef * x^xexp * theta_{odd[0]} * theta_{odd[1]} * ...``.

        ``odd`` may be in any order; the reordering sign is applied and a
        repeated index gives zero.
        """
        mask, sign = 0, 1
        for i in odd:
            _check_index(n, i)
            s = merge_sign(mask, 1 << (i - 1))
            if not s:
                return cls(n)
            sign *= s
            mask |= 1 << (i - 1)
        return cls(n, {((xexp,), mask): sign * to_fraction(coef)})

    def x_degree(self):
        return max((e[0] for e, _ in self.terms), default=0)


def _check_index(n, i):
    if not 1 <= i <= n:
        raise GeneratorIndexError(f"odd index {i} outside 1..{n}")


def mul(f, g):
    """Supercommutative product."""
    if f.n != g.n:
        raise DimensionError(f"cannot multiply over n={f.n} and n={g.n}")
    return f * g


def d_x(f):
    """Even derivation d/dx."""
    return f._d_even(0)


def d_theta(i, f):
    """Odd left derivative d/dtheta_i."""
    _check_index(f.n, i)
    return f._d_odd(i - 1)


def dbar(i, f):
    """Contact derivative ``Dbar_i = d/dtheta_i - theta_i d/dx``."""
    _check_index(f.n, i)
    return f._d_odd(i - 1) - d_x(f)._times_odd(i - 1)
