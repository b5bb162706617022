"""Sparse supercommutative polynomials over Q.

A monomial is a pair ``(exps, mask)``: ``exps`` is a tuple of exponents of
the even variables, ``mask`` a bitmask of odd generators.  Odd generators
are kept in increasing bit order; the Koszul sign of any reordering is
folded into the rational coefficient.
"""

from fractions import Fraction
from numbers import Rational


def merge_sign(a, b):
    """Sign of ``xi^a * xi^b`` rewritten as ``xi^(a|b)``; 0 if they overlap."""
    if a & b:
        return 0
    swaps = 0
    while b:
        low = b & -b
        swaps += (a >> low.bit_length()).bit_count()
        b ^= low
    return -1 if swaps & 1 else 1


def left_deriv_sign(mask, bit):
    """Sign picked up by the left derivative along ``bit``; 0 if absent."""
    if not (mask >> bit) & 1:
        return 0
    return -1 if (mask & ((1 << bit) - 1)).bit_count() & 1 else 1


def bits(mask):
    """Indices of the set bits, increasing."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class GradedPoly:
    """Common arithmetic for :class:`SuperPoly` and :class:`FSym`.

    Subclasses set ``even_names`` and implement ``_like`` (copy metadata onto
    a fresh term map), ``_compatible`` and ``odd_name``.
    """

    __slots__ = ("terms",)
    even_names = ()

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, coef in terms.items():
                coef = to_fraction(coef)
                if coef:
                    clean[key] = coef
        self.terms = clean

    # -- hooks -------------------------------------------------------------
    def _like(self, terms):
        raise NotImplementedError

    def _compatible(self, other):
        raise NotImplementedError

    def odd_name(self, bit):
        raise NotImplementedError

    @staticmethod
    def _raw(template, terms):
        """Copy ``template``'s metadata onto an already-clean term map."""
        cls = type(template)
        out = object.__new__(cls)
        for slot in cls.__slots__:
            setattr(out, slot, getattr(template, slot))
        out.terms = terms
        return out

    def parity_signed(self, even_sign, odd_sign):
        """Scale even monomials by ``even_sign`` and odd ones by ``odd_sign``."""
        return self._raw(self, {k: (c * odd_sign if k[1].bit_count() & 1 else c * even_sign)
                                for k, c in self.terms.items()})

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, GradedPoly):
            self._compatible(other)
            return other
        if isinstance(other, (int, Fraction, Rational)):
            zero = (0,) * len(self.even_names)
            return self._like({(zero, 0): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for key, coef in other.terms.items():
            val = terms.get(key, 0) + coef
            if val:
                terms[key] = val
            else:
                terms.pop(key, None)
        return self._raw(self, terms)

    __radd__ = __add__

    def __neg__(self):
        return self._raw(self, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor):
        factor = to_fraction(factor)
        if not factor:
            return self._raw(self, {})
        return self._raw(self, {k: c * factor for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Rational)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        self._compatible(other)
        out = {}
        for (ea, ma), ca in self.terms.items():
            for (eb, mb), cb in other.terms.items():
                s = merge_sign(ma, mb)
                if not s:
                    continue
                key = (tuple(p + q for p, q in zip(ea, eb)), ma | mb)
                prod = ca * cb if s > 0 else -(ca * cb)
                val = out.get(key, 0) + prod
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        return self._raw(self, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self._coerce(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._meta() == other._meta() and self.terms == other.terms

    def __hash__(self):
        return hash((self._meta(), frozenset(self.terms.items())))

    def _meta(self):
        return ()

    def __bool__(self):
        return bool(self.terms)

    # -- grading -----------------------------------------------------------
    @property
    def parity(self):
        """0 or 1 for homogeneous values (0 for zero), ``None`` if mixed."""
        found = {m.bit_count() & 1 for (_, m) in self.terms}
        if len(found) > 1:
            return None
        return found.pop() if found else 0

    def parity_parts(self):
        """Split into ``(even_part, odd_part)``."""
        even, odd = {}, {}
        for key, coef in self.terms.items():
            (odd if key[1].bit_count() & 1 else even)[key] = coef
        return self._raw(self, even), self._raw(self, odd)

    # -- derivations -------------------------------------------------------
    def _d_even(self, var):
        out = {}
        for (exps, mask), coef in self.terms.items():
            e = exps[var]
            if e:
                new = exps[:var] + (e - 1,) + exps[var + 1:]
                out[(new, mask)] = out.get((new, mask), 0) + coef * e
        return self._like(out)

    def _d_odd(self, bit):
        out = {}
        for (exps, mask), coef in self.terms.items():
            s = left_deriv_sign(mask, bit)
            if s:
                out[(exps, mask ^ (1 << bit))] = coef if s > 0 else -coef
        return self._raw(self, out)

    def _times_odd(self, bit):
        """Left multiplication by the odd generator at ``bit``."""
        out = {}
        gen = 1 << bit
        for (exps, mask), coef in self.terms.items():
            s = merge_sign(gen, mask)
            if s:
                out[(exps, mask | gen)] = coef if s > 0 else -coef
        return self._raw(self, out)

    def _times_even(self, var, power=1):
        out = {}
        for (exps, mask), coef in self.terms.items():
            new = exps[:var] + (exps[var] + power,) + exps[var + 1:]
            out[(new, mask)] = coef
        return self._raw(self, out)

    def _euler(self, var):
        """``v * d/dv`` for the even variable ``var``."""
        return self._raw(self, {k: c * k[0][var] for k, c in self.terms.items() if k[0][var]})

    # -- printing ----------------------------------------------------------
    def _sort_key(self, key):
        exps, mask = key
        return (sum(exps) + mask.bit_count(), bits(mask), exps)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for key in sorted(self.terms, key=self._sort_key):
            coef = self.terms[key]
            exps, mask = key
            factors = []
            for name, e in zip(self.even_names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            factors.extend(self.odd_name(b) for b in bits(mask))
            mag = abs(coef)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            sign = "-" if coef < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"{type(self).__name__}({self})"
