"""Truncated Laurent series in q over exact rationals.

A series is stored as a coefficient window: the coefficients c_k are
tracked for vmin <= k < trunc, are known to be zero for k < vmin, and are
unknown for k >= trunc.  All arithmetic is exact (``fractions.Fraction``)
and precision windows propagate pessimistically:

    add/sub : trunc = min(f.trunc, g.trunc)
    mul     : trunc = min(f.trunc + val(g), g.trunc + val(f))
    invert  : 1/f is guaranteed below f.trunc - 2*val(f)

where val() is the exponent of the lowest nonzero tracked coefficient
(val of a series that vanishes on its whole window counts as its trunc).
Operations never widen a window, so recomputing a pipeline at a higher
truncation can only extend, never change, guaranteed coefficients.

Two series are equal iff they agree at every exponent below the smaller
of their truncations (zero-padding outside the tracked windows).

All values are immutable; operations return fresh objects and are safe
to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfPrecisionError

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Monomial:
    """An exact monomial coeff * q**exp (exp may be negative).

    Used for the scalar parameters fed to Pochhammer symbols and to the
    transformation checkers.  The zero monomial is canonically (0, 0).
    """

    coeff: Fraction
    exp: int

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        return mono(self.coeff * other.coeff, self.exp + other.exp)

    def __neg__(self) -> "Monomial":
        return mono(-self.coeff, self.exp)

    def div(self, other: "Monomial") -> "Monomial":
        if other.is_zero:
            raise ZeroDivisionError("division by the zero monomial")
        return mono(self.coeff / other.coeff, self.exp - other.exp)

    def inv(self) -> "Monomial":
        return mono(1, 0).div(self)

    def pow(self, n: int) -> "Monomial":
        if n < 0:
            return self.inv().pow(-n)
        return mono(self.coeff ** n, self.exp * n)

    def __str__(self) -> str:
        if self.coeff == 0:
            return "0"
        if self.exp == 0:
            return str(self.coeff)
        q = "q" if self.exp == 1 else f"q^{self.exp}"
        if self.coeff == 1:
            return q
        if self.coeff == -1:
            return f"-{q}"
        return f"{self.coeff}{q}"


def mono(coeff, exp: int = 0) -> Monomial:
    """Build a canonical Monomial (the zero monomial has exponent 0)."""
    c = Fraction(coeff)
    return Monomial(c, 0 if c == 0 else int(exp))


class LaurentSeries:
    """A truncated Laurent series; see the module docstring for semantics."""

    __slots__ = ("vmin", "trunc", "_c")

    def __init__(self, vmin: int, coeffs, trunc: int):
        coeffs = list(coeffs)
        if trunc < vmin:
            raise ValueError(f"trunc {trunc} below vmin {vmin}")
        if len(coeffs) != trunc - vmin:
            raise ValueError("coefficient window has the wrong length")
        self.vmin = vmin
        self.trunc = trunc
        self._c = coeffs

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, trunc: int) -> "LaurentSeries":
        """The series known to be zero below trunc (empty window)."""
        return cls(trunc, [], trunc)

    @classmethod
    def one(cls, trunc: int) -> "LaurentSeries":
        return cls.from_monomial(mono(1, 0), trunc)

    @classmethod
    def from_monomial(cls, m: Monomial, trunc: int) -> "LaurentSeries":
        if m.is_zero or m.exp >= trunc:
            return cls.zero(trunc)
        coeffs = [_ZERO] * (trunc - m.exp)
        coeffs[0] = m.coeff
        return cls(m.exp, coeffs, trunc)

    @classmethod
    def from_coeffs(cls, coeffs, vmin: int = 0, trunc: int | None = None) -> "LaurentSeries":
        coeffs = [Fraction(c) for c in coeffs]
        if trunc is None:
            trunc = vmin + len(coeffs)
        if trunc != vmin + len(coeffs):
            raise ValueError("trunc inconsistent with coefficient list")
        return cls(vmin, coeffs, trunc)

    # -- basic queries -----------------------------------------------

    def coefficient(self, k: int) -> Fraction:
        """The exact coefficient of q**k; k must lie below the truncation."""
        if k >= self.trunc:
            raise OutOfPrecisionError(
                f"coefficient at q^{k} requested but series is only known below q^{self.trunc}"
            )
        if k < self.vmin:
            return _ZERO
        return self._c[k - self.vmin]

    def val(self) -> int:
        """Exponent of the lowest nonzero tracked coefficient.

        A series that vanishes on its whole window reports its trunc,
        which is the convention the mul precision rule needs.
        """
        for i, c in enumerate(self._c):
            if c != 0:
                return self.vmin + i
        return self.trunc

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._c)

    def coeffs_between(self, lo: int, hi: int) -> list[Fraction]:
        """Coefficients for exponents lo <= k < hi (hi must be <= trunc)."""
        return [self.coefficient(k) for k in range(lo, hi)]

    # -- ring operations ---------------------------------------------

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        trunc = min(self.trunc, other.trunc)
        vmin = min(self.vmin, other.vmin, trunc)
        out = [_ZERO] * (trunc - vmin)
        for s in (self, other):
            lo, hi = s.vmin, min(s.trunc, trunc)
            for k in range(lo, hi):
                out[k - vmin] += s._c[k - s.vmin]
        return LaurentSeries(vmin, out, trunc)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.vmin, [-c for c in self._c], self.trunc)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        vf, vg = self.val(), other.val()
        trunc = min(self.trunc + vg, other.trunc + vf)
        vmin = min(self.vmin + other.vmin, trunc)
        out = [_ZERO] * (trunc - vmin)
        # schoolbook convolution, skipping zero coefficients of the
        # sparser operand
        f, g = (self, other) if len(self._c) <= len(other._c) else (other, self)
        fnz = [(f.vmin + i, c) for i, c in enumerate(f._c) if c != 0]
        for ke, fc in fnz:
            base = ke + g.vmin - vmin
            hi = min(len(g._c), trunc - ke - g.vmin)
            gc = g._c
            for j in range(hi):
                c = gc[j]
                if c != 0:
                    out[base + j] += fc * c
        return LaurentSeries(vmin, out, trunc)

    def mul_monomial(self, m: Monomial) -> "LaurentSeries":
        """Multiply by an exact monomial: scales coefficients, shifts exponents."""
        if m.is_zero:
            return LaurentSeries.zero(self.trunc)
        return LaurentSeries(
            self.vmin + m.exp, [c * m.coeff for c in self._c], self.trunc + m.exp
        )

    def mul_binomial(self, c: Fraction, e: int) -> "LaurentSeries":
        """Multiply by the exact binomial (1 - c*q**e)."""
        c = Fraction(c)
        if c == 0:
            return self
        shift = min(0, e)
        vmin = self.vmin + shift
        trunc = self.trunc + shift
        out = [_ZERO] * (trunc - vmin)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            k = self.vmin + i
            if k < trunc:
                out[k - vmin] += a
            if k + e < trunc:
                out[k + e - vmin] -= c * a
        return LaurentSeries(vmin, out, trunc)

    def div_binomial(self, c: Fraction, e: int) -> "LaurentSeries":
        """Divide by the exact binomial (1 - c*q**e).

        Solving g*(1 - c*q^e) = f with an O(window) recurrence; for e < 0
        the binomial is first rewritten as -c*q^e*(1 - (1/c)*q^{-e}).
        """
        c = Fraction(c)
        if c == 0:
            return self
        if e == 0:
            if c == 1:
                raise ZeroDivisionError("division by the zero binomial (1 - q^0)")
            scale = _ONE / (_ONE - c)
            return LaurentSeries(self.vmin, [a * scale for a in self._c], self.trunc)
        if e < 0:
            t = self.mul_monomial(mono(-1 / c, -e))
            return t.div_binomial(_ONE / c, -e)
        out = list(self._c)
        for i in range(e, len(out)):
            prev = out[i - e]
            if prev != 0:
                out[i] += c * prev
        return LaurentSeries(self.vmin, out, self.trunc)

    def invert(self) -> "LaurentSeries":
        """Multiplicative inverse.

        Requires a nonzero lowest coefficient c*q^v strictly below the
        truncation; the inverse has valuation -v and is guaranteed below
        trunc - 2v.
        """
        v = self.val()
        if v >= self.trunc:
            raise ZeroDivisionError("inverting a series that is zero on its window")
        lead = self._c[v - self.vmin]
        width = self.trunc - v  # number of known coefficients above the valuation
        fw = self._c[v - self.vmin : v - self.vmin + width]
        fnz = [(i, c) for i, c in enumerate(fw) if i > 0 and c != 0]
        inv_lead = _ONE / lead
        g = [_ZERO] * width
        g[0] = inv_lead
        for k in range(1, width):
            acc = _ZERO
            for i, c in fnz:
                if i > k:
                    break
                acc += c * g[k - i]
            if acc != 0:
                g[k] = -inv_lead * acc
        return LaurentSeries(-v, g, self.trunc - 2 * v)

    def __truediv__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self * other.invert()

    def __pow__(self, n: int) -> "LaurentSeries":
        if n < 0:
            return self.invert() ** (-n)
        out = LaurentSeries.one(self.trunc)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    # -- substitutions -----------------------------------------------

    def substitute_sign(self) -> "LaurentSeries":
        """q -> -q: negates coefficients at odd exponents."""
        out = [(-c if (self.vmin + i) % 2 else c) for i, c in enumerate(self._c)]
        return LaurentSeries(self.vmin, out, self.trunc)

    def substitute_power(self, m: int) -> "LaurentSeries":
        """q -> q**m (m >= 1): the coefficient at k moves to m*k.

        The result is guaranteed below m*trunc since the intermediate
        exponents are known to be zero.
        """
        if m < 1:
            raise ValueError("substitute_power requires m >= 1")
        if m == 1:
            return self
        vmin = m * self.vmin
        trunc = m * self.trunc
        out = [_ZERO] * (trunc - vmin)
        for i, c in enumerate(self._c):
            out[m * (self.vmin + i) - vmin] = c
        return LaurentSeries(vmin, out, trunc)

    # -- window management -------------------------------------------

    def truncate(self, trunc: int) -> "LaurentSeries":
        """Restrict the window to a smaller truncation (never widens)."""
        if trunc > self.trunc:
            raise OutOfPrecisionError(
                f"cannot extend window from {self.trunc} to {trunc}"
            )
        vmin = min(self.vmin, trunc)
        return LaurentSeries(vmin, self._c[: trunc - vmin], trunc)

    # -- comparison --------------------------------------------------

    def first_mismatch(self, other: "LaurentSeries") -> int | None:
        """Smallest exponent below both truncations where the series differ."""
        w = min(self.trunc, other.trunc)
        for k in range(min(self.vmin, other.vmin), w):
            a = self._c[k - self.vmin] if k >= self.vmin else _ZERO
            b = other._c[k - other.vmin] if k >= other.vmin else _ZERO
            if a != b:
                return k
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.first_mismatch(other) is None

    __hash__ = None

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self._c):
            if c == 0:
                continue
            k = self.vmin + i
            if k == 0:
                terms.append(str(c))
            else:
                q = "q" if k == 1 else f"q^{k}"
                if c == 1:
                    terms.append(q)
                elif c == -1:
                    terms.append(f"-{q}")
                else:
                    terms.append(f"{c}*{q}")
            if len(terms) >= 8:
                terms.append("...")
                break
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(q^{self.trunc})"
