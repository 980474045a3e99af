"""Special q-series builders and a generic summation engine.

Pochhammer products use the convention

    (a; Q)_n = prod_{k=0}^{n-1} (1 - a*Q^k),   Q = step_sign * q^step_exp,

with n = INFINITE meaning the full product: once the factor exponent
a.exp + k*step_exp reaches the truncation the remaining factors are
1 + O(q^trunc) and multiplication stops.  The signed step exists so that
products like (-q; -q)_inf can be built directly as well as via the
sign substitution q -> -q.

Sums are cut by valuation, not by term count: sum_series(term, val_bound,
trunc) adds term(n) for every n whose certified valuation lower bound is
below trunc.  The bound must be monotone nondecreasing and tend to
infinity; an iteration cap (default 10*trunc + 64) turns a divergent,
mis-specified sum into a clean NonConvergentError instead of a hang.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonConvergentError, ZeroFactorError
from .series import LaurentSeries, Monomial, mono

INFINITE = None


@dataclass(frozen=True)
class PochhammerSpec:
    """Parameters of a q-Pochhammer symbol (a; Q)_n; length None = infinite."""

    base: Monomial
    step_exp: int = 1
    step_sign: int = 1
    length: int | None = INFINITE

    def __post_init__(self):
        if self.step_exp < 1:
            raise ValueError("step_exp must be >= 1")
        if self.step_sign not in (1, -1):
            raise ValueError("step_sign must be +1 or -1")
        if self.length is not None and self.length < 0:
            raise ValueError("length must be >= 0 or INFINITE")

    def factor(self, k: int) -> Monomial:
        """The monomial a*Q^k appearing in the k-th factor (1 - a*Q^k)."""
        sign = -1 if (self.step_sign < 0 and k % 2) else 1
        return mono(self.base.coeff * sign, self.base.exp + k * self.step_exp)


def _check_factor(m: Monomial):
    if m.coeff == 1 and m.exp == 0:
        raise ZeroFactorError("Pochhammer factor (1 - q^0) is identically zero")


def pochhammer(spec: PochhammerSpec, trunc: int) -> LaurentSeries:
    """Exact truncated product (a; Q)_n (or (a; Q)_inf for length=INFINITE)."""
    out = LaurentSeries.one(trunc)
    if spec.base.is_zero:
        return out
    k = 0
    while True:
        if spec.length is None:
            if spec.base.exp + k * spec.step_exp >= trunc:
                break
        elif k >= spec.length:
            break
        m = spec.factor(k)
        _check_factor(m)
        out = out.mul_binomial(m.coeff, m.exp)
        k += 1
    return out


def pochhammer_inv(spec: PochhammerSpec, trunc: int) -> LaurentSeries:
    """Exact truncated 1 / (a; Q)_n, built factor by factor."""
    out = LaurentSeries.one(trunc)
    if spec.base.is_zero:
        return out
    k = 0
    while True:
        if spec.length is None:
            if spec.base.exp + k * spec.step_exp >= trunc:
                break
        elif k >= spec.length:
            break
        m = spec.factor(k)
        _check_factor(m)
        out = out.div_binomial(m.coeff, m.exp)
        k += 1
    return out


def qpoch(coeff, exp: int, trunc: int, *, step: int = 1, sign: int = 1,
          length: int | None = INFINITE) -> LaurentSeries:
    """Shorthand: (coeff*q^exp; sign*q^step)_length truncated at trunc."""
    return pochhammer(PochhammerSpec(mono(coeff, exp), step, sign, length), trunc)


def qpoch_inv(coeff, exp: int, trunc: int, *, step: int = 1, sign: int = 1,
              length: int | None = INFINITE) -> LaurentSeries:
    return pochhammer_inv(PochhammerSpec(mono(coeff, exp), step, sign, length), trunc)


class PochChain:
    """Lazily extended prefixes (a; Q)_0, (a; Q)_1, ... at fixed truncation.

    With inverse=True the entries are 1/(a; Q)_n instead.  Each extension
    costs one O(window) binomial multiply/divide, which keeps summation
    loops linear per term.  Instances are cheap; use one per summation
    (they memoize, so share only within a single thread).
    """

    def __init__(self, base: Monomial, trunc: int, *, step_exp: int = 1,
                 step_sign: int = 1, inverse: bool = False):
        self.spec = PochhammerSpec(base, step_exp, step_sign, length=0)
        self.trunc = trunc
        self.inverse = inverse
        self._items = [LaurentSeries.one(trunc)]

    def __getitem__(self, n: int) -> LaurentSeries:
        while len(self._items) <= n:
            k = len(self._items) - 1
            m = self.spec.factor(k)
            prev = self._items[-1]
            if self.spec.base.is_zero:
                self._items.append(prev)
                continue
            if self.inverse:
                _check_factor(m)
                self._items.append(prev.div_binomial(m.coeff, m.exp))
            else:
                # a factor (1 - q^0) legitimately collapses the prefix to 0
                self._items.append(prev.mul_binomial(m.coeff, m.exp))
        return self._items[n]


def sum_series(term, val_bound, trunc: int, *, cap: int | None = None) -> LaurentSeries:
    """Sum term(n) over every n with val_bound(n) < trunc.

    val_bound must be a certified, monotone nondecreasing lower bound on
    the valuation of term(n).  The result is exact below trunc (or below
    the smallest truncation delivered by the terms, if smaller).
    """
    if cap is None:
        cap = 10 * trunc + 64
    acc = LaurentSeries.zero(trunc)
    n = 0
    while val_bound(n) < trunc:
        if n > cap:
            raise NonConvergentError(
                f"summation passed {cap} terms without clearing order {trunc}"
            )
        acc = acc + term(n)
        n += 1
    return acc


def hyp_sum(trunc: int, *, step_exp: int = 1,
            num=(), num1=(), den=(), den1=(),
            z: Monomial | None = None, step_mono=None,
            val_bound, cap: int | None = None) -> LaurentSeries:
    """Sum terms of q-hypergeometric shape via their term ratio.

        term(n) = C(n) * prod (b; Q)_L / prod (d; Q)_L,   Q = q^step_exp,

    where each base in num/den has prefix length L = n and each base in
    num1/den1 has L = n+1, and C(n) is a monomial with C(n)/C(n-1) given
    either by the constant z (so C(n) = z^n) or by step_mono(n).  Moving
    from term n-1 to term n then costs one binomial multiply or divide
    per base plus one monomial shift, so a whole sum is O(window) per
    term instead of the O(window^2) of multiplying prefix products.

    val_bound is the same certified monotone bound sum_series needs.
    """
    if cap is None:
        cap = 10 * trunc + 64
    if (z is None) == (step_mono is None):
        raise ValueError("provide exactly one of z and step_mono")
    ratio = (lambda n: z) if step_mono is None else step_mono

    def factor(base: Monomial, k: int) -> Monomial:
        return mono(base.coeff, base.exp + k * step_exp)

    term = LaurentSeries.one(trunc)
    for b in num1:
        if not b.is_zero:
            term = term.mul_binomial(b.coeff, b.exp)
    for d in den1:
        if d.is_zero:
            continue
        _check_factor(d)
        term = term.div_binomial(d.coeff, d.exp)

    acc = LaurentSeries.zero(trunc)
    n = 0
    while val_bound(n) < trunc:
        if n > cap:
            raise NonConvergentError(
                f"summation passed {cap} terms without clearing order {trunc}"
            )
        if n > 0:
            term = term.mul_monomial(ratio(n))
            for b in num:
                if not b.is_zero:
                    f = factor(b, n - 1)
                    term = term.mul_binomial(f.coeff, f.exp)
            for b in num1:
                if not b.is_zero:
                    f = factor(b, n)
                    term = term.mul_binomial(f.coeff, f.exp)
            for d in den:
                if not d.is_zero:
                    f = factor(d, n - 1)
                    _check_factor(f)
                    term = term.div_binomial(f.coeff, f.exp)
            for d in den1:
                if not d.is_zero:
                    f = factor(d, n)
                    _check_factor(f)
                    term = term.div_binomial(f.coeff, f.exp)
        acc = acc + term
        n += 1
    return acc


def linear_bound(slope: int, offset: int = 0):
    """Valuation bound n -> slope*n + offset (slope >= 0)."""
    return lambda n: slope * n + offset


def quadratic_bound(a: int, b: int, c: int = 0):
    """Monotone envelope of the valuation bound n -> a*n^2 + b*n + c (a > 0)."""
    raw = lambda n: a * n * n + b * n + c
    lo = max(0, (-b) // (2 * a))
    m_star = min(range(lo, lo + 3), key=raw)
    return lambda n: raw(max(n, m_star))


def poch_val_floor(base: Monomial, step_exp: int = 1) -> int:
    """Certified lower bound on the valuation of any (base; Q)_n.

    Only factors with negative exponent can push the valuation below
    zero, and there are finitely many of them; the bound is the sum of
    their exponents (zero when base.exp >= 0 or base = 0).
    """
    if base.is_zero or base.exp >= 0:
        return 0
    total = 0
    k = 0
    while base.exp + k * step_exp < 0:
        total += base.exp + k * step_exp
        k += 1
    return total


# -- named special series ------------------------------------------------


def theta(trunc: int) -> LaurentSeries:
    """Classical theta series: sum over all integers n of q^(n^2)."""
    if trunc < 1:
        raise ValueError("theta requires trunc >= 1")
    coeffs = [Fraction(0)] * trunc
    coeffs[0] = Fraction(1)
    n = 1
    while n * n < trunc:
        coeffs[n * n] = Fraction(2)
        n += 1
    return LaurentSeries(0, coeffs, trunc)


def sigma(trunc: int) -> LaurentSeries:
    """Ramanujan's sigma function: sum_{n>=0} q^(n(n+1)/2) / (-q; q)_n."""
    if trunc < 1:
        raise ValueError("sigma requires trunc >= 1")
    chain = PochChain(mono(-1, 1), trunc, inverse=True)
    term = lambda n: chain[n].mul_monomial(mono(1, n * (n + 1) // 2))
    return sum_series(term, lambda n: n * (n + 1) // 2, trunc)


def phi(trunc: int) -> LaurentSeries:
    """Third order mock theta function: sum_{n>=0} q^(n^2) / (-q^2; q^2)_n."""
    if trunc < 1:
        raise ValueError("phi requires trunc >= 1")
    chain = PochChain(mono(-1, 2), trunc, step_exp=2, inverse=True)
    term = lambda n: chain[n].mul_monomial(mono(1, n * n))
    return sum_series(term, lambda n: n * n, trunc)


def pochhammer_in_a(n: int, trunc: int) -> list[LaurentSeries]:
    """Coefficients of a^j, j = 0..n, in prod_{k=0}^{n-1} (1 - a*q^k).

    Entry n (the top coefficient) equals (-1)^n * q^(n(n-1)/2), which is
    how the a -> infinity limit of (a;q)_n / a^n is extracted exactly.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = [LaurentSeries.one(trunc)]
    for k in range(n):
        shifted = [p.mul_monomial(mono(1, k)) for p in coeffs]
        nxt = [coeffs[0]]
        for j in range(1, k + 1):
            nxt.append(coeffs[j] - shifted[j - 1])
        nxt.append(-shifted[k])
        coeffs = nxt
    return coeffs
