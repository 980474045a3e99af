"""Parameterized checkers for the classical q-hypergeometric transformations.

Each checker builds both sides of a transformation at a monomial
specialization of its parameters (exact rational coefficient times an
integer, possibly negative, power of q), entirely inside the truncated
Laurent-series ring, and compares them coefficientwise.  The base of the
q-shift lattice is q**base_exp (the identities are frequently applied
with q -> q^2).

Checkers enforce only the preconditions needed for the two sides to make
sense as formal Laurent series - every summation must have a certified
valuation bound that grows without limit, every infinite product a
well-defined factor list.  Anything outside that region raises
PreconditionViolatedError rather than reporting a meaningless pass.

The transformations:

  heine            sum (a,b;Q)_n / (Q,c;Q)_n t^n
                     = (b,at;Q)_oo / (c,t;Q)_oo * sum (c/b,t;Q)_n / (Q,at;Q)_n b^n
  iterated heine   sum (a,b;Q)_n / (Q,c;Q)_n t^n
                     = (c/b,bt;Q)_oo / (c,t;Q)_oo * sum (abt/c,b;Q)_n / (Q,bt;Q)_n (c/b)^n
  asv              sum (x;Q)_n / (y;Q)_n Q^n
                     = Q*(x;Q)_oo / (y*(1 - xQ/y)*(y;Q)_oo) + (1 - Q/y)/(1 - xQ/y)
  partial theta    sum (B,-AbQ;Q)_n Q^n / (-aQ,-bQ;Q)_n
                     = -a^{-1} (B,-AbQ;Q)_oo / (-bQ,-aQ;Q)_oo
                         * sum (A^{-1};Q)_n / (-B/a;Q)_{n+1} (AbQ/a)^n
                       + (1+b) * sum (-a^{-1};Q)_{n+1} (-ABQ/a;Q)_n
                                   / (-B/a,AbQ/a;Q)_{n+1} (-b)^n
  ptc              the q^2-lattice corollary of the partial theta identity
  heine limit      the a -> oo consequence of heine at base q^2, where
                   lim (a;Q)_n / a^n = (-1)^n Q^(n(n-1)/2) turns the free
                   parameter into the factor (-1)^n q^(n(n-1)) twist^n
"""

from __future__ import annotations

from .checking import CheckReport, compare_expressions
from .errors import PreconditionViolatedError, ZeroFactorError
from .qfunctions import (
    hyp_sum,
    linear_bound,
    poch_val_floor,
    pochhammer,
    pochhammer_inv,
    PochhammerSpec,
    quadratic_bound,
)
from .series import LaurentSeries, Monomial, mono


def _require(cond: bool, what: str):
    if not cond:
        raise PreconditionViolatedError(what)


def _power_bound(z: Monomial, offset: int = 0):
    """Valuation bound for terms carrying z^n (+ a constant floor)."""
    if z.is_zero:
        return lambda n: offset if n == 0 else 1 << 60
    return linear_bound(z.exp, offset)


def _inf(base: Monomial, step: int, trunc: int):
    return pochhammer(PochhammerSpec(base, step), trunc)


def _inf_inv(base: Monomial, step: int, trunc: int):
    return pochhammer_inv(PochhammerSpec(base, step), trunc)


def _neg_floor(base: Monomial, step: int) -> int:
    return poch_val_floor(base, step)


def _pad_for(monos, trunc: int, step: int) -> int:
    pad = 16
    for m in monos:
        if m is not None and not m.is_zero and m.exp < 0:
            pad += 4 * (-_neg_floor(m, step)) + 4 * (-m.exp)
    return trunc + pad


def _fmt(check: str, step: int, **params) -> str:
    inner = ",".join(f"{k}={v}" for k, v in params.items())
    base = "q" if step == 1 else f"q^{step}"
    return f"{check}({inner};Q={base})"


def check_heine(a: Monomial, b: Monomial, c: Monomial, t: Monomial,
                trunc: int, *, base_exp: int = 1) -> CheckReport:
    """Verify the fundamental two-sided series rearrangement at monomials."""
    Q = base_exp
    _require(not t.is_zero and t.exp >= 1, "t must be a nonzero monomial with positive exponent")
    _require(not b.is_zero and b.exp >= 1, "b must be a nonzero monomial with positive exponent")
    _require(c.is_zero or c.exp >= 1, "c must vanish or have positive exponent")
    at = a * t
    _require(at.is_zero or at.exp >= 1, "a*t must vanish or have positive exponent")
    cb = c.div(b)
    qm = mono(1, Q)

    tr = _pad_for([a, b, c, t, at, cb], trunc, Q)
    try:
        lhs = hyp_sum(tr, step_exp=Q, num=[a, b], den=[qm, c], z=t,
                      val_bound=linear_bound(t.exp, _neg_floor(a, Q) + _neg_floor(b, Q)))
        inner = hyp_sum(tr, step_exp=Q, num=[cb, t], den=[qm, at], z=b,
                        val_bound=linear_bound(b.exp, _neg_floor(cb, Q) + _neg_floor(t, Q)))
        pref = _inf(b, Q, tr) * _inf(at, Q, tr) * _inf_inv(c, Q, tr) * _inf_inv(t, Q, tr)
        rhs = pref * inner
    except ZeroFactorError as exc:
        raise PreconditionViolatedError(str(exc))

    name = _fmt("heine", Q, a=a, b=b, c=c, t=t)
    return compare_expressions(name, {"lhs": lhs, "rhs": rhs}, trunc)


def check_iterated_heine(a: Monomial, b: Monomial, c: Monomial, t: Monomial,
                         trunc: int, *, base_exp: int = 1) -> CheckReport:
    """Verify the twice-iterated rearrangement; a may be the zero monomial."""
    Q = base_exp
    _require(not t.is_zero and t.exp >= 1, "t must be a nonzero monomial with positive exponent")
    _require(not b.is_zero, "b must be nonzero")
    _require(not c.is_zero and c.exp >= 1, "c must be nonzero with positive exponent")
    cb = c.div(b)
    _require(cb.exp >= 1, "c/b must have positive exponent")
    bt = b * t
    _require(bt.exp >= 1, "b*t must have positive exponent")
    abtc = (a * bt).div(c)
    qm = mono(1, Q)

    tr = _pad_for([a, b, c, t, cb, bt, abtc], trunc, Q)
    try:
        lhs = hyp_sum(tr, step_exp=Q, num=[a, b], den=[qm, c], z=t,
                      val_bound=linear_bound(t.exp, _neg_floor(a, Q) + _neg_floor(b, Q)))
        inner = hyp_sum(tr, step_exp=Q, num=[abtc, b], den=[qm, bt], z=cb,
                        val_bound=linear_bound(cb.exp, _neg_floor(abtc, Q) + _neg_floor(b, Q)))
        pref = _inf(cb, Q, tr) * _inf(bt, Q, tr) * _inf_inv(c, Q, tr) * _inf_inv(t, Q, tr)
        rhs = pref * inner
    except ZeroFactorError as exc:
        raise PreconditionViolatedError(str(exc))

    name = _fmt("iterated_heine", Q, a=a, b=b, c=c, t=t)
    return compare_expressions(name, {"lhs": lhs, "rhs": rhs}, trunc)


def check_asv(x: Monomial, y: Monomial, trunc: int, *, base_exp: int = 1) -> CheckReport:
    """Verify the two-term evaluation of sum (x;Q)_n / (y;Q)_n Q^n."""
    Q = base_exp
    _require(not x.is_zero and x.exp >= 1, "x must be a nonzero monomial with positive exponent")
    _require(not y.is_zero and y.exp >= 1, "y must be a nonzero monomial with positive exponent")
    qm = mono(1, Q)
    xq_y = (x * qm).div(y)
    q_y = qm.div(y)
    if xq_y.coeff == 1 and xq_y.exp == 0:
        raise ZeroDivisionError("1 - x*Q/y vanishes identically")

    tr = _pad_for([x, y, xq_y, q_y], trunc, Q)
    try:
        lhs = hyp_sum(tr, step_exp=Q, num=[x], den=[y], z=qm,
                      val_bound=linear_bound(Q, _neg_floor(x, Q)))
        head = _inf(x, Q, tr) * _inf_inv(y, Q, tr)
        head = head.mul_monomial(qm).mul_monomial(y.inv())
        head = head.div_binomial(xq_y.coeff, xq_y.exp)
        tail = LaurentSeries.one(tr + abs(min(0, q_y.exp)) + 1).mul_binomial(q_y.coeff, q_y.exp)
        tail = tail.div_binomial(xq_y.coeff, xq_y.exp)
        rhs = head + tail
    except ZeroFactorError as exc:
        raise PreconditionViolatedError(str(exc))

    name = _fmt("asv", Q, x=x, y=y)
    return compare_expressions(name, {"lhs": lhs, "rhs": rhs}, trunc)


def check_partial_theta(a: Monomial, b: Monomial, A: Monomial, B: Monomial,
                        trunc: int, *, base_exp: int = 1) -> CheckReport:
    """Verify the three-series partial theta transformation at monomials.

    b = 0 is allowed (both right-hand sums collapse to their n = 0 terms).
    """
    Q = base_exp
    qm = mono(1, Q)
    _require(not a.is_zero, "division by a: a must be nonzero")
    _require(not A.is_zero, "A occurs inverted: A must be nonzero")
    ainv = a.inv()
    Ainv = A.inv()
    AbQ = A * b * qm
    z1 = AbQ.div(a)
    B_a = B.div(a)
    ABQ_a = (A * B * qm).div(a)
    if not b.is_zero:
        _require(b.exp >= 1, "b must vanish or have positive exponent")
        _require(z1.exp >= 1, "A*b*Q/a must have positive exponent")

    tr = _pad_for([a, b, A, B, AbQ, z1, B_a, ABQ_a, Ainv, ainv], trunc, Q)
    try:
        lhs = hyp_sum(tr, step_exp=Q, num=[B, -AbQ], den=[-(a * qm), -(b * qm)], z=qm,
                      val_bound=linear_bound(Q, _neg_floor(B, Q) + _neg_floor(-AbQ, Q)))

        sum1 = hyp_sum(tr, step_exp=Q, num=[Ainv], den1=[-B_a], z=z1,
                       val_bound=_power_bound(z1, _neg_floor(Ainv, Q)))
        pref1 = (
            _inf(B, Q, tr) * _inf(-AbQ, Q, tr)
            * _inf_inv(-(b * qm), Q, tr) * _inf_inv(-(a * qm), Q, tr)
        ).mul_monomial(-ainv)
        rhs1 = pref1 * sum1

        sum2 = hyp_sum(tr, step_exp=Q, num1=[-ainv], num=[-ABQ_a],
                       den1=[-B_a, z1], z=-b,
                       val_bound=_power_bound(b, _neg_floor(-ainv, Q) + _neg_floor(-ABQ_a, Q)))
        rhs2 = sum2.mul_binomial(-b.coeff, b.exp)  # the (1 + b) factor
        rhs = rhs1 + rhs2
    except ZeroFactorError as exc:
        raise PreconditionViolatedError(str(exc))

    name = _fmt("partial_theta", Q, a=a, b=b, A=A, B=B)
    return compare_expressions(name, {"lhs": lhs, "rhs": rhs}, trunc)


def check_ptc(a: Monomial, A: Monomial, B: Monomial, trunc: int) -> CheckReport:
    """Verify the q^2-lattice partial theta corollary at monomials.

    Negative-exponent parameters are permitted wherever the factors stay
    well defined; the Laurent window absorbs them.
    """
    Q = 2
    q2 = mono(1, 2)
    _require(not a.is_zero, "division by a: a must be nonzero")
    ainv = a.inv()
    Bq2 = B * q2
    Aq2 = A * q2
    z1 = Aq2.div(a)
    Bq2_a = Bq2.div(a)
    AB_a = (A * B).div(a)
    if not A.is_zero:
        _require(z1.exp >= 1, "A*q^2/a must have positive exponent")

    tr = _pad_for([a, A, B, Bq2, Aq2, z1, Bq2_a, AB_a, ainv], trunc, Q)
    try:
        lhs = hyp_sum(tr, step_exp=Q, num=[-Bq2, -Aq2], den=[-(a * q2)], z=q2,
                      val_bound=linear_bound(2, _neg_floor(-Bq2, Q) + _neg_floor(-Aq2, Q)))

        sum1 = hyp_sum(tr, step_exp=Q, den1=[Bq2_a], z=z1, val_bound=_power_bound(z1))
        pref1 = (
            _inf(-Bq2, Q, tr) * _inf(-Aq2, Q, tr) * _inf_inv(-(a * q2), Q, tr)
        ).mul_monomial(-ainv)
        rhs1 = pref1 * sum1

        e2 = 0 if AB_a.is_zero else AB_a.exp
        sum2 = hyp_sum(tr, step_exp=Q, num1=[-ainv], den1=[Bq2_a, z1],
                       step_mono=lambda n: AB_a * mono(1, 2 * n + 2),
                       val_bound=quadratic_bound(1, 3 + e2, _neg_floor(-ainv, Q)))
        rhs = rhs1 + sum2
    except ZeroFactorError as exc:
        raise PreconditionViolatedError(str(exc))

    name = _fmt("ptc", Q, a=a, A=A, B=B)
    return compare_expressions(name, {"lhs": lhs, "rhs": rhs}, trunc)


def check_heine_limit(b: Monomial, c: Monomial, twist: Monomial,
                      trunc: int) -> CheckReport:
    """Verify the free-parameter limit of the heine rearrangement (base q^2).

    Setting t = twist/a and letting the top coefficient of (a;q^2)_n in a
    take over yields

        sum (b;q^2)_n (-1)^n q^(n(n-1)) twist^n / (q^2,c;q^2)_n
          = (b,twist;q^2)_oo / (c;q^2)_oo
              * sum (c/b;q^2)_n b^n / (q^2,twist;q^2)_n

    twist = -2q is the route used for the doubly-decorated families and
    twist = -q the route leading to the mock theta function.
    """
    Q = 2
    q2 = mono(1, 2)
    _require(not b.is_zero and b.exp >= 1, "b must be a nonzero monomial with positive exponent")
    _require(not c.is_zero and c.exp >= 1, "c must be a nonzero monomial with positive exponent")
    _require(not twist.is_zero and twist.exp >= 1,
             "twist must be a nonzero monomial with positive exponent")
    cb = c.div(b)

    tr = _pad_for([b, c, twist, cb], trunc, Q)
    try:
        lhs = hyp_sum(tr, step_exp=Q, num=[b], den=[q2, c],
                      step_mono=lambda n: -twist * mono(1, 2 * (n - 1)),
                      val_bound=quadratic_bound(1, twist.exp - 1, _neg_floor(b, Q)))
        inner = hyp_sum(tr, step_exp=Q, num=[cb], den=[q2, twist], z=b,
                        val_bound=linear_bound(b.exp, _neg_floor(cb, Q)))
        pref = _inf(b, Q, tr) * _inf(twist, Q, tr) * _inf_inv(c, Q, tr)
        rhs = pref * inner
    except ZeroFactorError as exc:
        raise PreconditionViolatedError(str(exc))

    name = _fmt("heine_limit", Q, b=b, c=c, twist=twist)
    return compare_expressions(name, {"lhs": lhs, "rhs": rhs}, trunc)
