"""Registry of verified q-series identities for the sixteen families.

Every entry carries two or three independently constructed expression
builders (trunc -> LaurentSeries):

    oracle       enumeration-backed generating series (series_sep)
    construction the boundary decomposition over the largest low-block
                 part, as a sum of Pochhammer products
    closed       the evaluated form the identity asserts

plus a human-readable formula and the smallest truncation at which the
comparison says anything.  check() compares all expressions pairwise on
the guaranteed window and reports the first mismatching exponent with
exact rational values on failure.

The parameterized transformation checks that drive the closed forms are
registered as runner entries (ids starting with P-) at the exact
specializations used by the family derivations.

Family codes: "<low><high>" with parity o/e and restriction u/d, so
"od-eu" = odd distinct low block below an even unrestricted high block.
Variants: plain / over / mod.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .checking import CheckReport, compare_expressions
from .enumeration import SepConfig, Variant, series_sep
from .errors import UnknownIdentityError
from .qfunctions import (
    PochChain,
    hyp_sum,
    linear_bound,
    phi,
    pochhammer_in_a,
    qpoch,
    qpoch_inv,
    quadratic_bound,
    sigma,
    sum_series,
    theta,
)
from .series import LaurentSeries, Monomial, mono
from . import transforms

Builder = Callable[[int], LaurentSeries]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    description: str
    formula: str
    min_order: int
    expressions: dict[str, Builder] | None = None
    runner: Callable[[int], CheckReport] | None = None

    @property
    def tags(self) -> tuple[str, ...]:
        return tuple(self.expressions) if self.expressions else ()


# -- shared building blocks ----------------------------------------------


def _one(tr: int) -> LaurentSeries:
    return LaurentSeries.one(tr)


def _E(tr: int) -> LaurentSeries:
    """(-q^2;q^2)oo / (q^2;q^2)oo: overpartitions into even parts."""
    return qpoch(-1, 2, tr, step=2) * qpoch_inv(1, 2, tr, step=2)


def _O(tr: int) -> LaurentSeries:
    """(-q;q^2)oo / (q;q^2)oo: overpartitions into odd parts."""
    return qpoch(-1, 1, tr, step=2) * qpoch_inv(1, 1, tr, step=2)


def _chain(c, e, tr, *, inv=False) -> PochChain:
    return PochChain(mono(c, e), tr, step_exp=2, inverse=inv)


def _q2n(n: int, tr: int, coeff=1, shift: int = 0) -> LaurentSeries:
    return LaurentSeries.from_monomial(mono(coeff, 2 * n + shift), tr)


def _oracle(code: str, variant: Variant) -> Builder:
    cfg = SepConfig.from_code(code)
    return lambda tr: series_sep(cfg, variant, tr)


# -- closed forms and constructions, family by family --------------------


def t11_construction(tr):
    s = hyp_sum(tr, step_exp=2, num=[mono(-1, 0), mono(1, 1)],
                den=[mono(1, 2), mono(-1, 1)], z=mono(1, 2),
                val_bound=linear_bound(2))
    return _O(tr) * s


def t11_closed(tr):
    th = theta(tr)
    return (_E(tr) * (_one(tr) + th * th)).mul_monomial(mono(HALF, 0))


def t12_closed(tr):
    s = hyp_sum(tr, step_exp=2, num=[mono(-1, 1), mono(1, 2)],
                den=[mono(1, 3), mono(-1, 2)], z=mono(1, 2),
                val_bound=linear_bound(2))
    E = _E(tr)
    return E + (E * s).mul_monomial(mono(2, 1)).div_binomial(1, 1)


def t13_construction(tr):
    s = hyp_sum(tr, step_exp=2, num=[mono(-2, 2)], den=[mono(-2, 3)],
                z=mono(1, 2), val_bound=linear_bound(2))
    return qpoch(-2, 1, tr, step=2) + (qpoch(-2, 3, tr, step=2) * s).mul_monomial(mono(2, 2))


def t13_closed(tr):
    a = qpoch(-2, 1, tr, step=2)
    b = qpoch(-2, 2, tr, step=2)
    return a + (a - b).mul_monomial(mono(1, 1)).div_binomial(1, 1)


def t14_construction(tr):
    s = hyp_sum(tr, step_exp=2, num=[mono(-2, 1)], den=[mono(-2, 2)],
                z=mono(1, 2), val_bound=linear_bound(2))
    b = qpoch(-2, 2, tr, step=2)
    return b + (b * s).mul_monomial(mono(2, 1))


def t14_closed(tr):
    a = qpoch(-2, 1, tr, step=2)
    b = qpoch(-2, 2, tr, step=2)
    return b + (b.mul_monomial(mono(3, 0)) - a).mul_monomial(mono(1, 1)).div_binomial(1, 1)


def t15_construction(tr):
    s = hyp_sum(tr, step_exp=2, num=[mono(-1, 0)], den=[mono(-2, 1), mono(1, 2)],
                z=mono(1, 2), val_bound=linear_bound(2))
    return qpoch(-2, 1, tr, step=2) * s


def t15_closed(tr):
    s = hyp_sum(tr, step_exp=2, den=[mono(-1, 2)],
                step_mono=lambda n: mono(2, 2 * n - 1),
                val_bound=lambda n: n * n)
    return _E(tr) * s


def _even_tail(n: int, tr: int) -> LaurentSeries:
    """(-q^(2n+2);q^2)oo / (q^(2n+2);q^2)oo: overpartitions into evens > 2n."""
    return qpoch(-1, 2 * n + 2, tr, step=2) * qpoch_inv(1, 2 * n + 2, tr, step=2)


def _odd_tail(n: int, tr: int) -> LaurentSeries:
    """(-q^(2n+3);q^2)oo / (q^(2n+3);q^2)oo: overpartitions into odds > 2n+1."""
    return qpoch(-1, 2 * n + 3, tr, step=2) * qpoch_inv(1, 2 * n + 3, tr, step=2)


def t16_construction(tr):
    n1 = _chain(-2, 1, tr)
    s = sum_series(lambda n: (n1[n] * _even_tail(n, tr)).mul_monomial(mono(2, 2 * n + 1)),
                   linear_bound(2, 1), tr)
    return _E(tr) + s


def _sum_s1(tr, denom_coeff):
    """sum (-1)^n q^(2n) / (denom_coeff*q;q^2)_{n+1}."""
    return hyp_sum(tr, step_exp=2, den1=[mono(denom_coeff, 1)], z=mono(-1, 2),
                   val_bound=linear_bound(2))


def t16_closed(tr):
    s1 = _sum_s1(tr, 2)
    s2 = hyp_sum(tr, step_exp=2, num=[mono(-1, 2)], den1=[mono(-1, 2), mono(2, 1)],
                 step_mono=lambda n: mono(-2, 2 * n + 1),
                 val_bound=quadratic_bound(1, 2))
    E = _E(tr)
    return (E - (qpoch(-2, 1, tr, step=2) * s1).mul_monomial(mono(2, 1))
            + (E * s2).mul_monomial(mono(4, 1)))


def t17_construction(tr):
    n1 = _chain(-2, 2, tr)
    s = sum_series(lambda n: (n1[n] * _odd_tail(n, tr)).mul_monomial(mono(2, 2 * n + 2)),
                   linear_bound(2, 2), tr)
    return _O(tr) + s


def t17_closed(tr):
    s1 = _sum_s1(tr, 2)
    s2 = hyp_sum(tr, step_exp=2, num=[mono(-1, 1)], den1=[mono(2, 1), mono(-1, 2)],
                 step_mono=lambda n: mono(-2, 2 * n + 2),
                 val_bound=quadratic_bound(1, 3))
    pref = qpoch(-1, 1, tr, step=2) * qpoch_inv(1, 3, tr, step=2)
    return (_O(tr) - (qpoch(-2, 2, tr, step=2) * s1).mul_monomial(mono(2, 1))
            + (pref * s2).mul_monomial(mono(2, 1)))


def t18_construction(tr):
    n1 = _chain(-1, 1, tr)
    dq = _chain(1, 1, tr, inv=True)
    s = sum_series(
        lambda n: (n1[n] * dq[n + 1] * qpoch(-2, 2 * n + 2, tr, step=2))
        .mul_monomial(mono(2, 2 * n + 1)),
        linear_bound(2, 1), tr)
    return qpoch(-2, 2, tr, step=2) + s


def t18_closed(tr):
    s = hyp_sum(tr, step_exp=2, num=[mono(-1, 1)], den=[mono(1, 3), mono(-2, 2)],
                z=mono(1, 2), val_bound=linear_bound(2))
    b = qpoch(-2, 2, tr, step=2)
    return b + (b * s).mul_monomial(mono(2, 1)).div_binomial(1, 1)


def t21_construction(tr):
    s = hyp_sum(tr, step_exp=2, num=[mono(-1, 0)], den=[mono(1, 2), mono(-1, 1)],
                z=mono(1, 2), val_bound=linear_bound(2))
    return qpoch(-1, 1, tr, step=2) * s


def t21_closed(tr):
    return _E(tr) * phi(tr)


def t22_construction(tr):
    s = hyp_sum(tr, step_exp=2, num=[mono(-1, 1), mono(1, 2)], den=[mono(-1, 2)],
                z=mono(1, 2), val_bound=linear_bound(2))
    E = _E(tr)
    return E + (E * s).mul_monomial(mono(1, 1))


def _sum_ih(tr):
    """sum q^n / (-q^2;q^2)_{n+1}."""
    return hyp_sum(tr, step_exp=2, den1=[mono(-1, 2)], z=mono(1, 1),
                   val_bound=linear_bound(1))


def t22_closed(tr):
    s2 = hyp_sum(tr, step_exp=2, num=[mono(-1, 2)], den1=[mono(-1, 2), mono(1, 1)],
                 step_mono=lambda n: mono(-1, 2 * n + 1),
                 val_bound=quadratic_bound(1, 2))
    E = _E(tr)
    return (E - (qpoch(-1, 1, tr, step=2) * _sum_ih(tr)).mul_monomial(mono(1, 1))
            + (E * s2).mul_monomial(mono(2, 1)))


def t23_construction(tr):
    s = hyp_sum(tr, step_exp=2, num=[mono(1, 1), mono(-1, 0)], den=[mono(-1, 1)],
                z=mono(1, 2), val_bound=linear_bound(2))
    return (_O(tr) * (_one(tr) + s)).mul_monomial(mono(HALF, 0))


def t23_closed(tr):
    s = hyp_sum(tr, step_exp=2, num1=[mono(-1, 1)], den1=[mono(-1, 2), mono(1, 1)],
                step_mono=lambda n: mono(-1, 2 * n),
                val_bound=quadratic_bound(1, 1))
    head = (_O(tr) * (_one(tr) + s)).mul_monomial(mono(HALF, 0))
    return head - (qpoch(-1, 2, tr, step=2) * _sum_ih(tr)).mul_monomial(mono(1, 1))


def t24_closed(tr):
    s = hyp_sum(tr, step_exp=2, num=[mono(-1, 1)], den1=[mono(1, 1)],
                den=[mono(-1, 2)], z=mono(1, 2), val_bound=linear_bound(2))
    return qpoch(-1, 2, tr, step=2) * (_one(tr) + s.mul_monomial(mono(2, 1)))


def bg1_closed(tr):
    return qpoch_inv(1, 2, tr, step=2).div_binomial(1, 1)


def bg2_closed(tr):
    core = (_one(tr)
            - sigma(tr).substitute_sign().mul_monomial(mono(HALF, 0))
            + qpoch(-1, 1, tr, step=1, sign=-1).mul_monomial(mono(HALF, 0)))
    return qpoch_inv(1, 2, tr, step=2) * core


def xr2_qsum(tr):
    s = hyp_sum(tr, step_exp=2, num=[mono(-1, 0)], den1=[mono(-1, 0)],
                z=mono(1, 1), val_bound=linear_bound(1))
    return s.mul_monomial(mono(2, 0))


def _r2(n: int) -> int:
    count = 0
    x = 0
    while x * x <= n:
        m = n - x * x
        y = math.isqrt(m)
        if y * y == m:
            ways = (1 if x == 0 else 2) * (1 if y == 0 else 2)
            count += ways
        x += 1
    return count


def xr2_lattice(tr):
    coeffs = [Fraction(_r2(n)) for n in range(tr)]
    th2 = LaurentSeries(0, coeffs, tr)
    return (_one(tr) + th2).mul_monomial(mono(HALF, 0))


def xr2_divisor(tr):
    coeffs = [Fraction(0)] * tr
    coeffs[0] = Fraction(1)
    for n in range(1, tr):
        d1 = d3 = 0
        for d in range(1, n + 1):
            if n % d == 0:
                if d % 4 == 1:
                    d1 += 1
                elif d % 4 == 3:
                    d3 += 1
        coeffs[n] = Fraction(2 * (d1 - d3))
    return LaurentSeries(0, coeffs, tr)


def xih_alternating(tr):
    return hyp_sum(tr, step_exp=2, den1=[mono(1, 1)], z=mono(-1, 2),
                   val_bound=linear_bound(2))


def _llim_range(tr: int):
    return [n for n in range(21) if n * (n - 1) // 2 < tr]


def llim_top_coefficients(tr):
    acc = LaurentSeries.zero(tr)
    for n in _llim_range(tr):
        acc = acc + pochhammer_in_a(n, tr)[n]
    return acc


def llim_closed(tr):
    acc = LaurentSeries.zero(tr)
    for n in _llim_range(tr):
        acc = acc + LaurentSeries.from_monomial(mono((-1) ** n, n * (n - 1) // 2), tr)
    return acc


# -- the registry itself --------------------------------------------------


def _family_entry(id_, code, variant, closed, construction, formula, extra=""):
    desc = f"F[{code}] {variant.value}: enumeration vs construction vs closed form"
    if construction is None:
        desc = f"F[{code}] {variant.value}: enumeration vs closed form"
    exprs = {"oracle": _oracle(code, variant)}
    if construction is not None:
        exprs["construction"] = construction
    exprs["closed"] = closed
    return IdentityEntry(id_, desc + extra, formula, 10, exprs)


def _reduction_entry(id_, code, va, vb, third=None, third_tag="closed"):
    exprs = {f"{va.value}-oracle": _oracle(code, va), f"{vb.value}-oracle": _oracle(code, vb)}
    formula = f"F[{code}] {va.value} = F[{code}] {vb.value}"
    if third is not None:
        exprs[third_tag] = third
        formula += " (= shared closed form)"
    return IdentityEntry(
        id_, f"F[{code}]: the {va.value} and {vb.value} variants coincide",
        formula, 10, exprs)


def _runner_entry(id_, description, formula, runner):
    return IdentityEntry(id_, description, formula, 10, None, runner)


def _build_registry() -> list[IdentityEntry]:
    m = mono
    entries = [
        _family_entry(
            "T1.1", "eu-ou", Variant.OVERLINED, t11_closed, t11_construction,
            "(-q^2;q^2)oo/(2(q^2;q^2)oo) * (1 + Theta(q)^2)"),
        _family_entry(
            "T1.2", "ou-eu", Variant.OVERLINED, t12_closed, None,
            "E + 2q/(1-q) * E * sum (-q,q^2;q^2)_n/(q^3,-q^2;q^2)_n q^(2n), "
            "E = (-q^2;q^2)oo/(q^2;q^2)oo"),
        _family_entry(
            "T1.3", "ed-od", Variant.OVERLINED, t13_closed, t13_construction,
            "(-2q;q^2)oo - q/(1-q)*(-2q^2;q^2)oo + q/(1-q)*(-2q;q^2)oo"),
        _family_entry(
            "T1.4", "od-ed", Variant.OVERLINED, t14_closed, t14_construction,
            "(-2q^2;q^2)oo + q/(1-q)*(3(-2q^2;q^2)oo - (-2q;q^2)oo)"),
        _family_entry(
            "T1.5", "eu-od", Variant.OVERLINED, t15_closed, t15_construction,
            "E * sum 2^n q^(n^2) / (-q^2;q^2)_n"),
        _family_entry(
            "T1.6", "od-eu", Variant.OVERLINED, t16_closed, t16_construction,
            "E - 2q(-2q;q^2)oo * sum (-1)^n q^(2n)/(2q;q^2)_{n+1} "
            "+ 4qE * sum (-1)^n 2^n q^(n^2+2n)/((1+q^(2n+2))(2q;q^2)_{n+1})"),
        _family_entry(
            "T1.7", "ed-ou", Variant.OVERLINED, t17_closed, t17_construction,
            "O - 2q(-2q^2;q^2)oo * sum (-1)^n q^(2n)/(2q;q^2)_{n+1} "
            "+ 2q (-q;q^2)oo/(q^3;q^2)oo * sum (-1)^n 2^n (-q;q^2)_n q^(n^2+3n)"
            "/(2q,-q^2;q^2)_{n+1}, O = (-q;q^2)oo/(q;q^2)oo"),
        _family_entry(
            "T1.8", "ou-ed", Variant.OVERLINED, t18_closed, t18_construction,
            "(-2q^2;q^2)oo * (1 + 2q/(1-q) * sum (-q;q^2)_n/(q^3,-2q^2;q^2)_n q^(2n))"),
        _family_entry(
            "T2.1", "eu-od", Variant.MODIFIED, t21_closed, t21_construction,
            "E * phi(q), phi the third order mock theta function"),
        _family_entry(
            "T2.2", "od-eu", Variant.MODIFIED, t22_closed, t22_construction,
            "E - q(-q;q^2)oo * sum q^n/(-q^2;q^2)_{n+1} "
            "+ 2qE * sum (-1)^n q^(n^2+2n)/((1+q^(2n+2))(q;q^2)_{n+1})"),
        _family_entry(
            "T2.3", "ed-ou", Variant.MODIFIED, t23_closed, t23_construction,
            "(-q;q^2)oo/(2(q;q^2)oo) * (1 + sum (-1)^n (-q;q^2)_{n+1} q^(n^2+n)"
            "/(-q^2,q;q^2)_{n+1}) - q(-q^2;q^2)oo * sum q^n/(-q^2;q^2)_{n+1}"),
        _family_entry(
            "T2.4", "ou-ed", Variant.MODIFIED, t24_closed, None,
            "(-q^2;q^2)oo * (1 + 2q * sum (-q;q^2)_n/((q;q^2)_{n+1}(-q^2;q^2)_n) q^(2n))"),
        _family_entry(
            "BG1", "eu-ou", Variant.PLAIN, bg1_closed, None,
            "1 / ((1-q)(q^2;q^2)oo)"),
        _family_entry(
            "BG2", "od-eu", Variant.PLAIN, bg2_closed, None,
            "(1 - sigma(-q)/2 + (-q;-q)oo/2) / (q^2;q^2)oo"),
        _reduction_entry("RED1", "eu-ou", Variant.MODIFIED, Variant.OVERLINED, t11_closed),
        _reduction_entry("RED2", "ou-eu", Variant.MODIFIED, Variant.OVERLINED, t12_closed),
        _reduction_entry("RED3", "ed-od", Variant.MODIFIED, Variant.PLAIN),
        _reduction_entry("RED4", "od-ed", Variant.MODIFIED, Variant.PLAIN),
        IdentityEntry(
            "X-R2",
            "Lambert-type sum vs two-squares lattice count vs mod-4 divisor excess",
            "2 sum q^n/(1+q^(2n)) = (1 + sum r2(n) q^n)/2 = 1 + 2 sum (d1(n)-d3(n)) q^n",
            10,
            {"qsum": xr2_qsum, "lattice": xr2_lattice, "divisor": xr2_divisor}),
        IdentityEntry(
            "X-IH",
            "alternating and positive forms of the same summation",
            "sum (-1)^n q^(2n)/(q;q^2)_{n+1} = sum q^n/(-q^2;q^2)_{n+1}",
            10,
            {"alternating": xih_alternating, "positive": _sum_ih}),
        IdentityEntry(
            "L-LIM",
            "top coefficient in a of prod (1-a q^k), k < n, for n <= 20",
            "[a^n] (a;q)_n = (-1)^n q^(n(n-1)/2)",
            1,
            {"top-coefficient": llim_top_coefficients, "closed": llim_closed}),
    ]

    runner_specs = [
        ("P-HEINE-A",
         "series rearrangement at base q^2 with a=-1, b=q, c=-q, t=q^2 "
         "(drives the T1.1 evaluation)",
         "sum (a,b;Q)_n/(Q,c;Q)_n t^n = (b,at;Q)oo/(c,t;Q)oo "
         "* sum (c/b,t;Q)_n/(Q,at;Q)_n b^n",
         lambda tr: transforms.check_heine(m(-1, 0), m(1, 1), m(-1, 1), m(1, 2),
                                           tr, base_exp=2)),
        ("P-HLIM-A",
         "free-parameter limit of the rearrangement, twist -2q, b=q^2, c=-q^2 "
         "(drives the T1.5 evaluation)",
         "sum 2^n (b;q^2)_n q^(n^2)/(q^2,c;q^2)_n = (b,-2q;q^2)oo/(c;q^2)oo "
         "* sum (c/b;q^2)_n/(q^2,-2q;q^2)_n b^n",
         lambda tr: transforms.check_heine_limit(m(1, 2), m(-1, 2), m(-2, 1), tr)),
        ("P-HLIM-B",
         "free-parameter limit of the rearrangement, twist -q, b=q^2, c=-q^2 "
         "(drives the T2.1 evaluation)",
         "sum (b;q^2)_n q^(n^2)/(q^2,c;q^2)_n = (b,-q;q^2)oo/(c;q^2)oo "
         "* sum (c/b;q^2)_n/(q^2,-q;q^2)_n b^n",
         lambda tr: transforms.check_heine_limit(m(1, 2), m(-1, 2), m(-1, 1), tr)),
        ("P-IH-A",
         "iterated rearrangement at a=0, b=q, c=-q^2, t=q (integer-exponent "
         "stand-in for the X-IH step)",
         "sum (a,b)_n/(q,c)_n t^n = (c/b,bt)oo/(c,t)oo "
         "* sum (abt/c,b)_n/(q,bt)_n (c/b)^n",
         lambda tr: transforms.check_iterated_heine(m(0, 0), m(1, 1), m(-1, 2),
                                                    m(1, 1), tr)),
        ("P-ASV-A",
         "two-term evaluation at base q^2 with x=-2q^2, y=-2q^3 "
         "(drives the T1.3 evaluation)",
         "sum (x;Q)_n/(y;Q)_n Q^n = Q(x;Q)oo/(y(1-xQ/y)(y;Q)oo) + (1-Q/y)/(1-xQ/y)",
         lambda tr: transforms.check_asv(m(-2, 2), m(-2, 3), tr, base_exp=2)),
        ("P-ASV-B",
         "two-term evaluation at base q^2 with x=-2q, y=-2q^2 "
         "(drives the T1.4 evaluation)",
         "sum (x;Q)_n/(y;Q)_n Q^n = Q(x;Q)oo/(y(1-xQ/y)(y;Q)oo) + (1-Q/y)/(1-xQ/y)",
         lambda tr: transforms.check_asv(m(-2, 1), m(-2, 2), tr, base_exp=2)),
        ("P-PT-A",
         "three-series partial theta transformation at a=b=A=B=q",
         "see check_partial_theta",
         lambda tr: transforms.check_partial_theta(m(1, 1), m(1, 1), m(1, 1),
                                                   m(1, 1), tr)),
        ("P-PT-B0",
         "partial theta transformation with the degenerate b=0 (both "
         "right-hand sums collapse to their first terms)",
         "see check_partial_theta",
         lambda tr: transforms.check_partial_theta(m(1, 1), m(0, 0), m(1, 1),
                                                   m(1, 1), tr)),
        ("P-PTC-A",
         "q^2-lattice corollary at a=1, A=-1, B=2/q (drives the T1.6 evaluation)",
         "see check_ptc",
         lambda tr: transforms.check_ptc(m(1, 0), m(-1, 0), m(2, -1), tr)),
        ("P-PTC-B",
         "q^2-lattice corollary at a=q, A=-q, B=2 (drives the T1.7 evaluation)",
         "see check_ptc",
         lambda tr: transforms.check_ptc(m(1, 1), m(-1, 1), m(2, 0), tr)),
        ("P-PTC-C",
         "q^2-lattice corollary at a=1, A=-1, B=1/q (drives the T2.2 evaluation)",
         "see check_ptc",
         lambda tr: transforms.check_ptc(m(1, 0), m(-1, 0), m(1, -1), tr)),
        ("P-PTC-D",
         "q^2-lattice corollary at a=1/q, A=1/q^2, B=-1/q (drives the T2.3 "
         "evaluation)",
         "see check_ptc",
         lambda tr: transforms.check_ptc(m(1, -1), m(1, -2), m(-1, -1), tr)),
    ]
    entries.extend(_runner_entry(*spec) for spec in runner_specs)
    return entries


_REGISTRY: list[IdentityEntry] | None = None


def registry() -> list[IdentityEntry]:
    """All identity entries, in fixed order."""
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build_registry()
    return _REGISTRY


def entry(id_: str) -> IdentityEntry:
    for e in registry():
        if e.id == id_:
            return e
    raise UnknownIdentityError(id_)


def all_ids() -> list[str]:
    return [e.id for e in registry()]


def check(id_: str, order: int, *, perturb: tuple[str, int] | None = None) -> CheckReport:
    """Run one registered check at the given order.

    perturb=(tag, k) adds q^k to the tagged expression before comparing;
    it exists so the harness can prove the comparison would notice.
    """
    e = entry(id_)
    if order < e.min_order:
        raise ValueError(f"{id_} needs order >= {e.min_order}, got {order}")
    if e.runner is not None:
        if perturb is not None:
            raise ValueError(f"{id_} is a parameterized check; it has no expressions to perturb")
        rep = e.runner(order)
        return CheckReport(e.id, rep.order, rep.status, rep.mismatch)
    exprs = {}
    for tag, builder in e.expressions.items():
        s = builder(order)
        if s.trunc < order:
            raise ValueError(f"{id_}/{tag} delivered window {s.trunc} < {order}")
        exprs[tag] = s
    if perturb is not None:
        tag, k = perturb
        if tag not in exprs:
            raise ValueError(f"{id_} has no expression tagged {tag!r}")
        exprs[tag] = exprs[tag] + LaurentSeries.from_monomial(mono(1, k), exprs[tag].trunc)
    return compare_expressions(e.id, exprs, order)


# -- family table support --------------------------------------------------

_FAMILY_CLOSED: dict[tuple[str, str], tuple[str, Builder]] = {
    ("eu-ou", "over"): ("T1.1", t11_closed),
    ("ou-eu", "over"): ("T1.2", t12_closed),
    ("ed-od", "over"): ("T1.3", t13_closed),
    ("od-ed", "over"): ("T1.4", t14_closed),
    ("eu-od", "over"): ("T1.5", t15_closed),
    ("od-eu", "over"): ("T1.6", t16_closed),
    ("ed-ou", "over"): ("T1.7", t17_closed),
    ("ou-ed", "over"): ("T1.8", t18_closed),
    ("eu-od", "mod"): ("T2.1", t21_closed),
    ("od-eu", "mod"): ("T2.2", t22_closed),
    ("ed-ou", "mod"): ("T2.3", t23_closed),
    ("ou-ed", "mod"): ("T2.4", t24_closed),
    ("eu-ou", "mod"): ("RED1+T1.1", t11_closed),
    ("ou-eu", "mod"): ("RED2+T1.2", t12_closed),
    ("eu-ou", "plain"): ("BG1", bg1_closed),
    ("od-eu", "plain"): ("BG2", bg2_closed),
}


def family_closed(code: str, variant: Variant) -> tuple[str, Builder] | None:
    """The registered closed form for a family/variant, or None."""
    code = SepConfig.from_code(code).code
    return _FAMILY_CLOSED.get((code, variant.value))
