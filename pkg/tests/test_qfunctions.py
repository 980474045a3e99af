"""Pochhammer builders, special series, and the summation engines."""

import math
import random
from fractions import Fraction as F

import pytest

from parityq.errors import NonConvergentError, ZeroFactorError
from parityq.qfunctions import (
    INFINITE,
    PochChain,
    PochhammerSpec,
    hyp_sum,
    linear_bound,
    phi,
    poch_val_floor,
    pochhammer,
    pochhammer_in_a,
    pochhammer_inv,
    qpoch,
    qpoch_inv,
    quadratic_bound,
    sigma,
    sum_series,
    theta,
)
from parityq.series import LaurentSeries, mono


def coeffs(s, lo, hi):
    return [s.coefficient(k) for k in range(lo, hi)]


class TestPochhammer:
    def test_finite_product(self):
        s = qpoch(1, 1, 5, length=2)  # (1-q)(1-q^2)
        assert coeffs(s, 0, 5) == [1, -1, -1, 1, 0]

    def test_infinite_product_pentagonal(self):
        # (q^2;q^2)_oo is supported exactly on twice the generalized
        # pentagonal numbers, with signs; brute-force signed partition count
        n_max = 40
        s = qpoch(1, 2, n_max, step=2)
        # oracle: distinct partitions into even parts, weighted (-1)^(#parts)
        memo = {}

        def signed(n, largest):
            if n == 0:
                return 1
            key = (n, largest)
            if key not in memo:
                top = min(largest, n)
                if top % 2:
                    top -= 1
                acc = 0
                s2 = top
                while s2 >= 2:
                    acc -= signed(n - s2, s2 - 2)
                    s2 -= 2
                memo[key] = acc
            return memo[key]

        exp_coeffs = [signed(n, n) for n in range(n_max)]
        assert coeffs(s, 0, n_max) == exp_coeffs
        nz = [n for n in range(n_max) if s.coefficient(n) != 0]
        gp = sorted({k * (3 * k - 1) // 2 for k in range(1, 8)}
                    | {k * (3 * k + 1) // 2 for k in range(0, 7)})
        assert nz == [2 * g for g in gp if 2 * g < n_max]

    def test_infinite_product_weight_two(self):
        # (-2q;q^2)_oo = (1+2q)(1+2q^3)(1+2q^5)...
        s = qpoch(-2, 1, 6, step=2)
        assert coeffs(s, 0, 6) == [1, 2, 0, 2, 4, 2]

    def test_zero_factor_rejected(self):
        with pytest.raises(ZeroFactorError):
            pochhammer(PochhammerSpec(mono(1, 0), 1), 10)

    def test_inverse_matches_invert(self):
        a = qpoch_inv(1, 1, 25)
        b = qpoch(1, 1, 25).invert()
        assert a == b

    def test_prefix_recurrence(self):
        rng = random.Random(11)
        for _ in range(12):
            base = mono(F(rng.randrange(-4, 5) or 2, rng.choice([1, 2])), rng.randrange(0, 3))
            step = rng.choice([1, 2])
            chain = PochChain(base, 30, step_exp=step)
            for n in range(0, 30):
                factor = mono(base.coeff, base.exp + n * step)
                lhs = chain[n + 1]
                rhs = chain[n].mul_binomial(factor.coeff, factor.exp)
                assert lhs == rhs

    def test_tail_splitting(self):
        # (a;Q)_oo = (a;Q)_n * (a Q^n;Q)_oo
        for n in range(0, 21, 4):
            full = qpoch(-1, 1, 40, step=2)
            head = PochChain(mono(-1, 1), 40, step_exp=2)[n]
            tail = qpoch(-1, 1 + 2 * n, 40, step=2)
            assert full == head * tail

    def test_signed_step(self):
        # (-q;-q)_oo two ways: signed step vs sign substitution
        a = qpoch(-1, 1, 30, sign=-1)
        b = qpoch(1, 1, 30).substitute_sign()
        assert a == b


class TestTheta:
    def test_small(self):
        assert coeffs(theta(5), 0, 5) == [1, 2, 0, 0, 2]

    def test_order_one(self):
        assert coeffs(theta(1), 0, 1) == [1]

    def test_square_counts_lattice_points(self):
        n_max = 120
        t2 = theta(n_max) ** 2
        for n in range(n_max):
            r2 = sum(1
                     for x in range(-12, 13)
                     for y in range(-12, 13)
                     if x * x + y * y == n)
            assert t2.coefficient(n) == r2

    def test_square_equals_divisor_excess(self):
        n_max = 120
        t2 = theta(n_max) ** 2
        for n in range(1, n_max):
            d1 = sum(1 for d in range(1, n + 1) if n % d == 0 and d % 4 == 1)
            d3 = sum(1 for d in range(1, n + 1) if n % d == 0 and d % 4 == 3)
            assert t2.coefficient(n) == 4 * (d1 - d3)


class TestSigmaPhi:
    def test_sigma_leading_terms(self):
        assert coeffs(sigma(5), 0, 5) == [1, 1, -1, 2, -2]

    def test_sigma_order_one(self):
        assert coeffs(sigma(1), 0, 1) == [1]

    def test_sigma_against_standalone_terms(self):
        # re-sum each term from scratch (no shared prefix chain)
        n_max = 50
        total = LaurentSeries.zero(n_max)
        n = 0
        while n * (n + 1) // 2 < n_max:
            term = LaurentSeries.from_monomial(mono(1, n * (n + 1) // 2), n_max)
            for k in range(n):
                term = term.div_binomial(F(-1), 1 + k)
            total = total + term
            n += 1
        assert total == sigma(n_max)

    def test_phi_leading_terms(self):
        assert coeffs(phi(6), 0, 6) == [1, 1, 0, -1, 1, 1]

    def test_phi_order_one(self):
        assert coeffs(phi(1), 0, 1) == [1]


class TestSumSeries:
    def test_plain_geometric(self):
        s = sum_series(lambda n: LaurentSeries.from_monomial(mono(1, 2 * n), 7),
                       linear_bound(2), 7)
        assert coeffs(s, 0, 7) == [1, 0, 1, 0, 1, 0, 1]

    def test_inner_sum_with_weights(self):
        chain = PochChain(mono(-1, 2), 5, step_exp=2, inverse=True)
        s = sum_series(lambda n: chain[n].mul_monomial(mono(2 ** n, n * n)),
                       lambda n: n * n, 5)
        assert coeffs(s, 0, 5) == [1, 2, 0, -2, 4]

    def test_laurent_offset_bound(self):
        # bound n-1 (a Laurent offset): engine must include n = 0..3 for trunc 3
        calls = []

        def term(n):
            calls.append(n)
            return LaurentSeries.from_monomial(mono(1, n - 1), 6)

        sum_series(term, lambda n: n - 1, 3)
        assert calls == [0, 1, 2, 3]

    def test_nonconvergent_sum_errors(self):
        with pytest.raises(NonConvergentError):
            sum_series(lambda n: LaurentSeries.one(10), lambda n: 0, 10)

    def test_result_independent_of_generous_bound(self):
        term = lambda n: LaurentSeries.from_monomial(mono(1, 2 * n), 9)
        tight = sum_series(term, linear_bound(2), 9)
        generous = sum_series(term, linear_bound(1), 9)
        assert tight == generous


class TestHypSum:
    def test_matches_chain_evaluation(self):
        # sum (-q;q^2)_n (q^2;q^2)_n / (q^3,-q^2;q^2)_n q^(2n) both ways
        tr = 40
        n1, n2 = PochChain(mono(-1, 1), tr, step_exp=2), PochChain(mono(1, 2), tr, step_exp=2)
        d1 = PochChain(mono(1, 3), tr, step_exp=2, inverse=True)
        d2 = PochChain(mono(-1, 2), tr, step_exp=2, inverse=True)
        direct = sum_series(
            lambda n: n1[n] * n2[n] * d1[n] * d2[n]
            * LaurentSeries.from_monomial(mono(1, 2 * n), tr),
            linear_bound(2), tr)
        fast = hyp_sum(tr, step_exp=2, num=[mono(-1, 1), mono(1, 2)],
                       den=[mono(1, 3), mono(-1, 2)], z=mono(1, 2),
                       val_bound=linear_bound(2))
        assert direct == fast

    def test_shifted_prefixes(self):
        # sum q^n / (-q^2;q^2)_{n+1} via hyp_sum vs chains
        tr = 30
        d = PochChain(mono(-1, 2), tr, step_exp=2, inverse=True)
        direct = sum_series(lambda n: d[n + 1].mul_monomial(mono(1, n)),
                            linear_bound(1), tr)
        fast = hyp_sum(tr, step_exp=2, den1=[mono(-1, 2)], z=mono(1, 1),
                       val_bound=linear_bound(1))
        assert direct == fast

    def test_quadratic_exponent_steps(self):
        # sum 2^n q^(n^2) / (-q^2;q^2)_n
        tr = 30
        d = PochChain(mono(-1, 2), tr, step_exp=2, inverse=True)
        direct = sum_series(lambda n: d[n].mul_monomial(mono(2 ** n, n * n)),
                            lambda n: n * n, tr)
        fast = hyp_sum(tr, step_exp=2, den=[mono(-1, 2)],
                       step_mono=lambda n: mono(2, 2 * n - 1),
                       val_bound=lambda n: n * n)
        assert direct == fast


class TestBounds:
    def test_quadratic_envelope_is_monotone_lower_bound(self):
        for a, b, c in [(1, 2, 0), (1, -7, 3), (2, -11, -5), (1, 0, 0)]:
            vb = quadratic_bound(a, b, c)
            raw = lambda n: a * n * n + b * n + c
            values = [vb(n) for n in range(60)]
            assert all(values[i] <= values[i + 1] for i in range(59))
            for n in range(60):
                assert all(vb(n) <= raw(m) for m in range(n, n + 25))

    def test_poch_val_floor(self):
        assert poch_val_floor(mono(2, -1), 2) == -1
        assert poch_val_floor(mono(1, -3), 1) == -6
        assert poch_val_floor(mono(5, 0), 1) == 0
        assert poch_val_floor(mono(0, 0), 1) == 0


class TestPochhammerInA:
    def test_empty_product(self):
        out = pochhammer_in_a(0, 6)
        assert len(out) == 1 and out[0] == LaurentSeries.one(6)

    def test_two_factors(self):
        out = pochhammer_in_a(2, 6)
        assert out[0] == LaurentSeries.one(6)
        assert coeffs(out[1], 0, 2) == [-1, -1]
        assert coeffs(out[2], 0, 2) == [0, 1]

    def test_top_coefficient_closed_form(self):
        for n in range(21):
            tr = n * (n - 1) // 2 + 2
            top = pochhammer_in_a(n, tr)[n]
            expect = LaurentSeries.from_monomial(mono((-1) ** n, n * (n - 1) // 2), tr)
            assert top == expect

    def test_full_expansion_consistency(self):
        # evaluating the polynomial at a = q^3 must reproduce (q^3;q)_n
        n, tr = 5, 25
        out = pochhammer_in_a(n, tr)
        total = LaurentSeries.zero(tr)
        for j, cj in enumerate(out):
            total = total + cj.mul_monomial(mono(1, 3 * j))
        assert total == qpoch(1, 3, tr, length=n)
