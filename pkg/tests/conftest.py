"""Shared helpers: random monomial tuples for the transformation checkers."""

from fractions import Fraction as F

from parityq.errors import PreconditionViolatedError
from parityq.series import mono
from parityq import transforms

COEFF_POOL = [F(1), F(-1), F(2), F(-2), F(3), F(-3), F(1, 2), F(-1, 2)]


def _mono(rng, lo, hi):
    return mono(rng.choice(COEFF_POOL), rng.randrange(lo, hi + 1))


def sample_heine(rng):
    base_exp = rng.choice([1, 2])
    a = mono(0, 0) if rng.random() < 0.2 else _mono(rng, 0, 2)
    b = _mono(rng, 1, 3)
    c = mono(0, 0) if rng.random() < 0.1 else _mono(rng, 1, 3)
    t = _mono(rng, 1, 3)
    return lambda order: transforms.check_heine(a, b, c, t, order, base_exp=base_exp)


def sample_iterated_heine(rng):
    base_exp = rng.choice([1, 2])
    a = mono(0, 0) if rng.random() < 0.3 else _mono(rng, 0, 2)
    b = _mono(rng, 0, 2)
    c = mono(rng.choice(COEFF_POOL), b.exp + rng.randrange(1, 3))
    t = _mono(rng, 1, 2)
    return lambda order: transforms.check_iterated_heine(a, b, c, t, order, base_exp=base_exp)


def sample_asv(rng):
    base_exp = rng.choice([1, 2])
    x = _mono(rng, 1, 3)
    y = _mono(rng, 1, 3)
    return lambda order: transforms.check_asv(x, y, order, base_exp=base_exp)


def sample_partial_theta(rng):
    a = _mono(rng, 0, 2)
    A = _mono(rng, 0, 2)
    B = _mono(rng, -1, 2)
    b = mono(0, 0) if rng.random() < 0.25 else _mono(rng, 1, 2)
    return lambda order: transforms.check_partial_theta(a, b, A, B, order)


def sample_ptc(rng):
    a = _mono(rng, -1, 1)
    A = _mono(rng, -2, 1)
    B = _mono(rng, -2, 1)
    return lambda order: transforms.check_ptc(a, A, B, order)


def sample_heine_limit(rng):
    b = _mono(rng, 1, 3)
    c = _mono(rng, 1, 3)
    twist = rng.choice([mono(-2, 1), mono(-1, 1)])
    return lambda order: transforms.check_heine_limit(b, c, twist, order)


ALL_SAMPLERS = {
    "heine": sample_heine,
    "iterated_heine": sample_iterated_heine,
    "asv": sample_asv,
    "partial_theta": sample_partial_theta,
    "ptc": sample_ptc,
    "heine_limit": sample_heine_limit,
}


def run_valid_samples(rng, sampler, count, order):
    """Draw tuples until `count` valid ones have been checked; all must pass.

    Tuples outside a checker's formal region (PreconditionViolated, or the
    explicit division-degeneracy) are discarded, not counted.
    """
    passes = 0
    attempts = 0
    while passes < count:
        attempts += 1
        assert attempts < 80 * count, "rejection sampling is stuck"
        runner = sampler(rng)
        try:
            report = runner(order)
        except (PreconditionViolatedError, ZeroDivisionError):
            continue
        assert report.passed, report.describe()
        passes += 1
    return passes
