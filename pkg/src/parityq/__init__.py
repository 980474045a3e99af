"""Exact q-series toolkit for (over)partitions with parts separated by parity.

The package has five layers:

    series       truncated Laurent series over exact rationals
    qfunctions   Pochhammer products, theta/sigma/phi, summation engines
    enumeration  combinatorial oracles for the sixteen families
    transforms   parameterized q-hypergeometric transformation checkers
    registry     every verified identity, with 2-3 independent expressions

plus a CLI (``parityq``) that verifies, tabulates, enumerates and lists.
"""

from .checking import CheckReport, Mismatch
from .enumeration import (
    ALL_CONFIGS,
    DecoratedPartition,
    Parity,
    Restriction,
    SepConfig,
    Variant,
    count_overpartitions,
    count_sep,
    count_sep_enumerated,
    enumerate_sep,
    parse_variant,
    series_sep,
)
from .errors import (
    NonConvergentError,
    OutOfPrecisionError,
    PreconditionViolatedError,
    QSeriesError,
    UnknownIdentityError,
    ZeroFactorError,
)
from .qfunctions import (
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
from .registry import IdentityEntry, all_ids, check, entry, family_closed, registry
from .series import LaurentSeries, Monomial, Rational, mono
from .transforms import (
    check_asv,
    check_heine,
    check_heine_limit,
    check_iterated_heine,
    check_partial_theta,
    check_ptc,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CONFIGS", "CheckReport", "DecoratedPartition", "IdentityEntry",
    "INFINITE", "LaurentSeries", "Mismatch", "Monomial", "NonConvergentError",
    "OutOfPrecisionError", "Parity", "PochChain", "PochhammerSpec",
    "PreconditionViolatedError", "QSeriesError", "Rational", "Restriction",
    "SepConfig", "UnknownIdentityError", "Variant", "ZeroFactorError",
    "all_ids", "check", "check_asv", "check_heine", "check_heine_limit",
    "check_iterated_heine", "check_partial_theta", "check_ptc",
    "count_overpartitions", "count_sep", "count_sep_enumerated", "entry",
    "enumerate_sep", "family_closed", "hyp_sum", "linear_bound", "mono",
    "parse_variant", "phi", "poch_val_floor", "pochhammer", "pochhammer_in_a",
    "pochhammer_inv", "qpoch", "qpoch_inv", "quadratic_bound", "registry",
    "series_sep", "sigma", "sum_series", "theta",
]
