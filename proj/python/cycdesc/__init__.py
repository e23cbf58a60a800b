"""Exact descent-set statistics of permutations and n-cycles.

Sets are given as an ambient size ``n`` plus an iterable of elements of
[n-1]; counts come back as Python ints, deviations as ``Fraction``.
"""

from ._core import (
    CapacityError,
    InvariantError,
    almost_all_fraction,
    alpha,
    alpha_cyc,
    alpha_deviation_scan,
    alternating_cycles,
    beta,
    beta_cyc,
    beta_deviation_scan,
    bound_checks,
    count_by_type_and_descents,
    count_lyndon,
    count_words_by_type,
    cycles_avoiding_decr3,
    cycles_avoiding_incr3,
    cyclic_eulerian,
    euler,
    eulerian,
    gamma,
    gamma_star,
    generalized_euler,
    kz_cycles,
    verify,
    verify_suites,
)

__all__ = [
    "CapacityError",
    "InvariantError",
    "almost_all_fraction",
    "alpha",
    "alpha_cyc",
    "alpha_deviation_scan",
    "alternating_cycles",
    "beta",
    "beta_cyc",
    "beta_deviation_scan",
    "bound_checks",
    "count_by_type_and_descents",
    "count_lyndon",
    "count_words_by_type",
    "cycles_avoiding_decr3",
    "cycles_avoiding_incr3",
    "cyclic_eulerian",
    "euler",
    "eulerian",
    "gamma",
    "gamma_star",
    "generalized_euler",
    "kz_cycles",
    "verify",
    "verify_suites",
]
