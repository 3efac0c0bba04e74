"""Periodic, aperiodic, fixed-aperiodic and fixed-extended autocorrelations.

Each family sums s(x) s(x + a) over a coset k + V of the free coordinates;
they differ only in which masks fix the coset and which shifts are allowed.
"""

from __future__ import annotations

import numpy as np

from qnl.bits import complement, coset, popcount
from qnl.boolean.models import check_mask, require_precedes
from qnl.boolean.truth_table import TruthTable


def _coset_sum(t: TruthTable, a: int, fixed: int, k: int) -> int:
    xs = coset(k, complement(fixed, t.n))
    s = t.signs()
    return int(np.sum(s[xs] * s[xs ^ a]))


def periodic_autocorrelation(t: TruthTable, a: int) -> int:
    """r(a) = sum_x (-1)^(f(x) + f(x + a))."""
    check_mask(a, t.n, "a")
    return _coset_sum(t, a, 0, 0)


def aperiodic_autocorrelation(t: TruthTable, a: int, k: int) -> int:
    """s(a, k), summed over k + V_a-bar."""
    check_mask(a, t.n, "a")
    require_precedes(k, a, name="k", bound="a")
    return _coset_sum(t, a, a, k)


def fixed_aperiodic_autocorrelation(t: TruthTable, a: int, mu: int, k: int) -> int:
    """s(a, mu, k), summed over k + V_mu-bar with a ⪯ mu."""
    check_mask(mu, t.n, "mu")
    require_precedes(a, mu, name="a", bound="mu")
    require_precedes(k, mu, name="k", bound="mu")
    return _coset_sum(t, a, mu, k)


def fixed_extended_autocorrelation(t: TruthTable, a: int, mu: int, k: int) -> int:
    """v(a, mu, k): as the fixed-aperiodic form but with any shift a."""
    check_mask(a, t.n, "a")
    check_mask(mu, t.n, "mu")
    require_precedes(k, mu, name="k", bound="mu")
    return _coset_sum(t, a, mu, k)


def modified_autocorrelation(t: TruthTable, a: int, mu: int, k: int, c: int) -> int:
    """Autocorrelation twisted by the N positions *c*.

    sum over x in k + V_mu-bar of (-1)^(f(x) + f(x + a) + sum_{i in c} a_i (x_i + 1)),
    defined for a ⪯ mu-bar, k ⪯ mu and c ⪯ mu-bar.
    """
    n = t.n
    for value, name in ((a, "a"), (mu, "mu"), (c, "c")):
        check_mask(value, n, name)
    free = complement(mu, n)
    require_precedes(a, free, name="a", bound="mu-bar")
    require_precedes(k, mu, name="k", bound="mu")
    require_precedes(c, free, name="c", bound="mu-bar")
    xs = coset(k, free)
    s = t.signs()
    terms = s[xs] * s[xs ^ a]
    twist = (popcount(xs & (a & c)) + (a & c).bit_count()) & 1
    return int(np.sum(np.where(twist == 1, -terms, terms)))
