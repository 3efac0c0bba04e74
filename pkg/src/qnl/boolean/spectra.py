"""Walsh-Hadamard, {I,H,N}^n and {I,H}^n spectra in exact integer arithmetic.

Transforms are unnormalized: the H butterfly maps (a, b) to (a + b, a - b)
and the N butterfly maps (a, b) to (a + i·b, a - i·b). A spectrum value with
m transformed coordinates carries the normalization 2^(-m/2), applied only
where a report asks for it.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterator

import numpy as np

from qnl.bits import complement, coset, parity, popcount
from qnl.boolean.autocorrelation import fixed_extended_autocorrelation
from qnl.boolean.models import GaussianInt, check_mask, require_precedes
from qnl.boolean.truth_table import TruthTable
from qnl.errors import SizeLimitError

PAR_IHN_MAX_N = 10
PAR_IH_MAX_N = 14


def hadamard_axis(arr: np.ndarray, bit: int) -> np.ndarray:
    """Unnormalized H butterfly along coordinate ``bit + 1``."""
    view = arr.reshape(-1, 2, 1 << bit)
    a, b = view[:, 0, :], view[:, 1, :]
    return np.stack((a + b, a - b), axis=1).reshape(arr.shape)


def nega_axis(re: np.ndarray, im: np.ndarray, bit: int) -> tuple[np.ndarray, np.ndarray]:
    """Unnormalized N butterfly along coordinate ``bit + 1`` on (re, im) pairs."""
    vr = re.reshape(-1, 2, 1 << bit)
    vi = im.reshape(-1, 2, 1 << bit)
    ar, ai, br, bi = vr[:, 0, :], vi[:, 0, :], vr[:, 1, :], vi[:, 1, :]
    out_re = np.stack((ar - bi, ar + bi), axis=1).reshape(re.shape)
    out_im = np.stack((ai + br, ai - br), axis=1).reshape(im.shape)
    return out_re, out_im


def wht_array(values: np.ndarray) -> np.ndarray:
    """Fast Walsh-Hadamard transform of an integer vector of length 2^n."""
    out = np.asarray(values, dtype=np.int64)
    n = out.shape[0].bit_length() - 1
    for bit in range(n):
        out = hadamard_axis(out, bit)
    return out


def wht(t: TruthTable) -> np.ndarray:
    """W(b) = sum_x (-1)^(f(x) + b·x), in O(n 2^n)."""
    return wht_array(t.signs())


def ih_spectrum(t: TruthTable, u: int, k: int, mu: int) -> int:
    """P_{u,k,mu} = sum over x in k + V_mu-bar of (-1)^(f(x) + u·x)."""
    check_mask(u, t.n, "u")
    check_mask(mu, t.n, "mu")
    require_precedes(k, mu, name="k", bound="mu")
    xs = coset(k, complement(mu, t.n))
    s = t.signs()[xs]
    return int(np.sum(np.where(parity(xs & u) == 1, -s, s)))


def ih_spectra(t: TruthTable, k: int, mu: int) -> np.ndarray:
    """Every P_{u,k,mu} with u ⪯ mu-bar at once.

    Entry j belongs to the u whose b-th bit is bit b of j placed on the b-th
    free coordinate, the order of ``qnl.bits.submasks``.
    """
    check_mask(mu, t.n, "mu")
    require_precedes(k, mu, name="k", bound="mu")
    return wht_array(t.signs()[coset(k, complement(mu, t.n))])


def ihn_spectrum(t: TruthTable, k: int, c: int, r: int, mu: int) -> GaussianInt:
    """P_{k,c,r,mu} = sum over x in r + V_mu-bar of (-1)^(f(x) + k·x) i^wt(x & c)."""
    n = t.n
    for value, name in ((k, "k"), (c, "c"), (r, "r"), (mu, "mu")):
        check_mask(value, n, name)
    free = complement(mu, n)
    require_precedes(k, free, name="k", bound="mu-bar")
    require_precedes(c, free, name="c", bound="mu-bar")
    require_precedes(r, mu, name="r", bound="mu")
    xs = coset(r, free)
    s = t.signs()[xs]
    s = np.where(parity(xs & k) == 1, -s, s)
    phase = popcount(xs & c) & 3
    sums = [int(np.sum(s[phase == p])) for p in range(4)]
    return GaussianInt(sums[0] - sums[2], sums[1] - sums[3])


def power_spectrum_from_v(t: TruthTable, u: int, k: int, mu: int) -> int:
    """|P_{u,k,mu}|^2 recovered from fixed-extended autocorrelations.

    Equals sum over a ⪯ mu-bar of v(a, mu, k) (-1)^(a·u), with no normalization.
    """

    check_mask(u, t.n, "u")
    require_precedes(k, mu, name="k", bound="mu")
    total = 0
    for a in coset(0, complement(mu, t.n)).tolist():
        v = fixed_extended_autocorrelation(t, a, mu, k)
        total += -v if (a & u).bit_count() % 2 else v
    return total


# ---- peak-to-average ratios ----


def _par_ihn_max(re: np.ndarray, im: np.ndarray, bit: int, n: int, depth: int) -> Fraction:
    if bit == n:
        return Fraction(int(np.max(re * re + im * im)), 1 << depth)
    best = _par_ihn_max(re, im, bit + 1, n, depth)
    hr, hi = hadamard_axis(re, bit), hadamard_axis(im, bit)
    best = max(best, _par_ihn_max(hr, hi, bit + 1, n, depth + 1))
    nr, ni = nega_axis(re, im, bit)
    return max(best, _par_ihn_max(nr, ni, bit + 1, n, depth + 1))


def _par_ih_max(re: np.ndarray, bit: int, n: int, depth: int) -> Fraction:
    if bit == n:
        return Fraction(int(np.max(re * re)), 1 << depth)
    return max(
        _par_ih_max(re, bit + 1, n, depth),
        _par_ih_max(hadamard_axis(re, bit), bit + 1, n, depth + 1),
    )


def par_ihn(t: TruthTable) -> Fraction:
    """Peak of the normalized power over all {I,H,N}^n transforms of s."""
    if t.n > PAR_IHN_MAX_N:
        raise SizeLimitError(
            f"PAR over {{I,H,N}}^n is limited to n <= {PAR_IHN_MAX_N}, got n={t.n}"
        )
    s = t.signs()
    return _par_ihn_max(s, np.zeros_like(s), 0, t.n, 0)


def par_ih(t: TruthTable) -> Fraction:
    """Peak of the normalized power over all {I,H}^n transforms of s."""
    if t.n > PAR_IH_MAX_N:
        raise SizeLimitError(f"PAR over {{I,H}}^n is limited to n <= {PAR_IH_MAX_N}, got n={t.n}")
    return _par_ih_max(t.signs(), 0, t.n, 0)


def par_bound(n: int, weight_mu: int, d: int) -> int:
    """Upper bound on |P_{u,k,mu}|^2 from an EPC distance d.

    2^(n - w) · (sum_{i = max(d - w, 0)}^{n - w} C(n - w, i) + 1) with w = wt(mu).
    """

    m = n - weight_mu
    return (1 << m) * (sum(comb(m, i) for i in range(max(d - weight_mu, 0), m + 1)) + 1)


# ---- CSV-ready rows ----


def _mask_string(x: int, n: int) -> str:
    return "".join("1" if (x >> i) & 1 else "0" for i in range(n))


def wht_rows(t: TruthTable) -> Iterator[tuple[str, int, int, int]]:
    """(mask, re, im, norm2) for every b of the Walsh-Hadamard spectrum."""
    for b, value in enumerate(wht(t).tolist()):
        yield _mask_string(b, t.n), value, 0, value * value


def ihn_rows(t: TruthTable, c: int, mu: int, r: int = 0) -> Iterator[tuple[str, int, int, int]]:
    """(k, re, im, norm2) over k ⪯ mu-bar for one partition.

    Coordinates in *mu* are identity positions fixed at *r*, those in *c* take
    the N transform and the rest take H.
    """
    free = complement(mu, t.n)
    for k in coset(0, free).tolist():
        p = ihn_spectrum(t, k, c, r, mu)
        yield _mask_string(k, t.n), p.re, p.im, p.norm2
