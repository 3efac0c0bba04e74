"""Construction-A style lattice of a code and its minimum norm.

Lattice vectors are v = (c + 2z) / sqrt(2) with c a codeword read as a 0/1
vector of length 2n and z an integer vector; the norm is |c + 2z|^2 / 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator

from qnl.errors import SizeLimitError
from qnl.stabilizer.code import codewords
from qnl.stabilizer.models import GeneratorMatrix

LATTICE_MAX_N = 6

# (2, 0, ..., 0) = 0 + 2·e_1 is always a lattice point
_NORM_CEILING = 4


def _short_vectors(width: int, bound: int, low: int, high: int) -> Iterator[tuple[int, ...]]:
    """Nonzero integer vectors x with low <= x_i <= high and |x|^2 <= bound."""

    def extend(prefix: tuple[int, ...], left: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == width:
            yield prefix
            return
        reach = isqrt(left)
        for value in range(max(low, -reach), min(high, reach) + 1):
            yield from extend(prefix + (value,), left - value * value)

    return (x for x in extend((), bound) if any(x))


def _parity_word(x: tuple[int, ...], n: int) -> tuple[int, int]:
    alpha = sum(1 << i for i in range(n) if x[i] % 2)
    beta = sum(1 << i for i in range(n) if x[n + i] % 2)
    return alpha, beta


def lattice_min_norm(g: GeneratorMatrix, box_radius: int) -> Fraction:
    """Minimum squared norm over nonzero lattice vectors with |z_i| <= box_radius.

    Integer points x = c + 2z of the box are walked coordinate by coordinate
    inside the ball |x|^2 <= 4; a point counts when x mod 2 is a codeword.
    """
    if g.n > LATTICE_MAX_N:
        raise SizeLimitError(
            f"lattice minimum norm is limited to n <= {LATTICE_MAX_N}, got n={g.n}"
        )
    if box_radius < 1:
        raise ValueError(f"box_radius must be >= 1, got {box_radius}")

    code = {(c.alpha, c.beta) for c in codewords(g)}
    # x_i = c_i + 2 z_i with c_i in {0, 1} and |z_i| <= box_radius
    low, high = -2 * box_radius, 2 * box_radius + 1
    best = _NORM_CEILING
    for x in _short_vectors(2 * g.n, _NORM_CEILING, low, high):
        norm = sum(v * v for v in x)
        if norm < best and _parity_word(x, g.n) in code:
            best = norm
    return Fraction(best, 2)


@dataclass(frozen=True)
class GapReport:
    """Spectral gap d_b / 4; ``heuristic`` marks values only bounded by the code."""

    d_b: int
    gap: Fraction
    heuristic: bool


def spectral_gap(d_b: int) -> GapReport:
    if d_b < 0:
        raise ValueError(f"binary distance must be nonnegative, got {d_b}")
    return GapReport(d_b, Fraction(d_b, 4), d_b > 4)
