"""Deterministic graph constructors: cliques, nested cliques, circulants."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Optional, Sequence, Union

from qnl.graphs.models import Graph, GraphError

SIGMA_RULES: tuple[str, ...] = ("paper-affine", "cyclic", "identity")

Permutation = tuple[int, ...]  # 1-based images: perm[i - 1] = sigma(i)

# [K_3[K_3]] with sigma_1 = (1 -> 2, 2 -> 3, 3 -> 1)
NESTED_CLIQUE_9: tuple[str, ...] = (
    "011100010",
    "101010001",
    "110001100",
    "100011100",
    "010101010",
    "001110001",
    "001100011",
    "100010101",
    "010001110",
)


def clique(t: int) -> Graph:
    if t < 1:
        raise GraphError(f"clique needs t >= 1, got {t}")
    full = (1 << t) - 1
    return Graph(t, tuple(full ^ (1 << i) for i in range(t)))


def is_prime(value: int) -> bool:
    if value < 2:
        return False
    return all(value % p for p in range(2, int(value**0.5) + 1))


def canonical_pairs(blocks: int) -> list[tuple[int, int]]:
    """Block pairs (i, j), j >= i + 2, 1-based, by (j - i) descending then i ascending."""
    pairs = [(i, j) for i in range(1, blocks + 1) for j in range(i + 2, blocks + 1)]
    return sorted(pairs, key=lambda p: (-(p[1] - p[0]), p[0]))


def affine_sigma(t: int, k: int) -> Permutation:
    """sigma_k(i) = m + (i - 1)(l + 1) mod t for k = l·t + m, 1 <= m <= t.

    A bijection only while the slope l + 1 is a unit mod t, which for prime t
    means 1 <= k <= t(t - 1).
    """
    if t < 2:
        raise GraphError(f"affine sigma needs t >= 2, got {t}")
    if not 1 <= k <= t * (t - 1):
        raise GraphError(f"affine sigma_k is defined for 1 <= k <= {t * (t - 1)}, got k={k}")
    l, m = divmod(k - 1, t)
    m += 1
    if gcd(l + 1, t) != 1:
        raise GraphError(f"affine sigma_{k} has slope {l + 1}, not invertible mod {t}")
    return tuple((m + (i - 1) * (l + 1) - 1) % t + 1 for i in range(1, t + 1))


def _validate_permutation(perm: Sequence[int], t: int, label: str) -> Permutation:
    perm = tuple(int(v) for v in perm)
    if sorted(perm) != list(range(1, t + 1)):
        raise GraphError(f"{label} is not a bijection on 1..{t}: {list(perm)}")
    return perm


@dataclass(frozen=True)
class NestedCliqueSpec:
    """[K_blocks[K_t]]: ``blocks`` copies of K_t joined pairwise by bijections.

    Neighbouring blocks are joined by the identity. The remaining pairs take
    sigma_1, sigma_2, ... in canonical pair order, either from a named rule or
    from an explicit list of 1-based permutations.
    """

    t: int
    sigma: Union[str, tuple[Permutation, ...]] = "paper-affine"
    blocks: Optional[int] = None

    def __post_init__(self) -> None:
        if self.t < 1:
            raise GraphError(f"t must be positive, got {self.t}")
        if self.block_count < 1:
            raise GraphError(f"blocks must be positive, got {self.blocks}")
        if isinstance(self.sigma, str):
            if self.sigma not in SIGMA_RULES:
                raise GraphError(
                    f"unknown sigma rule {self.sigma!r}; expected one of {SIGMA_RULES}"
                )
            if self.sigma == "paper-affine" and (self.t < 3 or not is_prime(self.t)):
                raise GraphError(f"the paper-affine rule needs an odd prime t, got {self.t}")
        else:
            expected = len(canonical_pairs(self.block_count))
            if len(self.sigma) != expected:
                raise GraphError(f"expected {expected} permutations, got {len(self.sigma)}")
            for k, perm in enumerate(self.sigma, start=1):
                _validate_permutation(perm, self.t, f"sigma_{k}")

    @property
    def block_count(self) -> int:
        return self.t if self.blocks is None else self.blocks

    def permutations(self) -> list[Permutation]:
        count = len(canonical_pairs(self.block_count))
        t = self.t
        if self.sigma == "paper-affine":
            return [affine_sigma(t, k) for k in range(1, count + 1)]
        if self.sigma == "cyclic":
            return [tuple(i % t + 1 for i in range(1, t + 1))] * count
        if self.sigma == "identity":
            return [tuple(range(1, t + 1))] * count
        return [tuple(p) for p in self.sigma]


def nested_clique(spec: NestedCliqueSpec) -> Graph:
    """Adjacency of [K_b[K_t]]: K_t blocks, I next to the diagonal, sigma_k beyond.

    Block (i, j) holds the permutation matrix with entry (p, sigma(p)) set; the
    block below the diagonal is its transpose.
    """
    t, b = spec.t, spec.block_count
    edges: list[tuple[int, int]] = []
    for blk in range(b):
        base = blk * t
        edges += [(base + p, base + q) for p in range(t) for q in range(p + 1, t)]
    for blk in range(b - 1):
        edges += [(blk * t + p, (blk + 1) * t + p) for p in range(t)]
    for (i, j), perm in zip(canonical_pairs(b), spec.permutations()):
        edges += [((i - 1) * t + p, (j - 1) * t + perm[p] - 1) for p in range(t)]
    return Graph.from_edges(t * b, edges)


def k2k3() -> Graph:
    """Two triangles joined by a perfect matching."""
    return nested_clique(NestedCliqueSpec(3, "identity", blocks=2))


def nested_clique_9() -> Graph:
    return Graph.from_matrix([[int(ch) for ch in row] for row in NESTED_CLIQUE_9])


def _circulant_rows(first_row: Sequence[int]) -> list[int]:
    n = len(first_row)
    word = 0
    for j, bit in enumerate(first_row):
        if int(bit) not in (0, 1):
            raise GraphError(f"first row entry {j + 1} is not binary")
        word |= int(bit) << j
    full = (1 << n) - 1
    # row i is the first row cyclically shifted right by i
    return [((word << i) | (word >> (n - i))) & full if i else word for i in range(n)]


def circulant(first_row: Sequence[int]) -> Graph:
    n = len(first_row)
    if n < 1:
        raise GraphError("circulant needs a non-empty first row")
    if int(first_row[0]):
        raise GraphError("circulant first row must start with 0 (zero diagonal)")
    for i in range(1, n):
        if int(first_row[i]) != int(first_row[n - i]):
            raise GraphError(
                f"first row is not reversal-symmetric: r[{i}] != r[{n - i}] (0-based)"
            )
    return Graph(n, tuple(_circulant_rows(first_row)))


def two_circulant(a_row: Sequence[int], b_row: Sequence[int]) -> Graph:
    """The 2n-vertex graph [[A, B], [B^T, A]] of a circulant A and any circulant B."""
    if len(a_row) != len(b_row):
        raise GraphError(f"row lengths differ: {len(a_row)} vs {len(b_row)}")
    a = circulant(a_row)
    n = a.n
    b_rows = _circulant_rows(b_row)
    bt_rows = [sum(((b_rows[j] >> i) & 1) << j for j in range(n)) for i in range(n)]
    rows = [a.rows[i] | (b_rows[i] << n) for i in range(n)]
    rows += [bt_rows[i] | (a.rows[i] << n) for i in range(n)]
    return Graph(2 * n, tuple(rows))


def nested_clique_order(g: Graph) -> Optional[int]:
    """t when *g* is laid out as [K_t[K_t]], else None.

    The layout is t consecutive K_t blocks with every pair of blocks joined by a
    perfect matching and nothing else.
    """
    t = isqrt(g.n)
    if t < 2 or t * t != g.n:
        return None
    block = (1 << t) - 1
    masks = [block << (b * t) for b in range(t)]
    for b, mask in enumerate(masks):
        for p in range(b * t, (b + 1) * t):
            row = g.rows[p]
            if row & mask != mask ^ (1 << p):
                return None
            if any((row & other).bit_count() != 1 for c, other in enumerate(masks) if c != b):
                return None
    # one neighbour per foreign block from both sides makes every matching a bijection
    return t
