"""Tests for symplectic vectors, the Gray map, B-form reduction and code distances."""

from fractions import Fraction
from itertools import combinations, product

import numpy as np
import pytest

from qnl.bits import popcount
from qnl.boolean.truth_table import from_graph
from qnl.config.schema import SearchBudget
from qnl.errors import DimensionError, FormatError, SizeLimitError
from qnl.graphs.constructors import clique
from qnl.graphs.models import Graph
from qnl.stabilizer import (
    CodeError,
    EnumerationLimitError,
    GeneratorMatrix,
    PauliVector,
    SearchModeError,
    apply_pauli,
    binary_weight,
    bform_code,
    bform_reduce,
    bounded_search,
    codewords,
    gray_decode,
    gray_encode,
    graph_state_generators,
    hamming_weight,
    is_real,
    is_self_dual,
    lattice_min_norm,
    min_distance,
    replay_log,
    spectral_gap,
    symplectic_product,
    transform_vector,
)

XX_ZZ = GeneratorMatrix.from_bits(2, [(0b11, 0), (0, 0b11)])


def _random_graph(rng: np.random.Generator, n: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < 0.5
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def _naive_min(g: GeneratorMatrix, weight) -> int:
    return min(weight(c) for c in codewords(g) if not c.is_zero)


class TestPauliVector:
    def test_symplectic_product_anticommuting(self):
        x, z = PauliVector(1, 1, 0), PauliVector(1, 0, 1)
        assert symplectic_product(x, z) == 1
        assert symplectic_product(z, x) == 1

    def test_symplectic_product_with_self(self):
        p = gray_encode("1wW0")
        assert symplectic_product(p, p) == 0

    def test_bform_rows_commute(self, nested9):
        rows = bform_code(nested9).generator_matrix().rows
        assert all(symplectic_product(p, q) == 0 for p, q in combinations(rows, 2))

    def test_mismatched_lengths(self):
        with pytest.raises(DimensionError):
            symplectic_product(PauliVector(1, 1, 0), PauliVector(2, 1, 0))

    def test_bits_outside_n_rejected(self):
        with pytest.raises(DimensionError):
            PauliVector(2, 0b100, 0)


class TestGrayMap:
    def test_symbols(self):
        assert gray_encode("0") == PauliVector(1, 0, 0)
        assert gray_encode("1") == PauliVector(1, 1, 1)
        assert gray_encode("w") == PauliVector(1, 1, 0)
        assert gray_encode("W") == PauliVector(1, 0, 1)

    def test_qubit_one_is_leftmost(self):
        p = gray_encode("w0W")
        assert p.alpha == 0b001
        assert p.beta == 0b100

    def test_decode_inverts_encode(self):
        assert gray_decode(gray_encode("1wW0w")) == "1wW0w"

    def test_invalid_symbol_names_index(self):
        with pytest.raises(FormatError) as exc_info:
            gray_encode("1x0")
        assert exc_info.value.index == 1

    def test_weights(self):
        assert hamming_weight(PauliVector.zero(3)) == 0
        assert hamming_weight(gray_encode("1w0")) == 2
        assert hamming_weight(gray_encode("111")) == 3
        assert binary_weight(gray_encode("1")) == 2
        assert binary_weight(gray_encode("w")) == 1
        assert binary_weight(gray_encode("1wW")) == 4


class TestCodePredicates:
    def test_xx_zz_is_self_dual_and_real(self):
        assert is_self_dual(XX_ZZ)
        assert is_real(XX_ZZ)

    def test_short_code_is_not_self_dual(self):
        assert not is_self_dual(GeneratorMatrix.from_bits(2, [(0b11, 0)]))

    def test_single_y_is_not_real(self):
        assert not is_real(GeneratorMatrix.from_bits(1, [(1, 1)]))

    def test_nested_clique_code_is_real_self_dual(self, nested9):
        g = bform_code(nested9).generator_matrix()
        assert is_self_dual(g)
        assert is_real(g)

    def test_every_small_bform_code_is_real_self_dual(self):
        pairs = list(combinations(range(4), 2))
        for mask in range(1 << len(pairs)):
            graph = Graph.from_edges(4, [p for i, p in enumerate(pairs) if (mask >> i) & 1])
            g = bform_code(graph).generator_matrix()
            assert is_self_dual(g) and is_real(g)

    def test_dependent_rows_rejected(self):
        with pytest.raises(CodeError):
            GeneratorMatrix.from_bits(2, [(1, 0), (1, 0)])


class TestCodewords:
    def test_empty_code(self):
        assert list(codewords(GeneratorMatrix(3, ()))) == [PauliVector.zero(3)]

    def test_k2_span(self, k2):
        words = set(codewords(bform_code(k2).generator_matrix()))
        assert words == {
            PauliVector(2, 0, 0),
            PauliVector(2, 0b10, 0b01),
            PauliVector(2, 0b01, 0b10),
            PauliVector(2, 0b11, 0b11),
        }

    def test_count_is_two_to_the_k(self, rng):
        g = bform_code(_random_graph(rng, 10)).generator_matrix()
        words = list(codewords(g))
        assert len(words) == 1 << 10
        assert len(set(words)) == 1 << 10


class TestBformReduce:
    def test_bform_is_a_fixed_point(self, nested9):
        code = bform_reduce(bform_code(nested9).generator_matrix())
        assert code.b == nested9
        assert code.provenance == ()

    def test_zx_xz_gives_k2(self):
        g = GeneratorMatrix.from_bits(2, [(0b10, 0b01), (0b01, 0b10)])
        assert bform_reduce(g).b == clique(2)

    def test_needs_an_alpha_beta_swap(self):
        code = bform_reduce(XX_ZZ)
        assert any(op[0] == "swap_ab" for op in code.provenance)
        assert replay_log(XX_ZZ, code.provenance) == code.generator_matrix()

    def test_row_scrambling_recovers_the_graph(self, rng):
        for _ in range(10):
            graph = _random_graph(rng, 7)
            source = bform_code(graph).generator_matrix()
            ops = []
            for _ in range(20):
                src, dst = (int(v) for v in rng.choice(7, size=2, replace=False))
                ops.append(("add_row", src, dst) if rng.random() < 0.7 else ("swap_rows", src, dst))
            assert bform_reduce(replay_log(source, ops)).b == graph

    def test_full_scramble_replays_to_bform(self, rng):
        for _ in range(10):
            graph = _random_graph(rng, 8)
            source = bform_code(graph).generator_matrix()
            ops = []
            for _ in range(30):
                p, q = (int(v) for v in rng.choice(8, size=2, replace=False))
                ops.append(
                    [("add_row", p, q), ("swap_rows", p, q), ("swap_ab", p), ("swap_qubits", p, q)][
                        int(rng.integers(4))
                    ]
                )
            scrambled = replay_log(source, ops)
            reduced = bform_reduce(scrambled)
            assert replay_log(scrambled, reduced.provenance) == reduced.generator_matrix()
            for kind in ("hamming", "binary"):
                assert (
                    min_distance(reduced, kind).value == min_distance(source, kind).value
                )

    def test_transform_vector_maps_codewords_into_the_bform_code(self):
        reduced = bform_reduce(XX_ZZ)
        target = set(codewords(reduced.generator_matrix()))
        for word in codewords(XX_ZZ):
            assert transform_vector(word, reduced.provenance) in target

    def test_rejects_non_self_dual(self):
        with pytest.raises(CodeError):
            bform_reduce(GeneratorMatrix.from_bits(2, [(0b11, 0)]))

    def test_rejects_non_real(self):
        with pytest.raises(CodeError):
            bform_reduce(GeneratorMatrix.from_bits(1, [(1, 1)]))


class TestMinDistance:
    def test_nested_clique_binary_distance(self, nested9):
        result = min_distance(bform_code(nested9), "binary")
        assert result.value == 4
        assert result.exact

    def test_clique_five(self, k5):
        code = bform_code(k5)
        assert min_distance(code, "hamming").value == 2
        binary = min_distance(code, "binary")
        assert binary.value == 4
        # smallest coefficient mask among the minimum-weight codewords
        assert binary.coefficients == 0b00011
        assert str(binary.witness) == "11000|11000"

    def test_clique_three(self, k3):
        assert min_distance(bform_code(k3), "binary").value == 3
        assert min_distance(bform_code(k3), "hamming").value == 2

    def test_empty_code_has_distance_zero(self):
        result = min_distance(GeneratorMatrix(2, ()), "binary")
        assert result.value == 0 and result.exact

    def test_matches_naive_enumeration(self, rng):
        for n in range(2, 9):
            g = bform_code(_random_graph(rng, n)).generator_matrix()
            assert min_distance(g, "hamming").value == _naive_min(g, hamming_weight)
            assert min_distance(g, "binary").value == _naive_min(g, binary_weight)

    def test_shortcut_matches_full_enumeration(self, rng):
        for n in range(2, 11):
            graph = _random_graph(rng, n)
            rows = np.array(graph.rows, dtype=np.uint64)
            best = None
            for u in range(1, 1 << n):
                ub = 0
                for i in range(n):
                    if (u >> i) & 1:
                        ub ^= int(rows[i])
                w = u.bit_count() + ub.bit_count()
                best = w if best is None else min(best, w)
            assert min_distance(bform_code(graph), "binary", mode="exact").value == best
            assert bounded_search(graph, "binary").value == best

    def test_witness_weight_matches_value(self, rng):
        g = bform_code(_random_graph(rng, 9)).generator_matrix()
        result = min_distance(g, "binary")
        assert binary_weight(result.witness) == result.value
        assert int(popcount(np.array([result.witness.word]))[0]) == result.value

    def test_enumeration_limit(self):
        with pytest.raises(EnumerationLimitError):
            min_distance(bform_code(clique(29)), "binary", mode="exact")

    def test_unknown_kind(self, k3):
        with pytest.raises(ValueError):
            min_distance(bform_code(k3), "euclidean")  # type: ignore[arg-type]


class TestBoundedSearch:
    def test_exact_when_certificate_reached(self, k5):
        result = min_distance(bform_code(k5), "binary", SearchBudget(max_weight=3), mode="bounded")
        assert result.value == 4
        assert result.exact
        assert result.searched_weight == 3

    def test_bound_only_when_budget_too_small(self, k5):
        result = bounded_search(k5, "binary", SearchBudget(max_weight=1))
        assert result.value == 5
        assert not result.exact

    def test_agrees_with_exact_on_nested_clique(self, nested9):
        bounded = bounded_search(nested9, "binary")
        exact = min_distance(bform_code(nested9), "binary", mode="exact")
        assert (bounded.value, bounded.coefficients) == (exact.value, exact.coefficients)

    def test_parallel_matches_serial(self, rng):
        graph = _random_graph(rng, 12)
        serial = bounded_search(graph, "binary")
        parallel = bounded_search(graph, "binary", threads=2)
        assert (serial.value, serial.coefficients) == (parallel.value, parallel.coefficients)

    def test_zero_weight_budget_is_rejected(self, k4):
        with pytest.raises(SearchModeError, match="max_weight >= 1"):
            bounded_search(k4, "binary", SearchBudget(max_weight=0))

    def test_requires_bform(self):
        with pytest.raises(SearchModeError):
            min_distance(XX_ZZ, "binary", mode="bounded")


class TestLattice:
    def test_k2_min_norm(self, k2):
        assert lattice_min_norm(bform_code(k2).generator_matrix(), 1) == Fraction(1)

    def test_floor_of_two(self, k5):
        g = bform_code(k5).generator_matrix()
        assert lattice_min_norm(g, 1) == Fraction(2)
        assert lattice_min_norm(g, 2) == Fraction(2)

    @pytest.mark.parametrize("t", [2, 3])
    def test_matches_full_box_scan(self, t):
        g = bform_code(clique(t)).generator_matrix()
        words = {(c.alpha, c.beta) for c in codewords(g)}
        best = None
        for x in product(range(-2, 4), repeat=2 * t):
            if not any(x):
                continue
            alpha = sum(1 << i for i in range(t) if x[i] % 2)
            beta = sum(1 << i for i in range(t) if x[t + i] % 2)
            if (alpha, beta) in words:
                norm = sum(v * v for v in x)
                best = norm if best is None else min(best, norm)
        assert lattice_min_norm(g, 1) == Fraction(best, 2)

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            lattice_min_norm(bform_code(clique(7)).generator_matrix(), 1)

    def test_gap(self):
        assert spectral_gap(2).gap == Fraction(1, 2)
        assert not spectral_gap(4).heuristic
        assert spectral_gap(8).heuristic


class TestGraphState:
    def test_k2_generator_fixes_state(self, k2):
        psi = np.array([1, 1, 1, -1], dtype=np.int8)
        for s in graph_state_generators(k2):
            assert np.array_equal(apply_pauli(psi, s), psi)

    def test_nested_clique_generators(self, nested9):
        psi = from_graph(nested9).signs().astype(np.int8)
        for s in graph_state_generators(nested9):
            assert np.array_equal(apply_pauli(psi, s), psi)

    def test_wrong_state_is_moved(self, k2):
        psi = np.ones(4, dtype=np.int8)
        s1 = graph_state_generators(k2)[0]
        assert not np.array_equal(apply_pauli(psi, s1), psi)
