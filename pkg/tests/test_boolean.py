"""Tests for truth tables, spectra, autocorrelations, APC/EPC distances and PAR."""

from fractions import Fraction
from functools import reduce
from itertools import combinations, product

import numpy as np
import pytest

from qnl.boolean import (
    GaussianInt,
    Mask,
    MaskError,
    NotQuadraticError,
    TruthTable,
    aperiodic_autocorrelation,
    apc_distance,
    epc_distance,
    fixed_aperiodic_autocorrelation,
    fixed_extended_autocorrelation,
    from_graph,
    graph_epc_distance,
    ih_spectra,
    ih_spectrum,
    ihn_rows,
    ihn_spectrum,
    modified_autocorrelation,
    par_bound,
    par_ih,
    par_ihn,
    periodic_autocorrelation,
    power_spectrum_from_v,
    quadratic_graph,
    wht,
    wht_rows,
)
from qnl.errors import DimensionError, FormatError, SizeLimitError
from qnl.graphs.constructors import clique, k2k3
from qnl.graphs.models import Graph


def _random_table(rng, n: int) -> TruthTable:
    return TruthTable.from_values(rng.integers(0, 2, size=1 << n))


def _random_graph(rng, n: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < 0.5
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def _sub(rng, mask: int) -> int:
    return sum(1 << i for i in range(mask.bit_length()) if (mask >> i) & 1 and rng.integers(2))


def _naive_ihn(t: TruthTable, k: int, c: int, r: int, mu: int) -> GaussianInt:
    total = GaussianInt(0)
    for x in range(len(t)):
        if x & mu != r:
            continue
        sign = t[x] * (-1) ** (x & k).bit_count()
        total = total + GaussianInt.i_power((x & c).bit_count()) * sign
    return total


class TestTruthTable:
    def test_string_round_trip(self):
        assert TruthTable.from_string("++-+-++-").to_string() == "++-+-++-"

    def test_index_zero_first(self):
        t = TruthTable.from_string("+-+-")
        assert [t[x] for x in range(4)] == [1, -1, 1, -1]

    def test_rejects_bad_sign(self):
        with pytest.raises(FormatError):
            TruthTable.from_string("+-*+")

    def test_rejects_odd_length(self):
        with pytest.raises(DimensionError):
            TruthTable.from_values(np.zeros(6, dtype=np.uint8))

    def test_k2_quadratic_form(self, k2):
        assert from_graph(k2).to_string() == "+++-"

    def test_quadratic_graph_recovers_graph(self, nested9):
        assert quadratic_graph(from_graph(nested9)) == nested9

    def test_linear_term_is_not_quadratic(self):
        assert quadratic_graph(TruthTable.from_string("+-+-")) is None


class TestSpectra:
    def test_constant_wht(self):
        assert wht(TruthTable.constant(2)).tolist() == [4, 0, 0, 0]

    def test_wht_against_double_loop(self, rng):
        t = _random_table(rng, 5)
        expected = [
            sum(t[x] * (-1) ** (x & b).bit_count() for x in range(32)) for b in range(32)
        ]
        assert wht(t).tolist() == expected

    def test_wiener_khintchin(self, rng):
        t = _random_table(rng, 6)
        w = wht(t)
        for a in range(64):
            rhs = sum(int(w[b]) ** 2 * (-1) ** (a & b).bit_count() for b in range(64))
            assert 64 * periodic_autocorrelation(t, a) == rhs

    def test_ih_full_coset_is_wht(self, rng):
        t = _random_table(rng, 4)
        w = wht(t)
        for u in range(16):
            assert ih_spectrum(t, u, 0, 0) == w[u]

    def test_ih_single_point(self, rng):
        t = _random_table(rng, 4)
        for k in range(16):
            assert ih_spectrum(t, 0, k, 0b1111) == t[k]

    def test_ih_batch_matches_single(self, rng):
        t = _random_table(rng, 5)
        mu, k = 0b01010, 0b00010
        free = [u for u in range(32) if u & mu == 0]
        assert ih_spectra(t, k, mu).tolist() == [ih_spectrum(t, u, k, mu) for u in free]

    def test_ihn_trivial(self):
        assert ihn_spectrum(TruthTable.constant(3), 0, 0, 0, 0) == GaussianInt(8, 0)
        assert ihn_spectrum(TruthTable.constant(1), 0, 1, 0, 0) == GaussianInt(1, 1)

    def test_ihn_against_naive(self, rng):
        for _ in range(30):
            t = _random_table(rng, 5)
            mu = int(rng.integers(32))
            free = ~mu & 31
            k, c, r = _sub(rng, free), _sub(rng, free), _sub(rng, mu)
            assert ihn_spectrum(t, k, c, r, mu) == _naive_ihn(t, k, c, r, mu)

    def test_ihn_precondition(self):
        with pytest.raises(MaskError) as exc_info:
            ihn_spectrum(TruthTable.constant(2), 0, 0b01, 0, 0b01)
        assert exc_info.value.mask_name == "c"

    def test_power_spectrum_from_autocorrelation(self, rng):
        t = _random_table(rng, 5)
        mu, k = 0b00101, 0b00100
        for u in (0b00000, 0b00010, 0b11010):
            assert power_spectrum_from_v(t, u, k, mu) == ih_spectrum(t, u, k, mu) ** 2

    def test_spectrum_rows(self):
        rows = list(wht_rows(TruthTable.constant(2)))
        assert rows[0] == ("00", 4, 0, 16)
        assert rows[1] == ("10", 0, 0, 0)
        ihn = list(ihn_rows(TruthTable.constant(1), c=1, mu=0))
        assert ihn[0] == ("0", 1, 1, 2)


class TestAutocorrelation:
    def test_periodic_at_zero(self, rng):
        assert periodic_autocorrelation(_random_table(rng, 4), 0) == 16

    def test_aperiodic_against_naive(self, rng):
        t = _random_table(rng, 4)
        a, k = 0b0110, 0b0010
        expected = sum(t[x] * t[x ^ a] for x in range(16) if x & a == k)
        assert aperiodic_autocorrelation(t, a, k) == expected

    def test_fixed_forms_against_naive(self, rng):
        t = _random_table(rng, 5)
        mu, k = 0b01011, 0b00001
        for a in (0b00001, 0b01010, 0b10100):
            expected = sum(t[x] * t[x ^ a] for x in range(32) if x & mu == k)
            assert fixed_extended_autocorrelation(t, a, mu, k) == expected
            if a & ~mu == 0:
                assert fixed_aperiodic_autocorrelation(t, a, mu, k) == expected

    def test_modified_against_naive(self, rng):
        t = _random_table(rng, 5)
        mu, k = 0b00011, 0b00010
        for a, c in ((0b01100, 0b00100), (0b11100, 0b10000), (0b10000, 0)):
            expected = sum(
                t[x] * t[x ^ a] * (-1) ** ((a & c).bit_count() + (x & a & c).bit_count())
                for x in range(32)
                if x & mu == k
            )
            assert modified_autocorrelation(t, a, mu, k, c) == expected

    def test_k_must_precede_a(self):
        with pytest.raises(MaskError) as exc_info:
            aperiodic_autocorrelation(TruthTable.constant(2), 0b01, 0b10)
        assert exc_info.value.mask_name == "k"

    def test_mask_parse(self):
        mask = Mask.parse("1001")
        assert int(mask) == 0b1001
        assert str(mask.complement()) == "0110"


class TestDistances:
    def test_clique_five(self, k5):
        table = from_graph(k5)
        assert apc_distance(table).value == 2
        assert epc_distance(table).value == 4
        assert apc_distance(table, method="generic").value == 2
        assert epc_distance(table, method="generic").value == 4

    def test_clique_three(self, k3):
        assert epc_distance(from_graph(k3), method="generic").value == 3

    def test_constant_function(self):
        result = apc_distance(TruthTable.constant(3), method="generic")
        assert result.value == 1
        assert (result.a, result.b) == (1, 0)

    def test_nested_clique(self, nested9):
        assert epc_distance(from_graph(nested9)).value == 4
        assert graph_epc_distance(nested9).value == 4

    def test_shortcut_agrees_with_generic(self, rng):
        for n in range(2, 8):
            table = from_graph(_random_graph(rng, n))
            assert (
                epc_distance(table, method="quadratic").value
                == epc_distance(table, method="generic").value
            )
            assert (
                apc_distance(table, method="quadratic").value
                == apc_distance(table, method="generic").value
            )

    def test_apc_at_most_epc(self, rng):
        for n in range(2, 7):
            table = _random_table(rng, n)
            assert apc_distance(table).value <= epc_distance(table).value

    def test_generic_size_limit(self, rng):
        with pytest.raises(SizeLimitError):
            apc_distance(_random_table(rng, 15), method="generic")

    def test_quadratic_method_needs_quadratic_table(self):
        with pytest.raises(NotQuadraticError):
            epc_distance(TruthTable.from_string("+-+-"), method="quadratic")


_I = np.eye(2, dtype=complex)
_H = np.array([[1, 1], [1, -1]], dtype=complex)
_N = np.array([[1, 1j], [1, -1j]], dtype=complex)


def _naive_par(t: TruthTable, family) -> Fraction:
    s = t.signs().astype(complex)
    best = Fraction(0)
    for choice in product(family, repeat=t.n):
        # coordinate 1 is the least significant index bit
        u = reduce(np.kron, [m for m, _ in reversed(choice)])
        scale = sum(flag for _, flag in choice)
        power = np.abs(u @ s) ** 2
        best = max(best, Fraction(int(round(float(np.max(power)))), 1 << scale))
    return best


class TestPar:
    def test_constant_one_variable(self):
        assert par_ihn(TruthTable.constant(1)) == 2

    def test_clique_par_ih(self):
        assert par_ih(from_graph(clique(4))) == 2

    def test_two_triangles_par_ih(self):
        assert par_ih(from_graph(k2k3())) == 4

    def test_against_matrix_products(self, rng):
        for _ in range(5):
            t = _random_table(rng, 3)
            assert par_ihn(t) == _naive_par(t, [(_I, 0), (_H, 1), (_N, 1)])
            assert par_ih(t) == _naive_par(t, [(_I, 0), (_H, 1)])

    def test_at_least_one(self, rng):
        assert par_ihn(from_graph(_random_graph(rng, 6))) >= 1

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            par_ihn(TruthTable.constant(11))

    def test_bound_values(self):
        assert par_bound(4, 0, 4) == 32
        assert par_bound(4, 4, 1) == 2
