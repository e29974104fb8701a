from math import comb

import pytest

from dyckposet import (ExactMatrix, chain_polynomial, chains_of_length,
                       delta_matrix, eta_matrix, interval_count,
                       invert_unitriangular, maximal_chain_count,
                       mobius_matrix, staircase_maxchain, total_chain_matrix,
                       total_chains, zeta_matrix)
from dyckposet.polynomials import UniPoly

ZETA_D3 = [
    [1, 1, 1, 1, 1],
    [0, 1, 0, 1, 1],
    [0, 0, 1, 1, 1],
    [0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1],
]
MOBIUS_D3 = [
    [1, -1, -1, 1, 0],
    [0, 1, 0, -1, 0],
    [0, 0, 1, -1, 0],
    [0, 0, 0, 1, -1],
    [0, 0, 0, 0, 1],
]

TOTAL_CHAINS = [1, 2, 4, 24, 816, 239968]
INTERVALS = [1, 1, 3, 14, 84, 594]
MAXIMAL = [1, 1, 1, 2, 16, 768]

CHAIN_POLY_3 = UniPoly.from_list([1, 5, 9, 7, 2])
CHAIN_POLY_4 = UniPoly.from_list([1, 14, 70, 176, 249, 202, 88, 16])


class TestExactMatrix:
    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            ExactMatrix([[1, 2]])

    def test_inverse_of_unitriangular(self):
        m = ExactMatrix([[1, 3, 5], [0, 1, -2], [0, 0, 1]])
        inv = invert_unitriangular(m)
        assert m @ inv == ExactMatrix.identity(3)
        assert inv @ m == ExactMatrix.identity(3)

    def test_inverse_rejects_general_matrix(self):
        with pytest.raises(ValueError):
            invert_unitriangular(ExactMatrix([[2, 0], [0, 1]]))
        with pytest.raises(ValueError):
            invert_unitriangular(ExactMatrix([[1, 0], [1, 1]]))

    def test_power(self):
        m = ExactMatrix([[1, 1], [0, 1]])
        assert m.power(0) == ExactMatrix.identity(2)
        assert m.power(5)[0, 1] == 5


class TestAgainstPrintedMatrices:
    def test_zeta_d3(self, posets):
        assert zeta_matrix(posets(3)).rows == ZETA_D3

    def test_mobius_d3(self, posets):
        assert mobius_matrix(posets(3)).rows == MOBIUS_D3

    def test_zeta_times_mobius_is_identity(self, posets):
        for n in range(6):
            p = posets(n)
            z, m = zeta_matrix(p), mobius_matrix(p)
            assert z @ m == ExactMatrix.identity(p.size)
            assert m @ z == ExactMatrix.identity(p.size)


class TestChainCounts:
    def test_total_chains(self, posets):
        for n in range(6):
            assert total_chains(posets(n)) == TOTAL_CHAINS[n]

    def test_total_chain_matrix_is_geometric_series(self, posets):
        # (2*delta - zeta)^{-1} must equal sum of (zeta - delta)^k
        for n in range(5):
            p = posets(n)
            strict = zeta_matrix(p) - delta_matrix(p)
            series = ExactMatrix.zero(p.size)
            k = 0
            power = ExactMatrix.identity(p.size)
            while not power.is_zero():
                series = series + power
                power = power @ strict
                k += 1
            assert total_chain_matrix(p) == series

    def test_strict_matrix_nilpotent(self, posets):
        for n in range(6):
            p = posets(n)
            assert chains_of_length(p, comb(n, 2) + 1).is_zero()
            if n >= 2:
                assert not chains_of_length(p, comb(n, 2)).is_zero()

    def test_chain_polynomials(self, posets):
        assert chain_polynomial(posets(3)) == CHAIN_POLY_3
        assert chain_polynomial(posets(4)) == CHAIN_POLY_4

    def test_chain_polynomial_order_zero(self, posets):
        assert chain_polynomial(posets(0)) == UniPoly.from_list([1, 1])

    def test_chain_polynomial_sums_by_direct_count(self, posets):
        # oracle: count strictly increasing index tuples directly
        for n in range(4):
            p = posets(n)
            poly = chain_polynomial(p)
            from itertools import combinations
            for size in range(p.size + 1):
                direct = sum(
                    1 for sub in combinations(range(p.size), size)
                    if all(p.leq(a, b) for a, b in zip(sub, sub[1:])))
                assert poly.coeffs.get(size, 0) == direct


class TestMaximalChains:
    def test_two_routes_and_hook_formula(self, posets):
        for n in range(6):
            via_matrix = maximal_chain_count(posets(n))
            assert via_matrix == MAXIMAL[n]
            if n >= 1:
                assert staircase_maxchain(n) == via_matrix

    def test_eta_entries_are_covers(self, posets):
        p = posets(4)
        eta = eta_matrix(p)
        assert eta.entry_sum() == len(p.cover_edges())


class TestIntervalCounts:
    def test_values(self, posets):
        for n in range(6):
            assert interval_count(posets(n)) == INTERVALS[n]

    def test_equals_pairwise_comparison(self, posets):
        for n in range(5):
            p = posets(n)
            direct = sum(1 for i in range(p.size) for j in range(p.size)
                         if p.leq(i, j))
            assert interval_count(p) == direct
