import random

import pytest

from gphom.errors import IntegralityViolation, InvalidInput
from gphom.graphs import coproduct, cycle_graph, cross_graph, figure_eight, \
    product, undirected_cycle, enumerate_morphisms
from gphom.spectral import (IntPolynomial, adjacency_matrix, char_poly,
                            cycle_count, expand_log_exp, newton_power_sums,
                            reversed_char_poly, zeta_series)

from conftest import random_graph


def test_adjacency_matrix_examples():
    assert adjacency_matrix(figure_eight()) == [[2]]
    A = adjacency_matrix(cross_graph())
    assert A[0] == [0, 1, 1, 1, 1]
    assert [row[0] for row in A] == [0, 1, 1, 1, 1]
    C3 = adjacency_matrix(cycle_graph(3))
    assert sum(sum(r) for r in C3) == 3 and all(sum(r) == 1 for r in C3)


def test_char_poly_worked_examples():
    # ascending coefficients: x^5 - 4x^3 and x^4 - 4x^2
    assert char_poly(adjacency_matrix(cross_graph())).coefficients == \
        (0, 0, 0, -4, 0, 1)
    assert char_poly(adjacency_matrix(undirected_cycle(4))).coefficients == \
        (0, 0, -4, 0, 1)
    assert char_poly(adjacency_matrix(cycle_graph(3))).coefficients == \
        (-1, 0, 0, 1)


def test_char_poly_monic_and_degree():
    rnd = random.Random(7)
    for _ in range(20):
        X = random_graph(rnd, 5, 8)
        a = char_poly(adjacency_matrix(X))
        assert a.degree == len(X.nodes)
        assert a[a.degree] == 1


def test_reversed_char_poly():
    assert reversed_char_poly(adjacency_matrix(cross_graph())).coefficients \
        == (1, 0, -4)
    assert reversed_char_poly(adjacency_matrix(undirected_cycle(4))).coefficients \
        == (1, 0, -4)
    assert reversed_char_poly(adjacency_matrix(cycle_graph(1))).coefficients \
        == (1, -1)


def test_reversal_identity():
    rnd = random.Random(8)
    for _ in range(20):
        X = random_graph(rnd, 5, 8)
        A = adjacency_matrix(X)
        a = char_poly(A)
        rev = reversed_char_poly(A)
        n = len(X.nodes)
        expected = [a[n - k] for k in range(n + 1)]
        while expected and expected[-1] == 0:
            expected.pop()
        assert list(rev.coefficients) == expected


def test_cycle_count_examples():
    assert cycle_count(cross_graph(), 2) == 8
    assert cycle_count(cross_graph(), 4) == 32
    assert cycle_count(figure_eight(), 3) == 8
    assert cycle_count(figure_eight(), 3) == \
        len(enumerate_morphisms(cycle_graph(3), figure_eight()))
    for m in range(1, 5):
        for n in range(1, 7):
            assert cycle_count(cycle_graph(m), n) == (m if n % m == 0 else 0)


def test_cycle_count_matches_enumeration(small_corpus):
    rnd = random.Random(9)
    for X in rnd.sample(small_corpus, 40):
        for n in range(1, 7):
            assert cycle_count(X, n) == \
                len(enumerate_morphisms(cycle_graph(n), X))


def test_newton_consistency():
    rnd = random.Random(10)
    for _ in range(30):
        X = random_graph(rnd, 6, 9)
        a = char_poly(adjacency_matrix(X))
        sums = newton_power_sums(a, len(X.nodes))
        for n in range(1, len(X.nodes) + 1):
            assert sums[n - 1] == cycle_count(X, n)


def test_zeta_series_examples():
    Z = zeta_series(cycle_graph(1), 5)
    assert Z.coefficients == (1, 1, 1, 1, 1, 1)
    Z = zeta_series(cross_graph(), 8)
    assert Z.coefficients == (1, 0, 4, 0, 16, 0, 64, 0, 256)
    for m in range(1, 5):
        Z = zeta_series(cycle_graph(m), 6)
        denom = [1] + [0] * (m - 1) + [-1]
        assert list(Z.denominator.coefficients) == denom


def test_zeta_series_inverts_denominator():
    rnd = random.Random(11)
    for _ in range(15):
        X = random_graph(rnd, 4, 6)
        N = 2 * max(len(X.nodes), 1)
        Z = zeta_series(X, N)
        prod = [0] * (N + 1)
        for i, d in enumerate(Z.denominator.coefficients):
            for k in range(N + 1 - i):
                prod[i + k] += d * Z.coefficients[k]
        assert prod == [1] + [0] * N


def test_zeta_multiplicative_over_coproduct():
    rnd = random.Random(12)
    for _ in range(10):
        X = random_graph(rnd, 3, 4)
        Y = random_graph(rnd, 3, 4)
        N = 6
        zx = zeta_series(X, N).coefficients
        zy = zeta_series(Y, N).coefficients
        zc = zeta_series(coproduct(X, Y), N).coefficients
        prod = [sum(zx[i] * zy[k - i] for i in range(k + 1)) for k in range(N + 1)]
        assert list(zc) == prod


def test_ghost_multiplicative_over_product():
    rnd = random.Random(13)
    for _ in range(10):
        X = random_graph(rnd, 3, 4)
        Y = random_graph(rnd, 3, 4)
        P = product(X, Y)
        for n in range(1, 6):
            assert cycle_count(P, n) == cycle_count(X, n) * cycle_count(Y, n)


def test_expand_log_exp_rejects_nonintegral():
    with pytest.raises(IntegralityViolation):
        expand_log_exp(lambda n: 1 if n == 2 else 0, 3)


def test_cycle_count_rejects_bad_n():
    with pytest.raises(InvalidInput):
        cycle_count(cycle_graph(2), 0)


def test_polynomial_format():
    assert IntPolynomial((1, 0, -4)).format("u") == "1 - 4*u^2"
    assert IntPolynomial(()).format("x") == "0"
    assert IntPolynomial((0, 1)).format("x") == "x"
    assert IntPolynomial((-1, 0, 0, 1)).format("x") == "-1 + x^3"
    assert IntPolynomial((1,)).format("x") == "1"
