import math

import numpy as np
import pytest

from oracles import squares_mod
from tracenorm import linalg
from tracenorm.errors import NotOdd, NotPrime, OrderCap, WrongResidueClass
from tracenorm.matrices import (fourier_complex_hadamard, from_array, is_conference, is_hadamard,
                                is_prime, jacobsthal, paley_conference, paley_hadamard_I,
                                paley_hadamard_II, quadratic_character, symmetry_of, sylvester)


def exact_gram(m):
    m = np.asarray(m, dtype=object)
    return m.dot(m.T)


@pytest.mark.parametrize("q", [3, 5, 7, 11, 13, 17, 19, 23, 29])
def test_quadratic_character_matches_enumeration(q):
    sq = squares_mod(q)
    for a in range(-q, 2 * q):
        expected = 0 if a % q == 0 else (1 if a % q in sq else -1)
        assert quadratic_character(a, q) == expected


def test_quadratic_character_examples():
    assert quadratic_character(0, 5) == 0
    assert quadratic_character(4, 5) == 1
    assert quadratic_character(2, 5) == -1


@pytest.mark.parametrize("q, err", [(9, NotPrime), (1, NotPrime), (2, NotOdd), (1 << 16, OrderCap)])
def test_quadratic_character_rejects(q, err):
    with pytest.raises(err):
        quadratic_character(1, q)


def test_is_prime_small():
    assert [p for p in range(40) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    assert is_prime(65521)


@pytest.mark.parametrize("q", [3, 5, 7, 13, 17])
def test_paley_conference(q):
    c = paley_conference(q)
    m = c.matrix
    assert c.order == q + 1
    assert not np.any(np.diagonal(m))
    off = ~np.eye(q + 1, dtype=bool)
    assert set(np.unique(m[off])) == {-1, 1}
    assert (exact_gram(m) == q * np.eye(q + 1, dtype=int)).all()
    assert c.symmetry == ("symmetric" if q % 4 == 1 else "skew")
    assert np.allclose(linalg.singular_values(m).values, math.sqrt(q), rtol=1e-9)


def test_paley_conference_trace_norms():
    assert linalg.trace_norm(paley_conference(5).matrix) == pytest.approx(6 * math.sqrt(5), rel=1e-12)
    assert linalg.trace_norm(paley_conference(13).matrix) == pytest.approx(14 * math.sqrt(13), rel=1e-12)


def test_jacobsthal_is_character_of_difference():
    q = 7
    Q = jacobsthal(q)
    assert Q[3, 1] == quadratic_character(2, q)
    assert (Q.sum(axis=1) == 0).all()


@pytest.mark.parametrize("q", [3, 7, 11, 19])
def test_paley_hadamard_I(q):
    h = paley_hadamard_I(q)
    assert h.order == q + 1
    assert (exact_gram(h.matrix) == (q + 1) * np.eye(q + 1, dtype=int)).all()
    assert linalg.trace_norm(h.matrix) == pytest.approx((q + 1) ** 1.5, rel=1e-9)


@pytest.mark.parametrize("q", [5, 13])
def test_paley_hadamard_II(q):
    h = paley_hadamard_II(q)
    n = 2 * (q + 1)
    assert h.order == n and h.symmetry == "symmetric"
    assert np.array_equal(h.matrix, h.matrix.T)
    assert (exact_gram(h.matrix) == n * np.eye(n, dtype=int)).all()


def test_paley_residue_classes():
    with pytest.raises(WrongResidueClass):
        paley_hadamard_II(3)
    with pytest.raises(WrongResidueClass):
        paley_hadamard_I(5)
    with pytest.raises(NotPrime):
        paley_conference(15)


def test_sylvester():
    assert sylvester(0).matrix.tolist() == [[1]]
    assert sylvester(1).matrix.tolist() == [[1, 1], [1, -1]]
    assert linalg.trace_norm(sylvester(2).matrix) == pytest.approx(8.0, rel=1e-12)
    for k in range(7):
        h = sylvester(k).matrix
        assert (exact_gram(h) == (1 << k) * np.eye(1 << k, dtype=int)).all()
    with pytest.raises(OrderCap):
        sylvester(13)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 6, 12])
def test_fourier(n):
    f = fourier_complex_hadamard(n).matrix
    assert np.all(np.abs(np.abs(f) - 1) <= 1e-12)
    assert np.all(np.abs(f @ f.conj().T - n * np.eye(n)) <= 1e-9)


def test_fourier_small_orders():
    assert fourier_complex_hadamard(1).matrix.tolist() == [[1]]
    f2 = fourier_complex_hadamard(2).matrix
    assert np.array_equal(f2, np.array([[1, 1], [1, -1]]))
    assert np.allclose(linalg.singular_values(fourier_complex_hadamard(3).matrix).values, math.sqrt(3))


def test_verifiers():
    assert is_hadamard(sylvester(3).matrix)
    assert not is_conference(np.ones((4, 4), dtype=int) - np.eye(4, dtype=int))
    assert not is_hadamard(np.ones((2, 2)))
    assert is_conference(np.array([[0, 1], [1, 0]]))
    assert not is_hadamard(2 * sylvester(1).matrix)
    # float input goes through the tolerance path
    assert is_hadamard(sylvester(2).matrix / 1.0 * (1 + 1e-13))


def test_generators_respect_entry_bound():
    for nm in [paley_conference(5), paley_hadamard_I(7), paley_hadamard_II(5), sylvester(3),
               fourier_complex_hadamard(5)]:
        assert linalg.max_abs_entry(nm.matrix) <= 1 + 1e-12


def test_from_array_symmetry():
    assert from_array([[0, 1], [1, 0]], kind="conference").symmetry == "symmetric"
    assert symmetry_of(paley_conference(3).matrix) == "skew"
    assert symmetry_of(np.array([[1, 2], [3, 4]])) == "none"
