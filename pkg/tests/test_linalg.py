import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import lapack_eigenvalues, lapack_singular_values, lapack_trace_norm
from tracenorm import linalg
from tracenorm.errors import NotHermitian
from tracenorm.matrices import fourier_complex_hadamard, paley_conference, sylvester


def K(n):
    return np.ones((n, n)) - np.eye(n)


def cycle(n):
    a = np.roll(np.eye(n), 1, axis=0)
    return a + a.T


def random_matrix(seed, n, complex_=False):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n))
    if complex_:
        a = a + 1j * rng.normal(size=(n, n))
    return a


def test_kron_identity():
    assert np.array_equal(linalg.kron(np.eye(2), np.eye(2)), np.eye(4))


def test_kron_blocks():
    a, b = np.array([[1, 2], [3, 4]]), np.array([[0, 1], [1, 0]])
    k = linalg.kron(a, b)
    assert np.array_equal(k[2:, :2], 3 * b)


def test_kron_trace_norm_k2():
    assert linalg.trace_norm(linalg.kron(K(2), K(2))) == pytest.approx(4.0, rel=1e-12)


def test_kron_conference_sylvester_singular_values():
    sv = linalg.singular_values(linalg.kron(paley_conference(5).matrix, sylvester(1).matrix)).values
    assert len(sv) == 12
    assert np.allclose(sv, math.sqrt(5) * math.sqrt(2), rtol=1e-9)


@pytest.mark.parametrize("a, expected", [
    (np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]]), [math.sqrt(2), 0, -math.sqrt(2)]),
    (K(8), [7] + [-1] * 7),
    (cycle(5), sorted((2 * math.cos(2 * math.pi * j / 5) for j in range(5)), reverse=True)),
])
def test_known_spectra(a, expected):
    sp = linalg.hermitian_eigenvalues(a)
    assert sp.kind == "eigenvalues"
    assert np.allclose(sp.values, expected, atol=1e-12)


def test_not_hermitian():
    with pytest.raises(NotHermitian):
        linalg.hermitian_eigenvalues([[0, 1], [0, 0]])
    with pytest.raises(NotHermitian):
        linalg.hermitian_eigenvalues(np.array([[0, 1j], [1j, 0]]))


def test_complex_hermitian_matches_lapack():
    a = random_matrix(1, 12, complex_=True)
    h = a + a.conj().T
    assert np.allclose(linalg.hermitian_eigenvalues(h).values, lapack_eigenvalues(h), atol=1e-10)


@pytest.mark.parametrize("seed", range(5))
def test_trace_and_frobenius_identities(seed):
    a = random_matrix(seed, 9)
    h = a + a.T
    ev = linalg.hermitian_eigenvalues(h).values
    fro = np.linalg.norm(h)
    assert abs(ev.sum() - np.trace(h)) <= 1e-9 * fro
    assert abs((ev ** 2).sum() - fro ** 2) <= 1e-9 * fro ** 2
    assert np.all(np.diff(ev) <= 0)


def test_jacobi_residual_and_batch_independence():
    rng = np.random.default_rng(7)
    batch = rng.normal(size=(20, 10, 10))
    batch = batch + np.swapaxes(batch, 1, 2)
    res = linalg.jacobi(batch)
    assert np.all(res.off_norm <= 1e-12 * res.frobenius)
    # a matrix gets bit-identical eigenvalues whether alone or in a batch
    for i in (0, 13):
        assert np.array_equal(linalg.jacobi(batch[i]).eigenvalues[0], res.eigenvalues[i])


def test_zero_matrix():
    assert np.array_equal(linalg.hermitian_eigenvalues(np.zeros((3, 3))).values, np.zeros(3))
    assert linalg.trace_norm(np.zeros((4, 4))) == 0.0


def test_singular_values_nilpotent():
    sp = linalg.singular_values([[0, 1], [0, 0]])
    assert sp.kind == "singular_values"
    assert np.allclose(sp.values, [1, 0], atol=1e-12)


def test_singular_values_conference_and_fourier():
    assert np.allclose(linalg.singular_values(paley_conference(5).matrix).values, math.sqrt(5), rtol=1e-12)
    assert np.allclose(linalg.singular_values(fourier_complex_hadamard(3).matrix).values, math.sqrt(3),
                       rtol=1e-12)


@pytest.mark.parametrize("complex_", [False, True])
def test_singular_values_match_lapack(complex_):
    a = random_matrix(3, 15, complex_)
    sv = linalg.singular_values(a).values
    assert np.allclose(sv, lapack_singular_values(a), atol=1e-7)
    assert abs((sv ** 2).sum() - (np.abs(a) ** 2).sum()) <= 1e-9 * (np.abs(a) ** 2).sum()


@pytest.mark.parametrize("a, expected", [
    (K(4), 6.0),
    (np.block([[np.zeros((2, 2)), np.ones((2, 3))], [np.ones((3, 2)), np.zeros((3, 3))]]), 2 * math.sqrt(6)),
    (np.kron(K(3), np.ones((2, 2))), 8.0),
])
def test_trace_norm_examples(a, expected):
    assert linalg.trace_norm(a) == pytest.approx(expected, rel=1e-9)
    assert linalg.hermitian_trace_norm(a) == pytest.approx(expected, rel=1e-9)


def test_max_abs_entry():
    assert linalg.max_abs_entry(np.ones((3, 3))) == 1
    assert linalg.max_abs_entry(np.zeros((3, 3))) == 0
    assert linalg.max_abs_entry(2 * K(2)) == 2
    assert linalg.max_abs_entry(np.array([[0, 3 + 4j], [0, 0]])) == 5


matrices_st = st.integers(min_value=1, max_value=7).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, 2 ** 32 - 1), st.booleans()))


@settings(max_examples=40, deadline=None)
@given(matrices_st)
def test_trace_norm_invariances(params):
    n, seed, cplx = params
    a = random_matrix(seed, n, cplx)
    tn = linalg.trace_norm(a)
    perm = np.random.default_rng(seed).permutation(n)
    assert linalg.trace_norm(a[np.ix_(perm, perm)]) == pytest.approx(tn, rel=1e-9)
    assert linalg.trace_norm(a.conj().T) == pytest.approx(tn, rel=1e-9)
    assert tn == pytest.approx(lapack_trace_norm(a), rel=1e-9)
    # AM-QM
    assert tn ** 2 <= n * (np.abs(a) ** 2).sum() + 1e-6


@settings(max_examples=40, deadline=None)
@given(matrices_st, st.integers(1, 4), st.integers(0, 2 ** 32 - 1))
def test_trace_norm_kron_and_triangle(params, m, seed2):
    n, seed, cplx = params
    a = random_matrix(seed, n, cplx)
    b = random_matrix(seed2, m)
    assert linalg.trace_norm(linalg.kron(a, b)) == pytest.approx(
        linalg.trace_norm(a) * linalg.trace_norm(b), rel=1e-8)
    c = random_matrix(seed2, n, cplx)
    assert linalg.trace_norm(a + c) <= linalg.trace_norm(a) + linalg.trace_norm(c) + 1e-9
