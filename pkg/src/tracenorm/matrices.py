"""Hadamard, conference and Fourier matrices over prime fields.

Integer matrices are kept as ``int64`` arrays so that the defining identities
``H H^T = n I`` and ``C C^T = (n-1) I`` can be checked exactly.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from .errors import NotOdd, NotPrime, OrderCap, VerificationError, WrongResidueClass

PRIME_CAP = 1 << 16
SYLVESTER_CAP = 12
FAMILIES = ("sylvester", "paley1_hadamard", "paley2_hadamard", "paley_conference", "fourier", "user")


@dataclass(frozen=True)
class NamedMatrix:
    matrix: np.ndarray
    family: str
    params: dict = field(default_factory=dict)
    symmetry: str = "none"  # symmetric | skew | none

    @property
    def order(self) -> int:
        return self.matrix.shape[0]


def is_prime(q: int) -> bool:
    if q >= PRIME_CAP:
        raise OrderCap(f"primality is only decided below {PRIME_CAP}, got {q}")
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def _require_odd_prime(q: int) -> None:
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if q == 2:
        raise NotOdd("q must be an odd prime")


def quadratic_character(a: int, q: int) -> int:
    """Legendre symbol of ``a`` modulo the odd prime ``q`` by Euler's criterion."""
    _require_odd_prime(q)
    a %= q
    if a == 0:
        return 0
    return 1 if pow(a, (q - 1) // 2, q) == 1 else -1


def jacobsthal(q: int) -> np.ndarray:
    """``Q[i, j] = chi(i - j)`` for the quadratic character of GF(q)."""
    _require_odd_prime(q)
    chi = np.array([quadratic_character(a, q) for a in range(q)], dtype=np.int64)
    idx = np.arange(q)
    return chi[(idx[:, None] - idx[None, :]) % q]


def symmetry_of(a) -> str:
    m = np.asarray(a)
    if np.array_equal(m, m.T):
        return "symmetric"
    off = ~np.eye(m.shape[0], dtype=bool)
    if np.array_equal(m.T[off], -m[off]):
        return "skew"
    return "none"


def _integer_view(m: np.ndarray):
    """Return an int64 copy when every entry is a (real) integer, else None."""
    if np.issubdtype(m.dtype, np.integer):
        return m.astype(np.int64)
    if np.iscomplexobj(m):
        if np.any(m.imag):
            return None
        m = m.real
    if np.all(np.isfinite(m)) and np.all(m == np.round(m)):
        return m.astype(np.int64)
    return None


def _gram_is_scalar(m: np.ndarray, scale: int) -> bool:
    n = m.shape[0]
    ints = _integer_view(m)
    if ints is not None:
        return np.array_equal(ints @ ints.T, scale * np.eye(n, dtype=np.int64))
    gram = m @ np.conj(m).T
    return bool(np.all(np.abs(gram - scale * np.eye(n)) <= 1e-9))


def _unit_modulus(x: np.ndarray) -> bool:
    ints = _integer_view(x)
    if ints is not None:
        return bool(np.all(np.abs(ints) == 1))
    return bool(np.all(np.abs(np.abs(x) - 1.0) <= 1e-9))


def is_hadamard(a) -> bool:
    m = np.asarray(a)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        return False
    return _unit_modulus(m) and _gram_is_scalar(m, m.shape[0])


def is_conference(a) -> bool:
    m = np.asarray(a)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 2:
        return False
    n = m.shape[0]
    if np.any(np.diagonal(m)):
        return False
    off = ~np.eye(n, dtype=bool)
    return _unit_modulus(m[off]) and _gram_is_scalar(m, n - 1)


def _checked(matrix, family, params, symmetry, verifier) -> NamedMatrix:
    if not verifier(matrix):
        raise VerificationError(f"{family} {params} failed verification")
    matrix.setflags(write=False)
    return NamedMatrix(matrix, family, params, symmetry)


def paley_conference(q: int) -> NamedMatrix:
    """Real conference matrix of order q + 1, symmetric iff q = 1 (mod 4)."""
    _require_odd_prime(q)
    eps = quadratic_character(-1, q)
    c = np.zeros((q + 1, q + 1), dtype=np.int64)
    c[0, 1:] = 1
    c[1:, 0] = eps
    c[1:, 1:] = jacobsthal(q)
    sym = "symmetric" if q % 4 == 1 else "skew"
    assert symmetry_of(c) == sym
    return _checked(c, "paley_conference", {"q": q}, sym, is_conference)


def paley_hadamard_I(q: int) -> NamedMatrix:
    """Hadamard matrix ``I + S`` of order q + 1 from the skew conference matrix S."""
    _require_odd_prime(q)
    if q % 4 != 3:
        raise WrongResidueClass(f"q = {q} is not 3 mod 4")
    s = paley_conference(q).matrix
    h = s + np.eye(q + 1, dtype=np.int64)
    return _checked(h, "paley1_hadamard", {"q": q}, symmetry_of(h), is_hadamard)


def paley_hadamard_II(q: int) -> NamedMatrix:
    """Symmetric Hadamard matrix of order 2(q + 1) from the symmetric conference matrix."""
    _require_odd_prime(q)
    if q % 4 != 1:
        raise WrongResidueClass(f"q = {q} is not 1 mod 4")
    c = paley_conference(q).matrix
    i = np.eye(q + 1, dtype=np.int64)
    h = np.block([[c + i, c - i], [c - i, -c - i]])
    return _checked(h, "paley2_hadamard", {"q": q}, "symmetric", is_hadamard)


def sylvester(k: int) -> NamedMatrix:
    if k < 0:
        raise ValueError("exponent must be non-negative")
    if k > SYLVESTER_CAP:
        raise OrderCap(f"sylvester({k}) exceeds order {1 << SYLVESTER_CAP}")
    h = np.ones((1, 1), dtype=np.int64)
    for _ in range(k):
        h = np.block([[h, h], [h, -h]])
    return _checked(h, "sylvester", {"k": k}, "symmetric", is_hadamard)


def _root_of_unity(r: int, n: int) -> complex:
    # quarter turns exactly, so order 2 and 4 come out integral
    if (4 * r) % n == 0:
        return (1, 1j, -1, -1j)[(4 * r) // n]
    return cmath.exp(2j * cmath.pi * r / n)


def fourier_complex_hadamard(n: int) -> NamedMatrix:
    """``F[j, k] = exp(2 pi i j k / n)``; a complex Hadamard matrix for every n."""
    if n < 1:
        raise ValueError("order must be positive")
    f = np.array([[_root_of_unity((j * k) % n, n) for k in range(n)] for j in range(n)],
                 dtype=np.complex128)
    return _checked(f, "fourier", {"n": n}, symmetry_of(f), is_hadamard)


def from_array(a, family: str = "user", kind: str | None = None) -> NamedMatrix:
    """Wrap a user-supplied matrix, detecting its symmetry.

    ``kind`` may be ``"hadamard"`` or ``"conference"`` to verify on the way in.
    """
    m = np.array(a)
    ints = _integer_view(m)
    if ints is not None:
        m = ints
    if kind == "hadamard" and not is_hadamard(m):
        raise VerificationError("matrix is not Hadamard")
    if kind == "conference" and not is_conference(m):
        raise VerificationError("matrix is not a conference matrix")
    m.setflags(write=False)
    return NamedMatrix(m, family, {}, symmetry_of(m))
