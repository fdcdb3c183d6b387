"""Partitions, r-partite matrices and graphs, and the extremal constructions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import NotPartite, NotSymmetric, ShrinkNotAllowed, VerificationError
from .matrices import NamedMatrix, from_array, is_conference, is_hadamard


@dataclass(frozen=True)
class Partition:
    """Per-index class labels ``0..r-1``."""

    labels: tuple
    r: int

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if self.r < 1:
            raise ValueError("a partition needs at least one class")
        if any(x < 0 or x >= self.r for x in labels):
            raise ValueError(f"labels must lie in 0..{self.r - 1}")

    @classmethod
    def from_labels(cls, labels) -> "Partition":
        labels = [int(x) for x in labels]
        return cls(tuple(labels), max(labels) + 1 if labels else 1)

    @classmethod
    def segments(cls, r: int, k: int) -> "Partition":
        """``r`` consecutive segments of length ``k``."""
        return cls(tuple(i // k for i in range(r * k)), r)

    @classmethod
    def near_equal(cls, n: int, r: int) -> "Partition":
        """Consecutive segments whose sizes differ by at most one."""
        base, extra = divmod(n, r)
        labels = []
        for c in range(r):
            labels += [c] * (base + (c < extra))
        return cls(tuple(labels), r)

    @property
    def n(self) -> int:
        return len(self.labels)

    def sizes(self) -> list[int]:
        return np.bincount(np.asarray(self.labels, dtype=np.int64), minlength=self.r).tolist()

    def classes(self) -> list[np.ndarray]:
        lab = np.asarray(self.labels)
        return [np.flatnonzero(lab == c) for c in range(self.r)]

    def same_class_mask(self) -> np.ndarray:
        lab = np.asarray(self.labels)
        return lab[:, None] == lab[None, :]

    def nonempty(self) -> bool:
        return all(s > 0 for s in self.sizes())


@dataclass(frozen=True)
class PartiteMatrix:
    matrix: np.ndarray
    partition: Partition

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def r(self) -> int:
        return self.partition.r


@dataclass(frozen=True)
class Graph:
    """Simple graph stored as a 0/1 symmetric integer adjacency matrix."""

    adjacency: np.ndarray
    partition: Partition | None = None

    def __post_init__(self):
        a = np.asarray(self.adjacency)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be square")
        if not np.all((a == 0) | (a == 1)):
            raise ValueError("adjacency entries must be 0 or 1")
        if not np.array_equal(a, a.T):
            raise NotSymmetric("adjacency is not symmetric")
        if np.any(np.diagonal(a)):
            raise ValueError("adjacency has loops")
        a = a.astype(np.int64)
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)
        if self.partition is not None:
            validate_partite(a, self.partition)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def m(self) -> int:
        return int(self.adjacency.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def eigenvalues(self) -> np.ndarray:
        return linalg.hermitian_eigenvalues(self.adjacency).values

    def trace_norm(self) -> float:
        return linalg.hermitian_trace_norm(self.adjacency)


def validate_partite(a, p: Partition) -> PartiteMatrix:
    m = np.asarray(a)
    if p.n != m.shape[0]:
        raise ValueError(f"partition covers {p.n} indices, matrix has order {m.shape[0]}")
    bad = np.argwhere(p.same_class_mask() & (m != 0))
    if len(bad):
        i, j = (int(x) for x in bad[0])
        raise NotPartite(p.labels[i], (i, j))
    return PartiteMatrix(m, p)


def _as_named(x, kind: str) -> NamedMatrix:
    return x if isinstance(x, NamedMatrix) else from_array(x, kind=kind)


def complete_multipartite(sizes) -> Graph:
    sizes = [int(s) for s in sizes]
    if len(sizes) < 2 or min(sizes) < 1:
        raise ValueError("need at least two non-empty classes")
    labels = [c for c, s in enumerate(sizes) for _ in range(s)]
    p = Partition(tuple(labels), len(sizes))
    adj = (~p.same_class_mask()).astype(np.int64)
    return Graph(adj, p)


def construct_th3(c, h) -> PartiteMatrix:
    """``C kron H`` for a conference matrix C of order r and Hadamard H of order k.

    Every singular value equals ``sqrt((r - 1) k)``, so the trace norm is
    ``n^{3/2} sqrt(1 - 1/r)`` with ``n = r k``.
    """
    c, h = _as_named(c, "conference"), _as_named(h, "hadamard")
    if not is_conference(c.matrix):
        raise VerificationError("first factor is not a conference matrix")
    if not is_hadamard(h.matrix):
        raise VerificationError("second factor is not a Hadamard matrix")
    a = linalg.kron(c.matrix, h.matrix)
    return validate_partite(a, Partition.segments(c.order, h.order))


def construct_th4(c, h) -> Graph:
    """The r-partite graph with adjacency ``(C kron H + K_r kron J_k) / 2``."""
    c, h = _as_named(c, "conference"), _as_named(h, "hadamard")
    for name, x in (("conference", c), ("Hadamard", h)):
        if x.symmetry != "symmetric" or not linalg.is_real(x.matrix):
            raise NotSymmetric(f"{name} factor must be real symmetric (got {x.symmetry})")
    if not is_conference(c.matrix):
        raise VerificationError("first factor is not a conference matrix")
    if not is_hadamard(h.matrix):
        raise VerificationError("second factor is not a Hadamard matrix")
    r, k = c.order, h.order
    b = np.kron(np.real(c.matrix).astype(np.int64), np.real(h.matrix).astype(np.int64))
    kr = np.ones((r, r), dtype=np.int64) - np.eye(r, dtype=np.int64)
    total = b + np.kron(kr, np.ones((k, k), dtype=np.int64))
    return Graph(total // 2, Partition.segments(r, k))


def pad(pm: PartiteMatrix, m: int) -> PartiteMatrix:
    """Extend with zero rows/columns up to order ``m``; new indices join the last class."""
    n = pm.n
    if m < n:
        raise ShrinkNotAllowed(f"cannot pad order {n} down to {m}")
    a = np.zeros((m, m), dtype=pm.matrix.dtype)
    a[:n, :n] = pm.matrix
    labels = pm.partition.labels + (pm.r - 1,) * (m - n)
    return validate_partite(a, Partition(labels, pm.r))


def kron_hadamard(pm: PartiteMatrix, h) -> PartiteMatrix:
    """``A kron H``; index ``i k + j`` inherits the class of ``i``."""
    h = _as_named(h, "hadamard")
    if not is_hadamard(h.matrix):
        raise VerificationError("second factor is not a Hadamard matrix")
    k = h.order
    labels = tuple(lab for lab in pm.partition.labels for _ in range(k))
    return validate_partite(linalg.kron(pm.matrix, h.matrix), Partition(labels, pm.r))
