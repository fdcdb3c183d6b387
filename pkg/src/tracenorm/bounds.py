"""Closed-form trace-norm bounds for r-partite matrices and graphs, and equality checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import DomainError
from .partite import Graph, PartiteMatrix

EQUALITY_TOL = 1e-8


@dataclass(frozen=True)
class BoundReport:
    name: str
    value: float
    applicable: bool
    precondition_note: str = ""

    def __post_init__(self):
        if not self.applicable and not self.precondition_note:
            raise ValueError("an inapplicable bound must name the violated premise")


@dataclass(frozen=True)
class Clause:
    name: str
    holds: bool
    residual: float
    detail: str = ""


@dataclass(frozen=True)
class EqualityCertificate:
    theorem: str
    clauses: tuple
    tolerance: float
    premise: bool | None = None
    notes: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.clauses)

    def summary(self) -> str:
        flags = ",".join(f"{c.name}={'ok' if c.holds else 'FAIL'}" for c in self.clauses)
        return f"{self.theorem}:{'holds' if self.holds else 'fails'}[{flags}]"


def _check_nr(n, r):
    if not (r >= 2 and n >= r):
        raise DomainError(f"need n >= r >= 2, got n={n}, r={r}")


def km_bound(n) -> float:
    """Maximum trace norm of any graph of order n (Koolen-Moulton)."""
    if n < 1:
        raise DomainError("n must be positive")
    return n ** 1.5 / 2 + n / 2


def kmb_bound(n) -> float:
    """Maximum trace norm of a bipartite graph of order n (Koolen-Moulton)."""
    if n < 1:
        raise DomainError("n must be positive")
    return n ** 1.5 / math.sqrt(8) + n / 2


def mb_bound(n, r) -> float:
    """Ceiling for r-partite complex matrices with entries of modulus at most 1."""
    _check_nr(n, r)
    return n ** 1.5 * math.sqrt(1 - 1 / r)


def eab_bound(n, r) -> float:
    """Ceiling for r-partite nonnegative matrices (hence graphs) with entries at most 1."""
    _check_nr(n, r)
    return n ** 1.5 / 2 * math.sqrt(1 - 1 / r) + (1 - 1 / r) * n


def bom_bound(n, r, m) -> BoundReport:
    """Edge-count dependent bound for r-partite graphs with n vertices and m edges."""
    if not (n > r > 2):
        raise DomainError(f"need n > r > 2, got n={n}, r={r}")
    radicand = (n - r) * (2 * m - r / (r - 1) * (2 * m / n) ** 2)
    notes = []
    if 2 * m < r * r * n:
        notes.append("2m < r^2 n")
    if radicand < 0:
        notes.append("radicand (n-r)(2m - r/(r-1) (2m/n)^2) is negative")
    value = 4 * m / n + math.sqrt(radicand) if radicand >= 0 else math.nan
    return BoundReport("bom", value, not notes, "; ".join(notes))


def _bon_root(n, r) -> float:
    return math.sqrt((n - r) * r / (r - 1) + 4)


def bon_bound(n, r) -> BoundReport:
    """Edge-count free bound for r-partite graphs, valid once n >= 4(r-1)^2."""
    if r < 2 or n <= r:
        raise DomainError(f"need r >= 2 and n > r, got n={n}, r={r}")
    s = _bon_root(n, r)
    value = n * (n - r) / (2 * s) + (r - 1) * n / r + 2 * (r - 1) * n / (r * s)
    if n < 4 * (r - 1) ** 2:
        return BoundReport("bon", value, False, "n < 4(r-1)^2")
    return BoundReport("bon", value, True)


def prop1_lower(n, r) -> float:
    """Existence lower bound ``(n^{3/2}/2)(1 - 1/sqrt r) - n^{21/20}`` (large n)."""
    if r <= 2 or n < 1:
        raise DomainError(f"need r > 2 and n >= 1, got n={n}, r={r}")
    return n ** 1.5 / 2 * (1 - 1 / math.sqrt(r)) - n ** 1.05


def prop2_lower(n, r) -> float:
    """Existence lower bound ``(n^{3/2}/2) sqrt(1 - 1/(r - r^{11/20}))`` (large r and n).

    Only defined when ``r - r^{11/20} > 1``; whether r is large enough for the
    statement to hold is left to the caller.
    """
    if n < 1:
        raise DomainError("n must be positive")
    d = r - r ** 0.55
    if d <= 1:
        raise DomainError(f"r - r^(11/20) must exceed 1, got r={r}")
    return n ** 1.5 / 2 * math.sqrt(1 - 1 / d)


def all_bounds(n, r, m=None) -> list[BoundReport]:
    """Every bound that makes sense for (n, r[, m]), inapplicable ones flagged."""
    _check_nr(n, r)
    out = [
        BoundReport("km", km_bound(n), True),
        BoundReport("kmb", kmb_bound(n), r == 2, "" if r == 2 else "graph is not required to be bipartite"),
        BoundReport("mb", mb_bound(n, r), True),
        BoundReport("eab", eab_bound(n, r), True),
    ]
    if m is None:
        out.append(BoundReport("bom", math.nan, False, "edge count m not given"))
    elif n > r > 2:
        out.append(bom_bound(n, r, m))
    else:
        out.append(BoundReport("bom", math.nan, False, "needs n > r > 2"))
    out.append(bon_bound(n, r) if n > r else BoundReport("bon", math.nan, False, "needs n > r"))
    if r > 2:
        out.append(BoundReport("prop1", prop1_lower(n, r), True))
    else:
        out.append(BoundReport("prop1", math.nan, False, "needs r > 2"))
    if r - r ** 0.55 > 1:
        out.append(BoundReport("prop2", prop2_lower(n, r), True))
    else:
        out.append(BoundReport("prop2", math.nan, False, "needs r - r^(11/20) > 1"))
    return out


# -- spectral inequalities used inside the proofs --------------------------

def hoffman_slack(eigenvalues, r) -> float:
    """``|l_{n-r+2}| + ... + |l_n| - l_1``; non-negative for every r-partite graph."""
    ev = np.sort(np.asarray(eigenvalues, dtype=float))[::-1]
    if r < 2:
        raise DomainError("r must be at least 2")
    tail = ev[len(ev) - (r - 1):]
    return float(np.sum(np.abs(tail)) - ev[0])


def cvetkovic_slack(sizes) -> float:
    """``(1 - 1/r) n - l_1`` for the complete multipartite graph with the given class sizes."""
    from .partite import complete_multipartite

    g = complete_multipartite(sizes)
    r = len(sizes)
    return (1 - 1 / r) * g.n - float(g.eigenvalues()[0])


# -- equality certificates --------------------------------------------------

def check_equality_th1(a: PartiteMatrix, tol: float = EQUALITY_TOL) -> EqualityCertificate:
    """Does ``a`` attain ``n^{3/2} sqrt(1 - 1/r)``?"""
    m = np.asarray(a.matrix)
    n, r = a.n, a.r
    if linalg.max_abs_entry(m) > 1 + 1e-12:
        raise DomainError("entries must have modulus at most 1")
    target = math.sqrt((1 - 1 / r) * n)
    sv = linalg.singular_values(m).values
    res_a = float(np.max(np.abs(sv - target)) / target)
    gram = m @ np.conj(m).T
    res_b = float(np.max(np.abs(gram - (1 - 1 / r) * n * np.eye(n))))
    sizes = a.partition.sizes()
    balanced = n % r == 0 and all(s == n // r for s in sizes)
    clauses = (
        Clause("a", res_a <= tol, res_a, "all singular values equal sqrt((1-1/r)n)"),
        Clause("b", res_b <= tol * n, res_b, "A A* = (1-1/r) n I"),
        Clause("c", balanced, 0.0 if balanced else 1.0, f"class sizes {sizes}"),
    )
    return EqualityCertificate("th1", clauses, tol)


def _spectral_clauses(g: Graph, r: int, degree_target, low_target, mid_target, mid_squared, tol):
    ev = g.eigenvalues()
    n = g.n
    deg = g.degrees()
    if degree_target is None:
        res_i = float(deg.max() - deg.min())
    else:
        res_i = float(np.max(np.abs(deg - degree_target)))
    low = ev[n - r + 1:]  # the r-1 smallest
    res_ii = float(np.max(np.abs(low - low_target))) if len(low) else 0.0
    mid = ev[1:n - r + 1]  # lambda_2 .. lambda_{n-r+1}
    if len(mid) == 0:
        res_iii = 0.0
    elif mid_squared:
        res_iii = float(np.max(np.abs(mid ** 2 - mid_target)))
    else:
        res_iii = float(np.max(np.abs(np.abs(mid) - mid_target)))
    return (
        Clause("i", res_i <= tol, res_i, "regular" if degree_target is None else f"degree {degree_target:.9g}"),
        Clause("ii", res_ii <= tol, res_ii, f"r-1 smallest eigenvalues = {low_target:.9g}"),
        Clause("iii", res_iii <= tol, res_iii,
               ("lambda_i^2 = " if mid_squared else "|lambda_i| = ") + f"{mid_target:.9g}"),
    )


def check_equality_thum(g: Graph, r: int, tol: float = EQUALITY_TOL) -> EqualityCertificate:
    """Clauses (i)-(iii) for equality in the edge-count bound; the premise is reported apart."""
    n, m = g.n, g.m
    if not (n > r > 2):
        raise DomainError(f"need n > r > 2, got n={n}, r={r}")
    low = -2 * m / ((r - 1) * n)
    mid = (2 * m - r / (r - 1) * (2 * m / n) ** 2) / (n - r)
    clauses = _spectral_clauses(g, r, None, low, mid, True, tol)
    return EqualityCertificate("thum", clauses, tol, premise=2 * m >= r * r * n,
                               notes={"m": m, "bound": bom_bound(n, r, m).value})


def check_equality_thun(g: Graph, r: int, tol: float = EQUALITY_TOL) -> EqualityCertificate:
    """Clauses (i)-(iii) for equality in the edge-count free bound."""
    n = g.n
    if r < 2 or n <= r:
        raise DomainError(f"need r >= 2 and n > r, got n={n}, r={r}")
    s = _bon_root(n, r)
    degree = (1 + 2 / s) * (r - 1) * n / (2 * r)
    low = -(1 + 2 / s) * n / (2 * r)
    mid = n / (2 * s)
    clauses = _spectral_clauses(g, r, degree, low, mid, False, tol)
    return EqualityCertificate("thun", clauses, tol, premise=n >= 4 * (r - 1) ** 2,
                               notes={"bound": bon_bound(n, r).value})
