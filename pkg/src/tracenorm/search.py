"""Exhaustive search over small labeled graphs, random partite-matrix probes, records.

Labeled graphs on n vertices are indexed by integers: bit b of the index is
the edge for pair number b, pairs (i, j) with i < j numbered row by row.
"""

from __future__ import annotations

import json
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache

import numpy as np

from . import linalg
from .bounds import eab_bound, km_bound
from .errors import DomainError, IndexOutOfRange, OrderCap
from .partite import Graph, Partition

log = logging.getLogger(__name__)

SUPPORTED_ORDER = 7
HARD_ORDER_CAP = 8
CHROMATIC_CAP = 16
PROBE_CAP = 64
CHUNK = 8192
CLASS_TAGS = ("s", "r", "h", "c")


def pair_index(i: int, j: int, n: int) -> int:
    if i > j:
        i, j = j, i
    return i * n - i * (i + 1) // 2 + (j - i - 1)


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple:
    """All pairs (i, j), i < j, in index order."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def graph_from_index(n: int, idx: int) -> Graph:
    if n < 0 or not 0 <= idx < graph_count(n):
        raise IndexOutOfRange(f"index {idx} out of range for order {n}")
    adj = np.zeros((n, n), dtype=np.int64)
    for b, (i, j) in enumerate(pairs(n)):
        if idx >> b & 1:
            adj[i, j] = adj[j, i] = 1
    return Graph(adj)


def index_of_graph(g: Graph) -> int:
    a = g.adjacency
    return sum(1 << b for b, (i, j) in enumerate(pairs(g.n)) if a[i, j])


def adjacency_batch(n: int, idx: np.ndarray) -> np.ndarray:
    """Adjacency matrices (float64) for an array of graph indices."""
    idx = np.asarray(idx, dtype=np.int64)
    adj = np.zeros((len(idx), n, n))
    pr = pairs(n)
    if pr:
        bits = (idx[:, None] >> np.arange(len(pr), dtype=np.int64)) & 1
        ii = np.array([p[0] for p in pr])
        jj = np.array([p[1] for p in pr])
        adj[:, ii, jj] = bits
        adj[:, jj, ii] = bits
    return adj


# -- chromatic number ---------------------------------------------------------

def _greedy_clique(adj, order):
    best = []
    for start in order:
        clique = [start]
        for v in order:
            if v != start and all(adj[v][u] for u in clique):
                clique.append(v)
        if len(clique) > len(best):
            best = clique
    return best


def _colorable(adj, order, k, fixed):
    n = len(order)
    colors = [-1] * len(adj)
    for pos, v in enumerate(fixed):
        colors[v] = pos

    def place(pos, used):
        if pos == n:
            return True
        v = order[pos]
        if colors[v] >= 0:
            return place(pos + 1, used)
        forbidden = {colors[u] for u in range(len(adj)) if adj[v][u] and colors[u] >= 0}
        # new colors are interchangeable; try only the first unused one
        for c in range(min(used + 1, k)):
            if c not in forbidden:
                colors[v] = c
                if place(pos + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
        return False

    return place(0, len(fixed))


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by backtracking between a clique and a greedy bound."""
    n = g.n
    if n > CHROMATIC_CAP:
        raise OrderCap(f"chromatic number limited to order {CHROMATIC_CAP}")
    if n == 0:
        return 0
    adj = g.adjacency.tolist()
    deg = [sum(row) for row in adj]
    order = sorted(range(n), key=lambda v: -deg[v])

    greedy = [-1] * n
    for v in order:
        taken = {greedy[u] for u in range(n) if adj[v][u]}
        greedy[v] = next(c for c in range(n) if c not in taken)
    upper = max(greedy) + 1

    clique = _greedy_clique(adj, order)
    rest = [v for v in order if v not in clique]
    for k in range(max(len(clique), 1), upper):
        if _colorable(adj, clique + rest, k, clique):
            return k
    return upper


@lru_cache(maxsize=None)
def _partition_masks(n: int) -> dict:
    """For each block count k, the same-block pair masks of all set partitions of [n]."""
    out: dict[int, list[int]] = {}

    def rec(labels, blocks):
        if len(labels) == n:
            mask = 0
            for b, (i, j) in enumerate(pairs(n)):
                if labels[i] == labels[j]:
                    mask |= 1 << b
            out.setdefault(blocks, []).append(mask)
            return
        for c in range(blocks + 1):
            rec(labels + [c], max(blocks, c + 1))

    if n:
        rec([], 0)
    return {k: np.array(v, dtype=np.int64) for k, v in out.items()}


def chromatic_numbers_batch(n: int, idx: np.ndarray) -> np.ndarray:
    """Chromatic numbers of many indexed graphs at once.

    A graph is k-colorable iff it has no edge inside the blocks of some set
    partition into exactly k blocks.
    """
    idx = np.asarray(idx, dtype=np.int64)
    chi = np.full(len(idx), n, dtype=np.int64)
    if n == 0:
        return chi
    undecided = np.ones(len(idx), dtype=bool)
    masks = _partition_masks(n)
    for k in range(1, n):
        sub = idx[undecided]
        ok = np.zeros(len(sub), dtype=bool)
        for mask in masks[k]:
            ok |= (sub & mask) == 0
        where = np.flatnonzero(undecided)[ok]
        chi[where] = k
        undecided[where] = False
        if not undecided.any():
            break
    return chi


# -- exhaustive search ------------------------------------------------------------

@dataclass(frozen=True)
class SearchRecord:
    n: int
    r: int
    max_value: float
    witness: int | None
    class_tag: str = "s"
    kind: str = "graph"  # graph | matrix
    m: int | None = None
    matrix: np.ndarray | None = None
    seed: int | None = None

    @property
    def ratio(self) -> float:
        return self.max_value / self.n ** 1.5

    @property
    def witness_hex(self) -> str:
        return "" if self.witness is None else format(self.witness, "x")

    def graph(self) -> Graph:
        return graph_from_index(self.n, self.witness)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ratio"] = self.ratio
        if self.matrix is not None:
            m = self.matrix
            d["matrix"] = [[[float(z.real), float(z.imag)] for z in row] for row in m] \
                if np.iscomplexobj(m) else m.tolist()
        return d


def _scan_chunk(n: int, start: int, stop: int):
    """Best (value, idx) per chromatic number for indices in [start, stop)."""
    idx = np.arange(start, stop, dtype=np.int64)
    adj = adjacency_batch(n, idx)
    norms = np.abs(linalg.eigenvalues_batch(adj)).sum(axis=1) if n else np.zeros(len(idx))
    chi = chromatic_numbers_batch(n, idx)
    best = {}
    for c in np.unique(chi):
        sel = chi == c
        vals = norms[sel]
        top = vals.max()
        # first occurrence is the smallest index because idx is increasing
        best[int(c)] = (float(top), int(idx[sel][np.argmax(vals == top)]))
    return best


def _merge(into: dict, part: dict) -> None:
    for c, (v, i) in part.items():
        if c not in into or v > into[c][0] or (v == into[c][0] and i < into[c][1]):
            into[c] = (v, i)


def max_trace_norm_graphs(n: int, r_max: int | None = None, threads: int = 1,
                          allow_big: bool = False, chunk: int = CHUNK) -> list[SearchRecord]:
    """Maximum trace norm over all r-colorable graphs of order n, for r = 2..r_max.

    One pass over every labeled graph; a graph with chromatic number chi
    competes in every record with r >= chi. Chunk boundaries are fixed by
    ``chunk`` alone, so the result does not depend on ``threads``.
    """
    if n > HARD_ORDER_CAP or (n > SUPPORTED_ORDER and not allow_big):
        raise OrderCap(f"exhaustive search supports n <= {SUPPORTED_ORDER}"
                       f" (n = {HARD_ORDER_CAP} needs allow_big)")
    if n < 2:
        raise DomainError("need n >= 2")
    if n > SUPPORTED_ORDER:
        log.warning("enumerating %d labeled graphs of order %d", graph_count(n), n)
    r_max = n if r_max is None else r_max
    if not 2 <= r_max <= n:
        raise DomainError(f"need 2 <= r_max <= n, got r_max={r_max}")

    total = graph_count(n)
    ranges = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
    best: dict = {}
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda rg: _scan_chunk(n, *rg), ranges))
    else:
        parts = [_scan_chunk(n, *rg) for rg in ranges]
    for part in parts:
        _merge(best, part)

    records = []
    running = None
    for r in range(1, r_max + 1):
        if r in best:
            cand = best[r]
            if running is None or cand[0] > running[0] or (cand[0] == running[0] and cand[1] < running[1]):
                running = cand
        if r >= 2:
            value, idx = running
            m = bin(idx).count("1")
            records.append(SearchRecord(n, r, value, idx, "s", "graph", m))
    return records


def check_record(rec: SearchRecord) -> None:
    """Raise AssertionError if a record breaks the bound it must satisfy."""
    if rec.kind == "graph":
        assert rec.max_value <= eab_bound(rec.n, rec.r) + 1e-9, rec
        if rec.r == rec.n:
            assert rec.max_value <= km_bound(rec.n) + 1e-9, rec
    else:
        assert rec.ratio <= math.sqrt(1 - 1 / rec.r) + 1e-9, rec


# -- random probes of the four matrix classes -------------------------------------

def random_partite_matrices(n: int, r: int, trials: int, class_tag: str, rng) -> np.ndarray:
    """Random r-partite matrices with unit-modulus entries off the diagonal blocks.

    Classes: ``s`` symmetric signs, ``r`` signs, ``h`` Hermitian unit complex,
    ``c`` unit complex. Partition is :meth:`Partition.near_equal`.
    """
    if class_tag not in CLASS_TAGS:
        raise ValueError(f"class tag must be one of {CLASS_TAGS}")
    outside = ~Partition.near_equal(n, r).same_class_mask()
    if class_tag in ("s", "r"):
        a = rng.choice(np.array([-1.0, 1.0]), size=(trials, n, n))
    else:
        a = np.exp(1j * rng.uniform(0.0, 2 * np.pi, size=(trials, n, n)))
    if class_tag in ("s", "h"):
        upper = np.triu(a, 1)
        a = upper + np.conj(np.swapaxes(upper, 1, 2))
    return a * outside


def random_partite_matrix_probe(n: int, r: int, trials: int, class_tag: str,
                                seed: int = 0, chunk: int = 1024) -> SearchRecord:
    """Best ``trace_norm / n^{3/2}`` among ``trials`` seeded random matrices."""
    if n > PROBE_CAP:
        raise OrderCap(f"probe limited to n <= {PROBE_CAP}")
    if not 2 <= r <= n:
        raise DomainError(f"need 2 <= r <= n, got n={n}, r={r}")
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = np.random.default_rng(seed)
    best_value, best_matrix = -1.0, None
    done = 0
    while done < trials:
        size = min(chunk, trials - done)
        mats = random_partite_matrices(n, r, size, class_tag, rng)
        norms = linalg.trace_norms(mats)
        i = int(np.argmax(norms))
        if norms[i] > best_value:
            best_value, best_matrix = float(norms[i]), mats[i]
        done += size
    return SearchRecord(n, r, best_value, None, class_tag, "matrix", matrix=best_matrix, seed=seed)


# -- best-known records per (class, k, n) -----------------------------------------

class RecordBook:
    """Best-known values of ``max ||A||_*`` per (class tag, k, n)."""

    def __init__(self):
        self.records: dict[tuple, SearchRecord] = {}

    def __len__(self):
        return len(self.records)

    def update(self, rec: SearchRecord) -> bool:
        key = (rec.class_tag, rec.r, rec.n)
        old = self.records.get(key)
        if old is None or rec.max_value > old.max_value:
            self.records[key] = rec
            return True
        return False

    def observe(self, matrix, partition: Partition, class_tag: str, source: str = "") -> bool:
        value = linalg.trace_norm(matrix)
        rec = SearchRecord(partition.n, partition.r, value, None, class_tag, "matrix",
                           matrix=np.asarray(matrix))
        return self.update(rec)

    def get(self, class_tag: str, k: int, n: int) -> SearchRecord | None:
        return self.records.get((class_tag, k, n))

    def best_ratio(self, class_tag: str, k: int) -> float:
        """Largest ratio seen for the class; a lower estimate of the class constant."""
        vals = [rec.ratio for (t, kk, _), rec in self.records.items() if t == class_tag and kk == k]
        return max(vals) if vals else math.nan

    def to_json(self) -> str:
        rows = [rec.to_dict() for _, rec in sorted(self.records.items())]
        for row in rows:
            row.pop("matrix", None)
        return json.dumps(rows, indent=2)
