"""Matrix file reading and writing.

JSON layout::

    {"order": n, "dtype": "real" | "complex", "rows": [[...], ...],
     "partition": [c_0, ..., c_{n-1}], "family": "..."}

Complex entries are ``[re, im]`` pairs. Integral real matrices are written
as JSON integers so exact checks survive a round trip; floats use Python's
shortest round-trip repr. A whitespace-separated grid of real numbers is
accepted on input as a convenience.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import FormatError
from .partite import Partition


@dataclass
class MatrixFile:
    matrix: np.ndarray
    partition: Partition | None = None
    family: str | None = None

    @property
    def order(self) -> int:
        return self.matrix.shape[0]

    @property
    def dtype(self) -> str:
        return "complex" if np.iscomplexobj(self.matrix) and np.any(self.matrix.imag) else "real"


def _num(x):
    x = float(x)
    return int(x) if x.is_integer() and abs(x) < 2 ** 53 else x


def to_dict(mf: MatrixFile) -> dict:
    m = np.asarray(mf.matrix)
    if mf.dtype == "complex":
        rows = [[[_num(z.real), _num(z.imag)] for z in row] for row in m]
    else:
        rows = [[_num(x) for x in row] for row in np.real(m)]
    d = {"order": mf.order, "dtype": mf.dtype, "rows": rows}
    if mf.partition is not None:
        d["partition"] = list(mf.partition.labels)
    if mf.family:
        d["family"] = mf.family
    return d


def write_matrix(path, mf: MatrixFile) -> None:
    Path(path).write_text(json.dumps(to_dict(mf)) + "\n")


def _entry_ok(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def from_dict(d) -> MatrixFile:
    if not isinstance(d, dict):
        raise FormatError("top level must be an object")
    try:
        n, dtype, rows = d["order"], d.get("dtype", "real"), d["rows"]
    except KeyError as e:
        raise FormatError(f"missing field {e}") from None
    if not isinstance(n, int) or n < 0:
        raise FormatError("order must be a non-negative integer")
    if dtype not in ("real", "complex"):
        raise FormatError(f"unknown dtype {dtype!r}")
    if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise FormatError(f"rows must be an {n}x{n} array")
    if dtype == "real":
        if not all(_entry_ok(x) for r in rows for x in r):
            raise FormatError("real entries must be numbers")
        ints = all(isinstance(x, int) for r in rows for x in r)
        m = np.array(rows, dtype=np.int64 if ints else np.float64).reshape(n, n)
    else:
        if not all(isinstance(z, list) and len(z) == 2 and all(_entry_ok(x) for x in z) for r in rows for z in r):
            raise FormatError("complex entries must be [re, im] pairs")
        m = np.array([[complex(z[0], z[1]) for z in r] for r in rows], dtype=np.complex128).reshape(n, n)
    part = None
    if d.get("partition") is not None:
        labels = d["partition"]
        if not isinstance(labels, list) or len(labels) != n or not all(isinstance(x, int) and x >= 0 for x in labels):
            raise FormatError("partition must list one non-negative integer label per index")
        part = Partition.from_labels(labels)
    return MatrixFile(m, part, d.get("family"))


def read_grid(text: str) -> MatrixFile:
    try:
        rows = [[float(x) for x in line.split()] for line in text.splitlines() if line.strip()]
    except ValueError as e:
        raise FormatError(f"bad grid entry: {e}") from None
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise FormatError("grid is not square")
    m = np.array(rows)
    if np.all(m == np.round(m)):
        m = m.astype(np.int64)
    return MatrixFile(m)


def read_matrix(path) -> MatrixFile:
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            d = json.loads(text)
        except json.JSONDecodeError as e:
            raise FormatError(f"invalid JSON: {e}") from None
        return from_dict(d)
    return read_grid(text)
