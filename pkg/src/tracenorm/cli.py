"""Command-line front end.

Exit codes: 0 success or pass, 1 a verified claim is false, 2 usage, format
or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import math
import os
import sys

import numpy as np

from . import bounds, linalg, matrices, partite, search
from .errors import TraceNormError
from .io import MatrixFile, read_matrix, write_matrix

CSV_COLUMNS = ("n", "r", "max_trace_norm", "witness_hex", "eab_bound",
               "bom_applicable", "bon_value", "bon_applicable")
CONSTRUCT_FAMILIES = ("conference", "hadamard1", "hadamard2", "sylvester", "fourier",
                      "th3", "th4", "multipartite", "complete", "cycle")
CLAIMS = ("hadamard", "conference", "partite", "equality-th1", "equality-thum", "equality-thun")


class UsageError(Exception):
    pass


def _env_int(name, default):
    v = os.environ.get(name)
    return int(v) if v not in (None, "") else default


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, float) and math.isnan(x):
        return "-"
    if isinstance(x, (float, np.floating)):
        return f"{x:.6f}"
    return str(x)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for this family")


def _construct(args):
    """Return (MatrixFile, theoretical trace norm or None)."""
    fam = args.family
    k = 0 if args.sylvester is None else args.sylvester
    if fam == "conference":
        _need(args, "q")
        c = matrices.paley_conference(args.q)
        return MatrixFile(c.matrix, family=f"paley_conference q={args.q}"), c.order * math.sqrt(args.q)
    if fam == "hadamard1":
        _need(args, "q")
        h = matrices.paley_hadamard_I(args.q)
        return MatrixFile(h.matrix, family=f"paley1_hadamard q={args.q}"), h.order ** 1.5
    if fam == "hadamard2":
        _need(args, "q")
        h = matrices.paley_hadamard_II(args.q)
        return MatrixFile(h.matrix, family=f"paley2_hadamard q={args.q}"), h.order ** 1.5
    if fam == "sylvester":
        h = matrices.sylvester(k)
        return MatrixFile(h.matrix, family=f"sylvester k={k}"), h.order ** 1.5
    if fam == "fourier":
        _need(args, "n")
        f = matrices.fourier_complex_hadamard(args.n)
        return MatrixFile(f.matrix, family=f"fourier n={args.n}"), args.n ** 1.5
    if fam == "th3":
        _need(args, "q")
        pm = partite.construct_th3(matrices.paley_conference(args.q), matrices.sylvester(k))
        return (MatrixFile(pm.matrix, pm.partition, f"th3 q={args.q} k={k}"),
                bounds.mb_bound(pm.n, pm.r))
    if fam == "th4":
        _need(args, "q")
        g = partite.construct_th4(matrices.paley_conference(args.q), matrices.sylvester(k))
        n, r = g.n, g.partition.r
        lower = n ** 1.5 / 2 * math.sqrt(1 - 1 / r) - (1 - 1 / r) * n
        return MatrixFile(g.adjacency, g.partition, f"th4 q={args.q} k={k}"), lower
    if fam == "multipartite":
        _need(args, "sizes")
        sizes = [int(s) for s in args.sizes.split(",")]
        g = partite.complete_multipartite(sizes)
        return MatrixFile(g.adjacency, g.partition, f"complete_multipartite {args.sizes}"), None
    if fam == "complete":
        _need(args, "n")
        g = partite.complete_multipartite([1] * args.n)
        return MatrixFile(g.adjacency, g.partition, f"complete n={args.n}"), 2.0 * (args.n - 1)
    if fam == "cycle":
        _need(args, "n")
        a = np.zeros((args.n, args.n), dtype=np.int64)
        for i in range(args.n):
            a[i, (i + 1) % args.n] = a[(i + 1) % args.n, i] = 1
        return MatrixFile(a, family=f"cycle n={args.n}"), None
    raise UsageError(f"unknown family {fam}")


def cmd_construct(args, out):
    mf, theory = _construct(args)
    if args.out:
        write_matrix(args.out, mf)
    tn = linalg.trace_norm(mf.matrix)
    print(f"family        {mf.family}", file=out)
    print(f"order         {mf.order}", file=out)
    print(f"trace norm    {tn:.6f}", file=out)
    if theory is not None:
        label = "lower bound" if args.family == "th4" else "theory"
        print(f"{label:<13} {theory:.6f}", file=out)
    if args.out:
        print(f"wrote         {args.out}", file=out)
    return 0


def bound_rows(n, r, m=None):
    return bounds.all_bounds(n, r, m)


def cmd_bounds(args, out):
    reports = bound_rows(args.n, args.r, args.m)
    if args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(("name", "value", "applicable", "note"))
        for b in reports:
            w.writerow((b.name, repr(b.value), int(b.applicable), b.precondition_note))
        return 0
    head = f"n={args.n} r={args.r}" + ("" if args.m is None else f" m={args.m}")
    print(head, file=out)
    print(f"{'bound':<7}{'value':>16}  applicable  note", file=out)
    for b in reports:
        print(f"{b.name:<7}{_fmt(b.value):>16}  {_fmt(b.applicable):<10}  {b.precondition_note}", file=out)
    return 0


def _print_cert(cert, out):
    for c in cert.clauses:
        print(f"  clause {c.name:<4} {'pass' if c.holds else 'FAIL'}  residual={c.residual:.3e}  {c.detail}",
              file=out)
    if cert.premise is not None:
        print(f"  premise      {'true' if cert.premise else 'false'}", file=out)
    print(f"  tolerance    {cert.tolerance:g}", file=out)


def _graph_of(mf: MatrixFile):
    return partite.Graph(np.rint(np.real(mf.matrix)).astype(np.int64)
                         if linalg.is_real(mf.matrix) else mf.matrix)


def cmd_verify(args, out):
    mf = read_matrix(args.path)
    m = mf.matrix
    claim = args.claim
    if claim == "hadamard":
        ok = matrices.is_hadamard(m)
        print(f"hadamard: {'pass' if ok else 'FAIL'}", file=out)
    elif claim == "conference":
        ok = matrices.is_conference(m)
        print(f"conference: {'pass' if ok else 'FAIL'}", file=out)
    elif claim == "partite":
        if mf.partition is None:
            raise UsageError("file has no partition")
        try:
            partite.validate_partite(m, mf.partition)
            ok = True
            print(f"partite (r={mf.partition.r}): pass", file=out)
        except partite.NotPartite as e:
            ok = False
            print(f"partite: FAIL ({e})", file=out)
    elif claim == "equality-th1":
        if mf.partition is None:
            raise UsageError("file has no partition")
        cert = bounds.check_equality_th1(partite.PartiteMatrix(m, mf.partition), tol=args.tol)
        ok = cert.holds
        print(f"equality-th1: {'pass' if ok else 'FAIL'}", file=out)
        _print_cert(cert, out)
    else:
        if args.r is None:
            raise UsageError("--r is required")
        g = _graph_of(mf)
        check = bounds.check_equality_thum if claim == "equality-thum" else bounds.check_equality_thun
        cert = check(g, args.r, tol=args.tol)
        ok = cert.holds
        print(f"{claim}: {'pass' if ok else 'FAIL'} (n={g.n}, m={g.m}, r={args.r})", file=out)
        _print_cert(cert, out)
    return 0 if ok else 1


def search_csv(records) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for rec in records:
        n, r = rec.n, rec.r
        bom_ok = bounds.bom_bound(n, r, rec.m).applicable if n > r > 2 else False
        if n > r:
            bon = bounds.bon_bound(n, r)
            bon_value, bon_ok = repr(bon.value), int(bon.applicable)
        else:
            bon_value, bon_ok = "", 0
        w.writerow((n, r, repr(rec.max_value), rec.witness_hex, repr(bounds.eab_bound(n, r)),
                    int(bom_ok), bon_value, bon_ok))
    return buf.getvalue()


def cmd_search(args, out):
    threads = args.threads if args.threads is not None else _env_int("TRACENORM_THREADS", 1)
    records = search.max_trace_norm_graphs(args.n, args.rmax, threads=max(threads, 1),
                                           allow_big=args.allow_big)
    text = search_csv(records)
    if args.out:
        with open(args.out, "w", newline="") as f:
            f.write(text)
        print(f"wrote {len(records)} rows to {args.out}", file=out)
    else:
        out.write(text)
    return 0


def cmd_probe(args, out):
    seed = args.seed if args.seed is not None else _env_int("TRACENORM_SEED", 0)
    rec = search.random_partite_matrix_probe(args.n, args.r, args.trials, args.cls, seed=seed)
    print(f"class={rec.class_tag} n={rec.n} r={rec.r} trials={args.trials} seed={seed}", file=out)
    print(f"best trace norm  {rec.max_value:.6f}", file=out)
    print(f"best ratio       {rec.ratio:.6f}", file=out)
    print(f"ceiling          {math.sqrt(1 - 1 / rec.r):.6f}", file=out)
    return 0


def cmd_spectrum(args, out):
    mf = read_matrix(args.path)
    m = mf.matrix
    try:
        linalg.check_hermitian(m)
        hermitian = True
    except linalg.NotHermitian:
        hermitian = False
    sym = "hermitian" if hermitian else "not hermitian"
    if hermitian and linalg.is_real(m):
        sym = "symmetric"
    print(f"order       {mf.order}", file=out)
    print(f"symmetry    {sym}", file=out)
    if hermitian:
        ev = linalg.hermitian_eigenvalues(m).values
        print("eigenvalues " + " ".join(_fmt(float(x)) for x in ev), file=out)
    sv = linalg.singular_values(m).values
    print("singular    " + " ".join(_fmt(float(x)) for x in sv), file=out)
    print(f"trace norm  {float(sv.sum()):.6f}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tracenorm", description="Trace norms of r-partite matrices and graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a matrix or graph and write it as JSON")
    p.add_argument("family", choices=CONSTRUCT_FAMILIES)
    p.add_argument("--q", type=int)
    p.add_argument("--sylvester", type=int, help="exponent of the Sylvester Hadamard factor")
    p.add_argument("--n", type=int)
    p.add_argument("--sizes", help="comma-separated class sizes")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", help="evaluate every bound at (n, r[, m])")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="check a claim about a matrix file")
    p.add_argument("path")
    p.add_argument("claim", choices=CLAIMS)
    p.add_argument("--r", type=int)
    p.add_argument("--tol", type=float, default=bounds.EQUALITY_TOL)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive maximum trace norm of r-partite graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rmax", type=int)
    p.add_argument("--threads", type=int)
    p.add_argument("--seed", type=int, help="accepted for interface symmetry; the search is exhaustive")
    p.add_argument("--out")
    p.add_argument("--allow-big", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("probe", help="random search over one of the partite matrix classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=search.CLASS_TAGS, default="s")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("spectrum", help="print eigenvalues, singular values and trace norm")
    p.add_argument("path")
    p.set_defaults(func=cmd_spectrum)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (TraceNormError, UsageError, OSError, ValueError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
