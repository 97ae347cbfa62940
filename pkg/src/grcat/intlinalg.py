"""Exact integer linear algebra: Smith normal form and linear systems over Q/Z.

Matrices are plain lists of lists of Python ints, so every pivot is computed
in arbitrary precision.  The sizes here stay at desk scale (a few hundred
rows), which is all the coboundary systems ever need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .roots import Root, canonical_root


def _identity(k):
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def matmul(a, b):
    """Exact product of two integer (or fraction) matrices."""
    rows_a = len(a)
    cols_a = len(a[0]) if rows_a else 0
    cols_b = len(b[0]) if b else 0
    assert cols_a == len(b)
    out = []
    for i in range(rows_a):
        ai = a[i]
        row = []
        for j in range(cols_b):
            s = 0
            for k in range(cols_a):
                aik = ai[k]
                if aik:
                    s += aik * b[k][j]
            row.append(s)
        out.append(row)
    return out


@dataclass
class SmithDecomposition:
    """u * m * v = d with u, v unimodular and d diagonal, d_1 | d_2 | ..."""

    u: list
    d: list
    v: list

    @property
    def diagonal(self):
        rows = len(self.d)
        cols = len(self.d[0]) if rows else 0
        return [self.d[i][i] for i in range(min(rows, cols))]


def smith_normal_form(mat, check=True):
    """Compute the Smith normal form of an integer matrix.

    Args:
        mat: list of equal-length rows of ints (may be empty).
        check: re-multiply u*mat*v and compare against d before returning.

    Returns:
        SmithDecomposition with non-negative diagonal entries forming a
        divisibility chain.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    d = [list(row) for row in mat]
    for row in d:
        if len(row) != n:
            raise ValueError("ragged matrix")
    u = _identity(m)
    v = _identity(n)

    def swap_rows(r1, r2):
        d[r1], d[r2] = d[r2], d[r1]
        u[r1], u[r2] = u[r2], u[r1]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        drow, srow = d[dst], d[src]
        for j in range(n):
            if srow[j]:
                drow[j] += c * srow[j]
        urow_d, urow_s = u[dst], u[src]
        for j in range(m):
            if urow_s[j]:
                urow_d[j] += c * urow_s[j]

    def swap_cols(c1, c2):
        for row in d:
            row[c1], row[c2] = row[c2], row[c1]
        for row in v:
            row[c1], row[c2] = row[c2], row[c1]

    def add_col(dst, src, c):
        # col_dst += c * col_src
        for row in d:
            if row[src]:
                row[dst] += c * row[src]
        for row in v:
            if row[src]:
                row[dst] += c * row[src]

    for k in range(min(m, n)):
        while True:
            # smallest nonzero entry of the trailing submatrix becomes the pivot
            best = None
            for i in range(k, m):
                row = d[i]
                for j in range(k, n):
                    e = row[j]
                    if e and (best is None or abs(e) < best[0]):
                        best = (abs(e), i, j)
            if best is None:
                break
            _, bi, bj = best
            if bi != k:
                swap_rows(k, bi)
            if bj != k:
                swap_cols(k, bj)
            pivot = d[k][k]

            dirty = False
            for i in range(k + 1, m):
                if d[i][k]:
                    q = d[i][k] // pivot
                    if q:
                        add_row(i, k, -q)
                    if d[i][k]:
                        dirty = True
            if dirty:
                continue
            for j in range(k + 1, n):
                if d[k][j]:
                    q = d[k][j] // pivot
                    if q:
                        add_col(j, k, -q)
                    if d[k][j]:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the whole remaining block for the chain property
            stray = None
            for i in range(k + 1, m):
                row = d[i]
                for j in range(k + 1, n):
                    if row[j] % pivot:
                        stray = i
                        break
                if stray is not None:
                    break
            if stray is None:
                break
            add_row(k, stray, 1)

        if k < min(m, n) and d[k][k] < 0:
            for j in range(n):
                d[k][j] = -d[k][j]
            for j in range(m):
                u[k][j] = -u[k][j]

    if check:
        if matmul(matmul(u, mat if m else []), v) != d:
            raise AssertionError("smith normal form verification failed")
    return SmithDecomposition(u, d, v)


def left_kernel(mat):
    """Basis (as rows) of {x : x * mat = 0}, read off the zero rows of the SNF."""
    snf = smith_normal_form(mat)
    m = len(mat)
    n = len(mat[0]) if m else 0
    rows = []
    for i in range(m):
        di = snf.d[i][i] if i < n else 0
        if di == 0:
            rows.append(list(snf.u[i]))
    return rows


def solve_with_snf(snf, v):
    """Solve mat*x = v over Q/Z given a precomputed decomposition of mat.

    v is a sequence of Root; returns a list of Root or None when unsolvable.
    With u*mat*v' = d the system becomes d*y = u*v, solved per diagonal entry.
    """
    m = len(snf.u)
    n = len(snf.v)
    if len(v) != m:
        raise ValueError(f"expected {m} right-hand entries, got {len(v)}")
    w = []
    for i in range(m):
        s = Fraction(0)
        ui = snf.u[i]
        for j in range(m):
            if ui[j]:
                s += ui[j] * v[j].exponent
        w.append(Root(s))
    y = []
    for i in range(n):
        di = snf.d[i][i] if i < m else 0
        if di:
            y.append(canonical_root(w[i], di))
        else:
            if i < m and not w[i].is_one():
                return None
            y.append(Root.one())
    for i in range(n, m):
        if not w[i].is_one():
            return None
    x = []
    for i in range(n):
        s = Fraction(0)
        vi = snf.v[i]
        for j in range(n):
            if vi[j]:
                s += vi[j] * y[j].exponent
        x.append(Root(s))
    return x


def solve_mod1(mat, v):
    """Find x with mat*x = v in Q/Z (entries as Root); None when unsolvable."""
    return solve_with_snf(smith_normal_form(mat), v)
