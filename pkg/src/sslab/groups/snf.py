"""
Smith normal form over the integers, with transforms.

For an m x n integer matrix A, :func:`smith_normal_form` returns
unimodular U (m x m) and V (n x n) with ``U A V = D`` where D is
diagonal, non-negative, and each diagonal entry divides the next.
Entries are Python ints, so nothing overflows.
"""
from __future__ import annotations

from dataclasses import dataclass


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    if not A:
        return []
    cols = len(B[0]) if B else 0
    return [
        [sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(cols)]
        for i in range(len(A))
    ]


def determinant(A):
    """Exact integer determinant (Bareiss elimination)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True)
class IntMatrixSNF:
    U: tuple
    D: tuple
    V: tuple

    @property
    def diagonal(self):
        k = min(len(self.D), len(self.D[0]) if self.D else 0)
        return [self.D[i][i] for i in range(k)]

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)


def _swap_rows(M, i, j):
    M[i], M[j] = M[j], M[i]


def _swap_cols(M, i, j):
    for row in M:
        row[i], row[j] = row[j], row[i]


def _add_row(M, src, dst, k):
    # row dst += k * row src
    if k:
        rs, rd = M[src], M[dst]
        for c in range(len(rd)):
            rd[c] += k * rs[c]


def _add_col(M, src, dst, k):
    if k:
        for row in M:
            row[dst] += k * row[src]


def smith_normal_form(A) -> IntMatrixSNF:
    m = len(A)
    n = len(A[0]) if m else 0
    D = [[int(x) for x in row] for row in A]
    U = identity(m)
    V = identity(n)

    for t in range(min(m, n)):
        # smallest nonzero entry of the trailing block becomes the pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != t:
            _swap_rows(D, i, t)
            _swap_rows(U, i, t)
        if j != t:
            _swap_cols(D, j, t)
            _swap_cols(V, j, t)

        while True:
            piv = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    k = D[i][t] // piv
                    _add_row(D, t, i, -k)
                    _add_row(U, t, i, -k)
                    if D[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if D[t][j]:
                    k = D[t][j] // piv
                    _add_col(D, t, j, -k)
                    _add_col(V, t, j, -k)
                    if D[t][j]:
                        dirty = True
            if dirty:
                # a remainder survived; move the smallest one into the pivot
                cands = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
                cands += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
                _, i, j = min(cands)
                if i != t:
                    _swap_rows(D, i, t)
                    _swap_rows(U, i, t)
                else:
                    _swap_cols(D, j, t)
                    _swap_cols(V, j, t)
                continue
            # row and column are clear; enforce divisibility on the block
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            _add_row(D, bad, t, 1)
            _add_row(U, bad, t, 1)

        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]

    return IntMatrixSNF(
        tuple(map(tuple, U)), tuple(map(tuple, D)), tuple(map(tuple, V))
    )


def invariant_factors(A):
    """Nonzero diagonal entries of the Smith form, in divisibility order."""
    return [d for d in smith_normal_form(A).diagonal if d != 0]


def is_smith_normal_form(D):
    m = len(D)
    n = len(D[0]) if m else 0
    for i in range(m):
        for j in range(n):
            if i != j and D[i][j]:
                return False
    diag = [D[i][i] for i in range(min(m, n))]
    if any(d < 0 for d in diag):
        return False
    for a, b in zip(diag, diag[1:]):
        if a == 0 and b != 0:
            return False
        if a and b % a:
            return False
    return True
