"""
Exact lattice linear algebra over Z.

Everything goes through one unimodular reduction (U * B * V = D, D diagonal with d_1 | d_2 | ...),
which yields kernels, invariant factors and integer solutions with their transforms.
"""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np
from dataclasses import dataclass

from skew_infra.algebra.integer_matrix import IntegerMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithDecomposition:
    D: IntegerMatrix
    U: IntegerMatrix
    V: IntegerMatrix
    rank: int

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.D[t, t] for t in range(min(self.D.shape)))


def _identity(n: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _swap_rows(s, u, a, b):
    if a != b:
        s[a], s[b] = s[b], s[a]
        u[a], u[b] = u[b], u[a]


def _swap_cols(s, v, a, b):
    if a != b:
        for row in s:
            row[a], row[b] = row[b], row[a]
        for row in v:
            row[a], row[b] = row[b], row[a]


def _add_row(s, u, target, source, factor):
    """row[target] += factor * row[source]"""
    for mat in (s, u):
        mat[target] = [x + factor * y for x, y in zip(mat[target], mat[source])]


def _add_col(s, v, target, source, factor):
    """col[target] += factor * col[source]"""
    for mat in (s, v):
        for row in mat:
            row[target] += factor * row[source]


def _min_nonzero(s, t: int) -> Optional[Tuple[int, int]]:
    best = None
    for i in range(t, len(s)):
        for j in range(t, len(s[i])):
            if s[i][j] and (best is None or abs(s[i][j]) < abs(s[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_decomposition(matrix: IntegerMatrix) -> SmithDecomposition:
    rows, cols = matrix.shape
    s = matrix.tolist()
    u = _identity(rows)
    v = _identity(cols)
    rank = 0

    for t in range(min(rows, cols)):
        pivot = _min_nonzero(s, t)
        if pivot is None:
            break
        _swap_rows(s, u, t, pivot[0])
        _swap_cols(s, v, t, pivot[1])

        while True:
            p = s[t][t]
            for i in range(t + 1, rows):
                q = s[i][t] // p
                if q:
                    _add_row(s, u, i, t, -q)
            for j in range(t + 1, cols):
                q = s[t][j] // p
                if q:
                    _add_col(s, v, j, t, -q)

            remainders = [(abs(s[i][t]), i, None) for i in range(t + 1, rows) if s[i][t]]
            remainders += [(abs(s[t][j]), None, j) for j in range(t + 1, cols) if s[t][j]]
            if remainders:
                _, i, j = min(remainders, key=lambda item: item[0])
                if i is not None:
                    _swap_rows(s, u, t, i)
                else:
                    _swap_cols(s, v, t, j)
                continue

            blocker = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if s[i][j] % p), None
            )
            if blocker is None:
                break
            _add_row(s, u, t, blocker[0], 1)

        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        rank += 1

    return SmithDecomposition(
        D=IntegerMatrix(s, ncols=cols),
        U=IntegerMatrix(u, ncols=rows),
        V=IntegerMatrix(v, ncols=cols),
        rank=rank,
    )


def _canonical_sign(vector: Sequence[int]) -> Tuple[int, ...]:
    lead = next((x for x in vector if x), 0)
    return tuple(-x for x in vector) if lead < 0 else tuple(vector)


def integer_kernel(matrix: IntegerMatrix) -> List[Tuple[int, ...]]:
    """Lattice basis of {v in Z^n : B v = 0}; empty when the kernel is trivial"""
    smith = smith_decomposition(matrix)
    return [_canonical_sign(smith.V.column(j)) for j in range(smith.rank, matrix.ncols)]


def invariant_factors(matrix: IntegerMatrix) -> Tuple[int, ...]:
    return smith_decomposition(matrix).diagonal


def solve_integer(matrix: IntegerMatrix, rhs: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """An integer solution x of B x = rhs, or None when rhs is outside the column lattice of B"""
    rows, cols = matrix.shape
    smith = smith_decomposition(matrix)
    transformed = smith.U @ rhs
    y = [0] * cols
    for t in range(rows):
        d = smith.D[t, t] if t < min(rows, cols) else 0
        if d == 0:
            if transformed[t]:
                return None
            continue
        if transformed[t] % d:
            return None
        y[t] = transformed[t] // d
    return smith.V @ y


def lattice_contains(generators: Sequence[Sequence[int]], vector: Sequence[int]) -> bool:
    m = len(vector)
    if not generators:
        return not any(vector)
    return solve_integer(IntegerMatrix.from_columns(generators, m), vector) is not None


def spans_full_lattice(rows: Sequence[Sequence[int]], m: int) -> bool:
    """True iff the given vectors of Z^m generate Z^m"""
    if m == 0:
        return True
    if not rows:
        return False
    factors = invariant_factors(IntegerMatrix(rows, ncols=m))
    return len(factors) == m and all(f == 1 for f in factors)


def smallest_positive_power(matrix: IntegerMatrix, bound: int) -> Optional[int]:
    """Smallest n <= bound with matrix**n strictly positive (None for non-primitive patterns)"""
    pattern = np.array([[x > 0 for x in row] for row in matrix.tolist()], dtype=bool)
    power = pattern.copy()
    for n in range(1, bound + 1):
        if power.all():
            return n
        power = (power.astype(np.int64) @ pattern.astype(np.int64)) > 0
    logger.debug("No positive power up to %d for pattern %s", bound, pattern.astype(int).tolist())
    return None
