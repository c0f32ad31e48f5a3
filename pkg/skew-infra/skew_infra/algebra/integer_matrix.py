from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from skew_infra.errors import DimensionMismatchError


class IntegerMatrix:
    """
    Immutable rectangular matrix over Z with arbitrary-precision entries.
    Indices are 0-based; domain labels (towers, letters) are translated by the callers.
    """

    __slots__ = ("_matrix",)

    def __init__(self, rows: Iterable[Iterable[int]], ncols: Optional[int] = None):
        rows = [list(row) for row in rows]
        if ncols is None:
            if not rows:
                raise ValueError("An empty matrix needs an explicit column count")
            ncols = len(rows[0])
        for row in rows:
            if len(row) != ncols:
                raise DimensionMismatchError(ncols, len(row), "row length")
        flat = [_as_int(x) for row in rows for x in row]
        self._matrix = sympy.ImmutableMatrix(len(rows), ncols, flat)

    @classmethod
    def _wrap(cls, matrix: sympy.ImmutableMatrix) -> "IntegerMatrix":
        obj = cls.__new__(cls)
        obj._matrix = sympy.ImmutableMatrix(matrix)
        return obj

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls._wrap(sympy.ImmutableMatrix(sympy.eye(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntegerMatrix":
        return cls._wrap(sympy.ImmutableMatrix(sympy.zeros(nrows, ncols)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> "IntegerMatrix":
        return cls(
            [[column[i] for column in columns] for i in range(nrows)], ncols=len(columns)
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return tuple(self._matrix.shape)

    @property
    def nrows(self) -> int:
        return self._matrix.shape[0]

    @property
    def ncols(self) -> int:
        return self._matrix.shape[1]

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return int(self._matrix[i, j])

    def row(self, i: int) -> Tuple[int, ...]:
        return tuple(int(x) for x in self._matrix.row(i))

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(int(x) for x in self._matrix.col(j))

    def tolist(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self._matrix.tolist()]

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self._matrix)

    def to_numpy(self, dtype=float) -> np.ndarray:
        return np.array(self.tolist(), dtype=dtype).reshape(self.shape)

    @property
    def T(self) -> "IntegerMatrix":
        return self._wrap(self._matrix.T)

    def __matmul__(self, other: Union["IntegerMatrix", Sequence[int]]):
        if isinstance(other, IntegerMatrix):
            if self.ncols != other.nrows:
                raise DimensionMismatchError(self.ncols, other.nrows, "inner dimension")
            return self._wrap(self._matrix * other._matrix)
        vector = list(other)
        if len(vector) != self.ncols:
            raise DimensionMismatchError(self.ncols, len(vector), "vector length")
        return tuple(sum(self[i, j] * _as_int(vector[j]) for j in range(self.ncols)) for i in range(self.nrows))

    def __add__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.shape != other.shape:
            raise DimensionMismatchError(self.shape, other.shape, "shape")
        return self._wrap(self._matrix + other._matrix)

    def __sub__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.shape != other.shape:
            raise DimensionMismatchError(self.shape, other.shape, "shape")
        return self._wrap(self._matrix - other._matrix)

    def __neg__(self) -> "IntegerMatrix":
        return self._wrap(-self._matrix)

    def __pow__(self, k: int) -> "IntegerMatrix":
        if self.nrows != self.ncols:
            raise DimensionMismatchError(self.nrows, self.ncols, "square shape")
        if k < 0:
            raise ValueError(f"Negative power {k} of an integer matrix")
        return self._wrap(self._matrix ** k)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_positive(self) -> bool:
        return all(int(x) > 0 for x in self._matrix)

    def is_nonnegative(self) -> bool:
        return all(int(x) >= 0 for x in self._matrix)

    def column_sums(self) -> Tuple[int, ...]:
        return tuple(sum(self.column(j)) for j in range(self.ncols))

    def determinant(self) -> int:
        return int(self._matrix.det())

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and self._matrix == other._matrix

    def __hash__(self):
        return hash((self.shape, tuple(self._matrix)))

    def __repr__(self):
        return f"IntegerMatrix({self.tolist()})"


def _as_int(value) -> int:
    if isinstance(value, (float, np.floating)):
        if float(value) != int(value):
            raise TypeError(f"Non-integral matrix entry {value!r}")
    return int(value)
