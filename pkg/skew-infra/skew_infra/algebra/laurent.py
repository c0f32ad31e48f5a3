import math
from collections import defaultdict
from typing import Dict, Iterable, Mapping, Sequence, Tuple

import numpy as np
from frozendict import frozendict

from skew_infra.algebra.integer_matrix import IntegerMatrix
from skew_infra.errors import DimensionMismatchError, NonPositiveParameterError

Exponent = Tuple[int, ...]


class LaurentPolynomial:
    """Sparse integer Laurent polynomial in m variables, terms keyed by exponent tuples"""

    __slots__ = ("_terms", "_m")

    def __init__(self, terms: Mapping[Exponent, int], m: int):
        cleaned = {}
        for exponent, coefficient in terms.items():
            exponent = tuple(int(a) for a in exponent)
            if len(exponent) != m:
                raise DimensionMismatchError(m, len(exponent), "exponent dimension")
            if coefficient:
                cleaned[exponent] = int(coefficient)
        self._terms = frozendict(cleaned)
        self._m = m

    @classmethod
    def zero(cls, m: int) -> "LaurentPolynomial":
        return cls({}, m)

    @classmethod
    def one(cls, m: int) -> "LaurentPolynomial":
        return cls({(0,) * m: 1}, m)

    @classmethod
    def monomial(cls, exponent: Sequence[int], coefficient: int = 1) -> "LaurentPolynomial":
        return cls({tuple(exponent): coefficient}, len(exponent))

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return self._terms

    @property
    def m(self) -> int:
        return self._m

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponent: Sequence[int]) -> int:
        return self._terms.get(tuple(exponent), 0)

    def coefficient_sum(self) -> int:
        """Exact value at t = (1, ..., 1)"""
        return sum(self._terms.values())

    def max_exponent_norm(self) -> int:
        return max((max((abs(a) for a in e), default=0) for e in self._terms), default=0)

    def _check(self, other: "LaurentPolynomial"):
        if other.m != self.m:
            raise DimensionMismatchError(self.m, other.m, "exponent dimension")

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._check(other)
        acc = defaultdict(int, self._terms)
        for exponent, coefficient in other._terms.items():
            acc[exponent] += coefficient
        return LaurentPolynomial(acc, self._m)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._terms.items()}, self._m)

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial({e: other * c for e, c in self._terms.items()}, self._m)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return laurent_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        result = LaurentPolynomial.one(self._m)
        for _ in range(k):
            result = laurent_mul(result, self)
        return result

    def __call__(self, lam: Sequence[float]) -> float:
        return laurent_eval(self, lam)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._m == other._m and self._terms == other._terms

    def __hash__(self):
        return hash((self._m, self._terms))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for exponent, coefficient in sorted(self._terms.items()):
            monomial = "*".join(f"t{i + 1}^{a}" for i, a in enumerate(exponent) if a)
            parts.append(f"{coefficient}*{monomial}" if monomial else f"{coefficient}")
        return " + ".join(parts)


def laurent_mul(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    p._check(q)
    acc: Dict[Exponent, int] = defaultdict(int)
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
    return LaurentPolynomial(acc, p.m)


def _check_point(lam: Sequence[float], m: int):
    if len(lam) != m:
        raise DimensionMismatchError(m, len(lam), "evaluation point dimension")
    if any(not x > 0 for x in lam):
        raise NonPositiveParameterError(lam)


def laurent_eval(p: LaurentPolynomial, lam: Sequence[float]) -> float:
    _check_point(lam, p.m)
    return math.fsum(c * math.prod(x ** a for x, a in zip(lam, e)) for e, c in p.terms.items())


def laurent_sum(polynomials: Iterable[LaurentPolynomial], m: int) -> LaurentPolynomial:
    acc = defaultdict(int)
    for polynomial in polynomials:
        for exponent, coefficient in polynomial.terms.items():
            acc[exponent] += coefficient
    return LaurentPolynomial(acc, m)


class LaurentMatrix:
    """Square matrix of Laurent polynomials sharing one exponent dimension (0-based indices)"""

    __slots__ = ("_entries", "_m")

    def __init__(self, entries: Sequence[Sequence[LaurentPolynomial]], m: int):
        entries = tuple(tuple(row) for row in entries)
        for row in entries:
            if len(row) != len(entries):
                raise DimensionMismatchError(len(entries), len(row), "row length")
            for entry in row:
                if entry.m != m:
                    raise DimensionMismatchError(m, entry.m, "exponent dimension")
        self._entries = entries
        self._m = m

    @classmethod
    def identity(cls, d: int, m: int) -> "LaurentMatrix":
        one, zero = LaurentPolynomial.one(m), LaurentPolynomial.zero(m)
        return cls([[one if i == j else zero for j in range(d)] for i in range(d)], m)

    @property
    def d(self) -> int:
        return len(self._entries)

    @property
    def m(self) -> int:
        return self._m

    def __getitem__(self, index: Tuple[int, int]) -> LaurentPolynomial:
        i, j = index
        return self._entries[i][j]

    def rows(self) -> Tuple[Tuple[LaurentPolynomial, ...], ...]:
        return self._entries

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if other.d != self.d:
            raise DimensionMismatchError(self.d, other.d, "matrix size")
        if other.m != self.m:
            raise DimensionMismatchError(self.m, other.m, "exponent dimension")
        return LaurentMatrix(
            [
                [laurent_sum((laurent_mul(self[i, r], other[r, j]) for r in range(self.d)), self.m)
                 for j in range(self.d)]
                for i in range(self.d)
            ],
            self.m,
        )

    def coefficient(self, i: int, j: int, exponent: Sequence[int]) -> int:
        return self._entries[i][j].coefficient(exponent)

    def evaluate(self, lam: Sequence[float]) -> np.ndarray:
        _check_point(lam, self.m)
        return np.array([[laurent_eval(entry, lam) for entry in row] for row in self._entries], dtype=float)

    def at_ones(self) -> IntegerMatrix:
        return IntegerMatrix([[entry.coefficient_sum() for entry in row] for row in self._entries])

    def max_exponent_norm(self) -> int:
        return max(entry.max_exponent_norm() for row in self._entries for entry in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self._m == other._m and self._entries == other._entries

    def __hash__(self):
        return hash((self._m, self._entries))

    def __repr__(self):
        return f"LaurentMatrix(d={self.d}, m={self.m}, entries={[list(map(repr, row)) for row in self._entries]})"


def laurent_matrix_pow(matrix: LaurentMatrix, k: int) -> LaurentMatrix:
    if k < 0:
        raise ValueError(f"Negative power {k} of a Laurent matrix")
    result = LaurentMatrix.identity(matrix.d, matrix.m)
    for _ in range(k):
        result = result @ matrix
    return result
