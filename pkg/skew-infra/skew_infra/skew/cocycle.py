import logging
from typing import List, Optional, Sequence, Tuple

from dataclasses import dataclass

from skew_infra.algebra import (
    GroupElement,
    IntegerMatrix,
    group_sum,
    integer_kernel,
    invariant_factors,
    smith_decomposition,
    spans_full_lattice,
)
from skew_infra.errors import CocycleGenerationError, DimensionMismatchError
from skew_infra.iet.rauzy import TowerSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SkewCocycle:
    """A Z^m-valued cocycle constant on each exchanged interval; values[j - 1] is phi_j"""

    values: Tuple[GroupElement, ...]

    def __post_init__(self):
        values = tuple(v if isinstance(v, GroupElement) else GroupElement(tuple(v)) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise DimensionMismatchError("d >= 1", 0, "number of cocycle values")
        dims = {v.m for v in values}
        if len(dims) != 1:
            raise DimensionMismatchError(values[0].m, sorted(dims), "fiber dimension")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SkewCocycle":
        return cls(tuple(GroupElement(tuple(row)) for row in rows))

    @classmethod
    def from_basis(cls, basis: Sequence[Sequence[int]], d: int) -> "SkewCocycle":
        """phi_j = (b_1[j], ..., b_m[j]) for basis vectors b_k in Z^d"""
        return cls(tuple(GroupElement(tuple(b[j] for b in basis)) for j in range(d)))

    @property
    def d(self) -> int:
        return len(self.values)

    @property
    def m(self) -> int:
        return self.values[0].m

    def value(self, j: int) -> GroupElement:
        return self.values[j - 1]

    def value_matrix(self) -> IntegerMatrix:
        return IntegerMatrix([v.coords for v in self.values], ncols=self.m)

    def invariant_factors(self) -> Tuple[int, ...]:
        return invariant_factors(self.value_matrix())

    def generates_lattice(self) -> bool:
        return spans_full_lattice([v.coords for v in self.values], self.m)

    def require_generating(self) -> "SkewCocycle":
        if not self.generates_lattice():
            raise CocycleGenerationError(self.invariant_factors())
        return self

    def perturbed(self, j: int, coordinate: int = 0, delta: int = 1) -> "SkewCocycle":
        values = list(self.values)
        coords = list(values[j - 1].coords)
        coords[coordinate] += delta
        values[j - 1] = GroupElement(tuple(coords))
        return SkewCocycle(tuple(values))

    def to_json(self) -> List[List[int]]:
        return [list(v.coords) for v in self.values]


def _check_dims(matrix: IntegerMatrix, phi: SkewCocycle):
    if matrix.nrows != phi.d or matrix.ncols != phi.d:
        raise DimensionMismatchError((phi.d, phi.d), matrix.shape, "matrix shape")


def normalize_cocycle(phi: SkewCocycle) -> SkewCocycle:
    """
    Change coordinates on Z^m so that the values generate the whole fiber group.
    With U Phi V = D, the columns of Phi V span d_1 Z x ... x d_r Z; dividing by d_t and
    dropping dead coordinates leaves a generating Z^r-valued cocycle.
    """
    smith = smith_decomposition(phi.value_matrix())
    rotated = phi.value_matrix() @ smith.V
    factors = smith.diagonal[: smith.rank]
    rows = [[rotated[j, t] // factors[t] for t in range(smith.rank)] for j in range(phi.d)]
    if smith.rank < phi.m or any(f != 1 for f in factors):
        logger.info("Reduced cocycle to the lattice it generates: factors %s, rank %d", list(factors), smith.rank)
    return SkewCocycle(tuple(GroupElement(tuple(row)) for row in rows))


def eigencocycles(matrix: IntegerMatrix) -> Tuple[int, List[Tuple[int, ...]]]:
    """Integer basis of ker(A^T - I), rotated so that the induced cocycle values generate Z^m"""
    d = matrix.nrows
    basis = integer_kernel(matrix.T - IntegerMatrix.identity(d))
    m = len(basis)
    if not m:
        return 0, []
    rotated = normalize_cocycle(SkewCocycle.from_basis(basis, d))
    return m, [tuple(v[k] for v in rotated.values) for k in range(m)]


def eigencocycle(matrix: IntegerMatrix) -> Optional[SkewCocycle]:
    """The Z-valued cocycle of the first basis vector, reduced to generate Z"""
    m, basis = eigencocycles(matrix)
    if not m:
        return None
    if m > 1:
        logger.info("A^T has a rank %d eigencocycle lattice; using its first basis vector", m)
    # a column of a generating value matrix is primitive
    return SkewCocycle.from_basis(basis[:1], matrix.nrows).require_generating()


def renormalized_phi(matrix: IntegerMatrix, phi: SkewCocycle, n: int) -> SkewCocycle:
    """(A^T)^n phi, coordinate by coordinate"""
    _check_dims(matrix, phi)
    if n < 0:
        raise ValueError(f"Renormalization depth must be nonnegative, got {n}")
    values = phi.value_matrix()
    image = (matrix.T ** n) @ values
    return SkewCocycle(tuple(GroupElement(image.row(j)) for j in range(phi.d)))


def check_periodic_type(matrix: IntegerMatrix, phi: SkewCocycle) -> bool:
    return renormalized_phi(matrix, phi, 1) == phi


def birkhoff_sum_at_return(tower: TowerSystem, phi: SkewCocycle, j: int) -> GroupElement:
    """Sum of phi over the floors of tower j"""
    if tower.d != phi.d:
        raise DimensionMismatchError(tower.d, phi.d, "alphabet size")
    return group_sum((phi.value(letter) for letter in tower.word(j)), phi.m)
