import logging
from collections import defaultdict
from typing import Dict, Sequence, Tuple

from skew_infra.algebra import GroupElement, LaurentMatrix, LaurentPolynomial, laurent_matrix_pow
from skew_infra.bratteli import BratteliDiagram
from skew_infra.cocycles import FloorCocycle
from skew_infra.errors import DimensionMismatchError, PathLengthError

logger = logging.getLogger(__name__)


def _to_matrix(counts: Dict[Tuple[int, int], Dict[tuple, int]], d: int, m: int) -> LaurentMatrix:
    return LaurentMatrix(
        [[LaurentPolynomial(counts.get((i, j), {}), m) for j in range(1, d + 1)] for i in range(1, d + 1)], m
    )


def level_counting_matrix(diagram: BratteliDiagram, f: FloorCocycle) -> LaurentMatrix:
    """M_ij(t) = sum of t^f(e) over the edges e from i to j (0-based entries)"""
    if diagram.d != f.diagram.d:
        raise DimensionMismatchError(diagram.d, f.diagram.d, "alphabet size")
    counts: Dict[Tuple[int, int], Dict[tuple, int]] = defaultdict(lambda: defaultdict(int))
    for edge in diagram.edges:
        counts[(diagram.source(edge), edge.tower)][f(edge).coords] += 1
    return _to_matrix(counts, diagram.d, f.m)


def path_enumeration_matrix(diagram: BratteliDiagram, f: FloorCocycle, k: int) -> LaurentMatrix:
    """
    M^(k) read directly off the diagram: t^(S_k f) summed over the level-k paths by source and
    target. Paths are extended one edge at a time and grouped by source, end vertex and S_n f, so
    no path is built.
    """
    if k < 1:
        raise PathLengthError(f"Path length must be positive, got {k}")
    if diagram.d != f.diagram.d:
        raise DimensionMismatchError(diagram.d, f.diagram.d, "alphabet size")
    weights = {edge: f(edge) for edge in diagram.edges}
    counts: Dict[Tuple[int, int], Dict[GroupElement, int]] = {(i, i): {GroupElement.zero(f.m): 1}
                                                              for i in range(1, diagram.d + 1)}
    for _ in range(k):
        extended: Dict[Tuple[int, int], Dict[GroupElement, int]] = defaultdict(lambda: defaultdict(int))
        for (i, end), sums in counts.items():
            for edge in diagram.edges_from(end):
                row = extended[(i, edge.tower)]
                for total, count in sums.items():
                    row[total + weights[edge]] += count
        counts = extended
    return _to_matrix({key: {total.coords: count for total, count in sums.items()} for key, sums in counts.items()},
                      diagram.d, f.m)


def b_counts(matrix: LaurentMatrix, k: int, i: int, j: int, fiber: Sequence[int]) -> int:
    """Number of level-k skew-tower floors over K_i at fiber 0 that sit in tower j at fiber `fiber`"""
    if k < 1:
        raise PathLengthError(f"Level must be positive, got {k}")
    return laurent_matrix_pow(matrix, k).coefficient(i - 1, j - 1, tuple(fiber))
