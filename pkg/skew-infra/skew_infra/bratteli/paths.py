from bisect import bisect_right
from typing import Iterator, List, Optional, Tuple

from dataclasses import dataclass, field

from skew_infra.bratteli.diagram import BratteliDiagram, Edge
from skew_infra.errors import (
    AdmissibilityError,
    FloorRangeError,
    MaximalPathError,
    MinimalPathError,
    PathLengthError,
)


@dataclass(frozen=True)
class FinitePath:
    """Admissible edges (e_1, ..., e_k), e_1 nearest the base: t(e_r) = s(e_{r+1})"""

    diagram: BratteliDiagram = field(compare=False, repr=False)
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if not edges:
            raise PathLengthError("A finite path needs at least one edge")
        for edge in edges:
            self.diagram.validate_edge(edge)
        for r, (lower, upper) in enumerate(zip(edges, edges[1:]), start=1):
            if lower.tower != self.diagram.source(upper):
                raise AdmissibilityError(
                    f"Edges {lower} and {upper} do not connect at position {r}: "
                    f"t = {lower.tower} but s = {self.diagram.source(upper)}"
                )

    @classmethod
    def of(cls, diagram: BratteliDiagram, *edges: Tuple[int, int]) -> "FinitePath":
        return cls(diagram, tuple(Edge(*e) for e in edges))

    @property
    def k(self) -> int:
        return len(self.edges)

    def __len__(self):
        return len(self.edges)

    @property
    def first(self) -> Edge:
        return self.edges[0]

    @property
    def source(self) -> int:
        return self.diagram.source(self.edges[0])

    @property
    def target(self) -> int:
        return self.edges[-1].tower

    def __str__(self):
        return "".join(str(e) for e in self.edges)


@dataclass(frozen=True, order=True)
class FloorCoordinate:
    """The floor T^height(J^(level)_tower) of the level-`level` tower `tower`"""

    level: int
    tower: int
    height: int

    def shifted(self, steps: int) -> "FloorCoordinate":
        return FloorCoordinate(self.level, self.tower, self.height + steps)


def first_non_maximal(path: FinitePath) -> Optional[int]:
    return next((n for n, e in enumerate(path.edges) if not path.diagram.is_maximal_edge(e)), None)


def first_non_minimal(path: FinitePath) -> Optional[int]:
    return next((n for n, e in enumerate(path.edges) if e.floor > 0), None)


def is_maximal(path: FinitePath) -> bool:
    return first_non_maximal(path) is None


def is_minimal(path: FinitePath) -> bool:
    return first_non_minimal(path) is None


def adic_successor(path: FinitePath) -> FinitePath:
    diagram = path.diagram
    n = first_non_maximal(path)
    if n is None:
        raise MaximalPathError(path)
    edges = list(path.edges)
    edges[n] = Edge(edges[n].tower, edges[n].floor + 1)
    for r in range(n - 1, -1, -1):
        edges[r] = Edge(diagram.source(edges[r + 1]), 0)
    return FinitePath(diagram, tuple(edges))


def adic_predecessor(path: FinitePath) -> FinitePath:
    diagram = path.diagram
    n = first_non_minimal(path)
    if n is None:
        raise MinimalPathError(path)
    edges = list(path.edges)
    edges[n] = Edge(edges[n].tower, edges[n].floor - 1)
    for r in range(n - 1, -1, -1):
        below = diagram.source(edges[r + 1])
        edges[r] = Edge(below, diagram.q[below - 1] - 1)
    return FinitePath(diagram, tuple(edges))


def left_shift(path: FinitePath) -> FinitePath:
    if path.k < 2:
        raise PathLengthError(f"Cannot shift the length-{path.k} path {path}")
    return FinitePath(path.diagram, path.edges[1:])


def right_shift(path: FinitePath) -> FinitePath:
    return FinitePath(path.diagram, (Edge(path.source, 0),) + path.edges)


def path_to_floor(path: FinitePath) -> FloorCoordinate:
    """Elevator recursion: floor l_m of the level-m tower costs the heights of the level-(m-1) floors below it"""
    diagram = path.diagram
    height = sum(diagram.floor_offsets(m, e.tower)[e.floor] for m, e in enumerate(path.edges, start=1))
    return FloorCoordinate(level=path.k, tower=path.target, height=height)


def floor_to_path(diagram: BratteliDiagram, level: int, tower: int, height: int) -> FinitePath:
    if level < 1:
        raise PathLengthError(f"Floors are addressed from level 1, got {level}")
    diagram.validate_edge(Edge(tower, 0))
    tower_height = diagram.tower_height(level, tower)
    if not 0 <= height < tower_height:
        raise FloorRangeError(level, tower, height, tower_height)

    edges: List[Edge] = []
    j, rest = tower, height
    for m in range(level, 0, -1):
        offsets = diagram.floor_offsets(m, j)
        l = bisect_right(offsets, rest) - 1
        edge = Edge(j, l)
        edges.append(edge)
        rest -= offsets[l]
        j = diagram.source(edge)
    return FinitePath(diagram, tuple(reversed(edges)))


def enumerate_paths(diagram: BratteliDiagram, k: int, target: Optional[int] = None) -> Iterator[FinitePath]:
    """All length-k paths, grouped by target and listed bottom floor first"""
    if k < 1:
        raise PathLengthError(f"Path length must be positive, got {k}")

    def prefixes(length: int, j: int) -> Iterator[Tuple[Edge, ...]]:
        for edge in diagram.edges_into(j):
            if length == 1:
                yield (edge,)
            else:
                for prefix in prefixes(length - 1, diagram.source(edge)):
                    yield prefix + (edge,)

    targets = [target] if target is not None else range(1, diagram.d + 1)
    for j in targets:
        for edges in prefixes(k, j):
            yield FinitePath(diagram, edges)


def _extremal_path(diagram: BratteliDiagram, k: int, j: int, maximal: bool) -> FinitePath:
    edges: List[Edge] = []
    for _ in range(k):
        edge = Edge(j, diagram.q[j - 1] - 1 if maximal else 0)
        edges.append(edge)
        j = diagram.source(edge)
    return FinitePath(diagram, tuple(reversed(edges)))


def maximal_paths(diagram: BratteliDiagram, k: int) -> List[FinitePath]:
    return [_extremal_path(diagram, k, j, maximal=True) for j in range(1, diagram.d + 1)]


def minimal_paths(diagram: BratteliDiagram, k: int) -> List[FinitePath]:
    return [_extremal_path(diagram, k, j, maximal=False) for j in range(1, diagram.d + 1)]


def base_projection(path: FinitePath, depth: int) -> Tuple[int, Tuple[Edge, ...]]:
    """What survives depth shifts: the vertex reached after `depth` edges and the remaining edges"""
    if depth > path.k:
        raise PathLengthError(f"Depth {depth} exceeds path length {path.k}")
    return path.edges[depth - 1].tower if depth else path.source, path.edges[depth:]


def lexicographic_key(path: FinitePath) -> Tuple[int, ...]:
    """Order key among paths sharing a target: compare from the top edge down"""
    return tuple(e.floor for e in reversed(path.edges))
