import logging
from functools import cached_property
from typing import Dict, List, Tuple

from dataclasses import dataclass

from skew_infra.errors import PathError, ValidationError
from skew_infra.iet.rauzy import TowerSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Edge:
    """Floor `floor` of tower `tower`; its target is the tower, its source the floor's label"""

    tower: int
    floor: int

    def __str__(self):
        return f"({self.tower},{self.floor})"


class BratteliDiagram:
    """The stationary ordered diagram read off one period of towers"""

    def __init__(self, tower: TowerSystem):
        if not tower.A.is_nonnegative():
            raise ValidationError(f"Tower matrix must be nonnegative, got {tower.A.tolist()}")
        self.tower = tower
        if len(self.edges) <= 1:
            raise ValidationError("A Bratteli diagram needs more than one edge per level")
        for i in range(1, tower.d + 1):
            if not self.edges_from(i):
                raise ValidationError(f"Vertex {i} has no outgoing edge")
        self._offsets: Dict[Tuple[int, int], Tuple[int, ...]] = {}

    @classmethod
    def odometer(cls) -> "BratteliDiagram":
        """Single vertex, two edges ordered 0 < 1: the dyadic odometer"""
        return cls(TowerSystem(((1, 1),)))

    @property
    def d(self) -> int:
        return self.tower.d

    @property
    def q(self) -> Tuple[int, ...]:
        return self.tower.q

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(Edge(j, l) for j in range(1, self.tower.d + 1) for l in range(self.tower.q[j - 1]))

    @cached_property
    def _by_source(self) -> Dict[int, List[Edge]]:
        grouped = {i: [] for i in range(1, self.d + 1)}
        for edge in self.edges:
            grouped[self.source(edge)].append(edge)
        return grouped

    def validate_edge(self, edge: Edge):
        if not 1 <= edge.tower <= self.d or not 0 <= edge.floor < self.tower.q[edge.tower - 1]:
            raise PathError(f"Edge {edge} does not exist (q = {list(self.tower.q)})")

    def source(self, edge: Edge) -> int:
        return self.tower.letter(edge.tower, edge.floor)

    @staticmethod
    def target(edge: Edge) -> int:
        return edge.tower

    def is_maximal_edge(self, edge: Edge) -> bool:
        return edge.floor == self.tower.q[edge.tower - 1] - 1

    @staticmethod
    def is_minimal_edge(edge: Edge) -> bool:
        return edge.floor == 0

    def edges_into(self, j: int) -> Tuple[Edge, ...]:
        return tuple(Edge(j, l) for l in range(self.tower.q[j - 1]))

    def edges_from(self, i: int) -> List[Edge]:
        return self._by_source[i]

    def edges_between(self, i: int, j: int) -> List[Edge]:
        return [edge for edge in self.edges_into(j) if self.source(edge) == i]

    def tower_height(self, level: int, j: int) -> int:
        return self.tower.heights(level)[j - 1]

    def floor_offsets(self, level: int, j: int) -> Tuple[int, ...]:
        """offsets[l] = sum of level-(level-1) heights of the first l floors of tower j"""
        key = (level, j)
        offsets = self._offsets.get(key)
        if offsets is None:
            heights = self.tower.heights(level - 1)
            running, acc = [0], 0
            for letter in self.tower.word(j):
                acc += heights[letter - 1]
                running.append(acc)
            offsets = tuple(running)
            self._offsets[key] = offsets
        return offsets

    def to_json(self) -> List[dict]:
        return [{"j": e.tower, "l": e.floor, "s": self.source(e), "t": e.tower} for e in self.edges]


def build_diagram(tower: TowerSystem) -> BratteliDiagram:
    diagram = BratteliDiagram(tower)
    logger.debug("Built diagram with %d edges on %d vertices", len(diagram.edges), diagram.d)
    return diagram
