from typing import Dict, Optional, Union

from skew_infra.algebra import GroupElement
from skew_infra.bratteli import BratteliDiagram, Edge, FinitePath
from skew_infra.errors import DimensionMismatchError
from skew_infra.skew import SkewCocycle


def floor_cocycle_f(edge: Edge, phi: SkewCocycle, diagram: BratteliDiagram) -> GroupElement:
    """Minus the Birkhoff sum of phi over the floors of tower j below floor l"""
    diagram.validate_edge(edge)
    total = GroupElement.zero(phi.m)
    for letter in diagram.tower.word(edge.tower)[: edge.floor]:
        total = total - phi.value(letter)
    return total


class FloorCocycle:
    """f tabulated on the edges of one diagram; it only sees the first edge of a path"""

    def __init__(self, diagram: BratteliDiagram, phi: SkewCocycle):
        if diagram.d != phi.d:
            raise DimensionMismatchError(diagram.d, phi.d, "alphabet size")
        self.diagram = diagram
        self.phi = phi
        self._table: Dict[Edge, GroupElement] = {}
        for j in range(1, diagram.d + 1):
            running = GroupElement.zero(phi.m)
            for l, letter in enumerate(diagram.tower.word(j)):
                self._table[Edge(j, l)] = running
                running = running - phi.value(letter)

    @property
    def m(self) -> int:
        return self.phi.m

    def __call__(self, item: Union[Edge, FinitePath]) -> GroupElement:
        edge = item.first if isinstance(item, FinitePath) else item
        return self._table[edge]

    def phi_of(self, path: FinitePath) -> GroupElement:
        """phi evaluated on the interval containing the path's floor"""
        return self.phi.value(path.source)

    def birkhoff_sum(self, path: FinitePath, n: Optional[int] = None) -> GroupElement:
        """S_n f along the shift: the sum of f over the first n edges (all of them by default)"""
        edges = path.edges if n is None else path.edges[:n]
        total = GroupElement.zero(self.m)
        for edge in edges:
            total = total + self._table[edge]
        return total

    def cycle_sum(self, edges) -> GroupElement:
        total = GroupElement.zero(self.m)
        for edge in edges:
            total = total + self._table[edge]
        return total

    def attainable_bound(self, k: int) -> int:
        """max |S_k f|_inf over all length-k paths, by coordinatewise dynamic programming"""
        if self.m == 0 or k == 0:
            return 0
        diagram = self.diagram
        low = {j: (0,) * self.m for j in range(1, diagram.d + 1)}
        high = dict(low)
        for _ in range(k):
            new_low, new_high = {}, {}
            for j in range(1, diagram.d + 1):
                candidates = [
                    (self._table[e], low[diagram.source(e)], high[diagram.source(e)]) for e in diagram.edges_into(j)
                ]
                new_low[j] = tuple(min(f[c] + lo[c] for f, lo, _ in candidates) for c in range(self.m))
                new_high[j] = tuple(max(f[c] + hi[c] for f, _, hi in candidates) for c in range(self.m))
            low, high = new_low, new_high
        return max(max(abs(x) for x in values) for values in list(low.values()) + list(high.values()))
