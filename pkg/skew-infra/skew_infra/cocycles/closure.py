import logging
from typing import List, Sequence, Tuple

import numpy as np

from skew_infra.algebra import GroupElement, lattice_contains
from skew_infra.bratteli import BratteliDiagram, Edge, FinitePath
from skew_infra.cocycles.certificate import AperiodicityCertificate
from skew_infra.cocycles.floor import FloorCocycle
from skew_infra.errors import AdmissibilityError, PathError, ValidationError
from skew_infra.utils import seeded_rng

logger = logging.getLogger(__name__)

Cycle = Tuple[Edge, ...]

MAX_CYCLE_ATTEMPTS = 1000


def validate_cycle(diagram: BratteliDiagram, edges: Sequence[Edge]) -> Cycle:
    """A fixed point of the shift: admissible edges whose last target is the first source"""
    path = FinitePath(diagram, tuple(edges))
    if path.target != path.source:
        raise AdmissibilityError(f"Cycle {path} ends at {path.target} but starts at {path.source}")
    return path.edges


def random_cycle(diagram: BratteliDiagram, length: int, rng: np.random.Generator) -> Cycle:
    """A uniformly drawn vertex loop lifted to edges; loops on the maximal or minimal orbit are redrawn"""
    for _ in range(MAX_CYCLE_ATTEMPTS):
        vertices = [int(v) for v in rng.integers(1, diagram.d + 1, size=length)]
        vertices.append(vertices[0])
        edges = []
        for lower, upper in zip(vertices, vertices[1:]):
            candidates = diagram.edges_between(lower, upper)
            if not candidates:
                break
            edges.append(candidates[int(rng.integers(len(candidates)))])
        else:
            if all(diagram.is_maximal_edge(e) for e in edges) or all(diagram.is_minimal_edge(e) for e in edges):
                continue
            return validate_cycle(diagram, edges)
    raise ValidationError(f"Could not draw a length-{length} cycle in {MAX_CYCLE_ATTEMPTS} attempts")


def cycle_difference(f: FloorCocycle, first: Cycle, second: Cycle) -> GroupElement:
    """delta = S f(first) - S f(second) for two cycles of equal length"""
    if len(first) != len(second):
        raise PathError(f"Cycles of lengths {len(first)} and {len(second)} cannot be compared")
    return f.cycle_sum(first) - f.cycle_sum(second)


def _connector(diagram: BratteliDiagram, i: int, j: int) -> Edge:
    edges = diagram.edges_between(i, j)
    if not edges:
        raise AdmissibilityError(f"No edge from vertex {i} to vertex {j}")
    return edges[0]


def concatenate_cycles(
    diagram: BratteliDiagram, p: Tuple[Cycle, Cycle], q: Tuple[Cycle, Cycle], hub: int = 1
) -> Tuple[Cycle, Cycle]:
    """
    Two equal-length cycles through `hub` whose difference is delta_p + delta_q.
    Every cycle is entered and left through single connector edges, and each connector appears
    once on both sides.
    """
    for pair in (p, q):
        if len(pair[0]) != len(pair[1]):
            raise PathError("Each pair must consist of cycles of the same length")

    def detour(cycle: Cycle, traverse: bool) -> List[Edge]:
        vertex = diagram.source(cycle[0])
        inner = list(cycle) if traverse else []
        return [_connector(diagram, hub, vertex)] + inner + [_connector(diagram, vertex, hub)]

    first = detour(p[0], True) + detour(p[1], False) + detour(q[0], True) + detour(q[1], False)
    second = detour(p[0], False) + detour(p[1], True) + detour(q[0], False) + detour(q[1], True)
    return validate_cycle(diagram, first), validate_cycle(diagram, second)


def delta_closure_probe(
    diagram: BratteliDiagram,
    f: FloorCocycle,
    certificate: AperiodicityCertificate,
    samples: int,
    seed: int = 0,
    max_length: int = 6,
) -> bool:
    """Sampled differences of equal-length cycle sums must lie in the lattice the certificate spans"""
    rng = seeded_rng(seed, "delta-closure")
    generators = [g.coords for g in certificate.generators]
    for sample in range(samples):
        length = int(rng.integers(1, max_length + 1))
        first, second = random_cycle(diagram, length, rng), random_cycle(diagram, length, rng)
        delta = cycle_difference(f, first, second)
        if not lattice_contains(generators, delta.coords):
            logger.warning("Sample %d: delta %s of cycles %s, %s is outside the certified lattice",
                           sample, delta, first, second)
            return False
    logger.debug("All %d sampled cycle differences lie in the certified lattice", samples)
    return True
