import logging
from typing import Dict, Optional, Tuple

from dataclasses import dataclass

from skew_infra.algebra import GroupElement
from skew_infra.bratteli import (
    FinitePath,
    adic_predecessor,
    adic_successor,
    base_projection,
    first_non_maximal,
    first_non_minimal,
    left_shift,
)
from skew_infra.cocycles.floor import FloorCocycle
from skew_infra.errors import DimensionMismatchError, MaximalPathError, PathLengthError
from skew_infra.skew import SkewCocycle

logger = logging.getLogger(__name__)


def _floor_cocycle(path: FinitePath, phi: SkewCocycle, floor_cocycle: Optional[FloorCocycle]) -> FloorCocycle:
    if floor_cocycle is not None:
        return floor_cocycle
    return FloorCocycle(path.diagram, phi)


def tail_cocycle(path: FinitePath, f: FloorCocycle) -> GroupElement:
    """
    phi_f(p) = sum over i <= n of f(sigma^i p) - f(sigma^i tau p), n the first non-maximal position.
    Past n the two paths agree, so the truncated sum is exact.
    """
    n = first_non_maximal(path)
    if n is None:
        raise MaximalPathError(path)
    successor = adic_successor(path)
    total = GroupElement.zero(f.m)
    for i in range(n + 1):
        total = total + f(path.edges[i]) - f(successor.edges[i])
    return total


def tail_recurrence_residuals(path: FinitePath, f: FloorCocycle) -> Dict[str, Optional[GroupElement]]:
    """
    Residuals of the recursions tying f, phi_f and phi together on one path, all zero when they hold:
      phi_f: f(tau p) = f(p) - phi_f(p) [+ phi_f(sigma p) on a top floor]
      phi:   phi_f(p) = phi on the floor's interval
      top:   f(p) - phi(p) + phi(sigma p) = 0 on a top floor (None elsewhere)
    """
    successor = adic_successor(path)
    phi_f = tail_cocycle(path, f)
    expected = f(path) - phi_f
    top = None
    if path.diagram.is_maximal_edge(path.first):
        shifted = left_shift(path)
        expected = expected + tail_cocycle(shifted, f)
        top = f(path) - f.phi_of(path) + f.phi_of(shifted)
    return {
        "phi_f": f(successor) - expected,
        "phi": phi_f - f.phi_of(path),
        "top": top,
    }


@dataclass(frozen=True)
class SkewedPathState:
    """A point (p, a) of the path-space skew-product"""

    path: FinitePath
    fiber: GroupElement

    def __str__(self):
        return f"{self.path}@{self.fiber}"


def _check_fiber(state: SkewedPathState, m: int):
    if state.fiber.m != m:
        raise DimensionMismatchError(m, state.fiber.m, "fiber dimension")


def skewed_adic_step(state: SkewedPathState, phi: SkewCocycle) -> SkewedPathState:
    """tau_phi(p, a) = (tau p, a + phi(p))"""
    _check_fiber(state, phi.m)
    return SkewedPathState(adic_successor(state.path), state.fiber + phi.value(state.path.source))


def skewed_adic_step_back(state: SkewedPathState, phi: SkewCocycle) -> SkewedPathState:
    previous = adic_predecessor(state.path)
    _check_fiber(state, phi.m)
    return SkewedPathState(previous, state.fiber - phi.value(previous.source))


def skewed_shift_step(state: SkewedPathState, f: FloorCocycle) -> SkewedPathState:
    """sigma_f(p, a) = (sigma p, a + f(p))"""
    _check_fiber(state, f.m)
    return SkewedPathState(left_shift(state.path), state.fiber + f(state.path))


def project_state(state: SkewedPathState, f: FloorCocycle, depth: int) -> Tuple[int, tuple, GroupElement]:
    """What sigma_f^depth leaves of a state: the vertex reached, the remaining edges and a + S_depth f"""
    _check_fiber(state, f.m)
    vertex, rest = base_projection(state.path, depth)
    return vertex, rest, state.fiber + f.birkhoff_sum(state.path, depth)


def tail_orbit_witness(
    first: SkewedPathState,
    second: SkewedPathState,
    phi: SkewCocycle,
    depth: int,
    floor_cocycle: Optional[FloorCocycle] = None,
) -> Optional[int]:
    """
    Signed number of tau_phi steps taking `first` to `second`, or None when the two states do not
    share a sigma_f-tail at `depth`. The walk stays inside the level-`depth` tower of `first`.
    """
    if depth > first.path.k or depth > second.path.k:
        raise PathLengthError(f"Depth {depth} exceeds the state paths ({first.path.k}, {second.path.k})")
    f = _floor_cocycle(first.path, phi, floor_cocycle)
    if project_state(first, f, depth) != project_state(second, f, depth):
        return None

    if first == second:
        return 0
    state, steps = first, 0
    while (n := first_non_maximal(state.path)) is not None and n < depth:
        state, steps = skewed_adic_step(state, phi), steps + 1
        if state == second:
            return steps
    state, steps = first, 0
    while (n := first_non_minimal(state.path)) is not None and n < depth:
        state, steps = skewed_adic_step_back(state, phi), steps - 1
        if state == second:
            return steps
    logger.warning("States %s and %s share a tail at depth %d but no orbit segment joins them", first, second, depth)
    return None
