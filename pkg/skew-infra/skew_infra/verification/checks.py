"""
The verification checks. Each takes the skew-product under test and a seeded generator and
returns a CheckOutcome; violations are counted into the residual and the first few are kept as
the witness. Numerical checks report their largest deviation as the residual instead.
"""
import itertools
import logging
from typing import Callable, Dict, List

import numpy as np
from tqdm import tqdm

from skew_infra.algebra import GroupElement
from skew_infra.bratteli import (
    FinitePath,
    adic_successor,
    enumerate_paths,
    first_non_maximal,
    floor_to_path,
    is_maximal,
    is_minimal,
    left_shift,
    maximal_paths,
    minimal_paths,
    path_to_floor,
    right_shift,
)
from skew_infra.cocycles import (
    SkewedPathState,
    concatenate_cycles,
    cycle_difference,
    delta_closure_probe,
    project_state,
    random_cycle,
    skewed_adic_step,
    tail_cocycle,
    tail_orbit_witness,
    tail_recurrence_residuals,
    verify_certificate,
)
from skew_infra.consts import CheckStatus, tolerances
from skew_infra.helper_classes.skew_product import SkewProduct
from skew_infra.iet import birkhoff_frequencies, simulate_return_times
from skew_infra.maharam import (
    MaharamParameter,
    boundary_orbit_has_no_atoms,
    continuity_profile,
    cylinder_family,
    invariance_recurrence_check,
    invariance_step_check,
    path_enumeration_matrix,
    perron,
    psi_samples,
    sample_cylinders,
    table_marginal_check,
)
from skew_infra.skew import birkhoff_sum_at_return, check_periodic_type, renormalized_phi
from skew_infra.verification.report import CheckOutcome

logger = logging.getLogger(__name__)

WITNESS_LIMIT = 5
# towers up to this height get a witness for every pair of floors
PAIR_HEIGHT_LIMIT = 64

Check = Callable[[SkewProduct, np.random.Generator], CheckOutcome]


class _Violations:
    def __init__(self):
        self.count = 0
        self.examples: List[str] = []

    def add(self, message: str):
        self.count += 1
        if len(self.examples) < WITNESS_LIMIT:
            self.examples.append(message)

    def outcome(self, **witness) -> CheckOutcome:
        status = CheckStatus.FAIL if self.count else CheckStatus.PASS
        if self.examples:
            witness["violations"] = self.examples
        return CheckOutcome(status, float(self.count), witness or None)


def _random_path(product: SkewProduct, k: int, rng: np.random.Generator) -> FinitePath:
    """A uniformly drawn non-maximal level-k floor"""
    paths, _ = sample_cylinders(product.diagram, k, 1, rng, 0, product.m)
    return paths[0]


def check_tower_oracle(product: SkewProduct, rng: np.random.Generator) -> CheckOutcome:
    instance = product.instance
    violations = _Violations()
    for k in range(1, product.config.oracle_level + 1):
        tower = instance.tower_at(k)
        q, words = simulate_return_times(instance.combinatorics, instance.lengths, k)
        if q != tower.q:
            violations.add(f"level {k}: q {list(tower.q)} vs simulated {list(q)}")
        elif words != tower.words:
            wrong = [j for j in range(1, instance.d + 1) if words[j - 1] != tower.word(j)]
            violations.add(f"level {k}: words of towers {wrong} differ from the simulated returns")
    return violations.outcome(levels=product.config.oracle_level)


def check_cocycle_identities(product: SkewProduct, rng: np.random.Generator) -> CheckOutcome:
    instance = product.instance
    A = instance.A
    violations = _Violations()
    for k in range(1, product.config.oracle_level + 1):
        if instance.tower_at(k).A != A ** k:
            violations.add(f"A({k}) differs from A^{k}")
    if tuple(A.column_sums()) != instance.tower.q:
        violations.add(f"column sums {A.column_sums()} differ from q {list(instance.tower.q)}")
    if product.phi is None:
        return violations.outcome(m=0)

    image = renormalized_phi(A, product.phi, 1)
    for j in range(1, product.d + 1):
        if birkhoff_sum_at_return(instance.tower, product.phi, j) != image.value(j):
            violations.add(f"word sum of phi over tower {j} differs from (A^T phi)_{j}")
    if not check_periodic_type(A, product.phi):
        violations.add(f"A^T phi = {image.to_json()} differs from phi = {product.phi.to_json()}")
    return violations.outcome(m=product.m)


def check_bratteli_dictionary(product: SkewProduct, rng: np.random.Generator) -> CheckOutcome:
    diagram = product.diagram
    instance = product.instance
    violations = _Violations()
    for k in range(1, product.config.exhaustive_level + 1):
        heights = diagram.tower.heights(k)
        seen = set()
        maximal = minimal = 0
        simulated = None
        if k <= product.config.oracle_level:
            _, simulated = simulate_return_times(instance.combinatorics, instance.lengths, k)
        for path in tqdm(enumerate_paths(diagram, k), total=sum(heights), desc=f"level {k} paths", disable=None, leave=False):
            floor = path_to_floor(path)
            seen.add(floor)
            if floor_to_path(diagram, k, floor.tower, floor.height) != path:
                violations.add(f"path {path} does not return from floor {floor}")
            maximal += is_maximal(path)
            minimal += is_minimal(path)
            if not is_maximal(path) and path_to_floor(adic_successor(path)) != floor.shifted(1):
                violations.add(f"successor of {path} is not one floor up")
            lifted = right_shift(path)
            expected = sum(diagram.floor_offsets(m + 1, e.tower)[e.floor] for m, e in enumerate(path.edges, start=1))
            if path_to_floor(lifted).height != expected or left_shift(lifted) != path:
                violations.add(f"right shift of {path} does not lift its floor one level")
            if simulated is not None and simulated[floor.tower - 1][floor.height] != path.source:
                violations.add(f"floor {floor} lies in interval {simulated[floor.tower - 1][floor.height]}, path says {path.source}")
        if len(seen) != sum(heights) or any(not 0 <= f.height < heights[f.tower - 1] for f in seen):
            violations.add(f"level {k}: {len(seen)} floors for {sum(heights)} paths")
        if maximal != diagram.d or minimal != diagram.d:
            violations.add(f"level {k}: {maximal} maximal and {minimal} minimal paths")
        if len(maximal_paths(diagram, k)) != diagram.d or len(minimal_paths(diagram, k)) != diagram.d:
            violations.add(f"level {k}: extremal path constructors disagree")
    return violations.outcome(levels=product.config.exhaustive_level)


def check_tail_cocycle(product: SkewProduct, rng: np.random.Generator) -> CheckOutcome:
    f, phi = product.f, product.phi
    violations = _Violations()
    for _ in range(product.config.samples):
        path = _random_path(product, product.config.level, rng)
        value = tail_cocycle(path, f)
        if value != phi.value(path.source):
            violations.add(f"phi_f({path}) = {value}, phi = {phi.value(path.source)}")
        for name, residual in tail_recurrence_residuals(path, f).items():
            if residual is not None and not residual.is_zero():
                violations.add(f"recurrence {name} fails at {path} by {residual}")

        # S_n phi_f(p) = S_k f(p) - S_k f(tau^n p) while tau^n p stays in the level-k tower
        steps = int(rng.integers(1, 21))
        current, total = path, GroupElement.zero(f.m)
        for _ in range(steps):
            if is_maximal(current):
                break
            total = total + tail_cocycle(current, f)
            current = adic_successor(current)
        if total != f.birkhoff_sum(path) - f.birkhoff_sum(current):
            violations.add(f"Birkhoff identity fails from {path} after {steps} steps")
    return violations.outcome(samples=product.config.samples, level=product.config.level)


def _fiber_box(m: int) -> List[GroupElement]:
    return [GroupElement(coords) for coords in itertools.product((-1, 0, 1), repeat=m)]


def check_tail_orbit(product: SkewProduct, rng: np.random.Generator) -> CheckOutcome:
    """
    Walk each level-k tower from its bottom floor. Over every floor and a unit fiber box, equal
    sigma_f^k images and tau_phi orbit segments must single out the same classes of skew floors.
    Explicit witnesses are recovered for every pair of floors in towers up to PAIR_HEIGHT_LIMIT
    floors and for sampled pairs above that.
    """
    diagram, f, phi = product.diagram, product.f, product.phi
    k = product.config.tail_orbit_level
    violations = _Violations()
    box = _fiber_box(f.m)
    orbit_of: Dict[tuple, tuple] = {}
    image_of: Dict[tuple, tuple] = {}
    floors = pairs = 0
    for j in range(1, diagram.d + 1):
        bottom = next(enumerate_paths(diagram, k, target=j))
        states = [SkewedPathState(bottom, GroupElement.zero(f.m))]
        while first_non_maximal(states[-1].path) is not None:
            states.append(skewed_adic_step(states[-1], phi))
        if len(states) != diagram.tower_height(k, j):
            violations.add(f"tower {j}: orbit of length {len(states)} for height {diagram.tower_height(k, j)}")
        height_of = {state.path.edges: height for height, state in enumerate(states)}

        for path in enumerate_paths(diagram, k, target=j):
            height = height_of.get(path.edges)
            if height is None:
                violations.add(f"tower {j}: floor {path} is not on the orbit of the bottom floor")
                continue
            for fiber in box:
                # the orbit segment is named by the state it starts from
                orbit = (j, fiber - states[height].fiber)
                image = project_state(SkewedPathState(path, fiber), f, k)
                if orbit_of.setdefault(image, orbit) != orbit or image_of.setdefault(orbit, image) != image:
                    violations.add(f"tower {j}: floor {height} at fiber {fiber} splits a tail or an orbit class")
                floors += 1

        if len(states) <= PAIR_HEIGHT_LIMIT:
            chosen = itertools.product(range(len(states)), repeat=2)
        else:
            chosen = (tuple(int(x) for x in rng.integers(0, len(states), size=2))
                      for _ in range(product.config.probe_samples))
        for a, b in chosen:
            if tail_orbit_witness(states[a], states[b], phi, k, floor_cocycle=f) != b - a:
                violations.add(f"tower {j}: no witness {b - a} between floors {a} and {b}")
            pairs += 1
    return violations.outcome(level=k, skew_floors=floors, witnessed_pairs=pairs)


def check_aperiodicity(product: SkewProduct, rng: np.random.Generator) -> CheckOutcome:
    certificate = product.certificate
    violations = _Violations()
    if not certificate.verdict:
        violations.add(f"generators span a proper sublattice, invariant factors {list(certificate.invariant_factors)}")
    if not verify_certificate(certificate, product.instance.loop, product.phi):
        violations.add("certificate does not re-verify")
    if set(certificate.generators) != set(product.phi.values):
        violations.add(f"generators {[str(g) for g in certificate.generators]} differ from the phi values")
    seed = int(rng.integers(2 ** 31))
    if not delta_closure_probe(product.diagram, product.f, certificate, product.config.probe_samples, seed):
        violations.add("a sampled cycle difference lies outside the certified lattice")
    for _ in range(WITNESS_LIMIT):
        length = int(rng.integers(1, 5))
        p = (random_cycle(product.diagram, length, rng), random_cycle(product.diagram, length, rng))
        q = (random_cycle(product.diagram, length, rng), random_cycle(product.diagram, length, rng))
        joined = concatenate_cycles(product.diagram, p, q)
        expected = cycle_difference(product.f, *p) + cycle_difference(product.f, *q)
        if cycle_difference(product.f, *joined) != expected:
            violations.add(f"concatenated cycles do not add their differences ({expected})")
    return violations.outcome(certificate=certificate.to_json())


def check_level_counting(product: SkewProduct, rng: np.random.Generator) -> CheckOutcome:
    diagram, counting = product.diagram, product.counting
    violations = _Violations()
    if counting.at_ones() != diagram.tower.A:
        violations.add("M(1) differs from A")
    for k in range(1, product.config.counting_level + 1):
        power = product.counting_power(k)
        if power != path_enumeration_matrix(diagram, product.f, k):
            violations.add(f"M^{k} differs from the level-{k} path enumeration")
        if power.at_ones() != diagram.tower.A ** k:
            violations.add(f"b-count sums at level {k} differ from A^{k}")
    return violations.outcome(levels=product.config.counting_level)


def check_maharam_formula(product: SkewProduct, rng: np.random.Generator) -> CheckOutcome:
    config = product.config
    recurrence_level = min(config.level, config.counting_level)
    power = product.counting_power(recurrence_level)
    parameters = [MaharamParameter.zero(product.m)] + psi_samples(product.m, config.psi_samples, rng)
    worst: Dict[str, float] = {"recurrence": 0.0, "marginal": 0.0, "invariance": 0.0, "quasi_invariance": 0.0}
    violations = _Violations()
    for parameter in parameters:
        measure = product.measure(parameter)
        worst["recurrence"] = max(worst["recurrence"], invariance_recurrence_check(measure, recurrence_level, power))
        worst["marginal"] = max(worst["marginal"], table_marginal_check(measure, min(config.level, config.oracle_level)))
        paths, fibers = sample_cylinders(product.diagram, config.level, config.samples, rng, 3, product.m)
        invariance, quasi = invariance_step_check(measure, paths, fibers)
        worst["invariance"] = max(worst["invariance"], invariance)
        worst["quasi_invariance"] = max(worst["quasi_invariance"], quasi)
        no_atoms, masses = boundary_orbit_has_no_atoms(measure, config.level)
        if not no_atoms:
            violations.add(f"psi={parameter}: boundary masses {masses} do not vanish")
    limits = {
        "recurrence": tolerances.MEASURE_ABSOLUTE,
        "marginal": tolerances.MEASURE_ABSOLUTE,
        "invariance": tolerances.MEASURE_ABSOLUTE,
        "quasi_invariance": tolerances.MEASURE_RELATIVE,
    }
    for name, value in worst.items():
        if value > limits[name]:
            violations.add(f"{name} residual {value:.3e} exceeds {limits[name]:.0e}")
    outcome = violations.outcome(parameters=len(parameters), **worst)
    return CheckOutcome(outcome.status, max(worst.values()), outcome.witness)


def check_psi_zero(product: SkewProduct, rng: np.random.Generator) -> CheckOutcome:
    instance = product.instance
    data = perron(instance.A.to_numpy())
    v = data.vector
    lengths = float(np.abs(v - instance.lengths.as_floats()).max())
    frequencies = birkhoff_frequencies(instance.combinatorics, instance.lengths, product.config.birkhoff_steps)
    visits = float(np.abs(v - frequencies).max())
    violations = _Violations()
    if product.phi is not None:
        measured = product.measure(MaharamParameter.zero(product.m)).perron.vector
        if float(np.abs(measured - v).max()) > tolerances.LENGTHS_AGREEMENT:
            violations.add("v at lambda = 1 differs from the Perron vector of A")
    if lengths > tolerances.LENGTHS_AGREEMENT:
        violations.add(f"Perron vector differs from the lengths by {lengths:.3e}")
    if visits > tolerances.BIRKHOFF_FREQUENCY:
        violations.add(f"orbit frequencies differ from the Perron vector by {visits:.3e}")
    outcome = violations.outcome(lengths=lengths, frequencies=visits, steps=product.config.birkhoff_steps,
                                 perron=data.residuals())
    return CheckOutcome(outcome.status, max(lengths, visits), outcome.witness)


def check_continuity(product: SkewProduct, rng: np.random.Generator) -> CheckOutcome:
    config = product.config
    cylinders = cylinder_family(product.diagram, config.continuity_level, config.cylinder_family_size, rng, product.m)
    profile = continuity_profile(
        product.diagram, product.f, cylinders, product.grids(), config.refinements, config.max_workers,
        counting=product.counting,
    )
    status = CheckStatus.PASS if profile.is_decreasing() else CheckStatus.FAIL
    witness = {"moduli": [list(m) for m in profile.moduli], "ratios": profile.ratios()}
    return CheckOutcome(status, profile.moduli[-1][1], witness)


CHECKS: Dict[str, Check] = {
    "tower_oracle": check_tower_oracle,
    "cocycle_identities": check_cocycle_identities,
    "bratteli_dictionary": check_bratteli_dictionary,
    "tail_cocycle": check_tail_cocycle,
    "tail_orbit": check_tail_orbit,
    "aperiodicity": check_aperiodicity,
    "level_counting": check_level_counting,
    "maharam_formula": check_maharam_formula,
    "psi_zero": check_psi_zero,
    "continuity": check_continuity,
}
