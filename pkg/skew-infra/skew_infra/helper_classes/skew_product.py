import logging
import threading
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from skew_infra import consts
from skew_infra.algebra import LaurentMatrix
from skew_infra.bratteli import BratteliDiagram, build_diagram
from skew_infra.cocycles import AperiodicityCertificate, FloorCocycle, amplify_for_common_prefix
from skew_infra.errors import DimensionMismatchError, ValidationError
from skew_infra.helper_classes.config import BaseInstanceConfig
from skew_infra.iet import IetCombinatorics, RauzyInstance, RauzyLoop, TowerSystem, discover_loop
from skew_infra.maharam import MaharamMeasure, MaharamParameter, level_counting_matrix
from skew_infra.skew import SkewCocycle, check_periodic_type, eigencocycle, eigencocycles, normalize_cocycle
from skew_infra.utils import parse_grid

logger = logging.getLogger(__name__)


class SkewProduct:
    """
    A periodic-type skew-product T_phi with the objects derived from it: the stationary diagram,
    the floor cocycle, the certificate, the level-counting matrix and Maharam measures per psi.
    `tower` replaces the instance's tower in the diagram only (used to corrupt word order).
    """

    def __init__(
        self,
        instance: RauzyInstance,
        phi: Optional[SkewCocycle],
        config: Optional[BaseInstanceConfig] = None,
        tower: Optional[TowerSystem] = None,
    ):
        if phi is not None and phi.d != instance.d:
            raise DimensionMismatchError(instance.d, phi.d, "number of cocycle values")
        self.instance = instance
        self.phi = phi
        self.config = config if config is not None else BaseInstanceConfig(name=instance.name)
        self.tower = tower if tower is not None else instance.tower
        self._measures: Dict[MaharamParameter, MaharamMeasure] = {}
        self._counting_powers: Dict[int, LaurentMatrix] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_config(cls, config: BaseInstanceConfig) -> "SkewProduct":
        combinatorics = IetCombinatorics.from_rows(config.top, config.bottom)
        if config.loop is not None:
            loop = RauzyLoop.from_letters(combinatorics, config.loop)
        else:
            loop = discover_loop(combinatorics, config.search_length)
        instance = RauzyInstance.build(config.name, loop)
        if config.phi:
            phi = SkewCocycle.from_rows(config.phi)
            if phi.d != instance.d:
                raise DimensionMismatchError(instance.d, phi.d, "number of cocycle values")
            if not phi.generates_lattice():
                phi = normalize_cocycle(phi)
        else:
            phi = eigencocycle(instance.A)
        if phi is None:
            logger.info("%s: %s", config.name, consts.NO_SKEW_PRODUCT_MESSAGE)
        return cls(instance, phi, config)

    def with_phi(self, phi: SkewCocycle) -> "SkewProduct":
        return SkewProduct(self.instance, phi, self.config, self.tower)

    def with_tower(self, tower: TowerSystem) -> "SkewProduct":
        return SkewProduct(self.instance, self.phi, self.config, tower)

    @property
    def name(self) -> str:
        return self.instance.name

    @property
    def d(self) -> int:
        return self.instance.d

    @property
    def m(self) -> int:
        return self.phi.m if self.phi is not None else 0

    def eigencocycles(self) -> Tuple[int, List[Tuple[int, ...]]]:
        return eigencocycles(self.instance.A)

    def require_phi(self) -> SkewCocycle:
        if self.phi is None:
            raise ValidationError(consts.NO_SKEW_PRODUCT_MESSAGE)
        return self.phi

    def is_periodic_type(self) -> bool:
        return self.phi is not None and check_periodic_type(self.instance.A, self.phi)

    def require_periodic_type(self) -> SkewCocycle:
        phi = self.require_phi()
        if not check_periodic_type(self.instance.A, phi):
            raise ValidationError(f"Cocycle {phi.to_json()} is not fixed by A^T = {self.instance.A.T.tolist()}")
        return phi

    @cached_property
    def diagram(self) -> BratteliDiagram:
        return build_diagram(self.tower)

    @cached_property
    def f(self) -> FloorCocycle:
        return FloorCocycle(self.diagram, self.require_phi())

    @cached_property
    def certificate(self) -> AperiodicityCertificate:
        phi = self.require_periodic_type()
        return amplify_for_common_prefix(self.instance.loop, phi, cap=self.config.amplification_cap)

    @cached_property
    def counting(self) -> LaurentMatrix:
        return level_counting_matrix(self.diagram, self.f)

    def counting_power(self, k: int) -> LaurentMatrix:
        """M^k, memoized and grown from the highest power computed so far"""
        if k < 0:
            raise ValueError(f"Negative power {k} of the counting matrix")
        with self._lock:
            power = self._counting_powers.get(k)
            if power is None:
                start = max((n for n in self._counting_powers if n <= k), default=0)
                power = self._counting_powers.get(start, LaurentMatrix.identity(self.d, self.f.m))
                for n in range(start + 1, k + 1):
                    power = power @ self.counting
                    self._counting_powers[n] = power
        return power

    def measure(self, parameter: MaharamParameter) -> MaharamMeasure:
        """Memoized per psi; safe to call from the concurrent grid workers"""
        with self._lock:
            measure = self._measures.get(parameter)
            if measure is None:
                measure = MaharamMeasure(self.diagram, self.f, parameter, counting=self.counting)
                self._measures[parameter] = measure
        return measure

    def grids(self) -> List[Tuple[float, float, int]]:
        """One "min:max:steps" grid per psi coordinate; a single grid is used on every axis"""
        grid = self.config.grid
        specs = [grid] if isinstance(grid, str) else list(grid or [])
        if len(specs) == 1:
            specs = specs * self.m
        if len(specs) != self.m:
            raise DimensionMismatchError(self.m, len(specs), "number of grid axes")
        return [parse_grid(spec) for spec in specs]

    def parameters(self) -> List[MaharamParameter]:
        if self.config.psi:
            return [MaharamParameter(psi) for psi in self.config.psi]
        return [MaharamParameter.zero(self.m)]

    def to_json(self) -> dict:
        return {
            **self.instance.to_json(),
            "m": self.m,
            "phi": self.phi.to_json() if self.phi is not None else None,
        }
