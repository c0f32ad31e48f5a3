import logging
from typing import Dict, Optional

from dataclasses import dataclass, field

from skew_infra.algebra import IntegerMatrix
from skew_infra.iet.combinatorics import IetCombinatorics
from skew_infra.iet.lengths import LengthData, pf_lengths
from skew_infra.iet.rauzy import RauzyLoop, TowerSystem, amplify_to_positive, compose_loop

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RauzyInstance:
    """
    A periodic combinatorial datum: the loop (already amplified to a positive matrix),
    its one-period tower system and the Perron-Frobenius lengths.
    """

    name: str
    base_loop: RauzyLoop
    power: int
    tower: TowerSystem
    lengths: LengthData
    _towers: Dict[int, TowerSystem] = field(default_factory=dict, repr=False)

    @classmethod
    def build(cls, name: str, loop: RauzyLoop) -> "RauzyInstance":
        power, _, tower = amplify_to_positive(loop)
        lengths = pf_lengths(tower.A)
        instance = cls(name=name, base_loop=loop, power=power, tower=tower, lengths=lengths)
        instance._towers[1] = tower
        logger.info(
            "Instance %s: d=%d, loop %r x %d, q=%s", name, instance.d, loop.letters, power, list(tower.q)
        )
        return instance

    @property
    def combinatorics(self) -> IetCombinatorics:
        return self.base_loop.start

    @property
    def loop(self) -> RauzyLoop:
        return self.base_loop.repeated(self.power)

    @property
    def d(self) -> int:
        return self.base_loop.d

    @property
    def A(self) -> IntegerMatrix:
        return self.tower.A

    def tower_at(self, repeat: int) -> TowerSystem:
        """Tower system after `repeat` periods, composed from the Rauzy moves"""
        tower: Optional[TowerSystem] = self._towers.get(repeat)
        if tower is None:
            tower = compose_loop(self.loop, repeat)
            self._towers[repeat] = tower
        return tower

    def to_json(self) -> dict:
        return {
            "name": self.name,
            **self.combinatorics.to_json(),
            "loop": self.base_loop.to_json(),
            "power": self.power,
            "positive": self.A.is_positive(),
            **self.tower.to_json(),
            **self.lengths.to_json(),
        }
