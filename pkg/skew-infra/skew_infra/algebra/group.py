from typing import Iterable, Sequence, Tuple

from dataclasses import dataclass

from skew_infra.errors import DimensionMismatchError


@dataclass(frozen=True, order=True)
class GroupElement:
    """An element of the fiber group Z^m, m >= 0"""

    coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def zero(cls, m: int) -> "GroupElement":
        return cls((0,) * m)

    @classmethod
    def unit(cls, m: int, i: int) -> "GroupElement":
        return cls(tuple(1 if k == i else 0 for k in range(m)))

    @classmethod
    def of(cls, *coords: int) -> "GroupElement":
        return cls(coords)

    @property
    def m(self) -> int:
        return len(self.coords)

    def _check(self, other: "GroupElement"):
        if other.m != self.m:
            raise DimensionMismatchError(self.m, other.m, "fiber dimension")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        self._check(other)
        return GroupElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        self._check(other)
        return GroupElement(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(tuple(-a for a in self.coords))

    def __mul__(self, scalar: int) -> "GroupElement":
        return GroupElement(tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def sup_norm(self) -> int:
        return max((abs(c) for c in self.coords), default=0)

    def pairing(self, psi: Sequence[float]) -> float:
        """psi(a) for a homomorphism psi: Z^m -> R given on the unit vectors"""
        if len(psi) != self.m:
            raise DimensionMismatchError(self.m, len(psi), "parameter dimension")
        return float(sum(p * a for p, a in zip(psi, self.coords)))

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def group_sum(elements: Iterable[GroupElement], m: int) -> GroupElement:
    total = GroupElement.zero(m)
    for element in elements:
        total = total + element
    return total
