from typing import Sequence, Tuple

from dataclasses import dataclass

from skew_infra.algebra import IntegerMatrix
from skew_infra.consts import Move
from skew_infra.errors import ReducibleCombinatoricsError, ValidationError

Words = Tuple[Tuple[int, ...], ...]


def as_move(move) -> Move:
    if isinstance(move, Move):
        return move
    try:
        return Move(str(move).strip().lower())
    except ValueError:
        raise ValidationError(f"Invalid Rauzy move {move!r}, expected 't' or 'b'") from None


def rauzy_rows(top: Tuple[int, ...], bottom: Tuple[int, ...], move: Move) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Rows after one Rauzy move; the loser leaves the end of its row and lands right after the winner"""
    alpha, beta = top[-1], bottom[-1]
    if move is Move.TOP:
        rest = list(bottom[:-1])
        rest.insert(rest.index(alpha) + 1, beta)
        return top, tuple(rest)
    rest = list(top[:-1])
    rest.insert(rest.index(beta) + 1, alpha)
    return tuple(rest), bottom


@dataclass(frozen=True)
class WordUpdate:
    """
    Substitution performed by one Rauzy move.
    The loser's tower is rebuilt as the tower of the bottom-row last label stacked under the
    tower of the top-row last label; the winner's tower is unchanged.
    """

    move: Move
    winner: int
    loser: int
    first: int
    second: int

    def apply(self, words: Words) -> Words:
        updated = list(words)
        updated[self.loser - 1] = words[self.first - 1] + words[self.second - 1]
        return tuple(updated)

    def matrix(self, d: int) -> IntegerMatrix:
        """Elementary factor E with A_new = A_old * E"""
        rows = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
        rows[self.winner - 1][self.loser - 1] = 1
        return IntegerMatrix(rows)


@dataclass(frozen=True)
class IetCombinatorics:
    top: Tuple[int, ...]
    bottom: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(int(x) for x in self.top))
        object.__setattr__(self, "bottom", tuple(int(x) for x in self.bottom))
        d = len(self.top)
        if d < 2:
            raise ValidationError(f"Alphabet size {d} is degenerate: an exchange needs at least two intervals")
        labels = list(range(1, d + 1))
        if sorted(self.top) != labels or sorted(self.bottom) != labels:
            raise ValidationError(f"Rows {list(self.top)}/{list(self.bottom)} are not permutations of 1..{d}")
        for k in range(1, d):
            if set(self.top[:k]) == set(self.bottom[:k]):
                raise ReducibleCombinatoricsError(self.top, self.bottom, k)

    @classmethod
    def from_rows(cls, top: Sequence[int], bottom: Sequence[int]) -> "IetCombinatorics":
        return cls(tuple(top), tuple(bottom))

    @property
    def d(self) -> int:
        return len(self.top)

    @property
    def labels(self) -> Tuple[int, ...]:
        return tuple(range(1, self.d + 1))

    def winner(self, move: Move) -> int:
        return self.top[-1] if as_move(move) is Move.TOP else self.bottom[-1]

    def loser(self, move: Move) -> int:
        return self.bottom[-1] if as_move(move) is Move.TOP else self.top[-1]

    def rauzy_step(self, move) -> Tuple["IetCombinatorics", WordUpdate]:
        move = as_move(move)
        alpha, beta = self.top[-1], self.bottom[-1]
        top, bottom = rauzy_rows(self.top, self.bottom, move)
        winner, loser = (alpha, beta) if move is Move.TOP else (beta, alpha)
        return IetCombinatorics(top, bottom), WordUpdate(move, winner, loser, first=beta, second=alpha)

    def to_json(self) -> dict:
        return {"d": self.d, "top": list(self.top), "bottom": list(self.bottom)}

    def __str__(self):
        return " ".join(map(str, self.top)) + " / " + " ".join(map(str, self.bottom))
