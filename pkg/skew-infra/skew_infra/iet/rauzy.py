import logging
from functools import cached_property
from typing import Dict, Iterator, Sequence, Set, Tuple

from dataclasses import dataclass

from skew_infra import consts
from skew_infra.algebra import IntegerMatrix, smallest_positive_power
from skew_infra.consts import Move
from skew_infra.errors import LoopError, NotPositiveError, ValidationError
from skew_infra.iet.combinatorics import IetCombinatorics, WordUpdate, Words, as_move

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RauzyLoop:
    start: IetCombinatorics
    steps: Tuple[Move, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(as_move(step) for step in self.steps))
        end = self.endpoint()
        if end != self.start:
            raise LoopError(f"Steps {self.letters!r} lead from {self.start} to {end}, not back to the start")

    @classmethod
    def from_letters(cls, start: IetCombinatorics, letters: Sequence[str]) -> "RauzyLoop":
        return cls(start, tuple(as_move(letter) for letter in letters))

    def walk(self) -> Iterator[Tuple[IetCombinatorics, Move, WordUpdate]]:
        vertex = self.start
        for move in self.steps:
            following, update = vertex.rauzy_step(move)
            yield vertex, move, update
            vertex = following

    def endpoint(self) -> IetCombinatorics:
        vertex = self.start
        for move in self.steps:
            vertex, _ = vertex.rauzy_step(move)
        return vertex

    @property
    def d(self) -> int:
        return self.start.d

    @property
    def letters(self) -> str:
        return "".join(step.value for step in self.steps)

    def winners(self) -> Set[int]:
        return {update.winner for _, _, update in self.walk()}

    def is_complete(self) -> bool:
        """Every label wins at least once along the loop"""
        return self.winners() == set(self.start.labels)

    def repeated(self, times: int) -> "RauzyLoop":
        return RauzyLoop(self.start, self.steps * times)

    def matrix(self) -> IntegerMatrix:
        """Product of the elementary factors along the loop"""
        result = IntegerMatrix.identity(self.d)
        for _, _, update in self.walk():
            result = result @ update.matrix(self.d)
        return result

    def __len__(self):
        return len(self.steps)

    def to_json(self) -> list:
        return [step.value for step in self.steps]


@dataclass(frozen=True)
class TowerSystem:
    """Tower words w_j over the labels 1..d; words[j - 1] is the floor-label sequence of tower j"""

    words: Words

    def __post_init__(self):
        words = tuple(tuple(int(x) for x in word) for word in self.words)
        object.__setattr__(self, "words", words)
        d = len(words)
        if d < 1:
            raise ValidationError("A tower system needs at least one tower")
        for j, word in enumerate(words, start=1):
            if not word:
                raise ValidationError(f"Tower {j} has no floors")
            if any(not 1 <= x <= d for x in word):
                raise ValidationError(f"Tower {j} uses labels outside 1..{d}: {word}")

    @classmethod
    def identity(cls, d: int) -> "TowerSystem":
        return cls(tuple((j,) for j in range(1, d + 1)))

    @property
    def d(self) -> int:
        return len(self.words)

    def word(self, j: int) -> Tuple[int, ...]:
        return self.words[j - 1]

    def letter(self, j: int, l: int) -> int:
        return self.words[j - 1][l]

    @cached_property
    def q(self) -> Tuple[int, ...]:
        return tuple(len(word) for word in self.words)

    @cached_property
    def A(self) -> IntegerMatrix:
        return IntegerMatrix(
            [[word.count(i) for word in self.words] for i in range(1, self.d + 1)]
        )

    @cached_property
    def _heights(self) -> Dict[int, Tuple[int, ...]]:
        return {0: (1,) * self.d}

    def heights(self, level: int) -> Tuple[int, ...]:
        """Heights of the towers after `level` periods: H_k = A^T H_{k-1}, H_0 = 1"""
        cache = self._heights
        top = max(cache)
        while top < level:
            previous = cache[top]
            cache[top + 1] = tuple(sum(previous[c - 1] for c in word) for word in self.words)
            top += 1
        return cache[level]

    def substitute(self, inner: "TowerSystem") -> "TowerSystem":
        """Towers of `self` expressed in the letters of `inner` (self is the outer period)"""
        return TowerSystem(
            tuple(tuple(x for c in word for x in inner.word(c)) for word in self.words)
        )

    def with_swapped_floors(self, j: int, first: int, second: int) -> "TowerSystem":
        word = list(self.word(j))
        word[first], word[second] = word[second], word[first]
        words = list(self.words)
        words[j - 1] = tuple(word)
        return TowerSystem(tuple(words))

    def to_json(self) -> dict:
        return {"q": list(self.q), "words": [list(w) for w in self.words], "A": self.A.tolist()}


def compose_loop(loop: RauzyLoop, repeat: int = 1) -> TowerSystem:
    if repeat < 1:
        raise ValueError(f"Loop repetition must be positive, got {repeat}")
    if loop.endpoint() != loop.start:
        raise LoopError(f"Loop {loop.letters!r} does not return to {loop.start}")

    updates = [update for _, _, update in loop.walk()]
    words = TowerSystem.identity(loop.d).words
    for _ in range(repeat):
        for update in updates:
            words = update.apply(words)
    return TowerSystem(words)


def amplification_bound(d: int) -> int:
    return consts.AMPLIFICATION_FACTOR * d ** 2


def amplify_to_positive(loop: RauzyLoop) -> Tuple[int, RauzyLoop, TowerSystem]:
    """Smallest power of the loop whose matrix is strictly positive"""
    bound = amplification_bound(loop.d)
    matrix = compose_loop(loop).A
    power = smallest_positive_power(matrix, bound)
    if power is None:
        raise NotPositiveError(
            f"Loop {loop.letters!r} at {loop.start} is unsuitable: no power up to {bound} has a positive "
            f"matrix (A = {matrix.tolist()}); use a loop in which every label wins",
            power=None,
        )
    if power > 1:
        logger.info("Amplifying loop %r to its %d-th power to reach a positive matrix", loop.letters, power)
    return power, loop.repeated(power), compose_loop(loop, power)


def iterate_substitution(tower: TowerSystem, letter: int, depth: int) -> Iterator[int]:
    """Lazily stream the word obtained by substituting `letter` through `depth` periods"""
    stack = [(depth, iter((letter,)))]
    while stack:
        level, letters = stack[-1]
        symbol = next(letters, None)
        if symbol is None:
            stack.pop()
        elif level == 0:
            yield symbol
        else:
            stack.append((level - 1, iter(tower.word(symbol))))
