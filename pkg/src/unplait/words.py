"""Braid words over Artin generators and the permutations they induce.

A word is a sequence of signed generator letters on a fixed strand count n.
Words are written left to right, but strands are tracked from the right-hand
end: the strand "starting at position p" enters the word at its rightmost
letter.  In a positive letter the strand arriving from position j+1 passes in
front of the one from position j; in a negative letter the left strand passes
in front.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Letter",
    "BraidWord",
    "Permutation",
    "compose",
    "inverse",
    "power",
    "free_reduce",
    "permutation",
    "is_pure",
    "writhe",
]


@dataclass(frozen=True, slots=True)
class Letter:
    """A single Artin generator sigma_index (sign +1) or its inverse (sign -1)."""

    index: int
    sign: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"generator index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign}")

    @classmethod
    def from_int(cls, value: int) -> Letter:
        """Signed-integer form: k > 0 is sigma_k, k < 0 is the inverse of sigma_|k|."""
        if value == 0:
            raise ValueError("0 does not name a generator")
        return cls(abs(value), 1 if value > 0 else -1)

    def to_int(self) -> int:
        return self.index * self.sign

    def inverse(self) -> Letter:
        return Letter(self.index, -self.sign)


@dataclass(frozen=True, slots=True)
class BraidWord:
    """A braid on ``n`` strands given as a plain sequence of letters.

    The empty sequence is the identity braid.  No simplification is ever
    applied implicitly; two words may be distinct while equal as braids
    (use :func:`unplait.garside.equals` for braid equality).
    """

    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter.index > self.n - 1:
                raise ValueError(
                    f"letter index {letter.index} out of range for {self.n} strands"
                )

    @classmethod
    def from_ints(cls, n: int, values: Iterable[int]) -> BraidWord:
        return cls(n, tuple(Letter.from_int(v) for v in values))

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n)

    def to_ints(self) -> tuple[int, ...]:
        return tuple(letter.to_int() for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)


@dataclass(frozen=True, slots=True)
class Permutation:
    """Start-to-end position map: ``image[p-1]`` is where the strand starting
    at position p ends up."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "image", tuple(self.image))
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"{self.image!r} is not a permutation of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.image)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.image))

    def __getitem__(self, start: int) -> int:
        """End position of the strand starting at 1-based position ``start``."""
        return self.image[start - 1]


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    """Concatenate two words on the same strand count (no simplification)."""
    if a.n != b.n:
        raise ValueError(f"strand counts differ: {a.n} vs {b.n}")
    return BraidWord(a.n, a.letters + b.letters)


def inverse(b: BraidWord) -> BraidWord:
    """Reverse the word and flip every sign."""
    return BraidWord(b.n, tuple(l.inverse() for l in reversed(b.letters)))


def power(b: BraidWord, exponent: int) -> BraidWord:
    """Repeat a word; a negative exponent repeats the inverse word."""
    base = b.letters if exponent >= 0 else inverse(b).letters
    return BraidWord(b.n, base * abs(exponent))


def free_reduce(b: BraidWord) -> BraidWord:
    """Cancel adjacent mutually-inverse letters until none remain."""
    out: list[Letter] = []
    for letter in b.letters:
        if out and out[-1].index == letter.index and out[-1].sign == -letter.sign:
            out.pop()
        else:
            out.append(letter)
    return BraidWord(b.n, tuple(out))


def permutation(b: BraidWord) -> Permutation:
    """The strand start-to-end map, applying letters rightmost first.

    sigma_j (either sign) swaps the strands currently at positions j and j+1.
    """
    occupant = list(range(b.n + 1))  # occupant[position] = strand label, 1-based
    for letter in reversed(b.letters):
        j = letter.index
        occupant[j], occupant[j + 1] = occupant[j + 1], occupant[j]
    image = [0] * b.n
    for position in range(1, b.n + 1):
        image[occupant[position] - 1] = position
    return Permutation(tuple(image))


def is_pure(b: BraidWord) -> bool:
    """True iff every strand returns to its starting position."""
    return permutation(b).is_identity()


def writhe(b: BraidWord) -> int:
    """Exponent sum; invariant under both Artin relations."""
    return sum(letter.sign for letter in b.letters)
