"""
Braid words and their images in the Hecke algebra.

sigma_i maps to t_{s_i} and sigma_i^-1 to t_{s_i}^-1. No braid normal form is
attempted; relations are checked in the Hecke image.
"""
from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Sequence

from .hecke import HeckeElement, _right_mul_simple, _right_mul_simple_inverse, unit
from .rootdata import CartanDatum
from .weyl import WeylElement

MAX_LETTERS = 10_000

Letter = tuple[int, int]


@dataclasses.dataclass(frozen=True)
class BraidWord:
    cartan: CartanDatum
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for i, sign in self.letters:
            if not 1 <= i <= self.cartan.rank:
                raise IndexError(f"generator index {i} out of range 1..{self.cartan.rank}")
            if sign not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {sign}")

    @classmethod
    def parse(cls, cartan: CartanDatum, text: str) -> BraidWord:
        """Whitespace/comma separated tokens ``i`` or ``-i``: ``"1 2 -1"``."""
        letters = []
        for tok in re.split(r"[\s,]+", text.strip()):
            if not tok:
                continue
            m = re.fullmatch(r"(-?)([0-9]+)", tok)
            if not m:
                raise ValueError(f"bad braid token {tok!r}")
            letters.append((int(m.group(2)), -1 if m.group(1) else 1))
        if len(letters) > MAX_LETTERS:
            raise ValueError(f"braid word has {len(letters)} letters, cap is {MAX_LETTERS}")
        return cls(cartan, tuple(letters))

    def __str__(self) -> str:
        return " ".join(str(i * sign) for i, sign in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.cartan != other.cartan:
            raise ValueError("mismatched Cartan data")
        return BraidWord(self.cartan, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.cartan, tuple((i, -sign) for i, sign in reversed(self.letters)))

    def reverse(self) -> BraidWord:
        return BraidWord(self.cartan, tuple(reversed(self.letters)))


def braid_word(cartan: CartanDatum, letters: Iterable[int]) -> BraidWord:
    """Build from signed integers: ``[1, -2]`` is sigma_1 sigma_2^-1."""
    return BraidWord(cartan, tuple((abs(x), 1 if x > 0 else -1) for x in letters))


def free_reduce(b: BraidWord) -> BraidWord:
    stack: list[Letter] = []
    for i, sign in b.letters:
        if stack and stack[-1] == (i, -sign):
            stack.pop()
        else:
            stack.append((i, sign))
    return BraidWord(b.cartan, tuple(stack))


def positive_lift(w: WeylElement) -> BraidWord:
    """All-positive braid word along the lex-least reduced word of ``w``."""
    return BraidWord(w.cartan, tuple((i, 1) for i in w.word))


def hecke_image(b: BraidWord) -> HeckeElement:
    support = unit(b.cartan).support
    for i, sign in b.letters:
        if sign > 0:
            support = _right_mul_simple(support, i - 1)
        else:
            support = _right_mul_simple_inverse(support, i - 1)
    return HeckeElement._raw(b.cartan, support)


def alternating_word(c: CartanDatum, i: int, j: int, m: int) -> BraidWord:
    return BraidWord(c, tuple(((i, j)[k % 2], 1) for k in range(m)))


@dataclasses.dataclass(frozen=True)
class BraidRelationReport:
    i: int
    j: int
    m: int
    ok: bool
    lhs: HeckeElement | None = None
    rhs: HeckeElement | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_braid_relation(c: CartanDatum, i: int, j: int) -> BraidRelationReport:
    """Compare the Hecke images of sigma_i sigma_j ... and sigma_j sigma_i ... with m(i, j) letters each."""
    if i == j:
        raise ValueError("braid relation needs two distinct generators")
    m = c.m(i, j)
    lhs = hecke_image(alternating_word(c, i, j, m))
    rhs = hecke_image(alternating_word(c, j, i, m))
    if lhs == rhs:
        return BraidRelationReport(i, j, m, True)
    return BraidRelationReport(i, j, m, False, lhs, rhs)


def reduced_word_images(words: Sequence[Sequence[int]], c: CartanDatum) -> list[HeckeElement]:
    return [hecke_image(BraidWord(c, tuple((i, 1) for i in word))) for word in words]
