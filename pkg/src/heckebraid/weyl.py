"""
Weyl-group elements as integer lattice automorphisms.

An element stores its matrix (action on simple-root coordinates), the inverse
matrix and its length. The matrix is the canonical form: equality and hashing
go through it. The lexicographically least reduced word is computed on demand
by repeatedly stripping the smallest left descent.
"""
from __future__ import annotations

import functools
import re
from collections import deque
from typing import Iterable, Sequence

from .rootdata import CartanDatum, Matrix, generate_roots, reflection_matrix

MAX_ELEMENTS = 10**6


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _is_negative(vec: Iterable[int]) -> bool:
    # roots are sign-coherent, so the first nonzero coordinate decides
    for x in vec:
        if x:
            return x < 0
    raise ValueError("zero vector is not a root")


class WeylElement:
    __slots__ = ("cartan", "matrix", "inv_matrix", "length", "_hash", "_word")

    def __init__(self, cartan: CartanDatum, matrix: Matrix, inv_matrix: Matrix, length: int | None = None):
        self.cartan = cartan
        self.matrix = matrix
        self.inv_matrix = inv_matrix
        if length is None:
            length = sum(1 for r in generate_roots(cartan).positive_roots if _is_negative(self.apply(r)))
        self.length = length
        self._hash = hash(matrix)
        self._word: tuple[int, ...] | None = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self._hash == other._hash and self.matrix == other.matrix and self.cartan == other.cartan

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"WeylElement({self.cartan.label}, [{format_word(self.word)}])"

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * v for a, v in zip(row, vec)) for row in self.matrix)

    def _check(self, other: WeylElement) -> None:
        if self.cartan != other.cartan:
            raise ValueError(f"mismatched Cartan data: {self.cartan.label} vs {other.cartan.label}")

    def __mul__(self, other: WeylElement) -> WeylElement:
        self._check(other)
        return WeylElement(
            self.cartan, _matmul(self.matrix, other.matrix), _matmul(other.inv_matrix, self.inv_matrix)
        )

    def inverse(self) -> WeylElement:
        return WeylElement(self.cartan, self.inv_matrix, self.matrix, self.length)

    def is_identity(self) -> bool:
        return self.length == 0

    def is_left_descent(self, i: int) -> bool:
        """l(s_i w) < l(w), i.e. w^-1(alpha_i) < 0 (``i`` 0-based)."""
        return _is_negative(row[i] for row in self.inv_matrix)

    def is_right_descent(self, i: int) -> bool:
        """l(w s_i) < l(w), i.e. w(alpha_i) < 0 (``i`` 0-based)."""
        return _is_negative(row[i] for row in self.matrix)

    def left_mul_gen(self, i: int) -> WeylElement:
        """s_i * w for 0-based ``i``: a row operation on the matrix."""
        a = self.cartan.cartan_matrix[i]
        n = self.cartan.rank
        m = self.matrix
        new_row = tuple(m[i][col] - sum(a[j] * m[j][col] for j in range(n)) for col in range(n))
        mat = m[:i] + (new_row,) + m[i + 1:]
        inv = tuple(
            tuple(row[col] - a[col] * row[i] for col in range(n)) for row in self.inv_matrix
        )
        step = -1 if self.is_left_descent(i) else 1
        return WeylElement(self.cartan, mat, inv, self.length + step)

    def right_mul_gen(self, i: int) -> WeylElement:
        """w * s_i for 0-based ``i``."""
        return self.inverse().left_mul_gen(i).inverse()

    @property
    def word(self) -> tuple[int, ...]:
        """Lexicographically least reduced word, 1-based generator indices."""
        if self._word is None:
            letters = []
            w = self
            n = self.cartan.rank
            while w.length:
                i = next(i for i in range(n) if w.is_left_descent(i))
                letters.append(i + 1)
                w = w.left_mul_gen(i)
            self._word = tuple(letters)
        return self._word

    def descents(self, side: str = "left") -> frozenset[int]:
        """1-based descent set on the given side."""
        test = {"left": self.is_left_descent, "right": self.is_right_descent}[side]
        return frozenset(i + 1 for i in range(self.cartan.rank) if test(i))


def length(w: WeylElement) -> int:
    return w.length


def descents(w: WeylElement, side: str = "left") -> frozenset[int]:
    return w.descents(side)


def inverse(w: WeylElement) -> WeylElement:
    return w.inverse()


def identity(c: CartanDatum) -> WeylElement:
    e = _identity(c.rank)
    return WeylElement(c, e, e, 0)


def from_word(c: CartanDatum, word: Sequence[int] | str) -> WeylElement:
    """
    Group element of a (possibly non-reduced) word with 1-based letters.

    >>> from heckebraid.rootdata import build_cartan
    >>> from_word(build_cartan("A2"), "1 2 1 2").word
    (2, 1)
    """
    if isinstance(word, str):
        word = parse_word(word)
    w = identity(c)
    for i in word:
        if not 1 <= i <= c.rank:
            raise IndexError(f"generator index {i} out of range 1..{c.rank}")
    # build right to left so each step is a cheap row operation
    for i in reversed(word):
        w = w.left_mul_gen(i - 1)
    return w


def simple_reflection(c: CartanDatum, i: int) -> WeylElement:
    m = reflection_matrix(c, i)
    return WeylElement(c, m, m, 1)


_WORD_SPLIT = re.compile(r"[\s,]+")


def parse_word(text: str) -> tuple[int, ...]:
    """Comma/space-separated 1-based indices; the empty string is the identity."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for tok in _WORD_SPLIT.split(text):
        if not tok:
            continue
        if not tok.isdigit():
            raise ValueError(f"bad generator token {tok!r} in word {text!r}")
        out.append(int(tok))
    return tuple(out)


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(i) for i in word)


def _sort_key(w: WeylElement) -> tuple:
    return (w.length, w.word)


def _orbit_size(a: Sequence[Sequence[int]], k: int) -> int:
    # orbit of the fundamental weight omega_k, in fundamental-weight coordinates:
    # s_i(lam)_j = lam_j - lam_i * a[j][i]
    n = len(a)
    start = tuple(int(j == k) for j in range(n))
    seen = {start}
    queue = deque([start])
    while queue:
        lam = queue.popleft()
        for i in range(n):
            if lam[i]:
                mu = tuple(lam[j] - lam[i] * a[j][i] for j in range(n))
                if mu not in seen:
                    seen.add(mu)
                    queue.append(mu)
    return len(seen)


def group_order(c: CartanDatum) -> int:
    """
    |W| without enumerating W: the stabiliser of omega_n is the parabolic
    subgroup on the first n - 1 generators, so |W| is a product of orbit sizes.

    >>> from heckebraid.rootdata import build_cartan
    >>> group_order(build_cartan("E8"))
    696729600
    """
    a = [list(row) for row in c.cartan_matrix]
    order = 1
    while a:
        order *= _orbit_size(a, len(a) - 1)
        a = [row[:-1] for row in a[:-1]]
    return order


@functools.cache
def all_elements(c: CartanDatum, cap: int = MAX_ELEMENTS) -> tuple[WeylElement, ...]:
    """Every element of W, sorted by (length, lex-least reduced word)."""
    order = group_order(c)
    if order > cap:
        raise OverflowError(f"Weyl group of {c.label} has {order} elements, over the enumeration cap {cap}")
    e = identity(c)
    seen = {e}
    queue = deque([e])
    while queue:
        w = queue.popleft()
        for i in range(c.rank):
            if w.is_right_descent(i):
                continue
            v = w.right_mul_gen(i)
            if v not in seen:
                seen.add(v)
                if len(seen) > cap:
                    raise OverflowError(f"Weyl group of {c.label} exceeds the enumeration cap {cap}")
                queue.append(v)
    return tuple(sorted(seen, key=_sort_key))


@functools.cache
def longest_element(c: CartanDatum) -> WeylElement:
    w = identity(c)
    while True:
        ascents = [i for i in range(c.rank) if not w.is_right_descent(i)]
        if not ascents:
            return w
        w = w.right_mul_gen(ascents[0])


@functools.lru_cache(maxsize=1 << 20)
def bruhat_leq(y: WeylElement, w: WeylElement) -> bool:
    """
    Bruhat order by the lifting property: with s a left descent of w,
    y <= w iff (sy <= sw when s is a descent of y, else y <= sw).
    """
    y._check(w)
    if y.length > w.length:
        return False
    if w.length == 0:
        return y.length == 0
    if y.length == w.length:
        return y == w
    s = next(i for i in range(w.cartan.rank) if w.is_left_descent(i))
    sw = w.left_mul_gen(s)
    if y.is_left_descent(s):
        return bruhat_leq(y.left_mul_gen(s), sw)
    return bruhat_leq(y, sw)


class WeylGroup:
    """Convenience bundle of the per-datum tables."""

    def __init__(self, cartan: CartanDatum):
        self.cartan = cartan

    @property
    def rank(self) -> int:
        return self.cartan.rank

    def identity(self) -> WeylElement:
        return identity(self.cartan)

    def gen(self, i: int) -> WeylElement:
        return simple_reflection(self.cartan, i)

    def from_word(self, word: Sequence[int] | str) -> WeylElement:
        return from_word(self.cartan, word)

    def elements(self) -> tuple[WeylElement, ...]:
        return all_elements(self.cartan)

    def longest_element(self) -> WeylElement:
        return longest_element(self.cartan)

    def order(self) -> int:
        return len(self.elements())

    def __iter__(self):
        return iter(self.elements())

    def __len__(self) -> int:
        return self.order()
