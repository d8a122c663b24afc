"""
Finite-type Cartan data and root systems.

All lattice vectors live in simple-root coordinates. The Cartan matrix entry
``a[i][j]`` is the pairing <alpha_j, alpha_i^vee>, so the simple reflection

    s_i(lam) = lam - <lam, alpha_i^vee> alpha_i

only changes coordinate ``i`` of ``lam``: it subtracts ``sum_j a[i][j] * lam[j]``.

Generator indices are 1-based at every public surface (words, CLI) and
0-based internally.
"""
from __future__ import annotations

import dataclasses
import functools
import json
import re
from collections import deque
from fractions import Fraction
from typing import Sequence

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

MAX_ROOTS = 10_000

_LABEL_RE = re.compile(r"^[A-G][1-9][0-9]*$")

# a_ij * a_ji -> order of s_i s_j
_COXETER_FROM_PRODUCT = {0: 2, 1: 3, 2: 4, 3: 6}


class CartanError(ValueError):
    """Raised for malformed or non-finite-type Cartan data."""


@dataclasses.dataclass(frozen=True)
class CartanDatum:
    label: str
    cartan_matrix: Matrix
    coxeter_exponents: Matrix = dataclasses.field(compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @property
    def key(self) -> str:
        """Stable identifier used for cache records; includes the matrix for custom data."""
        if self.label != "custom":
            return self.label
        return "custom:" + json.dumps([list(r) for r in self.cartan_matrix], separators=(",", ":"))

    def m(self, i: int, j: int) -> int:
        """Order of s_i s_j, 1-based indices."""
        return self.coxeter_exponents[i - 1][j - 1]

    def pairing(self, vec: Sequence[int], i: int) -> int:
        """<vec, alpha_i^vee> for a root-lattice vector and 0-based ``i``."""
        row = self.cartan_matrix[i]
        return sum(a * v for a, v in zip(row, vec))

    def __str__(self) -> str:
        return self.label


def _standard_matrix(letter: str, n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if letter == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif letter in "BC":
        if n < 2:
            raise CartanError(f"type {letter} needs rank >= 2, got {n}")
        for i in range(n - 2):
            link(i, i + 1)
        # alpha_n short in B_n, long in C_n
        if letter == "B":
            link(n - 2, n - 1, -1, -2)
        else:
            link(n - 2, n - 1, -2, -1)
    elif letter == "D":
        if n < 4:
            raise CartanError(f"type D needs rank >= 4, got {n}")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        if n not in (6, 7, 8):
            raise CartanError(f"type E needs rank 6, 7 or 8, got {n}")
        # Bourbaki numbering: 1-3-4-5-6(-7-8), 2 attached to 4
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        if n != 4:
            raise CartanError(f"type F needs rank 4, got {n}")
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif letter == "G":
        if n != 2:
            raise CartanError(f"type G needs rank 2, got {n}")
        # alpha_1 short
        link(0, 1, -3, -1)
    else:  # pragma: no cover - regex excludes this
        raise CartanError(f"unknown type letter {letter!r}")
    return a


def _symmetrizer(a: list[list[int]]) -> list[Fraction]:
    """Positive d with d_i a_ij = d_j a_ji, one connected component at a time."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j == i or a[i][j] == 0:
                    continue
                dj = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = dj
                    queue.append(j)
                elif d[j] != dj:
                    raise CartanError("Cartan matrix is not symmetrizable")
    return d  # type: ignore[return-value]


def _leading_minors(m: list[list[Fraction]]) -> list[Fraction]:
    """All leading principal minors via fraction-exact Gaussian elimination."""
    n = len(m)
    work = [row[:] for row in m]
    minors = []
    det = Fraction(1)
    for k in range(n):
        pivot = work[k][k]
        det *= pivot
        minors.append(det)
        if pivot == 0:
            # remaining minors are not needed once one fails
            break
        for i in range(k + 1, n):
            factor = work[i][k] / pivot
            if factor:
                for j in range(k, n):
                    work[i][j] -= factor * work[k][j]
    return minors


def _validate(a: list[list[int]]) -> None:
    n = len(a)
    if n == 0:
        raise CartanError("rank must be >= 1")
    for row in a:
        if len(row) != n:
            raise CartanError("Cartan matrix must be square")
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise CartanError(f"Cartan matrix entries must be integers, got {x!r}")
    for i in range(n):
        if a[i][i] != 2:
            raise CartanError(f"diagonal entry a[{i + 1}][{i + 1}] = {a[i][i]}, expected 2")
        for j in range(n):
            if i == j:
                continue
            if a[i][j] > 0:
                raise CartanError(f"off-diagonal entry a[{i + 1}][{j + 1}] = {a[i][j]} is positive")
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise CartanError(f"a[{i + 1}][{j + 1}] and a[{j + 1}][{i + 1}] must vanish together")
    d = _symmetrizer(a)
    sym = [[d[i] * a[i][j] for j in range(n)] for i in range(n)]
    for k, minor in enumerate(_leading_minors(sym), start=1):
        if minor <= 0:
            raise CartanError(
                f"not of finite type: leading principal minor of order {k} of the "
                f"symmetrized matrix is {minor} (must be > 0)"
            )
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] * a[j][i] not in _COXETER_FROM_PRODUCT:
                raise CartanError(f"a[{i + 1}][{j + 1}] * a[{j + 1}][{i + 1}] = {a[i][j] * a[j][i]} not in 0..3")


def build_cartan(spec: str | Sequence[Sequence[int]]) -> CartanDatum:
    """
    Build a validated Cartan datum from a type label such as ``"B3"``, a JSON
    matrix string, or a nested integer sequence.

    >>> build_cartan("A2").cartan_matrix
    ((2, -1), (-1, 2))
    >>> build_cartan("G2").m(1, 2)
    6
    """
    if isinstance(spec, str):
        text = spec.strip()
        if _LABEL_RE.match(text):
            label = text
            matrix = _standard_matrix(text[0], int(text[1:]))
        elif text.startswith("["):
            try:
                matrix = json.loads(text)
            except json.JSONDecodeError as exc:
                raise CartanError(f"cannot parse Cartan matrix JSON: {exc}") from None
            label = "custom"
        else:
            raise CartanError(f"bad Cartan spec {spec!r}: expected e.g. 'A3' or a JSON integer matrix")
    else:
        matrix = [list(row) for row in spec]
        label = "custom"
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise CartanError("Cartan matrix must be a list of rows")
    _validate(matrix)
    n = len(matrix)
    mtab = tuple(
        tuple(1 if i == j else _COXETER_FROM_PRODUCT[matrix[i][j] * matrix[j][i]] for j in range(n))
        for i in range(n)
    )
    return CartanDatum(label, tuple(tuple(r) for r in matrix), mtab)


def reflect(c: CartanDatum, i: int, vec: Sequence[int]) -> Vector:
    """Apply s_i (0-based) to a root-lattice vector."""
    k = c.pairing(vec, i)
    if k == 0:
        return tuple(vec)
    out = list(vec)
    out[i] -= k
    return tuple(out)


def reflection_matrix(c: CartanDatum, i: int) -> Matrix:
    """
    Integer matrix of s_i acting on column vectors in simple-root coordinates (``i`` 1-based).

    >>> reflection_matrix(build_cartan("A1"), 1)
    ((-1,),)
    """
    if not 1 <= i <= c.rank:
        raise IndexError(f"generator index {i} out of range 1..{c.rank}")
    n = c.rank
    rows = [[int(r == s) for s in range(n)] for r in range(n)]
    rows[i - 1] = [int(i - 1 == j) - c.cartan_matrix[i - 1][j] for j in range(n)]
    return tuple(tuple(r) for r in rows)


@dataclasses.dataclass(frozen=True)
class RootSystem:
    cartan: CartanDatum
    positive_roots: tuple[Vector, ...]

    @property
    def roots(self) -> tuple[Vector, ...]:
        return self.positive_roots + tuple(tuple(-x for x in r) for r in self.positive_roots)

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.roots]


def _root_sort_key(r: Vector) -> tuple:
    return (sum(r), r)


@functools.cache
def generate_roots(c: CartanDatum) -> RootSystem:
    """Breadth-first closure of the simple roots under all simple reflections."""
    n = c.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        r = queue.popleft()
        for i in range(n):
            img = reflect(c, i, r)
            if img not in seen:
                seen.add(img)
                if len(seen) > MAX_ROOTS:
                    raise CartanError(f"root closure exceeded {MAX_ROOTS} roots; matrix is not of finite type")
                queue.append(img)
    positive = []
    for r in seen:
        if all(x >= 0 for x in r):
            positive.append(r)
        elif not all(x <= 0 for x in r):
            raise CartanError(f"mixed-sign root {r}; matrix is not of finite type")
    positive.sort(key=_root_sort_key)
    return RootSystem(c, tuple(positive))
