"""
Brute-force reference computations used to cross-check the fast paths.

Nothing here calls the Kazhdan-Lusztig recursion or the lifting-property
Bruhat test.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .hecke import HeckeElement, t_inverse
from .laurent import ONE, LaurentPolyQ
from .rootdata import CartanDatum
from .weyl import WeylElement, all_elements, from_word

# degrees of the basic invariants
_DEGREES = {
    "A": lambda n: list(range(2, n + 2)),
    "B": lambda n: list(range(2, 2 * n + 1, 2)),
    "C": lambda n: list(range(2, 2 * n + 1, 2)),
    "D": lambda n: list(range(2, 2 * n - 1, 2)) + [n],
    "E": lambda n: {6: [2, 5, 6, 8, 9, 12], 7: [2, 6, 8, 10, 12, 14, 18], 8: [2, 8, 12, 14, 18, 20, 24, 30]}[n],
    "F": lambda n: [2, 6, 8, 12],
    "G": lambda n: [2, 6],
}


def invariant_degrees(c: CartanDatum) -> list[int]:
    if c.label == "custom":
        raise ValueError("invariant degrees are tabulated for standard labels only")
    return _DEGREES[c.label[0]](int(c.label[1:]))


def poincare_from_degrees(c: CartanDatum) -> LaurentPolyQ:
    """prod_i (1 + q + ... + q^(d_i - 1))."""
    out = ONE
    for d in invariant_degrees(c):
        out = out * LaurentPolyQ({k: 1 for k in range(d)})
    return out


def subword_bruhat_leq(y: WeylElement, w: WeylElement) -> bool:
    """y <= w iff some subword of one fixed reduced word of w is a reduced word for y."""
    word = w.word
    for idx in itertools.combinations(range(len(word)), y.length):
        if from_word(w.cartan, [word[i] for i in idx]) == y:
            return True
    return False


def reduced_words(w: WeylElement) -> list[tuple[int, ...]]:
    """Every reduced word of ``w``, by recursion on left descents."""
    if w.length == 0:
        return [()]
    out = []
    for i in range(w.cartan.rank):
        if w.is_left_descent(i):
            rest = w.left_mul_gen(i)
            out.extend((i + 1,) + tail for tail in reduced_words(rest))
    return sorted(out)


def selfdual_basis(c: CartanDatum) -> dict[WeylElement, HeckeElement]:
    """
    Solve for every c_w directly from its defining properties.

    Writing bar(t_y) = sum_x r_{x,y} t_x, the condition bar(c_w) = q^-l(w) c_w
    reads, coefficientwise,

        q^-l(w) P_x - q^-l(x) bar(P_x) = sum_{y != x} bar(P_y) r_{x,y}.

    The two left-hand pieces occupy disjoint exponent ranges under the degree
    bound, so P_x is read off the right-hand side, processing x by decreasing
    length. Bruhat order is never consulted.
    """
    elements = all_elements(c)
    bar_t = {}
    for y in elements:
        bt = t_inverse(y.inverse())
        bar_t[y] = {x: LaurentPolyQ.coerce(p) for x, p in bt.support.items()}
    result = {}
    for w in elements:
        lw = w.length
        polys = {w: ONE}
        for x in sorted(elements, key=lambda e: -e.length):
            if x == w or x.length >= lw:
                continue
            rhs = LaurentPolyQ.const(0)
            for y, py in polys.items():
                r = bar_t[y].get(x)
                if r is not None:
                    rhs = rhs + py.bar() * r
            d = lw - x.length
            low = LaurentPolyQ({e: cf for e, cf in rhs.items() if 2 * (e + lw) <= d - 1})
            px = low.shift(lw)
            # the remaining piece must be exactly -q^-l(x) bar(P_x)
            if rhs - low != -(px.bar().shift(-x.length)):
                raise ArithmeticError(f"self-dual solve inconsistent at x={x.word}, w={w.word}")
            if px:
                polys[x] = px
        result[w] = HeckeElement(c, polys)
    return result


def monomial_box(c: CartanDatum, bound: int = 3) -> list[tuple[int, ...]]:
    """Root-lattice vectors mu with |<mu, alpha_i^vee>| <= bound for every i."""
    n = c.rank
    a = [[Fraction(x) for x in row] for row in c.cartan_matrix]
    inv = _inverse(a)
    out = []
    for pairings in itertools.product(range(-bound, bound + 1), repeat=n):
        mu = [sum(inv[i][j] * pairings[j] for j in range(n)) for i in range(n)]
        if all(x.denominator == 1 for x in mu):
            out.append(tuple(int(x) for x in mu))
    return sorted(out)


def _inverse(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
