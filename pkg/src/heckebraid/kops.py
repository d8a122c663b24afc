"""
Operators on the group algebra of the root lattice with Z[q, q^-1] coefficients.

Exponents are root-lattice vectors in simple-root coordinates, so X^alpha_s is
a plain monomial and every division by 1 - X^{+-alpha} is integral. The
Demazure operator

    D_s f = (f - X^-alpha s(f)) / (1 - X^-alpha)

and the Demazure-Lusztig operator

    tau_s f = ((q - X^alpha) s(f) - (q - 1) X^alpha f) / (1 - X^alpha)

are computed by a single exact division of the combined numerator. tau_s
satisfies the same quadratic and braid relations as t_s, which is what makes
``hecke_action`` a left module structure.
"""
from __future__ import annotations

import dataclasses
from typing import Mapping

from .hecke import HeckeElement, cartan_from_key
from .laurent import ONE, LaurentPolyQ, q
from .rootdata import CartanDatum, Vector, generate_roots, reflect
from .weyl import WeylElement, all_elements, format_word


class NonExactDivision(ArithmeticError):
    """Numerator is not divisible by 1 - X^beta; signals a bug upstream."""


class WeightLaurent:
    __slots__ = ("cartan", "_terms")

    def __init__(self, cartan: CartanDatum, terms: Mapping[Vector, LaurentPolyQ | int] = ()):
        self.cartan = cartan
        clean: dict[Vector, LaurentPolyQ] = {}
        for exp, p in dict(terms).items():
            exp = tuple(int(x) for x in exp)
            if len(exp) != cartan.rank:
                raise ValueError(f"exponent {exp} has wrong length for rank {cartan.rank}")
            _acc(clean, exp, LaurentPolyQ.coerce(p))
        self._terms = clean

    @classmethod
    def _raw(cls, cartan: CartanDatum, terms: dict) -> WeightLaurent:
        obj = cls.__new__(cls)
        obj.cartan = cartan
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, cartan: CartanDatum, exp: Vector, coeff: LaurentPolyQ | int = 1) -> WeightLaurent:
        return cls(cartan, {tuple(exp): coeff})

    @classmethod
    def one(cls, cartan: CartanDatum) -> WeightLaurent:
        return cls.monomial(cartan, (0,) * cartan.rank)

    @property
    def terms(self) -> dict[Vector, LaurentPolyQ]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: WeightLaurent) -> None:
        if self.cartan != other.cartan:
            raise ValueError(f"mismatched Cartan data: {self.cartan.label} vs {other.cartan.label}")

    def __add__(self, other: WeightLaurent) -> WeightLaurent:
        if not isinstance(other, WeightLaurent):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for e, p in other._terms.items():
            _acc(out, e, p)
        return WeightLaurent._raw(self.cartan, out)

    def __neg__(self) -> WeightLaurent:
        return WeightLaurent._raw(self.cartan, {e: -p for e, p in self._terms.items()})

    def __sub__(self, other: WeightLaurent) -> WeightLaurent:
        if not isinstance(other, WeightLaurent):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, WeightLaurent):
            self._check(other)
            out: dict = {}
            for e1, p1 in self._terms.items():
                for e2, p2 in other._terms.items():
                    _acc(out, tuple(a + b for a, b in zip(e1, e2)), p1 * p2)
            return WeightLaurent._raw(self.cartan, out)
        if isinstance(other, (int, LaurentPolyQ)) and not isinstance(other, bool):
            other = LaurentPolyQ.coerce(other)
            if not other:
                return WeightLaurent._raw(self.cartan, {})
            return WeightLaurent._raw(self.cartan, {e: other * p for e, p in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, vec: Vector, coeff: LaurentPolyQ | int = ONE) -> WeightLaurent:
        """Multiply by coeff * X^vec."""
        coeff = LaurentPolyQ.coerce(coeff)
        return WeightLaurent._raw(
            self.cartan, {tuple(a + b for a, b in zip(e, vec)): coeff * p for e, p in self._terms.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightLaurent):
            return NotImplemented
        return self.cartan == other.cartan and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def reflect(self, i: int) -> WeightLaurent:
        """s_i acting on exponents, 1-based ``i``."""
        return WeightLaurent._raw(self.cartan, {reflect(self.cartan, i - 1, e): p for e, p in self._terms.items()})

    def is_invariant(self, i: int) -> bool:
        return self.reflect(i) == self

    def to_json(self) -> dict:
        return {
            "cartan": self.cartan.key,
            "terms": [{"exp": list(e), "poly": self._terms[e].to_json()} for e in sorted(self._terms)],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> WeightLaurent:
        cartan = cartan_from_key(data["cartan"])
        terms: dict = {}
        for t in data["terms"]:
            _acc(terms, tuple(int(x) for x in t["exp"]), LaurentPolyQ.from_json(t["poly"]))
        return cls(cartan, terms)

    def __repr__(self) -> str:
        return f"WeightLaurent({self.cartan.label}: {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            p = self._terms[e]
            mono = "X^(" + ",".join(map(str, e)) + ")"
            parts.append(mono if p == 1 else f"({p})*{mono}")
        return " + ".join(parts)


def _acc(out: dict, e: Vector, p: LaurentPolyQ) -> None:
    if not p:
        return
    cur = out.get(e)
    if cur is None:
        out[e] = p
        return
    s = cur + p
    if s:
        out[e] = s
    else:
        del out[e]


def _simple_root(c: CartanDatum, i: int, sign: int = 1) -> Vector:
    return tuple(sign * int(j == i - 1) for j in range(c.rank))


def divide_one_minus(f: WeightLaurent, i: int, sign: int) -> WeightLaurent:
    """
    Exact quotient f / (1 - X^beta) with beta = sign * alpha_i (``i`` 1-based).

    Each beta-string of exponents is divided independently: writing
    f = Q (1 - X^beta), the quotient coefficient at a position is the running
    sum of the numerator coefficients up to it, and the full sum over the
    string must vanish.
    """
    c = f.cartan
    k = i - 1
    strings: dict[Vector, dict[int, LaurentPolyQ]] = {}
    for e, p in f._terms.items():
        # position along the string, oriented so that multiplying by X^beta moves +1
        strings.setdefault(e[:k] + (0,) + e[k + 1:], {})[sign * e[k]] = p
    quotient: dict = {}
    for base, coeffs in strings.items():
        lo, hi = min(coeffs), max(coeffs)
        running = LaurentPolyQ.const(0)
        for pos in range(lo, hi + 1):
            p = coeffs.get(pos)
            if p is not None:
                running = running + p
            if pos == hi:
                break
            if running:
                e = list(base)
                e[k] = sign * pos
                quotient[tuple(e)] = running
        if running:
            raise NonExactDivision(f"{f} is not divisible by 1 - X^{_simple_root(c, i, sign)}")
    return WeightLaurent._raw(c, quotient)


def weyl_act(w: WeylElement, f: WeightLaurent) -> WeightLaurent:
    if w.cartan != f.cartan:
        raise ValueError(f"mismatched Cartan data: {w.cartan.label} vs {f.cartan.label}")
    return WeightLaurent._raw(f.cartan, {w.apply(e): p for e, p in f._terms.items()})


def demazure(i: int, f: WeightLaurent) -> WeightLaurent:
    """D_s f = (f - X^-alpha s(f)) / (1 - X^-alpha)."""
    neg = _simple_root(f.cartan, i, -1)
    numerator = f - f.reflect(i).shift(neg)
    return divide_one_minus(numerator, i, -1)


def demazure_lusztig(i: int, f: WeightLaurent) -> WeightLaurent:
    """tau_s f = ((q - X^alpha) s(f) - (q - 1) X^alpha f) / (1 - X^alpha)."""
    alpha = _simple_root(f.cartan, i, 1)
    sf = f.reflect(i)
    numerator = sf * q - sf.shift(alpha) - f.shift(alpha, q - 1)
    return divide_one_minus(numerator, i, 1)


def apply_word(word, f: WeightLaurent) -> WeightLaurent:
    """tau_{i_1} ... tau_{i_k} f, applied right to left."""
    for i in reversed(word):
        f = demazure_lusztig(i, f)
    return f


def hecke_action(h: HeckeElement, f: WeightLaurent) -> WeightLaurent:
    """Left action of the Hecke algebra with t_s acting by tau_s."""
    if h.cartan != f.cartan:
        raise ValueError(f"mismatched Cartan data: {h.cartan.label} vs {f.cartan.label}")
    out = WeightLaurent._raw(f.cartan, {})
    for w, p in h.terms():
        out = out + apply_word(w.word, f) * p
    return out


def poincare(c: CartanDatum) -> LaurentPolyQ:
    """sum_w q^l(w): the cell decomposition of G/B counted by dimension."""
    counts: dict[int, int] = {}
    for w in all_elements(c):
        counts[w.length] = counts.get(w.length, 0) + 1
    return LaurentPolyQ(counts)


@dataclasses.dataclass(frozen=True)
class SteinbergSummary:
    cartan: str
    num_components: int
    component_dim: int
    flag_dim: int
    orbit_dims: dict[str, int]

    def to_json(self) -> dict:
        return dataclasses.asdict(self)


def steinberg_summary(c: CartanDatum) -> SteinbergSummary:
    n = generate_roots(c).num_positive
    elements = all_elements(c)
    return SteinbergSummary(
        cartan=c.key,
        num_components=len(elements),
        component_dim=2 * n,
        flag_dim=n,
        orbit_dims={format_word(w.word): n + w.length for w in elements},
    )
