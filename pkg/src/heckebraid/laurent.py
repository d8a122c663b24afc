"""
Exact Laurent polynomials in one variable q over the integers.

Coefficients are Python ints, so arithmetic never overflows. Values are
immutable and hashable; zero coefficients are never stored.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Union

Scalar = Union[int, "LaurentPolyQ"]


class LaurentPolyQ:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError(f"exponent and coefficient must be ints, got {e!r}, {c!r}")
            clean[e] = clean.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(clean.items()) if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPolyQ:
        # terms must already be free of zeros; ordering is restored lazily where it matters
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> LaurentPolyQ:
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPolyQ:
        return cls._raw({exponent: coeff} if coeff else {})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @staticmethod
    def coerce(other: object) -> LaurentPolyQ:
        if isinstance(other, LaurentPolyQ):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPolyQ.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Scalar) -> LaurentPolyQ:
        other = LaurentPolyQ.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPolyQ._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolyQ:
        return LaurentPolyQ._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> LaurentPolyQ:
        other = LaurentPolyQ.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPolyQ:
        return (-self) + other

    def __mul__(self, other: Scalar) -> LaurentPolyQ:
        other = LaurentPolyQ.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolyQ._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPolyQ:
        if n < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only unit monomials can be raised to negative powers")
            (e, c), = self._terms.items()
            return LaurentPolyQ.monomial(e * n, c ** (-n))
        result = LaurentPolyQ.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, n: int) -> LaurentPolyQ:
        """Multiply by q**n."""
        return LaurentPolyQ._raw({e + n: c for e, c in self._terms.items()})

    def bar(self) -> LaurentPolyQ:
        """The involution q -> q^-1."""
        return LaurentPolyQ._raw({-e: c for e, c in self._terms.items()})

    def degree_bounds(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("degree_bounds of the zero polynomial is undefined")
        return min(self._terms), max(self._terms)

    def coefficient_at(self, n: int) -> int:
        return self._terms.get(n, 0)

    def __eq__(self, other: object) -> bool:
        other = LaurentPolyQ.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def to_json(self) -> dict:
        return {"terms": [[e, c] for e, c in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> LaurentPolyQ:
        pairs = data["terms"]
        if not isinstance(pairs, list) or not all(isinstance(p, list) and len(p) == 2 for p in pairs):
            raise ValueError(f"malformed Laurent polynomial JSON: {data!r}")
        return cls((int(e), int(c)) for e, c in pairs)

    def __repr__(self) -> str:
        return f"LaurentPolyQ({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                mono = str(abs(c))
            else:
                var = "q" if e == 1 else f"q^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


q = LaurentPolyQ.monomial(1)
ONE = LaurentPolyQ.const(1)
ZERO = LaurentPolyQ.const(0)
