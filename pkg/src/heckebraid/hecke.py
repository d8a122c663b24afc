"""
The Iwahori-Hecke algebra over Z[q, q^-1] in the standard basis {t_w}.

Grading convention: a cohomological shift [1] contributes a sign and the Tate
twist (-1) contributes a factor q. With it, the simple generators satisfy

    t_s t_s = (q - 1) t_s + q,        c_s = t_e + t_s,
    c_s c_s = (1 + q) c_s,            c_s t_s = t_s c_s = q c_s,

and the Kazhdan-Lusztig element c_w = sum_y P_{y,w}(q) t_y is characterised
by bar(c_w) = q^-l(w) c_w together with deg P_{y,w} <= (l(w) - l(y) - 1)/2.
"""
from __future__ import annotations

import functools
import logging
from typing import Iterable, Mapping

from .laurent import ONE, LaurentPolyQ, q
from .rootdata import CartanDatum, build_cartan
from .weyl import WeylElement, bruhat_leq, format_word, from_word, identity

log = logging.getLogger(__name__)

Q_MINUS_ONE = q - 1
Q_INV = LaurentPolyQ.monomial(-1)
Q_INV_MINUS_ONE = Q_INV - 1


class KLConsistencyError(AssertionError):
    """A computed KL element violates self-duality or the degree bound."""


@functools.lru_cache(maxsize=None)
def _rmul(w: WeylElement, i: int) -> WeylElement:
    return w.right_mul_gen(i)


@functools.lru_cache(maxsize=None)
def _lmul(w: WeylElement, i: int) -> WeylElement:
    return w.left_mul_gen(i)


def _accumulate(out: dict, w: WeylElement, p: LaurentPolyQ) -> None:
    if not p:
        return
    cur = out.get(w)
    if cur is None:
        out[w] = p
    else:
        s = cur + p
        if s:
            out[w] = s
        else:
            del out[w]


def _right_mul_simple(support: Mapping[WeylElement, LaurentPolyQ], i: int) -> dict:
    out: dict = {}
    for w, p in support.items():
        ws = _rmul(w, i)
        if w.is_right_descent(i):
            _accumulate(out, w, Q_MINUS_ONE * p)
            _accumulate(out, ws, q * p)
        else:
            _accumulate(out, ws, p)
    return out


def _left_mul_simple(support: Mapping[WeylElement, LaurentPolyQ], i: int) -> dict:
    out: dict = {}
    for w, p in support.items():
        sw = _lmul(w, i)
        if w.is_left_descent(i):
            _accumulate(out, w, Q_MINUS_ONE * p)
            _accumulate(out, sw, q * p)
        else:
            _accumulate(out, sw, p)
    return out


class HeckeElement:
    """Finite sum  sum_w p_w(q) t_w  with nonzero Laurent coefficients."""

    __slots__ = ("cartan", "_support")

    def __init__(self, cartan: CartanDatum, support: Mapping[WeylElement, LaurentPolyQ | int] = ()):
        self.cartan = cartan
        clean: dict = {}
        for w, p in dict(support).items():
            if w.cartan != cartan:
                raise ValueError(f"element of {w.cartan.label} in a Hecke element over {cartan.label}")
            _accumulate(clean, w, LaurentPolyQ.coerce(p))
        self._support = clean

    @classmethod
    def _raw(cls, cartan: CartanDatum, support: dict) -> HeckeElement:
        obj = cls.__new__(cls)
        obj.cartan = cartan
        obj._support = support
        return obj

    @property
    def support(self) -> dict[WeylElement, LaurentPolyQ]:
        return dict(self._support)

    def coeff(self, w: WeylElement) -> LaurentPolyQ:
        return self._support.get(w, LaurentPolyQ.const(0))

    def terms(self) -> list[tuple[WeylElement, LaurentPolyQ]]:
        """Terms sorted by (length, lex word)."""
        return sorted(self._support.items(), key=lambda kv: (kv[0].length, kv[0].word))

    def is_zero(self) -> bool:
        return not self._support

    def __bool__(self) -> bool:
        return bool(self._support)

    def __len__(self) -> int:
        return len(self._support)

    def _check(self, other: HeckeElement) -> None:
        if self.cartan != other.cartan:
            raise ValueError(f"mismatched Cartan data: {self.cartan.label} vs {other.cartan.label}")

    def __add__(self, other: HeckeElement) -> HeckeElement:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check(other)
        out = dict(self._support)
        for w, p in other._support.items():
            _accumulate(out, w, p)
        return HeckeElement._raw(self.cartan, out)

    def __neg__(self) -> HeckeElement:
        return HeckeElement._raw(self.cartan, {w: -p for w, p in self._support.items()})

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar: LaurentPolyQ | int) -> HeckeElement:
        scalar = LaurentPolyQ.coerce(scalar)
        if not scalar:
            return HeckeElement._raw(self.cartan, {})
        return HeckeElement._raw(self.cartan, {w: scalar * p for w, p in self._support.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mult(self, other)
        if isinstance(other, (int, LaurentPolyQ)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPolyQ)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.cartan == other.cartan and self._support == other._support

    __hash__ = None  # type: ignore[assignment]

    def mul_simple_right(self, i: int) -> HeckeElement:
        """self * t_{s_i}, 1-based ``i``."""
        return HeckeElement._raw(self.cartan, _right_mul_simple(self._support, i - 1))

    def mul_simple_left(self, i: int) -> HeckeElement:
        """t_{s_i} * self, 1-based ``i``."""
        return HeckeElement._raw(self.cartan, _left_mul_simple(self._support, i - 1))

    def bar(self) -> HeckeElement:
        return bar(self)

    def iota(self) -> HeckeElement:
        return iota(self)

    def to_json(self) -> dict:
        return {
            "cartan": self.cartan.key,
            "terms": [{"w": format_word(w.word), "poly": p.to_json()} for w, p in self.terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> HeckeElement:
        cartan = cartan_from_key(data["cartan"])
        support = {}
        for term in data["terms"]:
            support[from_word(cartan, term["w"])] = LaurentPolyQ.from_json(term["poly"])
        return cls(cartan, support)

    def __repr__(self) -> str:
        return f"HeckeElement({self.cartan.label}: {self})"

    def __str__(self) -> str:
        if not self._support:
            return "0"
        parts = []
        for w, p in self.terms():
            basis = f"T[{format_word(w.word)}]"
            parts.append(basis if p == 1 else f"({p})*{basis}")
        return " + ".join(parts)


def cartan_from_key(key: str) -> CartanDatum:
    if key.startswith("custom:"):
        return build_cartan(key[len("custom:"):])
    return build_cartan(key)


def t_basis(w: WeylElement) -> HeckeElement:
    return HeckeElement._raw(w.cartan, {w: ONE})


def unit(c: CartanDatum) -> HeckeElement:
    return t_basis(identity(c))


def zero(c: CartanDatum) -> HeckeElement:
    return HeckeElement._raw(c, {})


def _cost(h: HeckeElement) -> int:
    return sum(w.length for w in h._support)


def mult(h1: HeckeElement, h2: HeckeElement) -> HeckeElement:
    """Product in the Hecke algebra; the cheaper factor is expanded along reduced words."""
    h1._check(h2)
    out: dict = {}
    if _cost(h2) <= _cost(h1):
        for y, p in h2._support.items():
            cur = h1._support
            for i in y.word:
                cur = _right_mul_simple(cur, i - 1)
            for w, r in cur.items():
                _accumulate(out, w, r * p)
    else:
        for x, p in h1._support.items():
            cur = h2._support
            for i in reversed(x.word):
                cur = _left_mul_simple(cur, i - 1)
            for w, r in cur.items():
                _accumulate(out, w, p * r)
    return HeckeElement._raw(h1.cartan, out)


def t_simple_inverse(c: CartanDatum, i: int) -> HeckeElement:
    """t_s^-1 = q^-1 t_s + (q^-1 - 1) t_e for 1-based ``i``."""
    e = identity(c)
    return HeckeElement._raw(c, {_lmul(e, i - 1): Q_INV, e: Q_INV_MINUS_ONE})


def _right_mul_simple_inverse(support: Mapping, i: int) -> dict:
    out = {}
    for w, p in _right_mul_simple(support, i).items():
        _accumulate(out, w, Q_INV * p)
    for w, p in support.items():
        _accumulate(out, w, Q_INV_MINUS_ONE * p)
    return out


@functools.lru_cache(maxsize=None)
def _t_inverse_support(w: WeylElement) -> tuple:
    # t_w^-1 = t_{s_k}^-1 ... t_{s_1}^-1 for a reduced word s_1 ... s_k
    cur: dict = {identity(w.cartan): ONE}
    for i in reversed(w.word):
        cur = _right_mul_simple_inverse(cur, i - 1)
    return tuple(cur.items())


def t_inverse(w: WeylElement) -> HeckeElement:
    """The inverse of t_w; every t_w is a unit of the Hecke algebra."""
    return HeckeElement._raw(w.cartan, dict(_t_inverse_support(w)))


def bar(h: HeckeElement) -> HeckeElement:
    """Ring involution: q -> q^-1 and t_w -> t_{w^-1}^-1."""
    out: dict = {}
    for w, p in h._support.items():
        pb = p.bar()
        for x, r in _t_inverse_support(w.inverse()):
            _accumulate(out, x, pb * r)
    return HeckeElement._raw(h.cartan, out)


def iota(h: HeckeElement) -> HeckeElement:
    """Linear anti-automorphism t_w -> t_{w^-1}."""
    return HeckeElement._raw(h.cartan, {w.inverse(): p for w, p in h._support.items()})


def c_simple(c: CartanDatum, i: int) -> HeckeElement:
    """c_s = t_e + t_s for the 1-based generator ``i``."""
    e = identity(c)
    return HeckeElement._raw(c, {e: ONE, _lmul(e, i - 1): ONE})


def _half(n: int) -> int | None:
    return n // 2 if n % 2 == 0 else None


class KLTable:
    """
    Memo of Kazhdan-Lusztig polynomials P_{y,w} and basis elements c_w for one
    Cartan datum.

    ``descent`` selects which left descent drives the recursion ("first" =
    smallest index, "last" = largest); the result does not depend on it.
    With ``verify`` on, every freshly computed c_w is checked for the degree
    bound and bar(c_w) = q^-l(w) c_w, raising ``KLConsistencyError`` otherwise.
    """

    def __init__(self, cartan: CartanDatum, descent: str = "first", verify: bool = True):
        if descent not in ("first", "last"):
            raise ValueError(f"descent must be 'first' or 'last', got {descent!r}")
        self.cartan = cartan
        self.descent = descent
        self.verify = verify
        self.polys: dict[tuple[WeylElement, WeylElement], LaurentPolyQ] = {}
        self._basis: dict[WeylElement, HeckeElement] = {}
        self.computed = 0
        self.cache_hits = 0

    def __len__(self) -> int:
        return len(self.polys)

    def _pick_descent(self, w: WeylElement) -> int:
        ds = [i for i in range(self.cartan.rank) if w.is_left_descent(i)]
        return ds[0] if self.descent == "first" else ds[-1]

    def _column_from_polys(self, w: WeylElement) -> HeckeElement | None:
        from .weyl import all_elements

        support = {}
        for y in all_elements(self.cartan):
            if y.length > w.length or not bruhat_leq(y, w):
                continue
            p = self.polys.get((y, w))
            if p is None:
                return None
            support[y] = p
        return HeckeElement(self.cartan, support)

    def basis_element(self, w: WeylElement) -> HeckeElement:
        if w.cartan != self.cartan:
            raise ValueError(f"element of {w.cartan.label} queried in KL table of {self.cartan.label}")
        h = self._basis.get(w)
        if h is not None:
            return h
        if (w, w) in self.polys:
            h = self._column_from_polys(w)
            if h is not None:
                try:
                    if self.verify:
                        self._verify(w, h)
                except KLConsistencyError as exc:
                    log.warning("discarding cached column for %s: %s", format_word(w.word), exc)
                    for key in [k for k in self.polys if k[1] == w]:
                        del self.polys[key]
                else:
                    self.cache_hits += 1
                    self._basis[w] = h
                    return h
        if w.length == 0:
            h = t_basis(w)
        else:
            i = self._pick_descent(w)
            v = _lmul(w, i)
            cv = self.basis_element(v)
            h = cv + cv.mul_simple_left(i + 1)
            for y in list(cv._support):
                if not y.is_left_descent(i):
                    continue
                m = self.mu(y, v)
                if m:
                    shift = _half(w.length - y.length)
                    h = h - self.basis_element(y).scale(LaurentPolyQ.monomial(shift, m))
            if self.verify:
                self._verify(w, h)
        self.computed += 1
        self._basis[w] = h
        for y, p in h._support.items():
            self.polys[(y, w)] = p
        return h

    def _verify(self, w: WeylElement, h: HeckeElement) -> None:
        if h.coeff(w) != 1:
            raise KLConsistencyError(f"leading coefficient of c_{w.word} is {h.coeff(w)}, expected 1")
        for y, p in h._support.items():
            if y == w:
                continue
            if 2 * p.degree_bounds()[1] > w.length - y.length - 1 or p.degree_bounds()[0] < 0:
                raise KLConsistencyError(f"P_{{{y.word},{w.word}}} = {p} violates the degree bound")
        if bar(h) != h.scale(LaurentPolyQ.monomial(-w.length)):
            raise KLConsistencyError(f"c_{w.word} is not bar-self-dual")

    def polynomial(self, y: WeylElement, w: WeylElement) -> LaurentPolyQ:
        p = self.polys.get((y, w))
        if p is not None:
            return p
        if not bruhat_leq(y, w):
            return LaurentPolyQ.const(0)
        return self.basis_element(w).coeff(y)

    def mu(self, y: WeylElement, v: WeylElement) -> int:
        """Coefficient of q^((l(v)-l(y)-1)/2) in P_{y,v}; zero if that exponent is not a natural number."""
        d = v.length - y.length - 1
        if d < 0 or d % 2:
            return 0
        return self.polynomial(y, v).coefficient_at(d // 2)

    def insert(self, y: WeylElement, w: WeylElement, poly: LaurentPolyQ) -> None:
        self.polys[(y, w)] = poly

    def records(self) -> Iterable[tuple[str, str, LaurentPolyQ]]:
        items = sorted(
            self.polys.items(), key=lambda kv: (kv[0][1].length, kv[0][1].word, kv[0][0].length, kv[0][0].word)
        )
        for (y, w), p in items:
            yield format_word(y.word), format_word(w.word), p


def kl_basis_element(w: WeylElement, table: KLTable) -> HeckeElement:
    return table.basis_element(w)


def kl_polynomial(y: WeylElement, w: WeylElement, table: KLTable) -> LaurentPolyQ:
    return table.polynomial(y, w)


def mu(y: WeylElement, v: WeylElement, table: KLTable) -> int:
    return table.mu(y, v)


def to_c_basis(h: HeckeElement, table: KLTable) -> dict[WeylElement, LaurentPolyQ]:
    """Coefficients of ``h`` in the KL basis, peeling maximal-length terms off triangularly."""
    rem = h
    out: dict = {}
    while rem:
        w, p = max(rem._support.items(), key=lambda kv: (kv[0].length, kv[0].word))
        out[w] = p
        rem = rem - table.basis_element(w).scale(p)
    return out


def from_c_basis(coeffs: Mapping[WeylElement, LaurentPolyQ | int], table: KLTable) -> HeckeElement:
    out = zero(table.cartan)
    for w, p in coeffs.items():
        out = out + table.basis_element(w).scale(p)
    return out
