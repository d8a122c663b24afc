"""
Bulk verification suites driven by ``heckebraid verify``.

Each suite returns a list of named pass/fail checks. Exhaustive loops fall
back to a seeded sample once the group is larger than ``EXHAUSTIVE_LIMIT``.
"""
from __future__ import annotations

import dataclasses
import itertools
import random
from typing import Callable

from .braid import braid_word, free_reduce, hecke_image, verify_braid_relation
from .hecke import (
    HeckeElement,
    KLTable,
    bar,
    c_simple,
    iota,
    t_basis,
    t_inverse,
    unit,
)
from .kops import WeightLaurent, demazure, demazure_lusztig, hecke_action
from .laurent import LaurentPolyQ, q
from .oracles import monomial_box, reduced_words, selfdual_basis
from .rootdata import CartanDatum
from .weyl import all_elements, format_word

EXHAUSTIVE_LIMIT = 100
SAMPLE_SIZE = 400


@dataclasses.dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": "pass" if self.ok else "fail", "detail": self.detail}


def random_laurent(rng: random.Random, span: int = 2, max_terms: int = 3) -> LaurentPolyQ:
    return LaurentPolyQ((rng.randint(-span, span), rng.randint(-3, 3)) for _ in range(rng.randint(1, max_terms)))


def random_hecke(c: CartanDatum, rng: random.Random, max_terms: int = 3) -> HeckeElement:
    elements = all_elements(c)
    return HeckeElement(c, {rng.choice(elements): random_laurent(rng) for _ in range(rng.randint(1, max_terms))})


def random_weight(c: CartanDatum, rng: random.Random, max_terms: int = 3, bound: int = 2) -> WeightLaurent:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[tuple(rng.randint(-bound, bound) for _ in range(c.rank))] = random_laurent(rng, 1, 2)
    return WeightLaurent(c, terms)


def _gens(c: CartanDatum) -> range:
    return range(1, c.rank + 1)


def _pairs(c: CartanDatum):
    return [(i, j) for i in _gens(c) for j in _gens(c) if i < j]


def suite_braid(c: CartanDatum, rng: random.Random) -> list[Check]:
    checks = []
    for i, j in _pairs(c):
        rep = verify_braid_relation(c, i, j)
        checks.append(Check(f"braid_relation[{i},{j}]", rep.ok, f"m={rep.m}"))
    elements = all_elements(c)
    if len(elements) <= EXHAUSTIVE_LIMIT:
        pairs = list(itertools.product(elements, repeat=2))
        mode = "exhaustive"
    else:
        pairs = [(rng.choice(elements), rng.choice(elements)) for _ in range(SAMPLE_SIZE)]
        mode = "sampled"
    tested = bad = 0
    for w, v in pairs:
        wv = w * v
        if wv.length != w.length + v.length:
            continue
        tested += 1
        if t_basis(w) * t_basis(v) != t_basis(wv):
            bad += 1
    checks.append(Check("length_additive_products", bad == 0, f"{mode}: {tested} pairs, {bad} failures"))
    bad = words = 0
    sample = elements if len(elements) <= EXHAUSTIVE_LIMIT else rng.sample(elements, 50)
    for w in sample:
        target = t_basis(w)
        for word in reduced_words(w):
            words += 1
            if hecke_image(braid_word(c, word)) != target:
                bad += 1
    checks.append(Check("matsumoto", bad == 0, f"{len(sample)} elements, {words} reduced words"))
    return checks


def suite_inverse(c: CartanDatum, rng: random.Random) -> list[Check]:
    elements = all_elements(c)
    sample = elements if len(elements) <= 10 * EXHAUSTIVE_LIMIT else rng.sample(elements, SAMPLE_SIZE)
    e = unit(c)
    checks = []
    for w in sample:
        tw, ti = t_basis(w), t_inverse(w)
        ok = tw * ti == e and ti * tw == e
        checks.append(Check(f"t_inverse[{format_word(w.word)}]", ok, f"l={w.length}"))
    return checks


def suite_calc(c: CartanDatum, rng: random.Random) -> list[Check]:
    checks = []
    e = unit(c)
    for s in _gens(c):
        ts = e.mul_simple_right(s)
        cs = c_simple(c, s)
        checks.append(Check(f"quadratic[{s}]", ts * ts == ts.scale(q - 1) + e.scale(q), "t_s^2 = (q-1)t_s + q"))
        checks.append(Check(f"c_s_t_s[{s}]", cs * ts == cs.scale(q) == ts * cs, "c_s t_s = t_s c_s = q c_s"))
        checks.append(Check(f"c_s_squared[{s}]", cs * cs == cs.scale(1 + q), "c_s^2 = (1+q) c_s"))
    return checks


def suite_duality(c: CartanDatum, rng: random.Random, n_random: int = 50) -> list[Check]:
    checks = []
    e = unit(c)
    qi = LaurentPolyQ.monomial(-1)
    for s in _gens(c):
        ts = e.mul_simple_right(s)
        checks.append(Check(f"bar_t_s[{s}]", bar(ts) == ts.scale(qi) + e.scale(qi - 1), "bar(t_s)"))
    bad_inv = bad_ring = bad_iota = 0
    for _ in range(n_random):
        h1, h2 = random_hecke(c, rng), random_hecke(c, rng)
        bad_inv += bar(bar(h1)) != h1 or iota(iota(h1)) != h1
        bad_ring += bar(h1 * h2) != bar(h1) * bar(h2)
        bad_iota += iota(h1 * h2) != iota(h2) * iota(h1)
    checks.append(Check("involutions", not bad_inv, f"{n_random} random elements"))
    checks.append(Check("bar_ring_map", not bad_ring, f"{n_random} random pairs"))
    checks.append(Check("iota_anti_automorphism", not bad_iota, f"{n_random} random pairs"))
    table = KLTable(c)
    elements = all_elements(c)
    sample = elements if len(elements) <= EXHAUSTIVE_LIMIT else rng.sample(elements, 50)
    bad = sum(iota(table.basis_element(w)) != table.basis_element(w.inverse()) for w in sample)
    checks.append(Check("iota_c_w", bad == 0, f"{len(sample)} elements"))
    return checks


def suite_kl(c: CartanDatum, rng: random.Random) -> list[Check]:
    checks = []
    first = KLTable(c, descent="first")
    last = KLTable(c, descent="last")
    elements = all_elements(c)
    for w in elements:
        cw = first.basis_element(w)
        problems = []
        if bar(cw) != cw.scale(LaurentPolyQ.monomial(-w.length)):
            problems.append("not self-dual")
        for y, p in cw.support.items():
            if any(coef < 0 for coef in p.terms.values()):
                problems.append(f"negative coefficient in P_{{{format_word(y.word)}}}")
            if y != w and 2 * p.degree_bounds()[1] > w.length - y.length - 1:
                problems.append(f"degree bound fails at {format_word(y.word)}")
        if last.basis_element(w) != cw:
            problems.append("depends on descent choice")
        checks.append(Check(f"kl[{format_word(w.word)}]", not problems, "; ".join(problems) or f"{len(cw)} terms"))
    if len(elements) <= 48:
        oracle = selfdual_basis(c)
        bad = sum(oracle[w] != first.basis_element(w) for w in elements)
        checks.append(Check("kl_oracle", bad == 0, f"{len(elements)} elements vs triangular solver"))
    return checks


def suite_dl(c: CartanDatum, rng: random.Random, n_random: int = 100) -> list[Check]:
    checks = []
    box = [WeightLaurent.monomial(c, mu) for mu in monomial_box(c, 3)]
    for s in _gens(c):
        bad_idem = bad_inv = bad_quad = 0
        for f in box:
            d = demazure(s, f)
            bad_idem += demazure(s, d) != d
            bad_inv += not d.is_invariant(s)
            t = demazure_lusztig(s, f)
            bad_quad += demazure_lusztig(s, t) != t * (q - 1) + f * q
        checks.append(Check(f"demazure_idempotent[{s}]", not bad_idem and not bad_inv, f"{len(box)} monomials"))
        checks.append(Check(f"dl_quadratic[{s}]", not bad_quad, f"{len(box)} monomials"))
    for i, j in _pairs(c):
        m = c.m(i, j)
        word_ij = [(i, j)[k % 2] for k in range(m)]
        word_ji = [(j, i)[k % 2] for k in range(m)]
        bad_d = bad_t = 0
        for f in box:
            bad_d += _apply(demazure, word_ij, f) != _apply(demazure, word_ji, f)
            bad_t += _apply(demazure_lusztig, word_ij, f) != _apply(demazure_lusztig, word_ji, f)
        checks.append(Check(f"demazure_braid[{i},{j}]", not bad_d, f"m={m}, {len(box)} monomials"))
        checks.append(Check(f"dl_braid[{i},{j}]", not bad_t, f"m={m}, {len(box)} monomials"))
    bad = 0
    for _ in range(n_random):
        h1, h2, f = random_hecke(c, rng, 2), random_hecke(c, rng, 2), random_weight(c, rng)
        bad += hecke_action(h1 * h2, f) != hecke_action(h1, hecke_action(h2, f))
    checks.append(Check("hecke_action_homomorphism", not bad, f"{n_random} random triples"))
    return checks


def suite_words(c: CartanDatum, rng: random.Random, n_random: int = 30) -> list[Check]:
    bad_red = bad_inv = bad_iota = 0
    e = unit(c)
    for _ in range(n_random):
        letters = [rng.choice([-1, 1]) * rng.randint(1, c.rank) for _ in range(rng.randint(0, 12))]
        b = braid_word(c, letters)
        img = hecke_image(b)
        bad_red += hecke_image(free_reduce(b)) != img
        bad_inv += img * hecke_image(b.inverse()) != e
        bad_iota += iota(img) != hecke_image(b.reverse())
    return [
        Check("free_reduce_invariance", not bad_red, f"{n_random} random words"),
        Check("word_inverse", not bad_inv, f"{n_random} random words"),
        Check("iota_reverse", not bad_iota, f"{n_random} random words"),
    ]


def _apply(op: Callable, word, f):
    for i in reversed(word):
        f = op(i, f)
    return f


SUITES: dict[str, Callable[[CartanDatum, random.Random], list[Check]]] = {
    "braid": suite_braid,
    "inverse": suite_inverse,
    "calc": suite_calc,
    "duality": suite_duality,
    "kl": suite_kl,
    "dl": suite_dl,
    "words": suite_words,
}


def run_suites(c: CartanDatum, names: list[str], seed: int) -> list[Check]:
    checks = []
    for name in names:
        # one generator per suite so results do not depend on suite order
        rng = random.Random(f"{seed}:{name}")
        checks.extend(SUITES[name](c, rng))
    return sorted(checks, key=lambda ch: ch.name)
