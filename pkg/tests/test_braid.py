import pytest
from hypothesis import given, strategies as st

from heckebraid.braid import (
    BraidWord,
    braid_word,
    free_reduce,
    hecke_image,
    positive_lift,
    verify_braid_relation,
)
from heckebraid.hecke import iota, t_basis, t_inverse, unit
from heckebraid.laurent import LaurentPolyQ
from heckebraid.oracles import reduced_words
from heckebraid.rootdata import build_cartan
from heckebraid.weyl import all_elements, from_word, longest_element

A2 = build_cartan("A2")
signed_letters = st.lists(st.sampled_from([1, 2, -1, -2]), max_size=10)


def test_parse_and_str(cartan):
    b = BraidWord.parse(cartan("A2"), "1, 2 -1")
    assert b.letters == ((1, 1), (2, 1), (1, -1))
    assert str(b) == "1 2 -1"
    assert BraidWord.parse(cartan("A2"), "").letters == ()


@pytest.mark.parametrize("text", ["1 x", "1 --2", "3"])
def test_parse_rejects(text, cartan):
    with pytest.raises((ValueError, IndexError)):
        BraidWord.parse(cartan("A2"), text)


def test_length_cap(cartan):
    with pytest.raises(ValueError, match="cap"):
        BraidWord.parse(cartan("A1"), " ".join(["1"] * 10001))


def test_free_reduce_examples(cartan):
    c = cartan("A2")
    assert free_reduce(braid_word(c, [1, 2, -2, -1, 2])).letters == ((2, 1),)
    assert free_reduce(braid_word(c, [1, 1, -1])).letters == ((1, 1),)
    assert free_reduce(braid_word(c, [1, -2])) == braid_word(c, [1, -2])


@given(signed_letters)
def test_free_reduce_preserves_image(letters):
    b = braid_word(A2, letters)
    r = free_reduce(b)
    assert hecke_image(r) == hecke_image(b)
    assert free_reduce(r) == r
    assert all(r.letters[k] != (r.letters[k + 1][0], -r.letters[k + 1][1]) for k in range(len(r) - 1))


@given(signed_letters)
def test_inverse_word(letters):
    b = braid_word(A2, letters)
    assert hecke_image(b) * hecke_image(b.inverse()) == unit(A2)


@given(signed_letters)
def test_iota_reverses(letters):
    b = braid_word(A2, letters)
    assert iota(hecke_image(b)) == hecke_image(b.reverse())


def test_positive_lift(cartan):
    c = cartan("A3")
    for w in all_elements(c):
        b = positive_lift(w)
        assert len(b) == w.length
        assert hecke_image(b) == t_basis(w)


def test_negative_letter_is_inverse(cartan):
    c = cartan("B2")
    assert hecke_image(braid_word(c, [-2])) == t_inverse(from_word(c, "2"))
    assert hecke_image(braid_word(c, [-1, -2])) == t_inverse(from_word(c, "2 1"))


def test_non_reduced_word_is_not_t_w(cartan):
    c = cartan("A1")
    assert hecke_image(braid_word(c, [1, 1])) != t_basis(from_word(c, "1 1"))


@pytest.mark.parametrize("label,m", [("A2", 3), ("B2", 4), ("C2", 4), ("G2", 6), ("[[2,0],[0,2]]", 2)])
def test_braid_relation_rank_two(label, m, cartan):
    rep = verify_braid_relation(cartan(label), 1, 2)
    assert rep.ok and rep.m == m


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "D4"])
def test_braid_relations_all_pairs(label, cartan):
    c = cartan(label)
    for i in range(1, c.rank + 1):
        for j in range(i + 1, c.rank + 1):
            assert verify_braid_relation(c, i, j)


def test_braid_relation_needs_distinct(cartan):
    with pytest.raises(ValueError):
        verify_braid_relation(cartan("A2"), 1, 1)


def test_wrong_length_alternation_fails(cartan):
    # in B2 the m = 3 alternation is not a relation
    c = cartan("B2")
    assert hecke_image(braid_word(c, [1, 2, 1])) != hecke_image(braid_word(c, [2, 1, 2]))


def test_matsumoto_w0_a3(cartan):
    c = cartan("A3")
    w0 = longest_element(c)
    words = reduced_words(w0)
    assert len(words) == 16
    images = {repr(sorted((w.word, str(p)) for w, p in hecke_image(braid_word(c, wd)).terms())) for wd in words}
    assert len(images) == 1
