import json
import logging

from heckebraid.cache import load_cache, store_cache
from heckebraid.hecke import KLTable
from heckebraid.schemas import CACHE_RECORD, validate
from heckebraid.weyl import all_elements, longest_element


def full_table(c):
    table = KLTable(c)
    for w in all_elements(c):
        table.basis_element(w)
    return table


def test_round_trip(tmp_path, cartan):
    c = cartan("A3")
    table = full_table(c)
    path = tmp_path / "kl.jsonl"
    n = store_cache(table, path)
    assert n == len(table.polys)
    for line in path.read_text().splitlines():
        validate(json.loads(line), CACHE_RECORD)
    loaded, stats = load_cache(path, c)
    assert stats.loaded == n and stats.corrupt == 0
    assert loaded.polys == table.polys


def test_cache_hits_skip_recursion(tmp_path, cartan):
    c = cartan("B3")
    table = full_table(c)
    path = tmp_path / "kl.jsonl"
    store_cache(table, path)
    loaded, _ = load_cache(path, c)
    w0 = longest_element(c)
    assert loaded.basis_element(w0) == table.basis_element(w0)
    assert loaded.cache_hits == 1
    assert loaded.computed == 0


def test_empty_and_missing(tmp_path, cartan, caplog):
    c = cartan("A2")
    empty = tmp_path / "empty.jsonl"
    empty.write_text("")
    with caplog.at_level(logging.WARNING):
        table, stats = load_cache(empty, c)
        assert len(table.polys) == 0 and stats.loaded == 0
        table, stats = load_cache(tmp_path / "missing.jsonl", c)
        assert len(table.polys) == 0
    assert "empty" in caplog.text and "does not exist" in caplog.text


def test_corrupt_lines_skipped(tmp_path, cartan, caplog):
    c = cartan("A2")
    path = tmp_path / "kl.jsonl"
    store_cache(full_table(c), path)
    with open(path, "a") as fh:
        fh.write("{not json\n")
        fh.write('{"cartan": "A2", "y": "9", "w": "1", "poly": {"terms": [[0, 1]]}}\n')
        fh.write('{"cartan": "A2", "y": 1, "w": "1", "poly": {"terms": [[0, 1]]}}\n')
        fh.write('{"cartan": "B2", "y": "", "w": "1", "poly": {"terms": [[0, 1]]}}\n')
    with caplog.at_level(logging.WARNING):
        table, stats = load_cache(path, c)
    assert stats.corrupt == 3 and stats.foreign == 1
    assert "corrupt" in caplog.text
    fresh = full_table(c)
    for w in all_elements(c):
        assert table.basis_element(w) == fresh.basis_element(w)


def test_bad_polynomial_is_discarded(tmp_path, cartan, caplog):
    c = cartan("A2")
    path = tmp_path / "kl.jsonl"
    store_cache(full_table(c), path)
    w0 = longest_element(c)
    # last writer wins: this record replaces the good P_{e,w0} = 1
    with open(path, "a") as fh:
        fh.write(json.dumps({"cartan": "A2", "y": "", "w": "1 2 1", "poly": {"terms": [[1, 5]]}}) + "\n")
    table, stats = load_cache(path, c)
    with caplog.at_level(logging.WARNING):
        cw0 = table.basis_element(w0)
    assert "discarding" in caplog.text
    assert cw0 == full_table(c).basis_element(w0)


def test_append_is_last_writer_wins(tmp_path, cartan):
    c = cartan("A2")
    path = tmp_path / "kl.jsonl"
    t = full_table(c)
    store_cache(t, path)
    store_cache(t, path)
    loaded, stats = load_cache(path, c)
    assert stats.loaded == 2 * len(t.polys)
    assert loaded.polys == t.polys
