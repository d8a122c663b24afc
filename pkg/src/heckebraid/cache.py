"""
JSON-lines persistence for KL tables.

One record per line: {"cartan": ..., "y": "1 2", "w": "1 2 1", "poly": {"terms": [...]}}.
Files are append-only; on load the last record for a key wins. Lines that do
not parse are skipped and counted, and loaded columns are re-verified by the
table before use.
"""
from __future__ import annotations

import dataclasses
import json
import logging
import os

from .hecke import KLTable
from .laurent import LaurentPolyQ
from .rootdata import CartanDatum
from .weyl import from_word

log = logging.getLogger(__name__)


@dataclasses.dataclass
class CacheStats:
    loaded: int = 0
    corrupt: int = 0
    foreign: int = 0


def store_cache(table: KLTable, path: str | os.PathLike, append: bool = True) -> int:
    """Write every entry of ``table``; returns the number of records written."""
    n = 0
    with open(path, "a" if append else "w", encoding="utf-8") as fh:
        for y, w, poly in table.records():
            rec = {"cartan": table.cartan.key, "y": y, "w": w, "poly": poly.to_json()}
            fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
            n += 1
    return n


def load_cache(
    path: str | os.PathLike, cartan: CartanDatum, table: KLTable | None = None
) -> tuple[KLTable, CacheStats]:
    """Read records for ``cartan`` into ``table`` (a fresh one if omitted)."""
    if table is None:
        table = KLTable(cartan)
    stats = CacheStats()
    if not os.path.exists(path):
        log.warning("KL cache %s does not exist; starting empty", path)
        return table, stats
    with open(path, encoding="utf-8") as fh:
        lines = fh.readlines()
    if not any(line.strip() for line in lines):
        log.warning("KL cache %s is empty", path)
        return table, stats
    # the same few words recur across many records; parse each once
    elements: dict[str, object] = {}

    def element(word: str):
        if word not in elements:
            elements[word] = from_word(cartan, word)
        return elements[word]

    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            if rec["cartan"] != cartan.key:
                stats.foreign += 1
                continue
            if not isinstance(rec["y"], str) or not isinstance(rec["w"], str):
                raise TypeError("words must be strings")
            y = element(rec["y"])
            w = element(rec["w"])
            poly = LaurentPolyQ.from_json(rec["poly"])
        except (ValueError, KeyError, TypeError, IndexError) as exc:
            stats.corrupt += 1
            log.debug("skipping corrupt cache line %d: %s", lineno, exc)
            continue
        table.insert(y, w, poly)
        stats.loaded += 1
    if stats.corrupt:
        log.warning("skipped %d corrupt record(s) in KL cache %s", stats.corrupt, path)
    return table, stats
