#!/usr/bin/env python3
"""Print the non-trivial Kazhdan-Lusztig polynomials of a finite Weyl group."""
import argparse
import dataclasses
import time

from heckebraid.cache import load_cache, store_cache
from heckebraid.hecke import KLTable
from heckebraid.rootdata import build_cartan
from heckebraid.weyl import all_elements, format_word


@dataclasses.dataclass
class Config:
    cartan: str = "A3"
    cache: str | None = None
    show_trivial: bool = False
    descent: str = "first"


def run(cfg: Config) -> None:
    c = build_cartan(cfg.cartan)
    table = KLTable(c, descent=cfg.descent)
    if cfg.cache:
        table, stats = load_cache(cfg.cache, c, table)
        print(f"# cache: {stats.loaded} records loaded, {stats.corrupt} corrupt")
    t0 = time.perf_counter()
    elements = all_elements(c)
    rows = []
    for w in elements:
        for y, p in table.basis_element(w).terms():
            if cfg.show_trivial or p != 1:
                rows.append((format_word(y.word) or "e", format_word(w.word) or "e", p))
    dt = time.perf_counter() - t0
    width = max([len(r[0]) for r in rows] + [1])
    for y, w, p in rows:
        print(f"{y:>{width}}  {w:>{2 * c.rank + 20}}  {p}")
    print(f"# {c.label}: |W| = {len(elements)}, {len(rows)} rows, {table.computed} computed, "
          f"{table.cache_hits} cache hits, {dt:.2f}s")
    if cfg.cache:
        store_cache(table, cfg.cache, append=False)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("cartan", nargs="?", default=Config.cartan)
    ap.add_argument("--cache", help="JSON-lines KL cache to read and rewrite")
    ap.add_argument("--all", dest="show_trivial", action="store_true", help="also list P = 1")
    ap.add_argument("--descent", choices=["first", "last"], default=Config.descent)
    run(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
