#!/usr/bin/env python3
"""Time a full KL computation cold, then again from a stored cache."""
import argparse
import dataclasses
import os
import tempfile
import time

from heckebraid import hecke, weyl
from heckebraid.cache import load_cache, store_cache
from heckebraid.hecke import KLTable
from heckebraid.rootdata import build_cartan


@dataclasses.dataclass
class Config:
    cartan: str = "B3"
    repeats: int = 3


def _full(table: KLTable) -> None:
    for w in weyl.all_elements(table.cartan):
        table.basis_element(w)


def _clear() -> None:
    weyl.all_elements.cache_clear()
    weyl.bruhat_leq.cache_clear()
    hecke._rmul.cache_clear()
    hecke._lmul.cache_clear()


def run(cfg: Config) -> None:
    c = build_cartan(cfg.cartan)
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "kl.jsonl")
        cold, warm, trusting = [], [], []
        for _ in range(cfg.repeats):
            _clear()
            t0 = time.perf_counter()
            table = KLTable(c)
            _full(table)
            cold.append(time.perf_counter() - t0)
            store_cache(table, path, append=False)

            _clear()
            t0 = time.perf_counter()
            loaded, _ = load_cache(path, c)
            _full(loaded)
            warm.append(time.perf_counter() - t0)
            assert loaded.polys == table.polys and loaded.computed == 0

            _clear()
            t0 = time.perf_counter()
            loaded, _ = load_cache(path, c, KLTable(c, verify=False))
            _full(loaded)
            trusting.append(time.perf_counter() - t0)
        size = os.path.getsize(path)
    print(f"{c.label}: {len(table.polys)} polynomials, cache {size / 1024:.1f} KiB")
    print(f"  cold   best {min(cold):.3f}s")
    print(f"  cached best {min(warm):.3f}s (load + re-verify)")
    print(f"  cached best {min(trusting):.3f}s (load only, verification off)")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("cartan", nargs="?", default=Config.cartan)
    ap.add_argument("--repeats", type=int, default=Config.repeats)
    run(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
