"""Smallest-genus semigroup separating two patterns, by census scan.

    python3 scripts/separator_search.py x1+x2+x3+x4-x5 x1+3x2-x3 --max-genus 18
"""

import argparse
import time
from dataclasses import dataclass

from sgpatterns import Pattern, admits
from sgpatterns.enumeration import equivalence_check


@dataclass
class Config:
    p1: str
    p2: str
    max_genus: int = 18


def main(cfg: Config) -> None:
    p1, p2 = Pattern.parse(cfg.p1), Pattern.parse(cfg.p2)
    t0 = time.perf_counter()
    v = equivalence_check(p1, p2, max_genus=cfg.max_genus)
    print(v)
    if v.separator is not None:
        s = v.separator
        print(f"genus {s.genus}: {p1} -> {admits(s, p1)}; {p2} -> {admits(s, p2)}")
    print(f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("p1")
    ap.add_argument("p2")
    ap.add_argument("--max-genus", type=int, default=18)
    a = ap.parse_args()
    main(Config(a.p1, a.p2, a.max_genus))
