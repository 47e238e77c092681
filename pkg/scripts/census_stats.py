"""Per-genus counts of semigroups, Arf semigroups and subtraction degrees.

    python3 scripts/census_stats.py --max-genus 12
"""

import argparse
from collections import Counter, defaultdict
from dataclasses import dataclass

from sgpatterns import admits, arf_pattern, census, subtraction_degree
from sgpatterns.pattern_semigroup import subtraction_degree_bounds


@dataclass
class Config:
    max_genus: int = 10


def main(cfg: Config) -> None:
    pool = census(cfg.max_genus)
    arf = arf_pattern()
    by_genus = defaultdict(Counter)
    tight = 0
    for s in pool:
        row = by_genus[s.genus]
        row["total"] += 1
        row["arf"] += admits(s, arf).admits
        sd = subtraction_degree(s)
        row[f"sd={sd}"] += 1
        lo, _ = subtraction_degree_bounds(s)
        tight += sd == lo
    degrees = sorted({k for row in by_genus.values() for k in row if k.startswith("sd=")},
                     key=lambda k: int(k[3:]))
    print("genus total arf " + " ".join(degrees))
    for g in sorted(by_genus):
        row = by_genus[g]
        print(f"{g:>5} {row['total']:>5} {row['arf']:>3} " + " ".join(f"{row[k]:>{len(k)}}" for k in degrees))
    print(f"subtraction degree equals Apery depth for {tight}/{len(pool)} semigroups")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-genus", type=int, default=Config.max_genus)
    main(Config(ap.parse_args().max_genus))
