"""Draw S(x1+x2+x3-x4) up to a Frobenius bound as Graphviz DOT.

    python3 scripts/draw_sp_dag.py --max-frobenius 7 > sp.dot
    dot -Tpng sp.dot -o sp.png
"""

import argparse
from dataclasses import dataclass

from sgpatterns import Pattern
from sgpatterns.enumeration import enumerate_sp, to_dot


@dataclass
class Config:
    pattern: str = "x1+x2+x3-x4"
    max_frobenius: int = 7


def main(cfg: Config) -> None:
    dag = enumerate_sp(Pattern.parse(cfg.pattern), cfg.max_frobenius)
    print(to_dot(dag))
    leaves = ", ".join(str(s.minimal_generators) for s in dag.leaves())
    print(f"// {len(dag)} nodes, {len(dag.edges)} edges; leaves: {leaves}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--pattern", default=Config.pattern)
    ap.add_argument("--max-frobenius", type=int, default=Config.max_frobenius)
    args = ap.parse_args()
    main(Config(args.pattern, args.max_frobenius))
