"""Closures of a few two- and three-generator semigroups under several patterns.

Shows that closures separate patterns: x1+x2+x3+x4-x5 and x1+3x2-x3 give
different closures of <10,21,23>, so they are not equivalent.
"""

from dataclasses import dataclass, field

from sgpatterns import Pattern, closure, minimal_p_system, sg


@dataclass
class Config:
    semigroups: list = field(default_factory=lambda: [(7, 15), (10, 21, 23), (5, 6, 13), (7, 8, 17, 26)])
    patterns: list = field(
        default_factory=lambda: [
            "x1+x2+x3-x4",
            "x1+2x2-x3",
            "x1+3x2-x3",
            "x1+x2+x3+x4-x5",
            "x1+x2+2x3-x4",
            "x1+x2+x3+x4-x5-x6",
            "x1+x2+x3-x4+x5+x6-x7-x8",
        ]
    )


def main(cfg: Config) -> None:
    for gens in cfg.semigroups:
        start = sg(*gens)
        print(start)
        for text in cfg.patterns:
            p = Pattern.parse(text)
            trace = closure(start, p)
            psys = minimal_p_system(trace.last, p)
            print(f"  {text:<26} steps={trace.k}  closure={trace.last}  p-system={psys}")


if __name__ == "__main__":
    main(Config())
