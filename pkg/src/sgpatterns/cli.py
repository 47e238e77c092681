"""Command-line front end: ``sgpatterns <subcommand> ...``.

Exit codes: 0 success, 1 domain error (message names the error), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Any, Optional, Sequence, TextIO

from .enumeration import census, enumerate_sp, equivalence_check, to_dot
from .errors import SgPatternsError
from .pattern import INFINITY, Pattern
from .pattern_semigroup import (
    admits,
    closure,
    minimal_p_system,
    subtraction_degree,
    subtraction_degree_bounds,
    witness_family,
)
from .semigroup import NumericalSemigroup

GRAMMAR = """\
input grammars:
  semigroup  comma-separated generators, e.g. 7,15
  pattern    term (('+'|'-') term)*, term := [coeff] 'x' index, e.g. x1+x2-x3, 10x1-7x2
             or a comma-separated coefficient list, e.g. 1,1,-1
"""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n{GRAMMAR}")
        raise SystemExit(2)


def _degree(k: Any) -> Any:
    return "infinity" if k is INFINITY else k


def _classify(p: Pattern) -> dict:
    out: dict = {
        "pattern": str(p),
        "coeffs": list(p.coeffs),
        "admissible": p.is_admissible(),
        "strongly_admissible": p.is_strongly_admissible(),
        "premonic": p.is_premonic(),
        "boolean": p.is_boolean(),
        "admissibility_degree": _degree(p.admissibility_degree()),
    }
    k = p.admissibility_degree()
    if p.is_boolean() and k is not INFINITY and k > 0:
        dec = p.boolean_decomposition()
        out["decomposition"] = {"k": dec.k, "l": dec.l, "d": dec.d}
    return out


def _cmd_classify(args) -> tuple[Any, str]:
    info = _classify(Pattern.parse(args.pattern))
    lines = [f"{k}: {str(v).lower() if isinstance(v, bool) else v}"
             for k, v in info.items() if k not in ("coeffs", "decomposition")]
    if "decomposition" in info:
        d = info["decomposition"]
        lines.append(f"boolean decomposition: k={d['k']} l={d['l']} d={d['d']}")
    return info, "\n".join(lines)


def _cmd_admits(args) -> tuple[Any, str]:
    v = admits(NumericalSemigroup.parse(args.gens), Pattern.parse(args.pattern), bound=args.bound)
    return v.to_json(), str(v)


def _cmd_closure(args) -> tuple[Any, str]:
    trace = closure(NumericalSemigroup.parse(args.gens), Pattern.parse(args.pattern))
    lines = [f"step {i}: {s}" for i, s in enumerate(trace.steps)]
    lines.append(f"fixpoint k={trace.k}")
    lines.append(str(trace.last))
    return {"steps": [s.to_json() for s in trace.steps], "k": trace.k,
            "closure": trace.last.to_json()}, "\n".join(lines)


def _cmd_psystem(args) -> tuple[Any, str]:
    gens = minimal_p_system(NumericalSemigroup.parse(args.gens), Pattern.parse(args.pattern))
    return list(gens), ",".join(map(str, gens))


def _cmd_apery(args) -> tuple[Any, str]:
    sg = NumericalSemigroup.parse(args.gens)
    modulus = sg.multiplicity if args.modulus is None else args.modulus
    w = sg.apery(modulus)
    return {"modulus": modulus, "witnesses": list(w)}, f"Ap(L,{modulus}) = w(0..{modulus - 1}) = ({','.join(map(str, w))})"


def _cmd_depth(args) -> tuple[Any, str]:
    d = NumericalSemigroup.parse(args.gens).apery_depth()
    return d, str(d)


def _cmd_subdeg(args) -> tuple[Any, str]:
    sg = NumericalSemigroup.parse(args.gens)
    s = subtraction_degree(sg)
    lo, hi = subtraction_degree_bounds(sg)
    return ({"subtraction_degree": s, "apery_depth": lo, "upper_bound": hi},
            f"{s} (bounds: apery_depth={lo}, ceil(c/m)+1={hi})")


def _cmd_enumerate(args) -> tuple[Any, str]:
    dag = enumerate_sp(Pattern.parse(args.pattern), args.max_frobenius)
    if args.dot:
        args.format = "dot"
    lines = []
    for node in dag.sorted_nodes():
        kids = " ".join(f"<{','.join(map(str, c.minimal_generators))}>"
                        for c in dag.children(node.semigroup))
        lines.append(f"<{','.join(map(str, node.psystem))}>_p F={node.frobenius} children: {kids or '-'}")
    lines.append(f"{len(dag)} semigroups, {len(dag.edges)} edges")
    return dag, "\n".join(lines)


def _cmd_census(args) -> tuple[Any, str]:
    sgs = census(args.max_genus)
    counts = Counter(s.genus for s in sgs)
    per = [counts[g] for g in range(args.max_genus + 1)]
    text = "\n".join(f"genus {g}: {n}" for g, n in enumerate(per)) + f"\ntotal: {len(sgs)}"
    return {"per_genus": per, "total": len(sgs)}, text


def _cmd_equiv(args) -> tuple[Any, str]:
    v = equivalence_check(Pattern.parse(args.p1), Pattern.parse(args.p2), args.max_genus)
    return v.to_json(), str(v)


def _cmd_witness_family(args) -> tuple[Any, str]:
    sg = witness_family(args.q, args.k)
    return sg.to_json(), str(sg)


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "dot"], default=argparse.SUPPRESS)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)

    parser = _Parser(prog="sgpatterns", description=__doc__, epilog=GRAMMAR,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--format", choices=["text", "json", "dot"], default="text")
    parser.add_argument("--quiet", action="store_true", default=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help, epilog=GRAMMAR)
        sp.set_defaults(func=func)
        return sp

    sp = add("classify", _cmd_classify, "pattern invariants")
    sp.add_argument("pattern")
    sp = add("admits", _cmd_admits, "does the semigroup admit the pattern")
    sp.add_argument("gens")
    sp.add_argument("pattern")
    sp.add_argument("--bound", type=_positive, default=None)
    sp = add("closure", _cmd_closure, "p-closure with its trace")
    sp.add_argument("gens")
    sp.add_argument("pattern")
    sp = add("psystem", _cmd_psystem, "minimal p-system of generators")
    sp.add_argument("gens")
    sp.add_argument("pattern")
    sp = add("apery", _cmd_apery, "Apery set (default modulus: multiplicity)")
    sp.add_argument("gens")
    sp.add_argument("modulus", nargs="?", type=int, default=None)
    sp = add("depth", _cmd_depth, "Apery depth")
    sp.add_argument("gens")
    sp = add("subdeg", _cmd_subdeg, "subtraction degree")
    sp.add_argument("gens")
    sp = add("enumerate", _cmd_enumerate, "DAG of S(p) up to a Frobenius bound")
    sp.add_argument("pattern")
    sp.add_argument("--max-frobenius", type=_nonnegative, required=True)
    sp.add_argument("--dot", action="store_true")
    sp = add("census", _cmd_census, "all semigroups up to a genus")
    sp.add_argument("--max-genus", type=_nonnegative, required=True)
    sp = add("equiv", _cmd_equiv, "search for a semigroup separating two patterns")
    sp.add_argument("p1")
    sp.add_argument("p2")
    sp.add_argument("--max-genus", type=_nonnegative, default=10)
    sp = add("witness-family", _cmd_witness_family, "semigroup separating boolean patterns by d")
    sp.add_argument("q", type=int)
    sp.add_argument("k", type=int)
    return parser


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result, text = args.func(args)
    except SgPatternsError as exc:
        if args.format == "json":
            out.write(json.dumps({"ok": False, "error": exc.code, "message": str(exc)}, separators=(",", ":")) + "\n")
        err.write(f"error: {exc.code}: {exc}\n")
        return 1
    if args.quiet:
        return 0
    if args.format == "dot":
        if not hasattr(result, "edges"):
            err.write("error: --format dot is only available for enumerate\n")
            return 2
        out.write(to_dot(result) + "\n")
    elif args.format == "json":
        payload = result.to_json() if hasattr(result, "to_json") else result
        out.write(json.dumps({"ok": True, "result": payload}, separators=(",", ":")) + "\n")
    else:
        out.write(text + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
