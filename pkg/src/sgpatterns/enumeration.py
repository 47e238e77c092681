"""The DAG of S(p), the genus census, bounded equivalence checks, DOT/JSON export."""

from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .errors import NotStronglyAdmissible
from .pattern import INFINITY, Pattern
from .pattern_semigroup import (
    _require_closable,
    admits,
    minimal_p_system,
    witness_family,
)
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class DagNode:
    semigroup: NumericalSemigroup
    psystem: tuple[int, ...]

    @property
    def frobenius(self) -> int:
        return self.semigroup.frobenius


@dataclass
class SemigroupDag:
    """Nodes keyed by canonical semigroup; edges ``(parent, child, removed)``."""

    nodes: dict[NumericalSemigroup, DagNode] = field(default_factory=dict)
    edges: set[tuple[NumericalSemigroup, NumericalSemigroup, int]] = field(default_factory=set)
    root: Optional[NumericalSemigroup] = None

    def sorted_nodes(self) -> list[DagNode]:
        return [self.nodes[s] for s in sorted(self.nodes, key=lambda s: s.sort_key)]

    def sorted_edges(self) -> list[tuple[NumericalSemigroup, NumericalSemigroup, int]]:
        return sorted(self.edges, key=lambda e: (e[0].sort_key, e[1].sort_key, e[2]))

    def children(self, sg: NumericalSemigroup) -> list[NumericalSemigroup]:
        return sorted((c for p, c, _ in self.edges if p == sg), key=lambda s: s.sort_key)

    def parents(self, sg: NumericalSemigroup) -> list[NumericalSemigroup]:
        return sorted((p for p, c, _ in self.edges if c == sg), key=lambda s: s.sort_key)

    def leaves(self) -> list[NumericalSemigroup]:
        inner = {p for p, _, _ in self.edges}
        return [n.semigroup for n in self.sorted_nodes() if n.semigroup not in inner]

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, sg: NumericalSemigroup) -> bool:
        return sg in self.nodes

    def to_json(self) -> dict:
        return {
            "nodes": [
                {"key": n.semigroup.key, "psystem": list(n.psystem), "frobenius": n.frobenius}
                for n in self.sorted_nodes()
            ],
            "edges": [
                {"from": p.key, "to": c.key, "removed": a} for p, c, a in self.sorted_edges()
            ],
        }


def _expand(
    root: NumericalSemigroup,
    generators: Callable[[NumericalSemigroup], tuple[int, ...]],
    keep: Callable[[NumericalSemigroup], bool],
) -> SemigroupDag:
    """Breadth-first walk from ``root``: children are ``L \\ {a}`` for ``a > F(L)``."""
    dag = SemigroupDag(root=root)
    dag.nodes[root] = DagNode(root, generators(root))
    queue = deque([root])
    while queue:
        sg = queue.popleft()
        for a in dag.nodes[sg].psystem:
            if a <= sg.frobenius:
                continue
            child = sg.remove(a)
            if not keep(child):
                continue
            if child not in dag.nodes:
                dag.nodes[child] = DagNode(child, generators(child))
                queue.append(child)
            dag.edges.add((sg, child, a))
    return dag


def enumerate_sp(p: Pattern, max_frobenius: int) -> SemigroupDag:
    """Every semigroup admitting ``p`` with Frobenius number at most ``max_frobenius``."""
    _require_closable(p)
    return _expand(
        NumericalSemigroup.naturals(),
        lambda sg: minimal_p_system(sg, p),
        lambda sg: sg.frobenius <= max_frobenius,
    )


def enumerate_all(max_genus: int) -> SemigroupDag:
    """All numerical semigroups of genus at most ``max_genus`` (the semigroup tree)."""
    return _expand(
        NumericalSemigroup.naturals(),
        lambda sg: sg.minimal_generators,
        lambda sg: sg.genus <= max_genus,
    )


def census(max_genus: int) -> list[NumericalSemigroup]:
    """The semigroups of :func:`enumerate_all`, ordered by genus then canonical key."""
    return sorted(enumerate_all(max_genus).nodes, key=lambda s: (s.genus, s.sort_key))


class Equivalence(enum.Enum):
    SEPARATED = "Separated"
    INDISTINGUISHABLE = "IndistinguishableUpToGenus"


@dataclass(frozen=True)
class EquivalenceVerdict:
    status: Equivalence
    separator: Optional[NumericalSemigroup] = None
    genus_bound: Optional[int] = None
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "separator": None if self.separator is None else self.separator.to_json(),
            "genus_bound": self.genus_bound,
            "reason": self.reason,
        }

    def __str__(self) -> str:
        if self.status is Equivalence.SEPARATED:
            return f"SEPARATED by {self.separator} ({self.reason})"
        return f"INDISTINGUISHABLE up to genus {self.genus_bound}"


def _separates(sg: NumericalSemigroup, p1: Pattern, p2: Pattern) -> bool:
    v1, v2 = admits(sg, p1), admits(sg, p2)
    return v1.exact and v2.exact and v1.admits != v2.admits


def _boolean_certificate(p1: Pattern, p2: Pattern) -> Optional[tuple[NumericalSemigroup, str]]:
    """Separator built from the boolean invariants, or None when they agree."""
    if not (p1.is_boolean() and p2.is_boolean()):
        return None
    k1, k2 = p1.admissibility_degree(), p2.admissibility_degree()
    if k1 != k2:
        # <q, q+1> admits a boolean pattern iff its degree is >= q
        low = min(k for k in (k1, k2) if k is not INFINITY)
        q = low + 1
        return NumericalSemigroup.from_generators((q, q + 1)), f"admissibility degrees {k1} vs {k2}"
    if k1 is INFINITY or k1 <= 2:
        return None
    d1, d2 = p1.boolean_decomposition().d, p2.boolean_decomposition().d
    if d1 == d2:
        return None
    # the family admits exactly the degree-k boolean patterns with d <= q - k - 1
    q = min(d1, d2) + k1 + 1
    return witness_family(q, k1), f"d-invariants {d1} vs {d2} at degree {k1}"


def equivalence_check(
    p1: Pattern,
    p2: Pattern,
    max_genus: int = 10,
    candidates: Optional[Iterable[NumericalSemigroup]] = None,
) -> EquivalenceVerdict:
    """Look for a semigroup admitting exactly one of ``p1``, ``p2``.

    Boolean invariants are tried first; otherwise the census of genus up to
    ``max_genus`` is scanned. Never concludes equivalence, only that no
    separator exists within the bound.
    """
    for p in (p1, p2):
        if not p.is_strongly_admissible():
            raise NotStronglyAdmissible(f"{p} is not strongly admissible")
    cert = _boolean_certificate(p1, p2)
    if cert is not None and _separates(cert[0], p1, p2):
        return EquivalenceVerdict(Equivalence.SEPARATED, cert[0], max_genus, cert[1])
    pool = census(max_genus) if candidates is None else candidates
    for sg in pool:
        if _separates(sg, p1, p2):
            return EquivalenceVerdict(Equivalence.SEPARATED, sg, max_genus, "census scan")
    return EquivalenceVerdict(Equivalence.INDISTINGUISHABLE, None, max_genus)


def node_label(node: DagNode) -> str:
    return f"<{','.join(map(str, node.psystem))}>_p, F={node.frobenius}"


def to_dot(dag: SemigroupDag, name: str = "S") -> str:
    """Graphviz digraph; byte-identical for identical DAGs."""
    if not dag.nodes:
        return f"digraph {name} {{}}"
    lines = [f"digraph {name} {{"]
    for node in dag.sorted_nodes():
        lines.append(f'  "{node.semigroup.key}" [label="{node_label(node)}"];')
    for parent, child, a in dag.sorted_edges():
        lines.append(f'  "{parent.key}" -> "{child.key}" [label="{a}"];')
    lines.append("}")
    return "\n".join(lines)


def to_json_text(dag: SemigroupDag) -> str:
    return json.dumps(dag.to_json(), separators=(",", ":"))
