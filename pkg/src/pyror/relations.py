"""Boolean relation matrices plus their set algebra, DOT export and Hasse reduction."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
import numpy as np

from .errors import NotTransitive, UnknownAlternative


@dataclass(frozen=True)
class RelationMatrix:
    """One binary relation over a fixed alternative ordering.

    `bits[r][c]` is true iff the relation holds for (order[r], order[c]).
    `boundary` lists pairs decided within the solver's strictness threshold.
    """

    kind: str
    order: tuple[str, ...]
    bits: np.ndarray
    boundary: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        b = np.asarray(self.bits, dtype=bool)
        if b.shape != (len(self.order), len(self.order)):
            raise ValueError("bits must be a square |A| x |A| matrix")
        object.__setattr__(self, "bits", b)

    def _idx(self, alt: str) -> int:
        try:
            return self.order.index(alt)
        except ValueError:
            raise UnknownAlternative(f"unknown alternative {alt!r}") from None

    def holds(self, a: str, b: str) -> bool:
        return bool(self.bits[self._idx(a), self._idx(b)])

    def pairs(self) -> list[tuple[str, str]]:
        rows, cols = np.nonzero(self.bits)
        return [(self.order[r], self.order[c]) for r, c in zip(rows, cols)]

    # -- set algebra used by the property suite --------------------------------

    def issubset(self, other: "RelationMatrix") -> bool:
        return bool(np.all(~self.bits | other.bits))

    def intersect(self, other: "RelationMatrix", kind: str | None = None) -> "RelationMatrix":
        return RelationMatrix(kind or f"({self.kind})&({other.kind})", self.order, self.bits & other.bits)

    def union(self, other: "RelationMatrix", kind: str | None = None) -> "RelationMatrix":
        return RelationMatrix(kind or f"({self.kind})|({other.kind})", self.order, self.bits | other.bits)

    def compose(self, other: "RelationMatrix") -> "RelationMatrix":
        """Relational composition: (a, c) iff some b with a R b and b S c."""
        bits = (self.bits.astype(np.uint8) @ other.bits.astype(np.uint8)) > 0
        return RelationMatrix(f"({self.kind});({other.kind})", self.order, bits)

    def transpose(self) -> "RelationMatrix":
        return RelationMatrix(f"{self.kind}^T", self.order, self.bits.T.copy())

    def complement(self) -> "RelationMatrix":
        return RelationMatrix(f"!({self.kind})", self.order, ~self.bits)

    def strict_part(self) -> "RelationMatrix":
        return RelationMatrix(f"strict({self.kind})", self.order, self.bits & ~self.bits.T)

    def is_reflexive(self) -> bool:
        return bool(np.all(np.diag(self.bits)))

    def is_transitive(self) -> bool:
        return self.compose(self).issubset(self)

    def is_strongly_complete(self) -> bool:
        return bool(np.all(self.bits | self.bits.T))

    def is_negatively_transitive(self) -> bool:
        return self.complement().compose(self.complement()).issubset(self.complement())

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "order": list(self.order),
            "bits": [[bool(v) for v in row] for row in self.bits],
            "boundary": [list(p) for p in self.boundary],
        }

    def to_adjacency_dict(self) -> dict:
        """Adjacency-list form: one [a, b] entry per true bit."""
        return {
            "kind": self.kind,
            "order": list(self.order),
            "arcs": [[a, b] for a, b in self.pairs()],
        }


@dataclass(frozen=True)
class HasseDiagram:
    """Transitive reduction of a relation's strict part, indifference classes merged."""

    nodes: tuple[tuple[str, ...], ...]
    arcs: tuple[tuple[int, int], ...]

    def node_label(self, idx: int) -> str:
        return " = ".join(self.nodes[idx])

    def has_arc(self, a: str, b: str) -> bool:
        """Arc from the class containing a to the class containing b."""
        src = dst = None
        for i, members in enumerate(self.nodes):
            if a in members:
                src = i
            if b in members:
                dst = i
        return src is not None and dst is not None and (src, dst) in self.arcs

    def to_json_dict(self) -> dict:
        return {
            "nodes": [list(m) for m in self.nodes],
            "arcs": [list(arc) for arc in self.arcs],
        }


def hasse(matrix: RelationMatrix) -> HasseDiagram:
    """Merge mutual pairs into single nodes and transitively reduce the strict part.

    Requires the strict part to be transitive (as for dominance, necessary and
    possible relations); raises NotTransitive otherwise.
    """
    n = len(matrix.order)
    bits = matrix.bits
    sym = bits & bits.T

    # indifference classes: connected components of the mutual-pair graph
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in range(n):
        for c in range(r + 1, n):
            if sym[r, c]:
                parent[find(r)] = find(c)

    roots: dict[int, list[int]] = {}
    for v in range(n):
        roots.setdefault(find(v), []).append(v)
    classes = sorted(roots.values(), key=lambda members: members[0])
    class_of = {v: ci for ci, members in enumerate(classes) for v in members}

    strict = bits & ~bits.T
    quotient = np.zeros((len(classes), len(classes)), dtype=bool)
    for r, c in zip(*np.nonzero(strict)):
        ci, cj = class_of[r], class_of[c]
        if ci == cj:
            raise NotTransitive("strict arc inside an indifference class")
        quotient[ci, cj] = True
    if np.any(quotient & quotient.T):
        raise NotTransitive("strict part contains a 2-cycle between classes")
    closure = (quotient.astype(np.uint8) @ quotient.astype(np.uint8)) > 0
    if np.any(closure & ~quotient):
        raise NotTransitive("strict part is not transitively closed")

    dag = nx.DiGraph()
    dag.add_nodes_from(range(len(classes)))
    dag.add_edges_from((int(r), int(c)) for r, c in zip(*np.nonzero(quotient)))
    reduced = nx.transitive_reduction(dag)

    nodes = tuple(tuple(matrix.order[v] for v in members) for members in classes)
    arcs = tuple(sorted(reduced.edges()))
    return HasseDiagram(nodes=nodes, arcs=arcs)


def _quote(name: str) -> str:
    return '"' + name.replace('"', '\\"') + '"'


def to_dot(matrix: RelationMatrix, reduced: bool = False) -> str:
    """DOT digraph of a relation: one arc per true off-diagonal bit.

    With `reduced`, indifference classes are merged and the strict part is
    transitively reduced (Hasse presentation).
    """
    lines = [f"digraph {_quote(matrix.kind)} {{"]
    if reduced:
        diagram = hasse(matrix)
        for members in diagram.nodes:
            lines.append(f"  {_quote(' = '.join(members))};")
        for src, dst in diagram.arcs:
            lines.append(
                f"  {_quote(diagram.node_label(src))} -> {_quote(diagram.node_label(dst))};"
            )
    else:
        for alt in matrix.order:
            lines.append(f"  {_quote(alt)};")
        for a, b in matrix.pairs():
            if a != b:
                lines.append(f"  {_quote(a)} -> {_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
