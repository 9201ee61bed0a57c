"""Plumbing graphs and exact invariants of their intersection forms.

A plumbing graph is a weighted simple forest: vertices are embedded spheres
carrying integer Euler numbers, edges are plumbing points.  Its intersection
form is the symmetric integer matrix with the weights on the diagonal and a 1
for every edge.  All invariants (determinant, signature, definiteness, parity)
are computed in exact integer/rational arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable, Literal, Sequence

from .exact import congruence_pivots, determinant

Definiteness = Literal["negative-definite", "positive-definite", "indefinite", "degenerate"]
Parity = Literal["even", "odd"]


@dataclass(frozen=True)
class SymIntMatrix:
    """Symmetric integer matrix, stored as an immutable tuple of rows."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i},{j})")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "SymIntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.n))

    def evaluate(self, v: Sequence[int]) -> int:
        """v^T Q v, exactly."""
        if len(v) != self.n:
            raise ValueError("vector length does not match matrix dimension")
        return sum(v[i] * self.entries[i][j] * v[j] for i in range(self.n) for j in range(self.n))


@dataclass(frozen=True)
class PlumbingGraph:
    """Weighted simple forest; vertices are (id, weight) in declaration order."""

    vertices: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        ids = [v for v, _ in self.vertices]
        declared = set(ids)
        if len(declared) != len(ids):
            raise ValueError("duplicate vertex ids")
        normalized: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if a not in declared or b not in declared:
                raise ValueError(f"edge ({a},{b}) references an undeclared vertex")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise ValueError(f"repeated edge ({a},{b})")
            seen.add(key)
            normalized.append(key)
        object.__setattr__(self, "edges", tuple(normalized))
        self._check_forest()

    def _check_forest(self) -> None:
        parent = {v: v for v, _ in self.vertices}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                raise ValueError("edge set contains a cycle")
            parent[ra] = rb

    @property
    def n(self) -> int:
        return len(self.vertices)

    def weights(self) -> tuple[int, ...]:
        return tuple(w for _, w in self.vertices)

    def to_dict(self) -> dict[str, Any]:
        return {
            "vertices": [{"id": v, "weight": w} for v, w in self.vertices],
            "edges": [[a, b] for a, b in self.edges],
        }


@dataclass(frozen=True)
class InvariantReport:
    """Classical invariants of a symmetric integer form, all exact."""

    b2: int
    determinant: int
    signature: int
    b2_plus: int
    b2_minus: int
    b2_zero: int
    euler: int
    definiteness: Definiteness
    parity: Parity

    def to_dict(self) -> dict[str, Any]:
        return {
            "b2": self.b2,
            "determinant": self.determinant,
            "signature": self.signature,
            "b2_plus": self.b2_plus,
            "b2_minus": self.b2_minus,
            "b2_zero": self.b2_zero,
            "euler": self.euler,
            "definiteness": self.definiteness,
            "parity": self.parity,
        }


def parse_graph(text: str) -> PlumbingGraph:
    """Parse the graph JSON document into a validated PlumbingGraph.

    Expected shape: {"vertices":[{"id":int,"weight":int},...],"edges":[[int,int],...]}.
    Raises ValueError on malformed JSON, duplicate ids, loops, repeated edges,
    cycles, or edges touching undeclared vertices.
    """
    doc = json.loads(text)
    return graph_from_dict(doc)


def _as_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


def graph_from_dict(doc: Any) -> PlumbingGraph:
    if not isinstance(doc, dict):
        raise ValueError("graph document must be a JSON object")
    raw_vertices = doc.get("vertices")
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_vertices, list):
        raise ValueError('graph document needs a "vertices" list')
    if not isinstance(raw_edges, list):
        raise ValueError('"edges" must be a list of [id, id] pairs')
    vertices: list[tuple[int, int]] = []
    for item in raw_vertices:
        if not isinstance(item, dict) or "id" not in item or "weight" not in item:
            raise ValueError(f'vertex {item!r} must be an object with "id" and "weight"')
        vertices.append((_as_int(item["id"], "vertex id"), _as_int(item["weight"], "vertex weight")))
    edges: list[tuple[int, int]] = []
    for item in raw_edges:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ValueError(f"edge {item!r} must be a pair of vertex ids")
        edges.append((_as_int(item[0], "edge endpoint"), _as_int(item[1], "edge endpoint")))
    return PlumbingGraph(tuple(vertices), tuple(edges))


def linear_chain(weights: Sequence[int]) -> PlumbingGraph:
    """The linear plumbing with the given weights, vertices numbered 0..n-1."""
    vertices = tuple((i, int(w)) for i, w in enumerate(weights))
    edges = tuple((i, i + 1) for i in range(len(weights) - 1))
    return PlumbingGraph(vertices, edges)


def chain_weights(g: PlumbingGraph) -> list[int]:
    """Extract the weight list of a linear-chain graph, in path order.

    The path is read from the endpoint with the smallest vertex id, which makes
    the result independent of declaration order.  Raises ValueError when the
    graph is not a single linear chain (branch vertex, or more than one
    component).
    """
    if g.n == 0:
        return []
    if g.n == 1:
        return [g.vertices[0][1]]
    adjacency: dict[int, list[int]] = {v: [] for v, _ in g.vertices}
    for a, b in g.edges:
        adjacency[a].append(b)
        adjacency[b].append(a)
    degrees = {v: len(nbrs) for v, nbrs in adjacency.items()}
    if any(d > 2 for d in degrees.values()):
        raise ValueError("graph is not a linear chain (branch vertex)")
    if len(g.edges) != g.n - 1:
        raise ValueError("graph is not a linear chain (disconnected)")
    weight = dict(g.vertices)
    start = min(v for v, d in degrees.items() if d == 1)
    order = [start]
    prev = None
    cur = start
    while len(order) < g.n:
        nxt = next(nbr for nbr in adjacency[cur] if nbr != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return [weight[v] for v in order]


def intersection_matrix(g: PlumbingGraph) -> SymIntMatrix:
    """Intersection form of a plumbing: diagonal = weights, 1 per edge."""
    index = {v: i for i, (v, _) in enumerate(g.vertices)}
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for i, (_, w) in enumerate(g.vertices):
        rows[i][i] = w
    for a, b in g.edges:
        i, j = index[a], index[b]
        rows[i][j] = 1
        rows[j][i] = 1
    return SymIntMatrix.from_rows(rows)


def invariants(q: SymIntMatrix) -> InvariantReport:
    """Exact invariant report for a symmetric integer form.

    Signature and definiteness come from a rational congruence diagonalization,
    never from floating point.  The 0x0 form is classified negative-definite
    (the vacuous convention; it is the form of the 4-ball in this package).
    """
    pivots = congruence_pivots(q.rows())
    plus = sum(1 for d in pivots if d > 0)
    minus = sum(1 for d in pivots if d < 0)
    zero = sum(1 for d in pivots if d == 0)
    n = q.n
    if n == 0:
        definiteness: Definiteness = "negative-definite"
    elif zero > 0:
        definiteness = "degenerate"
    elif minus == n:
        definiteness = "negative-definite"
    elif plus == n:
        definiteness = "positive-definite"
    else:
        definiteness = "indefinite"
    parity: Parity = "even" if all(d % 2 == 0 for d in q.diagonal()) else "odd"
    return InvariantReport(
        b2=n,
        determinant=determinant(q.rows()),
        signature=plus - minus,
        b2_plus=plus,
        b2_minus=minus,
        b2_zero=zero,
        euler=1 + n,
        definiteness=definiteness,
        parity=parity,
    )
