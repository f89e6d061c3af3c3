"""Graph and partite-hypergraph containers consumed by the reduction generators."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .geom_core import rational


@dataclass(frozen=True)
class WeightedGraph:
    """Vertices carry rational labels; edges are (u, v, w) with u < v and w None when unweighted."""
    labels: tuple
    edges: tuple = ()

    def __post_init__(self):
        labels = tuple(rational(x) for x in self.labels)
        if len(set(labels)) != len(labels):
            raise ValueError("vertex labels must be distinct")
        edges = []
        seen = set()
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            w = e[2] if len(e) > 2 else None
            if u == v:
                raise ValueError("self loop")
            if u > v:
                u, v = v, u
            if not (0 <= u < len(labels) and 0 <= v < len(labels)):
                raise ValueError(f"edge ({u},{v}) out of range")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
            edges.append((u, v, None if w is None else rational(w)))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def weighted(self) -> bool:
        return any(w is not None for _, _, w in self.edges)

    def adjacency(self) -> dict:
        adj = {i: {} for i in range(self.n)}
        for u, v, w in self.edges:
            adj[u][v] = w
            adj[v][u] = w
        return adj

    def weight(self, u: int, v: int) -> Optional[Fraction]:
        return self.adjacency()[u].get(v)


@dataclass(frozen=True)
class PartiteHypergraph3:
    """3-uniform hypergraph over labelled parts; a vertex is (part, index)."""
    parts: tuple
    edges: tuple = ()

    def __post_init__(self):
        parts = tuple(tuple(rational(x) for x in p) for p in self.parts)
        for p in parts:
            if len(set(p)) != len(p):
                raise ValueError("labels inside a part must be distinct")
        edges = set()
        for e in self.edges:
            verts = tuple(sorted((int(a), int(b)) for a, b in e))
            if len(verts) != 3 or len({a for a, _ in verts}) != 3:
                raise ValueError(f"edge {e} must span three distinct parts")
            for a, b in verts:
                if not (0 <= a < len(parts) and 0 <= b < len(parts[a])):
                    raise ValueError(f"vertex {(a, b)} out of range")
            edges.add(verts)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def label(self, v: tuple) -> Fraction:
        return self.parts[v[0]][v[1]]
