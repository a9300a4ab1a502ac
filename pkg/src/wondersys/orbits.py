"""Orbit poset of a rank-r system: the Boolean lattice of spherical-root
subsets, with covering edges and a deterministic DOT emitter."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Tuple

from .sphsys import SphericalSystem


@dataclass(frozen=True)
class OrbitPoset:
    rank: int
    root_names: Tuple[str, ...]
    nodes: Tuple[frozenset, ...]
    edges: Tuple[Tuple[frozenset, frozenset], ...]

    def node_label(self, node: frozenset) -> str:
        names = sorted(self.root_names[i] for i in node)
        return "{" + ",".join(names) + "}"

    def boundary_rank(self, node: frozenset) -> int:
        return self.rank - len(node)


def poset_of_rank(rank: int, root_names: Tuple[str, ...] | None = None) -> OrbitPoset:
    if root_names is None:
        root_names = tuple(f"s{i + 1}" for i in range(rank))
    nodes = []
    for size in range(rank + 1):
        for combo in itertools.combinations(range(rank), size):
            nodes.append(frozenset(combo))
    edges = [
        (node, node | {i})
        for node in nodes
        for i in range(rank)
        if i not in node
    ]
    return OrbitPoset(rank, root_names, tuple(nodes), tuple(edges))


def orbit_poset(system: SphericalSystem) -> OrbitPoset:
    """Poset of boundary strata: one node per subset of the spherical roots."""
    return poset_of_rank(len(system.psi))


def emit_graph(poset: OrbitPoset) -> str:
    """Deterministic DOT rendering; equal posets give byte-identical text."""
    labels: Dict[frozenset, str] = {n: poset.node_label(n) for n in poset.nodes}
    ordered = sorted(poset.nodes, key=lambda n: (len(n), labels[n]))
    lines = ["digraph orbits {"]
    for node in ordered:
        lines.append(
            f'  "{labels[node]}" [boundary_rank={poset.boundary_rank(node)}];'
        )
    edge_texts = sorted(
        (labels[a], labels[b], len(a)) for a, b in poset.edges
    )
    for a, b, _ in sorted(edge_texts, key=lambda t: (t[2], t[0], t[1])):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
