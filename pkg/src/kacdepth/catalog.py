"""Generation of small quivers up to isomorphism of the underlying multigraph.

Toric counts only depend on the underlying graph, so the catalog enumerates
undirected multigraphs with loops (edges as unordered vertex pairs), dedupes
them by a canonical form (the lexicographically smallest sorted edge list
over all vertex permutations), and orients each edge from the smaller to the
larger endpoint.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, permutations

from .quiver import Quiver

EdgeList = tuple[tuple[int, int], ...]


def canonical_edges(nvertices: int, edges: EdgeList) -> EdgeList:
    """Lexicographically smallest edge list over all vertex relabelings."""
    best: EdgeList | None = None
    for perm in permutations(range(nvertices)):
        relab = tuple(
            sorted(tuple(sorted((perm[s], perm[t]))) for s, t in edges)
        )
        if best is None or relab < best:
            best = relab
    assert best is not None
    return best


def quiver_catalog(
    max_vertices: int, max_arrows: int, connected: bool = True
) -> list[Quiver]:
    """All quivers with <= max_vertices vertices and <= max_arrows arrows,
    up to isomorphism of the underlying multigraph."""
    seen: set[tuple[int, EdgeList]] = set()
    out: list[Quiver] = []
    for nv in range(1, max_vertices + 1):
        slots = [(i, j) for i in range(nv) for j in range(i, nv)]
        for ne in range(0, max_arrows + 1):
            for combo in combinations_with_replacement(slots, ne):
                quiver = Quiver(nv, tuple(combo))
                if connected and not quiver.is_connected():
                    continue
                key = (nv, canonical_edges(nv, tuple(combo)))
                if key in seen:
                    continue
                seen.add(key)
                out.append(quiver)
    return out
