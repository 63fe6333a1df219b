"""Small BFS-based graph checks for adjacency stored as int bitmasks."""

from __future__ import annotations

from collections import deque
from typing import List, Optional, Tuple


def bfs_distances(adj: List[int], start: int, limit: Optional[int] = None) -> List[int]:
    """Distances from start (-1 = unreachable); stops past ``limit`` if given."""
    dist = [-1] * len(adj)
    dist[start] = 0
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if limit is not None and dist[v] >= limit:
            continue
        rest = adj[v]
        while rest:
            low = rest & -rest
            w = low.bit_length() - 1
            rest ^= low
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def is_connected(adj: List[int]) -> bool:
    return all(d >= 0 for d in bfs_distances(adj, 0))


def diameter(adj: List[int]) -> int:
    best = 0
    for v in range(len(adj)):
        dist = bfs_distances(adj, v)
        if any(d < 0 for d in dist):
            raise ValueError("diameter of a disconnected graph")
        best = max(best, max(dist))
    return best


def girth(adj: List[int]) -> int:
    """Length of a shortest cycle (0 if acyclic), by per-vertex BFS.

    The BFS from each root tracks parents; a non-tree edge at depths
    (d(v), d(w)) closes a cycle of length d(v) + d(w) + 1 through the root,
    and scanning every root makes the minimum exact.
    """
    n = len(adj)
    best = 0
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best and 2 * dist[v] >= best:
                break
            rest = adj[v]
            while rest:
                low = rest & -rest
                w = low.bit_length() - 1
                rest ^= low
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif w != parent[v]:
                    cycle = dist[v] + dist[w] + 1
                    if best == 0 or cycle < best:
                        best = cycle
    return best


def two_coloring(adj: List[int]) -> Optional[List[int]]:
    """A proper 2-coloring, or None when the graph is not bipartite."""
    n = len(adj)
    color = [-1] * n
    for start in range(n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            rest = adj[v]
            while rest:
                low = rest & -rest
                w = low.bit_length() - 1
                rest ^= low
                if color[w] < 0:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def degree_profile(adj: List[int]) -> Tuple[int, ...]:
    return tuple(a.bit_count() for a in adj)
