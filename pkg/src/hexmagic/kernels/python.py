"""Pure-Python census kernels (int bitsets + numpy batches).

Drop-in fallback for the compiled extension in ``_fast``; both backends
must produce byte-identical results, which the test suite enforces.
"""

from __future__ import annotations

from collections import deque
from typing import List, Sequence, Tuple

import numpy as np

NAME = "python"


def _mask_bits(masks: Sequence[int], ncols: int) -> np.ndarray:
    nbytes = (ncols + 7) // 8
    raw = b"".join(m.to_bytes(nbytes, "little") for m in masks)
    arr = np.frombuffer(raw, dtype=np.uint8).reshape(len(masks), nbytes)
    return np.unpackbits(arr, axis=1, bitorder="little")[:, :ncols]


def hyperplane_stats(masks: Sequence[int], line_masks: Sequence[int]
                     ) -> List[Tuple[int, int, int, int, int, int]]:
    """Per point set: (n, n0, n1, n2, n3, full_line_count).

    n_s counts the member points lying on exactly s incident lines that are
    fully contained in the set.
    """
    pts = _mask_bits(masks, 63)
    lns = _mask_bits(line_masks, 63)
    hits = pts.astype(np.int64) @ lns.T.astype(np.int64)
    full = (hits == 3).astype(np.int64)
    nlines = full.sum(axis=1)
    per_point = full @ lns.astype(np.int64)
    n = pts.sum(axis=1, dtype=np.int64)
    out = []
    inside = pts.astype(bool)
    buckets = [((per_point == s) & inside).sum(axis=1) for s in range(4)]
    for i in range(len(masks)):
        out.append((int(n[i]), int(buckets[0][i]), int(buckets[1][i]),
                    int(buckets[2][i]), int(buckets[3][i]), int(nlines[i])))
    return out


def _bfs_order(adj: Sequence[int]) -> List[int]:
    n = len(adj)
    seen = [False] * n
    order: List[int] = []
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            rest = adj[v]
            while rest:
                low = rest & -rest
                w = low.bit_length() - 1
                rest ^= low
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


class _AutSearch:
    """Backtracking over vertex images with forward checking.

    Candidate domains are bitmasks; each assignment intersects every open
    domain with the neighbors (or non-neighbors) of the chosen image, and
    domains that collapse to one candidate are assigned immediately.
    """

    def __init__(self, adj: Sequence[int], lines: frozenset):
        self.adj = list(adj)
        self.n = len(adj)
        self.full = (1 << self.n) - 1
        self.lines = lines
        self.order = _bfs_order(adj)

    def _assign(self, v: int, y: int, trail: list) -> bool:
        pi, allowed, adj = self.pi, self.allowed, self.adj
        queue = [(v, y)]
        while queue:
            v, y = queue.pop()
            if pi[v] >= 0:
                if pi[v] == y:
                    continue
                return False
            pi[v] = y
            trail.append((-1, v))
            av = adj[v]
            ybit = 1 << y
            adj_y = adj[y]
            nadj_y = self.full ^ adj_y
            for w in range(self.n):
                if pi[w] >= 0:
                    continue
                old = allowed[w]
                new = old & (adj_y if av >> w & 1 else nadj_y) & ~ybit
                if new == old:
                    continue
                trail.append((w, old))
                allowed[w] = new
                if new == 0:
                    return False
                if new & (new - 1) == 0:
                    queue.append((w, new.bit_length() - 1))
        return True

    def _undo(self, trail: list) -> None:
        pi, allowed = self.pi, self.allowed
        while trail:
            w, old = trail.pop()
            if w < 0:
                pi[old] = -1
            else:
                allowed[w] = old

    def _lines_ok(self) -> bool:
        pi = self.pi
        for (a, b, c) in self.lines_list:
            ia, ib, ic = pi[a], pi[b], pi[c]
            if ia > ib:
                ia, ib = ib, ia
            if ib > ic:
                ib, ic = ic, ib
                if ia > ib:
                    ia, ib = ib, ia
            if (ia, ib, ic) not in self.lines:
                return False
        return True

    def run(self, first_image: int, find_all: bool) -> List[Tuple[int, ...]]:
        self.pi = [-1] * self.n
        self.allowed = [self.full] * self.n
        self.lines_list = sorted(self.lines)
        self.results: List[Tuple[int, ...]] = []
        self.find_all = find_all
        self.stop = False
        trail: list = []
        if self._assign(self.order[0], first_image, trail):
            self._extend(1)
        self._undo(trail)
        return self.results

    def _extend(self, oi: int) -> None:
        pi = self.pi
        while oi < self.n and pi[self.order[oi]] >= 0:
            oi += 1
        if oi == self.n:
            if self._lines_ok():
                self.results.append(tuple(pi))
                if not self.find_all:
                    self.stop = True
            return
        v = self.order[oi]
        cands = self.allowed[v]
        while cands and not self.stop:
            low = cands & -cands
            y = low.bit_length() - 1
            cands ^= low
            trail: list = []
            if self._assign(v, y, trail):
                self._extend(oi + 1)
            self._undo(trail)


def automorphisms(adj: Sequence[int], line_triples: Sequence[Tuple[int, int, int]]
                  ) -> List[Tuple[int, ...]]:
    """All vertex permutations preserving adjacency and the line set.

    Enumerates the stabilizer of vertex 0 exhaustively, finds one coset
    representative per feasible image of vertex 0, and composes; this
    covers the full group exactly once.
    """
    n = len(adj)
    lines = frozenset(tuple(sorted(t)) for t in line_triples)
    search = _AutSearch(adj, lines)
    stabilizer = search.run(0, find_all=True)
    elements: List[Tuple[int, ...]] = []
    for q in range(n):
        if q == 0:
            reps = [tuple(range(n))]
        else:
            reps = search.run(q, find_all=False)
        if not reps:
            continue
        rep = reps[0]
        for s in stabilizer:
            elements.append(tuple(rep[s[i]] for i in range(n)))
    elements.sort()
    return elements


def permute_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << perm[low.bit_length() - 1]
        mask ^= low
    return out


def orbit_partition(masks: Sequence[int], gens: Sequence[Sequence[int]]) -> List[int]:
    """Orbit id (= smallest member index) per mask, under the generators."""
    index = {m: i for i, m in enumerate(masks)}
    orbit = [-1] * len(masks)
    for i in range(len(masks)):
        if orbit[i] >= 0:
            continue
        orbit[i] = i
        stack = [masks[i]]
        while stack:
            m = stack.pop()
            for g in gens:
                im = permute_mask(m, g)
                j = index.get(im)
                if j is None:
                    raise ValueError("mask set is not closed under the generators")
                if orbit[j] < 0:
                    orbit[j] = i
                    stack.append(im)
    return orbit


class PentagramSearcher:
    """Five-clique search over the share-exactly-one-point context graph."""

    def __init__(self, ctx_masks: Sequence[int]):
        self.masks = list(ctx_masks)
        n = len(self.masks)
        bits = _mask_bits(self.masks, 63)
        shared = bits.astype(np.int64) @ bits.T.astype(np.int64)
        adj_rows = shared == 1
        packed = np.packbits(adj_rows, axis=1, bitorder="little")
        self.adj = [int.from_bytes(packed[i].tobytes(), "little") for i in range(n)]

    def run(self, lo: int, hi: int) -> List[Tuple[int, int, int, int, int]]:
        """All 5-cliques with 10 distinct points and first context in [lo, hi).

        Candidates are enumerated in ascending index order, so concatenating
        consecutive ranges reproduces the full sorted census.
        """
        masks, adj = self.masks, self.adj
        out: List[Tuple[int, int, int, int, int]] = []
        for i in range(lo, hi):
            mi = masks[i]
            cand_i = adj[i] >> (i + 1) << (i + 1)
            rest_j = cand_i
            while rest_j:
                low_j = rest_j & -rest_j
                j = low_j.bit_length() - 1
                rest_j ^= low_j
                u2 = mi | masks[j]
                cand_j = cand_i & adj[j]
                rest_k = cand_j >> (j + 1) << (j + 1)
                while rest_k:
                    low_k = rest_k & -rest_k
                    k = low_k.bit_length() - 1
                    rest_k ^= low_k
                    if (masks[k] & u2).bit_count() != 2:
                        continue
                    u3 = u2 | masks[k]
                    cand_k = cand_j & adj[k]
                    rest_l = cand_k >> (k + 1) << (k + 1)
                    while rest_l:
                        low_l = rest_l & -rest_l
                        l = low_l.bit_length() - 1
                        rest_l ^= low_l
                        if (masks[l] & u3).bit_count() != 3:
                            continue
                        u4 = u3 | masks[l]
                        cand_l = cand_k & adj[l]
                        rest_m = cand_l >> (l + 1) << (l + 1)
                        while rest_m:
                            low_m = rest_m & -rest_m
                            m = low_m.bit_length() - 1
                            rest_m ^= low_m
                            if (masks[m] & u4).bit_count() == 4:
                                out.append((i, j, k, l, m))
                        # no candidates can follow once cand_l is exhausted
        return out
