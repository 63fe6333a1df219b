"""The symplectic polar space W(5,2) of the three-qubit Pauli group.

Catalogs the 63 points (nonzero vectors of GF(2)^6), the 315 totally
isotropic lines, the 135 Fano-plane generators and the 945 four-element
commuting contexts (affine planes inside generators), plus GF(2)-linear
maps acting on the point set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .pauli import GfVector, format_pauli, symplectic_form

N_QUBITS = 3
N_POINTS = 63
DIM = 2 * N_QUBITS


def _all_points() -> List[GfVector]:
    vs = [
        GfVector(x, z, N_QUBITS)
        for x in range(1 << N_QUBITS)
        for z in range(1 << N_QUBITS)
        if x or z
    ]
    vs.sort(key=lambda v: v.sort_key)
    return vs


@dataclass(frozen=True)
class SymplecticSpace:
    """Immutable catalog of W(5,2); all members index into ``points``."""

    points: Tuple[GfVector, ...]
    lines: Tuple[Tuple[int, int, int], ...]
    generators: Tuple[Tuple[int, ...], ...]
    contexts4: Tuple[Tuple[int, int, int, int], ...]
    index: Dict[GfVector, int] = field(repr=False)
    line_index: Dict[Tuple[int, int, int], int] = field(repr=False)

    @property
    def labels(self) -> List[str]:
        return [format_pauli(v) for v in self.points]

    def point_id(self, v: GfVector) -> int:
        return self.index[v]

    def lines_through(self, p: int) -> List[int]:
        return self._lines_by_point[p]

    def context_mask(self, c: Tuple[int, ...]) -> int:
        m = 0
        for p in c:
            m |= 1 << p
        return m

    def __post_init__(self):
        by_point: List[List[int]] = [[] for _ in self.points]
        for li, (a, b, c) in enumerate(self.lines):
            by_point[a].append(li)
            by_point[b].append(li)
            by_point[c].append(li)
        object.__setattr__(self, "_lines_by_point", by_point)


def build_space() -> SymplecticSpace:
    """Enumerate points, lines, generators and 4-contexts of W(5,2).

    Points are sorted by their canonical bit order; every catalog is stored
    once in a fixed order, so repeated builds are identical.
    """
    points = _all_points()
    index = {v: i for i, v in enumerate(points)}

    lines = set()
    for i, u in enumerate(points):
        for j in range(i + 1, len(points)):
            v = points[j]
            if symplectic_form(u, v) == 0:
                k = index[u + v]
                lines.add(tuple(sorted((i, j, k))))
    line_list = sorted(lines)
    line_index = {t: i for i, t in enumerate(line_list)}

    generators = set()
    for (a, b, _c) in line_list:
        u, v = points[a], points[b]
        for w in points:
            if w in (u, v) or w == u + v:
                continue
            if symplectic_form(u, w) == 0 and symplectic_form(v, w) == 0:
                span = (u, v, w, u + v, u + w, v + w, u + v + w)
                generators.add(tuple(sorted(index[s] for s in span)))
    gen_list = sorted(generators)

    contexts = set()
    for gen in gen_list:
        inside = set(gen)
        for (a, b, c) in line_list:
            if a in inside and b in inside and c in inside:
                contexts.add(tuple(sorted(inside - {a, b, c})))
    ctx_list = sorted(contexts)

    return SymplecticSpace(
        points=tuple(points),
        lines=tuple(line_list),
        generators=tuple(gen_list),
        contexts4=tuple(ctx_list),
        index=index,
        line_index=line_index,
    )


def line_through(space: SymplecticSpace, a: GfVector, b: GfVector
                 ) -> Optional[Tuple[int, int, int]]:
    """The totally isotropic line {a, b, a+b}, or None when a, b anticommute."""
    if a == b or a.is_zero() or b.is_zero():
        raise ValueError("line requires two distinct nonzero points")
    if symplectic_form(a, b):
        return None
    return tuple(sorted((space.index[a], space.index[b], space.index[a + b])))


class LinearMap:
    """An invertible GF(2)-linear map on the 6-bit point coordinates.

    Coordinates pack a point as ``x | z << 3``; the map is stored as the six
    images of the standard basis (the weight-one observables XII, IXI, IIX,
    ZII, IZI, IIZ, in that order).
    """

    __slots__ = ("cols",)

    def __init__(self, cols: Sequence[int]):
        if len(cols) != DIM:
            raise ValueError("expected 6 basis images")
        self.cols = tuple(int(c) for c in cols)
        if _matrix_rank(self.cols) != DIM:
            raise ValueError("map is singular over GF(2)")

    @classmethod
    def from_basis_images(cls, images: Sequence[GfVector]) -> "LinearMap":
        return cls([v.x | v.z << N_QUBITS for v in images])

    @classmethod
    def identity(cls) -> "LinearMap":
        return cls([1 << j for j in range(DIM)])

    def apply(self, v: GfVector) -> GfVector:
        word = v.x | v.z << N_QUBITS
        out = 0
        for j in range(DIM):
            if word >> j & 1:
                out ^= self.cols[j]
        return GfVector(out & 7, out >> N_QUBITS, N_QUBITS)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        cols = []
        for j in range(DIM):
            word = other.cols[j]
            out = 0
            for k in range(DIM):
                if word >> k & 1:
                    out ^= self.cols[k]
            cols.append(out)
        return LinearMap(cols)

    def is_symplectic(self) -> bool:
        basis = [GfVector(1 << j, 0, N_QUBITS) for j in range(N_QUBITS)]
        basis += [GfVector(0, 1 << j, N_QUBITS) for j in range(N_QUBITS)]
        images = [self.apply(v) for v in basis]
        return all(
            symplectic_form(images[i], images[j]) == symplectic_form(basis[i], basis[j])
            for i in range(DIM)
            for j in range(i + 1, DIM)
        )

    def order(self) -> int:
        ident = LinearMap.identity().cols
        power = self
        for k in range(1, 1 << DIM):
            if power.cols == ident:
                return k
            power = power.compose(self)
        raise AssertionError("order search exceeded the group exponent")

    def point_permutation(self, space: SymplecticSpace) -> Tuple[int, ...]:
        """The induced permutation of W(5,2) point indices."""
        return tuple(space.index[self.apply(v)] for v in space.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearMap) and self.cols == other.cols

    def __hash__(self) -> int:
        return hash(self.cols)


def _matrix_rank(cols: Sequence[int]) -> int:
    from . import gf2

    return gf2.rank(list(cols), DIM)


def apply_map(m: LinearMap, v: GfVector) -> GfVector:
    return m.apply(v)


def is_symplectic(m: LinearMap) -> bool:
    return m.is_symplectic()


def map_order(m: LinearMap) -> int:
    return m.order()
