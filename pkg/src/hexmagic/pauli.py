"""Exact n-qubit Pauli arithmetic in the binary symplectic representation.

A signed Pauli operator is stored as ``i**phase_exp * prod_j X_j**x_j *
Z_j**z_j``.  The x/z exponents live in two bitmasks with qubit 1 (the
leftmost letter of a label such as ``"XIZ"``) in bit 0.  The letter Y is
fixed globally as ``Y = i*X*Z``, so a literal ``'Y'`` sets both bits of its
qubit and bumps the phase exponent by one; every sign computed by this
module is relative to that convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

_PREFIXES = {"": 0, "+": 0, "i": 1, "-": 2, "-i": 3}
_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_LETTER = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}

#: exact values of i**k
PHASES = (1, 1j, -1, -1j)


@dataclass(frozen=True)
class PauliElement:
    """A signed Pauli operator ``i**phase_exp * X^x Z^z`` on ``n`` qubits."""

    phase_exp: int
    x: int
    z: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("qubit count must be positive")
        if not 0 <= self.phase_exp <= 3:
            raise ValueError("phase exponent must be in 0..3")
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError("x/z bits exceed qubit count")

    def vector(self) -> "GfVector":
        """Projection onto the phaseless group GF(2)^{2n}."""
        return GfVector(self.x, self.z, self.n)

    def conjugate(self) -> "PauliElement":
        """Hermitian conjugate (same bits, inverted phase)."""
        phase = (-self.phase_exp - 2 * _dot(self.x, self.z)) % 4
        return PauliElement(phase, self.x, self.z, self.n)

    def __mul__(self, other: "PauliElement") -> "PauliElement":
        return multiply(self, other)

    def __str__(self) -> str:
        return format_pauli(self)


@dataclass(frozen=True, order=True)
class GfVector:
    """A phaseless Pauli: one element of GF(2)^{2n}, zero for the identity.

    Instances compare and hash on raw bits.  ``sort_key`` orders the 63
    nonzero three-qubit vectors deterministically: the concatenated x|z
    bitstring with qubit 1 as the most significant position, read as an
    integer.
    """

    x: int
    z: int
    n: int

    def __post_init__(self):
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError("x/z bits exceed qubit count")

    @property
    def sort_key(self) -> int:
        key = 0
        for j in range(self.n):
            key = key << 1 | (self.x >> j) & 1
        for j in range(self.n):
            key = key << 1 | (self.z >> j) & 1
        return key

    def is_zero(self) -> bool:
        return self.x == 0 and self.z == 0

    def __add__(self, other: "GfVector") -> "GfVector":
        if self.n != other.n:
            raise ValueError("qubit count mismatch")
        return GfVector(self.x ^ other.x, self.z ^ other.z, self.n)

    def __str__(self) -> str:
        return format_pauli(self)


def _dot(a: int, b: int) -> int:
    return (a & b).bit_count() & 1


def parse_pauli(text: str) -> PauliElement:
    """Parse a label like ``"XIZ"``, ``"-ZZI"`` or ``"iY"``.

    The optional prefix is one of ``+ - i -i`` (phase 1, -1, i, -i); the
    body is one letter per qubit, leftmost letter = qubit 1.
    """
    if not isinstance(text, str):
        raise ValueError("Pauli label must be a string")
    body_start = 0
    while body_start < len(text) and text[body_start] not in "IXYZ":
        body_start += 1
    prefix, body = text[:body_start], text[body_start:]
    if prefix not in _PREFIXES:
        raise ValueError(f"malformed phase prefix {prefix!r} in {text!r}")
    if not body:
        raise ValueError(f"empty Pauli body in {text!r}")
    phase = _PREFIXES[prefix]
    x = z = 0
    for j, letter in enumerate(body):
        if letter not in _LETTER_BITS:
            raise ValueError(f"invalid Pauli letter {letter!r} in {text!r}")
        xb, zb = _LETTER_BITS[letter]
        x |= xb << j
        z |= zb << j
        phase += xb & zb
    return PauliElement(phase % 4, x, z, len(body))


def parse_point(text: str) -> GfVector:
    """Parse an unsigned label into a nonzero projective point."""
    e = parse_pauli(text)
    if text and text[0] not in "IXYZ":
        raise ValueError(f"projective point {text!r} must not carry a phase")
    v = e.vector()
    if v.is_zero():
        raise ValueError("the identity is not a projective point")
    return v


def format_pauli(e: Union[PauliElement, GfVector]) -> str:
    """Inverse of :func:`parse_pauli`; a ``GfVector`` formats without prefix."""
    if isinstance(e, GfVector):
        return "".join(
            _BITS_LETTER[(e.x >> j & 1, e.z >> j & 1)] for j in range(e.n)
        )
    body = format_pauli(e.vector())
    residue = (e.phase_exp - (e.x & e.z).bit_count()) % 4
    return ("", "i", "-", "-i")[residue] + body


def lift(v: GfVector) -> PauliElement:
    """Canonical signed representative: the operator spelled by v's label."""
    return PauliElement((v.x & v.z).bit_count() % 4, v.x, v.z, v.n)


def multiply(a: PauliElement, b: PauliElement) -> PauliElement:
    """Group product.  Moving b's X block past a's Z block costs (-1)^(z.x)."""
    if a.n != b.n:
        raise ValueError("qubit count mismatch")
    phase = (a.phase_exp + b.phase_exp + 2 * _dot(a.z, b.x)) % 4
    return PauliElement(phase, a.x ^ b.x, a.z ^ b.z, a.n)


def symplectic_form(u: Union[GfVector, PauliElement],
                    v: Union[GfVector, PauliElement]) -> int:
    """The alternating form <u,v> = u.x*v.z + u.z*v.x; 0 iff u, v commute."""
    if u.n != v.n:
        raise ValueError("qubit count mismatch")
    return _dot(u.x, v.z) ^ _dot(u.z, v.x)


def product_sign(observables: Iterable[PauliElement]) -> complex:
    """Value of the ordered product, which must be proportional to identity.

    Returns one of ``1, -1, 1j, -1j`` (exact); for pairwise commuting
    inputs the result is always +/-1 and independent of the order.
    """
    acc = None
    for e in observables:
        acc = e if acc is None else multiply(acc, e)
    if acc is None:
        raise ValueError("empty product")
    if acc.x or acc.z:
        raise ValueError(
            f"product is not proportional to identity (residue {format_pauli(acc)})"
        )
    return PHASES[acc.phase_exp]


def identity(n: int) -> PauliElement:
    return PauliElement(0, 0, 0, n)
