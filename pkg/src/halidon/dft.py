"""Discrete Fourier transform and cyclic convolution over a halidon ring.

The transform is the direct O(m^2) evaluation at the powers of omega;
protocol-sized indices (m = 202 = 2 * 101) have too little smoothness for
a radix split to pay off, and the direct form reproduces reference
outputs verbatim.  Vectors are 0-indexed: entry i is the coefficient of
x^i, spectrum entry j is the value at omega^j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .analysis import HalidonRing
from .errors import LengthMismatch, ModulusMismatch

VectorLike = Union["ResidueVector", Sequence[int]]


@dataclass(frozen=True)
class ResidueVector:
    """Length-m vector over Z_n, tied to its halidon ring."""

    entries: tuple[int, ...]
    ring: HalidonRing

    def __post_init__(self):
        if len(self.entries) != self.ring.m:
            raise LengthMismatch(
                f"vector of length {len(self.entries)} in a ring of index {self.ring.m}"
            )
        object.__setattr__(
            self, "entries", tuple(e % self.ring.n for e in self.entries)
        )

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def as_entries(ring: HalidonRing, vec: VectorLike) -> tuple[int, ...]:
    """Entries of `vec` checked against `ring` (length and modulus)."""
    if isinstance(vec, ResidueVector):
        if vec.ring.n != ring.n:
            raise ModulusMismatch(
                f"vector mod {vec.ring.n} used in ring mod {ring.n}"
            )
        if vec.ring.m != ring.m:
            raise LengthMismatch(
                f"vector of index {vec.ring.m} used in ring of index {ring.m}"
            )
        return vec.entries
    entries = tuple(int(v) % ring.n for v in vec)
    if len(entries) != ring.m:
        raise LengthMismatch(
            f"vector of length {len(entries)} in a ring of index {ring.m}"
        )
    return entries


def dft_forward(ring: HalidonRing, f: VectorLike) -> ResidueVector:
    """Spectrum F with F_j = sum_i f_i * omega^(i*j) mod n."""
    a = as_entries(ring, f)
    n, m = ring.n, ring.m
    pw = ring.omega_powers
    out = tuple(
        sum(a[i] * pw[i * j % m] for i in range(m)) % n for j in range(m)
    )
    return ResidueVector(out, ring)


def dft_inverse(ring: HalidonRing, spectrum: VectorLike) -> ResidueVector:
    """Coefficients f with f_i = m^(-1) * sum_j F_j * omega^(-i*j) mod n."""
    b = as_entries(ring, spectrum)
    n, m = ring.n, ring.m
    ipw = ring.omega_inverse_powers
    minv = ring.m_inverse
    out = tuple(
        minv * sum(b[j] * ipw[i * j % m] for j in range(m)) % n
        for i in range(m)
    )
    return ResidueVector(out, ring)


def cyclic_convolve(
    a: Sequence[int], b: Sequence[int], n: int
) -> tuple[int, ...]:
    """Coefficients of a*b mod (x^m - 1) over Z_n, m = len(a) = len(b)."""
    if len(a) != len(b):
        raise LengthMismatch(
            f"convolution of lengths {len(a)} and {len(b)}"
        )
    m = len(a)
    out = [0] * m
    for i, ai in enumerate(a):
        if ai % n == 0:
            continue
        for j, bj in enumerate(b):
            k = i + j
            if k >= m:
                k -= m
            out[k] = (out[k] + ai * bj) % n
    return tuple(out)


def convolve(ring: HalidonRing, f: VectorLike, g: VectorLike) -> ResidueVector:
    """Cyclic convolution of two vectors in the ring."""
    a = as_entries(ring, f)
    b = as_entries(ring, g)
    return ResidueVector(cyclic_convolve(a, b, ring.n), ring)


def pointwise_mul(f: ResidueVector, g: ResidueVector) -> ResidueVector:
    """Entrywise product mod n; lengths and moduli must agree."""
    if f.ring.n != g.ring.n:
        raise ModulusMismatch(
            f"moduli differ: {f.ring.n} vs {g.ring.n}"
        )
    if len(f.entries) != len(g.entries):
        raise LengthMismatch(
            f"lengths differ: {len(f.entries)} vs {len(g.entries)}"
        )
    n = f.ring.n
    return ResidueVector(
        tuple(x * y % n for x, y in zip(f.entries, g.entries)), f.ring
    )
