"""The three-channel moduli set {2^n, 2^(2n)-1, 2^(2n)+1}.

For a size parameter n the set spans the dynamic range
M = 2^n * (2^(4n) - 1), and the reconstruction weights have closed forms:

    mhat1 = 2^(4n) - 1           inv1 = 2^n - 1
    mhat2 = 2^n * (2^(2n) + 1)   inv2 = 2^(n-1)
    mhat3 = 2^n * (2^(2n) - 1)   inv3 = 2^(n-1)

forward_convert splits an integer into canonical residues using the
channel fold reductions; crt_reconstruct is the weighted-sum decoder used
as the correctness oracle for the bit-level converter.  Everything is
arbitrary precision, so n is unbounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from rns3.channels import ChannelId, ChannelKind, reduce_mod
from rns3.errors import OutOfRangeError, ParameterError, ResidueError


@dataclass(frozen=True)
class ModuliSet:
    """Moduli, dynamic range and reconstruction weights for one size n."""

    n: int
    m1: int
    m2: int
    m3: int
    M: int
    mhat1: int
    mhat2: int
    mhat3: int
    inv1: int
    inv2: int
    inv3: int

    def moduli(self) -> tuple[int, int, int]:
        return (self.m1, self.m2, self.m3)

    def channels(self) -> tuple[ChannelId, ChannelId, ChannelId]:
        n = self.n
        return (
            ChannelId(ChannelKind.POW2, n),
            ChannelId(ChannelKind.POW2_MINUS1, 2 * n),
            ChannelId(ChannelKind.POW2_PLUS1, 2 * n),
        )


@dataclass(frozen=True)
class ResidueVector:
    """Canonical residue triple; bit j of a residue weighs 2^j."""

    r1: int
    r2: int
    r3: int

    def bit(self, i: int, j: int) -> int:
        """The j-th binary digit of residue i, i in {1, 2, 3}."""
        return ((self.r1, self.r2, self.r3)[i - 1] >> j) & 1

    def astuple(self) -> tuple[int, int, int]:
        return (self.r1, self.r2, self.r3)


def make_moduli_set(n: int) -> ModuliSet:
    """Build and validate the moduli set for size parameter n >= 1."""
    if n < 1:
        raise ParameterError(f"set parameter n must be >= 1, got {n}")
    m1, m2, m3 = 1 << n, (1 << 2 * n) - 1, (1 << 2 * n) + 1
    M = m1 * m2 * m3
    ms = ModuliSet(
        n=n, m1=m1, m2=m2, m3=m3, M=M,
        mhat1=M // m1, mhat2=M // m2, mhat3=M // m3,
        inv1=m1 - 1, inv2=1 << (n - 1), inv3=1 << (n - 1),
    )
    # Failures here are library defects, not user errors.
    assert pairwise_coprime([m1, m2, m3])
    for mhat, inv, m in _weight_rows(ms):
        assert mhat * inv % m == 1
    return ms


def _weight_rows(ms: ModuliSet):
    return (
        (ms.mhat1, ms.inv1, ms.m1),
        (ms.mhat2, ms.inv2, ms.m2),
        (ms.mhat3, ms.inv3, ms.m3),
    )


def pairwise_coprime(values: list[int]) -> bool:
    """True iff every pair of values has gcd 1."""
    if not values:
        raise ParameterError("need at least one value")
    if any(v < 1 for v in values):
        raise ParameterError("values must be >= 1")
    return all(
        math.gcd(a, b) == 1
        for i, a in enumerate(values)
        for b in values[i + 1:]
    )


def validate_residues(ms: ModuliSet, rv: ResidueVector) -> None:
    """Raise ResidueError unless every residue is canonical for ms."""
    for idx, (r, m) in enumerate(zip(rv.astuple(), ms.moduli()), start=1):
        if not 0 <= r < m:
            raise ResidueError(f"R{idx}={r} out of range for modulus {m}")


def forward_convert(ms: ModuliSet, x: int) -> ResidueVector:
    """Split x in [0, M) into its canonical residue triple."""
    if x < 0:
        raise OutOfRangeError("X must be >= 0")
    if x >= ms.M:
        raise OutOfRangeError(f"X must be < {ms.M}")
    c1, c2, c3 = ms.channels()
    return ResidueVector(reduce_mod(c1, x), reduce_mod(c2, x), reduce_mod(c3, x))


def crt_reconstruct(ms: ModuliSet, rv: ResidueVector) -> int:
    """The unique X in [0, M) with the given residues, by weighted sum.

    Each term mhat_i * |inv_i * r_i|_{m_i} is reduced modulo M before the
    sum, so intermediates never exceed 3M; the final reduction also folds
    away the integer multiple of M the raw sum carries.
    """
    validate_residues(ms, rv)
    total = 0
    for (mhat, inv, m), r in zip(_weight_rows(ms), rv.astuple()):
        total += mhat * (inv * r % m) % ms.M
    return total % ms.M


def inverse_constants(ms: ModuliSet) -> tuple[int, int, int]:
    """The closed-form weights (2^n - 1, 2^(n-1), 2^(n-1)), re-verified."""
    for mhat, inv, m in _weight_rows(ms):
        assert mhat * inv % m == 1
    return (ms.inv1, ms.inv2, ms.inv3)
