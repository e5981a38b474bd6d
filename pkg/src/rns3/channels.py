"""Carry-free arithmetic in the channel moduli 2^k, 2^k - 1 and 2^k + 1.

Reductions never divide.  The power-of-two channel masks low bits, the
2^k - 1 channel folds k-bit chunks with end-around addition, and the
2^k + 1 channel folds chunks with alternating signs (2^k == -1 there).
Two bit tricks carry the rest of the library: multiplying by 2^p modulo
2^k - 1 is a circular left shift of the k-bit word, and negating modulo
2^k - 1 is the one's complement.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import TYPE_CHECKING

from rns3.errors import ParameterError, ResidueError

if TYPE_CHECKING:
    from rns3.core import ModuliSet, ResidueVector

CHANNEL_OPS = ("add", "sub", "mul")


class ChannelKind(Enum):
    POW2 = "pow2"
    POW2_MINUS1 = "pow2_minus1"
    POW2_PLUS1 = "pow2_plus1"


@dataclass(frozen=True)
class ChannelId:
    """One arithmetic channel: a modulus shape plus its width k in bits."""

    kind: ChannelKind
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ParameterError(f"channel width must be >= 1, got {self.k}")

    @property
    def modulus(self) -> int:
        base = 1 << self.k
        if self.kind is ChannelKind.POW2:
            return base
        if self.kind is ChannelKind.POW2_MINUS1:
            return base - 1
        return base + 1


def reduce_mod(chan: ChannelId, x: int) -> int:
    """Reduce x >= 0 into [0, modulus) using chunk folds, not division."""
    if x < 0:
        raise ParameterError("reduce_mod expects a non-negative value")
    k = chan.k
    mask = (1 << k) - 1
    if chan.kind is ChannelKind.POW2:
        return x & mask
    if chan.kind is ChannelKind.POW2_MINUS1:
        while x > mask:
            x = (x & mask) + (x >> k)
        return 0 if x == mask else x
    # 2^k + 1: chunk i weighs (-1)^i; the short alternating sum is
    # canonicalized with one small modulo at the end.
    acc = 0
    sign = 1
    while x:
        acc += sign * (x & mask)
        x >>= k
        sign = -sign
    return acc % (mask + 2)


def channel_op(chan: ChannelId, op: str, a: int, b: int) -> int:
    """Apply add/sub/mul to two canonical residues of one channel."""
    m = chan.modulus
    if not 0 <= a < m:
        raise ResidueError(f"operand {a} out of range for modulus {m}")
    if not 0 <= b < m:
        raise ResidueError(f"operand {b} out of range for modulus {m}")
    if op == "add":
        raw = a + b
    elif op == "sub":
        raw = a - b + m
    elif op == "mul":
        raw = a * b
    else:
        raise ParameterError(f"unknown channel op {op!r}")
    return reduce_mod(chan, raw)


def rns_op(ms: ModuliSet, op: str, a: ResidueVector, b: ResidueVector) -> ResidueVector:
    """Component-wise arithmetic on two residue vectors of the same set."""
    c1, c2, c3 = ms.channels()
    return replace(
        a,
        r1=channel_op(c1, op, a.r1, b.r1),
        r2=channel_op(c2, op, a.r2, b.r2),
        r3=channel_op(c3, op, a.r3, b.r3),
    )


def rotl_mod_pow2_minus1(v: int, k: int, p: int) -> int:
    """v * 2^p mod (2^k - 1), computed as a circular left shift by p.

    Bit j of the k-bit word moves to position (j + p) mod k; no adder is
    involved, which is why the converter can absorb all coefficient
    multiplications into wiring.
    """
    mask = (1 << k) - 1
    if not 0 <= v < mask:
        raise ResidueError(f"value {v} out of range for modulus {mask}")
    if p < 0:
        raise ParameterError("shift count must be >= 0")
    p %= k
    return ((v << p) & mask) | (v >> (k - p))


def neg_mod_pow2_minus1(v: int, k: int) -> int:
    """-v mod (2^k - 1) via one's complement; all-ones canonicalizes to 0."""
    mask = (1 << k) - 1
    if not 0 <= v < mask:
        raise ResidueError(f"value {v} out of range for modulus {mask}")
    c = v ^ mask
    return 0 if c == mask else c
