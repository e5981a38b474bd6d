"""Bit-level residue-to-binary converter.

The decoder mirrors the hardware datapath.  An operand-preparation stage
assembles three 4n-bit summands out of residue bits (inverters and wiring
only), one carry-save adder with end-around carry compresses them to a
sum/carry pair, and a final modulo 2^(4n)-1 addition yields
Y = floor(X / 2^n).  X is then the concatenation of Y with r1.

Summand layouts, MSB first, segment widths in brackets:

    s1_prime = ~r1[n]    | ~r3[2n+1]     | ones[n-1]
    s2       = r2[n..0]  | r2[2n-1..0]   | r2[2n-1..n+1]
    s31      = r3[n..0]  | zeros[2n-1]   | r3[2n..n+1]

Their values modulo 2^(4n)-1 are the three coefficient products
-2^(3n)*r1 - 2^(n-1)*r3, (2^(3n-1)+2^(n-1))*r2 and 2^(3n-1)*r3: shifts
are rotations in this modulus and negations are complements.  s1_prime
folds the r1 word and the complemented-r3 word into one summand; the
leftover filler is the all-ones word, which is congruent to zero, so a
single carry-save level suffices for all three channels.
"""

from __future__ import annotations

from dataclasses import dataclass

from rns3.core import ModuliSet, ResidueVector, validate_residues
from rns3.errors import ParameterError


@dataclass(frozen=True)
class BitWord:
    """Fixed-width unsigned word; bit j of value weighs 2^j."""

    value: int
    width: int

    def __post_init__(self):
        if self.width < 0:
            raise ParameterError("width must be >= 0")
        if not 0 <= self.value < (1 << self.width):
            raise ParameterError(
                f"value {self.value} does not fit in {self.width} bits")

    @classmethod
    def concat(cls, segments: list[BitWord]) -> BitWord:
        """Join segments MSB-first; zero-width segments are allowed."""
        value = 0
        width = 0
        for seg in segments:
            value = (value << seg.width) | seg.value
            width += seg.width
        return cls(value, width)

    @classmethod
    def ones(cls, width: int) -> BitWord:
        return cls((1 << width) - 1, width)

    @classmethod
    def zeros(cls, width: int) -> BitWord:
        return cls(0, width)

    def complement(self) -> BitWord:
        return BitWord(self.value ^ ((1 << self.width) - 1), self.width)

    def rotl(self, p: int) -> BitWord:
        """Circular left shift by p positions within the word."""
        if self.width == 0:
            return self
        p %= self.width
        mask = (1 << self.width) - 1
        return BitWord(
            ((self.value << p) & mask) | (self.value >> (self.width - p)),
            self.width,
        )

    def bit(self, j: int) -> int:
        return (self.value >> j) & 1

    def to_binary(self) -> str:
        """MSB-first bit string, exactly width characters."""
        return format(self.value, f"0{self.width}b") if self.width else ""


def bit_slice(x: int, hi: int, lo: int) -> BitWord:
    """Bits hi..lo of x as a word; hi < lo yields a zero-width word."""
    if hi < lo:
        return BitWord(0, 0)
    width = hi - lo + 1
    return BitWord((x >> lo) & ((1 << width) - 1), width)


def r1_summand(ms: ModuliSet, r1: int) -> BitWord:
    """Complemented r1 over an all-ones tail: -2^(3n)*r1 mod 2^(4n)-1."""
    n = ms.n
    return BitWord.concat([
        bit_slice(r1, n - 1, 0).complement(),
        BitWord.ones(3 * n),
    ])


def r2_summand(ms: ModuliSet, r2: int) -> BitWord:
    """Both rotations of r2 in one word: (2^(3n-1) + 2^(n-1)) * r2.

    The two rotated copies occupy disjoint bit positions, so their sum is
    plain concatenation and costs no adder.
    """
    n = ms.n
    return BitWord.concat([
        bit_slice(r2, n, 0),
        bit_slice(r2, 2 * n - 1, 0),
        bit_slice(r2, 2 * n - 1, n + 1),
    ])


def r3_rot_summand(ms: ModuliSet, r3: int) -> BitWord:
    """r3 rotated left by 3n-1: +2^(3n-1)*r3 mod 2^(4n)-1."""
    n = ms.n
    return BitWord.concat([
        bit_slice(r3, n, 0),
        BitWord.zeros(2 * n - 1),
        bit_slice(r3, 2 * n, n + 1),
    ])


def r3_comp_summand(ms: ModuliSet, r3: int) -> BitWord:
    """Complemented, rotated r3 between ones fillers: -2^(n-1)*r3."""
    n = ms.n
    return BitWord.concat([
        BitWord.ones(n),
        bit_slice(r3, 2 * n, 0).complement(),
        BitWord.ones(n - 1),
    ])


def merged_summand(ms: ModuliSet, r1: int, r3: int) -> BitWord:
    """r1_summand and r3_comp_summand folded into a single word.

    The ones tail of the first summand and the ones fillers of the second
    are swapped so that all the ones collect in one word (congruent to
    zero) and the residue bits collect here.
    """
    n = ms.n
    return BitWord.concat([
        bit_slice(r1, n - 1, 0).complement(),
        bit_slice(r3, 2 * n, 0).complement(),
        BitWord.ones(n - 1),
    ])


@dataclass(frozen=True)
class OperandSet:
    """The three 4n-bit summands fed to the carry-save stage."""

    s1_prime: BitWord
    s2: BitWord
    s31: BitWord

    @property
    def width(self) -> int:
        return self.s1_prime.width


def prepare_operands(ms: ModuliSet, rv: ResidueVector) -> OperandSet:
    """Assemble the three summands; the fourth collapses to all-ones == 0."""
    validate_residues(ms, rv)
    return OperandSet(
        s1_prime=merged_summand(ms, rv.r1, rv.r3),
        s2=r2_summand(ms, rv.r2),
        s31=r3_rot_summand(ms, rv.r3),
    )


def csa_eac(a: BitWord, b: BitWord, c: BitWord) -> tuple[BitWord, BitWord]:
    """One carry-save level with the MSB carry wrapped around to bit 0.

    Returns (sum, carry) with a + b + c == sum + carry (mod 2^width - 1).
    """
    if not a.width == b.width == c.width:
        raise ParameterError("csa_eac operands must share one width")
    s = a.value ^ b.value ^ c.value
    maj = (a.value & b.value) | (a.value & c.value) | (b.value & c.value)
    return BitWord(s, a.width), BitWord(maj, a.width).rotl(1)


def mod_add_end_around(a: BitWord, b: BitWord) -> int:
    """(a + b) mod 2^width - 1, canonical: the all-ones pattern becomes 0."""
    if a.width != b.width:
        raise ParameterError("mod_add_end_around operands must share one width")
    mask = (1 << a.width) - 1
    t = a.value + b.value
    t = (t & mask) + (t >> a.width)  # one end-around carry; t was < 2^(w+1)
    return 0 if t == mask else t


def reverse_convert(ms: ModuliSet, rv: ResidueVector) -> int:
    """Residues to integer, bit for bit as the adder datapath computes it."""
    ops = prepare_operands(ms, rv)
    s, carry = csa_eac(ops.s1_prime, ops.s2, ops.s31)
    y = mod_add_end_around(s, carry)
    return (y << ms.n) | rv.r1  # X = Y * 2^n + r1, i.e. concatenation
