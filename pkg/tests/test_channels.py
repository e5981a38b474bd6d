"""Channel reductions, channel/vector arithmetic and the two bit tricks."""

import random

import pytest

from rns3.channels import (
    ChannelId,
    ChannelKind,
    channel_op,
    neg_mod_pow2_minus1,
    reduce_mod,
    rns_op,
    rotl_mod_pow2_minus1,
)
from rns3.core import forward_convert, make_moduli_set
from rns3.errors import ParameterError, ResidueError

POW2 = ChannelKind.POW2
MINUS1 = ChannelKind.POW2_MINUS1
PLUS1 = ChannelKind.POW2_PLUS1


def test_channel_modulus():
    assert ChannelId(POW2, 4).modulus == 16
    assert ChannelId(MINUS1, 4).modulus == 15
    assert ChannelId(PLUS1, 4).modulus == 17
    with pytest.raises(ParameterError):
        ChannelId(POW2, 0)


def test_reduce_mod_examples():
    # chunks of 300 mod 15: 12 + 2 + 1 = 15 -> 0
    assert reduce_mod(ChannelId(MINUS1, 4), 300) == 0
    # alternating chunks mod 17: 12 - 2 + 1 = 11
    assert reduce_mod(ChannelId(PLUS1, 4), 300) == 11
    assert reduce_mod(ChannelId(POW2, 2), 300) == 0


def test_reduce_mod_edge_cases():
    assert reduce_mod(ChannelId(MINUS1, 4), 15) == 0     # all-ones word
    assert reduce_mod(ChannelId(MINUS1, 4), 0) == 0
    assert reduce_mod(ChannelId(PLUS1, 4), 16) == 16     # 2^k is canonical
    assert reduce_mod(ChannelId(PLUS1, 4), 17) == 0
    with pytest.raises(ParameterError):
        reduce_mod(ChannelId(POW2, 4), -1)


def test_reduce_mod_matches_generic_modulo():
    rng = random.Random(77)
    for kind in (POW2, MINUS1, PLUS1):
        for k in (1, 2, 3, 4, 5, 8, 16, 37):
            chan = ChannelId(kind, k)
            m = chan.modulus
            for _ in range(500):
                x = rng.randrange(1 << (8 * k))
                assert reduce_mod(chan, x) == x % m
            for x in (0, 1, m - 1, m, m + 1, 2 * m, (1 << (8 * k)) - 1):
                assert reduce_mod(chan, x) == x % m


def test_channel_op_examples():
    assert channel_op(ChannelId(MINUS1, 4), "add", 10, 12) == 7
    assert channel_op(ChannelId(PLUS1, 4), "mul", 15, 6) == 5
    for a in range(4):
        assert channel_op(ChannelId(POW2, 2), "sub", a, a) == 0


def test_channel_op_rejects_bad_operands():
    chan = ChannelId(MINUS1, 4)
    with pytest.raises(ResidueError):
        channel_op(chan, "add", 15, 0)
    with pytest.raises(ResidueError):
        channel_op(chan, "add", 0, -1)
    with pytest.raises(ParameterError):
        channel_op(chan, "xor", 1, 2)


def test_channel_op_exhaustive_small_widths():
    for kind in (POW2, MINUS1, PLUS1):
        for k in (1, 2, 3):
            chan = ChannelId(kind, k)
            m = chan.modulus
            for a in range(m):
                for b in range(m):
                    assert channel_op(chan, "add", a, b) == (a + b) % m
                    assert channel_op(chan, "sub", a, b) == (a - b) % m
                    assert channel_op(chan, "mul", a, b) == (a * b) % m


def test_rns_op_examples():
    ms = make_moduli_set(2)
    a = forward_convert(ms, 100)   # (0, 10, 15)
    b = forward_convert(ms, 57)    # (1, 12, 6)
    assert rns_op(ms, "add", a, b) == forward_convert(ms, 157)
    assert rns_op(ms, "add", a, b).astuple() == (1, 7, 4)
    assert rns_op(ms, "mul", a, b) == forward_convert(ms, 100 * 57 % ms.M)
    assert rns_op(ms, "mul", a, b).astuple() == (0, 0, 5)


def test_rns_op_additive_identity():
    for n in (1, 2, 5):
        ms = make_moduli_set(n)
        zero = forward_convert(ms, 0)
        for x in (0, 1, ms.M - 1, ms.M // 2):
            a = forward_convert(ms, x)
            assert rns_op(ms, "add", a, zero) == a


def test_homomorphism_add_exhaustive_n1():
    ms = make_moduli_set(1)
    for x in range(ms.M):
        a = forward_convert(ms, x)
        for y in range(ms.M):
            b = forward_convert(ms, y)
            assert rns_op(ms, "add", a, b) == forward_convert(ms, (x + y) % ms.M)


def test_homomorphism_channel_factorized_n2_n3():
    # Per-channel addition is exhausted over every operand pair; the
    # vector-level composition is exercised separately on sampled pairs.
    for n in (2, 3):
        ms = make_moduli_set(n)
        for chan in ms.channels():
            m = chan.modulus
            for a in range(m):
                for b in range(m):
                    assert channel_op(chan, "add", a, b) == (a + b) % m
        rng = random.Random(n)
        for _ in range(10000):
            x, y = rng.randrange(ms.M), rng.randrange(ms.M)
            got = rns_op(ms, "add", forward_convert(ms, x), forward_convert(ms, y))
            assert got == forward_convert(ms, (x + y) % ms.M)


def test_homomorphism_mul_sampled():
    rng = random.Random(99)
    for n in (1, 2, 3):
        ms = make_moduli_set(n)
        for _ in range(100000):
            x, y = rng.randrange(ms.M), rng.randrange(ms.M)
            got = rns_op(ms, "mul", forward_convert(ms, x), forward_convert(ms, y))
            assert got == forward_convert(ms, x * y % ms.M)


def test_homomorphism_random_large_n():
    rng = random.Random(5)
    for n in (4, 8, 16):
        ms = make_moduli_set(n)
        for _ in range(2000):
            x, y = rng.randrange(ms.M), rng.randrange(ms.M)
            a, b = forward_convert(ms, x), forward_convert(ms, y)
            assert rns_op(ms, "add", a, b) == forward_convert(ms, (x + y) % ms.M)
            assert rns_op(ms, "sub", a, b) == forward_convert(ms, (x - y) % ms.M)
            assert rns_op(ms, "mul", a, b) == forward_convert(ms, x * y % ms.M)


def test_rotl_examples():
    assert rotl_mod_pow2_minus1(6, 4, 2) == 9    # 6 * 4 = 24 = 9 mod 15
    assert rotl_mod_pow2_minus1(8, 4, 1) == 1    # 16 = 1 mod 15
    for v in (0, 1, 7, 14):
        assert rotl_mod_pow2_minus1(v, 4, 0) == v


def test_rotl_exhaustive():
    for k in range(1, 9):
        m = (1 << k) - 1
        for v in range(m):
            for p in range(2 * k):
                assert rotl_mod_pow2_minus1(v, k, p) == (v << p) % m


def test_rotl_rejects_bad_input():
    with pytest.raises(ResidueError):
        rotl_mod_pow2_minus1(15, 4, 1)
    with pytest.raises(ParameterError):
        rotl_mod_pow2_minus1(3, 4, -1)


def test_neg_examples():
    assert neg_mod_pow2_minus1(6, 4) == 9
    assert neg_mod_pow2_minus1(0, 4) == 0    # complement 1111 canonicalizes
    assert neg_mod_pow2_minus1(14, 4) == 1


def test_neg_exhaustive():
    for k in range(1, 9):
        m = (1 << k) - 1
        for v in range(m):
            assert neg_mod_pow2_minus1(v, k) == (m - v) % m


def test_neg_rejects_noncanonical():
    with pytest.raises(ResidueError):
        neg_mod_pow2_minus1(15, 4)
