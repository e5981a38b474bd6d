"""Command-line front end: encode, decode, verify, costs, bench.

Exit codes: 0 success, 2 usage or range error, 1 verification failure.
Numbers are accepted in decimal or 0x-prefixed hexadecimal.  Random
verification draws from random.Random (Mersenne Twister) with the given
seed, so identical invocations produce byte-identical output on every
platform.
"""

from __future__ import annotations

import argparse
import sys
import time
from random import Random

from rns3 import channels, converter, core, costs
from rns3.errors import RnsError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# Sizes whose full value range is small enough to sweep end to end.
EXHAUSTIVE_MAX_N = 3


def parse_uint(text: str) -> int:
    t = text.strip().lower()
    try:
        value = int(t, 16) if t.startswith("0x") else int(t, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an unsigned integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"value must be >= 0: {text!r}")
    return value


def parse_positive(text: str) -> int:
    value = parse_uint(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"value must be >= 1: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rns3",
        description="Residue codec for the moduli set {2^n, 2^(2n)-1, 2^(2n)+1}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="integer to residue triple")
    enc.add_argument("--n", type=parse_positive, required=True,
                     help="set size parameter")
    enc.add_argument("x", type=parse_uint, help="value in [0, M)")
    enc.set_defaults(func=cmd_encode)

    dec = sub.add_parser("decode", help="residue triple to integer")
    dec.add_argument("--n", type=parse_positive, required=True)
    dec.add_argument("--trace", action="store_true",
                     help="print operand words and adder intermediates")
    dec.add_argument("r1", type=parse_uint)
    dec.add_argument("r2", type=parse_uint)
    dec.add_argument("r3", type=parse_uint)
    dec.set_defaults(func=cmd_decode)

    ver = sub.add_parser("verify", help="roundtrip / lemma / homomorphism campaign")
    ver.add_argument("--n", type=parse_positive, required=True)
    mode = ver.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true",
                      help=f"sweep all of [0, M); n <= {EXHAUSTIVE_MAX_N} only")
    mode.add_argument("--random", action="store_true", help="sampled campaign")
    ver.add_argument("--samples", type=parse_positive, default=10000)
    ver.add_argument("--seed", type=parse_uint, default=0)
    ver.set_defaults(func=cmd_verify)

    cst = sub.add_parser("costs", help="unit-gate cost tables")
    cst.add_argument("--table", type=parse_uint, required=True,
                     help="1 bills, 2 converter delays, 3 channel-adder delays, "
                          "4 area/delay comparison")
    cst.add_argument("--format", choices=("text", "csv"), default="text")
    cst.add_argument("--n", type=parse_positive,
                     help="size parameter for tables 1-3")
    cst.add_argument("--m", type=parse_positive,
                     help="classic-set width override for tables 1-2")
    cst.set_defaults(func=cmd_costs)

    ben = sub.add_parser("bench", help="micro-benchmarks")
    ben.add_argument("--n", type=parse_positive, required=True)
    ben.add_argument("--iters", type=parse_positive, default=10000)
    ben.add_argument("--seed", type=parse_uint, default=0)
    ben.set_defaults(func=cmd_bench)

    return parser


def cmd_encode(args) -> int:
    ms = core.make_moduli_set(args.n)
    rv = core.forward_convert(ms, args.x)
    print(f"R1={rv.r1} R2={rv.r2} R3={rv.r3}")
    return EXIT_OK


def cmd_decode(args) -> int:
    ms = core.make_moduli_set(args.n)
    rv = core.ResidueVector(args.r1, args.r2, args.r3)
    core.validate_residues(ms, rv)
    if not args.trace:
        print(f"X={converter.reverse_convert(ms, rv)}")
        return EXIT_OK
    ops = converter.prepare_operands(ms, rv)
    s, carry = converter.csa_eac(ops.s1_prime, ops.s2, ops.s31)
    y = converter.mod_add_end_around(s, carry)
    print(f"S1'={ops.s1_prime.to_binary()}")
    print(f"S2={ops.s2.to_binary()}")
    print(f"S31={ops.s31.to_binary()}")
    print(f"CSA sum={s.to_binary()} carry={carry.to_binary()}")
    print(f"Y={y} X={(y << ms.n) | rv.r1}")
    return EXIT_OK


def _check_roundtrip(ms, xs):
    fails = []
    checked = 0
    for x in xs:
        checked += 1
        rv = core.forward_convert(ms, x)
        if (converter.reverse_convert(ms, rv) != x
                or core.crt_reconstruct(ms, rv) != x):
            fails.append(x)
    return checked, fails


def _lemma_ok(ms, r1, r2, r3) -> bool:
    """Operand words match their coefficient products mod 2^(4n)-1."""
    n = ms.n
    modw = (1 << 4 * n) - 1
    s1 = converter.r1_summand(ms, r1).value
    s2 = converter.r2_summand(ms, r2).value
    s31 = converter.r3_rot_summand(ms, r3).value
    s32 = converter.r3_comp_summand(ms, r3).value
    s1p = converter.merged_summand(ms, r1, r3).value
    return (
        s1 % modw == (-(1 << 3 * n) * r1) % modw
        and s2 % modw == ((1 << 3 * n - 1) + (1 << n - 1)) * r2 % modw
        and (s31 + s32) % modw == ((1 << 3 * n - 1) - (1 << n - 1)) * r3 % modw
        and (s1 + s32) % modw == s1p % modw
    )


def _check_lemmas(ms, triples):
    fails = []
    checked = 0
    for r1, r2, r3 in triples:
        checked += 1
        if not _lemma_ok(ms, r1, r2, r3):
            fails.append((r1, r2, r3))
    return checked, fails


def _check_homomorphism_channelwise(ms):
    """All residue pairs per channel, all ops, through channel_op."""
    fails = []
    checked = 0
    for chan in ms.channels():
        m = chan.modulus
        for op in channels.CHANNEL_OPS:
            for a in range(m):
                for b in range(m):
                    checked += 1
                    want = (a + b) % m if op == "add" else \
                           (a - b) % m if op == "sub" else (a * b) % m
                    if channels.channel_op(chan, op, a, b) != want:
                        fails.append((a, b, op, chan.kind.value))
    return checked, fails


def _check_homomorphism_pairs(ms, pairs):
    """Sampled (X, Y) pairs through rns_op against big-integer arithmetic."""
    fails = []
    checked = 0
    for x, y in pairs:
        checked += 1
        a, b = core.forward_convert(ms, x), core.forward_convert(ms, y)
        for op in channels.CHANNEL_OPS:
            want = {"add": x + y, "sub": x - y, "mul": x * y}[op] % ms.M
            if channels.rns_op(ms, op, a, b) != core.forward_convert(ms, want):
                fails.append((x, y, op))
    return checked, fails


def cmd_verify(args) -> int:
    if args.exhaustive and args.n > EXHAUSTIVE_MAX_N:
        print(f"exhaustive mode supports n <= {EXHAUSTIVE_MAX_N} only; "
              "use --random", file=sys.stderr)
        return EXIT_USAGE
    ms = core.make_moduli_set(args.n)
    rng = Random(args.seed)

    if args.exhaustive:
        rt_checked, rt_fails = _check_roundtrip(ms, range(ms.M))
        triples = (
            [(0, r2, 0) for r2 in range(ms.m2)]
            + [(r1, 0, r3) for r1 in range(ms.m1) for r3 in range(ms.m3)]
        )
        lm_checked, lm_fails = _check_lemmas(ms, triples)
        hm_checked, hm_fails = _check_homomorphism_channelwise(ms)
        pairs = [(rng.randrange(ms.M), rng.randrange(ms.M)) for _ in range(1000)]
        extra_checked, extra_fails = _check_homomorphism_pairs(ms, pairs)
        hm_checked += extra_checked
        hm_fails += extra_fails
    else:
        xs = [rng.randrange(ms.M) for _ in range(args.samples)]
        rt_checked, rt_fails = _check_roundtrip(ms, xs)
        triples = [(rng.randrange(ms.m1), rng.randrange(ms.m2),
                    rng.randrange(ms.m3)) for _ in range(args.samples)]
        lm_checked, lm_fails = _check_lemmas(ms, triples)
        pairs = [(rng.randrange(ms.M), rng.randrange(ms.M))
                 for _ in range(args.samples)]
        hm_checked, hm_fails = _check_homomorphism_pairs(ms, pairs)

    failures = len(rt_fails) + len(lm_fails) + len(hm_fails)
    print(f"roundtrip: checked {rt_checked}, failed {len(rt_fails)}")
    print(f"operand lemmas: checked {lm_checked}, failed {len(lm_fails)}")
    print(f"homomorphism: checked {hm_checked}, failed {len(hm_fails)}")
    for label, fails in (("roundtrip", rt_fails), ("operand lemmas", lm_fails),
                         ("homomorphism", hm_fails)):
        if fails:
            shown = ", ".join(repr(f) for f in sorted(fails)[:10])
            print(f"{label} failures (first 10 of {len(fails)}): {shown}")
    print(f"checked {rt_checked} values, {failures} failures")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_costs(args) -> int:
    if args.table == 4:
        print(costs.emit_table(costs.table4(), args.format), end="")
        return EXIT_OK
    if args.table not in (1, 2, 3):
        print(f"unknown table id {args.table} (expected 1-4)", file=sys.stderr)
        return EXIT_USAGE
    if args.n is None:
        print(f"table {args.table} needs --n", file=sys.stderr)
        return EXIT_USAGE
    if args.table == 1:
        out = costs.render_bill_table(args.n, args.m, args.format)
    elif args.table == 2:
        out = costs.render_delay_table(args.n, args.m, args.format)
    else:
        out = costs.render_channel_delay_table(args.n, args.format)
    print(out, end="")
    return EXIT_OK


def cmd_bench(args) -> int:
    ms = core.make_moduli_set(args.n)
    rng = Random(args.seed)
    xs = [rng.randrange(ms.M) for _ in range(min(args.iters, 4096))]
    rvs = [core.forward_convert(ms, x) for x in xs]

    def clock(label, fn, inputs):
        t0 = time.perf_counter()
        for i in range(args.iters):
            fn(ms, inputs[i % len(inputs)])
        per_op = (time.perf_counter() - t0) / args.iters
        print(f"{label}: {per_op * 1e6:.3f} us/op ({args.iters} iters)")

    clock("forward_convert", core.forward_convert, xs)
    clock("reverse_convert", converter.reverse_convert, rvs)
    clock("crt_reconstruct", core.crt_reconstruct, rvs)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except RnsError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
