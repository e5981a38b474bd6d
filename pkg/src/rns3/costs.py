"""Unit-gate area and delay model for four reverse-converter designs.

Delay units: inverter/AND 1; XOR, full adder and 2:1 mux 2.  Area units:
NOT/AND/OR 1, XOR/XNOR 2.  Composite cells carry calibrated areas (full
adder 7, XOR+AND pair 3, XNOR+OR pair 3, half adder 3, 2:1 mux 2), and
the final modular adder of width w is modeled as a parallel-prefix adder
with carry recirculation:

    area(w) = 3*w*ceil(log2 w) + 4*w      delay(w) = 2*ceil(log2 w) + 3

The composite-cell and modular-adder constants are calibration outputs,
pinned by the golden comparison table in the test suite; the fitting
derivation is written up in the README.

Designs compared:

    OURS    three-channel set {2^n, 2^(2n)-1, 2^(2n)+1} (this library)
    REF1    four-channel set {2^n-1, 2^n, 2^n+1, 2^(2n)+1}
    REF9    five-channel set {2^n, 2^n-1, 2^n+1, 2^n-2^((n+1)/2)+1,
            2^n+2^((n+1)/2)+1}
    REF11   classic three-channel set {2^m-1, 2^m, 2^m+1}

REF1/REF9/REF11 are modeled from their published gate bills only; their
datapaths are not implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from rns3.errors import ParameterError


def ceil_log2(x: int) -> int:
    """Smallest e with 2^e >= x, for x >= 1."""
    if x < 1:
        raise ParameterError("ceil_log2 needs x >= 1")
    return (x - 1).bit_length()


@dataclass(frozen=True)
class GateCosts:
    """Unit-gate constants; the defaults are the model's reference values."""

    delay_inv: int = 1
    delay_and: int = 1
    delay_xor: int = 2
    delay_fa: int = 2
    delay_mux: int = 2
    area_not: int = 1
    area_and: int = 1
    area_or: int = 1
    area_xor: int = 2
    area_xnor: int = 2
    # calibrated composite cells
    area_fa: int = 7
    area_xor_and_pair: int = 3
    area_xnor_or_pair: int = 3
    area_ha: int = 3
    area_mux2: int = 2


DEFAULT_COSTS = GateCosts()


class Design(Enum):
    OURS = "ours"
    REF1 = "ref1"
    REF9 = "ref9"
    REF11 = "ref11"


@dataclass(frozen=True)
class ConverterDesign:
    """A design tag plus its size parameter (n, or m for REF11)."""

    tag: Design
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ParameterError(f"design size must be >= 1, got {self.size}")


@dataclass(frozen=True)
class HwBill:
    """Gate bill of one reverse converter."""

    design: Design
    inverters: int
    full_adders: int
    xor_and_pairs: int = 0
    xnor_or_pairs: int = 0
    extra_inverters: int = 0
    xors: int = 0
    half_adders: int = 0
    mux2: int = 0
    mux4: int = 0
    ma_width: int = 0
    approximate: bool = False


def hw_bill(design: ConverterDesign) -> HwBill:
    """Component counts of the named converter at its size parameter."""
    s = design.size
    if design.tag is Design.OURS:
        return HwBill(Design.OURS, inverters=3 * s + 1, full_adders=s + 2,
                      xor_and_pairs=2 * s - 1, xnor_or_pairs=s - 1,
                      ma_width=4 * s)
    if design.tag is Design.REF1:
        # the published 2s-3 extra-inverter term is negative for s=1;
        # counts are clamped at zero
        return HwBill(Design.REF1, inverters=5 * s + 3, full_adders=7 * s + 6,
                      xor_and_pairs=2 * s - 1, xnor_or_pairs=4 * s,
                      extra_inverters=max(0, 2 * s - 3), ma_width=4 * s)
    if design.tag is Design.REF9:
        # pair counts are approximate (mux-selected operand assumed half
        # ones, half zeros); flagged so renderers can mark them
        return HwBill(Design.REF9, inverters=4 * s, full_adders=15 * s,
                      xor_and_pairs=7 * s, xnor_or_pairs=2 * s, mux4=1,
                      ma_width=4 * s, approximate=True)
    return HwBill(Design.REF11, inverters=2 * s + 1, full_adders=2 * s,
                  xors=1, half_adders=1, mux2=2, ma_width=2 * s)


def modular_adder_area(width: int) -> int:
    """Calibrated area of the final end-around modular adder."""
    return 3 * width * ceil_log2(width) + 4 * width


def modular_adder_delay(width: int) -> int:
    """Parallel-prefix modular adder delay: 2*ceil(log2 w) + 3."""
    return 2 * ceil_log2(width) + 3


def area_total(bill: HwBill, costs: GateCosts = DEFAULT_COSTS) -> int:
    """Unit-gate area of a bill, modular adder included."""
    area = (bill.inverters + bill.extra_inverters) * costs.area_not
    area += bill.full_adders * costs.area_fa
    area += bill.xor_and_pairs * costs.area_xor_and_pair
    area += bill.xnor_or_pairs * costs.area_xnor_or_pair
    area += bill.xors * costs.area_xor
    area += bill.half_adders * costs.area_ha
    area += bill.mux2 * costs.area_mux2
    area += bill.mux4 * 3 * costs.area_mux2  # 4:1 mux as three 2:1 muxes
    if bill.ma_width:
        area += modular_adder_area(bill.ma_width)
    return area


def delay_total(design: ConverterDesign, costs: GateCosts = DEFAULT_COSTS) -> int:
    """Critical-path delay: operand prep + adder levels (+ mux) + modular add."""
    s = design.size
    if design.tag is Design.OURS:
        return costs.delay_inv + costs.delay_fa + modular_adder_delay(4 * s)
    if design.tag is Design.REF1:
        return costs.delay_inv + 3 * costs.delay_fa + modular_adder_delay(4 * s)
    if design.tag is Design.REF9:
        return costs.delay_inv + 4 * costs.delay_fa + modular_adder_delay(4 * s)
    return (costs.delay_inv + costs.delay_mux + costs.delay_fa
            + modular_adder_delay(2 * s))


class ChannelAdder(Enum):
    MOD_2POW2N_PLUS1 = "mod_2pow2n_plus1"   # modulus 2^(2n) + 1
    MOD_HIASAT = "mod_hiasat"               # modulus 2^n + 2^((n+1)/2) + 1


def channel_adder_delay(kind: ChannelAdder, n: int) -> int:
    """Delay of one addition in the channel that bounds each moduli set.

    The 2^n + 2^((n+1)/2) + 1 figure is approximate by construction.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if kind is ChannelAdder.MOD_2POW2N_PLUS1:
        return 2 * ceil_log2(2 * n) + 6
    return 4 * ceil_log2(n) + 7


@dataclass(frozen=True)
class CostReport:
    """One comparison row: sizes, unit-gate totals, derived percentages."""

    dr_bits: int
    n: int
    m: int
    a_ours: int
    a_ref11: int
    extra_area_pct: str
    t_ours: int
    t_ref11: int
    speedup_pct: str


# Fixed (dynamic-range label, n, m) triples of the comparison table.
TABLE4_SIZES = ((8, 2, 3), (16, 4, 6), (32, 7, 11), (64, 13, 22))

TABLE4_CSV_HEADER = ("dr_bits,n,m,a_ours,a_ref11,extra_area_pct,"
                     "t_ours,t_ref11,speedup_pct")


def truncate_pct(numer: int, denom: int, places: int) -> str:
    """100*numer/denom truncated to `places` decimals, zeros stripped.

    Exact integer arithmetic; "10" rather than "10.0", "11.02" kept as is.
    """
    if denom <= 0:
        raise ParameterError("denominator must be positive")
    scaled = numer * 100 * 10**places // denom
    whole, frac = divmod(scaled, 10**places)
    digits = str(frac).rjust(places, "0").rstrip("0")
    return f"{whole}.{digits}" if digits else str(whole)


def table4() -> list[CostReport]:
    """The four fixed-size comparison rows against the classic set."""
    rows = []
    for dr, n, m in TABLE4_SIZES:
        a = area_total(hw_bill(ConverterDesign(Design.OURS, n)))
        a11 = area_total(hw_bill(ConverterDesign(Design.REF11, m)))
        t = delay_total(ConverterDesign(Design.OURS, n))
        t11 = delay_total(ConverterDesign(Design.REF11, m))
        rows.append(CostReport(
            dr_bits=dr, n=n, m=m, a_ours=a, a_ref11=a11,
            extra_area_pct=truncate_pct(a - a11, a11, 2),
            t_ours=t, t_ref11=t11,
            speedup_pct=truncate_pct(t11 - t, t11, 1),
        ))
    return rows


def _render(cells: list[list[str]], format: str) -> str:
    """Byte-stable text/csv rendering of a header row plus data rows."""
    if format == "csv":
        return "\n".join(",".join(row) for row in cells) + "\n"
    if format != "text":
        raise ParameterError(f"unknown format {format!r}")
    widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
    lines = [
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in cells
    ]
    return "\n".join(lines) + "\n"


def emit_table(rows: list[CostReport], format: str = "text") -> str:
    """Render comparison rows; csv output is contract-stable."""
    if not rows:
        raise ParameterError("need at least one row")
    cells = [TABLE4_CSV_HEADER.split(",")]
    for r in rows:
        cells.append([str(v) for v in (
            r.dr_bits, r.n, r.m, r.a_ours, r.a_ref11, r.extra_area_pct,
            r.t_ours, r.t_ref11, r.speedup_pct)])
    return _render(cells, format)


def matched_three_channel_size(n: int) -> int:
    """Width m of the classic set with (almost) the dynamic range of size n."""
    return max(1, 5 * n // 3)


def delay_case(n: int, m: int) -> int:
    """1 if both compared adders share a prefix depth, 2 if ours is one
    level deeper, 0 otherwise (does not occur for matched sizes)."""
    if ceil_log2(2 * n) == ceil_log2(m):
        return 1
    if ceil_log2(2 * n) == ceil_log2(m) + 1:
        return 2
    return 0


def case_census(n_lo: int = 1, n_hi: int = 50) -> tuple[float, float]:
    """Percentages of sizes in [n_lo, n_hi] falling in delay cases 1 and 2."""
    if not 1 <= n_lo <= n_hi:
        raise ParameterError("need 1 <= n_lo <= n_hi")
    cases = [delay_case(n, matched_three_channel_size(n))
             for n in range(n_lo, n_hi + 1)]
    total = len(cases)
    return 100.0 * cases.count(1) / total, 100.0 * cases.count(2) / total


def render_bill_table(n: int, m: int | None = None, format: str = "text") -> str:
    """Hardware bills of all four designs at size n (m for the classic set)."""
    m = matched_three_channel_size(n) if m is None else m
    header = ["design", "size", "inverters", "full_adders", "xor_and_pairs",
              "xnor_or_pairs", "extra_inverters", "xors", "half_adders",
              "mux2", "mux4", "ma_width", "area", "approximate"]
    cells = [header]
    for tag, size in ((Design.OURS, n), (Design.REF1, n),
                      (Design.REF9, n), (Design.REF11, m)):
        b = hw_bill(ConverterDesign(tag, size))
        cells.append([str(v) for v in (
            tag.value, size, b.inverters, b.full_adders, b.xor_and_pairs,
            b.xnor_or_pairs, b.extra_inverters, b.xors, b.half_adders,
            b.mux2, b.mux4, b.ma_width, area_total(b), b.approximate)])
    return _render(cells, format)


def render_delay_table(n: int, m: int | None = None, format: str = "text") -> str:
    """Unit-gate delay totals of all four designs at size n (m for REF11)."""
    m = matched_three_channel_size(n) if m is None else m
    cells = [["design", "size", "delay"]]
    for tag, size in ((Design.OURS, n), (Design.REF1, n),
                      (Design.REF9, n), (Design.REF11, m)):
        cells.append([tag.value, str(size),
                      str(delay_total(ConverterDesign(tag, size)))])
    return _render(cells, format)


def render_channel_delay_table(n: int, format: str = "text") -> str:
    """Delay of one addition in the two speed-limiting channel moduli."""
    cells = [["modulus", "n", "delay"]]
    for kind, label in ((ChannelAdder.MOD_2POW2N_PLUS1, "2^(2n)+1"),
                        (ChannelAdder.MOD_HIASAT, "2^n+2^((n+1)/2)+1")):
        cells.append([label, str(n), str(channel_adder_delay(kind, n))])
    return _render(cells, format)
