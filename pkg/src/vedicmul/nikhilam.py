"""Recursive radix-2 Nikhilam multiplication.

Each level rewrites ``x * y`` with a power-of-two base ``B = 2**b`` as

    x * y = (x + (y - B)) * B + (x - B) * (y - B)

and recurses on the magnitudes of the two differences until one of them
is 0 or 1.  The base is picked from the smaller operand: ``2**m`` when its
second MSB is set, else ``2**(m - 1)``, ``m`` being its bit length.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .bitnum import (
    BitNat,
    SignedInt,
    add,
    bit_len,
    cmp,
    format as format_nat,
    second_msb,
    shl,
    sub_signed,
)

__all__ = [
    "BaseRule",
    "BaseSelection",
    "TraceLevel",
    "RecursionTrace",
    "base_exponent",
    "select_base",
    "decompose_level",
    "nikhilam_mul",
    "nikhilam_mul_signed",
    "merge_trace",
    "level_contributions",
    "render_trace",
    "trace_records",
]


class BaseRule(enum.Enum):
    SECOND_MSB_ONE = "second_msb_one"  # base 2**m
    SECOND_MSB_ZERO = "second_msb_zero"  # base 2**(m-1)


@dataclass(frozen=True)
class BaseSelection:
    exponent: int
    rule_fired: BaseRule

    @property
    def base(self) -> BitNat:
        return BitNat(1 << self.exponent)


@dataclass(frozen=True)
class TraceLevel:
    x: BitNat  # smaller magnitude
    y: BitNat
    sign_x: bool  # sign of x as a difference from the previous level
    sign_y: bool
    base_exponent: int
    diff_x: SignedInt
    diff_y: SignedInt
    partial_sum: SignedInt


@dataclass(frozen=True)
class RecursionTrace:
    x: BitNat  # operands as passed by the caller, unsorted
    y: BitNat
    levels: tuple[TraceLevel, ...]
    terminal_x: SignedInt
    terminal_y: SignedInt
    terminal_product: SignedInt
    final_product: SignedInt | None = None  # filled in by nikhilam_mul

    @property
    def depth(self) -> int:
        return len(self.levels)

    @property
    def base_exponents(self) -> list[int]:
        return [lv.base_exponent for lv in self.levels]


def base_exponent(n: int) -> int:
    """Exponent of the base chosen for an int ``n >= 2``."""
    m = n.bit_length()
    if m < 2:
        raise ValueError(f"base selection needs a value >= 2, got {n}")
    return m if (n >> (m - 2)) & 1 else m - 1


def select_base(x: BitNat) -> BaseSelection:
    if x.value < 2:
        raise ValueError(f"base selection needs a value >= 2, got {x.value}")
    m = bit_len(x)
    if second_msb(x):
        return BaseSelection(m, BaseRule.SECOND_MSB_ONE)
    return BaseSelection(m - 1, BaseRule.SECOND_MSB_ZERO)


def _add_signed(x: BitNat, d: SignedInt) -> SignedInt:
    if d.negative:
        return sub_signed(x, d.magnitude)
    return SignedInt(False, add(x, d.magnitude))


def decompose_level(
    x: BitNat, y: BitNat, sign_x: bool = False, sign_y: bool = False
) -> TraceLevel:
    """One level of the decomposition for ``2 <= x <= y``."""
    if cmp(x, y) > 0:
        raise ValueError(f"decompose_level expects x <= y, got {x.value} > {y.value}")
    sel = select_base(x)
    base = sel.base
    diff_x = sub_signed(x, base)
    diff_y = sub_signed(y, base)
    partial = _add_signed(x, diff_y)
    # x + y >= B holds for both base rules once x <= y
    assert not partial.negative, (x, y, sel)
    return TraceLevel(
        x=x,
        y=y,
        sign_x=bool(sign_x),
        sign_y=bool(sign_y),
        base_exponent=sel.exponent,
        diff_x=diff_x,
        diff_y=diff_y,
        partial_sum=partial,
    )


def _ordered(a: SignedInt, b: SignedInt) -> tuple[SignedInt, SignedInt]:
    # ties keep the first argument as the smaller one
    if cmp(a.magnitude, b.magnitude) > 0:
        return b, a
    return a, b


def nikhilam_mul(x: BitNat, y: BitNat) -> tuple[BitNat, RecursionTrace]:
    """Multiply two naturals, returning the product and its full trace."""
    sx, sy = _ordered(SignedInt(False, x), SignedInt(False, y))
    levels = []
    while sx.magnitude.value >= 2:
        lv = decompose_level(sx.magnitude, sy.magnitude, sx.negative, sy.negative)
        levels.append(lv)
        sx, sy = _ordered(lv.diff_x, lv.diff_y)

    overall = False
    for lv in levels:
        overall ^= lv.sign_x ^ lv.sign_y
    overall ^= sx.negative ^ sy.negative
    # one terminal operand is 0 or 1, so the product is 0 or the other one
    magnitude = sy.magnitude if sx.magnitude.value == 1 else BitNat(0)
    terminal = SignedInt(overall, magnitude)

    trace = RecursionTrace(
        x=x, y=y, levels=tuple(levels),
        terminal_x=sx, terminal_y=sy, terminal_product=terminal,
    )
    final = merge_trace(trace)
    assert not final.negative
    trace = replace(trace, final_product=final)
    return final.magnitude, trace


def level_contributions(trace: RecursionTrace) -> list[int]:
    """Signed ``partial_sum * 2**b`` term contributed by each level.

    A level's term carries the XOR of every difference sign on the path
    down to it.
    """
    terms = []
    sign = False
    for lv in trace.levels:
        sign ^= lv.sign_x ^ lv.sign_y
        term = shl(lv.partial_sum.magnitude, lv.base_exponent).value
        terms.append(-term if sign else term)
    return terms


def merge_trace(trace: RecursionTrace) -> SignedInt:
    """Fold the partial results innermost-out with signed shift-add."""
    running = trace.terminal_product.value
    for term in reversed(level_contributions(trace)):
        running = term + running
    return SignedInt.from_int(running)


def nikhilam_mul_signed(x: SignedInt, y: SignedInt) -> SignedInt:
    product, _ = nikhilam_mul(x.magnitude, y.magnitude)
    return SignedInt(x.negative ^ y.negative, product)


def _signed_text(v: SignedInt, width: int = 0, radix: int = 2) -> str:
    digits = format_nat(v.magnitude, radix).rjust(width, "0")
    return ("-" if v.negative else "+") + digits


def render_trace(trace: RecursionTrace) -> str:
    """Column-per-level text table of a trace.

    Each column lists the two operands (larger on top), their differences
    from the base and the partial sum; a last column holds the terminal
    operands and their product.  Two lines follow: the merged product in
    binary and its decimal check.
    """
    x, y = trace.x.value, trace.y.value
    check = f"{x} × {y} = {trace.final_product.value}"
    if not trace.levels:
        return check + "\n"

    labels = ["level", "base", "operand", "", "difference", "", "partial", "terminal"]
    columns = []
    for i, lv in enumerate(trace.levels, 1):
        w = bit_len(lv.y)
        dw = max(bit_len(lv.diff_x.magnitude), bit_len(lv.diff_y.magnitude), 1)
        columns.append([
            str(i),
            f"2^{lv.base_exponent}",
            format_nat(lv.y, 2),
            format_nat(lv.x, 2).rjust(w, "0"),
            _signed_text(lv.diff_y, dw),
            _signed_text(lv.diff_x, dw),
            format_nat(lv.partial_sum.magnitude, 2),
            "",
        ])
    tw = max(bit_len(trace.terminal_y.magnitude), 1)
    tp = trace.terminal_product
    columns.append([
        str(len(trace.levels) + 1),
        "",
        format_nat(trace.terminal_y.magnitude, 2).rjust(tw, "0"),
        format_nat(trace.terminal_x.magnitude, 2).rjust(tw, "0"),
        "",
        "",
        "",
        ("-" if tp.negative else "") + format_nat(tp.magnitude, 2),
    ])

    label_w = max(len(s) for s in labels)
    widths = [max(len(cell) for cell in col) for col in columns]
    lines = []
    for r, label in enumerate(labels):
        cells = [col[r].rjust(widths[c]) for c, col in enumerate(columns)]
        lines.append((label.ljust(label_w) + "  " + "  ".join(cells)).rstrip())
    lines.append(f"result {format_nat(trace.final_product.magnitude, 2)}")
    lines.append(check)
    return "\n".join(lines) + "\n"


def _num(v, radix: int) -> str:
    if isinstance(v, SignedInt):
        return ("-" if v.negative else "") + format_nat(v.magnitude, radix)
    return format_nat(v, radix)


def trace_records(trace: RecursionTrace, radix: int = 10) -> list[dict]:
    """One JSON-ready dict per level, then a terminal/final summary record."""
    records = []
    for i, lv in enumerate(trace.levels, 1):
        records.append({
            "record": "level",
            "level": i,
            "x": _num(lv.x, radix),
            "y": _num(lv.y, radix),
            "sign_x": lv.sign_x,
            "sign_y": lv.sign_y,
            "base_exponent": lv.base_exponent,
            "diff_x": _num(lv.diff_x, radix),
            "diff_y": _num(lv.diff_y, radix),
            "partial_sum": _num(lv.partial_sum, radix),
        })
    records.append({
        "record": "result",
        "x": _num(trace.x, radix),
        "y": _num(trace.y, radix),
        "levels": len(trace.levels),
        "terminal_x": _num(trace.terminal_x, radix),
        "terminal_y": _num(trace.terminal_y, radix),
        "terminal_product": _num(trace.terminal_product, radix),
        "final_product": _num(trace.final_product, radix),
    })
    return records
