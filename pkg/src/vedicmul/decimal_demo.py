"""Single-step radix-10 Nikhilam multiplication, shown as a worked table.

With base ``x`` and differences ``a = x - n1``, ``b = x - n2``::

    n1 * n2 = x * ((x - a) + (x - b) - x) + a * b

A modified base ``w * 10**j`` keeps the ``10**j`` digit slot for ``a * b``
and scales the left column by ``w`` instead.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass

__all__ = [
    "BaseKind",
    "DecimalBase",
    "DecimalNikhilamStep",
    "PAPER_CASES",
    "nikhilam_decimal",
    "render_decimal_step",
    "split_parts",
]


class BaseKind(enum.Enum):
    POWER_OF_TEN = "power_of_ten"
    MODIFIED = "modified"


@dataclass(frozen=True)
class DecimalBase:
    """``multiplier * 10**exponent``; multiplier 1 means a plain power of ten."""

    multiplier: int
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError(f"base exponent must be >= 0, got {self.exponent}")
        if self.multiplier == 0:
            raise ValueError("base must be positive")
        if self.multiplier != 1 and not 2 <= self.multiplier <= 9:
            raise ValueError(
                f"modified-base multiplier must be in 2..9, got {self.multiplier}"
            )

    @property
    def kind(self) -> BaseKind:
        return BaseKind.POWER_OF_TEN if self.multiplier == 1 else BaseKind.MODIFIED

    @property
    def working_base(self) -> int:
        return 10 ** self.exponent

    @property
    def value(self) -> int:
        return self.multiplier * self.working_base

    @classmethod
    def parse(cls, text: str) -> "DecimalBase":
        """Accept ``"100"``, ``"50"`` or ``"5x10"`` (multiplier x power of ten)."""
        text = text.strip()
        m = re.fullmatch(r"(\d+)\s*[x*×]\s*(\d+)", text)
        if m:
            w, working = int(m.group(1)), int(m.group(2))
            if not 2 <= w <= 9:
                raise ValueError(f"modified-base multiplier must be in 2..9, got {w}")
            k = _log10_exact(working)
            if k is None:
                raise ValueError(f"working base {working} is not a power of ten")
            return cls(w, k)
        if not text.isdigit():
            raise ValueError(f"invalid base specification {text!r}")
        return cls.from_int(int(text))

    @classmethod
    def from_int(cls, base: int) -> "DecimalBase":
        if base <= 0:
            raise ValueError(f"base must be positive, got {base}")
        j = 0
        while base % 10 == 0:
            base //= 10
            j += 1
        if base == 1:
            return cls(1, j)
        if 2 <= base <= 9:
            return cls(base, j)
        raise ValueError(f"base {base * 10 ** j} is neither 10^k nor w*10^j with w in 2..9")


def _log10_exact(n: int) -> int | None:
    if n <= 0:
        return None
    k = 0
    while n % 10 == 0:
        n //= 10
        k += 1
    return k if n == 1 else None


@dataclass(frozen=True)
class DecimalNikhilamStep:
    n1: int
    n2: int
    base: DecimalBase
    diff_a: int  # x - n1
    diff_b: int  # x - n2
    lhs: int  # ((x - a) + (x - b) - x), times w for a modified base
    rhs: int  # a * b
    result: int

    @property
    def base_kind(self) -> BaseKind:
        return self.base.kind


def split_parts(n1, n2, multiplier, exponent):
    """Return ``(a, b, lhs, rhs, result)``; arithmetic only, so numpy arrays
    broadcast through it as well as ints."""
    x = multiplier * 10 ** exponent
    a = x - n1
    b = x - n2
    lhs = ((x - a) + (x - b) - x) * multiplier
    rhs = a * b
    return a, b, lhs, rhs, lhs * 10 ** exponent + rhs


def nikhilam_decimal(n1: int, n2: int, base) -> DecimalNikhilamStep:
    if n1 < 0 or n2 < 0:
        raise ValueError(f"operands must be non-negative, got {n1}, {n2}")
    if isinstance(base, str):
        base = DecimalBase.parse(base)
    elif isinstance(base, int):
        base = DecimalBase.from_int(base)
    a, b, lhs, rhs, result = split_parts(n1, n2, base.multiplier, base.exponent)
    assert result == n1 * n2
    return DecimalNikhilamStep(n1, n2, base, a, b, lhs, rhs, result)


# (n1, n2, base, answer) for the four classical worked cases
PAPER_CASES = (
    ("1.1", 99, 98, DecimalBase(1, 2), 9702),
    ("2", 49, 48, DecimalBase(5, 1), 2352),
    ("1.2", 102, 101, DecimalBase(1, 2), 10302),
    ("1.3", 101, 99, DecimalBase(1, 2), 9999),
)


def _slot(v: int, width: int, signed: bool) -> str:
    digits = str(abs(v)).rjust(width, "0")
    if v < 0:
        return "-" + digits
    return ("+" + digits) if signed else digits


def render_decimal_step(step: DecimalNikhilamStep) -> str:
    base = step.base
    k = base.exponent
    if base.kind is BaseKind.MODIFIED:
        base_cell = f"{base.working_base} × {base.multiplier} = {base.value}"
        lhs_label = f"{{(x - a) + (x - b) - x}} * {base.multiplier}"
    else:
        base_cell = str(base.value)
        lhs_label = "(x - a) + (x - b) - x"

    rows = [
        ("Number", "", "Difference", "Base x"),
        ("(x - a)", str(step.n1), "a " + _slot(step.diff_a, k, True), base_cell),
        ("(x - b)", str(step.n2), "b " + _slot(step.diff_b, k, True), ""),
        (lhs_label, str(step.lhs), "ab " + _slot(step.rhs, k, False), ""),
    ]
    w0 = max(len(r[0]) for r in rows)
    w1 = max(len(r[1]) for r in rows)
    w2 = max(len(r[2]) for r in rows)
    lines = [
        f"{r[0].ljust(w0)}  {r[1].rjust(w1)}  {r[2].ljust(w2)}  {r[3]}".rstrip()
        for r in rows
    ]

    shifted = step.lhs * 10 ** k
    if step.rhs < 0:
        lines.append(f"borrow: {shifted} - {abs(step.rhs)} = {step.result}")
    elif step.rhs >= 10 ** k:
        lines.append(f"carry: {shifted} + {step.rhs} = {step.result}")
    lines.append(f"Hence answer = {step.result}")
    return "\n".join(lines) + "\n"
