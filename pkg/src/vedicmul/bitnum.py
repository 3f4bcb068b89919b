"""Unsigned binary naturals, sign-magnitude integers and a schoolbook oracle.

Values are backed by Python's arbitrary-precision ``int``; a non-negative
int has no leading zero bits, so every ``BitNat`` is canonical by
construction.  ``bits`` exposes the least-significant-first digit view.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass

__all__ = [
    "BitNat",
    "SignedInt",
    "ZERO",
    "ONE",
    "add",
    "sub_signed",
    "shl",
    "bit_len",
    "second_msb",
    "popcount",
    "cmp",
    "schoolbook_mul",
    "parse",
    "format",
]

RADIXES = (2, 10, 16)
_DIGITS = {
    2: frozenset("01"),
    10: frozenset("0123456789"),
    16: frozenset("0123456789abcdefABCDEF"),
}
_PREFIXES = {2: "0b", 16: "0x"}
# decimal chunk size for numerals beyond the interpreter's str<->int limit
_DEC_CHUNK = 1000


class BitNat:
    """Immutable arbitrary-width unsigned binary natural."""

    __slots__ = ("_value",)

    def __init__(self, value: int = 0):
        if isinstance(value, BitNat):
            value = value._value
        elif isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"BitNat expects an int, got {type(value).__name__}")
        if value < 0:
            raise ValueError(f"BitNat cannot hold a negative value: {value}")
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name, value):
        raise AttributeError("BitNat is immutable")

    @classmethod
    def from_bits(cls, bits) -> "BitNat":
        """Build from a least-significant-first bit sequence."""
        v = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"bit {i} is {b!r}, expected 0 or 1")
            v |= b << i
        return cls(v)

    @property
    def value(self) -> int:
        return self._value

    @property
    def bits(self) -> tuple[int, ...]:
        v = self._value
        return tuple((v >> i) & 1 for i in range(v.bit_length()))

    def __int__(self) -> int:
        return self._value

    __index__ = __int__

    def __bool__(self) -> bool:
        return self._value != 0

    def __eq__(self, other):
        if isinstance(other, BitNat):
            return self._value == other._value
        return NotImplemented

    def __hash__(self):
        return hash(("BitNat", self._value))

    def __lt__(self, other: "BitNat") -> bool:
        return cmp(self, other) < 0

    def __le__(self, other: "BitNat") -> bool:
        return cmp(self, other) <= 0

    def __gt__(self, other: "BitNat") -> bool:
        return cmp(self, other) > 0

    def __ge__(self, other: "BitNat") -> bool:
        return cmp(self, other) >= 0

    def __repr__(self):
        return f"BitNat(0b{self._value:b})"


ZERO = BitNat(0)
ONE = BitNat(1)


@dataclass(frozen=True)
class SignedInt:
    """Sign flag plus magnitude.  Zero is never negative."""

    negative: bool
    magnitude: BitNat

    def __post_init__(self):
        if not isinstance(self.magnitude, BitNat):
            object.__setattr__(self, "magnitude", BitNat(self.magnitude))
        if not self.magnitude:
            object.__setattr__(self, "negative", False)
        else:
            object.__setattr__(self, "negative", bool(self.negative))

    @classmethod
    def from_int(cls, value: int) -> "SignedInt":
        return cls(value < 0, BitNat(abs(value)))

    @classmethod
    def positive(cls, magnitude: BitNat) -> "SignedInt":
        return cls(False, magnitude)

    @property
    def value(self) -> int:
        v = self.magnitude.value
        return -v if self.negative else v

    def __int__(self) -> int:
        return self.value

    def __neg__(self) -> "SignedInt":
        return SignedInt(not self.negative, self.magnitude)

    def __repr__(self):
        sign = "-" if self.negative else "+"
        return f"SignedInt({sign}0b{self.magnitude.value:b})"


def add(x: BitNat, y: BitNat) -> BitNat:
    return BitNat(x.value + y.value)


def sub_signed(x: BitNat, y: BitNat) -> SignedInt:
    """``x - y`` as a sign-magnitude value."""
    xv, yv = x.value, y.value
    if xv >= yv:
        return SignedInt(False, BitNat(xv - yv))
    return SignedInt(True, BitNat(yv - xv))


def shl(x: BitNat, k: int) -> BitNat:
    if k < 0:
        raise ValueError(f"shift count must be non-negative, got {k}")
    return BitNat(x.value << k)


def bit_len(x: BitNat) -> int:
    """Smallest m with x < 2**m; zero has length 0."""
    return x.value.bit_length()


def second_msb(x: BitNat) -> int:
    m = x.value.bit_length()
    if m < 2:
        raise ValueError(f"second MSB undefined for {m}-bit value {x.value}")
    return (x.value >> (m - 2)) & 1


def popcount(x: BitNat) -> int:
    return bin(x.value).count("1")


def cmp(x: BitNat, y: BitNat) -> int:
    """-1, 0 or 1 as x is less than, equal to or greater than y."""
    xv, yv = x.value, y.value
    return (xv > yv) - (xv < yv)


def schoolbook_mul(x: BitNat, y: BitNat) -> BitNat:
    """Shift-and-add over the bits of ``y``.

    Verification oracle only: it deliberately shares nothing with the
    Nikhilam engine.
    """
    acc = 0
    addend = x.value
    rest = y.value
    while rest:
        if rest & 1:
            acc += addend
        addend <<= 1
        rest >>= 1
    return BitNat(acc)


def _check_radix(radix: int) -> None:
    if radix not in RADIXES:
        raise ValueError(f"unsupported radix {radix!r}; expected one of {RADIXES}")


def _str_limit() -> int:
    get = getattr(sys, "get_int_max_str_digits", None)
    return get() if get else 0


def _parse_decimal(digits: str) -> int:
    limit = _str_limit()
    if not limit or len(digits) <= limit:
        return int(digits, 10)
    v = 0
    for i in range(0, len(digits), _DEC_CHUNK):
        chunk = digits[i:i + _DEC_CHUNK]
        v = v * 10 ** len(chunk) + int(chunk, 10)
    return v


def _format_decimal(v: int) -> str:
    limit = _str_limit()
    if not limit or v.bit_length() < limit * 3:
        return str(v)
    step = 10 ** _DEC_CHUNK
    chunks = []
    while v:
        v, r = divmod(v, step)
        chunks.append(r)
    head = str(chunks.pop())
    return head + "".join(f"{c:0{_DEC_CHUNK}d}" for c in reversed(chunks))


def parse(text: str, radix: int = 10) -> BitNat:
    """Parse a non-negative numeral; ``0b``/``0x`` prefixes are accepted for
    radix 2/16."""
    _check_radix(radix)
    if not isinstance(text, str):
        raise TypeError(f"numeral must be a str, got {type(text).__name__}")
    body = text
    prefix = _PREFIXES.get(radix)
    if prefix and body[:2].lower() == prefix:
        body = body[2:]
    if not body:
        raise ValueError(f"empty numeral {text!r}")
    bad = set(body) - _DIGITS[radix]
    if bad:
        raise ValueError(
            f"invalid radix-{radix} digit(s) {''.join(sorted(bad))!r} in {text!r}"
        )
    if radix == 10:
        return BitNat(_parse_decimal(body))
    return BitNat(int(body, radix))


def format(x: BitNat, radix: int = 10) -> str:
    _check_radix(radix)
    v = x.value
    if radix == 2:
        return f"{v:b}"
    if radix == 16:
        return f"{v:x}"
    return _format_decimal(v)
