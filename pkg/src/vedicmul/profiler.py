"""Recursion-count statistics for the smaller multiplicand.

The driver follows the single-operand chain ``n -> |n - base(n)|`` and
counts base selections, including the last one whose difference is 0 or 1.
"""
from __future__ import annotations

import csv
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Sequence

import numpy as np

from .bitnum import BitNat
from .nikhilam import base_exponent

__all__ = [
    "DEFAULT_CORPUS_CAP",
    "CENSUS_MAX_BITS",
    "ProfileRecord",
    "CensusRow",
    "Bucket",
    "CorpusTooLarge",
    "recursion_depth",
    "profile_record",
    "profile_range",
    "depth_table",
    "census",
    "census_sampled",
    "ratio_buckets",
    "emit_csv",
    "PROFILE_HEADER",
    "CENSUS_HEADER",
]

DEFAULT_CORPUS_CAP = 1 << 24
CENSUS_MAX_BITS = 24

PROFILE_HEADER = ("n", "bit_len", "ones", "zeros", "ratio", "recursion_count")
CENSUS_HEADER = ("b", "corpus_size", "worst_case_depth", "worst_case_cardinality")


class CorpusTooLarge(ValueError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"range holds {size} values, above the corpus cap of {cap}")
        self.size = size
        self.cap = cap


@dataclass(frozen=True)
class ProfileRecord:
    n: int
    bit_len: int
    ones: int
    zeros: int
    ratio: Fraction | None  # None: zeros == 0, ratio is infinite
    recursion_count: int

    @property
    def ratio_is_infinite(self) -> bool:
        return self.ratio is None


@dataclass(frozen=True)
class CensusRow:
    b: int
    corpus_size: int
    worst_case_depth: int
    worst_case_cardinality: int


@dataclass(frozen=True)
class Bucket:
    lo: float  # inclusive; the overflow bucket has lo == hi == inf
    hi: float
    mean_depth: float | None
    size: int

    @property
    def is_overflow(self) -> bool:
        return math.isinf(self.lo)

    def contains(self, ratio: float) -> bool:
        if self.is_overflow:
            return math.isinf(ratio)
        if self.hi == 2.0:
            return self.lo <= ratio
        return self.lo <= ratio < self.hi


def _depth(n: int) -> int:
    d = 0
    while n > 1:
        n = abs(n - (1 << base_exponent(n)))
        d += 1
    return d


def recursion_depth(n: BitNat | int) -> int:
    """Number of base selections on the chain started at ``n``."""
    return _depth(int(n))


def profile_record(n: int) -> ProfileRecord:
    n = int(n)
    m = n.bit_length()
    ones = bin(n).count("1")
    zeros = m - ones
    ratio = Fraction(ones, zeros) if zeros else None
    return ProfileRecord(n, m, ones, zeros, ratio, _depth(n))


def _profile_chunk(bounds: tuple[int, int]) -> list[ProfileRecord]:
    lo, hi = bounds
    return [profile_record(n) for n in range(lo, hi + 1)]


def profile_range(
    lo: BitNat | int, hi: BitNat | int, cap: int | None = None, jobs: int = 1
) -> list[ProfileRecord]:
    """Records for every n in ``[lo, hi]``, ascending, for any ``jobs``."""
    lo, hi = int(lo), int(hi)
    if lo < 0 or hi < lo:
        raise ValueError(f"invalid range [{lo}, {hi}]")
    cap = DEFAULT_CORPUS_CAP if cap is None else cap
    size = hi - lo + 1
    if size > cap:
        raise CorpusTooLarge(size, cap)
    if jobs <= 1 or size < 4096:
        return _profile_chunk((lo, hi))
    step = -(-size // (jobs * 4))
    chunks = [(s, min(s + step - 1, hi)) for s in range(lo, hi + 1, step)]
    out: list[ProfileRecord] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map() yields in submission order, so output stays ascending
        for part in pool.map(_profile_chunk, chunks):
            out.extend(part)
    return out


def depth_table(bits: int) -> np.ndarray:
    """Recursion depth of every n < 2**bits, filled one bit length at a time.

    Every chain step lands on a strictly smaller value with fewer bits, so
    each bit-length block only reads entries computed before it.
    """
    table = np.zeros(1 << bits, dtype=np.int16)
    for m in range(2, bits + 1):
        n = np.arange(1 << (m - 1), 1 << m, dtype=np.int64)
        second = (n >> (m - 2)) & 1
        base = np.where(second == 1, 1 << m, 1 << (m - 1))
        table[n] = table[np.abs(n - base)] + 1
    return table


def census(b_max: int) -> list[CensusRow]:
    """Exhaustive worst-case census for every bit length 2..b_max."""
    if not 2 <= b_max <= CENSUS_MAX_BITS:
        raise ValueError(f"b_max must be in 2..{CENSUS_MAX_BITS}, got {b_max}")
    table = depth_table(b_max)
    rows = []
    for b in range(2, b_max + 1):
        block = table[1 << (b - 1):1 << b]
        worst = int(block.max())
        rows.append(CensusRow(b, len(block), worst, int((block == worst).sum())))
    return rows


def census_sampled(
    b_values: Iterable[int], samples: int, seed: int = 0
) -> list[CensusRow]:
    """Uniform random b-bit samples; the observed maximum is only a lower
    bound on the true worst case and the cardinality counts sample hits."""
    if samples < 1:
        raise ValueError("samples must be positive")
    rng = random.Random(seed)
    rows = []
    for b in b_values:
        if b < 2:
            raise ValueError(f"bit length must be >= 2, got {b}")
        top = 1 << (b - 1)
        depths = [_depth(top | rng.getrandbits(b - 1)) for _ in range(samples)]
        worst = max(depths)
        rows.append(CensusRow(b, samples, worst, depths.count(worst)))
    return rows


def ratio_buckets(records: Sequence[ProfileRecord], bucket_count: int) -> list[Bucket]:
    """Mean depth per ones/zeros ratio bucket.

    Finite ratios are clamped to [0, 2] and split into ``bucket_count``
    equal-width buckets; an extra overflow bucket, last, holds zeros == 0.
    """
    if bucket_count < 2:
        raise ValueError(f"bucket_count must be >= 2, got {bucket_count}")
    if not records:
        raise ValueError("ratio_buckets needs at least one record")
    width = 2.0 / bucket_count
    sums = [0] * (bucket_count + 1)
    counts = [0] * (bucket_count + 1)
    for r in records:
        if r.ratio is None:
            i = bucket_count
        else:
            i = min(int(min(r.ratio, 2) / Fraction(2, bucket_count)), bucket_count - 1)
        sums[i] += r.recursion_count
        counts[i] += 1
    out = []
    for i in range(bucket_count + 1):
        mean = sums[i] / counts[i] if counts[i] else None
        if i == bucket_count:
            out.append(Bucket(math.inf, math.inf, mean, counts[i]))
        else:
            hi = 2.0 if i == bucket_count - 1 else (i + 1) * width
            out.append(Bucket(i * width, hi, mean, counts[i]))
    return out


def _ratio_text(r: Fraction | None) -> str:
    if r is None:
        return "inf"
    text = f"{float(r):.6f}".rstrip("0").rstrip(".")
    return text or "0"


def _row(obj) -> tuple:
    if isinstance(obj, ProfileRecord):
        return (obj.n, obj.bit_len, obj.ones, obj.zeros,
                _ratio_text(obj.ratio), obj.recursion_count)
    if isinstance(obj, CensusRow):
        return (obj.b, obj.corpus_size, obj.worst_case_depth, obj.worst_case_cardinality)
    raise TypeError(f"cannot emit {type(obj).__name__} as CSV")


def emit_csv(rows: Sequence, sink: IO[str], kind: str | None = None) -> None:
    """Write a header and one line per row.

    ``kind`` ("profile" or "census") picks the header for an empty list;
    otherwise it is taken from the first row.
    """
    if kind is None:
        kind = "census" if rows and isinstance(rows[0], CensusRow) else "profile"
    header = {"profile": PROFILE_HEADER, "census": CENSUS_HEADER}[kind]
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(header)
    for obj in rows:
        writer.writerow(_row(obj))
