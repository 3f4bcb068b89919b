"""Recursive radix-2 Nikhilam (Vedic) multiplication, traces and profiling."""
from .bitnum import BitNat, SignedInt, schoolbook_mul
from .nikhilam import (
    RecursionTrace,
    TraceLevel,
    merge_trace,
    nikhilam_mul,
    nikhilam_mul_signed,
    render_trace,
    select_base,
)
from .profiler import census, profile_range, recursion_depth

__all__ = [
    "BitNat",
    "SignedInt",
    "schoolbook_mul",
    "RecursionTrace",
    "TraceLevel",
    "merge_trace",
    "nikhilam_mul",
    "nikhilam_mul_signed",
    "render_trace",
    "select_base",
    "census",
    "profile_range",
    "recursion_depth",
]

__version__ = "0.1.0"
