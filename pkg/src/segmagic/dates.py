"""Scan calendar ranges for dates written with a restricted digit alphabet.

Dates render as dd.mm.yyyy with zero padding, always eight digits; a date
matches in ``subset`` mode when its distinct digits all come from the
alphabet, and in ``exact`` mode when they are precisely the alphabet.
"""

from __future__ import annotations

from collections import Counter
from datetime import date, timedelta
from typing import Iterable

from .search import parse_alphabet

SUBSET_OF = "subset"
EXACTLY_USES = "exact"
MODES = (SUBSET_OF, EXACTLY_USES)


def parse_date(text: str) -> date:
    """Parse dd.mm.yyyy."""
    parts = text.split(".")
    if len(parts) != 3 or not all(p.isdigit() and p.isascii() for p in parts):
        raise ValueError(f"expected dd.mm.yyyy, got {text!r}")
    day, month, year = (int(p) for p in parts)
    if len(parts[2]) != 4:
        raise ValueError(f"year must have four digits: {text!r}")
    return date(year, month, day)


def format_date(d: date) -> str:
    return f"{d.day:02d}.{d.month:02d}.{d.year:04d}"


def digits_of(d: date) -> Counter[int]:
    """The multiset of the eight digits of dd mm yyyy."""
    return Counter(int(ch) for ch in f"{d.day:02d}{d.month:02d}{d.year:04d}")


def scan(
    start: date, end: date, alphabet: str | Iterable[int], mode: str = SUBSET_OF
) -> list[date]:
    """Ascending dates in [start, end] whose digits match the alphabet."""
    alpha = set(parse_alphabet(alphabet))
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if start > end:
        raise ValueError(f"empty range: {format_date(start)} > {format_date(end)}")
    if start.year < 1000 or end.year > 9999:
        raise ValueError("years must have four digits")
    out = []
    day = start
    one = timedelta(days=1)
    while day <= end:
        digits = set(digits_of(day))
        if digits == alpha or (mode == SUBSET_OF and digits <= alpha):
            out.append(day)
        day += one
    return out
