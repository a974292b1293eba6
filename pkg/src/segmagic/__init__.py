"""Universal magic squares over seven-segment digits.

Models the digit maps induced by rotating or mirroring seven-segment glyphs,
verifies and classifies magic squares of fixed-width digit-string cells
(including invariance under rotation, mirrors and per-cell digit reversal),
enumerates combination squares over restricted digit alphabets, and scans
calendar dates for digit-alphabet membership.
"""

from .dates import digits_of, scan
from .glyphs import (
    GLYPH_TRANSFORMS,
    MIRROR_H,
    MIRROR_V,
    ROT180,
    digit_mask,
    digit_transform,
    transform_mask,
)
from .search import (
    LatinPair,
    LatinPairError,
    SearchQuery,
    decompose_to_latin_pair,
    enumerate_palindromic,
    enumerate_squares,
    from_latin_pair,
    magic_sum,
    parse_alphabet,
)
from .squares import (
    ATOMIC_TRANSFORMS,
    Category,
    ClassificationReport,
    DIGIT_REVERSE,
    InvalidDigitError,
    Square,
    SquareParseError,
    alphabet_of,
    apply_transform,
    classify,
    classify_universal,
    magic_constant,
    parse_square,
    render,
    report_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "ATOMIC_TRANSFORMS",
    "Category",
    "ClassificationReport",
    "DIGIT_REVERSE",
    "GLYPH_TRANSFORMS",
    "InvalidDigitError",
    "LatinPair",
    "LatinPairError",
    "MIRROR_H",
    "MIRROR_V",
    "ROT180",
    "SearchQuery",
    "Square",
    "SquareParseError",
    "alphabet_of",
    "apply_transform",
    "classify",
    "classify_universal",
    "decompose_to_latin_pair",
    "digit_mask",
    "digit_transform",
    "digits_of",
    "enumerate_palindromic",
    "enumerate_squares",
    "from_latin_pair",
    "magic_constant",
    "magic_sum",
    "parse_alphabet",
    "parse_square",
    "render",
    "report_to_json",
    "scan",
    "transform_mask",
]
