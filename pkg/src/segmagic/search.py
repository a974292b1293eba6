"""Enumeration of magic squares over restricted digit alphabets.

A *combination square* over an alphabet D uses every ordered two-digit pair
of D exactly once as a cell; its semi-magic constant is forced to 11 * sum(D)
(tens contribute ten times the digit sum, units once).  Enumeration
backtracks over the cell grid row-major with sum pruning (the hot loop lives
in the kernel, compiled when available), then filters complete candidates for
universality and orbit-minimality.

Two-digit combination squares are equivalent to orthogonal Latin square
pairs: the tens digits and the units digits each form a Latin square, and
superimposing them yields all pairs once.  ``via_latin`` enumeration walks
that much smaller space instead and is the practical route at order 5.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import product
from typing import Iterable, Iterator, Sequence

from . import kernels
from .squares import (
    ATOMIC_TRANSFORMS,
    Category,
    InvalidDigitError,
    Square,
    alphabet_of,
    apply_transform,
    classify,
)


def parse_alphabet(text: str | Iterable[int]) -> tuple[int, ...]:
    """Normalize an alphabet ("1258" or any digit iterable) to ascending digits."""
    if isinstance(text, str):
        digits = [int(ch) if ch.isdigit() and ch.isascii() else -1 for ch in text]
    else:
        digits = list(text)
    if not digits or any(d not in range(10) for d in digits):
        raise ValueError(f"alphabet must be decimal digits, got {text!r}")
    if len(set(digits)) != len(digits):
        raise ValueError(f"alphabet has repeated digits: {text!r}")
    return tuple(sorted(digits))


def magic_sum(alphabet: Sequence[int]) -> int:
    """Forced row/column sum of any combination square over the alphabet."""
    return 11 * sum(alphabet)


@dataclass(frozen=True)
class SearchQuery:
    """What to enumerate: alphabet, size, magic level, preserved transforms.

    ``universality`` lists the atomic transforms whose image must again reach
    ``requirement`` with the same constant.  ``dedup`` keeps only the
    lexicographically least square of each orbit under the group those
    transforms generate (skipping transforms that break digit validity).
    """

    alphabet: tuple[int, ...]
    order: int
    requirement: Category = Category.MAGIC
    universality: tuple[str, ...] = ()
    dedup: bool = False

    def __post_init__(self):
        object.__setattr__(self, "alphabet", parse_alphabet(self.alphabet))
        if self.order != len(self.alphabet):
            raise ValueError(
                f"order {self.order} != alphabet size {len(self.alphabet)}"
            )
        if self.requirement < Category.SEMI_MAGIC:
            raise ValueError("requirement must be at least semi-magic")
        object.__setattr__(self, "universality", tuple(self.universality))
        for name in self.universality:
            if name not in ATOMIC_TRANSFORMS:
                raise ValueError(f"unknown transform {name!r}")


_LEVELS = {
    Category.SEMI_MAGIC: 1,
    Category.MAGIC: 2,
    Category.PANDIAGONAL_MAGIC: 3,
}


def _kernel_job(prefix, values, order, target, level):
    return kernels.product_square_indices(values, order, target, level, prefix)


def enumerate_squares(
    query: SearchQuery, *, jobs: int = 1, via_latin: bool = False
) -> Iterator[Square]:
    """Stream every satisfying combination square, in lexicographic order of
    the row-major cell concatenation, each exactly once.

    ``jobs`` > 1 splits the direct search by first-cell prefix across worker
    processes; the output order does not depend on it.  ``via_latin``
    enumerates orthogonal Latin pairs instead of raw cell grids, which is
    drastically cheaper for order 5, and filters the same way.
    """
    n = query.order
    alphabet = query.alphabet
    cells = [f"{x}{y}" for x, y in product(alphabet, repeat=2)]
    target = magic_sum(alphabet)

    if via_latin:
        candidates = _squares_from_latin_pairs(n, cells, target, query.requirement)
    else:
        candidates = _squares_from_kernel(n, cells, target, query, jobs)

    for square in candidates:
        if query.universality and not _universality_ok(square, query, target):
            continue
        if query.dedup and not _orbit_minimal(square, query.universality):
            continue
        yield square


def _squares_from_kernel(n, cells, target, query, jobs) -> Iterator[Square]:
    values = [int(c) for c in cells]
    level = _LEVELS[query.requirement]
    if jobs > 1:
        job = partial(
            _kernel_job, values=values, order=n, target=target, level=level
        )
        prefixes = [(k,) for k in range(n * n)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = pool.map(job, prefixes)
            for batch in batches:
                for indices in batch:
                    yield _square_from_indices(cells, indices, n)
    else:
        for indices in kernels.product_square_indices(values, n, target, level):
            yield _square_from_indices(cells, indices, n)


def _square_from_indices(cells, indices, n) -> Square:
    return Square.from_rows(
        tuple(cells[indices[i * n + j]] for j in range(n)) for i in range(n)
    )


def _squares_from_latin_pairs(n, cells, target, requirement) -> Iterator[Square]:
    # Rows and columns of any orthogonal pair already sum to the target, so
    # only diagonals need checking; do that on cell values before paying for
    # Square construction.
    values = [int(c) for c in cells]
    level = _LEVELS[requirement]
    for flat in _orthogonal_pair_grids(n):
        if level >= 2:
            if (
                sum(values[flat[i * n + i]] for i in range(n)) != target
                or sum(values[flat[i * n + n - 1 - i]] for i in range(n)) != target
            ):
                continue
            if level == 3 and n >= 3:
                if any(
                    sum(values[flat[i * n + (i + k) % n]] for i in range(n)) != target
                    for k in range(1, n)
                ) or any(
                    sum(values[flat[i * n + (k - i) % n]] for i in range(n)) != target
                    for k in range(n - 1)
                ):
                    continue
        yield Square.from_rows(
            tuple(cells[flat[i * n + j]] for j in range(n)) for i in range(n)
        )


def _orthogonal_pair_grids(n: int) -> Iterator[tuple[int, ...]]:
    """All ordered orthogonal Latin pairs of order n, cell-lexicographic.

    Yields flat grids of pair codes a*n+b; every row and column of the
    a-grid and of the b-grid is a permutation and all n*n pairs are distinct.
    Pair codes ascend exactly like the two-digit cells they map to, so the
    yield order matches the direct enumeration's.
    """
    m = n * n
    grid = [0] * m
    row_a = [0] * n
    col_a = [0] * n
    row_b = [0] * n
    col_b = [0] * n
    used = [False] * m

    def extend(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == m:
            yield tuple(grid)
            return
        i, j = divmod(pos, n)
        for a in range(n):
            bit_a = 1 << a
            if row_a[i] & bit_a or col_a[j] & bit_a:
                continue
            for b in range(n):
                bit_b = 1 << b
                if row_b[i] & bit_b or col_b[j] & bit_b or used[a * n + b]:
                    continue
                grid[pos] = a * n + b
                used[a * n + b] = True
                row_a[i] |= bit_a
                col_a[j] |= bit_a
                row_b[i] |= bit_b
                col_b[j] |= bit_b
                yield from extend(pos + 1)
                row_a[i] ^= bit_a
                col_a[j] ^= bit_a
                row_b[i] ^= bit_b
                col_b[j] ^= bit_b
                used[a * n + b] = False

    yield from extend(0)


def _universality_ok(square: Square, query: SearchQuery, target: int) -> bool:
    for name in query.universality:
        try:
            image = apply_transform(square, name)
        except InvalidDigitError:
            return False
        report = classify(image)
        if report.category < query.requirement or report.constant != target:
            return False
    return True


def _orbit_minimal(square: Square, transforms: Sequence[str]) -> bool:
    """Is the square the lexicographically least member of its orbit?"""
    key = square.concat
    seen = {key: square}
    frontier = [square]
    while frontier:
        current = frontier.pop()
        for name in transforms:
            try:
                image = apply_transform(current, name)
            except InvalidDigitError:
                continue
            if image.concat < key:
                return False
            if image.concat not in seen:
                seen[image.concat] = image
                frontier.append(image)
    return True


@dataclass(frozen=True)
class LatinPair:
    """Two Latin squares over 0..n-1 whose superimposed pairs are distinct."""

    a: tuple[tuple[int, ...], ...]
    b: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.a)


class LatinPairError(ValueError):
    """Input grids are not an orthogonal Latin pair."""


def _check_latin(grid: Sequence[Sequence[int]], n: int, name: str) -> None:
    full = set(range(n))
    if len(grid) != n or any(len(row) != n for row in grid):
        raise LatinPairError(f"grid {name} is not {n}x{n}")
    for i, row in enumerate(grid):
        if set(row) != full:
            raise LatinPairError(f"grid {name} row {i} is not a permutation")
    for j in range(n):
        if {grid[i][j] for i in range(n)} != full:
            raise LatinPairError(f"grid {name} column {j} is not a permutation")


def from_latin_pair(pair: LatinPair, alphabet: Sequence[int]) -> Square:
    """Superimpose an orthogonal Latin pair over a digit alphabet.

    Cell (i, j) is the digit alphabet[a[i][j]] followed by alphabet[b[i][j]];
    the result has every row and column summing to 11 * sum(alphabet).
    """
    alphabet = parse_alphabet(alphabet)
    n = len(alphabet)
    _check_latin(pair.a, n, "a")
    _check_latin(pair.b, n, "b")
    pairs = {(pair.a[i][j], pair.b[i][j]) for i in range(n) for j in range(n)}
    if len(pairs) != n * n:
        raise LatinPairError("grids are not orthogonal")
    return Square.from_rows(
        tuple(f"{alphabet[pair.a[i][j]]}{alphabet[pair.b[i][j]]}" for j in range(n))
        for i in range(n)
    )


def decompose_to_latin_pair(square: Square) -> LatinPair | None:
    """Split a width-2 square into its tens/units index grids.

    Returns None unless the cells are exactly the alphabet product and both
    digit grids are Latin (orthogonality then comes free from cell
    distinctness).  The index order is the ascending digit order, so
    ``from_latin_pair(pair, alphabet_of(square))`` reconstructs the square.
    """
    if square.width != 2:
        raise ValueError(f"need width-2 cells, got width {square.width}")
    n = square.order
    digits = alphabet_of(square)
    if len(digits) != n:
        return None
    index = {str(d): k for k, d in enumerate(digits)}
    cells = set(square.cells())
    if len(cells) != n * n or cells != {
        f"{x}{y}" for x, y in product(digits, repeat=2)
    }:
        return None
    a = tuple(tuple(index[cell[0]] for cell in row) for row in square.rows)
    b = tuple(tuple(index[cell[1]] for cell in row) for row in square.rows)
    try:
        _check_latin(a, n, "a")
        _check_latin(b, n, "b")
    except LatinPairError:
        return None
    return LatinPair(a, b)


def palindromic_cells(alphabet: Sequence[int], width: int) -> list[str]:
    """All width-w palindromic digit strings over the alphabet, ascending."""
    alphabet = parse_alphabet(alphabet)
    if width < 1:
        raise ValueError("width must be at least 1")
    half = (width + 1) // 2
    out = []
    for head in product(alphabet, repeat=half):
        tail = head[: width // 2][::-1]
        out.append("".join(str(d) for d in head + tail))
    return out


def enumerate_palindromic(
    alphabet: Sequence[int], order: int, width: int
) -> Iterator[Square]:
    """Stream all semi-magic squares of distinct palindromic cells.

    Cells are drawn without repetition from the width-w palindromes over the
    alphabet; rows and columns must share one sum (the diagonals are free).
    Output is lexicographic by row-major concatenation.
    """
    cells = palindromic_cells(alphabet, width)
    values = [int(c) for c in cells]
    n = order
    if n < 1:
        raise ValueError("order must be at least 1")
    m = len(cells)
    if m < n * n:
        return

    used = [False] * m
    grid = [0] * (n * n)
    row_sum = [0] * n
    col_sum = [0] * n

    def extend(pos: int, target: int | None) -> Iterator[Square]:
        if pos == n * n:
            yield _square_from_indices(cells, tuple(grid), n)
            return
        i, j = divmod(pos, n)
        for c in range(m):
            if used[c]:
                continue
            v = values[c]
            rs = row_sum[i] + v
            cs = col_sum[j] + v
            if target is not None:
                if rs > target:
                    break
                if j == n - 1 and rs != target:
                    continue
                if cs > target or (i == n - 1 and cs != target):
                    continue
            row_target = rs if target is None and j == n - 1 else target
            used[c] = True
            grid[pos] = c
            row_sum[i] = rs
            col_sum[j] = cs
            yield from extend(pos + 1, row_target)
            row_sum[i] -= v
            col_sum[j] -= v
            used[c] = False

    yield from extend(0, None)
