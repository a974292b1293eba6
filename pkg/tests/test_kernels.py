"""The compiled and pure-Python kernels must be interchangeable."""

import os
import subprocess
import sys
from itertools import product

import pytest

from segmagic import _kernel_py, kernels

try:
    from segmagic import _kernel as _compiled
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None

needs_compiled = pytest.mark.skipif(
    _compiled is None, reason="compiled kernel not built"
)


def _values(alphabet):
    return sorted(10 * a + b for a, b in product(alphabet, repeat=2))


CASES = [
    # (alphabet, order, level)
    ((1, 2, 5), 3, 1),
    ((1, 2, 5), 3, 2),
    ((1, 2, 5), 3, 3),
    ((0, 1, 2), 3, 1),
    ((0, 1, 2), 3, 2),
    ((2, 5, 8), 3, 2),
    ((1, 2, 5, 8), 4, 2),
]


@needs_compiled
@pytest.mark.parametrize("alphabet,order,level", CASES)
def test_kernels_agree(alphabet, order, level):
    values = _values(alphabet)
    target = 11 * sum(alphabet)
    pure = _kernel_py.product_square_indices(values, order, target, level)
    fast = _compiled.product_square_indices(values, order, target, level)
    assert pure == fast


@needs_compiled
def test_kernels_agree_with_prefix():
    values = _values((0, 1, 2))
    for k in range(9):
        pure = _kernel_py.product_square_indices(values, 3, 33, 2, (k,))
        fast = _compiled.product_square_indices(values, 3, 33, 2, (k,))
        assert pure == fast


def test_prefix_partition_reconstructs_unprefixed():
    values = _values((0, 1, 2))
    whole = kernels.product_square_indices(values, 3, 33, 2)
    parts = []
    for k in range(9):
        parts.extend(kernels.product_square_indices(values, 3, 33, 2, (k,)))
    assert sorted(parts) == sorted(whole)
    assert sorted(whole) == whole  # unprefixed output is already sorted


def test_solutions_are_valid_grids():
    values = _values((0, 1, 2))
    for indices in kernels.product_square_indices(values, 3, 33, 2):
        assert sorted(indices) == list(range(9))  # a permutation of all cells
        grid = [values[i] for i in indices]
        rows = [sum(grid[r * 3 + c] for c in range(3)) for r in range(3)]
        cols = [sum(grid[r * 3 + c] for r in range(3)) for c in range(3)]
        diag = sum(grid[i * 3 + i] for i in range(3))
        anti = sum(grid[i * 3 + 2 - i] for i in range(3))
        assert set(rows) == set(cols) == {33}
        assert diag == anti == 33


@pytest.mark.parametrize(
    "kernel", [_kernel_py] + ([_compiled] if _compiled else [])
)
def test_kernel_validation(kernel):
    good = _values((0, 1, 2))
    with pytest.raises(ValueError):
        kernel.product_square_indices(good[:5], 3, 33, 2)
    with pytest.raises(ValueError):
        kernel.product_square_indices(sorted(good, reverse=True), 3, 33, 2)
    with pytest.raises(ValueError):
        kernel.product_square_indices([1] * 9, 3, 33, 2)
    with pytest.raises(ValueError):
        kernel.product_square_indices(good, 3, 33, 5)
    with pytest.raises(ValueError):
        kernel.product_square_indices(good, 3, 33, 2, (1, 1))
    with pytest.raises(ValueError):
        kernel.product_square_indices(good, 3, 33, 2, (99,))


def test_level_streams_nest():
    values = _values((0, 1, 2))
    semi = set(kernels.product_square_indices(values, 3, 33, 1))
    magic = set(kernels.product_square_indices(values, 3, 33, 2))
    pan = set(kernels.product_square_indices(values, 3, 33, 3))
    assert pan <= magic <= semi


def test_pure_kernel_can_be_forced():
    code = "from segmagic import kernels; print(kernels.KERNEL)"
    env = dict(os.environ, SEGMAGIC_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env
    )
    assert out.stdout.strip() == "pure-python (forced)"


@needs_compiled
def test_compiled_kernel_selected_by_default():
    env = {k: v for k, v in os.environ.items() if k != "SEGMAGIC_PURE"}
    code = "from segmagic import kernels; print(kernels.KERNEL)"
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env
    )
    assert out.stdout.strip() == "compiled"
