"""Extended-range invariants, opt-in via `pytest -m slow`.

These materialize levels up to the structural bound (tens of millions
of terms) and need a couple of GB of memory.
"""

import numpy as np
import pytest

from dycknums.levels import _level_array, _scan_array, level_size

pytestmark = pytest.mark.slow


def test_level_sizes_to_structural_bound():
    for n in range(25, 31):
        assert len(_level_array(n)) == level_size(n), n


def test_scan_equals_structural_to_scan_bound():
    for n in (23, 24):
        assert np.array_equal(_scan_array(n), _level_array(n)), n
