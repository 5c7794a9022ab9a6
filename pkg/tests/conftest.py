import re
from importlib import resources

import pytest

# First 48 terms as listed in the sequence itself (levels 0 through 7
# plus the start of level 8); the independent reference for every
# generator in the package.
FIRST_48 = (
    0, 1, 3, 5, 7, 11, 13, 15, 19, 21, 23, 27, 29, 31,
    39, 43, 45, 47, 51, 53, 55, 59, 61, 63,
    71, 75, 77, 79, 83, 85, 87, 91, 93, 95,
    103, 107, 109, 111, 115, 117, 119, 123, 125, 127,
    143, 151, 155, 157,
)


@pytest.fixture(scope="session")
def appendix_terms() -> tuple[int, ...]:
    """The bundled 500-term core-subsequence fixture."""
    text = (
        resources.files("dycknums")
        .joinpath("data/appendix_core_subsequence.txt")
        .read_text()
    )
    return tuple(int(v) for v in re.findall(r"\d+", text))
