"""
Pytest configuration and fixtures
"""
import sys
from pathlib import Path

import pytest

# Make the package importable without installation
sys.path.insert(0, str(Path(__file__).parent.parent))

from multibrot.config import Config
from multibrot.models import IterationBudget

# alpha(d), beta(d), gamma(d) correctly rounded to nine decimals for 2 <= d <= 12.
# The commonly quoted table is one unit high or low in the last digit for alpha(8)
# and gamma(5), gamma(7), gamma(8), gamma(12); see LAST_DIGIT_OFF.
TABLE_GOLDEN = {
    2: (0.250000000, 2.000000000, 1.100917369),
    3: (0.384900179, 1.414213562, 1.088662108),
    4: (0.472470394, 1.259921050, 1.078336651),
    5: (0.534992244, 1.189207115, 1.069984488),
    6: (0.582355932, 1.148698355, 1.063192242),
    7: (0.619731451, 1.122462048, 1.057591280),
    8: (0.650122501, 1.104089514, 1.052904316),
    9: (0.675409498, 1.090507733, 1.048928539),
    10: (0.696837314, 1.080059739, 1.045514971),
    11: (0.715266766, 1.071773463, 1.042552690),
    12: (0.731314279, 1.065041089, 1.039957792),
}

# (degree, column, commonly quoted value) for the entries whose last digit differs
LAST_DIGIT_OFF = [
    (8, 0, 0.650122502),
    (5, 2, 1.069984489),
    (7, 2, 1.057591279),
    (8, 2, 1.052904317),
    (12, 2, 1.039957793),
]


@pytest.fixture
def table_golden():
    return TABLE_GOLDEN


@pytest.fixture
def config():
    return Config()


@pytest.fixture
def budget():
    """The default scan budget of 10**5 iterations."""
    return IterationBudget(max_iters=100_000)


@pytest.fixture
def small_budget():
    return IterationBudget(max_iters=1_000)
