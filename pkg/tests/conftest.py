import math

import pytest

# first zeros of J_1 and J_{3/2}
J1_ZEROS = (3.8317059702, 7.0155866698)
J32_ZERO = 4.4934094579
BALL2_RADII = tuple(z / (2 * math.pi) for z in J1_ZEROS)
BALL3_RADIUS = J32_ZERO / (2 * math.pi)


@pytest.fixture
def write_points(tmp_path):
    """Write CSV lines to a fresh file and return its path."""
    def _write(lines, name="points.csv"):
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return str(path)
    return _write


@pytest.fixture
def first_ball2_radius():
    return J1_ZEROS[0] / (2 * math.pi)
