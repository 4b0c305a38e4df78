import matplotlib
import pytest

matplotlib.use("Agg")

from codforge import TextReader  # noqa: E402

# Трёхантенный дизайн [4, 3, 3] максимальной скорости
EQ3_TEXT = """\
z1 z2 z3
-z2* z1* 0
-z3* 0 z1*
0 z3* -z2*
"""

# G_3^2 в виде, полученном процедурой приведения строк
G23_DISPLAY_TEXT = """\
-z3 z2 z1
-z2* -z3* 0
-z1* 0 -z3*
0 z1* -z2*
"""


@pytest.fixture
def eq3():
    return TextReader.parse_text(EQ3_TEXT)


@pytest.fixture
def g23_display():
    return TextReader.parse_text(G23_DISPLAY_TEXT)


@pytest.fixture
def diag_pair():
    """COD diag(z1, z1*): ортогонален, но не первого типа."""
    return TextReader.parse_text("z1 0\n0 z1*\n")


@pytest.fixture
def eq3_path(tmp_path):
    path = tmp_path / "cod433.txt"
    path.write_text(EQ3_TEXT, encoding="utf-8")
    return path
