"""Shared unit test fixtures."""

import pytest

from qreflect.kit import RunConfig, Toolkit
from qreflect.kit.algebra import polynomial_ring, quantum_plane
from qreflect.kit.automorphism import verify_automorphism
from qreflect.kit.fixtures import skew_square_plane

SKEW_SQUARE = """\
# k<x, y> modulo x^2 = y^2
algebra skew_square
generators x y
relation x^2 - y^2
hilbert 1/(1-t)^2
gldim 2
"""

MYSTIC_AUTO = """\
automorphism g on skew_square
i, 0
0, -i
"""

REFLECTION_AUTO = """\
automorphism s on skew_square
0 1
1 0
"""


@pytest.fixture(name="config")
def _fixture_config():
    yield RunConfig(degree_cutoff=12, normality_cutoff=6)


@pytest.fixture(name="toolkit")
def _fixture_toolkit(config):
    yield Toolkit(config)


@pytest.fixture(name="skew_plane")
def _fixture_skew_plane():
    yield quantum_plane(-1, "skew_plane")


@pytest.fixture(name="skew_square")
def _fixture_skew_square():
    yield skew_square_plane()


@pytest.fixture(name="mystic")
def _fixture_mystic(skew_square):
    yield verify_automorphism(skew_square, [["i", 0], [0, "-i"]], "g")


@pytest.fixture(name="swap")
def _fixture_swap(skew_square):
    yield verify_automorphism(skew_square, [[0, 1], [1, 0]], "s")


@pytest.fixture(name="plane")
def _fixture_plane():
    yield polynomial_ring(["x", "y"], "plane")


@pytest.fixture(name="profile_dir")
def _fixture_profile_dir(tmp_path, mocker):
    mocker.patch(
        "qreflect.kit.config.model.user_config_dir", return_value=str(tmp_path)
    )
    yield tmp_path


@pytest.fixture(name="skew_files")
def _fixture_skew_files(tmp_path):
    algebra = tmp_path / "skew_square.alg"
    algebra.write_text(SKEW_SQUARE, encoding="utf-8")
    mystic = tmp_path / "mystic.auto"
    mystic.write_text(MYSTIC_AUTO, encoding="utf-8")
    reflection = tmp_path / "reflection.auto"
    reflection.write_text(REFLECTION_AUTO, encoding="utf-8")
    yield {"algebra": algebra, "mystic": mystic, "reflection": reflection}
