from pathlib import Path

import pytest

from realtrop import KPoly, PointSetK, RealTropPoly

DATA = Path(__file__).parent / "data"


def load_trop(name: str) -> RealTropPoly:
    return RealTropPoly.parse((DATA / name).read_text())


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def quartic() -> RealTropPoly:
    return load_trop("quartic.trop")


@pytest.fixture
def cubic() -> RealTropPoly:
    return load_trop("cubic.trop")


@pytest.fixture
def conic() -> RealTropPoly:
    return load_trop("conic.trop")


@pytest.fixture
def line() -> RealTropPoly:
    return load_trop("line.trop")


@pytest.fixture
def five_points() -> PointSetK:
    return PointSetK.parse((DATA / "points.txt").read_text())


@pytest.fixture
def cubic_lift() -> KPoly:
    """A lift of the cubic with a singular point at (1, t)."""
    return KPoly.parse(
        """
        3 0 : 2
        2 1 : t^2 + t - 1
        1 2 : -2*t - 2
        0 3 : 1
        2 0 : 2
        1 1 : 2
        0 2 : 2
        1 0 : -10
        0 1 : -t - 1
        0 0 : 6
        """
    )
