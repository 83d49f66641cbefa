import pytest

from figplane.field import build_field_tower
from figplane.plane import ProjectivePlane
from figplane.collineation import partition_orbits, point_types_table
from figplane.figueroa import build_fig_plane


@pytest.fixture(scope="session")
def ctx3():
    return build_field_tower(3, 1)


@pytest.fixture(scope="session")
def ctx4():
    return build_field_tower(2, 2)


@pytest.fixture(scope="session")
def ctx5():
    return build_field_tower(5, 1)


@pytest.fixture(scope="session")
def plane3(ctx3):
    return ProjectivePlane(ctx3)


@pytest.fixture(scope="session")
def plane4(ctx4):
    return ProjectivePlane(ctx4)


@pytest.fixture(scope="session")
def plane5(ctx5):
    return ProjectivePlane(ctx5)


@pytest.fixture(scope="session")
def types3(plane3):
    return point_types_table(plane3)


@pytest.fixture(scope="session")
def classes3(plane3, types3):
    return partition_orbits(plane3, types3)


@pytest.fixture(scope="session")
def classes4(plane4):
    return partition_orbits(plane4)


@pytest.fixture(scope="session")
def fig3(plane3):
    return build_fig_plane(plane3)


@pytest.fixture(scope="session")
def fig4(plane4):
    return build_fig_plane(plane4)
