import pytest

TEST_DISCS = (-3, -4, -7, -8, -11, -15, -20, -23, -24, -35, -40, -47)


@pytest.fixture(params=TEST_DISCS, ids=lambda D: f"D{D}")
def D(request):
    return request.param
