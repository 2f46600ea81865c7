import pytest
from hypothesis import settings, strategies as st

from hyperent.scalars import GaussianRational
from hyperent.tensor import Tensor, ket

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-6, max_value=6)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
gaussians = st.builds(GaussianRational, rationals, rationals)
gaussian_ints = st.builds(GaussianRational, small_ints, small_ints)


def tensors(dims, elements=gaussian_ints):
    size = 1
    for d in dims:
        size *= d
    return st.lists(elements, min_size=size, max_size=size).map(lambda e: Tensor(dims, e))


@pytest.fixture
def ghz3():
    return ket("000", "111")


@pytest.fixture
def w3():
    return ket("001", "010", "100")


@pytest.fixture
def ghz4():
    return ket("0000", "1111")


@pytest.fixture
def w4():
    return ket("0001", "0010", "0100", "1000")
