import pytest

from hopfcross.crossed import build_partial_crossed
from hopfcross.fields import Field
from hopfcross.fixtures import c3_partial
from hopfcross.globalize import globalize_group_partial


@pytest.fixture(scope="session")
def qq():
    return Field.rationals()


@pytest.fixture()
def c3():
    return c3_partial()


@pytest.fixture()
def c3_crossed(c3):
    return build_partial_crossed(c3)


# built once: globalization plus its verification inputs are immutable
@pytest.fixture(scope="session")
def c3_env():
    return globalize_group_partial(c3_partial())
