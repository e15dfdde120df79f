from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def rationals(span=30, den=9):
    return st.builds(Fraction, st.integers(-span, span), st.integers(1, den))


def nonzero_rationals(span=30, den=9):
    return rationals(span, den).filter(lambda q: q != 0)


@pytest.fixture(scope="session")
def witness():
    from minitwistor.family import WITNESS

    return WITNESS
