import pytest

from prefdist import ObjectUniverse, parse_preference


@pytest.fixture(scope="session")
def abc():
    return ObjectUniverse(("A", "B", "C"))


@pytest.fixture(scope="session")
def pref(abc):
    """Shorthand parser over the three-object universe."""

    def build(text, universe=abc):
        return parse_preference(text, universe)

    return build
