"""Randomized property suites, 200 seeded cases each."""

import pytest

import suites


@pytest.mark.parametrize("name", sorted(suites.ALL_SUITES))
def test_property_suite(name):
    assert suites.ALL_SUITES[name](cases=200) == 200
