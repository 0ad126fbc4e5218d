"""Test plugin system."""

import re

import pytest

from qreflect.kit import FixtureSuite, Toolkit
from qreflect.kit.fixtures import RootSumSuite, WorkedExamples

kit_test = pytest.importorskip("qreflect.kit_test", reason="Test plugin not installed.")
ExampleSuite = kit_test.ExampleSuite


def test_builtin_suites_loaded(toolkit: Toolkit):
    """Test the built-in suites are registered."""
    assert isinstance(toolkit.worked_examples, WorkedExamples)
    assert isinstance(toolkit.root_sums, RootSumSuite)
    assert toolkit.root_sums.config is toolkit.config


def test_plugin_present():
    """Test plugin classes are present."""
    assert ExampleSuite.name == "exampleSuite"


def test_plugin_loaded(toolkit: Toolkit):
    """Test plugin classes are loaded."""
    assert isinstance(toolkit.exampleSuite, ExampleSuite)


def test_suite_access(toolkit: Toolkit):
    """Test suite plugin access methods."""
    suite = toolkit.exampleSuite
    name = suite.name
    assert suite == toolkit.suites[name]
    assert suite == toolkit.suites.exampleSuite
    assert suite == toolkit.suites.select(ExampleSuite)
    assert suite == toolkit.suites.select(ExampleSuite, name=name)
    assert suite == toolkit.suites.select(FixtureSuite, name=name)
    assert suite == toolkit.suites.require(ExampleSuite)
    assert suite == toolkit.suites.require(FixtureSuite, name=name)
    assert suite in toolkit.suites.values()
    assert name in toolkit.suites


def test_plugin_suite_runs(toolkit: Toolkit):
    """Test the plugin fixtures pass."""
    report = toolkit.examples(["exampleSuite"])
    assert report.succeeded
    assert [c.name for c in report.suites[0].checks] == ["trivial", "minus_identity"]


class MySuite(FixtureSuite):
    """Dummy suite."""

    name = "my_suite"
    title = "Dynamic Test Suite"

    def checks(self):
        """No fixtures."""
        return []


class MyOtherSuite(MySuite):
    """Dummy suite."""

    title = "Replacement Test Suite"


def test_repr(toolkit: Toolkit):
    """Test string representations."""
    suite = MyOtherSuite(toolkit.config)
    assert str(suite) == "my_suite: Replacement Test Suite"
    assert repr(suite) == "<MyOtherSuite(my_suite)>"
    assert re.search(r"suites=\[worked_examples,root_sums[^\]]*\]", repr(toolkit))
    assert "'root_sums': <RootSumSuite(root_sums)>" in repr(toolkit.suites)


def test_register(toolkit: Toolkit):
    """Test register an additional plugin."""
    my_name = "my_suite"
    with pytest.raises(AttributeError):
        assert toolkit.my_suite
    assert my_name not in toolkit.suites
    assert toolkit.suites.select(MySuite) is None
    assert toolkit.suites.select(FixtureSuite, name=my_name) is None
    with pytest.raises(AttributeError, match="MySuite is not available"):
        toolkit.suites.require(MySuite)
    with pytest.raises(AttributeError, match="FixtureSuite 'my_suite'"):
        toolkit.suites.require(FixtureSuite, name=my_name)

    count = len(toolkit.suites)
    suite = toolkit.register(MySuite)
    assert len(toolkit.suites) == count + 1
    assert isinstance(suite, MySuite)
    assert toolkit.my_suite is suite
    assert toolkit.suites.require(FixtureSuite, name=my_name) is suite
    assert toolkit.examples([my_name]).suites[0].checks == []

    # replace plugin with same name
    other = toolkit.register(MyOtherSuite)
    assert len(toolkit.suites) == count + 1
    assert toolkit.my_suite is other
    assert toolkit.suites.require(MyOtherSuite) is other
    assert "'my_suite': <MyOtherSuite(my_suite)>" in repr(toolkit.suites)


class NotASuite:
    """Dummy suite."""

    name = "my_suite"
    title = "Not a Test Suite"


def test_register_not_a_suite(toolkit: Toolkit):
    """Test invalid registrations."""
    with pytest.warns(match="Invalid plug class"):
        assert toolkit.register(NotASuite) is None  # type: ignore
