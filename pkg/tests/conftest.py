import pytest

from sapprox import build_space, build_belief_structure


@pytest.fixture
def ex1():
    return build_space(["u1", "u2"], ["a", "b"], {"u1": ["a"], "u2": ["a", "b"]}, "subseteq")


@pytest.fixture
def ex2():
    return build_space(["v"], ["a", "b", "c"], {"v": ["a"]}, {"kind": "card_threshold", "k": 2})


@pytest.fixture
def ex1_trivial():
    """EX1 plus an element with an empty image, which every X accepts."""
    return build_space(["u1", "u2", "u3"], ["a", "b"], {"u1": ["a"], "u2": ["a", "b"], "u3": []}, "subseteq")


@pytest.fixture
def b1():
    return build_belief_structure(["a", "b"], [(["a"], "1/2"), (["a", "b"], "1/2")])


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
