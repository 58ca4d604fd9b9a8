import os

import pytest

import lhull

CONFIGS = os.environ.get(
    "LHULL_CONFIG_DIR", os.path.join(os.path.dirname(__file__), "..", "configs")
)


def test_multiply_and_divide():
    z = lhull.Semigroup("kind = positive_cone\nparams = 1\n")
    assert z.multiply("(2)", "(3)") == "(5)"
    assert z.left_divide("(2)", "(5)") == "(3)"
    assert z.left_divide("(5)", "(2)") is None
    ab = lhull.Semigroup("kind = ax_plus_b\n")
    assert ab.multiply("(1,2)", "(3,4)") == "(7,8)"


def test_window_and_ideals():
    n = lhull.load(os.path.join(CONFIGS, "num23.cfg"))
    assert n.window(6) == ["0", "2", "3", "4", "5", "6"]
    assert len(n.ideals(3)) == 19
    assert n.clifford() == "fails"
    assert not n.independent(3)
    assert n.group() == "IntegerLattice(1Z)"


def test_hull_and_filters():
    f = lhull.load(os.path.join(CONFIGS, "free2.cfg"))
    assert f.generators == ["a", "b"]
    assert f.hull(1)[-1] == "0 | empty"
    assert f.filters(1) == [["S"], ["aS"], ["bS"]]
    assert not f.left_reversible()
    with pytest.raises(lhull.UnsupportedOperation):
        f.group()
    z = lhull.Semigroup("kind = positive_cone\nparams = 1\n")
    assert z.hull(1) == ["(-1) | (1)+S", "(0) | S", "(1) | S"]


def test_parse_errors():
    with pytest.raises(lhull.ParseError, match="line 2, field 'params'"):
        lhull.Semigroup("kind = numerical\nparams = 1, 3\n")
    with pytest.raises(ValueError):
        lhull.Semigroup("kind = torus\n")


def test_run_matches_cli_contract():
    assert "check" in lhull.subcommands()
    z = lhull.load(os.path.join(CONFIGS, "zplus.cfg"))
    status, out, err = z.run("check")
    assert status == 0 and err == ""
    assert out == z.run("check")[1]
    status, _, err = lhull.load(os.path.join(CONFIGS, "free2.cfg")).run("group")
    assert status == 3 and "(a, b)" in err
