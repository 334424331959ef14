import json

import pytest

from monoidquiver import Monoid, MonoidError, families


def test_families_listed():
    names = families()
    assert "mab" in names and "hecke0" in names


def test_singular_square_quiver_is_a3():
    m = Monoid.family("mab", ["2", "2"])
    assert m.n == 6
    q = m.quiver(check=True)
    assert len(q["vertices"]) == 3
    arrows = q["arrows"]
    assert arrows[0][2] == 1
    assert arrows[1][0] == 1
    assert sum(sum(row) for row in arrows) == 2


def test_classify_flags():
    m = Monoid.family("mab", ["2", "2"])
    flags = m.classify()
    assert flags["band"] and flags["regular_band"]
    assert not flags["left_regular_band"]
    h = Monoid.family("hecke0", ["2"])
    assert h.classify()["j_trivial"]


def test_cartan_two_chain_identity():
    m = Monoid.family("mono", ["1", "1"])
    assert m.cartan() == [[1, 0], [0, 1]]


def test_projective_dimensions_partition():
    m = Monoid.family("lrb", ["3"])
    dims = m.projective_dimensions()
    assert sum(dims) == m.n


def test_oracle_agreement():
    m = Monoid.family("E", ["3"])
    assert m.oracle_check()


def test_json_roundtrip():
    m = Monoid.family("freeband", ["2"])
    data = json.loads(m.to_json())
    assert data["n"] == 7
    m2 = Monoid.from_json(m.to_json())
    assert m2.table() == m.table()


def test_table_constructor_and_errors():
    m = Monoid([[0, 1], [1, 1]])
    assert m.n == 2
    with pytest.raises(MonoidError):
        Monoid([[0, 0], [1, 1]])  # left-zero semigroup has no identity
    with pytest.raises(MonoidError):
        Monoid([[0, 1, 2], [1, 2, 1], [2, 0, 0]])  # not associative


def test_dg_example_loops():
    m = Monoid.family("dgconj", ["z3"])
    q = m.quiver()
    arrows = q["arrows"]
    n = len(q["vertices"])
    total = sum(sum(row) for row in arrows)
    loops = sum(arrows[i][i] for i in range(n))
    assert total == loops == 3
