"""Exact arithmetic helpers: parsing, row normalization, linear algebra."""

from __future__ import annotations

import pytest

from hellykit.errors import InputError
from hellykit.rationals import (
    dot,
    nullspace,
    normalize_row,
    rank,
    rat,
    rat_str,
    solve_linear,
    vec,
)


def test_rat_parses_integers_fractions_and_decimal_strings():
    assert rat(3) == rat(6, 2)
    assert rat("3/7") * 7 == 3
    assert rat("0.25") == rat(1, 4)
    assert rat("-2/4") == rat(-1, 2)


def test_rat_rejects_junk():
    with pytest.raises(InputError):
        rat("one half")
    with pytest.raises(InputError):
        rat(0.25)


def test_rat_str_round_trip():
    for text in ("0", "5", "-7", "3/7", "-22/7"):
        assert rat_str(rat(text)) == text


def test_normalize_row_gives_coprime_integers():
    coeffs, rhs = normalize_row(vec((rat(2, 3), rat(-4, 3))), rat(2))
    assert coeffs == (rat(1), rat(-2))
    assert rhs == rat(3)


def test_normalize_row_keeps_the_sign():
    coeffs, rhs = normalize_row(vec((rat(0), rat(-2))), rat(-4))
    assert coeffs == (rat(0), rat(-1))
    assert rhs == rat(-2)


def test_rank_and_nullspace():
    rows = [vec((1, 2, 3)), vec((2, 4, 6)), vec((0, 1, 1))]
    assert rank(rows) == 2
    basis = nullspace(rows, 3)
    assert len(basis) == 1
    for row in rows:
        assert dot(row, basis[0]) == 0


def test_solve_linear_exact():
    sol = solve_linear([vec((2, 1)), vec((1, -1))], vec((7, -1)))
    assert sol == (rat(2), rat(3))


def test_solve_linear_inconsistent_returns_none():
    assert solve_linear([vec((1, 1)), vec((2, 2))], vec((1, 3))) is None
