"""Exact rational arithmetic and small dense linear algebra.

All decision paths in the toolkit run over exact rationals.  The carrier is
gmpy2.mpq when available (noticeably faster) and fractions.Fraction otherwise;
both are reduced-form rationals with positive denominators and identical
semantics for everything used here.  `rat` is the only constructor the rest of
the code base calls.

Vectors are plain tuples of rationals.  The linear algebra is textbook
fraction-free-ish Gaussian elimination; sizes never exceed a few dozen rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError

try:  # pragma: no cover - exercised implicitly by whichever backend is present
    from gmpy2 import mpq as _mpq

    _BACKEND = "gmpy2.mpq"

    def _make(num, den):
        return _mpq(num, den)

except ImportError:  # pragma: no cover
    _BACKEND = "fractions.Fraction"

    def _make(num, den):
        return Fraction(num, den)


RATIONAL_BACKEND = _BACKEND

ZERO = _make(0, 1)
ONE = _make(1, 1)

Vec = tuple  # tuple of rationals; alias for readability in signatures


def rat(value, den=None):
    """Build a rational from int, rational, or string ('p/q' or exact decimal)."""
    if den is not None:
        if den == 0:
            raise InputError("zero denominator")
        return _make(value, den)
    if isinstance(value, str):
        text = value.strip()
        try:
            f = Fraction(text)  # accepts "3", "-3/7", "1.25"
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {value!r}") from exc
        return _make(f.numerator, f.denominator)
    if isinstance(value, float):
        raise InputError("floats are not accepted; pass a string or rational")
    if isinstance(value, int):
        return _make(value, 1)
    num = getattr(value, "numerator", None)
    d = getattr(value, "denominator", None)
    if num is None or d is None:
        raise InputError(f"cannot interpret {value!r} as a rational")
    return _make(num, d)


def rat_str(q) -> str:
    """Serialize as 'p' or 'p/q' (den > 0, reduced)."""
    n, d = q.numerator, q.denominator
    return str(n) if d == 1 else f"{n}/{d}"


def floor_rat(q) -> int:
    return int(q.numerator // q.denominator)


def ceil_rat(q) -> int:
    return int(-((-q.numerator) // q.denominator))


def vec(values: Iterable) -> Vec:
    return tuple(rat(v) for v in values)


def zero_vec(n: int) -> Vec:
    return tuple(ZERO for _ in range(n))


def dot(a: Sequence, b: Sequence):
    acc = ZERO
    for x, y in zip(a, b):
        if x and y:
            acc += x * y
    return acc


def vadd(a: Sequence, b: Sequence) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Sequence, b: Sequence) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a: Sequence) -> Vec:
    return tuple(c * x for x in a)


def is_zero_vec(a: Sequence) -> bool:
    return all(x == 0 for x in a)


def normalize_row(coeffs: Sequence, rhs):
    """Scale (coeffs, rhs) by a positive rational so entries are coprime integers.

    Keeps tableau and constraint entries small; the constraint's solution set is
    unchanged because the factor is positive.
    """
    from math import gcd

    den_lcm = 1
    for q in list(coeffs) + [rhs]:
        d = int(q.denominator)
        den_lcm = den_lcm // gcd(den_lcm, d) * d
    ints = [int(q.numerator) * (den_lcm // int(q.denominator)) for q in coeffs]
    r = int(rhs.numerator) * (den_lcm // int(rhs.denominator))
    g = 0
    for v in ints + [r]:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
        r = r // g
    return tuple(_make(v, 1) for v in ints), _make(r, 1)


# ---------------------------------------------------------------------------
# dense exact linear algebra


def _echelon(rows: list[list]) -> tuple[list[list], list[int]]:
    """Row-reduce in place; returns (reduced rows, pivot column indices)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(vectors: Sequence[Sequence]) -> int:
    rows = [list(v) for v in vectors]
    _, pivots = _echelon(rows)
    return len(pivots)


def nullspace(vectors: Sequence[Sequence], dim: int) -> list[Vec]:
    """Basis of {x : v . x = 0 for every v in vectors}, vectors in R^dim."""
    rows = [list(v) for v in vectors if not is_zero_vec(v)]
    if not rows:
        return [tuple(ONE if j == i else ZERO for j in range(dim)) for i in range(dim)]
    rows, pivots = _echelon(rows)
    rows = rows[: len(pivots)]
    free_cols = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free_cols:
        x = [ZERO] * dim
        x[fc] = ONE
        for rrow, pc in zip(rows, pivots):
            x[pc] = -rrow[fc]
        basis.append(tuple(x))
    return basis


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence):
    """One solution of matrix . x = rhs, or None if inconsistent.

    Free coordinates are set to zero, so the answer is deterministic.
    """
    if not matrix:
        return zero_vec(0)
    ncols = len(matrix[0])
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = _echelon(rows)
    for row in rows:
        if is_zero_vec(row[:ncols]) and row[ncols] != 0:
            return None
    x = [ZERO] * ncols
    for rrow, pc in zip(rows, pivots):
        if pc == ncols:  # pivot in the rhs column: inconsistent
            return None
        x[pc] = rrow[ncols]
    return tuple(x)
