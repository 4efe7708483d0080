"""Exact convex geometry: H-polyhedra, affine flats, certified intersection.

The universal carrier is the H-representation

    P = {x in R^d : N x <= c, E x = f}

with rational data; lower-dimensional sets (segments, polygon facets,
hyperplanes) carry explicit equality rows.  Constraint rows are normalized to
coprime integer coefficients on construction, which keeps downstream LP
tableaus small.

Vertex-list inputs are converted on ingestion by `polytope_from_vertices`:
the affine hull is computed exactly, the facet system is enumerated inside a
rational chart of the hull, and halfspaces are pulled back to ambient
coordinates.  That one routine covers segments, polygons, and the small
simplicial shapes (d <= 4) the constructions need.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import DimensionError, InputError, TheoremViolationError
from .lp import (
    Feasible,
    Infeasible,
    LinearProgram,
    Optimal,
    Unbounded,
    farkas_aggregate,
    lp_solve,
)
from .rationals import (
    ONE,
    ZERO,
    Vec,
    dot,
    is_zero_vec,
    normalize_row,
    nullspace,
    rank,
    rat,
    solve_linear,
    vadd,
    vec,
    vsub,
)


@dataclass(frozen=True)
class Point:
    coords: Vec

    @property
    def dim(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class Halfspace:
    """{x : normal . x <= offset}; normal != 0, stored with coprime integers."""

    normal: Vec
    offset: object

    def __post_init__(self):
        n = tuple(rat(v) for v in self.normal)
        if is_zero_vec(n):
            raise InputError("halfspace normal must be nonzero")
        n, c = normalize_row(n, rat(self.offset))
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", c)

    def contains(self, x: Sequence) -> bool:
        return dot(self.normal, x) <= self.offset


@dataclass(frozen=True)
class Hyperplane:
    """{x : normal . x = offset}; sign-canonical so equal sets compare equal."""

    normal: Vec
    offset: object

    def __post_init__(self):
        n = tuple(rat(v) for v in self.normal)
        if is_zero_vec(n):
            raise InputError("hyperplane normal must be nonzero")
        n, c = normalize_row(n, rat(self.offset))
        lead = next(v for v in n if v)
        if lead < 0:
            n = tuple(-v for v in n)
            c = -c
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", c)

    def contains(self, x: Sequence) -> bool:
        return dot(self.normal, x) == self.offset


@dataclass(frozen=True)
class Polyhedron:
    dim: int
    inequalities: tuple = ()
    equalities: tuple = ()
    # vertex list remembered from a V-representation ingestion; audit only,
    # ignored for equality so H-equal polyhedra compare equal
    vertices_hint: Optional[tuple] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.dim < 0:
            raise DimensionError("negative dimension")
        for h in self.inequalities:
            if len(h.normal) != self.dim:
                raise DimensionError("inequality width mismatch")
        for h in self.equalities:
            if len(h.normal) != self.dim:
                raise DimensionError("equality width mismatch")
        object.__setattr__(self, "inequalities", tuple(self.inequalities))
        object.__setattr__(self, "equalities", tuple(self.equalities))

    # -- constructors --------------------------------------------------------

    @classmethod
    def whole_space(cls, dim: int) -> "Polyhedron":
        return cls(dim)

    @classmethod
    def box(cls, lower: Sequence, upper: Sequence) -> "Polyhedron":
        lo, hi = vec(lower), vec(upper)
        if len(lo) != len(hi):
            raise DimensionError("box corner widths differ")
        d = len(lo)
        ineqs = []
        for i in range(d):
            e = tuple(ONE if j == i else ZERO for j in range(d))
            ineqs.append(Halfspace(e, hi[i]))
            ineqs.append(Halfspace(tuple(-v for v in e), -lo[i]))
        return cls(d, tuple(ineqs))

    # -- basic queries ---------------------------------------------------------

    def contains(self, x) -> bool:
        coords = x.coords if isinstance(x, Point) else x
        if len(coords) != self.dim:
            raise DimensionError("point/polyhedron dimension mismatch")
        return all(h.contains(coords) for h in self.inequalities) and all(
            h.contains(coords) for h in self.equalities
        )

    def feasibility_lp(self, objective=None, maximize=True) -> LinearProgram:
        leq = tuple((h.normal, h.offset) for h in self.inequalities)
        eq = tuple((h.normal, h.offset) for h in self.equalities)
        return LinearProgram(self.dim, leq=leq, eq=eq, objective=objective, maximize=maximize)

    def feasible_point(self) -> Optional[Vec]:
        out = lp_solve(self.feasibility_lp())
        return out.point if isinstance(out, Feasible) else None

    def is_empty(self) -> bool:
        return self.feasible_point() is None

    # -- derived polyhedra -----------------------------------------------------

    def intersected(self, other: "Polyhedron") -> "Polyhedron":
        if other.dim != self.dim:
            raise DimensionError("intersection of different ambient dimensions")
        return Polyhedron(
            self.dim,
            self.inequalities + other.inequalities,
            self.equalities + other.equalities,
        )

    def with_rows(self, ineqs: Iterable = (), eqs: Iterable = ()) -> "Polyhedron":
        return Polyhedron(
            self.dim, self.inequalities + tuple(ineqs), self.equalities + tuple(eqs)
        )

    def translated(self, t: Sequence) -> "Polyhedron":
        tv = vec(t)
        ineqs = tuple(
            Halfspace(h.normal, h.offset + dot(h.normal, tv)) for h in self.inequalities
        )
        eqs = tuple(
            Hyperplane(h.normal, h.offset + dot(h.normal, tv)) for h in self.equalities
        )
        hint = None
        if self.vertices_hint is not None:
            hint = tuple(vadd(v, tv) for v in self.vertices_hint)
        return Polyhedron(self.dim, ineqs, eqs, vertices_hint=hint)


@dataclass(frozen=True)
class AffineFlat:
    """base + span(directions); 0 <= k < ambient dim, directions independent."""

    dim: int
    base: Vec
    directions: tuple = ()

    def __post_init__(self):
        base = vec(self.base)
        dirs = tuple(vec(d) for d in self.directions)
        if len(base) != self.dim or any(len(d) != self.dim for d in dirs):
            raise DimensionError("flat data width mismatch")
        if not (0 <= len(dirs) < self.dim):
            raise InputError("flat dimension k must satisfy 0 <= k < dim")
        if dirs and rank(dirs) != len(dirs):
            raise InputError("flat directions must be linearly independent")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "directions", dirs)

    @property
    def k(self) -> int:
        return len(self.directions)

    @classmethod
    def line(cls, base: Sequence, direction: Sequence) -> "AffineFlat":
        return cls(len(tuple(base)), tuple(base), (tuple(direction),))

    def point_at(self, params: Sequence) -> Vec:
        x = list(self.base)
        for t, d in zip(params, self.directions):
            if t:
                for i, di in enumerate(d):
                    if di:
                        x[i] += t * di
        return tuple(x)


# ---------------------------------------------------------------------------
# certified joint intersection


@dataclass(frozen=True)
class FarkasEntry:
    set_index: int
    kind: str  # "ineq" or "eq"
    row_index: int
    multiplier: object


@dataclass(frozen=True)
class IntersectionCertificate:
    point: Optional[Point]
    farkas: tuple = ()

    @property
    def feasible(self) -> bool:
        return self.point is not None


def joint_lp(sets: Sequence[Polyhedron], objective=None, maximize=True):
    """LP for the intersection of `sets` plus row provenance lists."""
    if not sets:
        raise InputError("need at least one polyhedron")
    d = sets[0].dim
    if any(s.dim != d for s in sets):
        raise DimensionError("mixed ambient dimensions")
    leq, eq, prov_leq, prov_eq = [], [], [], []
    for si, s in enumerate(sets):
        for ri, h in enumerate(s.inequalities):
            leq.append((h.normal, h.offset))
            prov_leq.append((si, ri))
        for ri, h in enumerate(s.equalities):
            eq.append((h.normal, h.offset))
            prov_eq.append((si, ri))
    lp = LinearProgram(d, leq=tuple(leq), eq=tuple(eq), objective=objective, maximize=maximize)
    return lp, prov_leq, prov_eq


def polyhedra_intersect(sets: Sequence[Polyhedron]) -> IntersectionCertificate:
    """Decide whether the sets share a point; certify either way.

    Feasible: returns a common point (verified against every input row).
    Infeasible: returns Farkas entries tagged with (set, row) provenance whose
    aggregate is 0 . x <= c with c < 0 (or 0 . x = c, c != 0 via equality rows).
    """
    lp, prov_leq, prov_eq = joint_lp(sets)
    out = lp_solve(lp)
    if isinstance(out, Feasible):
        pt = Point(out.point)
        if not all(s.contains(out.point) for s in sets):
            raise TheoremViolationError("intersection point fails membership")
        return IntersectionCertificate(pt)
    if not isinstance(out, Infeasible):
        raise TheoremViolationError(f"unexpected LP outcome {type(out).__name__}")
    entries = []
    for mult, (si, ri) in zip(out.leq_multipliers, prov_leq):
        if mult:
            entries.append(FarkasEntry(si, "ineq", ri, mult))
    for mult, (si, ri) in zip(out.eq_multipliers, prov_eq):
        if mult:
            entries.append(FarkasEntry(si, "eq", ri, mult))
    cert = IntersectionCertificate(None, tuple(entries))
    if not verify_farkas_entries(sets, cert.farkas):
        raise TheoremViolationError("grouped Farkas certificate failed verification")
    return cert


def verify_farkas_entries(sets: Sequence[Polyhedron], entries: Sequence[FarkasEntry]) -> bool:
    """Exact check that tagged multipliers aggregate to an absurd constraint."""
    if not entries:
        return False
    d = sets[0].dim
    functional = [ZERO] * d
    constant = ZERO
    eq_support = False
    for e in entries:
        if e.kind == "ineq":
            if e.multiplier < 0:
                return False
            row = sets[e.set_index].inequalities[e.row_index]
        else:
            eq_support = True
            row = sets[e.set_index].equalities[e.row_index]
        for i, a in enumerate(row.normal):
            if a:
                functional[i] += e.multiplier * a
        constant += e.multiplier * row.offset
    if not is_zero_vec(functional):
        return False
    if constant < 0:
        return True
    # pure-equality contradictions may aggregate to 0 = c with c != 0
    return eq_support and constant != 0 and all(e.kind == "eq" for e in entries)


# ---------------------------------------------------------------------------
# flats vs polyhedra


def _flat_rows(flat: AffineFlat, poly: Polyhedron):
    """Constraint rows of `poly` pulled back to the flat's parameters."""
    leq, eq = [], []
    for h in poly.inequalities:
        coeffs = tuple(dot(h.normal, dvec) for dvec in flat.directions)
        leq.append((coeffs, h.offset - dot(h.normal, flat.base)))
    for h in poly.equalities:
        coeffs = tuple(dot(h.normal, dvec) for dvec in flat.directions)
        eq.append((coeffs, h.offset - dot(h.normal, flat.base)))
    return leq, eq


def flat_crosses(flat: AffineFlat, poly: Polyhedron) -> bool:
    """Exact decision of flat-meets-set in the flat's k parameters.

    k = 0 degenerates to point membership; k = 1 is solved by exact interval
    propagation (the one-variable LP spelled out); k >= 2 goes to the simplex.
    """
    if flat.dim != poly.dim:
        raise DimensionError("flat/polyhedron dimension mismatch")
    if flat.k == 0:
        return poly.contains(flat.base)
    if flat.k == 1:
        return line_parameter_interval(flat, poly) is not None
    leq, eq = _flat_rows(flat, poly)
    lp = LinearProgram(flat.k, leq=tuple(leq), eq=tuple(eq))
    return isinstance(lp_solve(lp), Feasible)


def line_parameter_interval(flat: AffineFlat, poly: Polyhedron):
    """Parameter range {t : base + t*dir in poly} as (lo, hi), None bounds for
    infinite ends; returns None when the line misses the set."""
    if flat.k != 1:
        raise InputError("parameter interval is defined for lines (k = 1)")
    leq, eq = _flat_rows(flat, poly)
    lo, hi = None, None  # None = unbounded on that side
    for coeffs, b in leq + [(c, r) for c, r in eq] + [
        (tuple(-c for c in cs), -r) for cs, r in eq
    ]:
        a = coeffs[0]
        if a == 0:
            if b < 0:
                return None
        elif a > 0:
            v = b / a
            if hi is None or v < hi:
                hi = v
        else:
            v = b / a
            if lo is None or v > lo:
                lo = v
    if lo is not None and hi is not None and lo > hi:
        return None
    return (lo, hi)


def hyperplane_crosses(h: Hyperplane, poly: Polyhedron) -> bool:
    """Exact decision of hyperplane-meets-set (feasibility with h adjoined)."""
    return poly.with_rows(eqs=(h,)).feasible_point() is not None


def hyperplane_to_flat(h: Hyperplane) -> AffineFlat:
    d = len(h.normal)
    base = solve_linear([list(h.normal)], [h.offset])
    dirs = nullspace([h.normal], d)
    return AffineFlat(d, base, tuple(dirs))


def line_through(p: Sequence, q: Sequence) -> AffineFlat:
    """Canonical line through two distinct points (stable dedupe key)."""
    p, q = vec(p), vec(q)
    direction = vsub(q, p)
    if is_zero_vec(direction):
        raise InputError("line through coincident points")
    direction, _ = normalize_row(direction, ZERO)
    lead = next(v for v in direction if v)
    if lead < 0:
        direction = tuple(-v for v in direction)
    t = dot(p, direction) / dot(direction, direction)
    base = vsub(p, tuple(t * v for v in direction))
    return AffineFlat(len(p), base, (direction,))


# ---------------------------------------------------------------------------
# V-representation ingestion and vertex enumeration


def affine_hull(points: Sequence[Vec]):
    """(base, basis, hull_equalities) of the affine hull of the points."""
    base = points[0]
    d = len(base)
    basis: list[Vec] = []
    for p in points[1:]:
        diff = vsub(p, base)
        if is_zero_vec(diff):
            continue
        if rank(basis + [diff]) > len(basis):
            basis.append(diff)
    normals = nullspace(basis, d) if len(basis) < d else []
    eqs = tuple(Hyperplane(n, dot(n, base)) for n in normals)
    return base, basis, eqs


def _chart_coords(base: Vec, basis: Sequence[Vec], p: Vec) -> Vec:
    matrix = [[b[i] for b in basis] for i in range(len(base))]
    u = solve_linear(matrix, vsub(p, base))
    if u is None:
        raise InputError("point outside the affine hull chart")
    return u


def _full_dim_facets(points: Sequence[Vec], r: int):
    """Supporting halfspaces of conv(points) spanned by point subsets in R^r."""
    facets = {}
    for subset in itertools.combinations(range(len(points)), r):
        pts = [points[i] for i in subset]
        diffs = [vsub(p, pts[0]) for p in pts[1:]]
        ns = nullspace(diffs, r)
        if len(ns) != 1:
            continue  # subset does not span a hyperplane
        normal = ns[0]
        c = dot(normal, pts[0])
        lo = hi = True
        for p in points:
            v = dot(normal, p)
            if v > c:
                hi = False
            elif v < c:
                lo = False
            if not lo and not hi:
                break
        if hi:
            h = Halfspace(normal, c)
            facets[(h.normal, h.offset)] = h
        if lo:
            h = Halfspace(tuple(-v for v in normal), -c)
            facets[(h.normal, h.offset)] = h
    return list(facets.values())


def polytope_from_vertices(dim: int, vertices: Sequence[Sequence]) -> Polyhedron:
    """Exact H-representation of a convex hull given by its vertex list.

    Works in any dimension the toolkit actually uses (hull chart + supporting
    hyperplane enumeration); intended for segments, planar polygons, and
    simplicial shapes with at most a handful of vertices.
    """
    pts = [vec(v) for v in vertices]
    if not pts:
        raise InputError("vertex list is empty")
    if any(len(p) != dim for p in pts):
        raise DimensionError("vertex width mismatch")
    uniq: list[Vec] = []
    for p in pts:
        if p not in uniq:
            uniq.append(p)
    base, basis, eqs = affine_hull(uniq)
    r = len(basis)
    if r == 0:
        return Polyhedron(dim, (), eqs, vertices_hint=tuple(uniq))
    chart_pts = [_chart_coords(base, basis, p) for p in uniq]
    chart_facets = _full_dim_facets(chart_pts, r)
    ineqs = []
    for h in chart_facets:
        matrix = [list(b) for b in basis]
        n = solve_linear(matrix, h.normal)
        if n is None:  # cannot happen: basis rows are independent
            raise TheoremViolationError("facet pullback failed")
        ineqs.append(Halfspace(n, h.offset + dot(n, base)))
    hull_vertices = []
    for p, u in zip(uniq, chart_pts):
        active = [h.normal for h in chart_facets if dot(h.normal, u) == h.offset]
        if rank(active) == r:
            hull_vertices.append(p)
    return Polyhedron(dim, tuple(ineqs), eqs, vertices_hint=tuple(hull_vertices))


def vertices_of(poly: Polyhedron) -> list[Vec]:
    """All vertices of a (possibly lower-dimensional) bounded polyhedron.

    Enumerates r-subsets of inequality rows inside a rational chart of the
    explicit-equality hull; desk scale only.  Unbounded polyhedra simply
    return whatever vertices exist (possibly none).
    """
    if poly.vertices_hint is not None:
        return list(poly.vertices_hint)
    d = poly.dim
    if poly.equalities:
        normals = [list(h.normal) for h in poly.equalities]
        offsets = [h.offset for h in poly.equalities]
        base = solve_linear(normals, offsets)
        if base is None:
            return []
        basis = nullspace([h.normal for h in poly.equalities], d)
    else:
        base = tuple(ZERO for _ in range(d))
        basis = [tuple(ONE if j == i else ZERO for j in range(d)) for i in range(d)]
    r = len(basis)
    if r == 0:
        return [base] if poly.contains(base) else []
    rows = []
    for h in poly.inequalities:
        coeffs = tuple(dot(h.normal, b) for b in basis)
        rows.append((coeffs, h.offset - dot(h.normal, base)))
    found: list[Vec] = []
    for subset in itertools.combinations(range(len(rows)), r):
        mat = [list(rows[i][0]) for i in subset]
        if rank(mat) != r:
            continue
        u = solve_linear(mat, [rows[i][1] for i in subset])
        if u is None:
            continue
        if all(dot(c, u) <= b for c, b in rows):
            x = base
            for t, b in zip(u, basis):
                if t:
                    x = vadd(x, tuple(t * v for v in b))
            if x not in found:
                found.append(x)
    return found
