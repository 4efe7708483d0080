"""Exact generators for the lower-bound families and their verifiers.

Three constructions drive the transversal lower bounds.  The axis family
puts n parallel hyperplanes orthogonal to each coordinate axis into d
classes and adds the whole space as class d+1: rainbow selections always
meet and one diagonal line crosses every member, yet piercing any single
class takes n points.  The planar family nests m = 2f triangles in a
frame triangle so that every two meet but no three share a point, then
lays 3m pairwise disjoint segments along the frame's sides, each meeting
every triangle.  Its d-dimensional analogue mounts the same triangle
scheme on the 2-faces tau_i = conv(v_i, v_{i+1}, v_{i+2}) of a simplex,
cones each little triangle with the d - 2 opposite vertices, shrinks
everything away from the (d-2)-faces, and finishes with m parallel copies
of each shrunk facet.  Colorful intersections survive, but a line crosses
at most two facet interiors, so ceil((d+1)/2) lines are needed to cross
every member of every class.

Magnitudes the construction leaves free (how far to shrink, how far to
slide the copies) are pinned by searching dyadic steps 1/2**t and taking
the first value under which every claimed property verifies exactly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .colorful import ColoredFamily, check_ch
from .errors import GenerationError, InputError, TheoremViolationError
from .geometry import (
    AffineFlat,
    Halfspace,
    Hyperplane,
    Polyhedron,
    line_through,
    polyhedra_intersect,
    polytope_from_vertices,
)
from .lp import LinearProgram, Optimal, lp_solve
from .rationals import ONE, ZERO, dot, rat, vadd, vscale, vsub

_MAX_STEP_EXPONENT = 48


# -- axis-parallel hyperplane family -----------------------------------------


def generate_figure1(d: int, n: int) -> ColoredFamily:
    """d classes of n parallel hyperplanes plus the whole space as class d+1.

    Class i consists of the hyperplanes x_i = 1, ..., x_i = n.  Every
    rainbow selection meets (pick the prescribed coordinates and anything
    for the rest), the diagonal line t * (1, ..., 1) crosses every set, and
    piercing class i alone takes n points since its members are pairwise
    disjoint.
    """
    if d < 2:
        raise InputError("ambient dimension must be at least 2")
    if n < 1:
        raise InputError("need at least one hyperplane per class")
    classes = []
    for axis in range(d):
        normal = tuple(ONE if j == axis else ZERO for j in range(d))
        classes.append(
            tuple(
                Polyhedron(d, (), (Hyperplane(normal, rat(k)),))
                for k in range(1, n + 1)
            )
        )
    classes.append((Polyhedron.whole_space(d),))
    return ColoredFamily(d, tuple(classes))


# -- shared triangle scheme ---------------------------------------------------


def _scheme_triangle(mu, theta) -> Polyhedron:
    """Scheme triangle in the reference frame conv((0,0), (1,0), (1/2,1))."""
    half = rat(1, 2)
    verts = [(mu * half, mu), (ONE - mu * half, mu), (theta, ZERO)]
    return polytope_from_vertices(2, verts)


def _min_ordinate(a: Polyhedron, b: Polyhedron):
    """Exact minimum y over a nonempty planar intersection."""
    out = lp_solve(a.intersected(b).feasibility_lp((ZERO, ONE), maximize=False))
    if not isinstance(out, Optimal):
        raise GenerationError("two scheme triangles failed to meet")
    return out.value


def _triangle_scheme(m: int, rng: random.Random) -> list[tuple]:
    """m parameter pairs (mu, theta): horizontal side height and base anchor.

    The first two triangles are seeded; each later one has its horizontal
    side at half the lowest ordinate reached by any pairwise intersection
    so far, which empties every triple while keeping all pairs meeting.
    Base anchors are kept distinct so pairwise intersections stay strictly
    above the base line and the recursion never bottoms out.
    """

    def fresh_theta(used: list) -> object:
        for _ in range(200):
            candidate = rat(rng.randint(1, 63), 64)
            if candidate not in used:
                return candidate
        raise GenerationError("could not draw a fresh base anchor")

    params: list[tuple] = []
    thetas: list = []
    for i in range(m):
        if i < 2:
            mu = rat(rng.randint(16, 48), 64)
        else:
            built = [_scheme_triangle(p, t) for p, t in params]
            lowest = min(
                _min_ordinate(built[j], built[k])
                for j, k in itertools.combinations(range(i), 2)
            )
            if lowest <= 0:
                raise GenerationError("pairwise intersections touched the base")
            mu = lowest * rat(1, 2)
        theta = fresh_theta(thetas)
        thetas.append(theta)
        params.append((mu, theta))
    return params


def _barycentric_vertices(mu, theta) -> list[tuple]:
    """Scheme triangle vertices as weights over a target triangle (a, b, c).

    The first two vertices span the horizontal side (one on side ac, one on
    side bc, both at height mu toward apex c); the third sits on side ab at
    parameter theta.
    """
    return [
        (ONE - mu, ZERO, mu),
        (ZERO, ONE - mu, mu),
        (ONE - theta, theta, ZERO),
    ]


def _map_to_triangle(weights: Sequence[tuple], corners: Sequence[tuple]) -> list:
    mapped = []
    for w in weights:
        point = tuple(ZERO for _ in corners[0])
        for wi, corner in zip(w, corners):
            point = vadd(point, vscale(wi, corner))
        mapped.append(point)
    return mapped


def _meets(a: Polyhedron, b: Polyhedron) -> bool:
    return polyhedra_intersect([a, b]).feasible


# -- planar construction ------------------------------------------------------


@dataclass(frozen=True)
class PlanarConstruction:
    """m = 2f nested triangles plus 3m boundary segments in a frame triangle.

    `triangles` holds the nested triangles in placement order; `segments`
    holds m copies per frame side, ordered side-major (side * m + copy).
    `heights` and `anchors` record each triangle's horizontal-side ordinate
    and base-vertex abscissa; `side_spans` the parameter range each shrunk
    side segment covers; `step` the copy translation step.
    """

    f: int
    m: int
    seed: int
    outer: Polyhedron
    triangles: tuple
    segments: tuple
    heights: tuple
    anchors: tuple
    side_spans: tuple
    step: object

    @property
    def family(self) -> ColoredFamily:
        return ColoredFamily(2, (self.triangles, self.segments))

    def segment_group(self, side: int) -> tuple:
        return self.segments[side * self.m : (side + 1) * self.m]


_FRAME = (
    (rat(0), rat(0)),
    (rat(12), rat(0)),
    (rat(6), rat(12)),
)


def _side_rows(outer: Polyhedron, corners: Sequence[tuple]) -> list[Halfspace]:
    """The frame's inequality row carrying each side, in side order."""
    rows = []
    pairs = [(0, 1), (1, 2), (2, 0)]
    for a, b in pairs:
        row = next(
            h
            for h in outer.inequalities
            if dot(h.normal, corners[a]) == h.offset
            and dot(h.normal, corners[b]) == h.offset
        )
        rows.append(row)
    return rows


def _segment(p: tuple, q: tuple) -> Polyhedron:
    return polytope_from_vertices(2, [p, q])


def _check_planar_segments(
    triangles: Sequence[Polyhedron], segments: Sequence[Polyhedron]
) -> Optional[str]:
    """First violated segment property, or None when all hold."""
    for si, seg in enumerate(segments):
        for ti, tri in enumerate(triangles):
            if not _meets(seg, tri):
                return f"segment {si} misses triangle {ti}"
    for si, sj in itertools.combinations(range(len(segments)), 2):
        if _meets(segments[si], segments[sj]):
            return f"segments {si} and {sj} overlap"
    return None


def generate_planar(f: int, seed: int = 0) -> PlanarConstruction:
    """Recursive planar family: m = 2f triangles and 3m disjoint segments.

    Triangles are placed so each new horizontal side lies strictly below
    every pairwise intersection built so far (ordinates found exactly as
    LP minima).  Each frame side is then shrunk away from its endpoints,
    keeping every triangle's contact point strictly inside, and m inward
    translates of each shrunk side are taken with a dyadic step small
    enough that every copy still meets every triangle and all 3m segments
    stay pairwise disjoint.  Every claimed property is re-verified exactly
    before the construction is returned.
    """
    if f < 1:
        raise InputError("need f >= 1")
    m = 2 * f
    rng = random.Random(f"planar:{f}:{seed}")
    params = _triangle_scheme(m, rng)
    corners = _FRAME
    outer = polytope_from_vertices(2, corners)
    scale = rat(12)
    triangles = []
    for mu, theta in params:
        verts = _map_to_triangle(_barycentric_vertices(mu, theta), corners)
        triangles.append(polytope_from_vertices(2, verts))
    triangles = tuple(triangles)

    for i, j in itertools.combinations(range(m), 2):
        if not _meets(triangles[i], triangles[j]):
            raise GenerationError(f"triangles {i} and {j} fail to meet")
    for i, j, k in itertools.combinations(range(m), 3):
        if polyhedra_intersect([triangles[i], triangles[j], triangles[k]]).feasible:
            raise GenerationError(f"triangles {i}, {j}, {k} share a point")

    # contact parameter of each triangle along every frame side
    contact_params = [
        [theta for _, theta in params],  # base side, vertex (theta, 0)
        [mu for mu, _ in params],  # right side, top-right vertex
        [ONE - mu for mu, _ in params],  # left side, top-left vertex
    ]
    half = rat(1, 2)
    side_rows = _side_rows(outer, corners)
    side_pairs = [(0, 1), (1, 2), (2, 0)]
    spans = []
    shrunk_sides = []
    for side in range(3):
        lo = min(contact_params[side]) * half
        hi = (ONE + max(contact_params[side])) * half
        spans.append((lo, hi))
        p, q = corners[side_pairs[side][0]], corners[side_pairs[side][1]]
        direction = vsub(q, p)
        shrunk_sides.append(
            _segment(vadd(p, vscale(lo, direction)), vadd(p, vscale(hi, direction)))
        )
    inward = [vscale(rat(-1), row.normal) for row in side_rows]

    last_failure = "no translation step attempted"
    for t in range(3, _MAX_STEP_EXPONENT + 1):
        step = rat(1, 2**t)
        segments = tuple(
            shrunk_sides[side].translated(vscale(step * j, inward[side]))
            for side in range(3)
            for j in range(m)
        )
        failure = _check_planar_segments(triangles, segments)
        if failure is None:
            return PlanarConstruction(
                f=f,
                m=m,
                seed=seed,
                outer=outer,
                triangles=triangles,
                segments=segments,
                heights=tuple(mu * scale for mu, _ in params),
                anchors=tuple(theta * scale for _, theta in params),
                side_spans=tuple(spans),
                step=step,
            )
        last_failure = f"{failure} at step 1/2**{t}"
    raise GenerationError(
        f"no segment translation step satisfied all constraints: {last_failure}"
    )


# -- simplex construction -----------------------------------------------------


@dataclass(frozen=True)
class SimplexConstruction:
    """Cone classes over 2-face triangle schemes plus shrunk-facet copies.

    `raw_classes` and `facets` hold the construction before shrinking (the
    relative-interior verifier runs on these); `cone_classes` the shrunk
    cones, `facet_groups` the m parallel copies of each shrunk facet.
    `epsilon` is the shrink offset, `eta` the copy translation step, and
    `triangle_params` the per-face (height, anchor) scheme parameters.
    """

    d: int
    f: int
    m: int
    seed: int
    vertices: tuple
    simplex: Polyhedron
    raw_classes: tuple
    facets: tuple
    cone_classes: tuple
    facet_groups: tuple
    epsilon: object
    eta: object
    triangle_params: tuple

    @property
    def family(self) -> ColoredFamily:
        """The final d-colored family: shrunk cones plus all facet copies."""
        copies = tuple(itertools.chain.from_iterable(self.facet_groups))
        return ColoredFamily(self.d, (*self.cone_classes, copies))

    @property
    def pre_shrink_family(self) -> ColoredFamily:
        return ColoredFamily(self.d, (*self.raw_classes, self.facets))

    @property
    def all_sets(self) -> tuple:
        out = list(itertools.chain.from_iterable(self.cone_classes))
        out.extend(itertools.chain.from_iterable(self.facet_groups))
        return tuple(out)


def _simplex_vertices(d: int) -> list[tuple]:
    verts = [tuple(rat(12) if j == i else ZERO for j in range(d)) for i in range(d)]
    verts.append(tuple(ZERO for _ in range(d)))
    return verts


def _pair_cuts(simplex: Polyhedron, epsilon) -> list[Halfspace]:
    """One cut per facet pair; together they clear every (d-2)-face."""
    cuts = []
    for a, b in itertools.combinations(simplex.inequalities, 2):
        cuts.append(Halfspace(vadd(a.normal, b.normal), a.offset + b.offset - epsilon))
    return cuts


def _inward_normal(facet: Polyhedron, centroid: tuple) -> tuple:
    carrier = facet.equalities[0]
    if dot(carrier.normal, centroid) < carrier.offset:
        return vscale(rat(-1), carrier.normal)
    return tuple(carrier.normal)


def _no_triples(sets: Sequence[Polyhedron]) -> Optional[tuple]:
    for i, j, k in itertools.combinations(range(len(sets)), 3):
        if polyhedra_intersect([sets[i], sets[j], sets[k]]).feasible:
            return (i, j, k)
    return None


def generate_simplex_family(d: int, f: int, seed: int = 0) -> SimplexConstruction:
    """Simplex lower-bound family in R^d, exactly verified before return.

    For each 2-face tau_i = conv(v_i, v_{i+1}, v_{i+2}), i = 1..d-1, a
    triangle scheme of m = 2f triangles is mapped affinely into tau_i and
    each triangle is coned with the d - 2 opposite vertices.  All sets are
    then shrunk away from the (d-2)-faces by adding, for every facet pair,
    the summed halfspace with offset reduced by epsilon; the facet class
    consists of m inward translates of each shrunk facet.  Both dyadic
    magnitudes are the first values under which every rainbow selection
    still meets, no three sets of a cone class share a point, and each
    facet's copies are pairwise disjoint.
    """
    if not 2 <= d <= 4:
        raise InputError("the simplex construction is built for 2 <= d <= 4")
    if f < 1:
        raise InputError("need f >= 1")
    m = 2 * f
    rng = random.Random(f"simplex:{d}:{f}:{seed}")
    verts = _simplex_vertices(d)
    simplex = polytope_from_vertices(d, verts)
    centroid = vscale(
        rat(1, d + 1), tuple(sum(v[j] for v in verts) for j in range(d))
    )

    raw_classes = []
    all_params = []
    for face in range(d - 1):
        face_corners = [verts[face], verts[face + 1], verts[face + 2]]
        apex = [verts[j] for j in range(d + 1) if j not in (face, face + 1, face + 2)]
        params = _triangle_scheme(m, rng)
        all_params.append(tuple(params))
        cones = []
        for mu, theta in params:
            tri = _map_to_triangle(_barycentric_vertices(mu, theta), face_corners)
            cones.append(polytope_from_vertices(d, apex + tri))
        raw_classes.append(tuple(cones))
    raw_classes = tuple(raw_classes)

    facets = tuple(
        polytope_from_vertices(d, [v for j, v in enumerate(verts) if j != skip])
        for skip in range(d + 1)
    )

    pre = check_ch(ColoredFamily(d, (*raw_classes, facets)))
    if not pre.holds:
        raise TheoremViolationError(
            "a rainbow selection of the unshrunk construction is empty: "
            f"{pre.violating_rainbow}"
        )

    epsilon = None
    shrunk_classes: tuple = ()
    shrunk_facets: tuple = ()
    last_failure = "no shrink offset attempted"
    for t in range(1, _MAX_STEP_EXPONENT + 1):
        candidate = rat(1, 2**t)
        cuts = _pair_cuts(simplex, candidate)
        shrunk_classes = tuple(
            tuple(cone.with_rows(ineqs=cuts) for cone in cls) for cls in raw_classes
        )
        shrunk_facets = tuple(facet.with_rows(ineqs=cuts) for facet in facets)
        report = check_ch(ColoredFamily(d, (*shrunk_classes, shrunk_facets)))
        if not report.holds:
            last_failure = (
                f"rainbow selection {report.violating_rainbow} became empty "
                f"at shrink offset 1/2**{t}"
            )
            continue
        triple = next(
            (
                (ci, bad)
                for ci, cls in enumerate(shrunk_classes)
                if (bad := _no_triples(cls)) is not None
            ),
            None,
        )
        if triple is not None:
            last_failure = (
                f"sets {triple[1]} of cone class {triple[0]} still share a point "
                f"at shrink offset 1/2**{t}"
            )
            continue
        epsilon = candidate
        break
    if epsilon is None:
        raise GenerationError(f"shrink search failed: {last_failure}")

    inward = [_inward_normal(facet, centroid) for facet in shrunk_facets]
    eta = None
    facet_groups: tuple = ()
    last_failure = "no copy step attempted"
    for t in range(3, _MAX_STEP_EXPONENT + 1):
        candidate = rat(1, 2**t)
        facet_groups = tuple(
            tuple(
                shrunk_facets[fi].translated(vscale(candidate * j, inward[fi]))
                for j in range(m)
            )
            for fi in range(d + 1)
        )
        copies = tuple(itertools.chain.from_iterable(facet_groups))
        report = check_ch(ColoredFamily(d, (*shrunk_classes, copies)))
        if not report.holds:
            last_failure = (
                f"rainbow selection {report.violating_rainbow} became empty "
                f"at copy step 1/2**{t}"
            )
            continue
        overlap = next(
            (
                (fi, i, j)
                for fi, group in enumerate(facet_groups)
                for i, j in itertools.combinations(range(m), 2)
                if _meets(group[i], group[j])
            ),
            None,
        )
        if overlap is not None:
            last_failure = (
                f"copies {overlap[1]} and {overlap[2]} of facet {overlap[0]} "
                f"overlap at copy step 1/2**{t}"
            )
            continue
        eta = candidate
        break
    if eta is None:
        raise GenerationError(f"facet copy search failed: {last_failure}")

    return SimplexConstruction(
        d=d,
        f=f,
        m=m,
        seed=seed,
        vertices=tuple(verts),
        simplex=simplex,
        raw_classes=raw_classes,
        facets=facets,
        cone_classes=shrunk_classes,
        facet_groups=facet_groups,
        epsilon=epsilon,
        eta=eta,
        triangle_params=tuple(all_params),
    )


# -- relative-interior property -----------------------------------------------


@dataclass(frozen=True)
class RelintEntry:
    """One colorful selection: cone indices per class plus the facet index."""

    selection: tuple
    facet: int
    margin: Optional[object]
    point: Optional[tuple]

    @property
    def ok(self) -> bool:
        return self.margin is not None and self.margin > 0


@dataclass(frozen=True)
class RelintReport:
    dim: int
    entries: tuple

    @property
    def holds(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def failures(self) -> tuple:
        return tuple(e for e in self.entries if not e.ok)


def relint_margin(sets: Sequence[Polyhedron], facet: Polyhedron):
    """Largest slack of a point of the joint intersection inside the facet.

    The point is constrained to the facet's carrier hyperplane and to every
    given set; the margin delta is the common slack in the facet's
    inequality rows (capped at 1) and is maximized.  A positive optimum
    certifies a point of the intersection in the facet's relative interior;
    a nonpositive one, or infeasibility, refutes it.  Returns (margin,
    point) with margin None when the carrier slice is already empty.
    """
    if not facet.equalities:
        raise InputError("facet carries no hyperplane equality")
    d = facet.dim
    leq = []
    eq = []
    for s in sets:
        if s.dim != d:
            raise InputError("selection/facet dimension mismatch")
        for h in s.inequalities:
            leq.append(((*h.normal, ZERO), h.offset))
        for h in s.equalities:
            eq.append(((*h.normal, ZERO), h.offset))
    for h in facet.inequalities:
        leq.append(((*h.normal, ONE), h.offset))
    for h in facet.equalities:
        eq.append(((*h.normal, ZERO), h.offset))
    leq.append(((*(ZERO for _ in range(d)), ONE), ONE))
    objective = (*(ZERO for _ in range(d)), ONE)
    out = lp_solve(LinearProgram(d + 1, tuple(leq), tuple(eq), objective))
    if isinstance(out, Optimal):
        return out.value, tuple(out.point[:d])
    return None, None


def verify_relint_property(construction: SimplexConstruction) -> RelintReport:
    """Sweep of all colorful selections against all facet relative interiors.

    For every choice of one unshrunk cone per class and every facet, the
    joint intersection must reach the facet's relative interior; each entry
    records the exact margin and a witness point.  Any failing entry marks
    a construction bug, never an acceptable outcome.
    """
    entries = []
    index_ranges = [range(len(cls)) for cls in construction.raw_classes]
    for selection in itertools.product(*index_ranges):
        sets = [
            construction.raw_classes[ci][si] for ci, si in enumerate(selection)
        ]
        for fi, facet in enumerate(construction.facets):
            margin, point = relint_margin(sets, facet)
            entries.append(RelintEntry(selection, fi, margin, point))
    return RelintReport(construction.d, tuple(entries))


# -- lines versus facet interiors ---------------------------------------------


@dataclass(frozen=True)
class FacetCrossingReport:
    """Most facet relative interiors of a d-simplex one line can cross."""

    dim: int
    value: int
    lines_checked: int
    witness_line: AffineFlat
    argument: str


_CROSSING_ARGUMENT = (
    "a line meets the boundary of a convex body in at most two points or "
    "boundary segments, and distinct facet relative interiors are disjoint, "
    "so no line crosses more than two of them"
)


def _line_relint_margin(line: AffineFlat, facet: Polyhedron):
    """Max facet-row slack over points of a line on the carrier hyperplane."""
    leq = []
    eq = []
    for h in facet.inequalities:
        leq.append(((dot(h.normal, line.directions[0]), ONE),
                    h.offset - dot(h.normal, line.base)))
    for h in facet.equalities:
        eq.append(((dot(h.normal, line.directions[0]), ZERO),
                   h.offset - dot(h.normal, line.base)))
    leq.append(((ZERO, ONE), ONE))
    out = lp_solve(LinearProgram(2, tuple(leq), tuple(eq), (ZERO, ONE)))
    return out.value if isinstance(out, Optimal) else None


def max_simplex_facets_crossed(d: int) -> FacetCrossingReport:
    """Exact maximum number of facet relative interiors a line crosses.

    Candidate lines run through pairs of interior facet points (centroids
    and centroid-vertex midpoints of distinct facets) and through vertex
    pairs; each is scored by margin LPs against every facet.  The maximum
    is 2 for every 2 <= d <= 4, matching the a-priori convexity argument
    recorded in the report.
    """
    if not 2 <= d <= 4:
        raise InputError("facet crossing bound is computed for 2 <= d <= 4")
    verts = _simplex_vertices(d)
    facets = [
        polytope_from_vertices(d, [v for j, v in enumerate(verts) if j != skip])
        for skip in range(d + 1)
    ]
    half = rat(1, 2)
    facet_points: list[list[tuple]] = []
    for facet in facets:
        fverts = list(facet.vertices_hint)
        center = vscale(
            rat(1, len(fverts)), tuple(sum(v[j] for v in fverts) for j in range(d))
        )
        pts = [center]
        pts.extend(vscale(half, vadd(center, v)) for v in fverts)
        facet_points.append(pts)

    lines: dict = {}

    def add_line(p: tuple, q: tuple) -> None:
        if p == q:
            return
        line = line_through(p, q)
        lines.setdefault((line.base, line.directions), line)

    for fa, fb in itertools.combinations(range(d + 1), 2):
        for p in facet_points[fa]:
            for q in facet_points[fb]:
                add_line(p, q)
    for p, q in itertools.combinations(verts, 2):
        add_line(p, q)

    best = 0
    witness = None
    for line in lines.values():
        crossed = 0
        for facet in facets:
            margin = _line_relint_margin(line, facet)
            if margin is not None and margin > 0:
                crossed += 1
        if crossed > best:
            best = crossed
            witness = line
    if best > 2:
        raise TheoremViolationError(
            f"a line crossed {best} facet interiors of a {d}-simplex"
        )
    if best < 2 or witness is None:
        raise TheoremViolationError(
            "candidate lines failed to reach two facet interiors"
        )
    return FacetCrossingReport(
        dim=d,
        value=best,
        lines_checked=len(lines),
        witness_line=witness,
        argument=_CROSSING_ARGUMENT,
    )
