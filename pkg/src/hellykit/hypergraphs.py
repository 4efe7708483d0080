"""Transversal and matching numbers of desk-scale hypergraphs.

Exact quantities:

    tau     minimum vertex transversal (hitting set), branch and bound;
    tau*    fractional transversal, exact rational LP;
    nu*     fractional matching, exact rational LP (equal to tau* by duality);
    nu_b    maximum b-matching (edge subset using no vertex more than b times).

Every duality report asserts the sandwich nu_b / b <= nu* = tau* <= tau.

The geometric builders turn a family of convex sets into hypergraphs whose
transversals are piercing numbers (vertices = points witnessing maximal
intersecting subfamilies) or flat-cover numbers (vertices = candidate lines
or planes drawn from a finite candidate pool).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .budgets import DEFAULT_BUDGET, SearchBudget
from .errors import InputError, ScaleError, TheoremViolationError
from .geometry import (
    AffineFlat,
    Halfspace,
    Hyperplane,
    Point,
    Polyhedron,
    flat_crosses,
    hyperplane_crosses,
    line_parameter_interval,
    line_through,
    nullspace,
    polyhedra_intersect,
    vertices_of,
)
from .lp import Feasible, LinearProgram, Optimal, lp_solve
from .rationals import ONE, ZERO, ceil_rat, dot, floor_rat, rat, vsub


@dataclass(frozen=True)
class Hypergraph:
    vertex_count: int
    edges: tuple  # tuple of frozensets; repeated edges are meaningful for nu_b
    payload: Optional[tuple] = None  # per-vertex geometric witness, audit only

    def __post_init__(self):
        edges = tuple(frozenset(e) for e in self.edges)
        for e in edges:
            if not e:
                raise InputError("hypergraph edge is empty")
            if any(not (0 <= v < self.vertex_count) for v in e):
                raise InputError("edge vertex out of range")
        object.__setattr__(self, "edges", edges)
        if self.payload is not None and len(self.payload) != self.vertex_count:
            raise InputError("payload length must equal vertex_count")


@dataclass(frozen=True)
class TransversalResult:
    size: int
    witness: tuple  # vertex indices
    exact: bool = True


@dataclass(frozen=True)
class FractionalResult:
    value: object  # rational
    weights: tuple


@dataclass(frozen=True)
class DualityReport:
    b: int
    tau_result: Optional[TransversalResult]
    tau_star_result: FractionalResult
    nu_star_result: FractionalResult
    nu_b_value: int
    sandwich_ok: bool
    scale_note: str = ""


# ---------------------------------------------------------------------------
# exact tau


def _reduce_for_tau(edges: Sequence[frozenset]):
    """Correctness-preserving shrinking of a hitting-set instance.

    Returns (forced_vertices, reduced_edges).  Steps: duplicate and superset
    edges dropped, singleton edges forced, dominated vertices removed (u goes
    if some v lies in every edge containing u).
    """
    forced: set[int] = set()
    current = list(dict.fromkeys(edges))
    changed = True
    while changed:
        changed = False
        current = list(dict.fromkeys(current))
        minimal = []
        for e in current:
            if any(o < e for o in current):
                changed = True
                continue
            minimal.append(e)
        current = minimal
        singletons = [e for e in current if len(e) == 1]
        if singletons:
            changed = True
            for e in singletons:
                forced.update(e)
            current = [e for e in current if not (e & forced)]
            continue
        profiles: dict[int, set[int]] = {}
        for idx, e in enumerate(current):
            for v in e:
                profiles.setdefault(v, set()).add(idx)
        # vertices with identical incidence are interchangeable: keep the
        # smallest id, then test dominance across distinct profiles only
        rep: dict[frozenset, int] = {}
        dropped = set()
        for v in sorted(profiles):
            sig = frozenset(profiles[v])
            if sig in rep:
                dropped.add(v)
            else:
                rep[sig] = v
        sigs = list(rep)
        for a in sigs:
            for b in sigs:
                if a is not b and a < b:
                    dropped.add(rep[a])
                    break
        if dropped:
            changed = True
            current = [frozenset(e - dropped) for e in current]
    return forced, current


def _greedy_cover(edges: list[frozenset]) -> set[int]:
    uncovered = list(edges)
    chosen: set[int] = set()
    while uncovered:
        counts: dict[int, int] = {}
        for e in uncovered:
            for v in e:
                counts[v] = counts.get(v, 0) + 1
        v = min(counts, key=lambda u: (-counts[u], u))
        chosen.add(v)
        uncovered = [e for e in uncovered if v not in e]
    return chosen


def _matching_bound(edge_masks: list[int]) -> int:
    """Greedy disjoint edges: a certified lower bound for the cover size."""
    used = 0
    count = 0
    for m in edge_masks:
        if not (m & used):
            used |= m
            count += 1
    return count


def tau(h: Hypergraph, budget: SearchBudget = DEFAULT_BUDGET) -> TransversalResult:
    """Exact minimum transversal via branch and bound.

    The budget is enforced on the reduced core (see _reduce_for_tau); the
    LP value ceil(tau*) of the core serves as the root pruning bound.
    """
    if len(h.edges) > budget.max_tau_edges:
        raise ScaleError("max_tau_edges", budget.max_tau_edges, len(h.edges))
    if not h.edges:
        return TransversalResult(0, ())
    forced, core = _reduce_for_tau(h.edges)
    if not core:
        witness = tuple(sorted(forced))
        _assert_covers(h, witness)
        return TransversalResult(len(witness), witness)
    verts = sorted({v for e in core for v in e})
    if len(verts) > budget.max_tau_vertices:
        raise ScaleError(
            "max_tau_vertices",
            budget.max_tau_vertices,
            len(verts),
            detail="after reduction",
        )
    core_h = _relabel(core, verts)
    root_lb = ceil_rat(tau_star(core_h).value)
    vmask = [0] * len(verts)
    for ei, e in enumerate(core_h.edges):
        for v in e:
            vmask[v] |= 1 << ei
    edge_vsets = [frozenset(e) for e in core_h.edges]
    all_edges_mask = (1 << len(core_h.edges)) - 1
    greedy = _greedy_cover(list(edge_vsets))
    best_size = len(greedy)
    best_set = set(greedy)
    degree = [bin(m).count("1") for m in vmask]

    def matching_lb(uncovered_mask: int) -> int:
        used: set[int] = set()
        count = 0
        for ei, e in enumerate(edge_vsets):
            if uncovered_mask >> ei & 1 and not (e & used):
                used |= e
                count += 1
        return count

    def dfs(covered: int, chosen: list[int]):
        nonlocal best_size, best_set
        if covered == all_edges_mask:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_set = set(chosen)
            return
        if best_size == root_lb:
            return
        remaining = all_edges_mask & ~covered
        if len(chosen) + matching_lb(remaining) >= best_size:
            return
        # branch on the uncovered edge with fewest options
        pick = None
        for ei, e in enumerate(edge_vsets):
            if remaining >> ei & 1 and (pick is None or len(e) < len(pick)):
                pick = e
                if len(pick) <= 2:
                    break
        for v in sorted(pick, key=lambda u: (-degree[u], u)):
            chosen.append(v)
            dfs(covered | vmask[v], chosen)
            chosen.pop()
            if best_size == root_lb:
                return

    dfs(0, [])
    witness = tuple(sorted(forced | {verts[v] for v in best_set}))
    _assert_covers(h, witness)
    if len(witness) < len(forced) + root_lb:
        raise TheoremViolationError("tau fell below its LP lower bound")
    return TransversalResult(len(witness), witness)


def _relabel(edges: list[frozenset], verts: list[int]) -> Hypergraph:
    index = {v: i for i, v in enumerate(verts)}
    return Hypergraph(len(verts), tuple(frozenset(index[v] for v in e) for e in edges))


def _assert_covers(h: Hypergraph, witness: Sequence[int]) -> None:
    w = set(witness)
    for e in h.edges:
        if not (e & w):
            raise TheoremViolationError("claimed transversal misses an edge")


def tau_greedy(h: Hypergraph) -> TransversalResult:
    """Greedy upper bound, explicitly labeled non-optimal."""
    chosen = _greedy_cover(list(h.edges))
    witness = tuple(sorted(chosen))
    _assert_covers(h, witness)
    return TransversalResult(len(witness), witness, exact=False)


# ---------------------------------------------------------------------------
# fractional quantities


def tau_star(h: Hypergraph) -> FractionalResult:
    if not h.edges:
        raise InputError("tau* needs at least one edge")
    n = h.vertex_count
    rows = []
    for e in h.edges:
        coeffs = tuple(-ONE if v in e else ZERO for v in range(n))
        rows.append((coeffs, -ONE))
    lp = LinearProgram(
        n, leq=tuple(rows), objective=tuple(ONE for _ in range(n)), maximize=False, nonneg=True
    )
    out = lp_solve(lp)
    if not isinstance(out, Optimal):
        raise TheoremViolationError("tau* LP must have an optimum")
    return FractionalResult(out.value, out.point)


def nu_star(h: Hypergraph) -> FractionalResult:
    if not h.edges:
        raise InputError("nu* needs at least one edge")
    m = len(h.edges)
    rows = []
    for v in range(h.vertex_count):
        coeffs = tuple(ONE if v in e else ZERO for e in h.edges)
        rows.append((coeffs, ONE))
    lp = LinearProgram(
        m, leq=tuple(rows), objective=tuple(ONE for _ in range(m)), maximize=True, nonneg=True
    )
    out = lp_solve(lp)
    if not isinstance(out, Optimal):
        raise TheoremViolationError("nu* LP must have an optimum")
    return FractionalResult(out.value, out.point)


def nu_b(h: Hypergraph, b: int) -> int:
    """Maximum number of edges (with multiplicity) loading no vertex more than b."""
    if b < 1:
        raise InputError("b must be a positive integer")
    if not h.edges:
        return 0
    edges = list(h.edges)
    m = len(edges)
    caps = [b] * h.vertex_count
    # greedy start
    best = 0
    for e in edges:
        if all(caps[v] > 0 for v in e):
            for v in e:
                caps[v] -= 1
            best += 1
    ub = floor_rat(rat(b) * nu_star(h).value)
    caps = [b] * h.vertex_count
    best_found = best

    def dfs(i: int, count: int):
        nonlocal best_found
        if count + (m - i) <= best_found or best_found == ub:
            return
        if i == m:
            if count > best_found:
                best_found = count
            return
        e = edges[i]
        if all(caps[v] > 0 for v in e):
            for v in e:
                caps[v] -= 1
            dfs(i + 1, count + 1)
            for v in e:
                caps[v] += 1
        dfs(i + 1, count)

    dfs(0, 0)
    if best_found > ub:
        raise TheoremViolationError("nu_b exceeded its duality upper bound")
    return best_found


def duality_report(h: Hypergraph, b: int = 1) -> DualityReport:
    """tau, tau*, nu*, nu_b with the exact duality sandwich asserted."""
    ts = tau_star(h)
    ns = nu_star(h)
    if ts.value != ns.value:
        raise TheoremViolationError("LP duality violated: tau* != nu*")
    note = ""
    try:
        t = tau(h)
    except ScaleError as exc:
        t = None
        note = str(exc)
    nb = nu_b(h, b)
    ok = rat(nb, b) <= ns.value and (t is None or ts.value <= rat(t.size))
    if not ok:
        raise TheoremViolationError("duality sandwich nu_b/b <= nu* = tau* <= tau failed")
    return DualityReport(b, t, ts, ns, nb, ok, note)


# ---------------------------------------------------------------------------
# geometric builders


def _intersection_feasible(fam: Sequence[Polyhedron], subset: frozenset, cache: dict):
    got = cache.get(subset)
    if got is None:
        got = polyhedra_intersect([fam[i] for i in sorted(subset)])
        cache[subset] = got
    return got


def maximal_intersecting_subfamilies(
    fam: Sequence[Polyhedron], budget: SearchBudget = DEFAULT_BUDGET
):
    """All maximal index sets whose members share a point, with witnesses.

    Bron-Kerbosch style recursion over the hereditary system of intersecting
    subfamilies; feasibility of each extension is an exact LP.
    """
    if len(fam) > budget.max_subfamily_sets:
        raise ScaleError("max_subfamily_sets", budget.max_subfamily_sets, len(fam))
    cache: dict = {}
    singles = [
        i for i in range(len(fam)) if _intersection_feasible(fam, frozenset([i]), cache).feasible
    ]
    if not singles:
        return [], []
    results: list[frozenset] = []

    def feas(s: frozenset) -> bool:
        return _intersection_feasible(fam, s, cache).feasible

    def extend(r: frozenset, p: list[int], x: list[int]):
        if not p and not x:
            results.append(r)
            return
        for idx, v in enumerate(list(p)):
            r2 = r | {v}
            p2 = [w for w in p[idx + 1 :] if feas(r2 | {w})]
            x2 = [w for w in x if feas(r2 | {w})]
            extend(r2, p2, x2)
            x = x + [v]

    extend(frozenset(), singles, [])
    results.sort(key=lambda s: tuple(sorted(s)))
    witnesses = [cache[s].point for s in results]
    return results, witnesses


def build_point_hypergraph(
    fam: Sequence[Polyhedron], budget: SearchBudget = DEFAULT_BUDGET
) -> Hypergraph:
    """Vertices: one witness point per maximal intersecting subfamily.

    Edge e_A collects the vertices whose subfamily contains A, so transversals
    of the hypergraph are exactly piercing sets of the family.
    """
    if not fam:
        raise InputError("empty family")
    subfamilies, witnesses = maximal_intersecting_subfamilies(fam, budget)
    empties = [i for i in range(len(fam)) if not any(i in s for s in subfamilies)]
    if empties:
        raise InputError(f"sets {empties} are empty; they cannot be pierced")
    edges = []
    for i in range(len(fam)):
        edges.append(frozenset(vi for vi, s in enumerate(subfamilies) if i in s))
    return Hypergraph(len(subfamilies), tuple(edges), payload=tuple(witnesses))


def piercing_number(
    fam: Sequence[Polyhedron], budget: SearchBudget = DEFAULT_BUDGET
) -> TransversalResult:
    return tau(build_point_hypergraph(fam, budget), budget)


def transversal_points(h: Hypergraph, result: TransversalResult) -> list[Point]:
    if h.payload is None:
        raise InputError("hypergraph carries no point payload")
    return [h.payload[v] for v in result.witness]


# -- candidate pools for flat covers ----------------------------------------


def _candidate_point_pool(fam: Sequence[Polyhedron]) -> list[tuple]:
    """Vertices of every set; vertex-free sets contribute their own feasible
    point and feasible points of their pairwise intersections (the enrichment
    that recovers diagonal transversals of hyperplane families)."""
    pool: list[tuple] = []

    def add(p):
        if p is not None and p not in pool:
            pool.append(p)

    vert_lists = [vertices_of(s) for s in fam]
    for vl in vert_lists:
        for v in vl:
            add(v)
    for i, s in enumerate(fam):
        if vert_lists[i]:
            continue
        add(s.feasible_point())
        for j, other in enumerate(fam):
            if j == i:
                continue
            cert = polyhedra_intersect([s, other])
            if cert.feasible:
                add(cert.point.coords)
    return pool


def candidate_lines(fam: Sequence[Polyhedron]) -> list[AffineFlat]:
    """Lines through pairs of pool points, plus one fallback per orphan set."""
    if not fam:
        raise InputError("empty family")
    d = fam[0].dim
    pool = _candidate_point_pool(fam)
    lines: dict = {}
    for p, q in itertools.combinations(pool, 2):
        if p == q:
            continue
        line = line_through(p, q)
        lines.setdefault((line.base, line.directions), line)
    out = list(lines.values())
    # fallback: any set crossed by no candidate gets an axis line through it
    for s in fam:
        if any(flat_crosses(line, s) for line in out):
            continue
        base = s.feasible_point()
        if base is None:
            raise InputError("cannot cover an empty set with lines")
        direction = tuple(ONE if i == 0 else ZERO for i in range(d))
        out.append(AffineFlat.line(base, direction))
    return out


def line_cover_number(
    fam: Sequence[Polyhedron], budget: SearchBudget = DEFAULT_BUDGET
) -> TransversalResult:
    """Minimum lines crossing every set, exact over the candidate pool.

    For bounded planar polygon families the pool (lines through vertex pairs)
    is complete, so the value is the true line-cover number; tangency counts
    as crossing because all sets are closed.  In R^3 the value is exact over
    the candidate pool (see the construction verifiers for the a-priori
    lower-bound argument).
    """
    h = build_cover_hypergraph(fam, candidate_lines(fam))
    return tau(h, budget)


def candidate_planes(fam: Sequence[Polyhedron]) -> list[Hyperplane]:
    """Planes through affinely independent pool point triples (ambient R^3)."""
    if not fam:
        raise InputError("empty family")
    if fam[0].dim != 3:
        raise InputError("candidate planes are generated in R^3 only")
    pool = _candidate_point_pool(fam)
    planes: dict = {}
    for a, b, c in itertools.combinations(pool, 3):
        ns = nullspace([vsub(b, a), vsub(c, a)], 3)
        if len(ns) != 1:
            continue
        h = Hyperplane(ns[0], dot(ns[0], a))
        planes.setdefault((h.normal, h.offset), h)
    out = list(planes.values())
    for s in fam:
        if any(hyperplane_crosses(h, s) for h in out):
            continue
        base = s.feasible_point()
        if base is None:
            raise InputError("cannot cover an empty set with planes")
        out.append(Hyperplane((ONE, ZERO, ZERO), base[0]))
    return out


def plane_cover_number(
    fam: Sequence[Polyhedron], budget: SearchBudget = DEFAULT_BUDGET
) -> TransversalResult:
    """Minimum candidate planes crossing every set (d = 3 dichotomy probe)."""
    planes = candidate_planes(fam)
    edges = []
    for s in fam:
        e = frozenset(i for i, h in enumerate(planes) if hyperplane_crosses(h, s))
        if not e:
            raise InputError("a set is crossed by no candidate plane")
        edges.append(e)
    flats = tuple(planes)
    h = Hypergraph(len(planes), tuple(edges), payload=flats)
    return tau(h, budget)


def build_cover_hypergraph(
    fam: Sequence[Polyhedron], candidates: Sequence[AffineFlat]
) -> Hypergraph:
    """Edge e_B = candidate flats crossing B; vertices carry the flats."""
    edges = []
    for si, s in enumerate(fam):
        e = frozenset(i for i, f in enumerate(candidates) if flat_crosses(f, s))
        if not e:
            raise InputError(f"set {si} is crossed by no candidate flat")
        edges.append(e)
    return Hypergraph(len(candidates), tuple(edges), payload=tuple(candidates))


def build_flat_hypergraph(
    fam: Sequence[Polyhedron], carriers: Sequence[AffineFlat], k: int
) -> Hypergraph:
    """Candidate (k-1)-flats inside the union of k-dimensional carriers.

    k = 1: candidate points on carrier lines (parameter-interval endpoints);
    k = 2: candidate lines inside carrier planes (vertex-pair scheme applied
    to the exact 2-dimensional cross sections).  Defined for k <= 2.
    """
    if k not in (1, 2):
        raise InputError("candidate generation is defined for k = 1, 2 only")
    if not fam:
        raise InputError("empty family")
    if any(c.k != k for c in carriers):
        raise InputError("carrier flat dimension mismatch")
    candidates: list = []
    keys: set = set()

    def add_point(p: tuple):
        if ("pt", p) not in keys:
            keys.add(("pt", p))
            candidates.append(Point(p))

    def add_line(line: AffineFlat):
        key = ("ln", line.base, line.directions)
        if key not in keys:
            keys.add(key)
            candidates.append(line)

    for carrier in carriers:
        if k == 1:
            for s in fam:
                interval = line_parameter_interval(carrier, s)
                if interval is None:
                    continue
                lo, hi = interval
                params = [t for t in (lo, hi) if t is not None] or [ZERO]
                for t in params:
                    add_point(carrier.point_at((t,)))
        else:
            sections = []
            for s in fam:
                leq, eq = [], []
                for hs in s.inequalities:
                    coeffs = tuple(dot(hs.normal, dv) for dv in carrier.directions)
                    leq.append((coeffs, hs.offset - dot(hs.normal, carrier.base)))
                for hs in s.equalities:
                    coeffs = tuple(dot(hs.normal, dv) for dv in carrier.directions)
                    eq.append((coeffs, hs.offset - dot(hs.normal, carrier.base)))
                ineqs = [Halfspace(c, r) for c, r in leq if not all(v == 0 for v in c)]
                eqs = [Hyperplane(c, r) for c, r in eq if not all(v == 0 for v in c)]
                bad_leq = any(all(v == 0 for v in c) and r < 0 for c, r in leq)
                bad_eq = any(all(v == 0 for v in c) and r != 0 for c, r in eq)
                if bad_leq or bad_eq:
                    continue  # the carrier plane misses this set entirely
                sections.append(Polyhedron(2, tuple(ineqs), tuple(eqs)))
            if not sections:
                continue
            for line2 in candidate_lines(sections):
                base3 = carrier.point_at(line2.base)
                dir2 = line2.directions[0]
                dir3 = tuple(
                    sum((dir2[j] * carrier.directions[j][i] for j in range(2)), ZERO)
                    for i in range(carrier.dim)
                )
                add_line(line_through(base3, tuple(a + b for a, b in zip(base3, dir3))))
    if not candidates:
        raise InputError("no candidate flats were generated")
    edges = []
    for si, s in enumerate(fam):
        members = set()
        for ci, cand in enumerate(candidates):
            if isinstance(cand, Point):
                if s.contains(cand.coords):
                    members.add(ci)
            else:
                if flat_crosses(cand, s):
                    members.add(ci)
        if not members:
            raise InputError(f"set {si} meets no candidate flat inside the carriers")
        edges.append(frozenset(members))
    return Hypergraph(len(candidates), tuple(edges), payload=tuple(candidates))
