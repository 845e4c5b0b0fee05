"""Momentum polytopes as exact half-plane intersections in the chamber.

The polytope of a weighted product is assembled as the intersection of the
local cones at the five torus-fixed anchor points together with the two
chamber walls: at most a dozen half-planes.  Cones that degenerate at a
transition value (a wall-hitting doubled point, a zero total weight) are
dropped; the cone at the triple-orthogonal point is kept as its one-sided
limit at weight coincidences, which reproduces the transition shapes.

Half-plane intersection runs in exact rational arithmetic (floating weights
are promoted to exact binary fractions), so vertices of rational-weight
polytopes are exact.  Normals are stored as sum-zero functionals on spectra;
signed distances divide by the Euclidean norm of the functional, which is
the gradient norm in the isometric chamber embedding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .classifier import N3Type, classify_n2, classify_n3, sign_profile
from .cones import ConeSpec, slice_cone_a, slice_cone_b, slice_cone_c
from .moment_map import as_gammas, fixed_point_spectra, raw_fixed_point_diagonals
from .su3 import (
    ChamberPoint,
    Scalar,
    Spectrum,
    all_exact,
    chamber_to_spectrum_floats,
    exact_div,
    is_exact,
    star_vector,
    to_chamber,
    to_positive_chamber,
)


class AllWeightsDegenerate(ValueError):
    """The half-plane intersection collapsed or failed to close up."""


class DegenerateWeight(ValueError):
    """A zero weight was passed where a nonzero one is required."""


# ---------------------------------------------------------------------------
# Half-planes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HalfPlane:
    """Closed half-plane {s : normal . s >= offset} in the sum-zero plane."""

    normal: Tuple[Scalar, Scalar, Scalar]
    offset: Scalar
    provenance: str = ""

    def __post_init__(self):
        if all(c == 0 for c in self.normal):
            raise ValueError("zero normal")

    def value(self, s) -> Scalar:
        n = self.normal
        return n[0] * s[0] + n[1] * s[1] + n[2] * s[2] - self.offset

    def unit(self) -> float:
        """Gradient norm of the functional in the chamber embedding."""
        n = self.normal
        return math.sqrt(float(n[0]) ** 2 + float(n[1]) ** 2 + float(n[2]) ** 2)

    def signed_distance(self, s) -> float:
        return float(self.value(s)) / self.unit()

    def star(self) -> "HalfPlane":
        return HalfPlane(star_vector(self.normal), self.offset, self.provenance)

    def functional_2d(self) -> Tuple[Scalar, Scalar, Scalar]:
        """Coefficients (a, b, c) with a*l1 + b*l2 >= c on the sum-zero plane."""
        n = self.normal
        return (n[0] - n[2], n[1] - n[2], self.offset)


def _lift_2d(a: Scalar, b: Scalar) -> Tuple[Scalar, Scalar, Scalar]:
    """Sum-zero normal matching the functional a*l1 + b*l2 on sum-zero triples."""
    m = exact_div(a + b, 3)
    return (a - m, b - m, -m)


WALL_12 = HalfPlane((1, -1, 0), 0, "wall:l1=l2")
WALL_23 = HalfPlane((0, 1, -1), 0, "wall:l2=l3")


# ---------------------------------------------------------------------------
# Exact 2D polygon clipping (coordinates are (l1, l2))
# ---------------------------------------------------------------------------

Point2 = Tuple[Scalar, Scalar]


def _clip(points: List[Point2], f: Tuple[Scalar, Scalar, Scalar]) -> List[Point2]:
    a, b, c = f
    if not points:
        return []
    vals = [a * x + b * y - c for (x, y) in points]
    out: List[Point2] = []
    n = len(points)
    for i in range(n):
        j = (i + 1) % n
        vi, vj = vals[i], vals[j]
        if vi >= 0:
            out.append(points[i])
        if (vi > 0 > vj) or (vi < 0 < vj):
            t = exact_div(vi, vi - vj)
            pi, pj = points[i], points[j]
            out.append((pi[0] + t * (pj[0] - pi[0]), pi[1] + t * (pj[1] - pi[1])))
    dedup: List[Point2] = []
    for p in out:
        if not dedup or p != dedup[-1]:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def _cross(o: Point2, p: Point2, q: Point2) -> Scalar:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def _extreme_cycle(points: List[Point2]):
    """Reduce a clipped cycle to its extreme points; returns (points, kind)."""
    uniq: List[Point2] = []
    for p in points:
        if p not in uniq:
            uniq.append(p)
    if not uniq:
        return [], "Empty"
    if len(uniq) == 1:
        return uniq, "Point"
    p0 = uniq[0]
    direction = None
    coplanar = True
    for p in uniq[1:]:
        v = (p[0] - p0[0], p[1] - p0[1])
        if direction is None:
            direction = v
        elif direction[0] * v[1] - direction[1] * v[0] != 0:
            coplanar = False
            break
    if coplanar:
        def along(p):
            return direction[0] * (p[0] - p0[0]) + direction[1] * (p[1] - p0[1])

        lo = min(uniq, key=along)
        hi = max(uniq, key=along)
        return ([lo] if lo == hi else [lo, hi]), ("Point" if lo == hi else "Segment")
    pts = list(points)
    area2 = sum(pts[i][0] * pts[(i + 1) % len(pts)][1] - pts[(i + 1) % len(pts)][0] * pts[i][1] for i in range(len(pts)))
    if area2 < 0:
        pts.reverse()
    changed = True
    while changed and len(pts) > 2:
        changed = False
        for i in range(len(pts)):
            o, p, q = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            if p == o or _cross(o, p, q) == 0:
                pts.pop(i)
                changed = True
                break
    return pts, "Polygon"


def _intersect_halfplanes(halfplanes: Sequence[HalfPlane], bound: Scalar):
    box: List[Point2] = [(-bound, -bound), (bound, -bound), (bound, bound), (-bound, bound)]
    poly = box
    for hp in halfplanes:
        poly = _clip(poly, hp.functional_2d())
        if not poly:
            raise AllWeightsDegenerate("half-plane intersection is empty")
    pts, kind = _extreme_cycle(poly)
    for (x, y) in pts:
        if abs(x) >= bound or abs(y) >= bound:
            raise AllWeightsDegenerate("half-plane intersection is unbounded")
    return pts, kind


# ---------------------------------------------------------------------------
# Chamber polytopes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChamberPolytope:
    """Convex polygon, segment or point in the positive chamber.

    ``vertices`` are the extreme points, counterclockwise in the chamber
    embedding starting from the diagonal anchor point when one exists.
    """

    halfplanes: Tuple[HalfPlane, ...]
    vertices: Tuple[Spectrum, ...]
    kind: str  # Polygon | Segment | Point
    label: Optional[str] = None
    starred: bool = False

    @property
    def is_exact(self) -> bool:
        return all(v.is_exact for v in self.vertices)

    def pq_vertices(self) -> List[ChamberPoint]:
        return [to_chamber(v) for v in self.vertices]

    def diameter(self) -> float:
        pts = self.pq_vertices()
        if len(pts) < 2:
            return 0.0
        return max(p.distance(q) for i, p in enumerate(pts) for q in pts[i + 1:])

    def contains(self, s, tol: float = 1e-9) -> bool:
        """Membership within ``tol`` scaled by the polytope diameter.

        Exact when the polytope, the point and ``tol == 0`` are all exact.
        """
        triple = s.astuple() if isinstance(s, Spectrum) else tuple(s)
        if tol == 0 and self.is_exact and all_exact(triple):
            return all(hp.value(triple) >= 0 for hp in self.halfplanes)
        slack = max(tol * self.diameter(), 1e-12)
        return all(hp.signed_distance(triple) >= -slack for hp in self.halfplanes)

    def star(self) -> "ChamberPolytope":
        starred = [Spectrum(*star_vector(v.astuple())) for v in self.vertices]
        # Reverse to keep the counterclockwise orientation, holding the
        # leading (anchor) vertex in place.
        verts = tuple(starred[:1] + starred[:0:-1])
        return ChamberPolytope(
            tuple(hp.star() for hp in self.halfplanes),
            verts,
            self.kind,
            self.label,
            not self.starred,
        )

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "starred": self.starred,
            "kind": self.kind,
            "vertices": [[_num_out(x) for x in v] for v in self.vertices],
            "halfplanes": [
                {
                    "normal": [_num_out(x) for x in hp.normal],
                    "offset": _num_out(hp.offset),
                    "provenance": hp.provenance,
                }
                for hp in self.halfplanes
            ],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "ChamberPolytope":
        verts = tuple(Spectrum(*[_num_in(x) for x in v]) for v in d["vertices"])
        hps = tuple(
            HalfPlane(tuple(_num_in(x) for x in h["normal"]), _num_in(h["offset"]), h.get("provenance", ""))
            for h in d["halfplanes"]
        )
        return cls(hps, verts, d["kind"], d.get("label"), bool(d.get("starred", False)))


def _num_out(x):
    if is_exact(x):
        f = Fraction(x)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    return float(x)


def _num_in(x):
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return x
    return float(x)


def contains(P: ChamberPolytope, s, tol: float = 1e-9) -> bool:
    """Functional alias for :meth:`ChamberPolytope.contains`."""
    return P.contains(s, tol)


def _rotate_to_start(vertices: Tuple[Spectrum, ...], start: Spectrum) -> Tuple[Spectrum, ...]:
    try:
        i = vertices.index(start)
    except ValueError:
        return vertices
    return vertices[i:] + vertices[:i]


# ---------------------------------------------------------------------------
# Cone -> half-planes
# ---------------------------------------------------------------------------


def _vec2(v) -> Point2:
    return (v[0], v[1])


def _cross2(u: Point2, v: Point2) -> Scalar:
    return u[0] * v[1] - u[1] * v[0]


def cone_halfplanes(cone: ConeSpec, tag: str) -> List[HalfPlane]:
    """Half-plane description of a local cone anchored at its apex."""
    apex = cone.apex.astuple()
    rays = [g for g in cone.generators if not g.is_line]
    lines = [g for g in cone.generators if g.is_line]

    def hp_from_2d(a: Scalar, b: Scalar, suffix: str) -> HalfPlane:
        normal = _lift_2d(a, b)
        offset = normal[0] * apex[0] + normal[1] * apex[1] + normal[2] * apex[2]
        return HalfPlane(normal, offset, f"{tag}:{suffix}")

    if cone.side_normal is not None:
        n = cone.side_normal
        offset = n[0] * apex[0] + n[1] * apex[1] + n[2] * apex[2]
        d = lines[0]
        return [HalfPlane(tuple(n), offset, f"{tag}:{d.root.label}-halfplane")]

    if lines:
        assert len(lines) == 1 and rays
        d = _vec2(lines[0].vector)
        a, b = -d[1], d[0]
        side = _cross2(d, _vec2(rays[0].vector))
        assert side != 0
        if side < 0:
            a, b = -a, -b
        for r in rays[1:]:
            assert _cross2(d, _vec2(r.vector)) * side > 0
        return [hp_from_2d(a, b, f"{lines[0].root.label}-halfplane")]

    vecs = []
    for g in rays:
        v = _vec2(g.vector)
        if v not in vecs:
            vecs.append(v)
    if len(vecs) == 1:
        raise AllWeightsDegenerate(f"single-ray cone at {tag}")
    for u in vecs:
        for v in vecs:
            if u is v or _cross2(u, v) <= 0:
                continue
            if all(_cross2(u, w) >= 0 and _cross2(w, v) >= 0 for w in vecs):
                # u and v are the extreme rays, counterclockwise from u to v
                hps = [
                    hp_from_2d(-u[1], u[0], "edge"),
                    hp_from_2d(v[1], -v[0], "edge"),
                ]
                return hps
    raise AllWeightsDegenerate(f"cone at {tag} is not salient")


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------


def _exactify(gs) -> tuple:
    return tuple(g if is_exact(g) else Fraction(g) for g in gs)


def polytope_cones(w, tol: float = 1e-9) -> Dict[str, Optional[ConeSpec]]:
    """The five local cones for canonical weights; None where degenerate."""
    g = as_gammas(w, n=3, allow_zero=False)
    profile = sign_profile(g, tol)
    gx = _exactify(g)
    out: Dict[str, Optional[ConeSpec]] = {}
    out["a"] = None if profile.sum == 0 else slice_cone_a(gx)
    out["b"] = slice_cone_b(gx, allow_coincident=True)
    for j, (u_is_zero, v_is_zero) in (
        (1, (profile.t1, profile.z23)),
        (2, (profile.t2, profile.z13)),
        (3, (False, False)),  # c3 cannot hit a wall in the canonical sector
    ):
        if u_is_zero or v_is_zero:
            out[f"c{j}"] = None
        else:
            out[f"c{j}"] = slice_cone_c(j, gx)
    return out


def build_polytope_n3(w, tol: float = 1e-9) -> ChamberPolytope:
    """Momentum polytope of three weighted planes with nonzero weights.

    Canonicalizes the weights (sort, sign-flip), intersects the wall and cone
    half-planes exactly, and star-reflects the result when the sign was
    flipped.  The returned label is the taxonomy type of the input.
    """
    g = as_gammas(w, n=3)
    if any(x == 0 for x in g):
        raise DegenerateWeight("zero weight: use build_polytope for the delegated shape")
    label, can = classify_n3(g, tol)
    if label is N3Type.DEGENERATE_ZERO_WEIGHT:
        raise DegenerateWeight("weight vanishes within tolerance")
    cg = can.sorted_gammas
    cgx = _exactify(cg)

    halfplanes: List[HalfPlane] = [WALL_12, WALL_23]
    for name, cone in polytope_cones(cg, tol).items():
        if cone is not None:
            halfplanes.extend(cone_halfplanes(cone, name))

    bound = 4 * sum(abs(x) for x in cgx) + 4
    pts, kind = _intersect_halfplanes(halfplanes, bound)
    if kind not in ("Polygon", "Segment", "Point"):
        raise AllWeightsDegenerate(f"unexpected intersection kind {kind}")
    vertices = tuple(_spectrum_from_xy(p) for p in pts)

    a_raw = raw_fixed_point_diagonals(cgx)["a"]
    a_vertex = to_positive_chamber(a_raw)[0]
    vertices = _rotate_to_start(vertices, a_vertex)

    poly = ChamberPolytope(tuple(halfplanes), vertices, kind, label.value, False)
    if can.starred:
        poly = poly.star()
    return poly


def _spectrum_from_xy(p: Point2) -> Spectrum:
    return Spectrum(p[0], p[1], -p[0] - p[1])


def _segment_halfplanes(a: Spectrum, c: Spectrum, tag: str) -> List[HalfPlane]:
    d = tuple(cc - aa for cc, aa in zip(c.astuple(), a.astuple()))
    d2 = (d[0] - d[2], d[1] - d[2])
    n_perp = _lift_2d(-d2[1], d2[0])
    n_dir = _lift_2d(d2[0], d2[1])

    def dot(n, s):
        return n[0] * s.l1 + n[1] * s.l2 + n[2] * s.l3

    return [
        HalfPlane(n_perp, dot(n_perp, a), f"{tag}:line"),
        HalfPlane(tuple(-x for x in n_perp), -dot(n_perp, a), f"{tag}:line"),
        HalfPlane(n_dir, dot(n_dir, a), f"{tag}:end-a"),
        HalfPlane(tuple(-x for x in n_dir), -dot(n_dir, c), f"{tag}:end-c"),
    ]


def point_polytope(s: Spectrum, label: Optional[str] = None) -> ChamberPolytope:
    hps = []
    for n in ((1, -1, 0), (0, 1, -1)):
        off = n[0] * s.l1 + n[1] * s.l2 + n[2] * s.l3
        hps.append(HalfPlane(n, off, "point"))
        hps.append(HalfPlane(tuple(-x for x in n), -off, "point"))
    return ChamberPolytope(tuple(hps), (s,), "Point", label, False)


def build_polytope_n2(w, tol: float = 1e-9) -> ChamberPolytope:
    """Momentum segment of two weighted planes with nonzero weights.

    Endpoints are the sorted spectra of the doubled and the orthogonal
    configurations; the segment is parallel to a root.
    """
    g = as_gammas(w, n=2)
    if any(x == 0 for x in g):
        raise DegenerateWeight("zero weight: use build_polytope for the delegated shape")
    label = classify_n2(g, tol)
    gx = _exactify(g)
    fps = fixed_point_spectra(gx)
    a, c = fps.a, fps.c
    if a == c:
        return point_polytope(a, label.value)
    hps = _segment_halfplanes(a, c, "segment")
    return ChamberPolytope(tuple(hps), (a, c), "Segment", label.value, False)


def build_polytope(w, tol: float = 1e-9) -> ChamberPolytope:
    """Polytope for 2 or 3 weights, delegating zero weights to fewer factors.

    A factor with zero weight is invisible to the momentum map, so the shape
    equals the one for the remaining weights (a segment for one surviving
    pair, a point for a single weight or none).
    """
    gs = as_gammas(w)
    scale = max((abs(float(x)) for x in gs), default=0.0)

    def iszero(x):
        return x == 0 if is_exact(x) else abs(x) <= tol * max(scale, 1.0)

    nz = tuple(x for x in gs if not iszero(x))
    if len(gs) == 3 and len(nz) == 3:
        return build_polytope_n3(gs, tol)
    if len(nz) == 2:
        return build_polytope_n2(nz, tol)
    if len(nz) == 1:
        gx = _exactify(nz)[0]
        raw = (exact_div(2 * gx, 3), exact_div(-gx, 3), exact_div(-gx, 3))
        return point_polytope(to_positive_chamber(raw)[0], "DegenerateZeroWeight")
    return point_polytope(Spectrum(0, 0, 0), "DegenerateZeroWeight")


# ---------------------------------------------------------------------------
# Hulls and distances (floating point, chamber-embedding metric)
# ---------------------------------------------------------------------------


def hull2d(points, eps: float = 1e-9) -> ChamberPolytope:
    """Convex hull of chamber points via the monotone chain.

    ``points`` may be an (n, 2) array, a sequence of ChamberPoint, or (p, q)
    pairs, all inside the closed chamber.  Collinear inputs collapse to a
    Segment, coincident ones to a Point; ``eps`` is the relative orientation
    tolerance.
    """
    import numpy as np

    if isinstance(points, np.ndarray):
        arr = points
    else:
        arr = np.array([(p.p, p.q) if isinstance(p, ChamberPoint) else (p[0], p[1]) for p in points], dtype=float)
    if arr.size == 0:
        raise ValueError("need at least one point")
    order = np.lexsort((arr[:, 1], arr[:, 0]))
    pts = arr[order]
    keep = np.ones(len(pts), dtype=bool)
    keep[1:] = np.any(np.diff(pts, axis=0) != 0, axis=1)
    pts = pts[keep]
    scale = max(float(np.abs(pts).max()), 1.0)
    eps_abs = eps * scale * scale

    def chain(seq):
        h: List[Tuple[float, float]] = []
        for x, y in seq:
            while len(h) >= 2 and ((h[-1][0] - h[-2][0]) * (y - h[-2][1]) - (h[-1][1] - h[-2][1]) * (x - h[-2][0])) <= eps_abs:
                h.pop()
            h.append((x, y))
        return h

    lower = chain(pts)
    upper = chain(pts[::-1])
    hull = lower[:-1] + upper[:-1] if len(lower) > 1 else lower

    if len(hull) == 1:
        s = Spectrum(*chamber_to_spectrum_floats(*hull[0]))
        return point_polytope(s, None)
    if len(hull) == 2:
        a = Spectrum(*chamber_to_spectrum_floats(*hull[0]))
        c = Spectrum(*chamber_to_spectrum_floats(*hull[1]))
        hps = _segment_halfplanes(a, c, "hull")
        return ChamberPolytope(tuple(hps), (a, c), "Segment", None, False)

    hps = []
    for i in range(len(hull)):
        (px, py), (qx, qy) = hull[i], hull[(i + 1) % len(hull)]
        npq = (-(qy - py), qx - px)  # inward normal for CCW order
        normal = _lift_pq(npq[0], npq[1])
        s = chamber_to_spectrum_floats(px, py)
        off = normal[0] * s[0] + normal[1] * s[1] + normal[2] * s[2]
        hps.append(HalfPlane(normal, off, f"hull:edge{i}"))
    verts = tuple(Spectrum(*chamber_to_spectrum_floats(x, y)) for x, y in hull)
    return ChamberPolytope(tuple(hps), verts, "Polygon", None, False)


def _lift_pq(np_: float, nq: float) -> Tuple[float, float, float]:
    """Sum-zero normal matching the functional np*p + nq*q of the embedding."""
    s2, s6 = math.sqrt(2.0), math.sqrt(6.0)
    return (np_ / s2 + nq / s6, -np_ / s2 + nq / s6, -2 * nq / s6)


def _pq_array(P: ChamberPolytope):
    import numpy as np

    return np.array([(c.p, c.q) for c in P.pq_vertices()], dtype=float)


def distance_to_polytope_pq(point, P: ChamberPolytope) -> float:
    """Euclidean distance from an embedding point to a convex polytope."""
    px, py = float(point[0]), float(point[1])
    verts = _pq_array(P)
    n = len(verts)
    if n == 1:
        return math.hypot(px - verts[0][0], py - verts[0][1])
    inside = n > 2
    best = math.inf
    for i in range(n if n > 2 else n - 1):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % n]
        if inside and ((bx - ax) * (py - ay) - (by - ay) * (px - ax)) < 0:
            inside = False
        dx, dy = bx - ax, by - ay
        denom = dx * dx + dy * dy
        t = 0.0 if denom == 0.0 else max(0.0, min(1.0, ((px - ax) * dx + (py - ay) * dy) / denom))
        best = min(best, math.hypot(px - (ax + t * dx), py - (ay + t * dy)))
    if inside:
        return 0.0
    return best


def hausdorff(P: ChamberPolytope, Q: ChamberPolytope) -> float:
    """Symmetric Hausdorff distance in the chamber-embedding metric.

    Both sets are convex, so each one-sided supremum is attained at a vertex.
    """
    d_pq = max(distance_to_polytope_pq((c.p, c.q), Q) for c in P.pq_vertices())
    d_qp = max(distance_to_polytope_pq((c.p, c.q), P) for c in Q.pq_vertices())
    return max(d_pq, d_qp)
