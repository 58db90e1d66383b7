"""
Marked weighted polygons and their group actions.

A representative is a convex rational polygon with marked interior points c_j and signs eps_j.
Each mark carries a vertical cut, upward for eps_j = +1 and downward for eps_j = -1. The group
G_s x T acts by flipping cuts (piecewise vertical shears to the right of the flipped marks) and
by global vertical shears and translations.

Corner convention at a vertex q of the counterclockwise list: u is the primitive direction
toward the next vertex, v the primitive direction toward the previous vertex.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from semitoric_families.enums.corner_class_enum import CornerClassEnum
from semitoric_families.exceptions.domain_error import DomainError
from semitoric_families.exceptions.inadmissible_error import InadmissibleError
from semitoric_families.exceptions.infeasible_error import InfeasibleError
from semitoric_families.models.slope_audit_model import SlopeAuditEntryModel, SlopeAuditModel
from semitoric_families.models.validity_report_model import ValidityReportModel
from semitoric_families.models.violation_model import ViolationModel
from semitoric_families.rational_geometry import (
    T,
    ConvexPolygon,
    LatticeMatrix,
    PiecewiseShear,
    Point,
    RationalLike,
    add,
    cross,
    det,
    hull,
    is_convex_cycle,
    parse_rat,
    point_from_json,
    point_to_json,
    primitive_vector,
    scale,
    sl2z_length,
    sub,
)

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Mark:
    """Marked point c_j with cut sign eps_j"""
    point: Point
    sign: int

    def to_json(self) -> Dict[str, Any]:
        return {"c": point_to_json(self.point), "eps": self.sign}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'Mark':
        try:
            return cls(point_from_json(data["c"]), int(data["eps"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed mark entry {data!r}") from exc


@dataclass(frozen=True)
class MarkedWeightedPolygon:
    """One representative (polygon, c, eps) of a marked semitoric polygon"""
    polygon: ConvexPolygon
    marks: Tuple[Mark, ...] = ()

    @property
    def cut_abscissas(self) -> Tuple[Fraction, ...]:
        return tuple(m.point[0] for m in self.marks)

    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(m.sign for m in self.marks)

    def cut_index(self, p: Point) -> Optional[int]:
        """Index of the cut half-line containing p, if any"""
        for j, mark in enumerate(self.marks):
            cx, cy = mark.point
            if p[0] != cx:
                continue
            if (mark.sign >= 0 and p[1] >= cy) or (mark.sign < 0 and p[1] <= cy):
                return j
        return None

    def cut_boundary_point(self, j: int) -> Optional[Point]:
        """Point where cut j leaves the polygon"""
        mark = self.marks[j]
        extent = self.polygon.vertical_extent(mark.point[0])
        if extent is None:
            return None
        return mark.point[0], extent[1] if mark.sign >= 0 else extent[0]

    def without_mark(self, j: int) -> 'MarkedWeightedPolygon':
        return MarkedWeightedPolygon(self.polygon, self.marks[:j] + self.marks[j + 1:])

    def to_json(self) -> Dict[str, Any]:
        return {"polygon": self.polygon.to_json(), "marks": [m.to_json() for m in self.marks]}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'MarkedWeightedPolygon':
        """
        Create a representative from its JSON form

        Args:
            data: {"polygon": [[x, y], ...], "marks": [{"c": [x, y], "eps": 1}, ...]}

        Returns:
            MarkedWeightedPolygon instance

        Example:
            >>> mp = MarkedWeightedPolygon.from_json({"polygon": [["0", "0"], ["1", "0"], ["0", "1"]]})
            >>> len(mp.marks)
            0
        """
        if not isinstance(data, dict) or "polygon" not in data:
            raise DomainError("marked polygon JSON needs a 'polygon' entry")
        polygon = ConvexPolygon.from_json(data["polygon"])
        marks = tuple(Mark.from_json(m) for m in data.get("marks", []))
        return cls(polygon, marks)


@dataclass(frozen=True)
class GroupElement:
    """Element of G_s x T: cut flips, then T^k, then a vertical shift"""
    shear_exponent: int = 0
    vertical_shift: Fraction = Fraction(0)
    flips: Tuple[int, ...] = field(default_factory=tuple)  # eps'; empty means no flips

    def matrix(self) -> LatticeMatrix:
        return T.power(self.shear_exponent)


def marked(polygon: ConvexPolygon, marks: Iterable[Tuple[Sequence[RationalLike], int]] = ()) -> MarkedWeightedPolygon:
    """Convenience constructor from ((x, y), eps) pairs"""
    return MarkedWeightedPolygon(
        polygon,
        tuple(Mark((parse_rat(c[0]), parse_rat(c[1])), int(eps)) for c, eps in marks),
    )


# ----------------------------
# CORNERS AND VALIDITY
# ----------------------------

def corner_vectors(polygon: ConvexPolygon, vertex: Point) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """(u, v): primitive directions toward the next and the previous vertex"""
    prev_vertex, next_vertex = polygon.neighbours(vertex)
    return primitive_vector(sub(next_vertex, vertex)), primitive_vector(sub(prev_vertex, vertex))


def classify_corner(mp: MarkedWeightedPolygon, vertex: Point) -> CornerClassEnum:
    """
    Classify a vertex as Delzant, Hidden, Fake or Invalid.

    Off the cut set the vertex is Delzant iff det(u, v) = 1. On a cut it is Fake iff
    det(u, Tv) = 0 and Hidden iff det(u, Tv) = 1.
    """
    vertex = (parse_rat(vertex[0]), parse_rat(vertex[1]))
    u, v = corner_vectors(mp.polygon, vertex)
    if mp.cut_index(vertex) is None:
        return CornerClassEnum.DELZANT if det(u, v) == 1 else CornerClassEnum.INVALID
    twisted = det(u, T.apply(v))
    if twisted == 0:
        return CornerClassEnum.FAKE
    if twisted == 1:
        return CornerClassEnum.HIDDEN
    return CornerClassEnum.INVALID


def validate(mp: MarkedWeightedPolygon) -> ValidityReportModel:
    """Collect every violation of the marked Delzant semitoric polygon conditions"""
    report = ValidityReportModel()
    polygon = mp.polygon

    for j, mark in enumerate(mp.marks):
        location = point_to_json(mark.point)
        if mark.sign not in (1, -1):
            report.violations.append(ViolationModel("mark-sign", f"mark {j} has sign {mark.sign}", location, j))
        if not polygon.interior_contains(mark.point):
            report.violations.append(
                ViolationModel("mark-not-interior", f"mark {j} is not in the polygon interior", location, j)
            )
        if j > 0 and not mp.marks[j - 1].point[0] < mark.point[0]:
            report.violations.append(
                ViolationModel("mark-order", f"mark {j} abscissa does not increase strictly", location, j)
            )

    cut_vertices = set()
    for j, mark in enumerate(mp.marks):
        if mark.sign not in (1, -1) or not polygon.interior_contains(mark.point):
            continue
        hit = mp.cut_boundary_point(j)
        if not polygon.has_vertex(hit):
            report.violations.append(
                ViolationModel("cut-meets-edge", f"cut {j} leaves the polygon inside an edge", point_to_json(hit), j)
            )
        else:
            cut_vertices.add(hit)

    for vertex in polygon.vertices:
        cls = classify_corner(mp, vertex)
        report.corner_classes.append((point_to_json(vertex), cls))
        if vertex in cut_vertices:
            if cls not in (CornerClassEnum.FAKE, CornerClassEnum.HIDDEN):
                report.violations.append(
                    ViolationModel("cut-corner", "corner on a cut is neither fake nor hidden", point_to_json(vertex))
                )
        elif cls != CornerClassEnum.DELZANT:
            report.violations.append(
                ViolationModel("corner-not-delzant", "corner fails the Delzant condition", point_to_json(vertex))
            )
    return report


# ----------------------------
# GROUP ACTION
# ----------------------------

def _flip_exponents(mp: MarkedWeightedPolygon, flips: Sequence[int]) -> Tuple[int, ...]:
    # u_j = (eps_j - eps_j * eps'_j) / 2
    return tuple((m.sign - m.sign * f) // 2 for m, f in zip(mp.marks, flips))


def flip_shear(mp: MarkedWeightedPolygon, flips: Sequence[int]) -> PiecewiseShear:
    """Piecewise shear that realizes the cut flips eps' on this representative"""
    if len(flips) != len(mp.marks):
        raise DomainError(f"expected {len(mp.marks)} flip signs, got {len(flips)}")
    if any(f not in (1, -1) for f in flips):
        raise DomainError("flip signs must be +1 or -1")
    return PiecewiseShear(mp.cut_abscissas, _flip_exponents(mp, flips))


def transport(mp: MarkedWeightedPolygon, g: GroupElement, p: Point) -> Point:
    """Image of a point of the representative under g"""
    flips = g.flips or (1,) * len(mp.marks)
    q = flip_shear(mp, flips).apply(p)
    q = g.matrix().apply(q)
    return q[0], q[1] + Fraction(g.vertical_shift)


def apply_group(g: GroupElement, mp: MarkedWeightedPolygon) -> MarkedWeightedPolygon:
    """
    Apply a group element to a representative.

    Cut flips act first through the piecewise shears, then the global T^k and the vertical
    shift. The image boundary must stay convex.
    """
    flips = g.flips or (1,) * len(mp.marks)
    shear = flip_shear(mp, flips)
    cycle = [shear.apply(p) for p in mp.polygon.subdivided_boundary(mp.cut_abscissas)]
    if not is_convex_cycle(cycle):
        raise InadmissibleError(f"cut flips {tuple(flips)} produce a non-convex polygon")

    matrix = g.matrix()
    offset = (Fraction(0), Fraction(g.vertical_shift))
    polygon = hull(add(matrix.apply(p), offset) for p in cycle)
    marks = tuple(
        Mark(add(matrix.apply(shear.apply(m.point)), offset), m.sign * f)
        for m, f in zip(mp.marks, flips)
    )
    return MarkedWeightedPolygon(polygon, marks)


def flip_all(mp: MarkedWeightedPolygon, flips: Sequence[int]) -> MarkedWeightedPolygon:
    return apply_group(GroupElement(flips=tuple(flips)), mp)


def flip_patterns(count: int) -> List[Tuple[int, ...]]:
    """All flip vectors, identity first"""
    return [tuple(-1 if bit else 1 for bit in bits) for bits in product((0, 1), repeat=count)]


def representatives(mp: MarkedWeightedPolygon) -> List[Tuple[Tuple[int, ...], MarkedWeightedPolygon]]:
    """Admissible cut-flip representatives of the orbit, with the flips that produce them"""
    result = []
    for flips in flip_patterns(len(mp.marks)):
        try:
            result.append((flips, flip_all(mp, flips)))
        except InadmissibleError:
            _LOGGER.debug(f"flip pattern {flips} is inadmissible")
    return result


def canonicalize(mp: MarkedWeightedPolygon) -> MarkedWeightedPolygon:
    """
    Normal form of the orbit of a representative.

    All cuts are flipped upward; the outgoing edge (a, b) at the leftmost-lowest vertex is
    sheared to 0 <= b < a; the leftmost fiber is translated to start at height 0.
    """
    up = flip_all(mp, mp.signs) if mp.marks else mp
    start = up.polygon.vertices[0]
    a, b = primitive_vector(sub(up.polygon.vertices[1], start))
    k = -(b // a)
    shifted_y = start[1] + k * start[0]
    return apply_group(GroupElement(shear_exponent=k, vertical_shift=-shifted_y), up)


def orbit_equal(a: MarkedWeightedPolygon, b: MarkedWeightedPolygon) -> bool:
    """True iff both representatives lie in one G_s x T orbit"""
    if len(a.marks) != len(b.marks):
        return False
    return canonicalize(a) == canonicalize(b)


# ----------------------------
# CORNER CHOP AND UNCHOP
# ----------------------------

def _simplex(q: Point, u: Sequence[int], v: Sequence[int], lam: Fraction) -> ConvexPolygon:
    return hull([q, add(q, scale(lam, u)), add(q, scale(lam, v))])


def _simplex_cut_obstruction(mp: MarkedWeightedPolygon, simplex: ConvexPolygon) -> Optional[str]:
    lo, hi = simplex.x_range()
    for j, mark in enumerate(mp.marks):
        cx, cy = mark.point
        if not lo <= cx <= hi:
            continue
        ylo, yhi = simplex.vertical_extent(cx)
        if (mark.sign >= 0 and yhi >= cy) or (mark.sign < 0 and ylo <= cy):
            return f"simplex meets cut {j} at x={cx}"
    return None


def _chop_obstruction(mp: MarkedWeightedPolygon, q: Point, lam: Fraction) -> Optional[str]:
    if classify_corner(mp, q) != CornerClassEnum.DELZANT:
        return f"vertex ({q[0]}, {q[1]}) is not a Delzant corner"
    prev_vertex, next_vertex = mp.polygon.neighbours(q)
    if not (sl2z_length(q, next_vertex) > lam and sl2z_length(q, prev_vertex) > lam):
        return f"size {lam} is not smaller than both adjacent edge lengths"
    u, v = corner_vectors(mp.polygon, q)
    return _simplex_cut_obstruction(mp, _simplex(q, u, v, lam))


def _chop(mp: MarkedWeightedPolygon, q: Point, lam: Fraction) -> MarkedWeightedPolygon:
    u, v = corner_vectors(mp.polygon, q)
    others = [p for p in mp.polygon.vertices if p != q]
    polygon = hull(others + [add(q, scale(lam, u)), add(q, scale(lam, v))])
    return MarkedWeightedPolygon(polygon, mp.marks)


def corner_chop(mp: MarkedWeightedPolygon, vertex: Sequence[RationalLike], lam: RationalLike) -> MarkedWeightedPolygon:
    """
    Semitoric corner chop of size lam at a vertex.

    Every admissible cut-flip representative is searched, identity first; the chop is done in
    the first one where the vertex is Delzant, both adjacent edges are longer than lam and the
    simplex avoids the cuts. The result is returned with the input cut signs.

    Args:
        mp: Representative to chop
        vertex: Vertex of mp.polygon
        lam: Chop size, exact rational > 0

    Returns:
        Chopped representative, marks unchanged

    Example:
        >>> tri = marked(hull([(0, 0), (0, 1), (1, 0)]))
        >>> corner_chop(tri, ("0", "1"), "1/2").polygon.vertices[1]
        (Fraction(1, 1), Fraction(0, 1))
    """
    lam = parse_rat(lam)
    if lam <= 0:
        raise DomainError("chop size must be positive")
    q = (parse_rat(vertex[0]), parse_rat(vertex[1]))
    mp.polygon.vertex_index(q)

    obstructions = []
    for flips, rep in representatives(mp):
        q_rep = flip_shear(mp, flips).apply(q)
        if not rep.polygon.has_vertex(q_rep):
            obstructions.append(f"flips {flips}: vertex is not a corner of this representative")
            continue
        reason = _chop_obstruction(rep, q_rep, lam)
        if reason is not None:
            _LOGGER.debug(f"chop rejected in representative {flips}: {reason}")
            obstructions.append(f"flips {flips}: {reason}")
            continue
        chopped = _chop(rep, q_rep, lam)
        return flip_all(chopped, flips) if mp.marks else chopped
    raise InfeasibleError("; ".join(obstructions) or "no admissible representative")


def _unchop_in(rep: MarkedWeightedPolygon, a: Point, b: Point, lam: Fraction) -> Tuple[Optional[MarkedWeightedPolygon], str]:
    polygon = rep.polygon
    if not (polygon.has_vertex(a) and polygon.has_vertex(b)):
        return None, "edge endpoints are not corners of this representative"
    if polygon.neighbours(a)[1] != b:
        if polygon.neighbours(b)[1] != a:
            return None, "edge endpoints are not adjacent"
        a, b = b, a
    if sl2z_length(a, b) != lam:
        return None, f"edge length {sl2z_length(a, b)} differs from {lam}"

    before = polygon.neighbours(a)[0]
    after = polygon.neighbours(b)[1]
    d1 = sub(a, before)
    d2 = sub(after, b)
    denom = det(d1, d2)
    if denom == 0:
        return None, "adjacent edges are parallel"
    s = det(sub(b, a), d2) / denom
    q = add(a, scale(s, d1))
    if not cross(a, b, q) < 0:
        return None, "extended edges meet on the polygon side"

    glued = hull(list(polygon.vertices) + [q])
    if len(glued) != len(polygon) - 1 or not glued.has_vertex(q):
        return None, "glued corner swallows a neighbouring vertex"
    candidate = MarkedWeightedPolygon(glued, rep.marks)
    reason = _chop_obstruction(candidate, q, lam)
    if reason is not None:
        return None, reason
    if _chop(candidate, q, lam) != rep:
        return None, "chop of the glued corner does not return the input"
    return candidate, ""


def corner_unchop(mp: MarkedWeightedPolygon, edge: Sequence[Sequence[RationalLike]], lam: RationalLike) -> MarkedWeightedPolygon:
    """
    Inverse of corner_chop: glue the corner cut off along an edge of SL2(Z)-length lam.

    The edge is given by its two endpoints in the input representative; in the representative
    where the unchop happens they must be adjacent corners.
    """
    lam = parse_rat(lam)
    if lam <= 0:
        raise DomainError("unchop size must be positive")
    a = (parse_rat(edge[0][0]), parse_rat(edge[0][1]))
    b = (parse_rat(edge[1][0]), parse_rat(edge[1][1]))
    for p in (a, b):
        if not mp.polygon.on_boundary(p):
            raise DomainError(f"({p[0]}, {p[1]}) is not on the polygon boundary")

    obstructions = []
    for flips, rep in representatives(mp):
        shear = flip_shear(mp, flips)
        glued, reason = _unchop_in(rep, shear.apply(a), shear.apply(b), lam)
        if glued is None:
            _LOGGER.debug(f"unchop rejected in representative {flips}: {reason}")
            obstructions.append(f"flips {flips}: {reason}")
            continue
        return flip_all(glued, flips) if mp.marks else glued
    raise InfeasibleError("; ".join(obstructions) or "no admissible representative")


# ----------------------------
# CUT REMOVAL AND SLOPES
# ----------------------------

def remove_cut(mp: MarkedWeightedPolygon, j: int, required_sign: int) -> MarkedWeightedPolygon:
    """
    Forget mark j in a representative where its cut points in the required direction.

    Only mark j is flipped when needed; the polygon is then kept and the mark deleted.
    """
    if not 0 <= j < len(mp.marks):
        raise DomainError(f"mark index {j} out of range for {len(mp.marks)} mark(s)")
    if required_sign not in (1, -1):
        raise DomainError("required sign must be +1 or -1")
    rep = mp
    if mp.marks[j].sign != required_sign:
        flips = tuple(-1 if i == j else 1 for i in range(len(mp.marks)))
        rep = flip_all(mp, flips)
    return rep.without_mark(j)


def _top_chain(polygon: ConvexPolygon) -> List[Point]:
    top = []
    for vertex in polygon.vertices:
        if polygon.vertical_extent(vertex[0])[1] == vertex[1]:
            top.append(vertex)
    top.sort()
    # a vertical edge on either side contributes only its upper end
    deduped: List[Point] = []
    for vertex in top:
        if deduped and deduped[-1][0] == vertex[0]:
            deduped[-1] = vertex
        else:
            deduped.append(vertex)
    return deduped


def slope_change_audit(
        mp: MarkedWeightedPolygon,
        weights: Optional[Dict[Point, Tuple[int, int]]] = None,
        ff_counts: Optional[Dict[Fraction, int]] = None,
) -> SlopeAuditModel:
    """
    Check s_r - s_l = w_e - k at every interior vertex of the top boundary.

    Args:
        mp: Representative
        weights: Isotropy weights (a, b) at elliptic-elliptic corners; w_e = -1/|ab| there
        ff_counts: Focus-focus count per abscissa; defaults to the upward marks of mp

    Returns:
        SlopeAuditModel with one entry per interior top vertex
    """
    weights = {(parse_rat(p[0]), parse_rat(p[1])): w for p, w in (weights or {}).items()}
    if ff_counts is None:
        ff_counts = {}
        for mark in mp.marks:
            if mark.sign > 0:
                ff_counts[mark.point[0]] = ff_counts.get(mark.point[0], 0) + 1
    else:
        ff_counts = {parse_rat(x): k for x, k in ff_counts.items()}

    chain = _top_chain(mp.polygon)
    audit = SlopeAuditModel()
    for left, vertex, right in zip(chain, chain[1:], chain[2:]):
        slope_left = (vertex[1] - left[1]) / (vertex[0] - left[0])
        slope_right = (right[1] - vertex[1]) / (right[0] - vertex[0])
        weight_term = Fraction(0)
        if vertex in weights:
            a, b = weights[vertex]
            weight_term = Fraction(-1, abs(a * b))
        audit.entries.append(
            SlopeAuditEntryModel(
                vertex=point_to_json(vertex),
                slope_left=slope_left,
                slope_right=slope_right,
                weight_term=weight_term,
                focus_focus_count=ff_counts.get(vertex[0], 0),
            )
        )
    return audit
