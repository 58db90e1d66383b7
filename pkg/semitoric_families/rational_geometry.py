"""
Exact lattice-affine plane geometry.

Rational points are pairs of ``fractions.Fraction``. Polygons are stored as strictly convex,
counterclockwise vertex lists starting at the lexicographically smallest vertex, so two
polygons describing the same set compare equal structurally.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from semitoric_families.exceptions.degenerate_polygon_error import DegeneratePolygonError
from semitoric_families.exceptions.domain_error import DomainError

Rat = Fraction
Point = Tuple[Fraction, Fraction]
RationalLike = Union[int, str, Fraction]


# ----------------------------
# RATIONAL SCALARS AND POINTS
# ----------------------------

def parse_rat(value: RationalLike) -> Fraction:
    """
    Parse an exact rational from an int, a Fraction or a "p/q" string.

    Floats are rejected so that no rounding ever enters polygon data.

    Args:
        value: Integer, Fraction, or string such as "3", "-1/2", "7/4"

    Returns:
        Reduced Fraction with positive denominator

    Example:
        >>> parse_rat("6/4")
        Fraction(3, 2)
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise DomainError(f"expected an exact rational, got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"malformed rational literal {value!r}") from exc
    raise DomainError(f"expected an exact rational, got {type(value).__name__}")


def rat_to_str(value: Fraction) -> str:
    """Serialize a rational as "num/den" """
    return f"{value.numerator}/{value.denominator}"


def point(x: RationalLike, y: RationalLike) -> Point:
    """Build an exact point"""
    return parse_rat(x), parse_rat(y)


def point_to_json(p: Point) -> List[str]:
    return [rat_to_str(p[0]), rat_to_str(p[1])]


def point_from_json(data: Sequence[RationalLike]) -> Point:
    if len(data) != 2:
        raise DomainError(f"a point needs two coordinates, got {len(data)}")
    return point(data[0], data[1])


def sub(p: Point, q: Point) -> Point:
    return p[0] - q[0], p[1] - q[1]


def add(p: Point, q: Point) -> Point:
    return p[0] + q[0], p[1] + q[1]


def scale(k: Fraction, p: Point) -> Point:
    return k * p[0], k * p[1]


def det(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    """Determinant of the 2x2 matrix with columns u, v"""
    return u[0] * v[1] - u[1] * v[0]


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Orientation of the triple (o, a, b); positive for a left turn"""
    return det(sub(a, o), sub(b, o))


def primitive_vector(direction: Sequence[Fraction]) -> Tuple[int, int]:
    """
    Primitive integer vector pointing along a rational direction.

    Args:
        direction: Nonzero rational vector

    Returns:
        (a, b) integers with gcd(a, b) = 1 and the same direction
    """
    x, y = Fraction(direction[0]), Fraction(direction[1])
    if x == 0 and y == 0:
        raise DomainError("the zero vector has no primitive direction")
    lcm_den = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
    a = int(x * lcm_den)
    b = int(y * lcm_den)
    g = gcd(a, b)
    return a // g, b // g


def sl2z_length(a: Point, b: Point) -> Fraction:
    """
    SL2(Z)-length of the segment from a to b.

    Returns the unique l >= 0 with b - a = l * v for v the primitive integer vector in the
    direction of b - a. Coincident endpoints have length 0.
    """
    vec = sub(b, a)
    if vec[0] == 0 and vec[1] == 0:
        return Fraction(0)
    prim = primitive_vector(vec)
    if prim[0] != 0:
        return vec[0] / prim[0]
    return vec[1] / prim[1]


# ----------------------------
# LATTICE MAPS
# ----------------------------

@dataclass(frozen=True)
class LatticeMatrix:
    """Integer 2x2 matrix (a b; c d) acting on column vectors"""
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def identity(cls) -> 'LatticeMatrix':
        return cls(1, 0, 0, 1)

    @classmethod
    def shear_t(cls) -> 'LatticeMatrix':
        """The vertical shear T = (1 0; 1 1)"""
        return cls(1, 0, 1, 1)

    @property
    def determinant(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: 'LatticeMatrix') -> 'LatticeMatrix':
        return LatticeMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> 'LatticeMatrix':
        """Inverse in GL2(Z); only unimodular matrices are invertible"""
        det_value = self.determinant
        if det_value not in (1, -1):
            raise DomainError(f"matrix with determinant {det_value} is not invertible over Z")
        return LatticeMatrix(self.d * det_value, -self.b * det_value, -self.c * det_value, self.a * det_value)

    def power(self, k: int) -> 'LatticeMatrix':
        base = self if k >= 0 else self.inverse()
        result = LatticeMatrix.identity()
        for _ in range(abs(k)):
            result = result @ base
        return result

    def apply(self, p: Sequence[Fraction]) -> Point:
        return self.a * p[0] + self.b * p[1], self.c * p[0] + self.d * p[1]


T = LatticeMatrix.shear_t()


def apply_shear(m: LatticeMatrix, p: Point) -> Point:
    """Exact product m * p"""
    return m.apply(p)


@dataclass(frozen=True)
class PiecewiseShear:
    """
    Composition of vertical shears t_{l_lambda}^k, each the identity on {x <= lambda}.

    The individual shears commute, so the composite acts on (x, y) as
    (x, y + sum over lambda_i < x of u_i * (x - lambda_i)).
    """
    abscissas: Tuple[Fraction, ...]  # lambda_1 < ... < lambda_s
    exponents: Tuple[int, ...]  # u_1, ..., u_s

    def __post_init__(self):
        if len(self.abscissas) != len(self.exponents):
            raise DomainError("piecewise shear needs one exponent per cut abscissa")
        for left, right in zip(self.abscissas, self.abscissas[1:]):
            if not left < right:
                raise DomainError("cut abscissas must be strictly increasing")

    @classmethod
    def single(cls, abscissa: RationalLike, exponent: int) -> 'PiecewiseShear':
        return cls((parse_rat(abscissa),), (int(exponent),))

    def apply(self, p: Point) -> Point:
        x, y = p
        for lam, k in zip(self.abscissas, self.exponents):
            if x > lam:
                y += k * (x - lam)
        return x, y

    def inverse(self) -> 'PiecewiseShear':
        return PiecewiseShear(self.abscissas, tuple(-k for k in self.exponents))


def apply_piecewise(ps: PiecewiseShear, p: Point) -> Point:
    """Apply a piecewise shear to a point"""
    return ps.apply(p)


# ----------------------------
# CONVEX POLYGONS
# ----------------------------

def _convex_chain(points: List[Point]) -> List[Point]:
    chain: List[Point] = []
    for p in points:
        while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
            chain.pop()
        chain.append(p)
    return chain


def hull_vertices(points: Iterable[Point]) -> List[Point]:
    """Strict counterclockwise hull starting at the lexicographic minimum (monotone chain)"""
    unique = sorted(set((Fraction(x), Fraction(y)) for x, y in points))
    if len(unique) < 3:
        raise DegeneratePolygonError(f"{len(unique)} distinct point(s) do not span a polygon")
    lower = _convex_chain(unique)
    upper = _convex_chain(list(reversed(unique)))
    vertices = lower[:-1] + upper[:-1]
    if len(vertices) < 3:
        raise DegeneratePolygonError("all points are collinear")
    return vertices


def hull(points: Iterable[Point]) -> 'ConvexPolygon':
    """
    Convex hull of a finite rational point set.

    Args:
        points: At least three non-collinear rational points

    Returns:
        ConvexPolygon with collinear boundary points removed

    Example:
        >>> hull([point(0, 0), point(2, 0), point(1, 0), point(1, 1)]).vertices
        ((Fraction(0, 1), Fraction(0, 1)), (Fraction(2, 1), Fraction(0, 1)), (Fraction(1, 1), Fraction(1, 1)))
    """
    return ConvexPolygon(tuple(hull_vertices(points)))


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex rational polygon, counterclockwise from the lexicographic minimum"""
    vertices: Tuple[Point, ...]

    @classmethod
    def from_vertices(cls, vertices: Sequence[Point]) -> 'ConvexPolygon':
        """Build from a vertex list, rejecting lists that are not already strictly convex"""
        polygon = hull(vertices)
        if len(polygon.vertices) != len(set(vertices)):
            raise DomainError("vertex list contains non-extreme points")
        return polygon

    # ----------------------------
    # STRUCTURE
    # ----------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> List[Tuple[Point, Point]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def vertex_index(self, p: Point) -> int:
        try:
            return self.vertices.index((Fraction(p[0]), Fraction(p[1])))
        except ValueError:
            raise DomainError(f"({p[0]}, {p[1]}) is not a vertex of the polygon") from None

    def has_vertex(self, p: Point) -> bool:
        return (Fraction(p[0]), Fraction(p[1])) in self.vertices

    def neighbours(self, p: Point) -> Tuple[Point, Point]:
        """(previous, next) vertices in counterclockwise order"""
        i = self.vertex_index(p)
        n = len(self.vertices)
        return self.vertices[(i - 1) % n], self.vertices[(i + 1) % n]

    def x_range(self) -> Tuple[Fraction, Fraction]:
        xs = [v[0] for v in self.vertices]
        return min(xs), max(xs)

    # ----------------------------
    # MEMBERSHIP
    # ----------------------------

    def contains(self, p: Point) -> bool:
        """Closed membership"""
        return all(cross(a, b, p) >= 0 for a, b in self.edges())

    def interior_contains(self, p: Point) -> bool:
        """Open membership"""
        return all(cross(a, b, p) > 0 for a, b in self.edges())

    def on_boundary(self, p: Point) -> bool:
        return self.contains(p) and not self.interior_contains(p)

    def vertical_extent(self, x: Fraction) -> Optional[Tuple[Fraction, Fraction]]:
        """(ymin, ymax) of the fiber over abscissa x, or None outside the x-range"""
        x = Fraction(x)
        lo, hi = self.x_range()
        if x < lo or x > hi:
            return None
        ys: List[Fraction] = []
        for a, b in self.edges():
            if a[0] == b[0]:
                if a[0] == x:
                    ys.extend([a[1], b[1]])
            elif min(a[0], b[0]) <= x <= max(a[0], b[0]):
                ys.append(a[1] + (b[1] - a[1]) * (x - a[0]) / (b[0] - a[0]))
        return min(ys), max(ys)

    # ----------------------------
    # MEASURES
    # ----------------------------

    def area(self) -> Fraction:
        total = Fraction(0)
        for a, b in self.edges():
            total += det(a, b)
        return total / 2

    def sl2z_perimeter(self) -> Fraction:
        return sum((sl2z_length(a, b) for a, b in self.edges()), Fraction(0))

    # ----------------------------
    # MAPS
    # ----------------------------

    def transform(self, fn: Callable[[Point], Point]) -> 'ConvexPolygon':
        """Image under a map that is affine on the whole polygon"""
        return hull(fn(v) for v in self.vertices)

    def apply_matrix(self, m: LatticeMatrix) -> 'ConvexPolygon':
        return self.transform(m.apply)

    def translate(self, dx: RationalLike = 0, dy: RationalLike = 0) -> 'ConvexPolygon':
        shift = (parse_rat(dx), parse_rat(dy))
        return self.transform(lambda p: add(p, shift))

    def subdivided_boundary(self, abscissas: Iterable[Fraction]) -> List[Point]:
        """Boundary cycle with the crossings of the given vertical lines inserted"""
        cuts = sorted(set(Fraction(x) for x in abscissas))
        cycle: List[Point] = []
        for a, b in self.edges():
            cycle.append(a)
            if a[0] == b[0]:
                continue
            inner = [x for x in cuts if min(a[0], b[0]) < x < max(a[0], b[0])]
            if a[0] > b[0]:
                inner.reverse()
            for x in inner:
                cycle.append((x, a[1] + (b[1] - a[1]) * (x - a[0]) / (b[0] - a[0])))
        return cycle

    # ----------------------------
    # SERIALIZATION
    # ----------------------------

    def to_json(self) -> List[List[str]]:
        return [point_to_json(v) for v in self.vertices]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[RationalLike]]) -> 'ConvexPolygon':
        return cls.from_vertices([point_from_json(v) for v in data])


def is_convex_cycle(cycle: Sequence[Point]) -> bool:
    """True when a boundary cycle turns left or goes straight at every point"""
    n = len(cycle)
    return all(cross(cycle[i - 1], cycle[i], cycle[(i + 1) % n]) >= 0 for i in range(n))
