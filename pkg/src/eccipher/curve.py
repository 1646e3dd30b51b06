"""Short Weierstrass curves y^2 = x^3 + ax + b over Z_p and their group law."""

from __future__ import annotations

from .field import FieldElement, Prime, inv_mod

# Point enumeration walks every x in [0, p); refuse moduli past this.
ENUMERATION_LIMIT = 1 << 20


class SingularCurveError(ValueError):
    """Curve parameters with zero discriminant (4a^3 + 27b^2 = 0 mod p)."""


class PointNotOnCurveError(ValueError):
    """Coordinates that do not satisfy the curve equation."""


class CurveTooLargeError(ValueError):
    """Modulus too large for exhaustive point enumeration."""


class Curve:
    """The group of points of y^2 = x^3 + ax + b over Z_p, p > 3 prime.

    The number of points (including infinity) is unknown until
    enumerate_points() has run once; it is then cached on the curve.
    Instances are immutable apart from that one idempotent cache write,
    and all point operations are pure, so curves and points can be shared
    freely across threads.
    """

    __slots__ = ("p", "a", "b", "_order")

    def __init__(self, p, a, b):
        self.p = p if isinstance(p, Prime) else Prime(p)
        self.a = self._element(a)
        self.b = self._element(b)
        if 4 * self.a ** 3 + 27 * self.b ** 2 == 0:
            raise SingularCurveError(
                f"4a^3 + 27b^2 = 0 mod {self.p}: curve is singular"
            )
        self._order = None

    def _element(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.modulus != self.p:
                raise ValueError(f"value has modulus {value.modulus}, curve has {self.p}")
            return value
        return FieldElement(value, self.p)

    @property
    def order(self) -> int | None:
        """Number of points including infinity, or None if not yet counted."""
        return self._order

    def is_on_curve(self, x: int, y: int) -> bool:
        p = int(self.p)
        return (y * y - (x * x * x + self.a.residue * x + self.b.residue)) % p == 0

    def contains(self, point: Point) -> bool:
        """True iff the point is infinity or satisfies this curve's equation."""
        if point.is_infinity:
            return True
        return self.is_on_curve(point.x.residue, point.y.residue)

    def point(self, x, y) -> Point:
        return Point(self, x, y)

    def infinity(self) -> Point:
        return Point(self)

    def enumerate_points(self) -> list[Point]:
        """All points: infinity first, then ascending x, each root pair in turn.

        Also caches the group order on the curve.  Refuses p > 2**20.
        """
        if self.p > ENUMERATION_LIMIT:
            raise CurveTooLargeError(
                f"p = {self.p} exceeds enumeration limit 2**20"
            )
        points = [self.infinity()]
        a, b, p = self.a.residue, self.b.residue, int(self.p)
        for x in range(p):
            rhs = FieldElement(x * x * x + a * x + b, self.p)
            roots = rhs.sqrt()
            if roots is None:
                continue
            for root in roots:
                points.append(Point._unchecked(self, x, root.residue))
        self._order = len(points)
        return points

    def order_of(self, point: Point) -> int:
        """Order of a point: the least m > 0 with m*point = infinity.

        Requires the group order, i.e. enumerate_points() must have run;
        the answer is found by trial over the group order's divisors.
        """
        n = self._order
        if n is None:
            raise ValueError("group order unknown: call enumerate_points() first")
        if point.curve != self:
            raise ValueError("point belongs to a different curve")
        for d in _divisors(n):
            if (d * point).is_infinity:
                return d
        raise AssertionError("point order must divide the group order")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Curve):
            return NotImplemented
        return (
            int(self.p) == int(other.p)
            and self.a.residue == other.a.residue
            and self.b.residue == other.b.residue
        )

    def __hash__(self) -> int:
        return hash((int(self.p), self.a.residue, self.b.residue))

    def __repr__(self) -> str:
        return f"Curve(p={int(self.p)}, a={self.a.residue}, b={self.b.residue})"


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


class Point:
    """A curve point: affine coordinates, or the identity (infinity).

    Point(curve) builds infinity; Point(curve, x, y) validates the
    coordinates against the curve equation.  Group operations are the
    usual chord-and-tangent law:

        P + Q     point addition (doubling when P == Q)
        -P, P - Q negation and subtraction
        k * P     scalar multiplication by a non-negative int
    """

    __slots__ = ("curve", "x", "y")

    def __init__(self, curve: Curve, x=None, y=None):
        if (x is None) != (y is None):
            raise ValueError("give both coordinates, or neither for infinity")
        self.curve = curve
        if x is None:
            self.x = None
            self.y = None
            return
        x = curve._element(x)
        y = curve._element(y)
        if not curve.is_on_curve(x.residue, y.residue):
            raise PointNotOnCurveError(
                f"({x.residue},{y.residue}) is not on {curve!r}"
            )
        self.x = x
        self.y = y

    @classmethod
    def _unchecked(cls, curve: Curve, x: int, y: int) -> Point:
        # Fast path for coordinates already known to satisfy the equation.
        pt = object.__new__(cls)
        pt.curve = curve
        pt.x = FieldElement(x, curve.p)
        pt.y = FieldElement(y, curve.p)
        return pt

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self) -> Point:
        if self.is_infinity:
            return self
        return Point._unchecked(self.curve, self.x.residue, -self.y.residue % self.curve.p)

    def __add__(self, other: Point) -> Point:
        if not isinstance(other, Point):
            return NotImplemented
        if other.curve != self.curve:
            raise ValueError("cannot add points of different curves")
        if self.is_infinity:
            return other
        if other.is_infinity:
            return self
        p = int(self.curve.p)
        x1, y1 = self.x.residue, self.y.residue
        x2, y2 = other.x.residue, other.y.residue
        if x1 == x2:
            if (y1 + y2) % p == 0:
                # Mutual negatives, including doubling a point with y = 0
                # where the tangent is vertical.
                return Point(self.curve)
            slope = (3 * x1 * x1 + self.curve.a.residue) * inv_mod(2 * y1, p) % p
        else:
            slope = (y2 - y1) * inv_mod(x2 - x1, p) % p
        x3 = (slope * slope - x1 - x2) % p
        y3 = (slope * (x1 - x3) - y1) % p
        return Point._unchecked(self.curve, x3, y3)

    def __sub__(self, other: Point) -> Point:
        if not isinstance(other, Point):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, k: int) -> Point:
        """k * P by double-and-add; k is reduced mod the group order if known."""
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("scalar must be non-negative")
        n = self.curve.order
        if n is not None:
            k %= n
        result = Point(self.curve)
        addend = self
        while k:
            if k & 1:
                result = result + addend
            addend = addend + addend
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        if self.curve != other.curve:
            return False
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        coords = None if self.is_infinity else (self.x.residue, self.y.residue)
        return hash((int(self.curve.p), coords))

    def __str__(self) -> str:
        if self.is_infinity:
            return "inf"
        return f"({self.x.residue},{self.y.residue})"

    def __repr__(self) -> str:
        return f"Point[{self}] on {self.curve!r}"
