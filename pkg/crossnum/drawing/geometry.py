"""
Exact segment predicates over rationals.

Coordinates are ints or Fractions; no predicate uses a tolerance.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

Number = Union[int, Fraction]
Point = Tuple[Number, Number]
ExactPoint = Tuple[Fraction, Fraction]


def exact(p: Point) -> ExactPoint:
    return Fraction(p[0]), Fraction(p[1])


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """z-component of (a - o) x (b - o)"""
    return Fraction((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]))


def orientation(o: Point, a: Point, b: Point) -> int:
    value = cross(o, a, b)
    return (value > 0) - (value < 0)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """p lies on the closed segment ab"""
    if orientation(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segment_intersection(
    a: Point, b: Point, c: Point, d: Point
) -> Optional[Union[ExactPoint, Tuple[ExactPoint, ExactPoint]]]:
    """
    Intersection of closed segments ab and cd.

    Returns:
        None when disjoint, a point for a single common point, or the pair of
        end points of the shared piece when collinear segments overlap
    """
    o1, o2 = orientation(a, b, c), orientation(a, b, d)
    o3, o4 = orientation(c, d, a), orientation(c, d, b)

    if o1 == o2 == o3 == o4 == 0:
        return _collinear_overlap(a, b, c, d)

    if o1 * o2 <= 0 and o3 * o4 <= 0:
        if o1 == 0 and on_segment(c, a, b):
            return exact(c)
        if o2 == 0 and on_segment(d, a, b):
            return exact(d)
        if o3 == 0 and on_segment(a, c, d):
            return exact(a)
        if o4 == 0 and on_segment(b, c, d):
            return exact(b)
        if 0 in (o1, o2, o3, o4):
            return None
        return line_intersection(a, b, c, d)
    return None


def line_intersection(a: Point, b: Point, c: Point, d: Point) -> ExactPoint:
    """Meeting point of the non-parallel lines ab and cd"""
    denominator = Fraction((b[0] - a[0]) * (d[1] - c[1]) - (b[1] - a[1]) * (d[0] - c[0]))
    if not denominator:
        raise ZeroDivisionError("lines are parallel")
    # a + t (b - a)
    t = Fraction((c[0] - a[0]) * (d[1] - c[1]) - (c[1] - a[1]) * (d[0] - c[0])) / denominator
    return Fraction(a[0]) + t * (b[0] - a[0]), Fraction(a[1]) + t * (b[1] - a[1])


def _collinear_overlap(a: Point, b: Point, c: Point, d: Point):
    # points of one line are ordered lexicographically along it
    first = sorted((exact(a), exact(b)))
    second = sorted((exact(c), exact(d)))
    low = max(first[0], second[0])
    high = min(first[1], second[1])
    if low > high:
        return None
    if low == high:
        return low
    return low, high


def segments(polyline: Sequence[Point]) -> List[Tuple[Point, Point]]:
    return list(zip(polyline, polyline[1:]))
