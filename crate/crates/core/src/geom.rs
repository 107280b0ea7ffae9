//! Exact rational points and predicates. Coordinates are `Ratio<i64>`;
//! products are formed in `i128`, so no predicate ever rounds.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Q = Ratio<i64>;
type Wide = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Q,
    pub y: Q,
}

impl Point {
    pub fn new(x: Q, y: Q) -> Point {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Point {
        Point { x: Q::from_integer(x), y: Q::from_integer(y) }
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn wide(q: Q) -> Wide {
    Wide::new_raw(*q.numer() as i128, *q.denom() as i128)
}

/// Sign of the cross product (b - a) x (c - a): `Greater` for a left turn.
pub fn orient(a: Point, b: Point, c: Point) -> Ordering {
    if a.x.is_integer() && a.y.is_integer() && b.is_integral() && c.is_integral() {
        let (ax, ay) = (a.x.to_integer() as i128, a.y.to_integer() as i128);
        let (bx, by) = (b.x.to_integer() as i128, b.y.to_integer() as i128);
        let (cx, cy) = (c.x.to_integer() as i128, c.y.to_integer() as i128);
        return ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax)).cmp(&0);
    }
    let (ax, ay, bx, by, cx, cy) = (wide(a.x), wide(a.y), wide(b.x), wide(b.y), wide(c.x), wide(c.y));
    let v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    if v.is_zero() {
        Ordering::Equal
    } else if v.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// `p` lies on the closed segment `ab`, given that it is collinear with it.
fn within_box(p: Point, a: Point, b: Point) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

pub fn on_segment(p: Point, a: Point, b: Point) -> bool {
    orient(a, b, p) == Ordering::Equal && within_box(p, a, b)
}

/// `p` lies on segment `ab` but is neither endpoint.
pub fn in_relative_interior(p: Point, a: Point, b: Point) -> bool {
    p != a && p != b && on_segment(p, a, b)
}

/// Closed segments `ab` and `cd` share at least one point.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 != o2 && o3 != o4 && o1 != Ordering::Equal && o2 != Ordering::Equal
        && o3 != Ordering::Equal && o4 != Ordering::Equal
    {
        return true;
    }
    (o1 == Ordering::Equal && within_box(c, a, b))
        || (o2 == Ordering::Equal && within_box(d, a, b))
        || (o3 == Ordering::Equal && within_box(a, c, d))
        || (o4 == Ordering::Equal && within_box(b, c, d))
        || (o1 != o2 && o3 != o4)
}

/// Two segments that share the endpoint `p` meet somewhere else.
pub fn overlap_beyond_shared(p: Point, a: Point, b: Point) -> bool {
    // a, b are the far endpoints; they overlap iff collinear and on the same side.
    if orient(p, a, b) != Ordering::Equal {
        return false;
    }
    let dx1 = a.x - p.x;
    let dy1 = a.y - p.y;
    let dx2 = b.x - p.x;
    let dy2 = b.y - p.y;
    wide(dx1) * wide(dx2) + wide(dy1) * wide(dy2) > Wide::zero()
}

/// Open axis-parallel rectangle spanned by two points contains `p`.
pub fn in_open_rect(p: Point, a: Point, b: Point) -> bool {
    p.x > a.x.min(b.x) && p.x < a.x.max(b.x) && p.y > a.y.min(b.y) && p.y < a.y.max(b.y)
}

/// Slope of `ab`, `None` for vertical segments.
pub fn slope(a: Point, b: Point) -> Option<Q> {
    if a.x == b.x {
        None
    } else {
        Some((b.y - a.y) / (b.x - a.x))
    }
}

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn one() -> Q {
    Q::one()
}

/// `"p/q"` for non-integers, the integer otherwise.
pub fn format_q(v: Q) -> String {
    if v.is_integer() {
        v.to_integer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: i64 = d.trim().parse().ok()?;
            if d == 0 {
                return None;
            }
            Some(Q::new(n.trim().parse().ok()?, d))
        }
        None => Some(Q::from_integer(s.trim().parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_signs() {
        let (a, b) = (Point::int(0, 0), Point::int(4, 0));
        assert_eq!(orient(a, b, Point::int(1, 1)), Ordering::Greater);
        assert_eq!(orient(a, b, Point::int(1, -1)), Ordering::Less);
        assert_eq!(orient(a, b, Point::int(9, 0)), Ordering::Equal);
        let h = Point::new(q(1, 3), q(1, 3));
        assert_eq!(orient(Point::int(0, 0), Point::int(1, 1), h), Ordering::Equal);
    }

    #[test]
    fn touching_counts_as_intersection() {
        let (a, b) = (Point::int(0, 0), Point::int(2, 2));
        assert!(segments_intersect(a, b, Point::int(1, 1), Point::int(3, 0)));
        assert!(!segments_intersect(a, b, Point::int(2, 0), Point::int(3, 0)));
        assert!(segments_intersect(a, b, Point::int(1, 1), Point::int(3, 3)));
        assert!(!segments_intersect(a, b, Point::int(3, 3), Point::int(4, 4)));
    }

    #[test]
    fn shared_endpoint_overlap() {
        let p = Point::int(0, 0);
        assert!(overlap_beyond_shared(p, Point::int(2, 2), Point::int(1, 1)));
        assert!(!overlap_beyond_shared(p, Point::int(2, 2), Point::int(-1, -1)));
        assert!(!overlap_beyond_shared(p, Point::int(2, 2), Point::int(1, 0)));
    }

    #[test]
    fn rational_round_trip() {
        assert_eq!(format_q(q(5, 2)), "5/2");
        assert_eq!(format_q(q(4, 2)), "2");
        assert_eq!(parse_q("5/2"), Some(q(5, 2)));
        assert_eq!(parse_q("7"), Some(q(7, 1)));
        assert_eq!(parse_q("1/0"), None);
    }
}
