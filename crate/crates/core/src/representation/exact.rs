//! Exact rational plane primitives: points, orientation tests, segment
//! intersection classification, and the angular comparator. Everything is
//! BigRational; no tolerances anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Pt {
    pub x: Q,
    pub y: Q,
}

impl Pt {
    pub fn new(x: Q, y: Q) -> Self {
        Pt { x, y }
    }

    pub fn add(&self, v: &Pt) -> Pt {
        Pt::new(&self.x + &v.x, &self.y + &v.y)
    }

    pub fn sub(&self, v: &Pt) -> Pt {
        Pt::new(&self.x - &v.x, &self.y - &v.y)
    }

    pub fn scale(&self, s: &Q) -> Pt {
        Pt::new(&self.x * s, &self.y * s)
    }

    /// Counterclockwise quarter turn.
    pub fn rot90(&self) -> Pt {
        Pt::new(-self.y.clone(), self.x.clone())
    }

    pub fn cross(&self, o: &Pt) -> Q {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn dot(&self, o: &Pt) -> Q {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn l1(&self) -> Q {
        self.x.abs() + self.y.abs()
    }

    pub fn linf(&self) -> Q {
        self.x.abs().max(self.y.abs())
    }

    pub fn norm_sq(&self) -> Q {
        self.dot(self)
    }

    pub fn lerp(&self, o: &Pt, t: &Q) -> Pt {
        Pt::new(
            &self.x + (&o.x - &self.x) * t,
            &self.y + (&o.y - &self.y) * t,
        )
    }
}

/// Sign of the cross product (b - a) x (c - a): positive for a left turn.
pub fn orient(a: &Pt, b: &Pt, c: &Pt) -> i8 {
    let v = b.sub(a).cross(&c.sub(a));
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Is p on the closed segment [a, b]?
pub fn on_segment(a: &Pt, b: &Pt, p: &Pt) -> bool {
    if orient(a, b, p) != 0 {
        return false;
    }
    let d = b.sub(a);
    let t = p.sub(a).dot(&d);
    !t.is_negative() && t <= d.norm_sq()
}

/// Strict angular comparison of nonzero direction vectors, counterclockwise
/// from the positive x-axis.
pub fn angle_cmp(a: &Pt, b: &Pt) -> std::cmp::Ordering {
    let half = |v: &Pt| -> u8 {
        // 0: upper half including positive x-axis; 1: lower including
        // negative x-axis
        if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
            0
        } else {
            1
        }
    };
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    let c = a.cross(b);
    if c.is_positive() {
        std::cmp::Ordering::Less
    } else if c.is_negative() {
        std::cmp::Ordering::Greater
    } else {
        std::cmp::Ordering::Equal
    }
}

/// Is direction x strictly inside the counterclockwise cone from a to b?
pub fn ccw_between(a: &Pt, x: &Pt, b: &Pt) -> bool {
    let ccw = |p: &Pt, q: &Pt| p.cross(q).is_positive();
    if ccw(a, b) {
        ccw(a, x) && ccw(x, b)
    } else {
        ccw(a, x) || ccw(x, b)
    }
}

/// How two closed segments meet.
#[derive(Clone, Debug, PartialEq)]
pub enum SegMeet {
    None,
    /// A single common point.
    Point(Pt),
    /// A common sub-segment of positive length.
    Overlap,
}

/// Exact intersection of segments [a, b] and [c, d].
pub fn seg_intersect(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> SegMeet {
    if a == b {
        return if on_segment(c, d, a) { SegMeet::Point(a.clone()) } else { SegMeet::None };
    }
    if c == d {
        return if on_segment(a, b, c) { SegMeet::Point(c.clone()) } else { SegMeet::None };
    }
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);

    if d1 == 0 && d2 == 0 {
        // collinear: compare intervals along the dominant axis
        let dir = b.sub(a);
        let key = |p: &Pt| -> Q {
            if dir.x.abs() >= dir.y.abs() {
                p.x.clone()
            } else {
                p.y.clone()
            }
        };
        let (mut s1, mut e1) = (key(a), key(b));
        if s1 > e1 {
            std::mem::swap(&mut s1, &mut e1);
        }
        let (mut s2, mut e2) = (key(c), key(d));
        if s2 > e2 {
            std::mem::swap(&mut s2, &mut e2);
        }
        let lo = s1.max(s2);
        let hi = e1.min(e2);
        return match lo.cmp(&hi) {
            std::cmp::Ordering::Greater => SegMeet::None,
            std::cmp::Ordering::Equal => {
                for p in [a, b, c, d] {
                    if key(p) == lo && on_segment(a, b, p) && on_segment(c, d, p) {
                        return SegMeet::Point(p.clone());
                    }
                }
                unreachable!("collinear single point must be an endpoint")
            }
            std::cmp::Ordering::Less => SegMeet::Overlap,
        };
    }

    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if d1 * d2 <= 0 && d3 * d4 <= 0 {
        // unique intersection point; the segments are not parallel here,
        // because parallel non-collinear segments keep a and b strictly on
        // one side of line(c, d)
        let r = b.sub(a);
        let s = d.sub(c);
        let denom = r.cross(&s);
        debug_assert!(!denom.is_zero());
        let t = c.sub(a).cross(&s) / denom;
        debug_assert!(t >= Q::zero() && t <= Q::one());
        return SegMeet::Point(a.lerp(b, &t));
    }
    SegMeet::None
}

/// Squared distance from a point to a closed segment.
pub fn point_seg_dist_sq(p: &Pt, a: &Pt, b: &Pt) -> Q {
    let ab = b.sub(a);
    let denom = ab.norm_sq();
    if denom.is_zero() {
        return p.sub(a).norm_sq();
    }
    let t = p.sub(a).dot(&ab) / &denom;
    let t = t.max(Q::zero()).min(Q::one());
    p.sub(&a.lerp(b, &t)).norm_sq()
}

/// Squared distance between two closed segments.
pub fn seg_seg_dist_sq(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> Q {
    if seg_intersect(a, b, c, d) != SegMeet::None {
        return Q::zero();
    }
    point_seg_dist_sq(a, c, d)
        .min(point_seg_dist_sq(b, c, d))
        .min(point_seg_dist_sq(c, a, b))
        .min(point_seg_dist_sq(d, a, b))
}

/// A rational lower bound on sqrt(s): min(s, 1) works because sqrt(s) >= s
/// for s <= 1 and sqrt(s) >= 1 otherwise.
pub fn sqrt_lower_bound(s: &Q) -> Q {
    s.clone().min(Q::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Pt {
        Pt::new(q(x), q(y))
    }

    #[test]
    fn orientation_and_on_segment() {
        assert_eq!(orient(&p(0, 0), &p(2, 0), &p(1, 1)), 1);
        assert_eq!(orient(&p(0, 0), &p(2, 0), &p(1, -1)), -1);
        assert_eq!(orient(&p(0, 0), &p(2, 0), &p(3, 0)), 0);
        assert!(on_segment(&p(0, 0), &p(4, 4), &p(1, 1)));
        assert!(!on_segment(&p(0, 0), &p(4, 4), &p(5, 5)));
    }

    #[test]
    fn crossing_touching_overlap() {
        // proper crossing
        match seg_intersect(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)) {
            SegMeet::Point(pt) => assert_eq!(pt, Pt::new(q(1), q(1))),
            other => panic!("{other:?}"),
        }
        // endpoint touch
        match seg_intersect(&p(0, 0), &p(1, 1), &p(1, 1), &p(2, 0)) {
            SegMeet::Point(pt) => assert_eq!(pt, p(1, 1)),
            other => panic!("{other:?}"),
        }
        // T-touch
        match seg_intersect(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 5)) {
            SegMeet::Point(pt) => assert_eq!(pt, p(1, 0)),
            other => panic!("{other:?}"),
        }
        // disjoint
        assert_eq!(seg_intersect(&p(0, 0), &p(1, 0), &p(0, 1), &p(1, 1)), SegMeet::None);
        // collinear overlap
        assert_eq!(seg_intersect(&p(0, 0), &p(3, 0), &p(1, 0), &p(5, 0)), SegMeet::Overlap);
        // collinear single-point
        match seg_intersect(&p(0, 0), &p(1, 0), &p(1, 0), &p(4, 0)) {
            SegMeet::Point(pt) => assert_eq!(pt, p(1, 0)),
            other => panic!("{other:?}"),
        }
        // parallel disjoint
        assert_eq!(seg_intersect(&p(0, 0), &p(2, 0), &p(0, 1), &p(2, 1)), SegMeet::None);
    }

    #[test]
    fn angles() {
        let dirs = [p(1, 0), p(2, 1), p(0, 1), p(-1, 1), p(-1, 0), p(-1, -1), p(0, -1), p(1, -1)];
        for w in dirs.windows(2) {
            assert_eq!(angle_cmp(&w[0], &w[1]), std::cmp::Ordering::Less);
        }
        assert!(ccw_between(&p(1, 0), &p(1, 1), &p(0, 1)));
        assert!(!ccw_between(&p(1, 0), &p(1, -1), &p(0, 1)));
        // reflex cone
        assert!(ccw_between(&p(0, 1), &p(0, -1), &p(1, 0)));
        assert!(ccw_between(&p(0, 1), &p(-1, 0), &p(1, 0)));
        assert!(!ccw_between(&p(0, 1), &p(1, 1), &p(1, 0)));
    }

    #[test]
    fn distances() {
        assert_eq!(point_seg_dist_sq(&p(0, 2), &p(-1, 0), &p(1, 0)), q(4));
        assert_eq!(point_seg_dist_sq(&p(3, 0), &p(-1, 0), &p(1, 0)), q(4));
        assert_eq!(seg_seg_dist_sq(&p(0, 1), &p(2, 1), &p(0, 0), &p(2, 0)), q(1));
        assert!(seg_seg_dist_sq(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)).is_zero());
    }
}
