//! Exact scalars, points, half-spaces and hyperplanes.
//!
//! Every geometric predicate in the crate is decided over [`Rational`], so
//! boundary coincidences (shared facets, touching endpoints) are exact.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{GeometryError, ParseError};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let bad = || ParseError::new(0, format!("invalid rational `{text}`"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(ParseError::new(0, format!("zero denominator in `{text}`")));
    }
    Ok(Rational::new(num, den))
}

pub(crate) fn half(x: &Rational) -> Rational {
    x / int(2)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point { coords }
    }

    pub fn xy(x: Rational, y: Rational) -> Self {
        Point { coords: vec![x, y] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn x(&self) -> &Rational {
        &self.coords[0]
    }

    pub fn y(&self) -> &Rational {
        &self.coords[1]
    }

    pub fn squared_distance(&self, other: &Point) -> Rational {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| {
                let d = a - b;
                &d * &d
            })
            .fold(Rational::zero(), |acc, v| acc + v)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Position of a point relative to a closed half-space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Interior,
    Boundary,
    Exterior,
}

/// The closed half-space `{x | normal·x <= offset}`.
///
/// Stored scaled so the first nonzero normal coordinate has absolute value 1;
/// with that, two half-spaces denote the same set iff they compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfSpace {
    normal: Vec<Rational>,
    offset: Rational,
}

impl HalfSpace {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Self, GeometryError> {
        if normal.is_empty() {
            return Err(GeometryError::ZeroDimension);
        }
        let lead = normal
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(GeometryError::ZeroNormal)?
            .abs();
        Ok(HalfSpace {
            normal: normal.iter().map(|c| c / &lead).collect(),
            offset: offset / lead,
        })
    }

    /// `a x + b y <= c`.
    pub fn planar(a: Rational, b: Rational, c: Rational) -> Result<Self, GeometryError> {
        HalfSpace::new(vec![a, b], c)
    }

    /// Shorthand for tests and examples: `a x + b y <= c` with integer data.
    pub fn le(a: i64, b: i64, c: i64) -> Self {
        HalfSpace::planar(int(a), int(b), int(c)).expect("nonzero normal")
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// `normal·p - offset`: negative inside, zero on the boundary.
    pub fn eval(&self, p: &Point) -> Rational {
        dot(&self.normal, p.coords()) - &self.offset
    }

    pub fn side_of(&self, p: &Point) -> Result<Side, GeometryError> {
        if p.dim() != self.dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim(),
                found: p.dim(),
            });
        }
        let v = self.eval(p);
        Ok(if v.is_negative() {
            Side::Interior
        } else if v.is_zero() {
            Side::Boundary
        } else {
            Side::Exterior
        })
    }

    pub fn contains(&self, p: &Point) -> bool {
        !self.eval(p).is_positive()
    }

    /// The complementary closed half-space `{x | normal·x >= offset}`.
    pub fn flip(&self) -> HalfSpace {
        HalfSpace {
            normal: self.normal.iter().map(|c| -c).collect(),
            offset: -&self.offset,
        }
    }

    pub fn boundary(&self) -> Hyperplane {
        Hyperplane::new(self.normal.clone(), self.offset.clone()).expect("canonical normal")
    }

    /// Positive rescaling; the canonical form is unchanged.
    pub fn scale(&self, q: &Rational) -> Result<HalfSpace, GeometryError> {
        assert!(q.is_positive(), "scale factor must be positive");
        HalfSpace::new(
            self.normal.iter().map(|c| c * q).collect(),
            &self.offset * q,
        )
    }
}

impl fmt::Display for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.normal {
            write!(f, "{c} ")?;
        }
        write!(f, "<= {}", self.offset)
    }
}

/// The hyperplane `{x | normal·x = offset}`, scaled so the first nonzero
/// normal coordinate is exactly 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    normal: Vec<Rational>,
    offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Self, GeometryError> {
        if normal.is_empty() {
            return Err(GeometryError::ZeroDimension);
        }
        let lead = normal
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(GeometryError::ZeroNormal)?
            .clone();
        Ok(Hyperplane {
            normal: normal.iter().map(|c| c / &lead).collect(),
            offset: offset / lead,
        })
    }

    /// The line `a x + b y = c`.
    pub fn line(a: Rational, b: Rational, c: Rational) -> Result<Self, GeometryError> {
        Hyperplane::new(vec![a, b], c)
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn eval(&self, p: &Point) -> Rational {
        dot(&self.normal, p.coords()) - &self.offset
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    /// The two closed sides: `normal·x <= offset` and `normal·x >= offset`.
    pub fn sides(&self) -> (HalfSpace, HalfSpace) {
        let lower =
            HalfSpace::new(self.normal.clone(), self.offset.clone()).expect("nonzero normal");
        let upper = lower.flip();
        (lower, upper)
    }

    pub fn is_parallel(&self, other: &Hyperplane) -> bool {
        self.normal == other.normal
    }

    /// A point on a line (`n = 2` only).
    pub(crate) fn base_point(&self) -> Point {
        let (a, b) = (&self.normal[0], &self.normal[1]);
        if !a.is_zero() {
            Point::xy(&self.offset / a, Rational::zero())
        } else {
            Point::xy(Rational::zero(), &self.offset / b)
        }
    }

    /// Direction vector `(-b, a)` of a line.
    pub(crate) fn direction(&self) -> (Rational, Rational) {
        (-&self.normal[1], self.normal[0].clone())
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.normal {
            write!(f, "{c} ")?;
        }
        write!(f, "= {}", self.offset)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineIntersection {
    Empty,
    Point(Point),
    Coincident,
}

/// Intersection of two lines in the plane.
pub fn intersect_lines(
    l1: &Hyperplane,
    l2: &Hyperplane,
) -> Result<LineIntersection, GeometryError> {
    for l in [l1, l2] {
        if l.dim() != 2 {
            return Err(GeometryError::NotPlanar(l.dim()));
        }
    }
    if l1 == l2 {
        return Ok(LineIntersection::Coincident);
    }
    if l1.is_parallel(l2) {
        return Ok(LineIntersection::Empty);
    }
    let (a1, b1, c1) = (&l1.normal[0], &l1.normal[1], &l1.offset);
    let (a2, b2, c2) = (&l2.normal[0], &l2.normal[1], &l2.offset);
    let det = a1 * b2 - a2 * b1;
    debug_assert!(!det.is_zero());
    let x = (c1 * b2 - c2 * b1) / &det;
    let y = (a1 * c2 - a2 * c1) / &det;
    Ok(LineIntersection::Point(Point::xy(x, y)))
}

/// Lower bound for the Euclidean distance from `p` to the line, using the
/// L1 norm of the normal (`|n|_2 <= |n|_1`). Stays rational.
pub(crate) fn distance_lower_bound(line: &Hyperplane, p: &Point) -> Rational {
    let l1 = line
        .normal
        .iter()
        .fold(Rational::zero(), |acc, c| acc + c.abs());
    line.eval(p).abs() / l1
}

/// Exact squared Euclidean distance from `p` to the hyperplane.
pub fn squared_distance_to(line: &Hyperplane, p: &Point) -> Rational {
    let v = line.eval(p);
    let nn = dot(&line.normal, &line.normal);
    &v * &v / nn
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn hs1(a: i64, c: i64) -> HalfSpace {
        HalfSpace::new(vec![int(a)], int(c)).unwrap()
    }

    #[test]
    fn side_of_examples() {
        let h = hs1(1, 0);
        assert_eq!(
            h.side_of(&Point::new(vec![int(-1)])).unwrap(),
            Side::Interior
        );
        assert_eq!(
            h.side_of(&Point::new(vec![int(0)])).unwrap(),
            Side::Boundary
        );
        let diag = HalfSpace::le(1, 1, 1);
        assert_eq!(
            diag.side_of(&Point::xy(int(1), int(1))).unwrap(),
            Side::Exterior
        );
    }

    #[test]
    fn side_of_rejects_dimension_mismatch() {
        let err = hs1(1, 0).side_of(&Point::xy(int(0), int(0))).unwrap_err();
        assert_eq!(
            err,
            GeometryError::DimensionMismatch {
                expected: 1,
                found: 2
            }
        );
    }

    #[test]
    fn flip_examples() {
        assert_eq!(hs1(1, 0).flip(), hs1(-1, 0));
        assert_eq!(HalfSpace::le(1, 1, 1).flip(), HalfSpace::le(-1, -1, -1));
    }

    #[test]
    fn zero_normal_rejected() {
        assert_eq!(
            HalfSpace::planar(int(0), int(0), int(1)).unwrap_err(),
            GeometryError::ZeroNormal
        );
    }

    #[test]
    fn canonical_scaling() {
        let a = HalfSpace::planar(int(-3), int(6), int(9)).unwrap();
        assert_eq!(a.normal(), &[int(-1), int(2)]);
        assert_eq!(a.offset(), &int(3));
        let line = Hyperplane::line(int(-2), int(4), int(2)).unwrap();
        assert_eq!(line, Hyperplane::line(int(1), int(-2), int(-1)).unwrap());
    }

    #[test]
    fn intersect_lines_examples() {
        let x0 = Hyperplane::line(int(1), int(0), int(0)).unwrap();
        let y0 = Hyperplane::line(int(0), int(1), int(0)).unwrap();
        let x1 = Hyperplane::line(int(1), int(0), int(1)).unwrap();
        assert_eq!(
            intersect_lines(&x0, &y0).unwrap(),
            LineIntersection::Point(Point::xy(int(0), int(0)))
        );
        assert_eq!(intersect_lines(&x0, &x1).unwrap(), LineIntersection::Empty);
        assert_eq!(
            intersect_lines(&x0, &x0).unwrap(),
            LineIntersection::Coincident
        );
        let plane = Hyperplane::new(vec![int(1), int(0), int(0)], int(0)).unwrap();
        assert_eq!(
            intersect_lines(&plane, &x0).unwrap_err(),
            GeometryError::NotPlanar(3)
        );
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-2/4").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn small() -> impl Strategy<Value = i64> {
        -20i64..=20
    }

    proptest! {
        // Independent check of rational addition through cross-multiplied
        // big integers.
        #[test]
        fn addition_matches_bigint_cross_multiplication(
            a in small(), b in 1i64..50, c in small(), d in 1i64..50
        ) {
            let sum = rat(a, b) + rat(c, d);
            let num = BigInt::from(a) * BigInt::from(d) + BigInt::from(c) * BigInt::from(b);
            let den = BigInt::from(b) * BigInt::from(d);
            prop_assert_eq!(sum.numer() * &den, num * sum.denom());
            prop_assert!(sum.denom() > &BigInt::from(0));
        }

        #[test]
        fn flip_is_involution_and_swaps_sides(
            a in small(), b in small(), c in small(), x in small(), y in small()
        ) {
            prop_assume!(a != 0 || b != 0);
            let h = HalfSpace::le(a, b, c);
            prop_assert_eq!(h.flip().flip(), h.clone());
            let p = Point::xy(int(x), int(y));
            let expected = match h.side_of(&p).unwrap() {
                Side::Interior => Side::Exterior,
                Side::Exterior => Side::Interior,
                Side::Boundary => Side::Boundary,
            };
            prop_assert_eq!(h.flip().side_of(&p).unwrap(), expected);
        }

        #[test]
        fn canonical_form_ignores_positive_scaling(
            a in small(), b in small(), c in small(), qn in 1i64..30, qd in 1i64..30
        ) {
            prop_assume!(a != 0 || b != 0);
            let h = HalfSpace::le(a, b, c);
            prop_assert_eq!(h.scale(&rat(qn, qd)).unwrap(), h.clone());
            let again = HalfSpace::new(h.normal().to_vec(), h.offset().clone()).unwrap();
            prop_assert_eq!(again, h);
        }
    }
}
