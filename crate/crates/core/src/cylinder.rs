//! Cylinders `A × R^(n-1)` over polytopes of the line. Every operation acts
//! on the base.

use std::fmt;
use std::str::FromStr;

use crate::error::{GeometryError, ParseError};
use crate::interval::{parse_interval_polytope, IntervalPolytope};
use crate::numeric::{half, Point, Rational};
use crate::text::Cursor;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CylinderPolytope {
    base: IntervalPolytope,
    dim: usize,
}

/// Open slab `(lo, hi) × R^(n-1)`, a strong-contact witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlabWitness {
    pub lo: Rational,
    pub hi: Rational,
    pub dim: usize,
}

impl SlabWitness {
    /// The open ball with centre `((lo+hi)/2, 0, ..., 0)` and radius
    /// `(hi-lo)/2`, which lies inside the slab.
    pub fn ball(&self) -> (Point, Rational) {
        let mut coords = vec![Rational::default(); self.dim];
        coords[0] = half(&(&self.lo + &self.hi));
        (Point::new(coords), half(&(&self.hi - &self.lo)))
    }
}

impl CylinderPolytope {
    pub fn lift(base: IntervalPolytope, dim: usize) -> Result<Self, GeometryError> {
        if dim == 0 {
            return Err(GeometryError::ZeroDimension);
        }
        Ok(CylinderPolytope { base, dim })
    }

    pub fn base(&self) -> &IntervalPolytope {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.base.is_whole()
    }

    fn same_dim(&self, other: &Self) -> Result<(), GeometryError> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(GeometryError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            })
        }
    }

    fn with_base(&self, base: IntervalPolytope) -> Self {
        CylinderPolytope {
            base,
            dim: self.dim,
        }
    }

    pub fn complement(&self) -> Self {
        self.with_base(self.base.complement())
    }

    pub fn union(&self, other: &Self) -> Result<Self, GeometryError> {
        self.same_dim(other)?;
        Ok(self.with_base(self.base.union(&other.base)))
    }

    pub fn reg_meet(&self, other: &Self) -> Result<Self, GeometryError> {
        self.same_dim(other)?;
        Ok(self.with_base(self.base.reg_meet(&other.base)))
    }

    pub fn contact_c(&self, other: &Self) -> Result<bool, GeometryError> {
        self.same_dim(other)?;
        Ok(self.base.contact_c(&other.base))
    }

    pub fn contact_sc(&self, other: &Self) -> Result<bool, GeometryError> {
        self.same_dim(other)?;
        Ok(self.base.contact_sc(&other.base))
    }

    pub fn overlap(&self, other: &Self) -> Result<bool, GeometryError> {
        self.same_dim(other)?;
        Ok(self.base.overlap(&other.base))
    }

    pub fn sc_witness(&self, other: &Self) -> Result<Option<SlabWitness>, GeometryError> {
        self.same_dim(other)?;
        Ok(self
            .base
            .sc_witness(&other.base)
            .map(|(lo, hi)| SlabWitness {
                lo,
                hi,
                dim: self.dim,
            }))
    }

    pub fn contains(&self, p: &Point) -> Result<bool, GeometryError> {
        if p.dim() != self.dim {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim,
                found: p.dim(),
            });
        }
        Ok(self.base.contains(&p.coords()[0]))
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(text);
        let c = parse_cylinder(&mut cur)?;
        cur.finish()?;
        Ok(c)
    }
}

pub(crate) fn parse_cylinder(cur: &mut Cursor<'_>) -> Result<CylinderPolytope, ParseError> {
    if !cur.keyword("cyl") {
        return Err(cur.error("expected `cyl`"));
    }
    if !cur.keyword("n") {
        return Err(cur.error("expected `n=`"));
    }
    cur.expect("=")?;
    let at = cur.pos();
    let dim = cur.unsigned()?;
    cur.expect("{")?;
    let base = parse_interval_polytope(cur)?;
    cur.expect("}")?;
    CylinderPolytope::lift(base, dim).map_err(|e| ParseError::new(at, e.to_string()))
}

impl FromStr for CylinderPolytope {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CylinderPolytope::parse(s)
    }
}

impl fmt::Display for CylinderPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cyl n={} {{ {} }}", self.dim, self.base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};

    fn cyl(s: &str, n: usize) -> CylinderPolytope {
        CylinderPolytope::lift(s.parse().unwrap(), n).unwrap()
    }

    #[test]
    fn touching_slabs_are_in_strong_contact() {
        let (a, b) = (cyl("[0,1]", 3), cyl("[1,2]", 3));
        assert!(a.contact_sc(&b).unwrap());
        assert!(!a.overlap(&b).unwrap());
        let w = a.sc_witness(&b).unwrap().unwrap();
        let (centre, r) = w.ball();
        assert_eq!(centre, Point::new(vec![int(1), int(0), int(0)]));
        assert_eq!(r, rat(1, 2));
    }

    #[test]
    fn complement_commutes_with_lifting() {
        let p: IntervalPolytope = "(-inf,0]; [2,3]".parse().unwrap();
        let lifted = CylinderPolytope::lift(p.clone(), 4).unwrap();
        assert_eq!(
            lifted.complement(),
            CylinderPolytope::lift(p.complement(), 4).unwrap()
        );
    }

    #[test]
    fn dimension_mismatch() {
        let err = cyl("[0,1]", 2).union(&cyl("[0,1]", 3)).unwrap_err();
        assert_eq!(
            err,
            GeometryError::DimensionMismatch {
                expected: 2,
                found: 3
            }
        );
        assert!(cyl("[0,1]", 2).contact_sc(&cyl("[1,2]", 1)).is_err());
        assert_eq!(
            CylinderPolytope::lift(IntervalPolytope::empty(), 0).unwrap_err(),
            GeometryError::ZeroDimension
        );
    }

    #[test]
    fn text_round_trip() {
        let c = cyl("(-inf,1]; [2,inf)", 3);
        assert_eq!(c.to_string(), "cyl n=3 { (-inf,1]; [2,inf) }");
        assert_eq!(CylinderPolytope::parse(&c.to_string()).unwrap(), c);
        assert!(CylinderPolytope::parse("cyl n=0 { all }").is_err());
    }

    #[test]
    fn membership_uses_first_coordinate() {
        let c = cyl("[0,1]", 2);
        assert!(c.contains(&Point::xy(rat(1, 2), int(100))).unwrap());
        assert!(!c.contains(&Point::xy(int(2), int(0))).unwrap());
    }
}
