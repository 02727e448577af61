//! Contact algebras: a Boolean algebra with a binary contact predicate.
//!
//! Carriers: [`FiniteContactAlgebra`] (all subsets of the cells of an
//! adjacency space) and [`PolytopeAlgebra`] over interval, plane or
//! cylinder polytopes with strong or topological contact.

mod audit;
mod finite;
mod merge;

use std::fmt;

use crate::cylinder::CylinderPolytope;
use crate::interval::IntervalPolytope;
use crate::plane::PlanePolytope;

pub use audit::{
    audit_axioms, audit_exhaustive, audit_sampled, connectedness_witness, is_connected_algebra,
    AuditOptions, AuditReport, AxiomResult,
};
pub use finite::{induced_algebra, CellSet, FiniteContactAlgebra};
pub use merge::{merge, Embedding, MergeCheck, MergeOptions, MergeReport};

pub trait ContactAlgebra: Sync {
    type Element: Clone + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;
    fn complement(&self, a: &Self::Element) -> Self::Element;
    fn join(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn equal(&self, a: &Self::Element, b: &Self::Element) -> bool;
    fn contact(&self, a: &Self::Element, b: &Self::Element) -> bool;

    /// `-(-a + -b)`.
    fn meet(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.complement(&self.join(&self.complement(a), &self.complement(b)))
    }

    fn is_zero(&self, a: &Self::Element) -> bool {
        self.equal(a, &self.zero())
    }

    fn is_one(&self, a: &Self::Element) -> bool {
        self.equal(a, &self.one())
    }

    /// `a <= b` iff `a + b = b`.
    fn le(&self, a: &Self::Element, b: &Self::Element) -> bool {
        self.equal(&self.join(a, b), b)
    }

    fn describe(&self, a: &Self::Element) -> String {
        format!("{a:?}")
    }
}

/// Which contact relation a polytope algebra uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContactKind {
    /// Strong contact.
    Strong,
    /// Topological contact: nonempty intersection.
    Topological,
}

/// Operations shared by the polytope types.
pub trait Region: Clone + fmt::Debug + fmt::Display + Send + Sync {
    fn complement(&self) -> Self;
    fn union(&self, other: &Self) -> Self;
    fn reg_meet(&self, other: &Self) -> Self;
    fn is_empty(&self) -> bool;
    /// Set equality.
    fn same(&self, other: &Self) -> bool;
    fn contact_c(&self, other: &Self) -> bool;
    fn contact_sc(&self, other: &Self) -> bool;
    fn overlap(&self, other: &Self) -> bool;
}

impl Region for IntervalPolytope {
    fn complement(&self) -> Self {
        IntervalPolytope::complement(self)
    }
    fn union(&self, other: &Self) -> Self {
        IntervalPolytope::union(self, other)
    }
    fn reg_meet(&self, other: &Self) -> Self {
        IntervalPolytope::reg_meet(self, other)
    }
    fn is_empty(&self) -> bool {
        IntervalPolytope::is_empty(self)
    }
    fn same(&self, other: &Self) -> bool {
        self == other
    }
    fn contact_c(&self, other: &Self) -> bool {
        IntervalPolytope::contact_c(self, other)
    }
    fn contact_sc(&self, other: &Self) -> bool {
        IntervalPolytope::contact_sc(self, other)
    }
    fn overlap(&self, other: &Self) -> bool {
        IntervalPolytope::overlap(self, other)
    }
}

impl Region for PlanePolytope {
    fn complement(&self) -> Self {
        PlanePolytope::complement(self)
    }
    fn union(&self, other: &Self) -> Self {
        PlanePolytope::union(self, other)
    }
    fn reg_meet(&self, other: &Self) -> Self {
        PlanePolytope::reg_meet(self, other)
    }
    fn is_empty(&self) -> bool {
        PlanePolytope::is_empty(self)
    }
    fn same(&self, other: &Self) -> bool {
        self.equals(other)
    }
    fn contact_c(&self, other: &Self) -> bool {
        PlanePolytope::contact_c(self, other)
    }
    fn contact_sc(&self, other: &Self) -> bool {
        PlanePolytope::contact_sc(self, other)
    }
    fn overlap(&self, other: &Self) -> bool {
        PlanePolytope::overlap(self, other)
    }
}

// Inside one algebra all cylinders share a dimension, so the mismatch
// errors cannot occur.
const SAME_DIM: &str = "cylinders of one algebra share their dimension";

impl Region for CylinderPolytope {
    fn complement(&self) -> Self {
        CylinderPolytope::complement(self)
    }
    fn union(&self, other: &Self) -> Self {
        CylinderPolytope::union(self, other).expect(SAME_DIM)
    }
    fn reg_meet(&self, other: &Self) -> Self {
        CylinderPolytope::reg_meet(self, other).expect(SAME_DIM)
    }
    fn is_empty(&self) -> bool {
        CylinderPolytope::is_empty(self)
    }
    fn same(&self, other: &Self) -> bool {
        self == other
    }
    fn contact_c(&self, other: &Self) -> bool {
        CylinderPolytope::contact_c(self, other).expect(SAME_DIM)
    }
    fn contact_sc(&self, other: &Self) -> bool {
        CylinderPolytope::contact_sc(self, other).expect(SAME_DIM)
    }
    fn overlap(&self, other: &Self) -> bool {
        CylinderPolytope::overlap(self, other).expect(SAME_DIM)
    }
}

/// The Boolean algebra of polytopes of one kind with a chosen contact.
#[derive(Debug, Clone)]
pub struct PolytopeAlgebra<R> {
    kind: ContactKind,
    zero: R,
    one: R,
}

impl<R: Region> PolytopeAlgebra<R> {
    pub fn kind(&self) -> ContactKind {
        self.kind
    }
}

impl PolytopeAlgebra<IntervalPolytope> {
    pub fn interval(kind: ContactKind) -> Self {
        PolytopeAlgebra {
            kind,
            zero: IntervalPolytope::empty(),
            one: IntervalPolytope::whole(),
        }
    }
}

impl PolytopeAlgebra<PlanePolytope> {
    pub fn plane(kind: ContactKind) -> Self {
        PolytopeAlgebra {
            kind,
            zero: PlanePolytope::empty(),
            one: PlanePolytope::whole(),
        }
    }
}

impl PolytopeAlgebra<CylinderPolytope> {
    /// # Panics
    /// If `dim == 0`.
    pub fn cylinder(dim: usize, kind: ContactKind) -> Self {
        PolytopeAlgebra {
            kind,
            zero: CylinderPolytope::lift(IntervalPolytope::empty(), dim).expect("dim >= 1"),
            one: CylinderPolytope::lift(IntervalPolytope::whole(), dim).expect("dim >= 1"),
        }
    }
}

impl<R: Region> ContactAlgebra for PolytopeAlgebra<R> {
    type Element = R;

    fn zero(&self) -> R {
        self.zero.clone()
    }
    fn one(&self) -> R {
        self.one.clone()
    }
    fn complement(&self, a: &R) -> R {
        a.complement()
    }
    fn join(&self, a: &R, b: &R) -> R {
        a.union(b)
    }
    // The regularised intersection equals the De Morgan meet and is cheaper.
    fn meet(&self, a: &R, b: &R) -> R {
        a.reg_meet(b)
    }
    fn equal(&self, a: &R, b: &R) -> bool {
        a.same(b)
    }
    fn is_zero(&self, a: &R) -> bool {
        a.is_empty()
    }
    fn contact(&self, a: &R, b: &R) -> bool {
        match self.kind {
            ContactKind::Strong => a.contact_sc(b),
            ContactKind::Topological => a.contact_c(b),
        }
    }
    fn describe(&self, a: &R) -> String {
        a.to_string()
            .split_whitespace()
            .collect::<Vec<_>>()
            .join(" ")
    }
}
