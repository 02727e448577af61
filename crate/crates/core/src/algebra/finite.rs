use std::fmt;

use super::ContactAlgebra;
use crate::adjacency::AdjacencySpace;
use crate::error::AdjacencyError;

/// A set of cells as a bitmask; bit `i` is cell `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CellSet(pub u128);

impl CellSet {
    pub const EMPTY: CellSet = CellSet(0);

    pub fn full(n: usize) -> CellSet {
        if n == 128 {
            CellSet(u128::MAX)
        } else {
            CellSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(cell: usize) -> CellSet {
        CellSet(1u128 << cell)
    }

    pub fn from_cells(cells: impl IntoIterator<Item = usize>) -> CellSet {
        CellSet(cells.into_iter().fold(0, |m, c| m | 1u128 << c))
    }

    pub fn contains(self, cell: usize) -> bool {
        self.0 >> cell & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn cells(self) -> impl Iterator<Item = usize> {
        (0..128).filter(move |&i| self.contains(i))
    }

    pub fn union(self, other: CellSet) -> CellSet {
        CellSet(self.0 | other.0)
    }

    pub fn intersection(self, other: CellSet) -> CellSet {
        CellSet(self.0 & other.0)
    }

    /// Complement within `0..n`.
    pub fn complement_in(self, n: usize) -> CellSet {
        CellSet(!self.0 & CellSet::full(n).0)
    }
}

impl fmt::Display for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, c) in self.cells().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// The power set of the cells of a space, with `C(a, b)` iff some cell of
/// `a` is related to some cell of `b`.
#[derive(Debug, Clone)]
pub struct FiniteContactAlgebra {
    names: Vec<String>,
    /// `rows[x]`: cells related to `x`.
    rows: Vec<u128>,
}

impl FiniteContactAlgebra {
    pub fn induced(space: &AdjacencySpace) -> Result<Self, AdjacencyError> {
        if space.len() > 128 {
            return Err(AdjacencyError::TooManyCells(space.len()));
        }
        let rows = (0..space.len())
            .map(|x| {
                space
                    .neighbours(x)
                    .chain(std::iter::once(x))
                    .fold(0u128, |m, y| m | 1u128 << y)
            })
            .collect();
        Ok(FiniteContactAlgebra {
            names: space.names().to_vec(),
            rows,
        })
    }

    /// An algebra over an arbitrary relation, without reflexive or
    /// symmetric closure. Meant for exercising the axiom audit.
    pub fn from_relation_unchecked(names: Vec<String>, rows: Vec<u128>) -> Self {
        assert_eq!(names.len(), rows.len(), "one row per cell");
        assert!(names.len() <= 128, "at most 128 cells");
        FiniteContactAlgebra { names, rows }
    }

    pub fn cell_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Every element, in bitmask order.
    ///
    /// # Panics
    /// If there are more than 63 cells.
    pub fn elements(&self) -> impl Iterator<Item = CellSet> {
        assert!(self.cell_count() < 64, "power set too large to enumerate");
        (0..1u128 << self.cell_count()).map(CellSet)
    }

    pub fn set_name(&self, a: CellSet) -> String {
        let names: Vec<&str> = a.cells().map(|c| self.names[c].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Shorthand for [`FiniteContactAlgebra::induced`].
pub fn induced_algebra(space: &AdjacencySpace) -> Result<FiniteContactAlgebra, AdjacencyError> {
    FiniteContactAlgebra::induced(space)
}

impl ContactAlgebra for FiniteContactAlgebra {
    type Element = CellSet;

    fn zero(&self) -> CellSet {
        CellSet::EMPTY
    }
    fn one(&self) -> CellSet {
        CellSet::full(self.cell_count())
    }
    fn complement(&self, a: &CellSet) -> CellSet {
        a.complement_in(self.cell_count())
    }
    fn join(&self, a: &CellSet, b: &CellSet) -> CellSet {
        a.union(*b)
    }
    fn meet(&self, a: &CellSet, b: &CellSet) -> CellSet {
        a.intersection(*b)
    }
    fn equal(&self, a: &CellSet, b: &CellSet) -> bool {
        a == b
    }
    fn contact(&self, a: &CellSet, b: &CellSet) -> bool {
        a.cells().any(|x| self.rows[x] & b.0 != 0)
    }
    fn describe(&self, a: &CellSet) -> String {
        self.set_name(*a)
    }
}
