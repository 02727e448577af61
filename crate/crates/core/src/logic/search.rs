//! Bounded search for a finite connected adjacency space falsifying a
//! formula.
//!
//! Spaces are tried by cell count, then in enumeration order (canonical
//! adjacency code up to six cells, labelled codes above). Within a space,
//! valuations are tried in the order of one counter in which the first
//! variable (alphabetically) holds the most significant bits. A `None`
//! result only says that no countermodel exists up to the bound.

use std::fmt;

use rayon::prelude::*;

use super::eval::Compiled;
use super::{Formula, Valuation};
use crate::adjacency::{connected_spaces, connected_spaces_labelled, AdjacencySpace};
use crate::algebra::{CellSet, FiniteContactAlgebra};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Countermodel {
    pub space: AdjacencySpace,
    pub valuation: Valuation<CellSet>,
}

impl fmt::Display for Countermodel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.space)?;
        let alg = FiniteContactAlgebra::induced(&self.space).map_err(|_| fmt::Error)?;
        for (var, set) in &self.valuation {
            writeln!(f, "{var} = {}", alg.set_name(*set))?;
        }
        Ok(())
    }
}

/// The first falsifying valuation of `phi` in `space`, if any.
pub fn falsify_in(phi: &Formula, space: &AdjacencySpace) -> Option<Valuation<CellSet>> {
    let vars: Vec<String> = phi.variables().into_iter().collect();
    let compiled = Compiled::new(phi, &vars).expect("variables collected from the formula");
    let alg = FiniteContactAlgebra::induced(space).ok()?;
    let n = space.len();
    let bits = n * vars.len();
    assert!(
        bits < 128,
        "valuation space too large: {} cells, {} variables",
        n,
        vars.len()
    );
    let mask = CellSet::full(n).0;
    let mut values = vec![CellSet::EMPTY; vars.len()];
    for counter in 0..1u128 << bits {
        for (j, v) in values.iter_mut().enumerate() {
            *v = CellSet(counter >> (n * (vars.len() - 1 - j)) & mask);
        }
        if !compiled.eval(&alg, &values) {
            return Some(vars.iter().cloned().zip(values.iter().copied()).collect());
        }
    }
    None
}

/// The first countermodel among `spaces`, in slice order. Spaces are
/// checked in parallel.
pub fn find_countermodel_in(phi: &Formula, spaces: &[AdjacencySpace]) -> Option<Countermodel> {
    spaces.par_iter().find_map_first(|space| {
        falsify_in(phi, space).map(|valuation| Countermodel {
            space: space.clone(),
            valuation,
        })
    })
}

/// The first countermodel over connected spaces with at most `max_cells`
/// cells.
pub fn find_countermodel(phi: &Formula, max_cells: usize) -> Option<Countermodel> {
    (1..=max_cells).find_map(|n| {
        if n <= crate::adjacency::MAX_ISO_CELLS {
            find_countermodel_in(phi, connected_spaces(n))
        } else {
            let spaces: Vec<AdjacencySpace> = connected_spaces_labelled(n).collect();
            find_countermodel_in(phi, &spaces)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{eval, parse_formula};

    #[test]
    fn contact_without_overlap_needs_two_cells() {
        let phi = parse_formula("C(p,q) => p.q != 0").unwrap();
        assert!(find_countermodel(&phi, 1).is_none());
        let cm = find_countermodel(&phi, 2).unwrap();
        assert_eq!(
            cm.space,
            AdjacencySpace::from_indices(2, &[(0, 1)]).unwrap()
        );
        assert_eq!(cm.valuation["p"], CellSet::singleton(0));
        assert_eq!(cm.valuation["q"], CellSet::singleton(1));
        let alg = FiniteContactAlgebra::induced(&cm.space).unwrap();
        assert!(!eval(&phi, &alg, &cm.valuation).unwrap());
        assert_eq!(
            cm.to_string().lines().filter(|l| l.contains(" = ")).count(),
            2
        );
    }

    #[test]
    fn valid_formulas_have_none() {
        for text in [
            "x == x",
            "~C(0,p)",
            "C(x,y) => C(y,x)",
            "x != 0 => (x != 1 => C(x,-x))",
        ] {
            assert!(
                find_countermodel(&parse_formula(text).unwrap(), 5).is_none(),
                "{text}"
            );
        }
    }

    #[test]
    fn three_mutual_contacts_need_a_triangle() {
        // three nonzero pairwise disjoint regions in pairwise contact
        let phi = parse_formula(
            "p != 0 & q != 0 & r != 0 & p.q == 0 & p.r == 0 & q.r == 0 & C(p,q) & C(q,r) & C(p,r) => F",
        )
        .unwrap();
        let cm = find_countermodel(&phi, 4).unwrap();
        assert_eq!(cm.space.len(), 3);
        assert_eq!(cm.space.edge_count(), 3);
    }
}
