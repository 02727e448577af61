//! The union map from sets of cells to polytopes, and the checks that it
//! embeds the induced contact algebra into the polytope algebra.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{CellSet, ContactAlgebra, FiniteContactAlgebra, Region};
use crate::adjacency::AdjacencySpace;
use crate::error::AdjacencyError;

/// Sends a set of cells to the union of their images.
#[derive(Debug, Clone)]
pub struct Embedding<R> {
    images: Vec<R>,
    zero: R,
}

impl<R: Region> Embedding<R> {
    pub fn new(images: Vec<R>, zero: R) -> Self {
        Embedding { images, zero }
    }

    pub fn images(&self) -> &[R] {
        &self.images
    }

    pub fn image(&self, set: CellSet) -> R {
        set.cells()
            .fold(self.zero.clone(), |acc, c| acc.union(&self.images[c]))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MergeOptions {
    /// Up to this many cells every subset (pair) is checked.
    pub exhaustive_limit: usize,
    /// Random subset pairs checked above the limit.
    pub samples: usize,
    pub seed: u64,
}

impl Default for MergeOptions {
    fn default() -> Self {
        MergeOptions {
            exhaustive_limit: 6,
            samples: 2000,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeCheck {
    pub name: &'static str,
    pub checked: usize,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeReport {
    pub exhaustive: bool,
    pub checks: Vec<MergeCheck>,
}

impl MergeReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.witness.is_none())
    }

    pub fn get(&self, name: &str) -> Option<&MergeCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for MergeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "{} PASS", c.name)?,
                Some(w) => writeln!(f, "{} FAIL {w}", c.name)?,
            }
        }
        Ok(())
    }
}

/// Builds the union map for `images` (indexed by cell) and checks:
/// distinct sets have distinct images, bottom and top are preserved,
/// complements and joins are preserved, and cell contact coincides with
/// strong and with topological contact of the images.
pub fn merge<R: Region>(
    space: &AdjacencySpace,
    images: Vec<R>,
    zero: R,
    opts: MergeOptions,
) -> Result<(Embedding<R>, MergeReport), AdjacencyError> {
    let alg = FiniteContactAlgebra::induced(space)?;
    let n = space.len();
    assert_eq!(images.len(), n, "one image per cell");
    let emb = Embedding::new(images, zero);
    let exhaustive = n <= opts.exhaustive_limit;

    let (sets, pairs): (Vec<CellSet>, Vec<(CellSet, CellSet)>) = if exhaustive {
        let sets: Vec<CellSet> = alg.elements().collect();
        let pairs = sets
            .iter()
            .flat_map(|&a| sets.iter().map(move |&b| (a, b)))
            .collect();
        (sets, pairs)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut draw = || CellSet(rng.random::<u128>() & CellSet::full(n).0);
        let pairs: Vec<(CellSet, CellSet)> = (0..opts.samples).map(|_| (draw(), draw())).collect();
        let sets = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        (sets, pairs)
    };
    let img: std::collections::HashMap<CellSet, R> =
        sets.par_iter().map(|&s| (s, emb.image(s))).collect();
    let name = |s: CellSet| alg.describe(&s);
    let pair_name = |(a, b): (CellSet, CellSet)| format!("a={} b={}", name(a), name(b));

    let first_pair = |ok: &(dyn Fn(CellSet, CellSet) -> bool + Sync)| -> Option<String> {
        pairs
            .par_iter()
            .find_first(|&&(a, b)| !ok(a, b))
            .map(|&p| pair_name(p))
    };
    let first_set = |ok: &(dyn Fn(CellSet) -> bool + Sync)| -> Option<String> {
        let mut uniq = sets.clone();
        uniq.sort();
        uniq.dedup();
        uniq.par_iter()
            .find_first(|&&a| !ok(a))
            .map(|&a| format!("a={}", name(a)))
    };

    let full = CellSet::full(n);
    let checks = vec![
        MergeCheck {
            name: "injective",
            checked: pairs.len(),
            witness: first_pair(&|a, b| a == b || !img[&a].same(&img[&b])),
        },
        MergeCheck {
            name: "bounds",
            checked: 2,
            witness: if !emb.image(CellSet::EMPTY).is_empty() {
                Some("a={}".into())
            } else if !emb.image(full).complement().is_empty() {
                Some(format!("a={}", name(full)))
            } else {
                None
            },
        },
        MergeCheck {
            name: "complement",
            checked: sets.len(),
            witness: first_set(&|a| emb.image(a.complement_in(n)).same(&img[&a].complement())),
        },
        MergeCheck {
            name: "join",
            checked: pairs.len(),
            witness: first_pair(&|a, b| emb.image(a.union(b)).same(&img[&a].union(&img[&b]))),
        },
        MergeCheck {
            name: "contact-SC",
            checked: pairs.len(),
            witness: first_pair(&|a, b| alg.contact(&a, &b) == img[&a].contact_sc(&img[&b])),
        },
        MergeCheck {
            name: "contact-C",
            checked: pairs.len(),
            witness: first_pair(&|a, b| alg.contact(&a, &b) == img[&a].contact_c(&img[&b])),
        },
    ];
    Ok((emb, MergeReport { exhaustive, checks }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjacency::project_line;
    use crate::interval::IntervalPolytope;

    fn projected(space: &AdjacencySpace) -> Vec<IntervalPolytope> {
        let arr = space.arrangement(&space.numeration(0).unwrap()).unwrap();
        project_line(space, &arr).unwrap()
    }

    #[test]
    fn edge_space_merges() {
        let edge = AdjacencySpace::from_indices(2, &[(0, 1)]).unwrap();
        let (emb, report) = merge(
            &edge,
            projected(&edge),
            IntervalPolytope::empty(),
            MergeOptions::default(),
        )
        .unwrap();
        assert!(report.passed(), "{report}");
        let b = emb.image(CellSet::singleton(1));
        assert_eq!(b, "[1,2]".parse().unwrap());
        assert_eq!(b, emb.image(CellSet::singleton(0)).complement());
        assert!(emb.image(CellSet::EMPTY).is_empty());
        assert!(emb.image(CellSet::full(2)).is_whole());
    }

    #[test]
    fn tampered_image_is_caught() {
        let path = AdjacencySpace::from_indices(3, &[(0, 1), (1, 2)]).unwrap();
        let mut images = projected(&path);
        images[2] = "[10,11]".parse().unwrap();
        let (_, report) = merge(
            &path,
            images,
            IntervalPolytope::empty(),
            MergeOptions::default(),
        )
        .unwrap();
        assert!(!report.passed());
        assert!(report.get("contact-SC").unwrap().witness.is_some());
    }
}
