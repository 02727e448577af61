//! Checking the contact axioms (and optionally the Boolean laws) on given,
//! exhaustive or sampled triples of elements.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{ContactAlgebra, FiniteContactAlgebra};

#[derive(Debug, Clone, Copy, Default)]
pub struct AuditOptions {
    /// Also check the ten Boolean-algebra equations.
    pub boolean_laws: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub name: &'static str,
    pub checked: usize,
    /// First failing triple, if any.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub results: Vec<AxiomResult>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.witness.is_none())
    }

    pub fn get(&self, name: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match &r.witness {
                None => writeln!(f, "{} PASS", r.name)?,
                Some(w) => writeln!(f, "{} FAIL {w}", r.name)?,
            }
        }
        Ok(())
    }
}

type Check<A> = fn(
    &A,
    &<A as ContactAlgebra>::Element,
    &<A as ContactAlgebra>::Element,
    &<A as ContactAlgebra>::Element,
) -> bool;

fn contact_checks<A: ContactAlgebra>() -> Vec<(&'static str, Check<A>)> {
    vec![
        ("C1", |a, x, _, _| {
            !a.contact(&a.zero(), x) && !a.contact(x, &a.zero())
        }),
        ("C2", |a, x, y, z| {
            a.contact(x, &a.join(y, z)) == (a.contact(x, y) || a.contact(x, z))
        }),
        ("C3", |a, x, y, _| !a.contact(x, y) || a.contact(y, x)),
        ("C4", |a, x, _, _| a.is_zero(x) || a.contact(x, x)),
        ("monotonicity", |a, x, y, z| {
            !a.contact(x, y) || a.contact(&a.join(x, z), &a.join(y, z))
        }),
        ("overlap-extension", |a, x, y, _| {
            a.is_zero(&a.meet(x, y)) || a.contact(x, y)
        }),
    ]
}

fn boolean_checks<A: ContactAlgebra>() -> Vec<(&'static str, Check<A>)> {
    vec![
        ("assoc+", |a, x, y, z| {
            a.equal(&a.join(&a.join(x, y), z), &a.join(x, &a.join(y, z)))
        }),
        ("assoc.", |a, x, y, z| {
            a.equal(&a.meet(&a.meet(x, y), z), &a.meet(x, &a.meet(y, z)))
        }),
        ("comm+", |a, x, y, _| a.equal(&a.join(x, y), &a.join(y, x))),
        ("comm.", |a, x, y, _| a.equal(&a.meet(x, y), &a.meet(y, x))),
        ("absorb+", |a, x, y, _| {
            a.equal(&a.join(x, &a.meet(x, y)), x)
        }),
        ("absorb.", |a, x, y, _| {
            a.equal(&a.meet(x, &a.join(x, y)), x)
        }),
        ("distrib+", |a, x, y, z| {
            a.equal(
                &a.join(x, &a.meet(y, z)),
                &a.meet(&a.join(x, y), &a.join(x, z)),
            )
        }),
        ("distrib.", |a, x, y, z| {
            a.equal(
                &a.meet(x, &a.join(y, z)),
                &a.join(&a.meet(x, y), &a.meet(x, z)),
            )
        }),
        ("compl+", |a, x, _, _| {
            a.is_one(&a.join(x, &a.complement(x)))
        }),
        ("compl.", |a, x, _, _| {
            a.is_zero(&a.meet(x, &a.complement(x)))
        }),
    ]
}

/// Checks every axiom on every triple `(x, y, z)`. Triples are processed in
/// parallel; the reported witness is the first failing triple in order.
pub fn audit_axioms<A: ContactAlgebra>(
    alg: &A,
    triples: &[(A::Element, A::Element, A::Element)],
    opts: AuditOptions,
) -> AuditReport {
    let mut checks = contact_checks::<A>();
    if opts.boolean_laws {
        checks.extend(boolean_checks::<A>());
    }
    let outcomes: Vec<Vec<bool>> = triples
        .par_iter()
        .map(|(x, y, z)| checks.iter().map(|(_, c)| c(alg, x, y, z)).collect())
        .collect();
    let results = checks
        .iter()
        .enumerate()
        .map(|(k, (name, _))| AxiomResult {
            name,
            checked: triples.len(),
            witness: outcomes.iter().position(|o| !o[k]).map(|i| {
                let (x, y, z) = &triples[i];
                format!(
                    "x={} y={} z={}",
                    alg.describe(x),
                    alg.describe(y),
                    alg.describe(z)
                )
            }),
        })
        .collect();
    AuditReport { results }
}

/// All triples of the power set.
pub fn audit_exhaustive(alg: &FiniteContactAlgebra, opts: AuditOptions) -> AuditReport {
    let elems: Vec<_> = alg.elements().collect();
    let mut triples = Vec::with_capacity(elems.len().pow(3));
    for &x in &elems {
        for &y in &elems {
            for &z in &elems {
                triples.push((x, y, z));
            }
        }
    }
    audit_axioms(alg, &triples, opts)
}

/// `samples` triples drawn by `gen` from a generator seeded with `seed`.
pub fn audit_sampled<A, G>(
    alg: &A,
    samples: usize,
    seed: u64,
    mut gen: G,
    opts: AuditOptions,
) -> AuditReport
where
    A: ContactAlgebra,
    G: FnMut(&mut ChaCha8Rng) -> A::Element,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<_> = (0..samples)
        .map(|_| {
            let x = gen(&mut rng);
            let y = gen(&mut rng);
            let z = gen(&mut rng);
            (x, y, z)
        })
        .collect();
    audit_axioms(alg, &triples, opts)
}

/// An element other than 0 and 1 that is not in contact with its
/// complement, if `elems` contains one.
pub fn connectedness_witness<A: ContactAlgebra>(
    alg: &A,
    elems: impl IntoIterator<Item = A::Element>,
) -> Option<A::Element> {
    elems
        .into_iter()
        .find(|a| !alg.is_zero(a) && !alg.is_one(a) && !alg.contact(a, &alg.complement(a)))
}

/// Exhaustive connectedness of a finite algebra.
pub fn is_connected_algebra(alg: &FiniteContactAlgebra) -> bool {
    connectedness_witness(alg, alg.elements()).is_none()
}
