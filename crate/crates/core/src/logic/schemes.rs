//! Axiom schemes of the system and recognition of their instances.
//!
//! Propositional part: the three Łukasiewicz schemes. Boolean part: the
//! equations for associativity, commutativity, absorption, distributivity
//! and complementation, each for join and meet. Contact part: the four
//! contact schemes. Finally the connectedness scheme.
//!
//! In a scheme, `0` stands for `t.-t` with any term `t`, and `1` for `-0`.

use std::collections::HashMap;
use std::fmt;
use std::ops::Not;

use super::{Formula, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// `P => (Q => P)`
    L1,
    /// `(P => (Q => R)) => ((P => Q) => (P => R))`
    L2,
    /// `(~P => ~Q) => (Q => P)`
    L3,
    AssocJoin,
    AssocMeet,
    CommJoin,
    CommMeet,
    AbsorbJoin,
    AbsorbMeet,
    DistribJoin,
    DistribMeet,
    ComplJoin,
    ComplMeet,
    /// `~C(0,a)`
    C1,
    /// `C(a,b+c) <=> (C(a,b) | C(a,c))`
    C2,
    /// `C(a,b) => C(b,a)`
    C3,
    /// `a != 0 => C(a,a)`
    C4,
    /// `a != 0 => (a != 1 => C(a,-a))`
    Connectedness,
}

impl Scheme {
    pub const ALL: [Scheme; 18] = [
        Scheme::L1,
        Scheme::L2,
        Scheme::L3,
        Scheme::AssocJoin,
        Scheme::AssocMeet,
        Scheme::CommJoin,
        Scheme::CommMeet,
        Scheme::AbsorbJoin,
        Scheme::AbsorbMeet,
        Scheme::DistribJoin,
        Scheme::DistribMeet,
        Scheme::ComplJoin,
        Scheme::ComplMeet,
        Scheme::C1,
        Scheme::C2,
        Scheme::C3,
        Scheme::C4,
        Scheme::Connectedness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::L1 => "L1",
            Scheme::L2 => "L2",
            Scheme::L3 => "L3",
            Scheme::AssocJoin => "assoc+",
            Scheme::AssocMeet => "assoc.",
            Scheme::CommJoin => "comm+",
            Scheme::CommMeet => "comm.",
            Scheme::AbsorbJoin => "absorb+",
            Scheme::AbsorbMeet => "absorb.",
            Scheme::DistribJoin => "distrib+",
            Scheme::DistribMeet => "distrib.",
            Scheme::ComplJoin => "compl+",
            Scheme::ComplMeet => "compl.",
            Scheme::C1 => "C1",
            Scheme::C2 => "C2",
            Scheme::C3 => "C3",
            Scheme::C4 => "C4",
            Scheme::Connectedness => "connectedness",
        }
    }

    /// Number of formula and term metavariables.
    fn arity(self) -> (usize, usize) {
        match self {
            Scheme::L1 | Scheme::L3 => (2, 0),
            Scheme::L2 => (3, 0),
            Scheme::AssocJoin
            | Scheme::AssocMeet
            | Scheme::DistribJoin
            | Scheme::DistribMeet
            | Scheme::C2 => (0, 3),
            Scheme::CommJoin
            | Scheme::CommMeet
            | Scheme::AbsorbJoin
            | Scheme::AbsorbMeet
            | Scheme::C3 => (0, 2),
            Scheme::ComplJoin
            | Scheme::ComplMeet
            | Scheme::C1
            | Scheme::C4
            | Scheme::Connectedness => (0, 1),
        }
    }

    fn pattern(self) -> PF {
        use PF::Meta as F;
        let (a, b, c) = (PT::Meta(0), PT::Meta(1), PT::Meta(2));
        match self {
            Scheme::L1 => F(0).implies(F(1).implies(F(0))),
            Scheme::L2 => F(0)
                .implies(F(1).implies(F(2)))
                .implies(F(0).implies(F(1)).implies(F(0).implies(F(2)))),
            Scheme::L3 => F(0).not().implies(F(1).not()).implies(F(1).implies(F(0))),
            Scheme::AssocJoin => {
                PF::eq(a.clone().join(b.clone().join(c.clone())), a.join(b).join(c))
            }
            Scheme::AssocMeet => {
                PF::eq(a.clone().meet(b.clone().meet(c.clone())), a.meet(b).meet(c))
            }
            Scheme::CommJoin => PF::eq(a.clone().join(b.clone()), b.join(a)),
            Scheme::CommMeet => PF::eq(a.clone().meet(b.clone()), b.meet(a)),
            Scheme::AbsorbJoin => PF::eq(a.clone().join(a.clone().meet(b)), a),
            Scheme::AbsorbMeet => PF::eq(a.clone().meet(a.clone().join(b)), a),
            Scheme::DistribJoin => PF::eq(
                a.clone().join(b.clone().meet(c.clone())),
                a.clone().join(b).meet(a.join(c)),
            ),
            Scheme::DistribMeet => PF::eq(
                a.clone().meet(b.clone().join(c.clone())),
                a.clone().meet(b).join(a.meet(c)),
            ),
            Scheme::ComplJoin => PF::eq(a.clone().join(a.complement()), PT::One),
            Scheme::ComplMeet => PF::eq(a.clone().meet(a.complement()), PT::Zero),
            Scheme::C1 => PF::contact(PT::Zero, a).not(),
            Scheme::C2 => PF::contact(a.clone(), b.clone().join(c.clone()))
                .iff(PF::contact(a.clone(), b).or(PF::contact(a, c))),
            Scheme::C3 => PF::contact(a.clone(), b.clone()).implies(PF::contact(b, a)),
            Scheme::C4 => PF::eq(a.clone(), PT::Zero)
                .not()
                .implies(PF::contact(a.clone(), a)),
            Scheme::Connectedness => PF::eq(a.clone(), PT::Zero).not().implies(
                PF::eq(a.clone(), PT::One)
                    .not()
                    .implies(PF::contact(a.clone(), a.complement())),
            ),
        }
    }

    /// The instance with formula metavariables `fs` and term metavariables
    /// `ts`; constants use `zero_var`.
    pub fn instantiate(self, fs: &[Formula], ts: &[Term], zero_var: &str) -> Formula {
        let (nf, nt) = self.arity();
        assert!(
            fs.len() >= nf && ts.len() >= nt,
            "scheme {} needs {nf} formulas and {nt} terms",
            self.name()
        );
        self.pattern().build(fs, ts, zero_var)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
enum PT {
    Meta(usize),
    Zero,
    One,
    Complement(Box<PT>),
    Join(Box<PT>, Box<PT>),
}

impl PT {
    fn complement(self) -> PT {
        PT::Complement(Box::new(self))
    }

    fn join(self, other: PT) -> PT {
        PT::Join(Box::new(self), Box::new(other))
    }

    fn meet(self, other: PT) -> PT {
        self.complement().join(other.complement()).complement()
    }

    fn build(&self, ts: &[Term], z: &str) -> Term {
        match self {
            PT::Meta(i) => ts[*i].clone(),
            PT::Zero => Term::zero(z),
            PT::One => Term::one(z),
            PT::Complement(a) => a.build(ts, z).complement(),
            PT::Join(a, b) => a.build(ts, z).join(b.build(ts, z)),
        }
    }

    fn matches<'t>(&self, t: &'t Term, b: &mut Bindings<'t>) -> bool {
        match (self, t) {
            (PT::Meta(i), _) => match b.terms.get(i) {
                Some(bound) => *bound == t,
                None => {
                    b.terms.insert(*i, t);
                    true
                }
            },
            (PT::Zero, _) => t.as_zero().is_some(),
            (PT::One, Term::Complement(z)) => z.as_zero().is_some(),
            (PT::Complement(p), Term::Complement(a)) => p.matches(a, b),
            (PT::Join(p, q), Term::Join(x, y)) => p.matches(x, b) && q.matches(y, b),
            _ => false,
        }
    }
}

#[derive(Debug, Clone)]
enum PF {
    Meta(usize),
    Eq(PT, PT),
    Contact(PT, PT),
    Not(Box<PF>),
    Or(Box<PF>, Box<PF>),
}

impl PF {
    fn eq(a: PT, b: PT) -> PF {
        PF::Eq(a, b)
    }

    fn contact(a: PT, b: PT) -> PF {
        PF::Contact(a, b)
    }

    fn not(self) -> PF {
        PF::Not(Box::new(self))
    }

    fn or(self, other: PF) -> PF {
        PF::Or(Box::new(self), Box::new(other))
    }

    fn and(self, other: PF) -> PF {
        self.not().or(other.not()).not()
    }

    fn implies(self, other: PF) -> PF {
        self.not().or(other)
    }

    fn iff(self, other: PF) -> PF {
        self.clone().implies(other.clone()).and(other.implies(self))
    }

    fn build(&self, fs: &[Formula], ts: &[Term], z: &str) -> Formula {
        match self {
            PF::Meta(i) => fs[*i].clone(),
            PF::Eq(a, b) => Formula::Eq(a.build(ts, z), b.build(ts, z)),
            PF::Contact(a, b) => Formula::Contact(a.build(ts, z), b.build(ts, z)),
            PF::Not(f) => f.build(fs, ts, z).not(),
            PF::Or(f, g) => f.build(fs, ts, z).or(g.build(fs, ts, z)),
        }
    }

    fn matches<'t>(&self, phi: &'t Formula, b: &mut Bindings<'t>) -> bool {
        match (self, phi) {
            (PF::Meta(i), _) => match b.formulas.get(i) {
                Some(bound) => *bound == phi,
                None => {
                    b.formulas.insert(*i, phi);
                    true
                }
            },
            (PF::Eq(p, q), Formula::Eq(x, y)) | (PF::Contact(p, q), Formula::Contact(x, y)) => {
                p.matches(x, b) && q.matches(y, b)
            }
            (PF::Not(p), Formula::Not(f)) => p.matches(f, b),
            (PF::Or(p, q), Formula::Or(f, g)) => p.matches(f, b) && q.matches(g, b),
            _ => false,
        }
    }
}

#[derive(Default)]
struct Bindings<'t> {
    formulas: HashMap<usize, &'t Formula>,
    terms: HashMap<usize, &'t Term>,
}

/// The first scheme (in [`Scheme::ALL`] order) of which `phi` is an
/// instance.
pub fn is_axiom_instance(phi: &Formula) -> Option<Scheme> {
    Scheme::ALL
        .into_iter()
        .find(|s| s.pattern().matches(phi, &mut Bindings::default()))
}

/// Every instance of every scheme with formula metavariables drawn from
/// `formulas` and term metavariables from `terms`, scheme by scheme.
pub fn axiom_instances(
    formulas: &[Formula],
    terms: &[Term],
    zero_var: &str,
) -> Vec<(Scheme, Formula)> {
    fn tuples(k: usize, n: usize) -> Vec<Vec<usize>> {
        (0..k).fold(vec![vec![]], |acc, _| {
            acc.into_iter()
                .flat_map(|t| {
                    (0..n).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    })
                })
                .collect()
        })
    }
    let mut out = Vec::new();
    for s in Scheme::ALL {
        let (nf, nt) = s.arity();
        let pattern = s.pattern();
        for fi in tuples(nf, formulas.len()) {
            let fs: Vec<Formula> = fi.iter().map(|&i| formulas[i].clone()).collect();
            for ti in tuples(nt, terms.len()) {
                let ts: Vec<Term> = ti.iter().map(|&i| terms[i].clone()).collect();
                out.push((s, pattern.build(&fs, &ts, zero_var)));
            }
        }
    }
    out
}
