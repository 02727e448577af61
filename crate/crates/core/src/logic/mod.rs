//! The quantifier-free language of contact algebras: terms over complement
//! and join, formulas over equality, contact, negation and disjunction.
//!
//! Every other connective and constant is an abbreviation expanded by the
//! parser:
//!
//! | surface      | expansion                         |
//! |--------------|-----------------------------------|
//! | `a.b`        | `-(-a + -b)`                      |
//! | `0`          | `z.-z` for the formula's zero variable `z` |
//! | `1`          | `-0`                              |
//! | `a <= b`     | `a + b == b`                      |
//! | `a != b`     | `~(a == b)`                       |
//! | `f & g`      | `~(~f \| ~g)`                     |
//! | `f => g`     | `~f \| g`                         |
//! | `f <=> g`    | `(f => g) & (g => f)`             |
//! | `T`, `F`     | `z == z`, `z != z`                |
//!
//! The zero variable is the alphabetically least variable written in the
//! formula, or `x` when there is none.

mod eval;
mod parse;
mod schemes;
mod search;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Not;

pub use eval::{eval, eval_term, Valuation};
pub use parse::{parse_formula, parse_formula_file, parse_term};
pub use schemes::{axiom_instances, is_axiom_instance, Scheme};
pub use search::{falsify_in, find_countermodel, find_countermodel_in, Countermodel};

/// Zero variable used when a formula names no variable at all.
pub const DEFAULT_ZERO_VARIABLE: &str = "x";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Complement(Box<Term>),
    Join(Box<Term>, Box<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Eq(Term, Term),
    Contact(Term, Term),
    Not(Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn complement(self) -> Term {
        Term::Complement(Box::new(self))
    }

    pub fn join(self, other: Term) -> Term {
        Term::Join(Box::new(self), Box::new(other))
    }

    /// `-(-a + -b)`.
    pub fn meet(self, other: Term) -> Term {
        self.complement().join(other.complement()).complement()
    }

    /// `z.-z`.
    pub fn zero(z: &str) -> Term {
        Term::var(z).meet(Term::var(z).complement())
    }

    /// `-(z.-z)`.
    pub fn one(z: &str) -> Term {
        Term::zero(z).complement()
    }

    /// Number of constructors on the longest root-to-leaf path; a variable
    /// has depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::Complement(a) => 1 + a.depth(),
            Term::Join(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Complement(a) => a.collect_vars(out),
            Term::Join(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// `Some(a)` if this is `-(-a + -b)` for some `b`, paired with `b`.
    pub(crate) fn as_meet(&self) -> Option<(&Term, &Term)> {
        if let Term::Complement(inner) = self {
            if let Term::Join(l, r) = inner.as_ref() {
                if let (Term::Complement(a), Term::Complement(b)) = (l.as_ref(), r.as_ref()) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// `Some(a)` if this is `a.-a`.
    pub(crate) fn as_zero(&self) -> Option<&Term> {
        let (a, b) = self.as_meet()?;
        match b {
            Term::Complement(na) if na.as_ref() == a => Some(a),
            _ => None,
        }
    }
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    pub fn contact(a: Term, b: Term) -> Formula {
        Formula::Contact(a, b)
    }

    pub fn or(self, other: Formula) -> Formula {
        Formula::Or(Box::new(self), Box::new(other))
    }

    /// `~(~f | ~g)`.
    pub fn and(self, other: Formula) -> Formula {
        self.not().or(other.not()).not()
    }

    /// `~f | g`.
    pub fn implies(self, other: Formula) -> Formula {
        self.not().or(other)
    }

    /// `(f => g) & (g => f)`.
    pub fn iff(self, other: Formula) -> Formula {
        self.clone().implies(other.clone()).and(other.implies(self))
    }

    /// `~(a == b)`.
    pub fn neq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b).not()
    }

    /// `a + b == b`.
    pub fn le(a: Term, b: Term) -> Formula {
        Formula::Eq(a.join(b.clone()), b)
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Eq(a, b) | Formula::Contact(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Formula::Not(f) => f.collect_vars(out),
            Formula::Or(f, g) => {
                f.collect_vars(out);
                g.collect_vars(out);
            }
        }
    }

    /// Number of nodes, counting those of the terms.
    pub fn size(&self) -> usize {
        fn term_size(t: &Term) -> usize {
            match t {
                Term::Var(_) => 1,
                Term::Complement(a) => 1 + term_size(a),
                Term::Join(a, b) => 1 + term_size(a) + term_size(b),
            }
        }
        match self {
            Formula::Eq(a, b) | Formula::Contact(a, b) => 1 + term_size(a) + term_size(b),
            Formula::Not(f) => 1 + f.size(),
            Formula::Or(f, g) => 1 + f.size() + g.size(),
        }
    }

    fn as_not(&self) -> Option<&Formula> {
        match self {
            Formula::Not(f) => Some(f),
            _ => None,
        }
    }

    /// `(f, g)` if this is `~f | g`.
    fn as_implies(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Or(l, r) => Some((l.as_not()?, r)),
            _ => None,
        }
    }

    /// `(f, g)` if this is `~(~f | ~g)`.
    fn as_and(&self) -> Option<(&Formula, &Formula)> {
        match self.as_not()? {
            Formula::Or(l, r) => Some((l.as_not()?, r.as_not()?)),
            _ => None,
        }
    }

    /// `(f, g)` if this is `(f => g) & (g => f)`.
    fn as_iff(&self) -> Option<(&Formula, &Formula)> {
        let (l, r) = self.as_and()?;
        let (f, g) = l.as_implies()?;
        let (g2, f2) = r.as_implies()?;
        (f == f2 && g == g2).then_some((f, g))
    }
}

// Printing folds the derived forms back where the expansion is
// unambiguous (meet, <=, !=, &, =>, <=>). Constants stay expanded so that
// printing and re-parsing always give the same tree.

const T_SUM: u8 = 1;
const T_PRODUCT: u8 = 2;
const T_UNARY: u8 = 3;

fn write_term(f: &mut fmt::Formatter<'_>, t: &Term, min: u8) -> fmt::Result {
    let meet = t.as_meet();
    let prec = match (meet, t) {
        (Some(_), _) => T_PRODUCT,
        (None, Term::Join(..)) => T_SUM,
        _ => T_UNARY,
    };
    if prec < min {
        write!(f, "(")?;
    }
    match (meet, t) {
        (Some((a, b)), _) => {
            write_term(f, a, T_PRODUCT)?;
            write!(f, ".")?;
            write_term(f, b, T_UNARY)?;
        }
        (None, Term::Var(v)) => write!(f, "{v}")?,
        (None, Term::Complement(a)) => {
            write!(f, "-")?;
            write_term(f, a, T_UNARY)?;
        }
        (None, Term::Join(a, b)) => {
            write_term(f, a, T_SUM)?;
            write!(f, " + ")?;
            write_term(f, b, T_PRODUCT)?;
        }
    }
    if prec < min {
        write!(f, ")")?;
    }
    Ok(())
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self, T_SUM)
    }
}

const F_IFF: u8 = 1;
const F_IMPLIES: u8 = 2;
const F_OR: u8 = 3;
const F_AND: u8 = 4;
const F_UNARY: u8 = 5;

fn write_formula(f: &mut fmt::Formatter<'_>, phi: &Formula, min: u8) -> fmt::Result {
    let prec = if phi.as_iff().is_some() {
        F_IFF
    } else if phi.as_and().is_some() {
        F_AND
    } else if phi.as_implies().is_some() {
        F_IMPLIES
    } else {
        match phi {
            Formula::Or(..) => F_OR,
            _ => F_UNARY,
        }
    };
    if prec < min {
        write!(f, "(")?;
    }
    if let Some((a, b)) = phi.as_iff() {
        write_formula(f, a, F_IFF)?;
        write!(f, " <=> ")?;
        write_formula(f, b, F_IMPLIES)?;
    } else if let Some((a, b)) = phi.as_and() {
        write_formula(f, a, F_AND)?;
        write!(f, " & ")?;
        write_formula(f, b, F_UNARY)?;
    } else if let Some((a, b)) = phi.as_implies() {
        write_formula(f, a, F_OR)?;
        write!(f, " => ")?;
        write_formula(f, b, F_IMPLIES)?;
    } else {
        match phi {
            Formula::Or(a, b) => {
                write_formula(f, a, F_OR)?;
                write!(f, " | ")?;
                write_formula(f, b, F_AND)?;
            }
            Formula::Not(inner) => match inner.as_ref() {
                Formula::Eq(a, b) => write!(f, "{a} != {b}")?,
                _ => {
                    write!(f, "~")?;
                    write_formula(f, inner, F_UNARY)?;
                }
            },
            Formula::Eq(Term::Join(a, b), c) if b.as_ref() == c => write!(f, "{a} <= {c}")?,
            Formula::Eq(a, b) => write!(f, "{a} == {b}")?,
            Formula::Contact(a, b) => write!(f, "C({a}, {b})")?,
        }
    }
    if prec < min {
        write!(f, ")")?;
    }
    Ok(())
}

impl Not for Formula {
    type Output = Formula;

    fn not(self) -> Formula {
        Formula::Not(Box::new(self))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self, F_IFF)
    }
}
