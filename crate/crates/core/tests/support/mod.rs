#![allow(dead_code)]

pub mod oracle;

use polycontact::PlanePolytope;

pub fn poly(text: &str) -> PlanePolytope {
    PlanePolytope::parse(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// Axis-parallel box `[x0,x1] × [y0,y1]` with integer corners.
pub fn rect(x0: i64, y0: i64, x1: i64, y1: i64) -> PlanePolytope {
    poly(&format!(
        "poly {{ basic {{ 1 0 <= {x1}; -1 0 <= {}; 0 1 <= {y1}; 0 -1 <= {}; }} }}",
        -x0, -y0
    ))
}

use polycontact::{Formula, Term};

/// Zero variable of the generated axiom instances.
pub const INSTANCE_ZERO: &str = "x";

/// Terms of depth at most two over `x` and `y`.
pub fn small_terms() -> Vec<Term> {
    let (x, y) = (Term::var("x"), Term::var("y"));
    vec![
        x.clone(),
        y.clone(),
        x.clone().complement(),
        y.clone().complement(),
        x.clone().join(x.clone()),
        x.clone().join(y.clone()),
        y.clone().join(x.clone()),
        y.clone().join(y),
    ]
}

/// Atomic formulas over `x` and `y` with terms of depth at most two.
pub fn small_atoms() -> Vec<Formula> {
    let (x, y) = (Term::var("x"), Term::var("y"));
    vec![
        Formula::eq(x.clone(), y.clone()),
        Formula::eq(x.clone(), y.clone().complement()),
        Formula::eq(x.clone(), x.clone().join(y.clone())),
        Formula::contact(x.clone(), y.clone()),
        Formula::contact(x.clone(), y.clone().complement()),
        Formula::contact(x.clone(), x.clone()),
        Formula::contact(x.clone().complement(), y.clone()),
        Formula::contact(x.join(y.clone()), y),
    ]
}

/// Every instance of every scheme over [`small_atoms`] and [`small_terms`].
pub fn small_axiom_instances() -> Vec<(polycontact::logic::Scheme, Formula)> {
    polycontact::logic::axiom_instances(&small_atoms(), &small_terms(), INSTANCE_ZERO)
}
