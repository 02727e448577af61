//! Evaluation of terms and formulas in a contact algebra.

use std::collections::BTreeMap;

use super::{Formula, Term};
use crate::algebra::ContactAlgebra;
use crate::error::LogicError;

/// Assignment of algebra elements to variable names.
pub type Valuation<E> = BTreeMap<String, E>;

pub fn eval_term<A: ContactAlgebra>(
    t: &Term,
    alg: &A,
    v: &Valuation<A::Element>,
) -> Result<A::Element, LogicError> {
    Ok(match t {
        Term::Var(name) => v
            .get(name)
            .cloned()
            .ok_or_else(|| LogicError::UnboundVariable(name.clone()))?,
        Term::Complement(a) => alg.complement(&eval_term(a, alg, v)?),
        Term::Join(a, b) => alg.join(&eval_term(a, alg, v)?, &eval_term(b, alg, v)?),
    })
}

/// Truth of `phi` in `alg` under `v`. Every variable of `phi` must be bound,
/// even those in a disjunct that is never reached.
pub fn eval<A: ContactAlgebra>(
    phi: &Formula,
    alg: &A,
    v: &Valuation<A::Element>,
) -> Result<bool, LogicError> {
    if let Some(missing) = phi.variables().into_iter().find(|x| !v.contains_key(x)) {
        return Err(LogicError::UnboundVariable(missing));
    }
    Compiled::new(phi, &v.keys().cloned().collect::<Vec<_>>()).map(|c| {
        let values: Vec<A::Element> = v.values().cloned().collect();
        c.eval(alg, &values)
    })
}

#[derive(Debug, Clone)]
enum CTerm {
    Var(usize),
    Complement(Box<CTerm>),
    Join(Box<CTerm>, Box<CTerm>),
}

#[derive(Debug, Clone)]
enum CFormula {
    Eq(CTerm, CTerm),
    Contact(CTerm, CTerm),
    Not(Box<CFormula>),
    Or(Box<CFormula>, Box<CFormula>),
}

/// A formula with variables replaced by positions in a value slice, for
/// evaluating the same formula under many valuations.
#[derive(Debug, Clone)]
pub(crate) struct Compiled {
    root: CFormula,
}

impl Compiled {
    /// `vars` lists the variable order of the value slices; all variables of
    /// `phi` must be in it.
    pub fn new(phi: &Formula, vars: &[String]) -> Result<Self, LogicError> {
        fn term(t: &Term, vars: &[String]) -> Result<CTerm, LogicError> {
            Ok(match t {
                Term::Var(name) => CTerm::Var(
                    vars.iter()
                        .position(|x| x == name)
                        .ok_or_else(|| LogicError::UnboundVariable(name.clone()))?,
                ),
                Term::Complement(a) => CTerm::Complement(Box::new(term(a, vars)?)),
                Term::Join(a, b) => CTerm::Join(Box::new(term(a, vars)?), Box::new(term(b, vars)?)),
            })
        }
        fn formula(f: &Formula, vars: &[String]) -> Result<CFormula, LogicError> {
            Ok(match f {
                Formula::Eq(a, b) => CFormula::Eq(term(a, vars)?, term(b, vars)?),
                Formula::Contact(a, b) => CFormula::Contact(term(a, vars)?, term(b, vars)?),
                Formula::Not(g) => CFormula::Not(Box::new(formula(g, vars)?)),
                Formula::Or(g, h) => {
                    CFormula::Or(Box::new(formula(g, vars)?), Box::new(formula(h, vars)?))
                }
            })
        }
        Ok(Compiled {
            root: formula(phi, vars)?,
        })
    }

    pub fn eval<A: ContactAlgebra>(&self, alg: &A, values: &[A::Element]) -> bool {
        fn term<A: ContactAlgebra>(t: &CTerm, alg: &A, values: &[A::Element]) -> A::Element {
            match t {
                CTerm::Var(i) => values[*i].clone(),
                CTerm::Complement(a) => alg.complement(&term(a, alg, values)),
                CTerm::Join(a, b) => alg.join(&term(a, alg, values), &term(b, alg, values)),
            }
        }
        fn formula<A: ContactAlgebra>(f: &CFormula, alg: &A, values: &[A::Element]) -> bool {
            match f {
                CFormula::Eq(a, b) => alg.equal(&term(a, alg, values), &term(b, alg, values)),
                CFormula::Contact(a, b) => {
                    alg.contact(&term(a, alg, values), &term(b, alg, values))
                }
                CFormula::Not(g) => !formula(g, alg, values),
                CFormula::Or(g, h) => formula(g, alg, values) || formula(h, alg, values),
            }
        }
        formula(&self.root, alg, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjacency::AdjacencySpace;
    use crate::algebra::{induced_algebra, CellSet, ContactKind, PolytopeAlgebra};
    use crate::interval::IntervalPolytope;
    use crate::logic::parse_formula;
    use crate::random;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn val<E>(pairs: impl IntoIterator<Item = (&'static str, E)>) -> Valuation<E> {
        pairs.into_iter().map(|(k, e)| (k.to_string(), e)).collect()
    }

    #[test]
    fn reflexive_equation_is_true() {
        let alg = induced_algebra(&AdjacencySpace::from_indices(2, &[(0, 1)]).unwrap()).unwrap();
        let f = parse_formula("x == x").unwrap();
        for a in alg.elements() {
            assert!(eval(&f, &alg, &val([("x", a)])).unwrap());
        }
    }

    #[test]
    fn null_contact_axiom_holds() {
        let alg =
            induced_algebra(&AdjacencySpace::from_indices(3, &[(0, 1), (1, 2)]).unwrap()).unwrap();
        let f = parse_formula("~C(0,p)").unwrap();
        for a in alg.elements() {
            assert!(eval(&f, &alg, &val([("p", a)])).unwrap());
        }
    }

    #[test]
    fn connectedness_instance_depends_on_space() {
        let f = parse_formula("x != 0 => (x != 1 => C(x,-x))").unwrap();
        let path =
            induced_algebra(&AdjacencySpace::from_indices(3, &[(0, 1), (1, 2)]).unwrap()).unwrap();
        assert!(path
            .elements()
            .all(|a| eval(&f, &path, &val([("x", a)])).unwrap()));
        let apart = induced_algebra(&AdjacencySpace::from_indices(2, &[]).unwrap()).unwrap();
        assert!(!eval(&f, &apart, &val([("x", CellSet::singleton(0))])).unwrap());
    }

    #[test]
    fn unbound_variable_is_reported() {
        let alg = PolytopeAlgebra::interval(ContactKind::Strong);
        let f = parse_formula("C(p,q) | p == p").unwrap();
        let err = eval(&f, &alg, &val([("p", IntervalPolytope::whole())])).unwrap_err();
        assert_eq!(err, LogicError::UnboundVariable("q".into()));
    }

    #[test]
    fn le_matches_its_expansion_on_random_polytopes() {
        let alg = PolytopeAlgebra::interval(ContactKind::Strong);
        let le = parse_formula("a <= b").unwrap();
        let eq = parse_formula("a + b == b").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let a = random::interval_polytope(&mut rng);
            let b = if rng.random_bool(0.3) {
                a.union(&random::interval_polytope(&mut rng))
            } else {
                random::interval_polytope(&mut rng)
            };
            let v = val([("a", a), ("b", b)]);
            assert_eq!(eval(&le, &alg, &v).unwrap(), eval(&eq, &alg, &v).unwrap());
        }
    }
}
