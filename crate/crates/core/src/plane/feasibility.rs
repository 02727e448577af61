//! Exact feasibility of mixed strict / non-strict linear systems by
//! Fourier–Motzkin elimination, with a rational witness point.

use num_traits::{Signed, Zero};

use crate::numeric::{half, int, HalfSpace, Point, Rational};

/// `coeffs·x <= rhs`, or `<` when `strict`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
    pub strict: bool,
}

impl Constraint {
    pub fn closed(h: &HalfSpace) -> Self {
        Constraint {
            coeffs: h.normal().to_vec(),
            rhs: h.offset().clone(),
            strict: false,
        }
    }

    pub fn open(h: &HalfSpace) -> Self {
        Constraint {
            strict: true,
            ..Constraint::closed(h)
        }
    }

    /// The open complement `coeffs·x > rhs` of a closed half-space.
    pub fn open_outside(h: &HalfSpace) -> Self {
        Constraint::open(&h.flip())
    }
}

/// A point satisfying every constraint, or `None` if there is none.
pub(crate) fn solve(cons: &[Constraint], dim: usize) -> Option<Point> {
    solve_rec(cons.to_vec(), dim).map(Point::new)
}

pub(crate) fn feasible(cons: &[Constraint], dim: usize) -> bool {
    solve(cons, dim).is_some()
}

fn solve_rec(cons: Vec<Constraint>, dim: usize) -> Option<Vec<Rational>> {
    if dim == 0 {
        let ok = cons.iter().all(|c| {
            if c.strict {
                c.rhs.is_positive()
            } else {
                !c.rhs.is_negative()
            }
        });
        return ok.then(Vec::new);
    }
    let k = dim - 1;
    // Normalised so the coefficient of x_k is +1 (upper) or -1 (lower).
    let mut uppers = Vec::new();
    let mut lowers = Vec::new();
    let mut rest = Vec::new();
    for c in cons {
        let lead = c.coeffs[k].clone();
        if lead.is_zero() {
            let mut c = c;
            c.coeffs.truncate(k);
            rest.push(c);
            continue;
        }
        let scale = lead.abs();
        let norm = Constraint {
            coeffs: c.coeffs.iter().map(|v| v / &scale).collect(),
            rhs: &c.rhs / &scale,
            strict: c.strict,
        };
        if lead.is_positive() {
            uppers.push(norm);
        } else {
            lowers.push(norm);
        }
    }
    let mut projected = rest;
    for u in &uppers {
        for l in &lowers {
            let coeffs: Vec<Rational> = (0..k).map(|i| &u.coeffs[i] + &l.coeffs[i]).collect();
            projected.push(Constraint {
                coeffs,
                rhs: &u.rhs + &l.rhs,
                strict: u.strict || l.strict,
            });
        }
    }
    dedup(&mut projected);
    let mut x = solve_rec(projected, k)?;

    // Back-substitute: x_k <= u.rhs - u.rest·x and x_k >= -(l.rhs - l.rest·x).
    let partial = |c: &Constraint| -> Rational {
        c.coeffs[..k]
            .iter()
            .zip(&x)
            .fold(c.rhs.clone(), |acc, (a, v)| acc - a * v)
    };
    let hi = tightest(uppers.iter().map(|u| (partial(u), u.strict)), true);
    let lo = tightest(lowers.iter().map(|l| (-partial(l), l.strict)), false);
    let value = match (lo, hi) {
        (None, None) => Rational::zero(),
        (Some((l, _)), None) => l + int(1),
        (None, Some((h, _))) => h - int(1),
        (Some((l, ls)), Some((h, hs))) => {
            if l < h {
                half(&(l + h))
            } else if l == h && !ls && !hs {
                l
            } else {
                // The projection was feasible, so this is unreachable for
                // exact arithmetic.
                return None;
            }
        }
    };
    x.push(value);
    Some(x)
}

/// Minimum (`want_min`) or maximum of the bounds; a strict bound wins ties.
fn tightest(
    bounds: impl Iterator<Item = (Rational, bool)>,
    want_min: bool,
) -> Option<(Rational, bool)> {
    let mut best: Option<(Rational, bool)> = None;
    for (v, s) in bounds {
        best = match best {
            None => Some((v, s)),
            Some((b, bs)) => {
                let better = if want_min { v < b } else { v > b };
                if better {
                    Some((v, s))
                } else if v == b {
                    Some((b, bs || s))
                } else {
                    Some((b, bs))
                }
            }
        };
    }
    best
}

fn dedup(cons: &mut Vec<Constraint>) {
    let mut seen = std::collections::HashSet::new();
    cons.retain(|c| seen.insert(c.clone()));
}
