//! Polytopes in the plane: finite unions of basic polytopes, each a
//! regularised intersection of closed half-planes.

mod cuts;
pub(crate) mod feasibility;
mod text;

use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

use num_traits::{Signed, Zero};

use crate::numeric::{
    distance_lower_bound, half, int, squared_distance_to, HalfSpace, Hyperplane, Point, Rational,
};
use feasibility::{feasible, solve, Constraint};

pub use cuts::{
    boundary_representation, boundary_representation_with, brick_decomposition, bricks_of_block,
    BoundaryRepresentation, Brick, CutSide, CutSystem, Sheet,
};

/// Nonempty basic polytope. Its constraints are pairwise distinct and
/// irredundant; an empty constraint list is the whole plane.
#[derive(Debug, Clone)]
pub struct BasicPolytope {
    constraints: Vec<HalfSpace>,
    interior: Point,
}

impl PartialEq for BasicPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.constraints == other.constraints
    }
}

impl Eq for BasicPolytope {}

impl Hash for BasicPolytope {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.constraints.hash(state);
    }
}

fn closed_system<'a>(hs: impl IntoIterator<Item = &'a HalfSpace>) -> Vec<Constraint> {
    hs.into_iter().map(Constraint::closed).collect()
}

fn open_system<'a>(hs: impl IntoIterator<Item = &'a HalfSpace>) -> Vec<Constraint> {
    hs.into_iter().map(Constraint::open).collect()
}

/// Builds the basic polytope `⊓hs`, or `None` when it has empty interior.
///
/// # Panics
/// If a half-space is not planar.
pub fn mk_basic(hs: impl IntoIterator<Item = HalfSpace>) -> Option<BasicPolytope> {
    let set: BTreeSet<HalfSpace> = hs.into_iter().collect();
    assert!(
        set.iter().all(|h| h.dim() == 2),
        "basic polytopes live in the plane"
    );
    let mut constraints: Vec<HalfSpace> = set.into_iter().collect();
    let interior = solve(&open_system(&constraints), 2)?;
    let mut i = 0;
    while i < constraints.len() {
        let mut probe = closed_system(
            constraints
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h),
        );
        probe.push(Constraint::open_outside(&constraints[i]));
        if feasible(&probe, 2) {
            i += 1;
        } else {
            constraints.remove(i);
        }
    }
    Some(BasicPolytope {
        constraints,
        interior,
    })
}

impl BasicPolytope {
    pub fn whole() -> Self {
        BasicPolytope {
            constraints: Vec::new(),
            interior: Point::xy(int(0), int(0)),
        }
    }

    pub fn constraints(&self) -> &[HalfSpace] {
        &self.constraints
    }

    /// A point of the interior.
    pub fn interior_point(&self) -> &Point {
        &self.interior
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.constraints.iter().all(|h| h.contains(p))
    }

    pub fn meet(&self, other: &BasicPolytope) -> Option<BasicPolytope> {
        mk_basic(self.constraints.iter().chain(&other.constraints).cloned())
    }

    /// Closed sets share a point.
    pub fn touches(&self, other: &BasicPolytope) -> bool {
        feasible(
            &closed_system(self.constraints.iter().chain(&other.constraints)),
            2,
        )
    }

    pub fn overlaps(&self, other: &BasicPolytope) -> bool {
        feasible(
            &open_system(self.constraints.iter().chain(&other.constraints)),
            2,
        )
    }

    pub fn is_subset_of(&self, other: &BasicPolytope) -> bool {
        other.constraints.iter().all(|g| {
            let mut probe = closed_system(&self.constraints);
            probe.push(Constraint::open_outside(g));
            !feasible(&probe, 2)
        })
    }

    pub fn lines(&self) -> impl Iterator<Item = Hyperplane> + '_ {
        self.constraints.iter().map(HalfSpace::boundary)
    }

    pub fn is_bounded(&self) -> bool {
        // Bounded iff the recession cone {d | n·d <= 0 for all n} is {0};
        // probe the four axis-aligned cones.
        let dirs = [(1, 0), (-1, 0), (0, 1), (0, -1)];
        dirs.iter().all(|&(sx, sy)| {
            let mut cons: Vec<Constraint> = self
                .constraints
                .iter()
                .map(|h| Constraint {
                    coeffs: h.normal().to_vec(),
                    rhs: Rational::zero(),
                    strict: false,
                })
                .collect();
            // d·(sx,sy) >= 1 picks a nonzero direction in that half.
            cons.push(Constraint {
                coeffs: vec![int(-sx), int(-sy)],
                rhs: int(-1),
                strict: false,
            });
            !feasible(&cons, 2)
        })
    }
}

/// Finite union of nonempty basic polytopes. Equality is semantic; use
/// [`PlanePolytope::equals`].
#[derive(Debug, Clone, Default)]
pub struct PlanePolytope {
    parts: Vec<BasicPolytope>,
}

fn push_unique(parts: &mut Vec<BasicPolytope>, b: BasicPolytope) {
    if !parts.contains(&b) {
        parts.push(b);
    }
}

impl PlanePolytope {
    pub fn empty() -> Self {
        PlanePolytope { parts: Vec::new() }
    }

    pub fn whole() -> Self {
        PlanePolytope {
            parts: vec![BasicPolytope::whole()],
        }
    }

    pub fn from_parts(parts: impl IntoIterator<Item = BasicPolytope>) -> Self {
        let mut out = Vec::new();
        for b in parts {
            push_unique(&mut out, b);
        }
        PlanePolytope { parts: out }
    }

    /// Single basic polytope from half-planes; empty if the interior is.
    pub fn basic(hs: impl IntoIterator<Item = HalfSpace>) -> Self {
        PlanePolytope::from_parts(mk_basic(hs))
    }

    /// Axis-aligned box `[x0,x1] × [y0,y1]`.
    pub fn rect(x0: Rational, y0: Rational, x1: Rational, y1: Rational) -> Self {
        let hs = [
            HalfSpace::planar(int(1), int(0), x1),
            HalfSpace::planar(int(-1), int(0), -x0),
            HalfSpace::planar(int(0), int(1), y1),
            HalfSpace::planar(int(0), int(-1), -y0),
        ];
        PlanePolytope::basic(hs.into_iter().map(|h| h.expect("axis normal")))
    }

    pub fn parts(&self) -> &[BasicPolytope] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.parts.iter().any(|b| b.contains(p))
    }

    /// `Cl(R² \ self)`: flip every constraint of each part and distribute the
    /// regularised meet over the resulting unions of half-planes.
    pub fn complement(&self) -> Self {
        let mut acc = vec![BasicPolytope::whole()];
        for part in &self.parts {
            let mut next = Vec::new();
            for b in &acc {
                for h in &part.constraints {
                    if let Some(m) = mk_basic(b.constraints.iter().cloned().chain([h.flip()])) {
                        next.push(m);
                    }
                }
            }
            acc = prune(next);
            if acc.is_empty() {
                break;
            }
        }
        PlanePolytope { parts: acc }
    }

    pub fn union(&self, other: &Self) -> Self {
        PlanePolytope::from_parts(self.parts.iter().chain(&other.parts).cloned())
    }

    pub fn reg_meet(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        for a in &self.parts {
            for b in &other.parts {
                if let Some(m) = a.meet(b) {
                    push_unique(&mut out, m);
                }
            }
        }
        PlanePolytope { parts: out }
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        if self.is_empty() {
            return true;
        }
        let co = other.complement();
        self.reg_meet(&co).is_empty()
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }

    pub fn is_whole(&self) -> bool {
        self.complement().is_empty()
    }

    /// Topological contact: the closed sets share a point.
    pub fn contact_c(&self, other: &Self) -> bool {
        self.parts
            .iter()
            .any(|a| other.parts.iter().any(|b| a.touches(b)))
    }

    pub fn overlap(&self, other: &Self) -> bool {
        self.parts
            .iter()
            .any(|a| other.parts.iter().any(|b| a.overlaps(b)))
    }

    /// Distinct boundary lines of all parts, sorted.
    pub fn lines(&self) -> Vec<Hyperplane> {
        let set: BTreeSet<Hyperplane> = self.parts.iter().flat_map(|b| b.lines()).collect();
        set.into_iter().collect()
    }

    pub fn is_bounded(&self) -> bool {
        self.parts.iter().all(BasicPolytope::is_bounded)
    }

    /// Membership of the half-disk on side `sign` of `line` near `s`, where
    /// `s` lies on `line` and on no other boundary line of `self`.
    fn holds_side(&self, s: &Point, line: &Hyperplane, sign: i32) -> bool {
        self.parts.iter().any(|b| {
            b.constraints.iter().all(|h| {
                let v = h.eval(s);
                if !v.is_zero() {
                    return v.is_negative();
                }
                // h's boundary is `line`; the side is decided by n·normal.
                let along = h
                    .normal()
                    .iter()
                    .zip(line.normal())
                    .fold(Rational::zero(), |acc, (a, n)| acc + a * n);
                if sign > 0 {
                    along.is_negative()
                } else {
                    along.is_positive()
                }
            })
        })
    }

    /// Strong contact: some connected open subset of the union meets both.
    pub fn contact_sc(&self, other: &Self) -> bool {
        self.sc_witness(other).is_some()
    }

    /// An open disk inside `self ∪ other` meeting both, if there is one.
    pub fn sc_witness(&self, other: &Self) -> Option<(Point, Rational)> {
        if let Some(w) = self.overlap_witness(other) {
            return Some(w);
        }
        let lines: Vec<Hyperplane> = {
            let set: BTreeSet<Hyperplane> = self.lines().into_iter().chain(other.lines()).collect();
            set.into_iter().collect()
        };
        for (i, line) in lines.iter().enumerate() {
            for s in segment_samples(line, &lines) {
                let (p_up, p_dn) = (self.holds_side(&s, line, 1), self.holds_side(&s, line, -1));
                let (q_up, q_dn) = (
                    other.holds_side(&s, line, 1),
                    other.holds_side(&s, line, -1),
                );
                if (p_up && q_dn) || (q_up && p_dn) {
                    let r = clearance(
                        &s,
                        lines
                            .iter()
                            .enumerate()
                            .filter(|&(j, _)| j != i)
                            .map(|(_, l)| l),
                    );
                    return Some((s, r));
                }
            }
        }
        None
    }

    fn overlap_witness(&self, other: &Self) -> Option<(Point, Rational)> {
        for a in &self.parts {
            for b in &other.parts {
                if let Some(m) = a.meet(b) {
                    let lines: BTreeSet<Hyperplane> =
                        self.lines().into_iter().chain(other.lines()).collect();
                    let x = off_lines(m.interior_point(), &lines);
                    return Some((x.clone(), clearance(&x, lines.iter())));
                }
            }
        }
        None
    }
}

/// A point near `x`, in the same open cell of every line not through `x`,
/// and on none of `lines`.
fn off_lines(x: &Point, lines: &BTreeSet<Hyperplane>) -> Point {
    let (on, off): (Vec<&Hyperplane>, Vec<&Hyperplane>) = lines.iter().partition(|l| l.contains(x));
    if on.is_empty() {
        return x.clone();
    }
    // a direction (1, k) transversal to every line through x
    let k = (0i64..)
        .map(int)
        .find(|k| {
            on.iter()
                .all(|l| !(&l.normal()[0] + &l.normal()[1] * k).is_zero())
        })
        .expect("finitely many lines");
    let step = clearance(x, off.into_iter()) / (int(1) + k.abs());
    Point::xy(x.x() + &step, x.y() + &step * &k)
}

/// Half the smallest lower bound on the distance from `s` to `lines`, or 1.
fn clearance<'a>(s: &Point, lines: impl Iterator<Item = &'a Hyperplane>) -> Rational {
    lines
        .map(|l| distance_lower_bound(l, s))
        .min()
        .map_or_else(|| int(1), |d| half(&d))
}

/// One point in each open segment into which the other lines cut `line`.
fn segment_samples(line: &Hyperplane, lines: &[Hyperplane]) -> Vec<Point> {
    let base = line.base_point();
    let (dx, dy) = line.direction();
    let at = |t: &Rational| Point::xy(base.x() + t * &dx, base.y() + t * &dy);
    let mut ts: Vec<Rational> = Vec::new();
    for other in lines {
        if other == line || other.is_parallel(line) {
            continue;
        }
        // other.eval(base + t d) = other.eval(base) + t (n·d) = 0
        let nd = &other.normal()[0] * &dx + &other.normal()[1] * &dy;
        ts.push(-other.eval(&base) / nd);
    }
    ts.sort();
    ts.dedup();
    if ts.is_empty() {
        return vec![at(&Rational::zero())];
    }
    let mut out = Vec::with_capacity(ts.len() + 1);
    out.push(at(&(&ts[0] - int(1))));
    for w in ts.windows(2) {
        out.push(at(&half(&(&w[0] + &w[1]))));
    }
    out.push(at(&(ts.last().expect("nonempty") + int(1))));
    out
}

/// Drops empty, duplicate and contained parts.
fn prune(parts: Vec<BasicPolytope>) -> Vec<BasicPolytope> {
    let mut uniq: Vec<BasicPolytope> = Vec::new();
    for b in parts {
        push_unique(&mut uniq, b);
    }
    // fewer constraints first: larger pieces tend to come first
    uniq.sort_by_key(|b| b.constraints.len());
    let mut kept: Vec<BasicPolytope> = Vec::new();
    for b in uniq {
        if kept.iter().any(|k| b.is_subset_of(k)) {
            continue;
        }
        kept.retain(|k| !k.is_subset_of(&b));
        kept.push(b);
    }
    kept
}

/// Independent check that the open disk `(centre, radius)` lies in
/// `p ∪ q` and meets both.
pub fn verify_sc_witness(
    p: &PlanePolytope,
    q: &PlanePolytope,
    centre: &Point,
    radius: &Rational,
) -> bool {
    if !radius.is_positive() {
        return false;
    }
    let lines: BTreeSet<Hyperplane> = p.lines().into_iter().chain(q.lines()).collect();
    let r2 = radius * radius;
    let mut through = Vec::new();
    for l in &lines {
        if l.contains(centre) {
            through.push(l);
        } else if squared_distance_to(l, centre) < r2 {
            return false;
        }
    }
    match through.as_slice() {
        [] => p.contains(centre) && q.contains(centre),
        [mu] => {
            let n = mu.normal();
            let l1 = n.iter().fold(Rational::zero(), |acc, c| acc + c.abs());
            let step = half(radius) / l1;
            let probe = |sign: i64| {
                Point::xy(
                    centre.x() + &n[0] * &step * int(sign),
                    centre.y() + &n[1] * &step * int(sign),
                )
            };
            let (a, b) = (probe(1), probe(-1));
            let in_union = |x: &Point| p.contains(x) || q.contains(x);
            in_union(&a)
                && in_union(&b)
                && (p.contains(&a) || p.contains(&b))
                && (q.contains(&a) || q.contains(&b))
        }
        _ => false,
    }
}
