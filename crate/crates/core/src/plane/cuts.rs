//! Decomposition of the plane by a finite set of cut lines: bricks (cells
//! cut out by one side of every line), sheets (open pieces of the lines
//! between vertices) and the boundary of a polytope in those terms.

use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use super::feasibility::{solve, Constraint};
use super::PlanePolytope;
use crate::error::GeometryError;
use crate::numeric::{
    half, int, intersect_lines, HalfSpace, Hyperplane, LineIntersection, Point, Rational,
};

/// `Below` is the closed side `normal·x <= offset`, `Above` the other one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CutSide {
    Below,
    Above,
}

impl CutSide {
    pub fn opposite(self) -> CutSide {
        match self {
            CutSide::Below => CutSide::Above,
            CutSide::Above => CutSide::Below,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutSystem {
    cuts: Vec<Hyperplane>,
}

impl CutSystem {
    /// Distinct planar lines, kept sorted.
    pub fn new(cuts: impl IntoIterator<Item = Hyperplane>) -> Result<Self, GeometryError> {
        let set: BTreeSet<Hyperplane> = cuts.into_iter().collect();
        if let Some(bad) = set.iter().find(|l| l.dim() != 2) {
            return Err(GeometryError::NotPlanar(bad.dim()));
        }
        Ok(CutSystem {
            cuts: set.into_iter().collect(),
        })
    }

    pub fn cuts(&self) -> &[Hyperplane] {
        &self.cuts
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    pub fn side(&self, cut: usize, side: CutSide) -> HalfSpace {
        let (below, above) = self.cuts[cut].sides();
        match side {
            CutSide::Below => below,
            CutSide::Above => above,
        }
    }

    /// Both closed sides of every cut.
    pub fn sides(&self) -> Vec<HalfSpace> {
        (0..self.len())
            .flat_map(|i| [self.side(i, CutSide::Below), self.side(i, CutSide::Above)])
            .collect()
    }

    /// Pairwise intersection points, sorted and distinct.
    pub fn vertices(&self) -> Vec<Point> {
        let mut set = BTreeSet::new();
        for (i, a) in self.cuts.iter().enumerate() {
            for b in &self.cuts[i + 1..] {
                if let Ok(LineIntersection::Point(p)) = intersect_lines(a, b) {
                    set.insert(p);
                }
            }
        }
        set.into_iter().collect()
    }

    /// The side of `cut` strictly containing `p`, or `None` on the line.
    fn strict_side(&self, cut: usize, p: &Point) -> Option<CutSide> {
        let v = self.cuts[cut].eval(p);
        if v.is_negative() {
            Some(CutSide::Below)
        } else if v.is_positive() {
            Some(CutSide::Above)
        } else {
            None
        }
    }

    /// Open segments of every cut between consecutive vertices.
    pub fn sheets(&self) -> Vec<Sheet> {
        let mut out = Vec::new();
        for (i, line) in self.cuts.iter().enumerate() {
            let base = line.base_point();
            let (dx, dy) = line.direction();
            let at = |t: &Rational| Point::xy(base.x() + t * &dx, base.y() + t * &dy);
            let mut ts: Vec<Rational> = self
                .cuts
                .iter()
                .filter(|o| !o.is_parallel(line))
                .map(|o| {
                    let nd = &o.normal()[0] * &dx + &o.normal()[1] * &dy;
                    -o.eval(&base) / nd
                })
                .collect();
            ts.sort();
            ts.dedup();
            let mut bounds: Vec<(Option<Rational>, Option<Rational>)> = Vec::new();
            let mut prev: Option<Rational> = None;
            for t in &ts {
                bounds.push((prev.clone(), Some(t.clone())));
                prev = Some(t.clone());
            }
            bounds.push((prev, None));
            for (lo, hi) in bounds {
                let t = match (&lo, &hi) {
                    (Some(l), Some(h)) => half(&(l + h)),
                    (Some(l), None) => l + int(1),
                    (None, Some(h)) => h - int(1),
                    (None, None) => Rational::zero(),
                };
                let sample = at(&t);
                let mut below = Vec::with_capacity(self.len());
                for j in 0..self.len() {
                    below.push(if j == i {
                        CutSide::Below
                    } else {
                        self.strict_side(j, &sample)
                            .expect("sample avoids other cuts")
                    });
                }
                let mut above = below.clone();
                above[i] = CutSide::Above;
                out.push(Sheet {
                    cut: i,
                    from: lo.as_ref().map(&at),
                    to: hi.as_ref().map(&at),
                    sample,
                    toasts: [below, above],
                });
            }
        }
        out
    }
}

/// A cell of a cut system: one chosen side per cut, with nonempty interior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Brick {
    alternative: Vec<CutSide>,
    interior: Point,
}

impl Brick {
    pub fn alternative(&self) -> &[CutSide] {
        &self.alternative
    }

    /// A point of the open core.
    pub fn interior_point(&self) -> &Point {
        &self.interior
    }

    pub fn halfspaces(&self, cs: &CutSystem) -> Vec<HalfSpace> {
        self.alternative
            .iter()
            .enumerate()
            .map(|(i, &s)| cs.side(i, s))
            .collect()
    }

    pub fn to_polytope(&self, cs: &CutSystem) -> PlanePolytope {
        PlanePolytope::basic(self.halfspaces(cs))
    }
}

/// All bricks of `cs`, in lexicographic order of their alternatives.
pub fn brick_decomposition(cs: &CutSystem) -> Vec<Brick> {
    let mut partial: Vec<Vec<CutSide>> = vec![Vec::new()];
    let mut points = vec![Point::xy(int(0), int(0))];
    for i in 0..cs.len() {
        let mut next = Vec::new();
        let mut next_points = Vec::new();
        for alt in &partial {
            for side in [CutSide::Below, CutSide::Above] {
                let mut cand = alt.clone();
                cand.push(side);
                let system: Vec<Constraint> = cand
                    .iter()
                    .enumerate()
                    .map(|(j, &s)| Constraint::open(&cs.side(j, s)))
                    .collect();
                if let Some(p) = solve(&system, 2) {
                    next.push(cand);
                    next_points.push(p);
                }
            }
        }
        debug_assert!(i + 1 == next.first().map_or(i + 1, Vec::len));
        partial = next;
        points = next_points;
    }
    partial
        .into_iter()
        .zip(points)
        .map(|(alternative, interior)| Brick {
            alternative,
            interior,
        })
        .collect()
}

/// Bricks whose alternative extends the admissible choice `block`
/// (pairs of cut index and side).
pub fn bricks_of_block(cs: &CutSystem, block: &[(usize, CutSide)]) -> Vec<Brick> {
    brick_decomposition(cs)
        .into_iter()
        .filter(|b| block.iter().all(|&(i, s)| b.alternative[i] == s))
        .collect()
}

/// A relatively open piece of one cut, bounded by consecutive vertices
/// (`None` ends are unbounded).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sheet {
    cut: usize,
    from: Option<Point>,
    to: Option<Point>,
    sample: Point,
    toasts: [Vec<CutSide>; 2],
}

impl Sheet {
    pub fn cut(&self) -> usize {
        self.cut
    }

    pub fn endpoints(&self) -> (Option<&Point>, Option<&Point>) {
        (self.from.as_ref(), self.to.as_ref())
    }

    /// A point of the open sheet.
    pub fn sample(&self) -> &Point {
        &self.sample
    }

    /// Alternatives of the two bricks on either side of the sheet.
    pub fn toasts(&self) -> &[Vec<CutSide>; 2] {
        &self.toasts
    }
}

/// The boundary of a polytope as open sheets plus isolated vertices.
#[derive(Debug, Clone)]
pub struct BoundaryRepresentation {
    pub cuts: CutSystem,
    pub sheets: Vec<Sheet>,
    pub vertices: Vec<Point>,
}

/// Uses the boundary lines of `p` as cuts.
pub fn boundary_representation(p: &PlanePolytope) -> BoundaryRepresentation {
    boundary_representation_with(p, &CutSystem { cuts: Vec::new() })
}

/// Uses the boundary lines of `p` together with `extra`.
pub fn boundary_representation_with(
    p: &PlanePolytope,
    extra: &CutSystem,
) -> BoundaryRepresentation {
    let cuts = CutSystem::new(p.lines().into_iter().chain(extra.cuts.iter().cloned()))
        .expect("planar lines");
    if p.is_empty() {
        return BoundaryRepresentation {
            cuts,
            sheets: Vec::new(),
            vertices: Vec::new(),
        };
    }
    let inside: HashMap<Vec<CutSide>, bool> = brick_decomposition(&cuts)
        .into_iter()
        .map(|b| {
            let v = p.contains(&b.interior);
            (b.alternative, v)
        })
        .collect();
    let sheets = cuts
        .sheets()
        .into_iter()
        .filter(|s| inside[&s.toasts[0]] != inside[&s.toasts[1]])
        .collect();
    let vertices = cuts
        .vertices()
        .into_iter()
        .filter(|v| {
            let fixed: Vec<Option<CutSide>> =
                (0..cuts.len()).map(|j| cuts.strict_side(j, v)).collect();
            let free: Vec<usize> = (0..cuts.len()).filter(|&j| fixed[j].is_none()).collect();
            let (mut any_in, mut any_out) = (false, false);
            for mask in 0u64..(1u64 << free.len()) {
                let mut alt: Vec<CutSide> =
                    fixed.iter().map(|s| s.unwrap_or(CutSide::Below)).collect();
                for (bit, &j) in free.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        alt[j] = CutSide::Above;
                    }
                }
                match inside.get(&alt) {
                    Some(true) => any_in = true,
                    Some(false) => any_out = true,
                    None => {}
                }
            }
            any_in && any_out
        })
        .collect();
    BoundaryRepresentation {
        cuts,
        sheets,
        vertices,
    }
}
