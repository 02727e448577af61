//! Seeded generators for polytopes and adjacency spaces. Coordinates come
//! from a coarse lattice so that shared edges and vertices are common.

use num_traits::{Signed, Zero};
use rand::Rng;

use crate::adjacency::AdjacencySpace;
use crate::interval::{IntervalPolytope, Piece};
use crate::numeric::{int, rat, HalfSpace, Point, Rational};
use crate::plane::{mk_basic, PlanePolytope};

/// `k/2` with `k` uniform in `-2m..=2m`.
fn half_lattice<R: Rng>(rng: &mut R, m: i64) -> Rational {
    lattice(rng, m, 2)
}

/// `k/d` with `k` uniform in `-dm..=dm`.
fn lattice<R: Rng>(rng: &mut R, m: i64, d: i64) -> Rational {
    rat(rng.random_range(-d * m..=d * m), d)
}

/// Up to four pieces with half-integer endpoints in `[-6, 6]`; about one in
/// five ends is infinite.
pub fn interval_polytope<R: Rng>(rng: &mut R) -> IntervalPolytope {
    let n = rng.random_range(0..=4);
    let mut pieces = Vec::with_capacity(n);
    for _ in 0..n {
        let a = half_lattice(rng, 6);
        let b = half_lattice(rng, 6);
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let lo = (!rng.random_bool(0.2)).then_some(a);
        let hi = (!rng.random_bool(0.2)).then_some(b);
        pieces.push(Piece::new(lo, hi));
    }
    IntervalPolytope::canonicalize(pieces)
}

/// Interval polytope other than the empty set and the whole line.
pub fn proper_interval_polytope<R: Rng>(rng: &mut R) -> IntervalPolytope {
    loop {
        let p = interval_polytope(rng);
        if !p.is_empty() && !p.is_whole() {
            return p;
        }
    }
}

fn random_box<R: Rng>(rng: &mut R, d: i64) -> Vec<HalfSpace> {
    let (mut x0, mut x1) = (lattice(rng, 4, d), lattice(rng, 4, d));
    let (mut y0, mut y1) = (lattice(rng, 4, d), lattice(rng, 4, d));
    if x0 > x1 {
        std::mem::swap(&mut x0, &mut x1);
    }
    if y0 > y1 {
        std::mem::swap(&mut y0, &mut y1);
    }
    let axis =
        |a: i64, b: i64, c: Rational| HalfSpace::planar(int(a), int(b), c).expect("axis normal");
    vec![
        axis(1, 0, x1),
        axis(-1, 0, -x0),
        axis(0, 1, y1),
        axis(0, -1, -y0),
    ]
}

fn random_triangle<R: Rng>(rng: &mut R, d: i64) -> Vec<HalfSpace> {
    let pts: Vec<Point> = (0..3)
        .map(|_| Point::xy(lattice(rng, 4, d), lattice(rng, 4, d)))
        .collect();
    let mut hs = Vec::new();
    for i in 0..3 {
        let (p, q, r) = (&pts[i], &pts[(i + 1) % 3], &pts[(i + 2) % 3]);
        let a = q.y() - p.y();
        let b = p.x() - q.x();
        let c = &a * p.x() + &b * p.y();
        let Ok(h) = HalfSpace::planar(a, b, c) else {
            return Vec::new();
        };
        let v = h.eval(r);
        if v.is_zero() {
            // collinear: no interior
            return Vec::new();
        }
        hs.push(if v.is_negative() { h } else { h.flip() });
    }
    hs
}

fn random_half_plane<R: Rng>(rng: &mut R) -> Vec<HalfSpace> {
    loop {
        let (a, b) = (rng.random_range(-2i64..=2), rng.random_range(-2i64..=2));
        if a != 0 || b != 0 {
            return vec![HalfSpace::planar(int(a), int(b), half_lattice(rng, 3)).expect("nonzero")];
        }
    }
}

/// Union of one to three boxes or triangles with coordinates in `[-4, 4]`
/// (denominators at most 2); with `bounded == false`, half-planes and
/// wedges are mixed in.
pub fn plane_polytope<R: Rng>(rng: &mut R, bounded: bool) -> PlanePolytope {
    plane_polytope_on(rng, bounded, 2)
}

/// Like [`plane_polytope`] with vertex coordinates on the lattice
/// `Z/denominator`.
pub fn plane_polytope_on<R: Rng>(rng: &mut R, bounded: bool, denominator: i64) -> PlanePolytope {
    assert!(denominator >= 1, "denominator must be positive");
    let n = rng.random_range(1..=3);
    let mut parts = Vec::new();
    for _ in 0..n {
        let shape = rng.random_range(0..if bounded { 2 } else { 4 });
        let hs = match shape {
            0 => random_box(rng, denominator),
            1 => random_triangle(rng, denominator),
            2 => random_half_plane(rng),
            _ => {
                let mut w = random_half_plane(rng);
                w.extend(random_half_plane(rng));
                w
            }
        };
        // an empty list would be the whole plane; degenerate shapes yield none
        if !hs.is_empty() {
            parts.extend(mk_basic(hs));
        }
    }
    PlanePolytope::from_parts(parts)
}

/// Like [`plane_polytope`] but never empty and never the whole plane.
pub fn proper_plane_polytope<R: Rng>(rng: &mut R, bounded: bool) -> PlanePolytope {
    loop {
        let p = plane_polytope(rng, bounded);
        if !p.is_empty() && (bounded || !p.is_whole()) {
            return p;
        }
    }
}

/// Connected space on `n` cells: a uniform random labelled tree (Prüfer
/// code) plus up to `extra` further edges.
pub fn connected_space<R: Rng>(rng: &mut R, n: usize, extra: usize) -> AdjacencySpace {
    assert!(n >= 1, "a space needs a cell");
    let code: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.random_range(0..n))
        .collect();
    let mut edges = crate::adjacency::prufer_tree(&code, n);
    if n >= 2 {
        for _ in 0..rng.random_range(0..=extra) {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            if a != b {
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    AdjacencySpace::from_indices(n, &edges).expect("nonempty")
}
