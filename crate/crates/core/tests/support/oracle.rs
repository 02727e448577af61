//! Scanline flood-fill oracle for strong contact of bounded plane polytopes.
//!
//! `A` and `B` are in strong contact iff one connected component of the
//! interior of `A ∪ B` meets both. The oracle samples the union on
//! horizontal rows `h` apart, computes each row's intersection with the
//! union exactly (runs), joins runs of neighbouring rows whose x-ranges
//! overlap and whose connecting vertical segment lies in the union, and
//! labels components with union-find.
//!
//! The row spacing satisfies `36 h² <= δ²`, where `δ` is the least
//! distance between distinct features of the two polytopes: vertices of
//! the parts, crossings of edges of different parts, and edges (a point is
//! compared with every edge not containing it). Rows avoid every feature
//! point.

use num_traits::{One, Signed, Zero};
use polycontact::{PlanePolytope, Rational};

type Q = Rational;

#[derive(Clone, Debug, PartialEq)]
struct Pt {
    x: Q,
    y: Q,
}

/// `a x + b y <= c`.
#[derive(Clone, Debug)]
struct Hs {
    a: Q,
    b: Q,
    c: Q,
}

struct Part {
    hs: Vec<Hs>,
    vertices: Vec<Pt>,
    edges: Vec<(Pt, Pt)>,
}

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn meet_lines(l: &Hs, m: &Hs) -> Option<Pt> {
    let det = &l.a * &m.b - &m.a * &l.b;
    if det.is_zero() {
        return None;
    }
    Some(Pt {
        x: (&l.c * &m.b - &m.c * &l.b) / &det,
        y: (&l.a * &m.c - &m.a * &l.c) / &det,
    })
}

fn on_line(h: &Hs, p: &Pt) -> bool {
    (&h.a * &p.x + &h.b * &p.y - &h.c).is_zero()
}

fn inside(h: &Hs, p: &Pt) -> bool {
    !(&h.a * &p.x + &h.b * &p.y - &h.c).is_positive()
}

fn part(hs: Vec<Hs>) -> Part {
    let mut vertices: Vec<Pt> = Vec::new();
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            if let Some(p) = meet_lines(&hs[i], &hs[j]) {
                if hs.iter().all(|h| inside(h, &p)) && !vertices.contains(&p) {
                    vertices.push(p);
                }
            }
        }
    }
    let mut edges = Vec::new();
    for h in &hs {
        // order the vertices on this line along its direction (-b, a)
        let mut on: Vec<(Q, &Pt)> = vertices
            .iter()
            .filter(|p| on_line(h, p))
            .map(|p| (-&h.b * &p.x + &h.a * &p.y, p))
            .collect();
        on.sort_by(|u, v| u.0.cmp(&v.0));
        if on.len() >= 2 {
            edges.push((on[0].1.clone(), on[on.len() - 1].1.clone()));
        }
    }
    Part {
        hs,
        vertices,
        edges,
    }
}

fn parts_of(p: &PlanePolytope) -> Vec<Part> {
    p.parts()
        .iter()
        .map(|b| {
            part(
                b.constraints()
                    .iter()
                    .map(|h| Hs {
                        a: h.normal()[0].clone(),
                        b: h.normal()[1].clone(),
                        c: h.offset().clone(),
                    })
                    .collect(),
            )
        })
        .collect()
}

fn dist2(p: &Pt, r: &Pt) -> Q {
    let (dx, dy) = (&p.x - &r.x, &p.y - &r.y);
    &dx * &dx + &dy * &dy
}

fn seg_dist2(v: &Pt, (p, r): &(Pt, Pt)) -> Q {
    let (dx, dy) = (&r.x - &p.x, &r.y - &p.y);
    let len2 = &dx * &dx + &dy * &dy;
    let t = ((&v.x - &p.x) * &dx + (&v.y - &p.y) * &dy) / &len2;
    let t = t.max(Q::zero()).min(Q::one());
    let foot = Pt {
        x: &p.x + &dx * &t,
        y: &p.y + &dy * &t,
    };
    dist2(v, &foot)
}

fn seg_crossing(e: &(Pt, Pt), f: &(Pt, Pt)) -> Option<Pt> {
    let line = |(p, r): &(Pt, Pt)| {
        let a = &r.y - &p.y;
        let b = &p.x - &r.x;
        let c = &a * &p.x + &b * &p.y;
        Hs { a, b, c }
    };
    let x = meet_lines(&line(e), &line(f))?;
    let within = |(p, r): &(Pt, Pt)| seg_dist2(&x, &(p.clone(), r.clone())).is_zero();
    (within(e) && within(f)).then_some(x)
}

/// Squared least distance between distinct features of `polys`.
pub fn feature_separation_sq(polys: &[&PlanePolytope]) -> Q {
    let parts: Vec<Part> = polys.iter().flat_map(|p| parts_of(p)).collect();
    let mut points: Vec<Pt> = Vec::new();
    for p in &parts {
        for v in &p.vertices {
            if !points.contains(v) {
                points.push(v.clone());
            }
        }
    }
    for (i, p) in parts.iter().enumerate() {
        for r in &parts[i + 1..] {
            for e in &p.edges {
                for f in &r.edges {
                    if let Some(x) = seg_crossing(e, f) {
                        if !points.contains(&x) {
                            points.push(x);
                        }
                    }
                }
            }
        }
    }
    let edges: Vec<&(Pt, Pt)> = parts.iter().flat_map(|p| p.edges.iter()).collect();
    let mut best: Option<Q> = None;
    let mut keep = |d: Q| {
        if !d.is_zero() && best.as_ref().is_none_or(|b| d < *b) {
            best = Some(d);
        }
    };
    for (i, v) in points.iter().enumerate() {
        for w in &points[i + 1..] {
            keep(dist2(v, w));
        }
        for e in &edges {
            keep(seg_dist2(v, e));
        }
    }
    best.unwrap_or_else(|| q(1))
}

/// Row spacing `1/N` with the least `N` such that `36/N² <= δ²`.
pub fn row_spacing(delta_sq: &Q) -> Q {
    let need = (q(36) / delta_sq).ceil().to_integer();
    let mut n = need.sqrt();
    while &n * &n < need {
        n += 1;
    }
    Q::new(1.into(), n)
}

/// Closed intervals of the line `y = row` (or `x = row` when `vertical`)
/// inside each part, with positive length.
fn slices(parts: &[(Part, bool)], row: &Q, vertical: bool) -> Vec<(Q, Q, bool)> {
    let mut out = Vec::new();
    for (p, is_a) in parts {
        let mut lo: Option<Q> = None;
        let mut hi: Option<Q> = None;
        let mut empty = false;
        for h in &p.hs {
            let (along, across) = if vertical { (&h.b, &h.a) } else { (&h.a, &h.b) };
            let rhs = &h.c - across * row;
            if along.is_zero() {
                if rhs.is_negative() {
                    empty = true;
                }
            } else if along.is_positive() {
                let v = rhs / along;
                if hi.as_ref().is_none_or(|x| v < *x) {
                    hi = Some(v);
                }
            } else {
                let v = rhs / along;
                if lo.as_ref().is_none_or(|x| v > *x) {
                    lo = Some(v);
                }
            }
        }
        if let (false, Some(lo), Some(hi)) = (empty, lo, hi) {
            if lo < hi {
                out.push((lo, hi, *is_a));
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
struct Run {
    lo: Q,
    hi: Q,
    a: bool,
    b: bool,
}

fn merge_runs(mut s: Vec<(Q, Q, bool)>) -> Vec<Run> {
    s.sort_by(|u, v| u.0.cmp(&v.0));
    let mut runs: Vec<Run> = Vec::new();
    for (lo, hi, is_a) in s {
        match runs.last_mut() {
            Some(r) if lo <= r.hi => {
                if hi > r.hi {
                    r.hi = hi;
                }
                r.a |= is_a;
                r.b |= !is_a;
            }
            _ => runs.push(Run {
                lo,
                hi,
                a: is_a,
                b: !is_a,
            }),
        }
    }
    runs
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// A value in `(lo, hi)` that differs from every entry of `avoid`.
fn generic_point(lo: &Q, hi: &Q, avoid: &[Q]) -> Q {
    for den in 2i64.. {
        for num in 1..den {
            let t = Q::new(num.into(), den.into());
            let x = lo + (hi - lo) * t;
            if !avoid.contains(&x) {
                return x;
            }
        }
    }
    unreachable!()
}

/// Strong contact of two bounded plane polytopes by scanline flood fill.
pub fn flood_fill_sc(a: &PlanePolytope, b: &PlanePolytope) -> bool {
    if a.is_empty() || b.is_empty() {
        return false;
    }
    let delta_sq = feature_separation_sq(&[a, b]);
    let h = row_spacing(&delta_sq);
    let parts: Vec<(Part, bool)> = parts_of(a)
        .into_iter()
        .map(|p| (p, true))
        .chain(parts_of(b).into_iter().map(|p| (p, false)))
        .collect();
    let mut feature_x: Vec<Q> = Vec::new();
    let mut feature_y: Vec<Q> = Vec::new();
    for (p, _) in &parts {
        for v in &p.vertices {
            feature_x.push(v.x.clone());
            feature_y.push(v.y.clone());
        }
    }
    for (i, (p, _)) in parts.iter().enumerate() {
        for (r, _) in &parts[i + 1..] {
            for e in &p.edges {
                for f in &r.edges {
                    if let Some(x) = seg_crossing(e, f) {
                        feature_x.push(x.x);
                        feature_y.push(x.y);
                    }
                }
            }
        }
    }
    let ymin = feature_y
        .iter()
        .min()
        .cloned()
        .expect("bounded parts have vertices");
    let ymax = feature_y
        .iter()
        .max()
        .cloned()
        .expect("bounded parts have vertices");

    // offset so that no row passes through a feature point
    let mut offset = None;
    'search: for den in 2i64.. {
        for num in 1..den {
            let s = &h * Q::new(num.into(), den.into());
            if feature_y
                .iter()
                .all(|y| !((y - &ymin - &s) / &h).is_integer())
            {
                offset = Some(s);
                break 'search;
            }
        }
    }
    let offset = offset.expect("some offset avoids finitely many points");

    let mut parent: Vec<usize> = Vec::new();
    let mut flags: Vec<(bool, bool)> = Vec::new();
    let mut prev: Vec<(usize, Run)> = Vec::new();
    let mut prev_y: Option<Q> = None;
    let mut y = &ymin + &offset;
    while y < ymax {
        let runs = merge_runs(slices(&parts, &y, false));
        let mut cur = Vec::with_capacity(runs.len());
        for r in runs {
            let id = parent.len();
            parent.push(id);
            flags.push((r.a, r.b));
            if let Some(py) = &prev_y {
                for (pid, pr) in &prev {
                    let lo = (&pr.lo).max(&r.lo);
                    let hi = (&pr.hi).min(&r.hi);
                    if lo >= hi {
                        continue;
                    }
                    let x = generic_point(lo, hi, &feature_x);
                    let column = merge_runs(slices(&parts, &x, true));
                    if column.iter().any(|c| c.lo <= *py && c.hi >= y) {
                        let (ra, rb) = (find(&mut parent, *pid), find(&mut parent, id));
                        parent[ra] = rb;
                    }
                }
            }
            cur.push((id, r));
        }
        prev = cur;
        prev_y = Some(y.clone());
        y += &h;
    }
    let mut comp: std::collections::HashMap<usize, (bool, bool)> = std::collections::HashMap::new();
    for (i, &(fa, fb)) in flags.iter().enumerate() {
        let root = find(&mut parent, i);
        let e = comp.entry(root).or_default();
        e.0 |= fa;
        e.1 |= fb;
    }
    comp.values().any(|&(fa, fb)| fa && fb)
}
