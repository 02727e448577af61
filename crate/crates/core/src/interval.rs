//! Polytopes on the real line: finite unions of closed intervals and rays.
//!
//! Values are kept canonical (sorted, pairwise separated by gaps of positive
//! length, no single points), so structural equality is set equality.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::ParseError;
use crate::numeric::{half, int, Rational};
use crate::text::Cursor;

/// A closed piece `[lo, hi]`; `None` stands for an infinite end.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Piece {
    lo: Option<Rational>,
    hi: Option<Rational>,
}

fn cmp_lo(a: &Option<Rational>, b: &Option<Rational>) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
        (Some(x), Some(y)) => x.cmp(y),
    }
}

fn cmp_hi(a: &Option<Rational>, b: &Option<Rational>) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Greater,
        (_, None) => Ordering::Less,
        (Some(x), Some(y)) => x.cmp(y),
    }
}

/// `lo <= hi` where lo may be -inf and hi +inf.
fn lo_le_hi(lo: &Option<Rational>, hi: &Option<Rational>) -> bool {
    match (lo, hi) {
        (Some(l), Some(h)) => l <= h,
        _ => true,
    }
}

fn lo_lt_hi(lo: &Option<Rational>, hi: &Option<Rational>) -> bool {
    match (lo, hi) {
        (Some(l), Some(h)) => l < h,
        _ => true,
    }
}

impl Piece {
    pub fn new(lo: Option<Rational>, hi: Option<Rational>) -> Self {
        Piece { lo, hi }
    }

    pub fn closed(a: Rational, b: Rational) -> Self {
        Piece::new(Some(a), Some(b))
    }

    pub fn lo(&self) -> Option<&Rational> {
        self.lo.as_ref()
    }

    pub fn hi(&self) -> Option<&Rational> {
        self.hi.as_ref()
    }

    fn has_interior(&self) -> bool {
        lo_lt_hi(&self.lo, &self.hi)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo.as_ref().is_none_or(|l| l <= x) && self.hi.as_ref().is_none_or(|h| x <= h)
    }

    /// Length, or `None` if unbounded.
    fn length(&self) -> Option<Rational> {
        match (&self.lo, &self.hi) {
            (Some(l), Some(h)) => Some(h - l),
            _ => None,
        }
    }

    fn intersect(&self, other: &Piece) -> Piece {
        let lo = if cmp_lo(&self.lo, &other.lo) == Ordering::Greater {
            self.lo.clone()
        } else {
            other.lo.clone()
        };
        let hi = if cmp_hi(&self.hi, &other.hi) == Ordering::Less {
            self.hi.clone()
        } else {
            other.hi.clone()
        };
        Piece { lo, hi }
    }

    fn meets(&self, other: &Piece) -> bool {
        let p = self.intersect(other);
        lo_le_hi(&p.lo, &p.hi)
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lo {
            None => write!(f, "(-inf,")?,
            Some(l) => write!(f, "[{l},")?,
        }
        match &self.hi {
            None => write!(f, "inf)"),
            Some(h) => write!(f, "{h}]"),
        }
    }
}

/// Canonical regular closed subset of the real line.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntervalPolytope {
    pieces: Vec<Piece>,
}

impl IntervalPolytope {
    pub fn empty() -> Self {
        IntervalPolytope { pieces: Vec::new() }
    }

    pub fn whole() -> Self {
        IntervalPolytope {
            pieces: vec![Piece::new(None, None)],
        }
    }

    pub fn interval(a: Rational, b: Rational) -> Self {
        Self::canonicalize(vec![Piece::closed(a, b)])
    }

    /// `(-inf, b]`
    pub fn ray_le(b: Rational) -> Self {
        Self::canonicalize(vec![Piece::new(None, Some(b))])
    }

    /// `[a, +inf)`
    pub fn ray_ge(a: Rational) -> Self {
        Self::canonicalize(vec![Piece::new(Some(a), None)])
    }

    /// Merges overlapping or touching pieces and drops pieces without
    /// interior (single points and reversed bounds).
    pub fn canonicalize(raw: Vec<Piece>) -> Self {
        let mut raw: Vec<Piece> = raw.into_iter().filter(Piece::has_interior).collect();
        raw.sort_by(|a, b| cmp_lo(&a.lo, &b.lo));
        let mut out: Vec<Piece> = Vec::with_capacity(raw.len());
        for piece in raw {
            if let Some(last) = out.last_mut() {
                if lo_le_hi(&piece.lo, &last.hi) {
                    if cmp_hi(&piece.hi, &last.hi) == Ordering::Greater {
                        last.hi = piece.hi;
                    }
                    continue;
                }
            }
            out.push(piece);
        }
        IntervalPolytope { pieces: out }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.pieces.len() == 1 && self.pieces[0].lo.is_none() && self.pieces[0].hi.is_none()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.pieces.iter().any(|p| p.contains(x))
    }

    /// `Cl(R \ self)`.
    pub fn complement(&self) -> Self {
        let mut out = Vec::with_capacity(self.pieces.len() + 1);
        // Left end of the gap currently open; `None` is -inf.
        let mut gap_from: Option<Rational> = None;
        for piece in &self.pieces {
            match &piece.lo {
                None => {}
                Some(l) => out.push(Piece::new(gap_from.clone(), Some(l.clone()))),
            }
            match &piece.hi {
                None => return IntervalPolytope { pieces: out },
                Some(h) => gap_from = Some(h.clone()),
            }
        }
        out.push(Piece::new(gap_from, None));
        IntervalPolytope { pieces: out }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut all = self.pieces.clone();
        all.extend(other.pieces.iter().cloned());
        Self::canonicalize(all)
    }

    /// Regularised intersection `Cl(Int(self ∩ other))`.
    pub fn reg_meet(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        for a in &self.pieces {
            for b in &other.pieces {
                let p = a.intersect(b);
                if p.has_interior() {
                    out.push(p);
                }
            }
        }
        Self::canonicalize(out)
    }

    /// Topological contact: the closed sets share a point.
    pub fn contact_c(&self, other: &Self) -> bool {
        self.pieces
            .iter()
            .any(|a| other.pieces.iter().any(|b| a.meets(b)))
    }

    pub fn overlap(&self, other: &Self) -> bool {
        self.pieces
            .iter()
            .any(|a| other.pieces.iter().any(|b| a.intersect(b).has_interior()))
    }

    /// Strong contact. On the line it coincides with topological contact.
    pub fn contact_sc(&self, other: &Self) -> bool {
        self.contact_c(other)
    }

    /// An open interval `(l, h)` contained in `self ∪ other` that meets both.
    pub fn sc_witness(&self, other: &Self) -> Option<(Rational, Rational)> {
        for a in &self.pieces {
            for b in &other.pieces {
                let m = a.intersect(b);
                if m.has_interior() {
                    return Some(open_inside(&m));
                }
            }
        }
        for a in &self.pieces {
            for b in &other.pieces {
                let m = a.intersect(b);
                if !lo_le_hi(&m.lo, &m.hi) {
                    continue;
                }
                // The pieces touch in a single point x; `left` ends at x and
                // `right` starts there.
                let x = m.lo.clone().expect("touching point is finite");
                let (left, right) = if a.hi.as_ref() == Some(&x) {
                    (a, b)
                } else {
                    (b, a)
                };
                let l_len = left.length().unwrap_or_else(|| int(2));
                let r_len = right.length().unwrap_or_else(|| int(2));
                return Some((&x - half(&l_len), &x + half(&r_len)));
            }
        }
        None
    }

    /// Finite endpoints of all pieces, ascending.
    pub fn boundary_points(&self) -> Vec<Rational> {
        let mut pts = Vec::new();
        for p in &self.pieces {
            pts.extend(p.lo.iter().cloned());
            pts.extend(p.hi.iter().cloned());
        }
        pts
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(text);
        let p = parse_interval_polytope(&mut cur)?;
        cur.finish()?;
        Ok(p)
    }
}

fn open_inside(p: &Piece) -> (Rational, Rational) {
    match (&p.lo, &p.hi) {
        (Some(l), Some(h)) => (l.clone(), h.clone()),
        (Some(l), None) => (l.clone(), l + int(2)),
        (None, Some(h)) => (h - int(2), h.clone()),
        (None, None) => (int(-1), int(1)),
    }
}

pub(crate) fn parse_interval_polytope(
    cur: &mut Cursor<'_>,
) -> Result<IntervalPolytope, ParseError> {
    if cur.keyword("empty") {
        return Ok(IntervalPolytope::empty());
    }
    if cur.keyword("all") {
        return Ok(IntervalPolytope::whole());
    }
    let mut pieces = Vec::new();
    loop {
        pieces.push(parse_piece(cur)?);
        if !cur.eat(";") {
            break;
        }
        // tolerate a trailing separator
        if !(cur.peek_str("[") || cur.peek_str("(")) {
            break;
        }
    }
    Ok(IntervalPolytope::canonicalize(pieces))
}

fn parse_piece(cur: &mut Cursor<'_>) -> Result<Piece, ParseError> {
    let lo = if cur.eat("(") {
        cur.eat("-");
        if !cur.keyword("inf") {
            return Err(cur.error("`(` must open an infinite end `(-inf`"));
        }
        None
    } else if cur.eat("[") {
        Some(cur.rational()?)
    } else {
        return Err(cur.error("expected `[` or `(`"));
    };
    cur.expect(",")?;
    let hi = if cur.eat("+") || cur.peek_str("inf") {
        if !cur.keyword("inf") {
            return Err(cur.error("expected `inf`"));
        }
        cur.expect(")")?;
        None
    } else {
        let v = cur.rational()?;
        cur.expect("]")?;
        Some(v)
    };
    if let (Some(l), Some(h)) = (&lo, &hi) {
        if l > h {
            return Err(cur.error(format!("reversed interval [{l},{h}]")));
        }
    }
    Ok(Piece { lo, hi })
}

impl FromStr for IntervalPolytope {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IntervalPolytope::parse(s)
    }
}

impl fmt::Display for IntervalPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "empty");
        }
        if self.is_whole() {
            return write!(f, "all");
        }
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl IntervalPolytope {
    /// True when every piece has positive length and consecutive pieces are
    /// separated by a positive gap.
    pub fn is_canonical(&self) -> bool {
        self.pieces.iter().all(Piece::has_interior)
            && self.pieces.windows(2).all(|w| match (&w[0].hi, &w[1].lo) {
                (Some(h), Some(l)) => (l - h) > Rational::zero(),
                _ => false,
            })
    }
}
