//! `poly { basic { a b <= c; ... } ... }`

use std::fmt;
use std::str::FromStr;

use super::{mk_basic, BasicPolytope, PlanePolytope};
use crate::error::ParseError;
use crate::numeric::HalfSpace;
use crate::text::Cursor;

impl fmt::Display for BasicPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "basic {{")?;
        for h in &self.constraints {
            write!(f, " {h};")?;
        }
        write!(f, " }}")
    }
}

impl fmt::Display for PlanePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "poly {{")?;
        for b in &self.parts {
            writeln!(f, "  {b}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn parse_plane_polytope(cur: &mut Cursor<'_>) -> Result<PlanePolytope, ParseError> {
    if !cur.keyword("poly") {
        return Err(cur.error("expected `poly`"));
    }
    cur.expect("{")?;
    let mut parts = Vec::new();
    while !cur.eat("}") {
        if !cur.keyword("basic") {
            return Err(cur.error("expected `basic` or `}`"));
        }
        cur.expect("{")?;
        let mut hs = Vec::new();
        while !cur.eat("}") {
            let at = cur.pos();
            let a = cur.rational()?;
            let b = cur.rational()?;
            cur.expect("<=")?;
            let c = cur.rational()?;
            let h = HalfSpace::planar(a, b, c).map_err(|e| ParseError::new(at, e.to_string()))?;
            hs.push(h);
            if !cur.eat(";") && !cur.peek_str("}") {
                return Err(cur.error("expected `;` or `}`"));
            }
        }
        parts.extend(mk_basic(hs));
    }
    Ok(PlanePolytope::from_parts(parts))
}

impl PlanePolytope {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(text);
        let p = parse_plane_polytope(&mut cur)?;
        cur.finish()?;
        Ok(p)
    }
}

impl FromStr for PlanePolytope {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PlanePolytope::parse(s)
    }
}
