//! `space { cells a b c; edges a-b b-c; }` and DOT export.

use std::fmt;
use std::str::FromStr;

use super::AdjacencySpace;
use crate::error::ParseError;
use crate::text::Cursor;

impl fmt::Display for AdjacencySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "space {{ cells")?;
        for n in &self.names {
            write!(f, " {n}")?;
        }
        write!(f, "; edges")?;
        for (a, b) in self.edges() {
            write!(f, " {}-{}", self.names[a], self.names[b])?;
        }
        write!(f, "; }}")
    }
}

pub(crate) fn parse_space(cur: &mut Cursor<'_>) -> Result<AdjacencySpace, ParseError> {
    if !cur.keyword("space") {
        return Err(cur.error("expected `space`"));
    }
    cur.expect("{")?;
    if !cur.keyword("cells") {
        return Err(cur.error("expected `cells`"));
    }
    let mut cells = Vec::new();
    while !cur.eat(";") {
        let at = cur.pos();
        let name = cur.ident()?;
        if cells.iter().any(|c| c == name) {
            return Err(ParseError::new(at, format!("duplicate cell `{name}`")));
        }
        cells.push(name.to_string());
    }
    if cells.is_empty() {
        return Err(cur.error("an adjacency space needs at least one cell"));
    }
    let mut edges = Vec::new();
    if cur.keyword("edges") {
        while !cur.eat(";") {
            let at = cur.pos();
            let a = cur.ident()?;
            cur.expect("-")?;
            let b = cur.ident()?;
            for c in [a, b] {
                if !cells.iter().any(|x| x == c) {
                    return Err(ParseError::new(at, format!("unknown cell `{c}`")));
                }
            }
            edges.push((a.to_string(), b.to_string()));
        }
    }
    cur.expect("}")?;
    AdjacencySpace::new(&cells, &edges).map_err(|e| cur.error(e.to_string()))
}

impl AdjacencySpace {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(text);
        let s = parse_space(&mut cur)?;
        cur.finish()?;
        Ok(s)
    }

    /// Graphviz rendering; loops are left implicit.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph space {\n");
        for n in &self.names {
            out.push_str(&format!("  \"{n}\";\n"));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\";\n",
                self.names[a], self.names[b]
            ));
        }
        out.push_str("}\n");
        out
    }
}

impl FromStr for AdjacencySpace {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AdjacencySpace::parse(s)
    }
}
