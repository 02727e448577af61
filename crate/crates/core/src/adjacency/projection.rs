use super::{AdjacencySpace, Arrangement};
use crate::cylinder::CylinderPolytope;
use crate::error::{AdjacencyError, Error};
use crate::interval::{IntervalPolytope, Piece};
use crate::numeric::int;

/// Images on the line, indexed by cell: cell `x` receives `[k, k+1]` for
/// every position `k` of `x` in the arrangement, and the root also
/// receives the closed rays `(-inf, 0]` and `[len, +inf)`.
pub fn project_line(
    space: &AdjacencySpace,
    arrangement: &Arrangement,
) -> Result<Vec<IntervalPolytope>, AdjacencyError> {
    arrangement.validate(space)?;
    let seq = arrangement.seq();
    let mut raw: Vec<Vec<Piece>> = vec![Vec::new(); space.len()];
    for (k, &cell) in seq.iter().enumerate() {
        let k = k as i64;
        raw[cell].push(Piece::closed(int(k), int(k + 1)));
    }
    let root = seq[0];
    raw[root].push(Piece::new(None, Some(int(0))));
    raw[root].push(Piece::new(Some(int(seq.len() as i64)), None));
    Ok(raw
        .into_iter()
        .map(IntervalPolytope::canonicalize)
        .collect())
}

/// [`project_line`] followed by cylindrification to `R^dim`.
pub fn project(
    space: &AdjacencySpace,
    arrangement: &Arrangement,
    dim: usize,
) -> Result<Vec<CylinderPolytope>, Error> {
    let line = project_line(space, arrangement)?;
    Ok(line
        .into_iter()
        .map(|p| CylinderPolytope::lift(p, dim))
        .collect::<Result<_, _>>()?)
}
