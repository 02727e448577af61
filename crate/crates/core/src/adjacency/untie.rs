use super::{AdjacencySpace, PMorphism};
use crate::error::AdjacencyError;

/// One cycle-breaking step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UntieStep {
    pub cycle: Vec<usize>,
    pub a: usize,
    pub b: usize,
    pub fresh: usize,
    /// Simple cycles before and after the step.
    pub cycles_before: usize,
    pub cycles_after: usize,
}

/// An acyclic connected space with a p-morphism onto the original.
#[derive(Debug, Clone)]
pub struct Untying {
    pub space: AdjacencySpace,
    pub map: PMorphism,
    pub steps: Vec<UntieStep>,
}

/// Breaks simple cycles until none is left. Each step takes the
/// lexicographically least cycle, its least cell `a` and the least
/// neighbour `b` of `a` on the cycle; the fresh cell maps to `a`.
pub fn untie(space: &AdjacencySpace) -> Result<Untying, AdjacencyError> {
    if !space.is_connected() {
        return Err(AdjacencyError::Disconnected);
    }
    let mut current = space.clone();
    let mut map: Vec<usize> = (0..space.len()).collect();
    let mut steps = Vec::new();
    let mut cycles = current.simple_cycles();
    while let Some(cycle) = cycles.first().cloned() {
        // canonical cycles start at their least cell and have cycle[1] < last
        let (a, b) = (cycle[0], cycle[1]);
        let (next, fresh) = current.break_cycle(&cycle, a, b)?;
        map.push(map[a]);
        let after = next.simple_cycles();
        steps.push(UntieStep {
            cycle,
            a,
            b,
            fresh,
            cycles_before: cycles.len(),
            cycles_after: after.len(),
        });
        current = next;
        cycles = after;
    }
    Ok(Untying {
        space: current,
        map: PMorphism::new(map),
        steps,
    })
}
