//! Finite adjacency spaces (reflexive, symmetric relations on cells), their
//! paths and cycles, p-morphisms, and the tree machinery used to project a
//! space onto the line: levels, numerations and arrangements.

mod enumerate;
mod projection;
mod text;
mod untie;

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::AdjacencyError;

pub use enumerate::{
    connected_spaces, connected_spaces_labelled, prufer_tree, tree_code, trees, MAX_ISO_CELLS,
};
pub use projection::{project, project_line};
pub use untie::{untie, Untying};

/// Cells are indexed `0..len()`; each has a distinct name. Loops are
/// implicit and not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencySpace {
    names: Vec<String>,
    nbrs: Vec<BTreeSet<usize>>,
}

/// Default name of cell `i`: `a`..`z`, then `c26`, `c27`, ...
pub fn default_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("c{i}")
    }
}

impl AdjacencySpace {
    /// Builds the reflexive-symmetric closure of `edges` over `cells`.
    pub fn new<S: AsRef<str>>(cells: &[S], edges: &[(S, S)]) -> Result<Self, AdjacencyError> {
        if cells.is_empty() {
            return Err(AdjacencyError::Empty);
        }
        let mut index = HashMap::new();
        let mut names = Vec::with_capacity(cells.len());
        for c in cells {
            let c = c.as_ref();
            if index.insert(c.to_string(), names.len()).is_some() {
                return Err(AdjacencyError::DuplicateCell(c.to_string()));
            }
            names.push(c.to_string());
        }
        let lookup = |c: &str| {
            index
                .get(c)
                .copied()
                .ok_or_else(|| AdjacencyError::UnknownCell(c.to_string()))
        };
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Ok(Self::with_names(names, &pairs))
    }

    /// Cells `0..n` with [`default_name`]s.
    pub fn from_indices(n: usize, edges: &[(usize, usize)]) -> Result<Self, AdjacencyError> {
        if n == 0 {
            return Err(AdjacencyError::Empty);
        }
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(AdjacencyError::UnknownCell(default_name(a.max(b))));
        }
        Ok(Self::with_names((0..n).map(default_name).collect(), edges))
    }

    fn with_names(names: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let mut nbrs = vec![BTreeSet::new(); names.len()];
        for &(a, b) in edges {
            if a != b {
                nbrs[a].insert(b);
                nbrs[b].insert(a);
            }
        }
        AdjacencySpace { names, nbrs }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, cell: usize) -> &str {
        &self.names[cell]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The relation itself: reflexive and symmetric.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a == b || self.nbrs[a].contains(&b)
    }

    /// Distinct neighbours of `cell`, ascending.
    pub fn neighbours(&self, cell: usize) -> impl Iterator<Item = usize> + '_ {
        self.nbrs[cell].iter().copied()
    }

    pub fn degree(&self, cell: usize) -> usize {
        self.nbrs[cell].len()
    }

    /// Edges between distinct cells as `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, ns) in self.nbrs.iter().enumerate() {
            out.extend(ns.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    fn component_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut count = 0;
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for y in self.neighbours(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// No simple cycles, i.e. a forest.
    pub fn is_acyclic(&self) -> bool {
        self.edge_count() + self.component_count() == self.len()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.is_acyclic()
    }

    /// Every simple cycle once, as a cell sequence starting at its least
    /// cell and oriented so the second entry is below the last. Sorted.
    pub fn simple_cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for s in 0..self.len() {
            let mut path = vec![s];
            let mut on_path = vec![false; self.len()];
            on_path[s] = true;
            self.extend_cycles(s, &mut path, &mut on_path, &mut out);
        }
        out.sort();
        out
    }

    fn extend_cycles(
        &self,
        s: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().expect("nonempty path");
        for y in self.neighbours(last) {
            if y == s && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            if y > s && !on_path[y] {
                on_path[y] = true;
                path.push(y);
                self.extend_cycles(s, path, on_path, out);
                path.pop();
                on_path[y] = false;
            }
        }
    }

    /// Whether `cycle` is a simple cycle of this space.
    pub fn is_simple_cycle(&self, cycle: &[usize]) -> bool {
        let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
        cycle.len() > 2
            && distinct.len() == cycle.len()
            && cycle.iter().all(|&c| c < self.len())
            && (0..cycle.len()).all(|i| self.nbrs[cycle[i]].contains(&cycle[(i + 1) % cycle.len()]))
    }

    /// Every simple path from `from` to `to` (a single cell when equal).
    pub fn simple_paths(&self, from: usize, to: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = vec![from];
        let mut on_path = vec![false; self.len()];
        on_path[from] = true;
        self.extend_paths(to, &mut path, &mut on_path, &mut out);
        out
    }

    fn extend_paths(
        &self,
        to: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().expect("nonempty path");
        if last == to {
            out.push(path.clone());
            return;
        }
        for y in self.neighbours(last) {
            if !on_path[y] {
                on_path[y] = true;
                path.push(y);
                self.extend_paths(to, path, on_path, out);
                path.pop();
                on_path[y] = false;
            }
        }
    }

    /// A fresh name derived from `base` by appending primes.
    fn fresh_name(&self, base: &str) -> String {
        let mut name = format!("{base}'");
        while self.names.contains(&name) {
            name.push('\'');
        }
        name
    }

    /// Breaks the simple cycle `cycle` at `a` next to `b`: adds a fresh cell
    /// `a'` adjacent only to `b`, and removes the edge between `a` and `b`.
    /// Returns the new space and the index of `a'`.
    pub fn break_cycle(
        &self,
        cycle: &[usize],
        a: usize,
        b: usize,
    ) -> Result<(AdjacencySpace, usize), AdjacencyError> {
        if !self.is_simple_cycle(cycle) {
            return Err(AdjacencyError::NotSimpleCycle(format!("{cycle:?}")));
        }
        let pos = cycle
            .iter()
            .position(|&c| c == a)
            .ok_or(AdjacencyError::NotOnCycle(a))?;
        let k = cycle.len();
        if cycle[(pos + 1) % k] != b && cycle[(pos + k - 1) % k] != b {
            return Err(AdjacencyError::NotCycleNeighbour { a, b });
        }
        let mut next = self.clone();
        let fresh = next.len();
        next.names.push(self.fresh_name(&self.names[a]));
        next.nbrs.push(BTreeSet::new());
        next.nbrs[a].remove(&b);
        next.nbrs[b].remove(&a);
        next.nbrs[fresh].insert(b);
        next.nbrs[b].insert(fresh);
        Ok((next, fresh))
    }

    fn require_tree(&self) -> Result<(), AdjacencyError> {
        if !self.is_connected() {
            Err(AdjacencyError::Disconnected)
        } else if !self.is_acyclic() {
            Err(AdjacencyError::Cyclic)
        } else {
            Ok(())
        }
    }

    /// Breadth-first distance classes from `root`; each level ascending.
    pub fn alpha_levels(&self, root: usize) -> Result<Vec<Vec<usize>>, AdjacencyError> {
        if root >= self.len() {
            return Err(AdjacencyError::UnknownCell(root.to_string()));
        }
        self.require_tree()?;
        let dist = self.distances(root);
        let depth = dist.iter().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); depth + 1];
        for (cell, &d) in dist.iter().enumerate() {
            levels[d].push(cell);
        }
        Ok(levels)
    }

    fn distances(&self, root: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbours(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Level-monotone numbering from `root`, ties broken by cell index.
    pub fn numeration(&self, root: usize) -> Result<Numeration, AdjacencyError> {
        let order: Vec<usize> = self.alpha_levels(root)?.into_iter().flatten().collect();
        Numeration::from_order(self, order)
    }

    /// Builds the arrangement: starting from `(root)`, each cell in numbering
    /// order is inserted as `x, p` right after the leftmost occurrence of its
    /// unique lower-numbered neighbour `p`.
    pub fn arrangement(&self, num: &Numeration) -> Result<Arrangement, AdjacencyError> {
        num.validate(self)?;
        let mut seq = vec![num.root()];
        for &x in &num.order[1..] {
            let parent = num.parent(self, x).expect("validated numeration");
            let i = seq
                .iter()
                .position(|&c| c == parent)
                .expect("parent already placed");
            seq.splice(i + 1..i + 1, [x, parent]);
        }
        let arr = Arrangement { seq };
        arr.validate(self)?;
        Ok(arr)
    }
}

/// Bijection between cells and `0..w`, with the root numbered 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Numeration {
    order: Vec<usize>,
    number: Vec<usize>,
}

impl Numeration {
    /// `order[k]` is the cell numbered `k`. Checks bijectivity and level
    /// monotonicity with respect to `order[0]`.
    pub fn from_order(space: &AdjacencySpace, order: Vec<usize>) -> Result<Self, AdjacencyError> {
        let invalid = |m: &str| Err(AdjacencyError::InvalidNumeration(m.to_string()));
        if order.len() != space.len() {
            return invalid("length differs from the number of cells");
        }
        let mut number = vec![usize::MAX; space.len()];
        for (k, &c) in order.iter().enumerate() {
            if c >= space.len() || number[c] != usize::MAX {
                return invalid("not a bijection");
            }
            number[c] = k;
        }
        let num = Numeration { order, number };
        num.validate(space)?;
        Ok(num)
    }

    fn validate(&self, space: &AdjacencySpace) -> Result<(), AdjacencyError> {
        let invalid = |m: String| Err(AdjacencyError::InvalidNumeration(m));
        if self.order.len() != space.len() {
            return invalid("length differs from the number of cells".into());
        }
        space.require_tree()?;
        let dist = space.distances(self.root());
        for w in self.order.windows(2) {
            if dist[w[0]] > dist[w[1]] {
                return invalid(format!(
                    "cell {} numbered before a cell of a lower level",
                    w[0]
                ));
            }
        }
        Ok(())
    }

    pub fn root(&self) -> usize {
        self.order[0]
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn number(&self, cell: usize) -> usize {
        self.number[cell]
    }

    /// The neighbours of `cell` with a smaller number.
    pub fn lower_neighbours(&self, space: &AdjacencySpace, cell: usize) -> Vec<usize> {
        space
            .neighbours(cell)
            .filter(|&y| self.number[y] < self.number[cell])
            .collect()
    }

    /// The unique lower-numbered neighbour of a non-root cell.
    pub fn parent(&self, space: &AdjacencySpace, cell: usize) -> Option<usize> {
        match self.lower_neighbours(space, cell).as_slice() {
            [p] => Some(*p),
            _ => None,
        }
    }
}

/// A closed walk through every cell, starting and ending at the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    seq: Vec<usize>,
}

impl Arrangement {
    pub fn new(seq: Vec<usize>) -> Self {
        Arrangement { seq }
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Length `2w - 1`, root at both ends, consecutive entries distinct and
    /// adjacent, every cell present.
    pub fn validate(&self, space: &AdjacencySpace) -> Result<(), AdjacencyError> {
        let invalid = |m: String| Err(AdjacencyError::InvalidArrangement(m));
        let w = space.len();
        if self.seq.len() != 2 * w - 1 {
            return invalid(format!(
                "length {} instead of {}",
                self.seq.len(),
                2 * w - 1
            ));
        }
        if self.seq.iter().any(|&c| c >= w) {
            return invalid("unknown cell".into());
        }
        if self.seq.first() != self.seq.last() {
            return invalid("first and last entries differ".into());
        }
        for pair in self.seq.windows(2) {
            if pair[0] == pair[1] || !space.adjacent(pair[0], pair[1]) {
                return invalid(format!(
                    "entries {} and {} are not distinct neighbours",
                    pair[0], pair[1]
                ));
            }
        }
        let present: BTreeSet<usize> = self.seq.iter().copied().collect();
        if present.len() != w {
            return invalid("some cell is missing".into());
        }
        Ok(())
    }
}

/// A map from the cells of a source space to the cells of a target space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PMorphism {
    map: Vec<usize>,
}

impl PMorphism {
    pub fn new(map: Vec<usize>) -> Self {
        PMorphism { map }
    }

    pub fn identity(n: usize) -> Self {
        PMorphism {
            map: (0..n).collect(),
        }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, cell: usize) -> usize {
        self.map[cell]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &PMorphism) -> PMorphism {
        PMorphism {
            map: self.map.iter().map(|&c| other.map[c]).collect(),
        }
    }

    /// Preimage of a set of target cells.
    pub fn preimage(&self, cells: &BTreeSet<usize>) -> BTreeSet<usize> {
        (0..self.map.len())
            .filter(|c| cells.contains(&self.map[*c]))
            .collect()
    }
}

/// The first violated condition of `f: source -> target` being a
/// p-morphism, or `None` when it is one.
pub fn pmorphism_violation(
    f: &PMorphism,
    source: &AdjacencySpace,
    target: &AdjacencySpace,
) -> Option<String> {
    if f.map.len() != source.len() {
        return Some(format!(
            "map has {} entries for {} cells",
            f.map.len(),
            source.len()
        ));
    }
    if let Some(x) = (0..source.len()).find(|&x| f.map[x] >= target.len()) {
        return Some(format!("cell {} maps outside the target", source.name(x)));
    }
    let image: BTreeSet<usize> = f.map.iter().copied().collect();
    if let Some(z) = (0..target.len()).find(|z| !image.contains(z)) {
        return Some(format!(
            "not surjective: {} has no preimage",
            target.name(z)
        ));
    }
    for x in 0..source.len() {
        for y in source.neighbours(x) {
            if !target.adjacent(f.map[x], f.map[y]) {
                return Some(format!(
                    "forth fails on {}-{}",
                    source.name(x),
                    source.name(y)
                ));
            }
        }
    }
    // back: every target edge is the image of some source edge
    let mut lifted = BTreeSet::new();
    for x in 0..source.len() {
        for y in source.neighbours(x) {
            lifted.insert((f.map[x], f.map[y]));
        }
    }
    for (a, b) in target.edges() {
        if !lifted.contains(&(a, b)) {
            return Some(format!(
                "back fails: {}-{} has no preimage edge",
                target.name(a),
                target.name(b)
            ));
        }
    }
    None
}

/// Exhaustive check of surjectivity, edge preservation (forth) and edge
/// lifting (back).
pub fn check_pmorphism(f: &PMorphism, source: &AdjacencySpace, target: &AdjacencySpace) -> bool {
    pmorphism_violation(f, source, target).is_none()
}
