//! Enumeration of small connected spaces and trees.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use super::AdjacencySpace;

/// Largest cell count enumerated up to isomorphism.
pub const MAX_ISO_CELLS: usize = 6;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Adjacency bitstring read most significant first: bit of pair `p` (in
/// `(0,1), (0,2), ..., (n-2,n-1)` order) is `1 << (P - 1 - p)`.
fn space_from_code(n: usize, code: u64) -> AdjacencySpace {
    let ps = pairs(n);
    let top = ps.len();
    let edges: Vec<(usize, usize)> = ps
        .iter()
        .enumerate()
        .filter(|(p, _)| code >> (top - 1 - p) & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    AdjacencySpace::from_indices(n, &edges).expect("n >= 1")
}

fn connected_code(n: usize, code: u64, ps: &[(usize, usize)]) -> bool {
    let top = ps.len();
    let mut reach = 1u64;
    loop {
        let mut next = reach;
        for (p, &(i, j)) in ps.iter().enumerate() {
            if code >> (top - 1 - p) & 1 == 1 && (reach >> i & 1 == 1 || reach >> j & 1 == 1) {
                next |= 1 << i | 1 << j;
            }
        }
        if next == reach {
            return reach == (1u64 << n) - 1;
        }
        reach = next;
    }
}

fn canonical_codes(n: usize) -> Vec<u64> {
    let ps = pairs(n);
    let top = ps.len();
    let mut index = vec![vec![0usize; n]; n];
    for (p, &(i, j)) in ps.iter().enumerate() {
        index[i][j] = p;
        index[j][i] = p;
    }
    let perms = permutations(n);
    let mut out = Vec::new();
    'codes: for code in 0..(1u64 << top) {
        if !connected_code(n, code, &ps) {
            continue;
        }
        for perm in &perms {
            let mut image = 0u64;
            for (p, &(i, j)) in ps.iter().enumerate() {
                if code >> (top - 1 - p) & 1 == 1 {
                    image |= 1 << (top - 1 - index[perm[i]][perm[j]]);
                }
            }
            if image < code {
                continue 'codes;
            }
        }
        out.push(code);
    }
    out
}

/// Connected spaces on `n <= 6` cells, one per isomorphism class, ordered
/// by their canonical (least) adjacency bitstring.
///
/// # Panics
/// If `n == 0` or `n > 6`.
pub fn connected_spaces(n: usize) -> &'static [AdjacencySpace] {
    assert!(
        (1..=MAX_ISO_CELLS).contains(&n),
        "isomorphism classes are enumerated for 1..=6 cells"
    );
    static CACHE: [OnceLock<Vec<AdjacencySpace>>; MAX_ISO_CELLS + 1] =
        [const { OnceLock::new() }; MAX_ISO_CELLS + 1];
    CACHE[n].get_or_init(|| {
        canonical_codes(n)
            .into_iter()
            .map(|c| space_from_code(n, c))
            .collect()
    })
}

/// Every connected labelled space on `n` cells, by ascending bitstring.
///
/// # Panics
/// If `n == 0` or `n > 11` (the bitstring must fit 64 bits).
pub fn connected_spaces_labelled(n: usize) -> impl Iterator<Item = AdjacencySpace> {
    assert!(
        (1..=11).contains(&n),
        "labelled enumeration supports 1..=11 cells"
    );
    let ps = pairs(n);
    let top = ps.len();
    (0..(1u64 << top))
        .filter(move |&c| connected_code(n, c, &ps))
        .map(move |c| space_from_code(n, c))
}

/// Edges of the labelled tree on `0..n` with Prüfer code `code`
/// (`code.len() == n - 2` for `n >= 2`).
pub fn prufer_tree(code: &[usize], n: usize) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    assert_eq!(code.len(), n - 2, "Prüfer code has n - 2 entries");
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&i| degree[i] == 1).expect("a leaf exists");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// AHU encoding of the tree rooted at `root`.
fn rooted_code(space: &AdjacencySpace, root: usize, parent: Option<usize>) -> String {
    let mut children: Vec<String> = space
        .neighbours(root)
        .filter(|&c| Some(c) != parent)
        .map(|c| rooted_code(space, c, Some(root)))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

fn centres(space: &AdjacencySpace) -> Vec<usize> {
    let mut degree: Vec<usize> = (0..space.len()).map(|c| space.degree(c)).collect();
    let mut alive: BTreeSet<usize> = (0..space.len()).collect();
    let mut leaves: Vec<usize> = alive.iter().copied().filter(|&c| degree[c] <= 1).collect();
    while alive.len() > 2 {
        let mut next = Vec::new();
        for &l in &leaves {
            alive.remove(&l);
            for n in space.neighbours(l) {
                if alive.contains(&n) {
                    degree[n] -= 1;
                    if degree[n] == 1 {
                        next.push(n);
                    }
                }
            }
        }
        leaves = next;
    }
    alive.into_iter().collect()
}

/// Isomorphism-invariant code of a tree.
pub fn tree_code(space: &AdjacencySpace) -> String {
    centres(space)
        .into_iter()
        .map(|c| rooted_code(space, c, None))
        .min()
        .expect("nonempty tree")
}

/// Trees on `n >= 1` cells, one per isomorphism class, ordered by
/// [`tree_code`].
pub fn trees(n: usize) -> Vec<AdjacencySpace> {
    assert!(n >= 1, "a tree needs a cell");
    let mut level: BTreeMap<String, AdjacencySpace> = BTreeMap::new();
    let single = AdjacencySpace::from_indices(1, &[]).expect("one cell");
    level.insert(tree_code(&single), single);
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for attach in 0..t.len() {
                let mut edges = t.edges();
                edges.push((attach, size - 1));
                let grown = AdjacencySpace::from_indices(size, &edges).expect("nonempty");
                next.entry(tree_code(&grown)).or_insert(grown);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iso_class_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_spaces(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert!(connected_spaces(5).iter().all(AdjacencySpace::is_connected));
    }

    #[test]
    fn labelled_counts() {
        // connected labelled graphs: 1, 1, 4, 38
        let counts: Vec<usize> = (1..=4)
            .map(|n| connected_spaces_labelled(n).count())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=9).map(|n| trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
        assert!(trees(7).iter().all(AdjacencySpace::is_tree));
    }

    #[test]
    fn prufer_decoding() {
        assert_eq!(prufer_tree(&[], 2), vec![(0, 1)]);
        let t = AdjacencySpace::from_indices(6, &prufer_tree(&[3, 3, 3, 4], 6)).unwrap();
        assert!(t.is_tree());
        assert_eq!(t.degree(3), 4);
    }
}
