//! Canonical labeling for isomorphism dedup and stable graph naming.
//!
//! The canonical form is the relabeling of the graph whose graph6 bit string
//! is lexicographically least among all labelings consistent with the stable
//! equitable partition. The partition refinement is label-independent and the
//! candidate search is pruned by prefix comparison, with cells of pairwise
//! twins collapsed to a single candidate order, so the result is a pure
//! function of the graph.

use crate::graph::{to_graph6, Graph};

/// Canonically relabeled copy of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    if n <= 1 {
        return g.clone();
    }
    let cells = stable_partition(g);
    let mut search = Search {
        g,
        n,
        cells,
        best: None,
        best_label: Vec::new(),
        cur: BitBuf::new(),
        label: Vec::with_capacity(n),
        used: vec![false; n],
    };
    search.dfs(0);
    let label = search.best_label;
    debug_assert_eq!(label.len(), n);
    let mut out = Graph::empty(n);
    let mut position = vec![0usize; n];
    for (p, &v) in label.iter().enumerate() {
        position[v] = p;
    }
    for e in g.edges() {
        out.set_adjacent(position[e.u], position[e.v]);
    }
    out
}

/// graph6 line of the canonical form; the stable cross-run name of a graph.
pub fn canonical_graph6(g: &Graph) -> String {
    to_graph6(&canonical_form(g))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

/// Ordered equitable partition: start from degree classes (ascending), then
/// repeatedly split every cell by the vector of neighbor counts into each
/// cell, ordering sub-cells by that vector. Both steps depend only on
/// isomorphism invariants, so isomorphic graphs get corresponding partitions.
fn stable_partition(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut cells: Vec<Vec<usize>> = {
        let mut by_degree: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            by_degree[g.degree(v)].push(v);
        }
        by_degree.into_iter().filter(|c| !c.is_empty()).collect()
    };
    loop {
        let sig = |v: usize| -> Vec<usize> {
            cells
                .iter()
                .map(|cell| cell.iter().filter(|&&u| g.adjacent(u, v)).count())
                .collect()
        };
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> =
                cell.iter().map(|&v| (sig(v), v)).collect();
            keyed.sort();
            let mut run: Vec<usize> = Vec::new();
            let mut run_key: Option<&Vec<usize>> = None;
            let mut split: Vec<Vec<usize>> = Vec::new();
            for (key, v) in &keyed {
                if run_key.is_none_or(|k| k == key) {
                    run.push(*v);
                } else {
                    split.push(std::mem::take(&mut run));
                    run.push(*v);
                }
                run_key = Some(key);
            }
            if !run.is_empty() {
                split.push(run);
            }
            next.extend(split);
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

struct Search<'g> {
    g: &'g Graph,
    n: usize,
    /// Cells of the stable partition in canonical order, each sorted.
    cells: Vec<Vec<usize>>,
    best: Option<BitBuf>,
    best_label: Vec<usize>,
    cur: BitBuf,
    label: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    /// Equal neighborhoods outside the pair: swapping `u` and `v` is an
    /// automorphism, so orderings within a cell of pairwise twins are
    /// interchangeable and only one needs exploring.
    fn twin(&self, u: usize, v: usize) -> bool {
        (0..self.n)
            .filter(|&w| w != u && w != v)
            .all(|w| self.g.adjacent(u, w) == self.g.adjacent(v, w))
    }

    fn cell_of_position(&self, pos: usize) -> usize {
        let mut acc = 0;
        for (i, cell) in self.cells.iter().enumerate() {
            acc += cell.len();
            if pos < acc {
                return i;
            }
        }
        unreachable!("position beyond partition");
    }

    fn dfs(&mut self, pos: usize) {
        if pos == self.n {
            if self.better_than_best() {
                self.best = Some(self.cur.clone());
                self.best_label = self.label.clone();
            }
            return;
        }
        let ci = self.cell_of_position(pos);
        let members: Vec<usize> = self.cells[ci]
            .iter()
            .copied()
            .filter(|&v| !self.used[v])
            .collect();
        let candidates: Vec<usize> = if members.len() > 1 && self.cell_members_twins(&members) {
            vec![members[0]]
        } else {
            members
        };
        for v in candidates {
            let before = self.cur.len();
            for p in 0..pos {
                self.cur.push(self.g.adjacent(self.label[p], v));
            }
            if self.prefix_viable() {
                self.used[v] = true;
                self.label.push(v);
                self.dfs(pos + 1);
                self.label.pop();
                self.used[v] = false;
            }
            self.cur.truncate(before);
        }
    }

    fn cell_members_twins(&self, members: &[usize]) -> bool {
        members.iter().enumerate().all(|(i, &u)| {
            members[i + 1..].iter().all(|&v| self.twin(u, v))
        })
    }

    /// Current prefix still at least ties the best; prune otherwise.
    fn prefix_viable(&self) -> bool {
        match &self.best {
            None => true,
            Some(best) => self.cur.compare_prefix(best) != std::cmp::Ordering::Greater,
        }
    }

    fn better_than_best(&self) -> bool {
        match &self.best {
            None => true,
            Some(best) => self.cur.compare_prefix(best) == std::cmp::Ordering::Less,
        }
    }
}

/// Append-only bit buffer with lexicographic prefix comparison.
#[derive(Clone, Default)]
struct BitBuf {
    words: Vec<u64>,
    len: usize,
}

impl BitBuf {
    fn new() -> BitBuf {
        BitBuf::default()
    }

    fn len(&self) -> usize {
        self.len
    }

    fn push(&mut self, bit: bool) {
        let w = self.len / 64;
        if w == self.words.len() {
            self.words.push(0);
        }
        if bit {
            self.words[w] |= 1 << (63 - self.len % 64);
        }
        self.len += 1;
    }

    fn truncate(&mut self, len: usize) {
        debug_assert!(len <= self.len);
        let keep_words = len.div_ceil(64);
        self.words.truncate(keep_words);
        if let Some(last) = self.words.last_mut() {
            let tail = len % 64;
            if tail != 0 {
                *last &= u64::MAX << (64 - tail);
            }
        }
        self.len = len;
    }

    /// Compares `self` (a prefix) with `other` over self's length. Bits of
    /// `other` beyond its length compare as high, so shorter `other` prefixes
    /// never mask a real improvement.
    fn compare_prefix(&self, other: &BitBuf) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let bits = self.len.min(other.len);
        let words = bits / 64;
        for i in 0..words {
            match self.words[i].cmp(&other.words[i]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        let tail = bits % 64;
        if tail > 0 {
            let mask = u64::MAX << (64 - tail);
            let a = self.words.get(words).copied().unwrap_or(0) & mask;
            let b = other.words.get(words).copied().unwrap_or(0) & mask;
            match a.cmp(&b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        if self.len > other.len {
            // We extend beyond the recorded best: best is effectively +inf
            // there, so the longer current prefix wins ties.
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_graph6, Graph};

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let mut out = Graph::empty(g.n());
        for e in g.edges() {
            out.set_adjacent(perm[e.u], perm[e.v]);
        }
        out
    }

    #[test]
    fn canonical_form_is_relabel_invariant() {
        let graphs = [
            Graph::cycle(6),
            Graph::path(5),
            Graph::complete(5),
            crate::construct::odd_wheel(5).unwrap().graph,
            crate::named::petersen(),
        ];
        let perms: [&[usize]; 3] = [
            &[1, 0, 2, 3, 4, 5, 6, 7, 8, 9],
            &[4, 3, 2, 1, 0, 9, 8, 7, 6, 5],
            &[2, 4, 0, 1, 3, 6, 5, 9, 7, 8],
        ];
        for g in &graphs {
            let canon = canonical_form(g);
            assert!(are_isomorphic(g, &canon));
            for perm in perms {
                let p: Vec<usize> = perm[..g.n()].to_vec();
                let mut sorted = p.clone();
                sorted.sort_unstable();
                if sorted != (0..g.n()).collect::<Vec<_>>() {
                    continue;
                }
                assert_eq!(canonical_form(&relabel(g, &p)), canon);
            }
        }
    }

    #[test]
    fn isomorphism_distinguishes() {
        // Two 4-vertex trees: path vs star.
        let path = Graph::path(4);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&path, &star));
        assert!(are_isomorphic(
            &path,
            &Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap()
        ));
    }

    #[test]
    fn canonical_graph6_is_parseable_and_stable() {
        let g = crate::named::petersen();
        let s = canonical_graph6(&g);
        let back = parse_graph6(&s).unwrap();
        assert!(are_isomorphic(&g, &back));
        assert_eq!(canonical_graph6(&back), s);
    }

    #[test]
    fn highly_symmetric_graphs_terminate_quickly() {
        // Twin collapse keeps complete graphs and stars from branching.
        let k9 = Graph::complete(9);
        assert_eq!(canonical_form(&k9), k9);
        let star = Graph::from_edges(9, &(1..9).map(|v| (0, v)).collect::<Vec<_>>()).unwrap();
        let c = canonical_form(&star);
        assert!(are_isomorphic(&star, &c));
    }
}
