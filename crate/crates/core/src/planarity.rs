//! Exact planarity via the left-right criterion.
//!
//! Orientation phase: a DFS orders the graph, computing lowpoints and a
//! nesting depth per directed edge. Testing phase: back edges are grouped
//! into conflict pairs of intervals on a stack; a same-side conflict between
//! return edges that must nest is exactly a planarity violation.
//!
//! Only the boolean verdict is produced (no embedding, no Kuratowski
//! witness). The dense-graph bound `|E| > 3n - 6` short-circuits first.
//! Correctness at desk scale is pinned by the subdivision-search oracle in
//! the test suites.

use crate::graph::Graph;

type EdgeId = usize;

const NONE: usize = usize::MAX;

/// Exact planarity verdict.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    let m = g.edge_count();
    if n >= 3 && m > 3 * n - 6 {
        return false;
    }
    if n <= 2 || m == 0 {
        return true;
    }
    Lr::new(g).run()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn of_edge(e: EdgeId) -> ConflictPair {
        ConflictPair {
            left: Interval::default(),
            right: Interval {
                low: Some(e),
                high: Some(e),
            },
        }
    }

    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct Lr<'g> {
    g: &'g Graph,
    height: Vec<usize>,
    parent_edge: Vec<Option<EdgeId>>,
    /// Oriented adjacency: outgoing (target, edge id) lists per vertex.
    out: Vec<Vec<(usize, EdgeId)>>,
    oriented: std::collections::HashSet<(usize, usize)>,
    edge_source: Vec<usize>,
    edge_target: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    lowpt_edge: Vec<Option<EdgeId>>,
    ref_: Vec<Option<EdgeId>>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    roots: Vec<usize>,
}

impl<'g> Lr<'g> {
    fn new(g: &'g Graph) -> Lr<'g> {
        let n = g.n();
        let m = g.edge_count();
        Lr {
            g,
            height: vec![NONE; n],
            parent_edge: vec![None; n],
            out: vec![Vec::new(); n],
            oriented: std::collections::HashSet::with_capacity(2 * m),
            edge_source: Vec::with_capacity(m),
            edge_target: Vec::with_capacity(m),
            lowpt: Vec::with_capacity(m),
            lowpt2: Vec::with_capacity(m),
            nesting_depth: Vec::with_capacity(m),
            lowpt_edge: Vec::with_capacity(m),
            ref_: Vec::with_capacity(m),
            stack_bottom: Vec::with_capacity(m),
            stack: Vec::new(),
            roots: Vec::new(),
        }
    }

    fn run(mut self) -> bool {
        for v in 0..self.g.n() {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        // Outgoing edges in nesting order; the sort is stable over the
        // ascending-neighbor insertion order.
        for v in 0..self.g.n() {
            let nd = &self.nesting_depth;
            self.out[v].sort_by_key(|&(_, e)| nd[e]);
        }
        let roots = self.roots.clone();
        for root in roots {
            if !self.test(root) {
                return false;
            }
        }
        true
    }

    fn new_edge(&mut self, from: usize, to: usize) -> EdgeId {
        let id = self.edge_source.len();
        self.edge_source.push(from);
        self.edge_target.push(to);
        self.lowpt.push(self.height[from]);
        self.lowpt2.push(self.height[from]);
        self.nesting_depth.push(0);
        self.lowpt_edge.push(None);
        self.ref_.push(None);
        self.stack_bottom.push(0);
        self.out[from].push((to, id));
        self.oriented.insert((from, to));
        id
    }

    fn orient(&mut self, v: usize) {
        let parent = self.parent_edge[v];
        for w in self.g.neighbors(v) {
            if self.oriented.contains(&(v, w)) || self.oriented.contains(&(w, v)) {
                continue;
            }
            let e = self.new_edge(v, w);
            if self.height[w] == NONE {
                // Tree edge.
                self.parent_edge[w] = Some(e);
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                // Back edge.
                self.lowpt[e] = self.height[w];
            }
            self.nesting_depth[e] = 2 * self.lowpt[e]
                + usize::from(self.lowpt2[e] < self.height[v]);
            if let Some(pe) = parent {
                if self.lowpt[e] < self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                    self.lowpt[pe] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
                } else {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let parent = self.parent_edge[v];
        for i in 0..self.out[v].len() {
            let (w, e) = self.out[v][i];
            self.stack_bottom[e] = self.stack.len();
            if Some(e) == self.parent_edge[w] {
                // Tree edge.
                if !self.test(w) {
                    return false;
                }
            } else {
                // Back edge.
                self.lowpt_edge[e] = Some(e);
                self.stack.push(ConflictPair::of_edge(e));
            }
            if self.lowpt[e] < self.height[v] {
                // e has a return edge below v.
                let first = self.out[v][0].1;
                if e == first {
                    let pe = parent.expect("a return edge needs a parent");
                    self.lowpt_edge[pe] = self.lowpt_edge[e];
                } else if !self.add_constraints(e, parent.expect("non-root")) {
                    return false;
                }
            }
        }
        if let Some(pe) = parent {
            let u = self.edge_source[pe];
            self.trim_back_edges(u);
            // The parent edge's reference points at a highest return edge.
            if self.lowpt[pe] < self.height[u] {
                if let Some(top) = self.stack.last() {
                    let hl = top.left.high;
                    let hr = top.right.high;
                    self.ref_[pe] = match (hl, hr) {
                        (Some(l), Some(r)) => {
                            if self.lowpt[l] > self.lowpt[r] {
                                Some(l)
                            } else {
                                Some(r)
                            }
                        }
                        (Some(l), None) => Some(l),
                        (_, r) => r,
                    };
                }
            }
        }
        true
    }

    fn conflicting(&self, interval: &Interval, b: EdgeId) -> bool {
        match interval.high {
            None => false,
            Some(h) => self.lowpt[h] > self.lowpt[b],
        }
    }

    fn add_constraints(&mut self, e: EdgeId, parent: EdgeId) -> bool {
        let mut p = ConflictPair::default();
        // Merge the return edges of e into the right interval.
        loop {
            let mut q = self.stack.pop().expect("stack holds e's return edges");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false; // interleaving on both sides
            }
            let q_low = q.right.low.expect("stacked interval is non-empty");
            if self.lowpt[q_low] > self.lowpt[parent] {
                // Merge.
                match p.right.low {
                    None => p.right.high = q.right.high,
                    Some(lo) => self.ref_[lo] = q.right.high,
                }
                p.right.low = q.right.low;
            } else {
                // Align under the parent's lowpoint edge.
                self.ref_[q_low] = self.lowpt_edge[parent];
            }
            if self.stack.len() == self.stack_bottom[e] {
                break;
            }
        }
        // Merge conflicting return edges of earlier siblings into the left.
        while {
            let top = self.stack.last().expect("conflict pairs remain");
            self.conflicting(&top.left, e) || self.conflicting(&top.right, e)
        } {
            let mut q = self.stack.pop().expect("checked non-empty");
            if self.conflicting(&q.right, e) {
                q.swap();
            }
            if self.conflicting(&q.right, e) {
                return false; // both sides conflict
            }
            // The part of q.right below lowpt(e) merges into p.right.
            if let Some(lo) = p.right.low {
                self.ref_[lo] = q.right.high;
            }
            if let Some(lo) = q.right.low {
                p.right.low = Some(lo);
            }
            match p.left.low {
                None => p.left.high = q.left.high,
                Some(lo) => self.ref_[lo] = q.left.high,
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("empty conflict pair on stack"),
        }
    }

    fn trim_back_edges(&mut self, u: usize) {
        // Drop entire conflict pairs returning no lower than u.
        while let Some(top) = self.stack.last() {
            if self.lowest(top) == self.height[u] {
                self.stack.pop();
            } else {
                break;
            }
        }
        // One more pair may need partial trimming on both sides.
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.edge_target[h] == u {
                    p.left.high = self.ref_[h];
                } else {
                    break;
                }
            }
            if p.left.high.is_none() {
                if let Some(lo) = p.left.low {
                    self.ref_[lo] = p.right.low;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.edge_target[h] == u {
                    p.right.high = self.ref_[h];
                } else {
                    break;
                }
            }
            if p.right.high.is_none() {
                if let Some(lo) = p.right.low {
                    self.ref_[lo] = p.left.low;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_chain, close_chain, odd_wheel, ChainSpec};
    use crate::graph::Graph;
    use crate::oracle::is_planar_by_subdivision_search;

    fn k33() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap()
    }

    #[test]
    fn named_graphs() {
        assert!(is_planar(&Graph::complete(4)));
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&k33()));
        assert!(!is_planar(&crate::named::petersen()));
        assert!(!is_planar(&crate::named::groetzsch()));
        for len in [3, 5, 7, 9] {
            assert!(is_planar(&odd_wheel(len).unwrap().graph), "W{len}");
        }
        for n in 3..10 {
            assert!(is_planar(&Graph::cycle(n)));
            assert!(is_planar(&Graph::path(n)));
        }
        assert!(is_planar(&Graph::empty(7)));
    }

    #[test]
    fn small_graphs_are_planar() {
        // Everything on at most 4 vertices is planar.
        for n in 0..=4usize {
            let slots = n * n.saturating_sub(1) / 2;
            for code in 0..(1u32 << slots) {
                let mut g = Graph::empty(n);
                let mut bit = 0;
                for j in 1..n {
                    for i in 0..j {
                        if code >> bit & 1 == 1 {
                            g.set_adjacent(i, j);
                        }
                        bit += 1;
                    }
                }
                assert!(is_planar(&g));
            }
        }
    }

    #[test]
    fn chains_planar_closures_not() {
        for lengths in [vec![3], vec![5], vec![3, 3], vec![3, 5]] {
            let chain = build_chain(&ChainSpec::new(lengths.clone()).unwrap());
            assert!(is_planar(&chain.graph), "chain {lengths:?}");
            let closed = close_chain(&chain);
            assert!(!is_planar(&closed), "closed {lengths:?}");
            // Cross-check the closure with the subdivision oracle.
            assert!(!is_planar_by_subdivision_search(&closed));
        }
    }

    #[test]
    fn euler_bound_is_respected() {
        // Maximal planar graph on 6 vertices: the octahedron, 12 = 3n-6.
        let octa = Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 5),
                (3, 4),
                (3, 5),
                (4, 5),
            ],
        )
        .unwrap();
        assert_eq!(octa.edge_count(), 12);
        assert!(is_planar(&octa));
    }

    #[test]
    fn deletion_monotone_spot_check() {
        for g in [
            odd_wheel(7).unwrap().graph,
            build_chain(&ChainSpec::new(vec![3, 3]).unwrap()).graph,
        ] {
            assert!(is_planar(&g));
            for e in g.edges() {
                assert!(is_planar(&g.delete_edge(e).unwrap()));
            }
        }
        // And deleting any one edge of K5 restores planarity.
        let k5 = Graph::complete(5);
        for e in k5.edges() {
            assert!(is_planar(&k5.delete_edge(e).unwrap()));
        }
    }

    #[test]
    fn disconnected_graphs() {
        // K4 plus an isolated triangle stays planar; K5 plus anything not.
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for i in 0..4usize {
            for j in (i + 1)..4 {
                edges.push((i, j));
            }
        }
        edges.extend([(4, 5), (5, 6), (4, 6)]);
        assert!(is_planar(&Graph::from_edges(7, &edges).unwrap()));

        let mut edges: Vec<(usize, usize)> = Vec::new();
        for i in 0..5usize {
            for j in (i + 1)..5 {
                edges.push((i, j));
            }
        }
        edges.extend([(5, 6), (6, 7), (5, 7)]);
        assert!(!is_planar(&Graph::from_edges(8, &edges).unwrap()));
    }
}
