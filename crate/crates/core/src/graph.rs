//! The graph value type, graph6 interchange, and the elementary structural
//! queries everything else builds on.
//!
//! Graphs are immutable simple undirected graphs on dense vertex labels
//! `0..n-1`; "mutations" return new values. Adjacency is stored as one bitset
//! row per vertex so neighborhood intersections and degree counts are word
//! operations.

use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

const WORD_BITS: usize = 64;

/// An undirected edge with endpoints kept in `u < v` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds an edge, sorting the endpoints. Loops are rejected.
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::LoopEdge(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A set of vertices, stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut vertices: Vec<usize>) -> VertexSet {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet(vertices)
    }

    pub fn empty() -> VertexSet {
        VertexSet(Vec::new())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Immutable simple undirected graph on vertices `0..n-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        let words = n.div_ceil(WORD_BITS).max(1);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Graph from an explicit edge list. Rejects loops, out-of-range
    /// endpoints and duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            g.insert_edge_checked(a, b)?;
        }
        Ok(g)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_adjacent(u, v);
            }
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.set_adjacent(v, (v + 1) % n);
        }
        g
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_adjacent(v - 1, v);
        }
        g
    }

    fn insert_edge_checked(&mut self, a: usize, b: usize) -> Result<()> {
        let e = Edge::new(a, b)?;
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        if self.adjacent(e.u, e.v) {
            return Err(Error::EdgeAlreadyPresent { u: e.u, v: e.v });
        }
        self.set_adjacent(e.u, e.v);
        Ok(())
    }

    pub(crate) fn set_adjacent(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.bits[v * self.words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }

    fn clear_adjacent(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        self.bits[v * self.words + u / WORD_BITS] &= !(1 << (u % WORD_BITS));
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * WORD_BITS;
            BitIter(w).map(move |b| base + b)
        })
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges in canonical order: sorted by `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        e.u < self.n && e.v < self.n && self.adjacent(e.u, e.v)
    }

    /// New graph with `e` removed.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        if !self.adjacent(e.u, e.v) {
            return Err(Error::EdgeNotPresent { u: e.u, v: e.v });
        }
        let mut g = self.clone();
        g.clear_adjacent(e.u, e.v);
        Ok(g)
    }

    /// New graph with `e` added. The edge must be absent.
    pub fn with_edge(&self, e: Edge) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge_checked(e.u, e.v)?;
        Ok(g)
    }

    /// New graph on `n+1` vertices: the fresh vertex gets index `n` and is
    /// joined to `attach`.
    pub fn with_attached_vertex(&self, attach: &VertexSet) -> Result<Graph> {
        let mut g = Graph::empty(self.n + 1);
        for e in self.edges() {
            g.set_adjacent(e.u, e.v);
        }
        for v in attach.iter() {
            self.check_vertex(v)?;
            g.set_adjacent(v, self.n);
        }
        Ok(g)
    }

    /// New graph with `v` removed; remaining vertices are relabeled to
    /// `0..n-2` preserving order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let relabel = |x: usize| if x > v { x - 1 } else { x };
        let mut g = Graph::empty(self.n - 1);
        for e in self.edges() {
            if e.u != v && e.v != v {
                g.set_adjacent(relabel(e.u), relabel(e.v));
            }
        }
        Ok(g)
    }

    /// Identifies `b` into `a`, dropping parallel edges and the `a-b` edge if
    /// present; the merged vertex keeps `min(a, b)`'s position and the other
    /// label disappears with an order-preserving relabel.
    pub fn contract(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::LoopEdge(a));
        }
        let (keep, gone) = (a.min(b), a.max(b));
        let relabel = |x: usize| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut g = Graph::empty(self.n - 1);
        for e in self.edges() {
            let (x, y) = (relabel(e.u), relabel(e.v));
            if x != y && !g.adjacent(x, y) {
                g.set_adjacent(x, y);
            }
        }
        Ok(g)
    }

    /// Subgraph induced on `set`, relabeled to `0..set.len()-1` in set
    /// order. Returns the graph and the mapping new index -> old vertex.
    pub fn induced(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        let verts: Vec<usize> = set.iter().collect();
        for &v in &verts {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.set_adjacent(i, j);
                }
            }
        }
        Ok((g, verts))
    }

    /// Connected components as vertex classes, ordered by least vertex;
    /// vertices within a class are sorted.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.degree(v) == self.n - 1)
            .collect()
    }

    /// `Some(n)` when the graph is a single cycle (connected and 2-regular).
    pub fn is_cycle_graph(&self) -> Option<usize> {
        if self.n >= 3 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected() {
            Some(self.n)
        } else {
            None
        }
    }

    /// Neighborhood of `v` as a set.
    pub fn neighborhood(&self, v: usize) -> VertexSet {
        self.neighbors(v).collect()
    }

    /// Common neighborhood of `u` and `v`.
    pub fn common_neighborhood(&self, u: usize, v: usize) -> VertexSet {
        let (ru, rv) = (self.row(u), self.row(v));
        (0..self.words)
            .flat_map(|wi| {
                let w = ru[wi] & rv[wi];
                BitIter(w).map(move |b| wi * WORD_BITS + b)
            })
            .collect()
    }

    /// If the subgraph induced on `N(v)` is non-bipartite, returns the vertex
    /// set of one induced odd cycle inside it, chosen deterministically;
    /// otherwise `None`.
    pub fn neighborhood_odd_cycle(&self, v: usize) -> Option<VertexSet> {
        assert!(v < self.n, "vertex {v} out of range");
        find_induced_odd_cycle(self, &self.neighborhood(v))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// Finds an induced odd cycle inside the subgraph induced on `candidates`,
/// or `None` when that subgraph is bipartite.
///
/// The cycle comes from the lexicographically least BFS 2-coloring conflict,
/// shortened first to a simple cycle through the conflict edge and then
/// across chords until chordless, keeping the odd part at each step. The
/// whole procedure is deterministic.
pub fn find_induced_odd_cycle(g: &Graph, candidates: &VertexSet) -> Option<VertexSet> {
    let (h, back) = g.induced(candidates).expect("candidate vertices in range");
    let conflict = bfs_two_color_conflict(&h)?;
    let mut cycle = conflict_to_simple_cycle(&h, conflict);
    // Shorten across chords; the odd side of any chord split is strictly
    // shorter, so this terminates at an induced odd cycle.
    loop {
        match least_chord(&h, &cycle) {
            None => break,
            Some((i, j)) => {
                let odd_side = split_keep_odd(&cycle, i, j);
                cycle = odd_side;
            }
        }
    }
    Some(cycle.into_iter().map(|x| back[x]).collect())
}

struct Conflict {
    parent: Vec<usize>,
    depth: Vec<usize>,
    x: usize,
    y: usize,
}

const UNSET: usize = usize::MAX;

/// BFS 2-coloring over all components (roots in increasing order, neighbors
/// scanned ascending). Returns the first same-parity edge encountered.
fn bfs_two_color_conflict(h: &Graph) -> Option<Conflict> {
    let n = h.n();
    let mut depth = vec![UNSET; n];
    let mut parent = vec![UNSET; n];
    for root in 0..n {
        if depth[root] != UNSET {
            continue;
        }
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for y in h.neighbors(x) {
                if depth[y] == UNSET {
                    depth[y] = depth[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if depth[y] % 2 == depth[x] % 2 {
                    return Some(Conflict { parent, depth, x, y });
                }
            }
        }
    }
    None
}

/// Walks the two tree paths up to their meeting point; the paths plus the
/// conflict edge form a simple odd cycle.
fn conflict_to_simple_cycle(_h: &Graph, c: Conflict) -> Vec<usize> {
    let mut px = vec![c.x];
    let mut py = vec![c.y];
    let (mut ax, mut ay) = (c.x, c.y);
    while ax != ay {
        if c.depth[ax] >= c.depth[ay] {
            ax = c.parent[ax];
            px.push(ax);
        } else {
            ay = c.parent[ay];
            py.push(ay);
        }
    }
    // px ends at the meeting vertex, py stops just before it.
    py.pop();
    py.reverse();
    px.extend(py);
    px
}

/// Least chord of `cycle` (by endpoint pair), as positions `(i, j)`.
fn least_chord(h: &Graph, cycle: &[usize]) -> Option<(usize, usize)> {
    let m = cycle.len();
    let mut best: Option<((usize, usize), (usize, usize))> = None;
    for i in 0..m {
        for j in (i + 1)..m {
            let consecutive = j == i + 1 || (i == 0 && j == m - 1);
            if consecutive || !h.adjacent(cycle[i], cycle[j]) {
                continue;
            }
            let key = (cycle[i].min(cycle[j]), cycle[i].max(cycle[j]));
            if best.is_none_or(|(bk, _)| key < bk) {
                best = Some((key, (i, j)));
            }
        }
    }
    best.map(|(_, pos)| pos)
}

/// Splits an odd cycle along the chord at positions `(i, j)` and returns the
/// odd part (exactly one side is odd).
fn split_keep_odd(cycle: &[usize], i: usize, j: usize) -> Vec<usize> {
    let inside: Vec<usize> = cycle[i..=j].to_vec();
    let outside: Vec<usize> = cycle[j..]
        .iter()
        .chain(cycle[..=i].iter())
        .copied()
        .collect();
    if inside.len() % 2 == 1 {
        inside
    } else {
        debug_assert!(outside.len() % 2 == 1);
        outside
    }
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

/// Parses one graph6 line (McKay encoding: the order in 63-offset bytes, then
/// the upper-triangle bits packed big-endian into 6-bit groups, each +63).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let fail = |offset: usize, reason: &str| Error::Graph6 {
        offset,
        reason: reason.to_string(),
    };
    if bytes.is_empty() {
        return Err(fail(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(fail(i, "byte outside the graph6 range 63..=126"));
        }
    }
    let (n, pos): (usize, usize) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(fail(bytes.len(), "truncated 3-byte order field"));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = n << 6 | (b - 63) as usize;
        }
        if n < 63 {
            return Err(fail(1, "non-minimal multi-byte order field"));
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(fail(bytes.len(), "truncated 6-byte order field"));
        }
        let mut n: u64 = 0;
        for &b in &bytes[2..8] {
            n = n << 6 | (b - 63) as u64;
        }
        if n < 258_048 {
            return Err(fail(2, "non-minimal multi-byte order field"));
        }
        (n as usize, 8)
    };
    let pair_bits = n * n.saturating_sub(1) / 2;
    let expect = pair_bits.div_ceil(6);
    if bytes.len() - pos < expect {
        return Err(fail(bytes.len(), "truncated adjacency bits"));
    }
    if bytes.len() - pos > expect {
        return Err(fail(pos + expect, "trailing garbage after adjacency bits"));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = bytes[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.set_adjacent(row, col);
            }
            bit += 1;
        }
    }
    // Padding bits must be zero.
    while bit < expect * 6 {
        let byte = bytes[pos + bit / 6] - 63;
        if byte >> (5 - bit % 6) & 1 == 1 {
            return Err(fail(pos + bit / 6, "nonzero padding bits"));
        }
        bit += 1;
    }
    debug_assert_eq!(pos + expect, bytes.len());
    Ok(g)
}

/// Serializes to one graph6 line (no newline); the bit-exact inverse of
/// [`parse_graph6`].
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc: u8 = 0;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            acc = acc << 1 | u8::from(g.adjacent(row, col));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the human-readable edge list format: a header line `n m`, then `m`
/// lines `u v` with 0-based endpoints. Input only.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (header_no, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        reason: "missing `n m` header".into(),
    })?;
    let mut it = header.split_whitespace();
    let parse_num = |tok: Option<&str>, line: usize, what: &str| -> Result<usize> {
        tok.ok_or_else(|| Error::EdgeList {
            line,
            reason: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| Error::EdgeList {
            line,
            reason: format!("invalid {what}"),
        })
    };
    let n = parse_num(it.next(), header_no + 1, "vertex count")?;
    let m = parse_num(it.next(), header_no + 1, "edge count")?;
    if it.next().is_some() {
        return Err(Error::EdgeList {
            line: header_no + 1,
            reason: "trailing tokens after `n m` header".into(),
        });
    }
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (no, line) in lines {
        if count == m {
            return Err(Error::EdgeList {
                line: no + 1,
                reason: format!("more than {m} edge lines"),
            });
        }
        let mut it = line.split_whitespace();
        let u = parse_num(it.next(), no + 1, "endpoint")?;
        let v = parse_num(it.next(), no + 1, "endpoint")?;
        if it.next().is_some() {
            return Err(Error::EdgeList {
                line: no + 1,
                reason: "trailing tokens after edge".into(),
            });
        }
        g.insert_edge_checked(u, v).map_err(|e| Error::EdgeList {
            line: no + 1,
            reason: e.to_string(),
        })?;
        count += 1;
    }
    if count < m {
        return Err(Error::EdgeList {
            line: 0,
            reason: format!("expected {m} edges, found {count}"),
        });
    }
    Ok(g)
}
