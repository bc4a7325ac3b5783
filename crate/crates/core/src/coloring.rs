//! Exact proper-coloring machinery: decision with side constraints,
//! optimization, canonical enumeration, and a deletion-contraction counting
//! oracle.
//!
//! The decision search is branch-and-bound over vertices in a fixed order
//! (descending degree, ties by index) with first-use color symmetry breaking,
//! so identical inputs always yield identical witnesses.

use crate::error::{BudgetExhausted, Error, Result, SearchBudget};
use crate::graph::Graph;
use serde::Serialize;

/// A proper coloring. `num_colors` is exact: every color index in
/// `0..num_colors` occurs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    /// Wraps a color vector, normalizing names so colors first appear in
    /// increasing vertex order.
    fn normalized(raw: &[usize]) -> Coloring {
        let mut map: Vec<Option<usize>> = vec![None; raw.len().max(1)];
        let mut next = 0;
        let mut colors = Vec::with_capacity(raw.len());
        for &c in raw {
            let name = *map[c].get_or_insert_with(|| {
                let name = next;
                next += 1;
                name
            });
            colors.push(name);
        }
        Coloring {
            colors,
            num_colors: next,
        }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && g.edges().iter().all(|e| self.colors[e.u] != self.colors[e.v])
    }

    pub fn satisfies(&self, constraint: &ColorConstraint) -> bool {
        constraint
            .must_differ
            .iter()
            .all(|&(a, b)| self.colors[a] != self.colors[b])
    }
}

/// Extra must-differ pairs on top of the graph's own edges. Adjacent pairs
/// are implicitly must-differ and need not be listed.
#[derive(Debug, Clone, Default)]
pub struct ColorConstraint {
    must_differ: Vec<(usize, usize)>,
}

impl ColorConstraint {
    pub fn none() -> ColorConstraint {
        ColorConstraint::default()
    }

    pub fn must_differ(a: usize, b: usize) -> ColorConstraint {
        ColorConstraint {
            must_differ: vec![(a, b)],
        }
    }

    pub fn push_must_differ(&mut self, a: usize, b: usize) {
        self.must_differ.push((a, b));
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.must_differ
    }
}

/// A proper coloring of `g` with at most `k` colors satisfying `constraint`,
/// or `None` when none exists. Total and deterministic.
pub fn k_colorable(g: &Graph, k: usize, constraint: &ColorConstraint) -> Option<Coloring> {
    k_colorable_budgeted(g, k, constraint, &mut SearchBudget::unlimited())
        .expect("unlimited budget never exhausts")
}

/// Budgeted variant of [`k_colorable`]; every attempted vertex-color
/// assignment costs one node from the meter.
pub fn k_colorable_budgeted(
    g: &Graph,
    k: usize,
    constraint: &ColorConstraint,
    budget: &mut SearchBudget,
) -> std::result::Result<Option<Coloring>, BudgetExhausted> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Coloring {
            colors: Vec::new(),
            num_colors: 0,
        }));
    }
    if k == 0 {
        return Ok(None);
    }
    for &(a, b) in constraint.pairs() {
        assert!(a < n && b < n && a != b, "constraint pair out of range");
    }

    // Search adjacency: graph edges plus constraint pairs.
    let mut adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    for &(a, b) in constraint.pairs() {
        if !g.adjacent(a, b) {
            adj[a].push(b);
            adj[b].push(a);
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut assign = vec![usize::MAX; n];
    if search(&adj, &order, k, 0, 0, &mut assign, budget)? {
        Ok(Some(Coloring::normalized(&assign)))
    } else {
        Ok(None)
    }
}

fn search(
    adj: &[Vec<usize>],
    order: &[usize],
    k: usize,
    pos: usize,
    used: usize,
    assign: &mut Vec<usize>,
    budget: &mut SearchBudget,
) -> std::result::Result<bool, BudgetExhausted> {
    if pos == order.len() {
        return Ok(true);
    }
    let v = order[pos];
    // Symmetry breaking: a fresh color may only be the next unused one.
    let limit = (k - 1).min(used);
    for c in 0..=limit {
        budget.spend(1)?;
        if adj[v].iter().any(|&w| assign[w] == c) {
            continue;
        }
        assign[v] = c;
        if search(adj, order, k, pos + 1, used.max(c + 1), assign, budget)? {
            return Ok(true);
        }
        assign[v] = usize::MAX;
    }
    Ok(false)
}

/// Chromatic number with a witness using exactly that many colors. Lower
/// bound from a greedily grown clique, upper bound from DSATUR, exact value
/// settled by decision queries in between.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    chromatic_number_budgeted(g, &mut SearchBudget::unlimited())
        .expect("unlimited budget never exhausts")
}

pub fn chromatic_number_budgeted(
    g: &Graph,
    budget: &mut SearchBudget,
) -> std::result::Result<(usize, Coloring), BudgetExhausted> {
    let n = g.n();
    if n == 0 {
        return Ok((
            0,
            Coloring {
                colors: Vec::new(),
                num_colors: 0,
            },
        ));
    }
    let lb = greedy_clique(g).len();
    let (ub, greedy_witness) = dsatur(g);
    debug_assert!(lb <= ub);
    for k in lb..ub {
        if let Some(w) = k_colorable_budgeted(g, k, &ColorConstraint::none(), budget)? {
            return Ok((k, w));
        }
    }
    Ok((ub, greedy_witness))
}

/// Greedily grown clique: scan vertices by descending degree (ties by index)
/// and keep those adjacent to everything collected so far.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| g.adjacent(u, v)) {
            clique.push(v);
        }
    }
    clique.sort_unstable();
    clique
}

/// DSATUR greedy coloring: repeatedly color the vertex with the most
/// distinct neighbor colors (ties: higher degree, then lower index).
fn dsatur(g: &Graph) -> (usize, Coloring) {
    let n = g.n();
    let mut assign = vec![usize::MAX; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| assign[v] == usize::MAX)
            .max_by_key(|&v| {
                let mut sat: Vec<usize> =
                    g.neighbors(v).filter(|&w| assign[w] != usize::MAX).map(|w| assign[w]).collect();
                sat.sort_unstable();
                sat.dedup();
                (sat.len(), g.degree(v), std::cmp::Reverse(v))
            })
            .expect("an uncolored vertex remains");
        let mut c = 0;
        while g.neighbors(v).any(|w| assign[w] == c) {
            c += 1;
        }
        assign[v] = c;
    }
    let coloring = Coloring::normalized(&assign);
    (coloring.num_colors(), coloring)
}

/// Streams every proper coloring of `g` with at most `k` colors, one
/// representative per color-permutation class (colors first appear in
/// increasing vertex order), in lexicographic order of the color vector.
///
/// Tractability is the caller's business; intended for roughly `k <= 4`,
/// `n <= 20`.
pub fn enumerate_colorings(g: &Graph, k: usize) -> ColoringEnumerator<'_> {
    ColoringEnumerator {
        g,
        k,
        assign: vec![usize::MAX; g.n()],
        pos: 0,
        next_color: vec![0; g.n() + 1],
        exhausted: g.n() == 0 || k == 0,
        emitted_empty: false,
    }
}

pub struct ColoringEnumerator<'g> {
    g: &'g Graph,
    k: usize,
    assign: Vec<usize>,
    pos: usize,
    next_color: Vec<usize>,
    exhausted: bool,
    emitted_empty: bool,
}

impl Iterator for ColoringEnumerator<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        let n = self.g.n();
        if n == 0 {
            // One empty coloring, for completeness.
            if !self.emitted_empty && self.k > 0 {
                self.emitted_empty = true;
                return Some(Coloring {
                    colors: Vec::new(),
                    num_colors: 0,
                });
            }
            return None;
        }
        if self.exhausted {
            return None;
        }
        loop {
            let v = self.pos;
            let max_used = self.assign[..v]
                .iter()
                .map(|&c| c + 1)
                .max()
                .unwrap_or(0);
            let limit = (self.k - 1).min(max_used);
            let mut advanced = false;
            let mut c = self.next_color[v];
            while c <= limit {
                if !self.g.neighbors(v).any(|w| w < v && self.assign[w] == c) {
                    self.assign[v] = c;
                    self.next_color[v] = c + 1;
                    self.pos += 1;
                    if self.pos < n {
                        self.next_color[self.pos] = 0;
                    }
                    advanced = true;
                    break;
                }
                c += 1;
            }
            if !advanced {
                self.next_color[v] = 0;
                if self.pos == 0 {
                    self.exhausted = true;
                    return None;
                }
                self.pos -= 1;
                self.assign[self.pos] = usize::MAX;
                continue;
            }
            if self.pos == n {
                let out = Coloring::normalized(&self.assign);
                debug_assert_eq!(out.colors(), &self.assign[..]);
                // Step back to look for the next solution.
                self.pos -= 1;
                self.assign[self.pos] = usize::MAX;
                return Some(out);
            }
        }
    }
}

/// Cap for [`chromatic_polynomial_value`]: deletion-contraction blows up
/// beyond this order.
pub const POLYNOMIAL_MAX_N: usize = 16;

/// Number of labeled proper k-colorings, by deletion-contraction.
pub fn chromatic_polynomial_value(g: &Graph, k: usize) -> Result<u128> {
    if g.n() > POLYNOMIAL_MAX_N {
        return Err(Error::VertexCapExceeded {
            n: g.n(),
            cap: POLYNOMIAL_MAX_N,
        });
    }
    let kk = k as u128;
    // Every intermediate count is bounded by k^n; guard that once.
    kk.checked_pow(g.n() as u32).ok_or(Error::CountOverflow)?;
    Ok(del_con(g, kk))
}

fn del_con(g: &Graph, k: u128) -> u128 {
    let edges = g.edges();
    if edges.is_empty() {
        return k.pow(g.n() as u32);
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        return comps
            .iter()
            .map(|comp| {
                let (sub, _) = g
                    .induced(&comp.iter().copied().collect())
                    .expect("component vertices in range");
                del_con(&sub, k)
            })
            .product();
    }
    let e = edges[0];
    let deleted = g.delete_edge(e).expect("edge exists");
    let contracted = g.contract(e.u, e.v).expect("distinct endpoints");
    del_con(&deleted, k) - del_con(&contracted, k)
}
