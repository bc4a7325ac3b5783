//! k-chromaticity and edge-criticality with per-edge certificates.
//!
//! "Critical" here always means edge-critical: the chromatic number is k and
//! deleting any single edge drops it to k-1. Deleting an edge can lower the
//! chromatic number by at most one, so each stored (k-1)-coloring of `G - e`
//! is a complete witness for its edge.

use crate::coloring::{chromatic_number_budgeted, k_colorable_budgeted, ColorConstraint, Coloring};
use crate::error::{BudgetExhausted, SearchBudget};
use crate::graph::{Edge, Graph, VertexSet};

/// Witness that a graph is k-critical: a k-coloring of the graph itself and,
/// for every edge, a proper (k-1)-coloring of the graph with that edge
/// removed.
#[derive(Debug, Clone)]
pub struct CriticalityCertificate {
    pub k: usize,
    pub base_witness: Coloring,
    pub per_edge: Vec<(Edge, Coloring)>,
}

impl CriticalityCertificate {
    /// Replays the whole certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        if !self.base_witness.is_proper(g) || self.base_witness.num_colors() != self.k {
            return false;
        }
        let edges = g.edges();
        if self.per_edge.len() != edges.len() {
            return false;
        }
        self.per_edge.iter().zip(edges.iter()).all(|((e, w), expect)| {
            e == expect
                && g.has_edge(*e)
                && w.num_colors() < self.k
                && w.is_proper(&g.delete_edge(*e).expect("edge exists"))
        })
    }
}

/// Why a graph is not k-critical. The prefilter variants are sound by
/// classical arguments; the rest come from the full search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonCriticality {
    /// Disconnected graphs are rejected outright.
    Disconnected,
    /// A vertex of degree < k-1 could always be recolored after any edge
    /// deletion, so no k-critical graph has one.
    LowDegreeVertex { vertex: usize, degree: usize },
    /// The graph properly contains a k-clique; with connectivity this leaves
    /// an edge whose deletion cannot lower the chromatic number below k.
    CliqueExceedsTarget { clique: VertexSet },
    WrongChromaticNumber { chi: usize },
    /// Deleting this edge keeps the chromatic number at k.
    RedundantEdge { edge: Edge },
}

/// Full criticality check with diagnostics.
pub fn check_k_critical(
    g: &Graph,
    k: usize,
) -> Result<CriticalityCertificate, NonCriticality> {
    check_k_critical_budgeted(g, k, &mut SearchBudget::unlimited())
        .expect("unlimited budget never exhausts")
}

/// `Some(certificate)` when `g` is k-critical.
pub fn is_k_critical(g: &Graph, k: usize) -> Option<CriticalityCertificate> {
    check_k_critical(g, k).ok()
}

pub fn check_k_critical_budgeted(
    g: &Graph,
    k: usize,
    budget: &mut SearchBudget,
) -> Result<Result<CriticalityCertificate, NonCriticality>, BudgetExhausted> {
    check_impl(g, k, true, budget)
}

/// The same decision without the prefilters; tests use it to confirm the
/// prefilters agree with the full search.
#[doc(hidden)]
pub fn check_k_critical_unfiltered(
    g: &Graph,
    k: usize,
) -> Result<CriticalityCertificate, NonCriticality> {
    check_impl(g, k, false, &mut SearchBudget::unlimited())
        .expect("unlimited budget never exhausts")
}

fn check_impl(
    g: &Graph,
    k: usize,
    prefilters: bool,
    budget: &mut SearchBudget,
) -> Result<Result<CriticalityCertificate, NonCriticality>, BudgetExhausted> {
    if !g.is_connected() {
        return Ok(Err(NonCriticality::Disconnected));
    }
    if prefilters && k >= 1 {
        for v in 0..g.n() {
            let d = g.degree(v);
            if d < k - 1 {
                return Ok(Err(NonCriticality::LowDegreeVertex { vertex: v, degree: d }));
            }
        }
        let clique = crate::coloring::greedy_clique(g);
        if clique.len() >= k && g.n() != k {
            return Ok(Err(NonCriticality::CliqueExceedsTarget {
                clique: clique.into_iter().take(k).collect(),
            }));
        }
    }
    let (chi, base_witness) = chromatic_number_budgeted(g, budget)?;
    if chi != k {
        return Ok(Err(NonCriticality::WrongChromaticNumber { chi }));
    }
    let mut per_edge = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let h = g.delete_edge(e).expect("edge exists");
        match k_colorable_budgeted(&h, k - 1, &ColorConstraint::none(), budget)? {
            Some(w) => per_edge.push((e, w)),
            None => return Ok(Err(NonCriticality::RedundantEdge { edge: e })),
        }
    }
    Ok(Ok(CriticalityCertificate {
        k,
        base_witness,
        per_edge,
    }))
}

pub fn is_k_chromatic(g: &Graph, k: usize) -> bool {
    crate::coloring::chromatic_number(g).0 == k
}

/// All single-edge deletions `(e, G - e)` in canonical edge order.
pub fn subcriticals(g: &Graph) -> impl Iterator<Item = (Edge, Graph)> + '_ {
    g.edges()
        .into_iter()
        .map(|e| (e, g.delete_edge(e).expect("edge exists")))
}
