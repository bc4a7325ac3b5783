//! Color-identical pairs, color fixation, and cycle separation.
//!
//! All predicates quantify over proper colorings that use exactly the
//! graph's chromatic number of colors. A universally quantified claim like
//! "u and v get equal colors in every optimal coloring" is decided by a
//! single constrained search: ask for an optimal coloring with `u != v` and
//! read the empty answer as "identical". Must-equal questions are asked by
//! contracting the pair and testing colorability of the contraction.
//!
//! Two notions of a "fixed" vertex are kept deliberately separate:
//! syntactic (an odd cycle spans the neighborhood) and semantic (no
//! independent vertex ever shares the color). The harness compares them;
//! nothing here conflates them.

use crate::coloring::{
    chromatic_number, chromatic_number_budgeted, k_colorable_budgeted, ColorConstraint,
};
use crate::error::{BudgetExhausted, Error, Result, SearchBudget};
use crate::graph::{find_induced_odd_cycle, Graph, VertexSet};

/// Partition of the vertices where two vertices share a class exactly when
/// they receive equal colors in every proper chi-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityPartition {
    pub chi: usize,
    pub classes: Vec<VertexSet>,
}

impl IdentityPartition {
    pub fn same_class(&self, u: usize, v: usize) -> bool {
        self.classes
            .iter()
            .any(|c| c.contains(u) && c.contains(v))
    }

    /// Number of unordered color-identical pairs.
    pub fn pair_count(&self) -> usize {
        self.classes.iter().map(|c| c.len() * (c.len() - 1) / 2).sum()
    }
}

/// True when non-adjacent `u`, `v` receive equal colors in every proper
/// chi-coloring. Adjacent pairs are non-identical by definition.
pub fn is_color_identical_pair(g: &Graph, u: usize, v: usize) -> bool {
    let chi = chromatic_number(g).0;
    is_color_identical_pair_with_chi(g, chi, u, v, &mut SearchBudget::unlimited())
        .expect("unlimited budget never exhausts")
}

/// The same predicate with the chromatic number precomputed.
pub fn is_color_identical_pair_with_chi(
    g: &Graph,
    chi: usize,
    u: usize,
    v: usize,
    budget: &mut SearchBudget,
) -> std::result::Result<bool, BudgetExhausted> {
    assert!(u != v && u < g.n() && v < g.n(), "vertex pair out of range");
    if g.adjacent(u, v) {
        return Ok(false);
    }
    Ok(k_colorable_budgeted(g, chi, &ColorConstraint::must_differ(u, v), budget)?.is_none())
}

/// A proper chi-coloring separating `u` and `v`, when one exists — the
/// concrete witness that a pair is not color-identical.
pub fn separating_coloring(g: &Graph, u: usize, v: usize) -> Option<crate::coloring::Coloring> {
    let chi = chromatic_number(g).0;
    crate::coloring::k_colorable(g, chi, &ColorConstraint::must_differ(u, v))
}

/// The full identity partition. Color identity is an intersection of
/// equivalence kernels over all optimal colorings, hence itself an
/// equivalence; known-equal pairs are skipped through union-find.
pub fn identity_partition(g: &Graph) -> IdentityPartition {
    identity_partition_budgeted(g, &mut SearchBudget::unlimited())
        .expect("unlimited budget never exhausts")
}

pub fn identity_partition_budgeted(
    g: &Graph,
    budget: &mut SearchBudget,
) -> std::result::Result<IdentityPartition, BudgetExhausted> {
    let n = g.n();
    let chi = chromatic_number_budgeted(g, budget)?.0;
    let mut dsu: Vec<usize> = (0..n).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            let root = find(dsu, dsu[x]);
            dsu[x] = root;
        }
        dsu[x]
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if g.adjacent(u, v) || find(&mut dsu, u) == find(&mut dsu, v) {
                continue;
            }
            if is_color_identical_pair_with_chi(g, chi, u, v, budget)? {
                let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
                dsu[ru.max(rv)] = ru.min(rv);
            }
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..n {
        let r = find(&mut dsu, v);
        classes.entry(r).or_default().push(v);
    }
    Ok(IdentityPartition {
        chi,
        classes: classes.into_values().map(VertexSet::new).collect(),
    })
}

/// Syntactic fixation: an induced odd cycle spanning part of `N(v)`, when
/// the neighborhood is non-bipartite.
pub fn is_color_fixed_by_odd_cycle(g: &Graph, v: usize) -> Option<VertexSet> {
    g.neighborhood_odd_cycle(v)
}

/// An odd cycle lying entirely in the common neighborhood of `u` and `v`.
pub fn shared_cycle_pair(g: &Graph, u: usize, v: usize) -> Option<VertexSet> {
    assert!(u != v, "distinct vertices required");
    find_induced_odd_cycle(g, &g.common_neighborhood(u, v))
}

/// True when `u` and `v` land in different components of `g - cycle`.
///
/// Preconditions are checked and violations reported by name: the set must
/// induce a cycle subgraph and neither endpoint may lie on it.
pub fn cycle_separates(g: &Graph, cycle: &VertexSet, u: usize, v: usize) -> Result<bool> {
    for x in cycle.iter().chain([u, v]) {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
        }
    }
    let (sub, _) = g.induced(cycle)?;
    if sub.is_cycle_graph().is_none() {
        return Err(Error::Precondition(
            "the given vertex set does not induce a cycle".into(),
        ));
    }
    for (name, x) in [("u", u), ("v", v)] {
        if cycle.contains(x) {
            return Err(Error::Precondition(format!(
                "vertex {name}={x} lies on the separating cycle"
            )));
        }
    }
    let keep: VertexSet = (0..g.n()).filter(|x| !cycle.contains(*x)).collect();
    let (rest, back) = g.induced(&keep)?;
    let comps = rest.connected_components();
    let comp_of = |x: usize| -> usize {
        let local = back.iter().position(|&o| o == x).expect("kept vertex");
        comps.iter().position(|c| c.contains(&local)).expect("in some component")
    };
    Ok(comp_of(u) != comp_of(v))
}

/// Semantic fixation: vertices that share their color with no independent
/// vertex in any optimal coloring. Decided per non-neighbor by contracting
/// the pair: `v` is fixed exactly when every such contraction needs more
/// than chi colors. Vertices with no non-neighbor qualify vacuously.
pub fn semantically_fixed_vertices(g: &Graph) -> VertexSet {
    semantically_fixed_vertices_budgeted(g, &mut SearchBudget::unlimited())
        .expect("unlimited budget never exhausts")
}

pub fn semantically_fixed_vertices_budgeted(
    g: &Graph,
    budget: &mut SearchBudget,
) -> std::result::Result<VertexSet, BudgetExhausted> {
    let n = g.n();
    let chi = chromatic_number_budgeted(g, budget)?.0;
    let mut fixed = Vec::new();
    'vertices: for v in 0..n {
        for u in 0..n {
            if u == v || g.adjacent(u, v) {
                continue;
            }
            let merged = g.contract(u, v).expect("distinct vertices");
            if k_colorable_budgeted(&merged, chi, &ColorConstraint::none(), budget)?.is_some() {
                continue 'vertices;
            }
        }
        fixed.push(v);
    }
    Ok(fixed.into_iter().collect())
}
