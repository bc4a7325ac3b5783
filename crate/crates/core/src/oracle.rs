//! Independent brute-force reference implementations.
//!
//! Everything here exists to cross-check a fast path elsewhere in the crate
//! and deliberately shares no code with it: the counters enumerate raw
//! assignments, the isomorphism dedup walks permutation orbits, and the
//! planarity check searches for explicit Kuratowski subdivisions. Desk-scale
//! inputs only.

use crate::graph::{Graph, VertexSet};

/// Number of labeled proper k-colorings by trying all `k^n` assignments.
pub fn count_proper_colorings_naive(g: &Graph, k: usize) -> u128 {
    let n = g.n();
    if n == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    let edges = g.edges();
    let mut assign = vec![0usize; n];
    let mut count: u128 = 0;
    loop {
        if edges.iter().all(|e| assign[e.u] != assign[e.v]) {
            count += 1;
        }
        // Odometer step.
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            assign[i] += 1;
            if assign[i] < k {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

/// Least k with a proper k-coloring, by naive counting upward.
pub fn chromatic_number_naive(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    (1..).find(|&k| count_proper_colorings_naive(g, k) > 0).unwrap()
}

/// Bipartiteness by trying all `2^n` two-sided assignments.
pub fn is_bipartite_naive(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 20, "naive bipartiteness oracle is for small graphs");
    let edges = g.edges();
    (0u32..1 << n).any(|mask| {
        edges
            .iter()
            .all(|e| (mask >> e.u) & 1 != (mask >> e.v) & 1)
    })
}

/// Number of isomorphism classes of connected simple graphs on `n` vertices,
/// by generating all labeled graphs and sweeping permutation orbits.
pub fn count_connected_classes_naive(n: usize) -> usize {
    assert!((1..=7).contains(&n), "orbit oracle is sized for n <= 7");
    if n == 1 {
        return 1;
    }
    let slots = n * (n - 1) / 2;
    let pair_index = |i: usize, j: usize| -> usize {
        // Upper triangle scanned column by column, matching graph6 bit order.
        j * (j - 1) / 2 + i
    };
    let perms = permutations(n);
    let mut seen = vec![false; 1usize << slots];
    let mut classes = 0;
    for code in 0..(1usize << slots) {
        if seen[code] || !code_connected(code, n, pair_index) {
            continue;
        }
        classes += 1;
        for p in &perms {
            let mut image = 0usize;
            for j in 1..n {
                for i in 0..j {
                    if code >> pair_index(i, j) & 1 == 1 {
                        let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                        image |= 1 << pair_index(a, b);
                    }
                }
            }
            seen[image] = true;
        }
    }
    classes
}

fn code_connected(code: usize, n: usize, pair_index: impl Fn(usize, usize) -> usize) -> bool {
    let mut reach = 1usize;
    let mut frontier = 1usize;
    while frontier != 0 {
        let mut next = 0usize;
        for v in 0..n {
            if frontier >> v & 1 == 0 {
                continue;
            }
            for w in 0..n {
                if w != v && reach >> w & 1 == 0 {
                    let (i, j) = (v.min(w), v.max(w));
                    if code >> pair_index(i, j) & 1 == 1 {
                        next |= 1 << w;
                    }
                }
            }
        }
        reach |= next;
        frontier = next;
    }
    reach == (1 << n) - 1
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Planarity by Kuratowski's theorem: a graph is non-planar exactly when it
/// contains a subdivision of K5 or K3,3. The search assigns branch vertices
/// and routes internally-disjoint paths between them.
pub fn is_planar_by_subdivision_search(g: &Graph) -> bool {
    !contains_k5_subdivision(g) && !contains_k33_subdivision(g)
}

fn contains_k5_subdivision(g: &Graph) -> bool {
    let n = g.n();
    if n < 5 {
        return false;
    }
    let cands: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 4).collect();
    let mut chosen = Vec::new();
    combinations(&cands, 5, &mut chosen, &mut |branch| {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|i| ((i + 1)..5).map(move |j| (i, j)))
            .map(|(i, j)| (branch[i], branch[j]))
            .collect();
        route_all(g, branch, &pairs)
    })
}

fn contains_k33_subdivision(g: &Graph) -> bool {
    let n = g.n();
    if n < 6 {
        return false;
    }
    let cands: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    let mut side_a = Vec::new();
    combinations(&cands, 3, &mut side_a, &mut |a| {
        let rest: Vec<usize> = cands.iter().copied().filter(|v| !a.contains(v)).collect();
        let mut side_b = Vec::new();
        combinations(&rest, 3, &mut side_b, &mut |b| {
            let branch: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
            let pairs: Vec<(usize, usize)> =
                a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).collect();
            route_all(g, &branch, &pairs)
        })
    })
}

/// Visits `k`-subsets of `items` in ascending order until `f` says true.
fn combinations(
    items: &[usize],
    k: usize,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if chosen.len() == k {
        return f(chosen);
    }
    let start = chosen
        .last()
        .map(|&last| items.iter().position(|&x| x == last).unwrap() + 1)
        .unwrap_or(0);
    for idx in start..items.len() {
        if items.len() - idx < k - chosen.len() {
            break;
        }
        chosen.push(items[idx]);
        if combinations(items, k, chosen, f) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

/// Tries to route every required pair through internally-disjoint paths whose
/// interior avoids branch vertices and previously used interiors.
fn route_all(g: &Graph, branch: &[usize], pairs: &[(usize, usize)]) -> bool {
    let mut used = vec![false; g.n()];
    for &b in branch {
        used[b] = true;
    }
    route_from(g, branch, pairs, 0, &mut used)
}

fn route_from(
    g: &Graph,
    branch: &[usize],
    pairs: &[(usize, usize)],
    i: usize,
    used: &mut Vec<bool>,
) -> bool {
    if i == pairs.len() {
        return true;
    }
    let (s, t) = pairs[i];
    extend_path(g, branch, pairs, i, s, t, used)
}

fn extend_path(
    g: &Graph,
    branch: &[usize],
    pairs: &[(usize, usize)],
    i: usize,
    at: usize,
    target: usize,
    used: &mut Vec<bool>,
) -> bool {
    if g.adjacent(at, target) && route_from(g, branch, pairs, i + 1, used) {
        return true;
    }
    for w in g.neighbors(at) {
        if used[w] || w == target {
            continue;
        }
        used[w] = true;
        if extend_path(g, branch, pairs, i, w, target, used) {
            return true;
        }
        used[w] = false;
    }
    false
}

/// Whether the subgraph induced on `set` is bipartite, by brute force.
pub fn induced_subgraph_bipartite_naive(g: &Graph, set: &VertexSet) -> bool {
    let (h, _) = g.induced(set).expect("vertices in range");
    is_bipartite_naive(&h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naive_counts_match_closed_forms() {
        assert_eq!(count_proper_colorings_naive(&Graph::complete(3), 3), 6);
        assert_eq!(count_proper_colorings_naive(&Graph::cycle(4), 2), 2);
        // Cycle formula (k-1)^n + (-1)^n (k-1).
        assert_eq!(count_proper_colorings_naive(&Graph::cycle(5), 3), 30);
        assert_eq!(count_proper_colorings_naive(&Graph::path(3), 2), 2);
        assert_eq!(count_proper_colorings_naive(&Graph::complete(4), 3), 0);
        assert_eq!(chromatic_number_naive(&Graph::complete(4)), 4);
        assert_eq!(chromatic_number_naive(&Graph::cycle(5)), 3);
    }

    #[test]
    fn orbit_oracle_small_counts() {
        // Connected graph classes: 1, 1, 2, 6, 21, 112 for n = 1..=6.
        assert_eq!(count_connected_classes_naive(1), 1);
        assert_eq!(count_connected_classes_naive(2), 1);
        assert_eq!(count_connected_classes_naive(3), 2);
        assert_eq!(count_connected_classes_naive(4), 6);
        assert_eq!(count_connected_classes_naive(5), 21);
        assert_eq!(count_connected_classes_naive(6), 112);
    }

    #[test]
    fn subdivision_search_named_graphs() {
        assert!(is_planar_by_subdivision_search(&Graph::complete(4)));
        assert!(!is_planar_by_subdivision_search(&Graph::complete(5)));
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert!(!is_planar_by_subdivision_search(&k33));
        assert!(is_planar_by_subdivision_search(&Graph::cycle(6)));
        // Subdivided K5 on 6 vertices is still non-planar.
        let mut edges = Vec::new();
        for i in 0..5usize {
            for j in (i + 1)..5 {
                if (i, j) != (3, 4) {
                    edges.push((i, j));
                }
            }
        }
        edges.push((3, 5));
        edges.push((4, 5));
        let sub = Graph::from_edges(6, &edges).unwrap();
        assert!(!is_planar_by_subdivision_search(&sub));
    }

    #[test]
    fn bipartite_naive_basics() {
        assert!(is_bipartite_naive(&Graph::cycle(6)));
        assert!(!is_bipartite_naive(&Graph::cycle(5)));
        assert!(is_bipartite_naive(&Graph::path(4)));
    }
}
