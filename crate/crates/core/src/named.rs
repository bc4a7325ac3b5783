//! A few named graphs the test corpus leans on.

use crate::graph::Graph;

/// The Petersen graph: outer C5, inner 5-cycle with step 2, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, &edges).expect("valid edge list")
}

/// The Grötzsch graph (Mycielskian of C5): triangle-free, 4-chromatic,
/// non-planar. Vertices: cycle 0..5, shadows 5..10, apex 10.
pub fn groetzsch() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, (i + 1) % 5));
        edges.push((5 + i, (i + 4) % 5));
        edges.push((5 + i, 10));
    }
    Graph::from_edges(11, &edges).expect("valid edge list")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let p = petersen();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));

        let g = groetzsch();
        assert_eq!(g.n(), 11);
        assert_eq!(g.edge_count(), 20);
        // Triangle-free: no vertex pair shares an edge and a common neighbor.
        for e in g.edges() {
            assert!(g.common_neighborhood(e.u, e.v).is_empty());
        }
    }
}
