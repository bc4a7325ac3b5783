//! Generators for the structured families under study: odd wheels,
//! cycle-sharing wheel pairs, hub/cycle fixation chains, and their closures.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};

/// An odd wheel: `hub` joined to every vertex of an odd cycle.
#[derive(Debug, Clone)]
pub struct Wheel {
    pub graph: Graph,
    pub hub: usize,
    pub cycle: VertexSet,
}

/// Hub joined to every vertex of `C_cycle_len`. The hub is vertex 0 and the
/// cycle occupies `1..=cycle_len`. Odd wheels are 4-chromatic, 4-critical
/// and planar; `odd_wheel(3)` is K4.
pub fn odd_wheel(cycle_len: usize) -> Result<Wheel> {
    check_cycle_len(cycle_len)?;
    let n = cycle_len + 1;
    let mut g = Graph::empty(n);
    for i in 0..cycle_len {
        g.set_adjacent(1 + i, 1 + (i + 1) % cycle_len);
        g.set_adjacent(0, 1 + i);
    }
    Ok(Wheel {
        graph: g,
        hub: 0,
        cycle: (1..=cycle_len).collect(),
    })
}

fn check_cycle_len(len: usize) -> Result<()> {
    if len < 3 || len.is_multiple_of(2) {
        Err(Error::InvalidCycleLength(len))
    } else {
        Ok(())
    }
}

/// Declarative description of a fixation chain: the ordered odd cycle
/// lengths. The hub/cycle alternation and the full joins are fixed by
/// construction; a chain with `c` cycles has `c + 1` hubs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSpec {
    cycle_lengths: Vec<usize>,
}

impl ChainSpec {
    pub fn new(cycle_lengths: Vec<usize>) -> Result<ChainSpec> {
        if cycle_lengths.is_empty() {
            return Err(Error::EmptyChainSpec);
        }
        for &len in &cycle_lengths {
            check_cycle_len(len)?;
        }
        Ok(ChainSpec { cycle_lengths })
    }

    /// Parses the CLI syntax: comma-separated odd lengths, e.g. `3,5,3`.
    pub fn parse(text: &str) -> Result<ChainSpec> {
        let lengths = text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Precondition(format!("invalid cycle length `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        ChainSpec::new(lengths)
    }

    pub fn cycle_lengths(&self) -> &[usize] {
        &self.cycle_lengths
    }

    pub fn hub_count(&self) -> usize {
        self.cycle_lengths.len() + 1
    }
}

impl std::fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.cycle_lengths.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A built chain: hubs first (`0..h`), then the cycles in order. `cycles[i]`
/// is fully joined to `hubs[i]` and `hubs[i+1]`; hubs are pairwise
/// non-adjacent; the chain starts and ends with a hub.
#[derive(Debug, Clone)]
pub struct ChainGraph {
    pub graph: Graph,
    pub hubs: Vec<usize>,
    pub cycles: Vec<VertexSet>,
}

pub fn build_chain(spec: &ChainSpec) -> ChainGraph {
    let h = spec.hub_count();
    let n = h + spec.cycle_lengths().iter().sum::<usize>();
    let mut g = Graph::empty(n);
    let hubs: Vec<usize> = (0..h).collect();
    let mut cycles = Vec::with_capacity(spec.cycle_lengths().len());
    let mut base = h;
    for (i, &len) in spec.cycle_lengths().iter().enumerate() {
        for j in 0..len {
            g.set_adjacent(base + j, base + (j + 1) % len);
            g.set_adjacent(hubs[i], base + j);
            g.set_adjacent(hubs[i + 1], base + j);
        }
        cycles.push((base..base + len).collect());
        base += len;
    }
    ChainGraph {
        graph: g,
        hubs,
        cycles,
    }
}

/// The chain plus the edge joining its two end hubs.
pub fn close_chain(chain: &ChainGraph) -> Graph {
    close_chain_between(chain, 0, chain.hubs.len() - 1)
        .expect("end hubs are distinct and non-adjacent")
}

/// Closes the chain between an arbitrary hub pair, for experiments. The
/// default closure joins the ends.
pub fn close_chain_between(chain: &ChainGraph, i: usize, j: usize) -> Result<Graph> {
    let hubs = &chain.hubs;
    if i >= hubs.len() || j >= hubs.len() || i == j {
        return Err(Error::Precondition(format!(
            "hub indices {i},{j} invalid for a chain with {} hubs",
            hubs.len()
        )));
    }
    chain.graph.with_edge(Edge::new(hubs[i], hubs[j])?)
}
