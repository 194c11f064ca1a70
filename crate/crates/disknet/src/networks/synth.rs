//! Synthetic reference graphs and hierarchy-increasing rewires.

use super::measures::betweenness_std;
use super::WeightedGraph;
use crate::{Error, Result};
use rand::Rng;

/// Families of reference graphs with known hierarchy profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferenceKind {
    /// Rooted tree with fixed branching; `levels` counts the root as level 1,
    /// so branching 3 with 3 levels has 13 nodes.
    Tree { branching: u32, levels: u32 },
    /// Ring of `n` nodes, each joined to its `k / 2` nearest on both sides.
    RingLattice { n: u32, k: u32 },
}

/// Build a unit-weight reference graph. Node ids are zero-padded `n..`
/// labels assigned in breadth-first (tree) or ring order.
pub fn generate_reference_graph(kind: ReferenceKind) -> Result<WeightedGraph> {
    match kind {
        ReferenceKind::Tree { branching, levels } => {
            if branching == 0 || levels == 0 {
                return Err(Error::data(format!(
                    "tree needs branching >= 1 and levels >= 1, got branching {branching}, levels {levels}"
                )));
            }
            let mut count: u64 = 1;
            let mut layer: u64 = 1;
            for _ in 1..levels {
                layer *= branching as u64;
                count += layer;
                if count > 100_000 {
                    return Err(Error::data(format!(
                        "tree with branching {branching} and {levels} levels is too large"
                    )));
                }
            }
            let width = (count - 1).max(1).to_string().len();
            let name = |i: u64| format!("n{i:0width$}");
            let mut g = WeightedGraph::new();
            g.add_node(&name(0));
            // Children of node i are i*b+1 ..= i*b+b in breadth-first order.
            for child in 1..count {
                let parent = (child - 1) / branching as u64;
                g.add_edge_weight(&name(parent), &name(child), 1.0)?;
            }
            Ok(g)
        }
        ReferenceKind::RingLattice { n, k } => {
            if k == 0 || k % 2 != 0 {
                return Err(Error::data(format!(
                    "ring lattice needs even k >= 2, got {k}"
                )));
            }
            if k >= n {
                return Err(Error::data(format!(
                    "ring lattice needs k < n, got k = {k}, n = {n}"
                )));
            }
            let width = (n - 1).max(1).to_string().len();
            let name = |i: u32| format!("n{i:0width$}");
            let mut g = WeightedGraph::new();
            for i in 0..n {
                g.add_node(&name(i));
            }
            for i in 0..n {
                for step in 1..=(k / 2) {
                    let j = (i + step) % n;
                    g.add_edge_weight(&name(i), &name(j), 1.0)?;
                }
            }
            Ok(g)
        }
    }
}

/// Degree-preserving rewiring that only keeps moves which leave the graph
/// connected and strictly increase the standard deviation of betweenness.
///
/// Each attempt proposes one double-edge swap: two disjoint edges (a, b) and
/// (c, d) are re-paired into (a, d) and (c, b), carrying their weights.
/// Proposals that would duplicate an edge, create a self-loop, disconnect
/// the graph, or fail to increase the betweenness spread are discarded; the
/// attempt is consumed either way, so the result is a deterministic function
/// of the input and the rng state. With `attempts` = 0 (or no accepted move)
/// the result equals the input.
pub fn rewire_increase_hierarchy(
    g: &WeightedGraph,
    attempts: usize,
    rng: &mut impl Rng,
) -> Result<WeightedGraph> {
    if !g.is_connected() {
        return Err(Error::data(
            "rewiring requires a connected input graph".to_string(),
        ));
    }
    let mut current = g.clone();
    let mut current_std = betweenness_std(&current)?;
    for _ in 0..attempts {
        let edges: Vec<(String, String, f64)> = current
            .edges()
            .into_iter()
            .filter(|(a, b, _)| a != b)
            .map(|(a, b, w)| (a.to_string(), b.to_string(), w))
            .collect();
        if edges.len() < 2 {
            break;
        }
        let i = rng.random_range(0..edges.len());
        let j = rng.random_range(0..edges.len());
        let crossed = rng.random::<bool>();
        if i == j {
            continue;
        }
        let (a, b, w_ab) = edges[i].clone();
        let (c, d, w_cd) = edges[j].clone();
        // Pick one of the two re-pairings uniformly.
        let (c, d, w_cd) = if crossed { (d, c, w_cd) } else { (c, d, w_cd) };
        let endpoints = [&a, &b, &c, &d];
        let distinct = endpoints
            .iter()
            .enumerate()
            .all(|(x, u)| endpoints.iter().skip(x + 1).all(|v| u != v));
        if !distinct {
            continue;
        }
        if current.weight(&a, &d) > 0.0 || current.weight(&c, &b) > 0.0 {
            continue;
        }
        let mut candidate = WeightedGraph::new();
        for id in current.node_ids() {
            candidate.add_node(id);
        }
        for (u, v, w) in current.edges() {
            if (u == a && v == b) || (u == b && v == a) || (u == c && v == d) || (u == d && v == c)
            {
                continue;
            }
            candidate.add_edge_weight(u, v, w)?;
        }
        candidate.add_edge_weight(&a, &d, w_ab)?;
        candidate.add_edge_weight(&c, &b, w_cd)?;
        if !candidate.is_connected() {
            continue;
        }
        let candidate_std = betweenness_std(&candidate)?;
        if candidate_std > current_std {
            current = candidate;
            current_std = candidate_std;
        }
    }
    Ok(current)
}
