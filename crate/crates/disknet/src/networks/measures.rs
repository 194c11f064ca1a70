//! Graph-level measures: weighted clustering and betweenness centrality.

use super::WeightedGraph;
use crate::{Error, Result};
use std::collections::{BTreeMap, VecDeque};

/// Weighted clustering coefficient of node `i`.
///
/// Over unordered neighbor pairs (k, h) with w_kh > 0, sums the geometric
/// mean (w_ik · w_ih · w_kh)^(1/3), then normalizes by
/// max_w · deg_i · (deg_i − 1), where max_w is the largest non-loop weight in
/// i's ego network. Degree-0 and degree-1 nodes score 0. The value lies in
/// [0, 0.5]; a uniformly weighted triangle scores exactly 0.5 at each corner.
pub fn weighted_clustering(g: &WeightedGraph, i: &str) -> Result<f64> {
    let idx = g
        .index_of(i)
        .ok_or_else(|| Error::data(format!("unknown node id: {i}")))?;
    let nbrs = g.neighbor_indices(idx);
    let deg = nbrs.len();
    if deg < 2 {
        return Ok(0.0);
    }
    let mut max_w = 0.0f64;
    for (pos, &k) in nbrs.iter().enumerate() {
        max_w = max_w.max(g.weight_by_index(idx, k));
        for &h in nbrs.iter().skip(pos + 1) {
            max_w = max_w.max(g.weight_by_index(k, h));
        }
    }
    let mut sum = 0.0;
    for (pos, &k) in nbrs.iter().enumerate() {
        let w_ik = g.weight_by_index(idx, k);
        for &h in nbrs.iter().skip(pos + 1) {
            let w_kh = g.weight_by_index(k, h);
            if w_kh > 0.0 {
                let w_ih = g.weight_by_index(idx, h);
                sum += (w_ik * w_ih * w_kh).cbrt();
            }
        }
    }
    Ok(sum / (max_w * deg as f64 * (deg as f64 - 1.0)))
}

/// Unnormalized betweenness centrality of every node, computed on the
/// unweighted non-loop skeleton with Brandes' algorithm. Each unordered
/// source/target pair contributes once. Errors if the skeleton is
/// disconnected, naming the components.
pub fn betweenness_centrality(g: &WeightedGraph) -> Result<BTreeMap<String, f64>> {
    let comps = g.components();
    if comps.len() > 1 {
        let named: Vec<String> = comps.iter().map(|c| format!("[{}]", c.join(", "))).collect();
        return Err(Error::data(format!(
            "betweenness requires a connected graph; components: {}",
            named.join(" ")
        )));
    }
    let n = g.node_count();
    let mut adj = vec![Vec::new(); n];
    let mut names = vec![""; n];
    for id in g.node_ids() {
        let idx = g.index_of(id).unwrap();
        names[idx] = id;
        adj[idx] = g.neighbor_indices(idx);
    }
    let mut centrality = vec![0.0f64; n];
    for s in 0..n {
        let mut stack = Vec::with_capacity(n);
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut sigma = vec![0.0f64; n];
        let mut dist = vec![-1i64; n];
        sigma[s] = 1.0;
        dist[s] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &w in &adj[v] {
                if dist[w] < 0 {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        let mut delta = vec![0.0f64; n];
        while let Some(w) = stack.pop() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                centrality[w] += delta[w];
            }
        }
    }
    // Each unordered pair was visited from both endpoints.
    Ok(names
        .iter()
        .enumerate()
        .map(|(i, name)| (name.to_string(), centrality[i] / 2.0))
        .collect())
}

/// Population standard deviation of the betweenness values.
pub fn betweenness_std(g: &WeightedGraph) -> Result<f64> {
    let values: Vec<f64> = betweenness_centrality(g)?.into_values().collect();
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    Ok(var.sqrt())
}
