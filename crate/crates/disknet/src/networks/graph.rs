//! Undirected weighted graph with accumulating edge weights.

use crate::{Error, Result};
use std::collections::BTreeMap;
use std::path::Path;

/// Undirected graph over text node ids with strictly positive edge weights.
///
/// Parallel contributions accumulate into a single weight per unordered
/// pair. Self-loops are allowed and stored under (v, v); they are excluded
/// from neighbor queries and degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    edges: BTreeMap<(usize, usize), f64>,
}

impl Default for WeightedGraph {
    fn default() -> Self {
        Self::new()
    }
}

impl WeightedGraph {
    pub fn new() -> Self {
        WeightedGraph {
            names: Vec::new(),
            index: BTreeMap::new(),
            edges: BTreeMap::new(),
        }
    }

    /// Insert a node if absent; returns its index either way.
    pub fn add_node(&mut self, id: &str) -> usize {
        if let Some(&i) = self.index.get(id) {
            return i;
        }
        let i = self.names.len();
        self.names.push(id.to_string());
        self.index.insert(id.to_string(), i);
        i
    }

    /// Add weight to the (u, v) edge, creating nodes and the edge as needed.
    /// u == v adds self-loop weight.
    pub fn add_edge_weight(&mut self, u: &str, v: &str, w: f64) -> Result<()> {
        if !w.is_finite() || w <= 0.0 {
            return Err(Error::data(format!(
                "edge weight must be finite and positive, got {w} for ({u}, {v})"
            )));
        }
        let iu = self.add_node(u);
        let iv = self.add_node(v);
        let key = (iu.min(iv), iu.max(iv));
        *self.edges.entry(key).or_insert(0.0) += w;
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    /// Number of stored edges, self-loops included.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    /// Node ids in lexicographic order.
    pub fn node_ids(&self) -> impl Iterator<Item = &str> {
        self.index.keys().map(|s| s.as_str())
    }

    /// Stored weight of the unordered pair, 0.0 if absent.
    pub fn weight(&self, u: &str, v: &str) -> f64 {
        match (self.index.get(u), self.index.get(v)) {
            (Some(&iu), Some(&iv)) => self.weight_by_index(iu, iv),
            _ => 0.0,
        }
    }

    pub(crate) fn weight_by_index(&self, iu: usize, iv: usize) -> f64 {
        let key = (iu.min(iv), iu.max(iv));
        self.edges.get(&key).copied().unwrap_or(0.0)
    }

    /// Edges sorted by (src, dst) name, self-loops included.
    pub fn edges(&self) -> Vec<(&str, &str, f64)> {
        let mut out: Vec<(&str, &str, f64)> = self
            .edges
            .iter()
            .map(|(&(iu, iv), &w)| {
                let (a, b) = (self.names[iu].as_str(), self.names[iv].as_str());
                if a <= b {
                    (a, b, w)
                } else {
                    (b, a, w)
                }
            })
            .collect();
        out.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));
        out
    }

    /// Distinct non-loop neighbors, as indices in ascending order.
    pub(crate) fn neighbor_indices(&self, idx: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(iu, iv) in self.edges.keys() {
            if iu == iv {
                continue;
            }
            if iu == idx {
                out.push(iv);
            } else if iv == idx {
                out.push(iu);
            }
        }
        out.sort_unstable();
        out
    }

    /// Distinct non-loop neighbor ids of `id`.
    pub fn neighbors(&self, id: &str) -> Result<Vec<&str>> {
        let idx = self
            .index_of(id)
            .ok_or_else(|| Error::data(format!("unknown node id: {id}")))?;
        Ok(self
            .neighbor_indices(idx)
            .into_iter()
            .map(|i| self.names[i].as_str())
            .collect())
    }

    /// Count of distinct non-loop neighbors.
    pub fn degree(&self, id: &str) -> Result<usize> {
        Ok(self.neighbors(id)?.len())
    }

    /// Self-loop weight at `id`, 0.0 if none.
    pub fn self_loop_weight(&self, id: &str) -> f64 {
        self.weight(id, id)
    }

    /// Sum of all stored weights, self-loops included once.
    pub fn total_weight(&self) -> f64 {
        self.edges.values().sum()
    }

    /// Sum of self-loop weights only.
    pub fn total_self_loop_weight(&self) -> f64 {
        self.edges
            .iter()
            .filter(|(&(u, v), _)| u == v)
            .map(|(_, &w)| w)
            .sum()
    }

    /// Connected components of the non-loop skeleton, each sorted, largest
    /// first, ties by first member. Isolated nodes form their own components.
    pub fn components(&self) -> Vec<Vec<String>> {
        let n = self.names.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in self.edges.keys() {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(self.names[u].clone());
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort();
            comps.push(comp);
        }
        comps.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a[0].cmp(&b[0])));
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced on `keep`: nodes in `keep` plus all edges (and
    /// self-loops) whose endpoints both survive.
    pub fn induced_subgraph(&self, keep: &[String]) -> WeightedGraph {
        let mut g = WeightedGraph::new();
        for id in keep {
            if self.contains(id) {
                g.add_node(id);
            }
        }
        for (a, b, w) in self.edges() {
            if g.contains(a) && g.contains(b) {
                g.add_edge_weight(a, b, w).expect("positive weight");
            }
        }
        g
    }
}

/// Write the graph as a `src,dst,weight` CSV, rows sorted by (src, dst).
pub fn write_edge_csv(g: &WeightedGraph, path: &Path) -> Result<()> {
    let mut wtr = csv::Writer::from_path(path)
        .map_err(|e| Error::data(format!("cannot write {}: {e}", path.display())))?;
    wtr.write_record(["src", "dst", "weight"])
        .map_err(|e| Error::data(format!("csv write failed: {e}")))?;
    for (a, b, w) in g.edges() {
        wtr.write_record([a, b, &format!("{w}")])
            .map_err(|e| Error::data(format!("csv write failed: {e}")))?;
    }
    wtr.flush()
        .map_err(|e| Error::io(path.display().to_string(), e))?;
    Ok(())
}

/// Read a `src,dst,weight` CSV; duplicate rows accumulate weight.
pub fn read_edge_csv(path: &Path) -> Result<WeightedGraph> {
    let mut rdr = csv::Reader::from_path(path)
        .map_err(|e| Error::data(format!("cannot read {}: {e}", path.display())))?;
    {
        let headers = rdr
            .headers()
            .map_err(|e| Error::data(format!("{}: {e}", path.display())))?;
        let expect = ["src", "dst", "weight"];
        if headers.len() != 3 || headers.iter().zip(expect).any(|(h, e)| h != e) {
            return Err(Error::data(format!(
                "{}: expected header src,dst,weight, got {:?}",
                path.display(),
                headers
            )));
        }
    }
    let mut g = WeightedGraph::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| Error::data(format!("{} row {}: {e}", path.display(), i + 2)))?;
        if rec.len() != 3 {
            return Err(Error::data(format!(
                "{} row {}: expected 3 fields, got {}",
                path.display(),
                i + 2,
                rec.len()
            )));
        }
        let w: f64 = rec[2].parse().map_err(|_| {
            Error::data(format!(
                "{} row {}: bad weight {:?}",
                path.display(),
                i + 2,
                &rec[2]
            ))
        })?;
        g.add_edge_weight(&rec[0], &rec[1], w)?;
    }
    Ok(g)
}
