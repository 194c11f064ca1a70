//! Publication-style records and the graphs built from them.

use super::WeightedGraph;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::io::BufRead;
use std::path::Path;

/// One author slot on a record, with an optional institution label.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Authorship {
    pub author: String,
    #[serde(default)]
    pub institution: Option<String>,
}

/// One publication-style record as stored in JSON Lines input.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PublicationRecord {
    pub id: String,
    pub year: i32,
    #[serde(default)]
    pub authors: Vec<Authorship>,
    #[serde(default)]
    pub codes: Vec<String>,
    #[serde(default, rename = "abstract")]
    pub abstract_text: String,
}

/// Read one JSON record per line; blank lines are skipped.
pub fn read_records_jsonl(path: &Path) -> Result<Vec<PublicationRecord>> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let mut out = Vec::new();
    for (i, line) in std::io::BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path.display().to_string(), e))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: PublicationRecord = serde_json::from_str(&line).map_err(|e| {
            Error::data(format!("{} line {}: bad record: {e}", path.display(), i + 1))
        })?;
        out.push(rec);
    }
    Ok(out)
}

/// Coauthorship graph for one year: every unordered author pair on a record
/// gains weight 1. Duplicate author entries on a record count once; solo
/// authors still become nodes.
pub fn build_coauthor_graph(records: &[PublicationRecord], year: i32) -> WeightedGraph {
    let mut g = WeightedGraph::new();
    for rec in records.iter().filter(|r| r.year == year) {
        let authors: BTreeSet<&str> = rec.authors.iter().map(|a| a.author.as_str()).collect();
        for a in &authors {
            g.add_node(a);
        }
        let list: Vec<&str> = authors.into_iter().collect();
        for i in 0..list.len() {
            for j in (i + 1)..list.len() {
                g.add_edge_weight(list[i], list[j], 1.0)
                    .expect("unit weight");
            }
        }
    }
    g
}

/// Author → institution map for one year, taking the first institution seen
/// per author in record order. Authors never seen with an institution are
/// absent from the map.
pub fn affiliation_map(records: &[PublicationRecord], year: i32) -> BTreeMap<String, String> {
    let mut map = BTreeMap::new();
    for rec in records.iter().filter(|r| r.year == year) {
        for slot in &rec.authors {
            if let Some(inst) = &slot.institution {
                map.entry(slot.author.clone()).or_insert_with(|| inst.clone());
            }
        }
    }
    map
}

/// Collapse an author-level graph to institutions.
///
/// Edges between same-institution authors become self-loops, so total weight
/// is conserved: inter-institution weight plus self-loop weight equals the
/// author-level total.
pub fn aggregate_to_institutions(
    g: &WeightedGraph,
    affiliation: &BTreeMap<String, String>,
) -> Result<WeightedGraph> {
    let mut out = WeightedGraph::new();
    for id in g.node_ids() {
        let inst = affiliation
            .get(id)
            .ok_or_else(|| Error::data(format!("author {id} has no institution")))?;
        out.add_node(inst);
    }
    for (a, b, w) in g.edges() {
        let ia = &affiliation[a];
        let ib = &affiliation[b];
        out.add_edge_weight(ia, ib, w)?;
    }
    Ok(out)
}

/// Code co-occurrence graph pooled over all years: every unordered pair of
/// distinct codes on a record gains weight 1. Records with a single code
/// still add that code as a node.
pub fn build_cooccurrence_graph(records: &[PublicationRecord]) -> WeightedGraph {
    let mut g = WeightedGraph::new();
    for rec in records {
        let codes: BTreeSet<&str> = rec.codes.iter().map(|c| c.as_str()).collect();
        for c in &codes {
            g.add_node(c);
        }
        let list: Vec<&str> = codes.into_iter().collect();
        for i in 0..list.len() {
            for j in (i + 1)..list.len() {
                g.add_edge_weight(list[i], list[j], 1.0)
                    .expect("unit weight");
            }
        }
    }
    g
}

/// Papers-per-code tallies for each institution in one year.
///
/// A record contributes 1 to (institution, code) for every distinct code it
/// lists and every distinct institution among its authors, resolved through
/// `affiliation`. Unaffiliated authors are an error, matching the
/// institution aggregation.
pub fn institution_code_weights(
    records: &[PublicationRecord],
    year: i32,
    affiliation: &BTreeMap<String, String>,
) -> Result<BTreeMap<String, BTreeMap<String, f64>>> {
    let mut out: BTreeMap<String, BTreeMap<String, f64>> = BTreeMap::new();
    for rec in records.iter().filter(|r| r.year == year) {
        let mut insts = BTreeSet::new();
        for slot in &rec.authors {
            let inst = affiliation.get(&slot.author).ok_or_else(|| {
                Error::data(format!("author {} has no institution", slot.author))
            })?;
            insts.insert(inst.as_str());
        }
        let codes: BTreeSet<&str> = rec.codes.iter().map(|c| c.as_str()).collect();
        for inst in insts {
            let per_inst = out.entry(inst.to_string()).or_default();
            for code in &codes {
                *per_inst.entry(code.to_string()).or_insert(0.0) += 1.0;
            }
        }
    }
    Ok(out)
}

/// Pick the institutions to track across a span of yearly graphs: rank by
/// total incident edge weight summed over all years (self-loops counted
/// once), keep the top `k`, then drop any that are absent from some year.
/// Ties in total weight break lexicographically.
pub fn select_top_institutions(yearly: &[WeightedGraph], k: usize) -> Vec<String> {
    let mut strength: BTreeMap<String, f64> = BTreeMap::new();
    for g in yearly {
        for (a, b, w) in g.edges() {
            *strength.entry(a.to_string()).or_insert(0.0) += w;
            if a != b {
                *strength.entry(b.to_string()).or_insert(0.0) += w;
            }
        }
        for id in g.node_ids() {
            strength.entry(id.to_string()).or_insert(0.0);
        }
    }
    let mut ranked: Vec<(String, f64)> = strength.into_iter().collect();
    ranked.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then_with(|| a.0.cmp(&b.0)));
    ranked
        .into_iter()
        .take(k)
        .map(|(id, _)| id)
        .filter(|id| yearly.iter().all(|g| g.contains(id)))
        .collect()
}
