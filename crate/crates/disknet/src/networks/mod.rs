//! Weighted undirected graphs and how to build them.
//!
//! Graphs come from three places: publication-style records (coauthorship,
//! institution aggregation, code co-occurrence), synthetic reference
//! generators (trees, ring lattices, hierarchy-increasing rewires), and edge
//! CSV files on disk. Graph-level measures (weighted clustering, betweenness)
//! live here too.

mod graph;
mod measures;
mod records;
mod synth;

pub use graph::{read_edge_csv, write_edge_csv, WeightedGraph};
pub use measures::{betweenness_centrality, betweenness_std, weighted_clustering};
pub use records::{
    affiliation_map, aggregate_to_institutions, build_coauthor_graph, build_cooccurrence_graph,
    institution_code_weights, read_records_jsonl, select_top_institutions, Authorship,
    PublicationRecord,
};
pub use synth::{generate_reference_graph, rewire_increase_hierarchy, ReferenceKind};
