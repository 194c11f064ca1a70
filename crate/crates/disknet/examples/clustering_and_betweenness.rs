//! Weighted clustering and betweenness on small graphs, plus the effect of
//! hierarchy-increasing rewires on the betweenness spread.
//!
//! Run: cargo run -p disknet --example clustering_and_betweenness

use disknet::networks::{
    betweenness_centrality, betweenness_std, generate_reference_graph, rewire_increase_hierarchy,
    weighted_clustering, ReferenceKind, WeightedGraph,
};
use disknet::rng::substream;

fn main() {
    let mut g = WeightedGraph::new();
    g.add_edge_weight("a", "b", 2.0).unwrap();
    g.add_edge_weight("b", "c", 2.0).unwrap();
    g.add_edge_weight("a", "c", 2.0).unwrap();
    g.add_edge_weight("c", "d", 1.0).unwrap();
    println!("clustering (uniform triangle corner scores 0.5):");
    for id in ["a", "b", "c", "d"] {
        println!("  {id}: {:.4}", weighted_clustering(&g, id).unwrap());
    }

    println!("\nbetweenness (d reaches the triangle through c):");
    for (id, b) in betweenness_centrality(&g).unwrap() {
        println!("  {id}: {b}");
    }

    let ring = generate_reference_graph(ReferenceKind::RingLattice { n: 30, k: 4 }).unwrap();
    let before = betweenness_std(&ring).unwrap();
    let rewired = rewire_increase_hierarchy(&ring, 200, &mut substream(1, "rewire")).unwrap();
    let after = betweenness_std(&rewired).unwrap();
    println!("\nring(30,4) betweenness std: {before:.2} -> {after:.2} after 200 rewire attempts");
}
