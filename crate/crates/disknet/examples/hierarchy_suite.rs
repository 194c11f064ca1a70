//! Compare radius spreads across the three reference topologies. Trees are
//! strongly hierarchical, ring lattices flat, rewired lattices in between.
//!
//! Run: cargo run -p disknet --example hierarchy_suite

use disknet::embedding::{train, EmbeddingModel, TrainConfig};
use disknet::networks::{generate_reference_graph, rewire_increase_hierarchy, ReferenceKind};
use disknet::rng::substream;

fn radius_std(model: &EmbeddingModel) -> f64 {
    let radii: Vec<f64> = model.positions().map(|(_, p)| p.to_polar().0).collect();
    let mean = radii.iter().sum::<f64>() / radii.len() as f64;
    (radii.iter().map(|r| (r - mean) * (r - mean)).sum::<f64>() / radii.len() as f64).sqrt()
}

fn main() {
    let tree = generate_reference_graph(ReferenceKind::Tree {
        branching: 3,
        levels: 3,
    })
    .unwrap();
    let ring = generate_reference_graph(ReferenceKind::RingLattice { n: 20, k: 4 }).unwrap();
    let rewired = rewire_increase_hierarchy(&ring, 200, &mut substream(0, "rewire")).unwrap();

    println!("seed   tree     rewired  ring");
    for seed in 0..3 {
        let mut config = TrainConfig::with_seed(seed);
        config.negatives = 10;
        let t = radius_std(&train(&tree, &config).unwrap());
        let w = radius_std(&train(&rewired, &config).unwrap());
        let r = radius_std(&train(&ring, &config).unwrap());
        println!("{seed}      {t:.4}   {w:.4}   {r:.4}");
    }
    println!("\nexpected ordering: tree > rewired > ring");
}
