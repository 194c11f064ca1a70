//! Embed a 13-node balanced tree and read the hierarchy off the radii:
//! the root should land near the center, the leaves near the rim.
//!
//! Run: cargo run -p disknet --example embed_tree

use disknet::embedding::{train, TrainConfig};
use disknet::networks::{generate_reference_graph, ReferenceKind};

fn main() {
    let tree = generate_reference_graph(ReferenceKind::Tree {
        branching: 3,
        levels: 3,
    })
    .unwrap();
    println!(
        "tree(3,3): {} nodes, {} edges",
        tree.node_count(),
        tree.edge_count()
    );

    let mut config = TrainConfig::with_seed(5);
    config.negatives = 10;
    let model = train(&tree, &config).unwrap();
    println!(
        "best validation loss {:.4} at epoch {}\n",
        model.best_validation_loss, model.epoch_of_best
    );

    let mut by_radius: Vec<(f64, &str)> = model
        .positions()
        .map(|(id, p)| (p.to_polar().0, id))
        .collect();
    by_radius.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    println!("radius   node   (n00 is the root, n01-n03 its children)");
    for (r, id) in by_radius {
        println!("{r:.4}   {id}");
    }
}
