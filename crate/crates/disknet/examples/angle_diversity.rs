//! Angular summaries of a weighted code profile: KDE peak angle,
//! representative node, and angular entropy.
//!
//! Run: cargo run -p disknet --example angle_diversity

use disknet::embedding::{EmbeddingModel, TrainConfig};
use disknet::geometry::HyperbolicPoint;
use disknet::metrics::{angular_entropy, kde_peak_angle, representative_node};
use std::collections::BTreeMap;

fn main() {
    // Six codes on the disk: a tight cluster near theta = 1 and two outliers.
    let layout = [
        ("03.65", 0.6, 0.95),
        ("03.75", 0.5, 1.00),
        ("05.30", 0.7, 1.10),
        ("42.50", 0.8, 3.60),
        ("42.65", 0.8, 3.80),
        ("71.10", 0.9, 5.50),
    ];
    let positions: BTreeMap<String, HyperbolicPoint> = layout
        .iter()
        .map(|(id, r, theta)| (id.to_string(), HyperbolicPoint::from_polar(*r, *theta).unwrap()))
        .collect();
    let model = EmbeddingModel::from_positions(TrainConfig::with_seed(0), positions).unwrap();

    // Publication counts per code play the role of weights.
    let weights: BTreeMap<String, f64> = [
        ("03.65", 9.0),
        ("03.75", 6.0),
        ("05.30", 5.0),
        ("42.50", 2.0),
        ("42.65", 1.0),
        ("71.10", 1.0),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();

    let angles: Vec<f64> = layout.iter().map(|(_, _, theta)| *theta).collect();
    let w: Vec<f64> = layout.iter().map(|(id, _, _)| weights[*id]).collect();

    let peak = kde_peak_angle(&angles, &w, None).unwrap();
    println!("kde peak angle: {peak:.4} (cluster sits near 1.0)");

    let rep = representative_node(&weights, &model).unwrap();
    println!("representative code: {rep}");

    for bins in [4, 12, 36] {
        println!(
            "angular entropy, {bins:>2} bins: {:.4}",
            angular_entropy(&angles, &w, bins).unwrap()
        );
    }

    let uniform_w = vec![1.0; angles.len()];
    println!(
        "unweighted entropy, 12 bins: {:.4}",
        angular_entropy(&angles, &uniform_w, 12).unwrap()
    );
}
