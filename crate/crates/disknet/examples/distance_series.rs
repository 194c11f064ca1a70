//! Per-pair slope extraction from yearly distance series, then how tightly
//! the social and semantic slopes track each other when the motion is shared.
//!
//! Run: cargo run -p disknet --example distance_series

use disknet::rng::substream;
use disknet::stats::{bin_means, ols_slope, pearson};
use rand::Rng;

fn main() {
    let mut rng = substream(9, "distance-series");
    let years: Vec<f64> = (0..10).map(|t| t as f64).collect();

    let mut beta_social = Vec::new();
    let mut beta_semantic = Vec::new();
    for _ in 0..200 {
        let shared = rng.random_range(-0.4..0.4);
        let noisy = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<f64> {
            years
                .iter()
                .map(|t| 2.0 + shared * t + 0.05 * (rng.random::<f64>() - 0.5))
                .collect()
        };
        let social = noisy(&mut rng);
        let semantic = noisy(&mut rng);
        beta_social.push(ols_slope(&years, &social).unwrap().0);
        beta_semantic.push(ols_slope(&years, &semantic).unwrap().0);
    }

    let (r, p) = pearson(&beta_social, &beta_semantic).unwrap();
    println!("slope correlation over 200 pairs: r = {r:.4}, p = {p:.2e}");

    println!("\nsemantic slope binned by social slope:");
    for (center, mean, count) in bin_means(&beta_social, &beta_semantic, 6).unwrap() {
        println!("  bin {center:+.3}: mean {mean:+.3} ({count} pairs)");
    }
}
