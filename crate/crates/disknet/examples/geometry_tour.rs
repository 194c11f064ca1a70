//! A quick tour of the disk primitives: distances, polar form, the
//! hyperbolic inner product, and projection back inside the boundary.
//!
//! Run: cargo run -p disknet --example geometry_tour

use disknet::geometry::{
    angular_separation, hyperbolic_inner_product, poincare_distance, project_into_disk,
    HyperbolicPoint,
};
use std::f64::consts::PI;

fn main() {
    let origin = HyperbolicPoint::origin();
    for r in [0.1, 0.5, 0.9, 0.99] {
        let p = HyperbolicPoint::from_polar(r, 0.0).unwrap();
        println!(
            "d(0, r={r:4}) = {:8.4}   (2 atanh r = {:8.4})",
            poincare_distance(&origin, &p),
            2.0 * r.atanh()
        );
    }

    // Same Euclidean gap, very different geodesic cost near the rim.
    let inner = (
        HyperbolicPoint::new(0.0, 0.0).unwrap(),
        HyperbolicPoint::new(0.1, 0.0).unwrap(),
    );
    let outer = (
        HyperbolicPoint::new(0.85, 0.0).unwrap(),
        HyperbolicPoint::new(0.95, 0.0).unwrap(),
    );
    println!(
        "\ncenter gap 0.1 -> d = {:.4}; rim gap 0.1 -> d = {:.4}",
        poincare_distance(&inner.0, &inner.1),
        poincare_distance(&outer.0, &outer.1)
    );

    let x = HyperbolicPoint::from_polar(0.5, 0.0).unwrap();
    for (label, theta) in [("aligned", 0.0), ("orthogonal", PI / 2.0), ("opposed", PI)] {
        let y = HyperbolicPoint::from_polar(0.5, theta).unwrap();
        println!(
            "inner product, {label:>10}: {:+.5}",
            hyperbolic_inner_product(&x, &y)
        );
    }

    let runaway = [3.0, 4.0];
    let pulled = project_into_disk(runaway, 1e-5).unwrap();
    let (r, theta) = pulled.to_polar();
    println!("\nprojected (3, 4) -> r = {r:.6}, theta = {theta:.4}");
    println!(
        "angular separation of 0.1 and 6.2: {:.4}",
        angular_separation(0.1, 6.2)
    );
}
