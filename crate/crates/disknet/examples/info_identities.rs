//! Discrete information measures on small joints: entropy, mutual
//! information, the chain rule, and the XOR interaction-information sign.
//!
//! Run: cargo run -p disknet --example info_identities

use disknet::infotheory::{
    conditional_entropy, conditional_mutual_information, interaction_information,
    mutual_information, JointDistribution, LogBase,
};

fn main() {
    let coin = JointDistribution::new(
        vec!["X".to_string(), "Y".to_string()],
        vec![2, 2],
        vec![0.25, 0.25, 0.25, 0.25],
    )
    .unwrap();
    println!("independent fair coins:");
    println!("  H(X,Y) = {} bits", coin.entropy(LogBase::Two));
    println!("  I(X;Y) = {} bits", mutual_information(&coin, LogBase::Two).unwrap());

    let copied = JointDistribution::new(
        vec!["X".to_string(), "Y".to_string()],
        vec![2, 2],
        vec![0.5, 0.0, 0.0, 0.5],
    )
    .unwrap();
    println!("\nperfectly copied bit:");
    println!("  I(X;Y) = {} bits", mutual_information(&copied, LogBase::Two).unwrap());
    println!(
        "  H(X|Y) = {} bits",
        conditional_entropy(&copied, "X", "Y", LogBase::Two).unwrap()
    );

    // Z = X xor Y wipes out every pairwise dependence but not the triple one.
    let mut probs = vec![0.0; 8];
    for x in 0..2usize {
        for y in 0..2usize {
            probs[(x * 2 + y) * 2 + (x ^ y)] = 0.25;
        }
    }
    let xor = JointDistribution::new(
        vec!["X".to_string(), "Y".to_string(), "Z".to_string()],
        vec![2, 2, 2],
        probs,
    )
    .unwrap();
    println!("\nxor triple:");
    println!(
        "  I(X;Y)   = {} bits",
        mutual_information(&xor.marginal(&["X", "Y"]).unwrap(), LogBase::Two).unwrap()
    );
    println!(
        "  I(X;Y|Z) = {} bits",
        conditional_mutual_information(&xor, "X", "Y", "Z", LogBase::Two).unwrap()
    );
    println!(
        "  interaction information = {} bits",
        interaction_information(&xor, LogBase::Two).unwrap()
    );

    println!("\nmixing a copied bit into noise (lambda from 0 to 1):");
    for step in [0, 5, 10, 15, 20] {
        let lambda = step as f64 / 20.0;
        let off = (1.0 - lambda) / 4.0;
        let j = JointDistribution::new(
            vec!["X".to_string(), "Y".to_string()],
            vec![2, 2],
            vec![off + lambda / 2.0, off, off, off + lambda / 2.0],
        )
        .unwrap();
        println!(
            "  lambda {lambda:.2}: I = {:.4}, H(X,Y) = {:.4}",
            mutual_information(&j, LogBase::Two).unwrap(),
            j.entropy(LogBase::Two)
        );
    }
}
