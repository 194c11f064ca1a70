//! Normalized token entropy over a tiny abstract corpus: stopword and
//! rare-token filtering, and invariance under corpus duplication.
//!
//! Run: cargo run -p disknet --example token_entropy

use std::collections::BTreeSet;

use disknet::metrics::{default_stopwords, normalized_token_entropy};

fn main() {
    let corpus = [
        "the dynamics of citation networks and the growth of fields",
        "citation networks shape the growth of research fields",
        "hyperbolic embeddings of citation networks reveal hierarchy",
        "hierarchy and growth in collaboration networks",
    ];

    let stopwords = default_stopwords();
    let none = BTreeSet::new();
    println!("corpus of {} abstracts", corpus.len());
    println!(
        "  entropy with stopwords removed: {:.4}",
        normalized_token_entropy(&corpus, &stopwords)
    );
    println!(
        "  entropy keeping every token:    {:.4}",
        normalized_token_entropy(&corpus, &none)
    );

    // Tokens seen only once in the whole corpus never enter the distribution,
    // so a one-off typo cannot move the measure.
    let with_typo = [
        corpus[0],
        corpus[1],
        corpus[2],
        "hierarchy and growth in collaboration networks xqzzyv",
    ];
    println!(
        "  entropy after a one-off typo:   {:.4}",
        normalized_token_entropy(&with_typo, &stopwords)
    );

    println!("\nextremes:");
    println!(
        "  two tokens, even split (\"a a b b\"): {}",
        normalized_token_entropy(&["a a b b"], &none)
    );
    println!(
        "  single repeated token: {}",
        normalized_token_entropy(&["same same same"], &none)
    );

    // The first doubling can promote one-off tokens past the rare-token
    // filter; after that the shares are fixed and duplication is a no-op.
    let doubled: Vec<&str> = corpus.iter().chain(corpus.iter()).copied().collect();
    let quadrupled: Vec<&str> = doubled.iter().chain(doubled.iter()).copied().collect();
    println!("\nduplication invariance (x2 and x4 agree exactly):");
    println!("  x1: {:.6}", normalized_token_entropy(&corpus, &stopwords));
    println!("  x2: {:.6}", normalized_token_entropy(&doubled, &stopwords));
    println!("  x4: {:.6}", normalized_token_entropy(&quadrupled, &stopwords));
}
