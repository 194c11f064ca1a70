//! Embed weighted networks into the 2-D hyperbolic (Poincaré) disk and measure
//! how centralized and how diverse the embedded system is.
//!
//! The crate is organized around a small pipeline:
//!
//! * [`networks`] builds weighted graphs from publication-style records
//!   (coauthorship, institution aggregation, code co-occurrence), provides
//!   synthetic reference graphs, and computes graph-level measures
//!   (weighted clustering, betweenness).
//! * [`geometry`] has the Poincaré disk primitives: distance, polar views,
//!   a hyperbolic inner product, and the projection that keeps points inside
//!   the disk.
//! * [`embedding`] trains disk embeddings with Riemannian SGD over a
//!   softmax negative-sampling objective, with deterministic seeding and
//!   JSON checkpoints.
//! * [`metrics`] turns embeddings into interpretable summaries: KDE peak
//!   angles, representative nodes, radial hierarchy summaries, angular and
//!   token entropies, pairwise distance matrices.
//! * [`stats`] has the small statistical toolbox used downstream: OLS slopes
//!   with p-values, Pearson correlation, binned means, and lagged-regression
//!   direction tallies.
//! * [`infotheory`] has dense joint distributions and the standard entropy
//!   identities (mutual information, conditional entropy, interaction
//!   information).
//! * [`pipeline`] wires everything into the `disknet` binary: `synth`,
//!   `build-net`, `embed`, `metrics`, `analyze`, `info-demo`, `report`.
//!
//! Each capability has a runnable example under `examples/`; start with
//! `cargo run --example embed_tree`.

pub mod embedding;
pub mod error;
pub mod geometry;
pub mod infotheory;
pub mod metrics;
pub mod networks;
pub mod pipeline;
pub mod rng;
pub mod stats;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
