//! Disk embeddings trained with Riemannian SGD.
//!
//! The objective is softmax negative sampling: each positive pair (u, v)
//! competes against k sampled non-neighbors of u,
//!
//! ```text
//! L = -log( exp(-d(u, v)) / sum_{v' in {v} + negatives} exp(-d(u, v')) )
//! ```
//!
//! Euclidean gradients are rescaled by the conformal factor
//! ((1 - |θ|²)² / 4) before each update, and every update is projected back
//! into the open disk. Training is deterministic: all randomness comes from
//! named substreams of the single run seed.

use crate::geometry::{poincare_distance, project_into_disk, HyperbolicPoint};
use crate::networks::WeightedGraph;
use crate::rng::substream;
use crate::{Error, Result};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

const OBJECTIVE: &str = "softmax-negative-sampling";

/// Hyperparameters for [`train`]. The seed is mandatory; everything else has
/// defaults matching the reference setup.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    pub learning_rate: f64,
    pub negatives: usize,
    pub batch_size: usize,
    pub epochs: usize,
    pub burnin_epochs: usize,
    pub burnin_lr_factor: f64,
    pub eval_every: usize,
    pub epsilon: f64,
    pub symmetrize: bool,
    pub validation_fraction: f64,
    pub seed: u64,
}

impl TrainConfig {
    /// Reference defaults: lr 0.5, 50 negatives, batch 30, 300 epochs with
    /// 20 burn-in epochs at a tenth of the rate, evaluation every 5 epochs,
    /// epsilon 1e-5, symmetrized pairs, 5% validation holdout.
    pub fn with_seed(seed: u64) -> Self {
        TrainConfig {
            learning_rate: 0.5,
            negatives: 50,
            batch_size: 30,
            epochs: 300,
            burnin_epochs: 20,
            burnin_lr_factor: 0.1,
            eval_every: 5,
            epsilon: 1e-5,
            symmetrize: true,
            validation_fraction: 0.05,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.learning_rate.is_finite() && self.learning_rate > 0.0) {
            return Err(Error::data(format!(
                "learning rate must be positive, got {}",
                self.learning_rate
            )));
        }
        if self.epochs == 0 {
            return Err(Error::data("epochs must be >= 1".to_string()));
        }
        if self.burnin_epochs >= self.epochs {
            return Err(Error::data(format!(
                "burn-in epochs ({}) must be fewer than total epochs ({})",
                self.burnin_epochs, self.epochs
            )));
        }
        if !(self.burnin_lr_factor.is_finite() && self.burnin_lr_factor > 0.0) {
            return Err(Error::data(format!(
                "burn-in lr factor must be positive, got {}",
                self.burnin_lr_factor
            )));
        }
        if self.eval_every == 0 {
            return Err(Error::data("eval_every must be >= 1".to_string()));
        }
        if self.batch_size == 0 {
            return Err(Error::data("batch size must be >= 1".to_string()));
        }
        if self.negatives == 0 {
            return Err(Error::data("negative sample count must be >= 1".to_string()));
        }
        if !(self.epsilon > 0.0 && self.epsilon < 0.5) {
            return Err(Error::data(format!(
                "epsilon must lie in (0, 0.5), got {}",
                self.epsilon
            )));
        }
        if !(0.0..1.0).contains(&self.validation_fraction) {
            return Err(Error::data(format!(
                "validation fraction must lie in [0, 1), got {}",
                self.validation_fraction
            )));
        }
        Ok(())
    }
}

/// A trained embedding: one disk position per graph node.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingModel {
    pub config: TrainConfig,
    pub best_validation_loss: f64,
    pub epoch_of_best: usize,
    positions: BTreeMap<String, HyperbolicPoint>,
}

impl EmbeddingModel {
    /// Wrap externally computed positions (checkpoint bookkeeping zeroed).
    pub fn from_positions(
        config: TrainConfig,
        positions: BTreeMap<String, HyperbolicPoint>,
    ) -> Result<Self> {
        config.validate()?;
        for (id, p) in &positions {
            if p.norm() > 1.0 - config.epsilon {
                return Err(Error::data(format!(
                    "position for {id} lies outside the working disk radius {}",
                    1.0 - config.epsilon
                )));
            }
        }
        Ok(EmbeddingModel {
            config,
            best_validation_loss: 0.0,
            epoch_of_best: 0,
            positions,
        })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.positions.keys().map(|s| s.as_str())
    }

    pub fn position(&self, id: &str) -> Option<&HyperbolicPoint> {
        self.positions.get(id)
    }

    pub fn positions(&self) -> impl Iterator<Item = (&str, &HyperbolicPoint)> {
        self.positions.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Geodesic distance between two embedded nodes.
    pub fn distance(&self, a: &str, b: &str) -> Result<f64> {
        let pa = self
            .position(a)
            .ok_or_else(|| Error::data(format!("id not in embedding: {a}")))?;
        let pb = self
            .position(b)
            .ok_or_else(|| Error::data(format!("id not in embedding: {b}")))?;
        Ok(poincare_distance(pa, pb))
    }

    /// Serialize to the checkpoint JSON format. The output is a pure
    /// function of the model, so identical models give identical bytes.
    pub fn to_json(&self) -> String {
        let file = CheckpointFile {
            objective: OBJECTIVE.to_string(),
            config: self.config.clone(),
            seed: self.config.seed,
            positions: self
                .positions
                .iter()
                .map(|(k, p)| (k.clone(), p.coords()))
                .collect(),
            best_validation_loss: self.best_validation_loss,
            epoch_of_best: self.epoch_of_best,
        };
        serde_json::to_string_pretty(&file).expect("checkpoint serialization") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: CheckpointFile =
            serde_json::from_str(text).map_err(|e| Error::data(format!("bad checkpoint: {e}")))?;
        if file.objective != OBJECTIVE {
            return Err(Error::data(format!(
                "checkpoint objective {} not supported (expected {OBJECTIVE})",
                file.objective
            )));
        }
        let mut positions = BTreeMap::new();
        for (id, [x, y]) in file.positions {
            positions.insert(id, HyperbolicPoint::new(x, y)?);
        }
        Ok(EmbeddingModel {
            config: file.config,
            best_validation_loss: file.best_validation_loss,
            epoch_of_best: file.epoch_of_best,
            positions,
        })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()).map_err(|e| Error::io(path.display().to_string(), e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
        Self::from_json(&text)
    }
}

#[derive(Serialize, Deserialize)]
struct CheckpointFile {
    objective: String,
    config: TrainConfig,
    seed: u64,
    positions: BTreeMap<String, [f64; 2]>,
    best_validation_loss: f64,
    epoch_of_best: usize,
}

/// Loss curve and checkpoint evaluations recorded during training.
#[derive(Debug, Clone)]
pub struct TrainTrace {
    /// Mean loss over all training pairs after each epoch, under a fixed
    /// negative draw, so the curve is comparable across epochs.
    pub epoch_losses: Vec<f64>,
    /// (epoch, validation loss) at each evaluation point.
    pub evaluations: Vec<(usize, f64)>,
}

/// Rescale a Euclidean gradient by the disk's conformal factor at `at`:
/// ((1 − ‖at‖²)² / 4) · grad.
pub fn riemannian_scale(grad: [f64; 2], at: &HyperbolicPoint) -> [f64; 2] {
    let n2 = at.x() * at.x() + at.y() * at.y();
    let s = (1.0 - n2) * (1.0 - n2) / 4.0;
    [grad[0] * s, grad[1] * s]
}

/// Softmax negative-sampling loss for one (source, target) pair.
///
/// With an empty negative list the softmax has a single entry and the loss
/// is exactly 0.
pub fn pair_loss(
    model: &EmbeddingModel,
    source: &str,
    target: &str,
    negatives: &[String],
) -> Result<f64> {
    if negatives.iter().any(|n| n == target) {
        return Err(Error::data(format!(
            "target {target} may not appear among the negatives"
        )));
    }
    let u = model
        .position(source)
        .ok_or_else(|| Error::data(format!("id not in embedding: {source}")))?;
    let v = model
        .position(target)
        .ok_or_else(|| Error::data(format!("id not in embedding: {target}")))?;
    let mut scores = Vec::with_capacity(negatives.len() + 1);
    scores.push(-poincare_distance(u, v));
    for id in negatives {
        let p = model
            .position(id)
            .ok_or_else(|| Error::data(format!("id not in embedding: {id}")))?;
        scores.push(-poincare_distance(u, p));
    }
    Ok(softmax_loss(&scores))
}

/// [`pair_loss`] plus its Euclidean gradient accumulated per node id.
/// Repeated negatives contribute once per occurrence. Pass the result
/// through [`riemannian_scale`] before taking a descent step.
pub fn pair_loss_gradients(
    model: &EmbeddingModel,
    source: &str,
    target: &str,
    negatives: &[String],
) -> Result<(f64, BTreeMap<String, [f64; 2]>)> {
    if negatives.iter().any(|n| n == target) {
        return Err(Error::data(format!(
            "target {target} may not appear among the negatives"
        )));
    }
    let mut names: Vec<&str> = Vec::with_capacity(negatives.len() + 2);
    names.push(source);
    names.push(target);
    names.extend(negatives.iter().map(|s| s.as_str()));
    let mut points = Vec::with_capacity(names.len());
    for id in &names {
        let p = model
            .position(id)
            .ok_or_else(|| Error::data(format!("id not in embedding: {id}")))?;
        points.push(p.coords());
    }
    let candidates: Vec<usize> = (1..names.len()).collect();
    let (loss, grads) = sample_gradients(&points, 0, &candidates);
    let mut by_id: BTreeMap<String, [f64; 2]> = BTreeMap::new();
    for (idx, g) in grads {
        let entry = by_id.entry(names[idx].to_string()).or_insert([0.0, 0.0]);
        entry[0] += g[0];
        entry[1] += g[1];
    }
    Ok((loss, by_id))
}

/// −log softmax of scores[0], computed against max with log1p so that tiny
/// losses keep their leading digits.
fn softmax_loss(scores: &[f64]) -> f64 {
    let mut imax = 0;
    for (i, s) in scores.iter().enumerate() {
        if *s > scores[imax] {
            imax = i;
        }
    }
    let m = scores[imax];
    let rest: f64 = scores
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != imax)
        .map(|(_, s)| (s - m).exp())
        .sum();
    rest.ln_1p() + (m - scores[0])
}

/// Draw k negatives for `source`: uniform over nodes that are neither the
/// source nor its neighbors, without replacement while the pool allows it
/// and with replacement once k exceeds the pool. If every other node is a
/// neighbor, the pool widens to all nodes except the source.
pub fn sample_negatives(
    g: &WeightedGraph,
    source: &str,
    k: usize,
    rng: &mut impl Rng,
) -> Result<Vec<String>> {
    let idx = g
        .index_of(source)
        .ok_or_else(|| Error::data(format!("unknown node id: {source}")))?;
    if g.node_count() < 2 {
        return Err(Error::data(format!(
            "no negative candidates for {source}: graph has a single node"
        )));
    }
    let names: Vec<&str> = (0..g.node_count()).map(|i| g.name(i)).collect();
    let neighbors = g.neighbor_indices(idx);
    let pool = eligible_pool(g.node_count(), idx, &neighbors);
    Ok(sample_from_pool(&pool, k, rng)
        .into_iter()
        .map(|i| names[i].to_string())
        .collect())
}

fn eligible_pool(n: usize, source: usize, neighbors: &[usize]) -> Vec<usize> {
    let pool: Vec<usize> = (0..n)
        .filter(|&i| i != source && neighbors.binary_search(&i).is_err())
        .collect();
    if pool.is_empty() {
        (0..n).filter(|&i| i != source).collect()
    } else {
        pool
    }
}

fn sample_from_pool(pool: &[usize], k: usize, rng: &mut impl Rng) -> Vec<usize> {
    if pool.len() >= k {
        let mut scratch: Vec<usize> = pool.to_vec();
        for i in 0..k {
            let j = rng.random_range(i..scratch.len());
            scratch.swap(i, j);
        }
        scratch.truncate(k);
        scratch
    } else {
        (0..k)
            .map(|_| pool[rng.random_range(0..pool.len())])
            .collect()
    }
}

/// Geodesic distance together with its Euclidean gradients at both points.
/// Coincident points return zero gradients.
fn distance_grad(u: [f64; 2], v: [f64; 2]) -> (f64, [f64; 2], [f64; 2]) {
    let dx = u[0] - v[0];
    let dy = u[1] - v[1];
    let sq = dx * dx + dy * dy;
    let nu = u[0] * u[0] + u[1] * u[1];
    let nv = v[0] * v[0] + v[1] * v[1];
    let alpha = 1.0 - nu;
    let beta = 1.0 - nv;
    let t = 2.0 * sq / (alpha * beta);
    let d = (t + (t * (t + 2.0)).sqrt()).ln_1p();
    let gamma = 1.0 + t;
    let root = (gamma * gamma - 1.0).sqrt();
    if root < 1e-15 {
        return (d, [0.0, 0.0], [0.0, 0.0]);
    }
    let dot = u[0] * v[0] + u[1] * v[1];
    let cu = 4.0 / (beta * root);
    let au = (nv - 2.0 * dot + 1.0) / (alpha * alpha);
    let gu = [
        cu * (au * u[0] - v[0] / alpha),
        cu * (au * u[1] - v[1] / alpha),
    ];
    let cv = 4.0 / (alpha * root);
    let av = (nu - 2.0 * dot + 1.0) / (beta * beta);
    let gv = [
        cv * (av * v[0] - u[0] / beta),
        cv * (av * v[1] - u[1] / beta),
    ];
    (d, gu, gv)
}

/// Loss and per-point Euclidean gradients for one training sample. The
/// returned list holds (point index into `points`, gradient) entries:
/// first the source, then each candidate in order (target first).
pub(crate) fn sample_gradients(
    points: &[[f64; 2]],
    source: usize,
    candidates: &[usize],
) -> (f64, Vec<(usize, [f64; 2])>) {
    let u = points[source];
    let mut scores = Vec::with_capacity(candidates.len());
    let mut grads_u = Vec::with_capacity(candidates.len());
    let mut grads_c = Vec::with_capacity(candidates.len());
    for &c in candidates {
        let (d, gu, gc) = distance_grad(u, points[c]);
        scores.push(-d);
        grads_u.push(gu);
        grads_c.push(gc);
    }
    let loss = softmax_loss(&scores);
    let m = scores.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let z: f64 = scores.iter().map(|s| (s - m).exp()).sum();
    let mut out = Vec::with_capacity(candidates.len() + 1);
    let mut gu_total = [0.0, 0.0];
    for (j, &c) in candidates.iter().enumerate() {
        let p = (scores[j] - m).exp() / z;
        let coeff = if j == 0 { 1.0 - p } else { -p };
        gu_total[0] += coeff * grads_u[j][0];
        gu_total[1] += coeff * grads_u[j][1];
        out.push((c, [coeff * grads_c[j][0], coeff * grads_c[j][1]]));
    }
    out.insert(0, (source, gu_total));
    (loss, out)
}

struct TrainSetup {
    names: Vec<String>,
    neighbors: Vec<Vec<usize>>,
    train_pairs: Vec<(usize, usize)>,
    cum_weights: Vec<f64>,
    val_pairs: Vec<(usize, usize)>,
}

fn prepare(graph: &WeightedGraph, config: &TrainConfig) -> Result<TrainSetup> {
    let comps = graph.components();
    if comps.len() > 1 {
        let named: Vec<String> = comps.iter().map(|c| format!("[{}]", c.join(", "))).collect();
        return Err(Error::data(format!(
            "training requires a connected graph; components: {}",
            named.join(" ")
        )));
    }
    let names: Vec<String> = graph.node_ids().map(|s| s.to_string()).collect();
    let lookup: BTreeMap<&str, usize> = names.iter().map(|s| s.as_str()).zip(0..).collect();
    let mut edges: Vec<(usize, usize, f64)> = Vec::new();
    for (a, b, w) in graph.edges() {
        if a != b {
            edges.push((lookup[a], lookup[b], w));
        }
    }
    if edges.is_empty() {
        return Err(Error::data(
            "training requires at least one non-loop edge".to_string(),
        ));
    }
    let mut neighbors = vec![Vec::new(); names.len()];
    for &(u, v, _) in &edges {
        neighbors[u].push(v);
        neighbors[v].push(u);
    }
    for list in neighbors.iter_mut() {
        list.sort_unstable();
    }

    let n_val = (config.validation_fraction * edges.len() as f64).floor() as usize;
    let mut order: Vec<usize> = (0..edges.len()).collect();
    let mut split_rng = substream(config.seed, "validation-split");
    for i in 0..n_val {
        let j = split_rng.random_range(i..order.len());
        order.swap(i, j);
    }
    let val_set: Vec<usize> = order[..n_val].to_vec();
    let mut is_val = vec![false; edges.len()];
    for &i in &val_set {
        is_val[i] = true;
    }

    let directed = |list: &mut Vec<(usize, usize)>, u: usize, v: usize| {
        list.push((u, v));
        if config.symmetrize {
            list.push((v, u));
        }
    };
    let mut train_pairs = Vec::new();
    let mut weights = Vec::new();
    let mut val_pairs = Vec::new();
    for (i, &(u, v, w)) in edges.iter().enumerate() {
        if is_val[i] {
            directed(&mut val_pairs, u, v);
        } else {
            let before = train_pairs.len();
            directed(&mut train_pairs, u, v);
            for _ in before..train_pairs.len() {
                weights.push(w);
            }
        }
    }
    if train_pairs.is_empty() {
        return Err(Error::data(
            "validation split left no training edges".to_string(),
        ));
    }
    let mut cum_weights = Vec::with_capacity(weights.len());
    let mut acc = 0.0;
    for w in weights {
        acc += w;
        cum_weights.push(acc);
    }
    Ok(TrainSetup {
        names,
        neighbors,
        train_pairs,
        cum_weights,
        val_pairs,
    })
}

/// Train an embedding; see [`train_with_trace`] for the variant that also
/// returns the loss curve.
pub fn train(graph: &WeightedGraph, config: &TrainConfig) -> Result<EmbeddingModel> {
    run_training(graph, config, false).map(|(model, _)| model)
}

/// Train an embedding and record per-epoch losses and evaluations.
pub fn train_with_trace(
    graph: &WeightedGraph,
    config: &TrainConfig,
) -> Result<(EmbeddingModel, TrainTrace)> {
    run_training(graph, config, true)
}

fn run_training(
    graph: &WeightedGraph,
    config: &TrainConfig,
    trace: bool,
) -> Result<(EmbeddingModel, TrainTrace)> {
    config.validate()?;
    let setup = prepare(graph, config)?;
    let n = setup.names.len();

    let mut init_rng = substream(config.seed, "init");
    let mut pos: Vec<[f64; 2]> = Vec::with_capacity(n);
    for _ in 0..n {
        let r = 0.001 * init_rng.random::<f64>().sqrt();
        let theta = std::f64::consts::TAU * init_rng.random::<f64>();
        pos.push([r * theta.cos(), r * theta.sin()]);
    }

    let mut pools: Vec<Option<Vec<usize>>> = vec![None; n];
    let pool_of = |pools: &mut Vec<Option<Vec<usize>>>, src: usize| -> Vec<usize> {
        if pools[src].is_none() {
            pools[src] = Some(eligible_pool(n, src, &setup.neighbors[src]));
        }
        pools[src].clone().unwrap()
    };

    // Fixed negatives per pair for the loss curve, so the per-epoch numbers
    // are comparable.
    let mut trace_negs: Vec<Vec<usize>> = Vec::new();
    if trace {
        let mut trace_rng = substream(config.seed, "trace");
        for &(u, _) in &setup.train_pairs {
            let pool = pool_of(&mut pools, u);
            trace_negs.push(sample_from_pool(&pool, config.negatives, &mut trace_rng));
        }
    }

    let total_weight = *setup.cum_weights.last().unwrap();
    let mut train_rng = substream(config.seed, "train");
    let mut val_rng = substream(config.seed, "validation");

    let mut best: Option<(f64, usize, Vec<[f64; 2]>)> = None;
    let mut epoch_losses = Vec::new();
    let mut evaluations = Vec::new();

    for epoch in 1..=config.epochs {
        let lr = if epoch <= config.burnin_epochs {
            config.learning_rate * config.burnin_lr_factor
        } else {
            config.learning_rate
        };

        let n_samples = setup.train_pairs.len();
        let mut processed = 0;
        while processed < n_samples {
            let batch = (n_samples - processed).min(config.batch_size);
            let mut acc: BTreeMap<usize, [f64; 2]> = BTreeMap::new();
            for _ in 0..batch {
                let draw = train_rng.random::<f64>() * total_weight;
                let pick = setup
                    .cum_weights
                    .partition_point(|&c| c <= draw)
                    .min(setup.train_pairs.len() - 1);
                let (u, v) = setup.train_pairs[pick];
                let pool = pool_of(&mut pools, u);
                let negs = sample_from_pool(&pool, config.negatives, &mut train_rng);
                let mut candidates = Vec::with_capacity(negs.len() + 1);
                candidates.push(v);
                candidates.extend(negs);
                let (_, grads) = sample_gradients(&pos, u, &candidates);
                for (node, g) in grads {
                    let entry = acc.entry(node).or_insert([0.0, 0.0]);
                    entry[0] += g[0];
                    entry[1] += g[1];
                }
            }
            let scale = 1.0 / batch as f64;
            for (node, g) in acc {
                let p = HyperbolicPoint::new(pos[node][0], pos[node][1])?;
                let r = riemannian_scale([g[0] * scale, g[1] * scale], &p);
                let next = [pos[node][0] - lr * r[0], pos[node][1] - lr * r[1]];
                pos[node] = project_into_disk(next, config.epsilon)?.coords();
            }
            processed += batch;
        }

        if trace {
            let mut sum = 0.0;
            for (i, &(u, v)) in setup.train_pairs.iter().enumerate() {
                let mut candidates = Vec::with_capacity(trace_negs[i].len() + 1);
                candidates.push(v);
                candidates.extend(trace_negs[i].iter().copied());
                let (loss, _) = sample_gradients(&pos, u, &candidates);
                sum += loss;
            }
            epoch_losses.push(sum / setup.train_pairs.len() as f64);
        }

        let eligible = epoch > config.burnin_epochs && epoch % config.eval_every == 0;
        let last_chance = epoch == config.epochs && best.is_none();
        if eligible || last_chance {
            let held_out = if setup.val_pairs.is_empty() {
                &setup.train_pairs
            } else {
                &setup.val_pairs
            };
            let mut sum = 0.0;
            for &(u, v) in held_out {
                let pool = pool_of(&mut pools, u);
                let negs = sample_from_pool(&pool, config.negatives, &mut val_rng);
                let mut candidates = Vec::with_capacity(negs.len() + 1);
                candidates.push(v);
                candidates.extend(negs);
                let (loss, _) = sample_gradients(&pos, u, &candidates);
                sum += loss;
            }
            let val_loss = sum / held_out.len() as f64;
            if !val_loss.is_finite() {
                return Err(Error::numeric(format!(
                    "validation loss became non-finite at epoch {epoch}"
                )));
            }
            evaluations.push((epoch, val_loss));
            let improved = match &best {
                None => true,
                Some((b, _, _)) => val_loss < *b,
            };
            if improved {
                best = Some((val_loss, epoch, pos.clone()));
            }
        }
    }

    let (best_loss, best_epoch, best_pos) = best.expect("at least one evaluation");
    let mut positions = BTreeMap::new();
    for (i, name) in setup.names.iter().enumerate() {
        positions.insert(
            name.clone(),
            HyperbolicPoint::new(best_pos[i][0], best_pos[i][1])?,
        );
    }
    Ok((
        EmbeddingModel {
            config: config.clone(),
            best_validation_loss: best_loss,
            epoch_of_best: best_epoch,
            positions,
        },
        TrainTrace {
            epoch_losses,
            evaluations,
        },
    ))
}
