//! Summaries computed on top of trained embeddings: peak angles, radial
//! hierarchy, representative nodes, entropies, and distance matrices.

use crate::embedding::EmbeddingModel;
use crate::geometry::{normalize_angle, poincare_distance, HyperbolicPoint};
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::TAU;
use std::path::Path;

const KDE_GRID: usize = 3600;

/// Location of the highest weighted Gaussian KDE value on a 3600-point grid
/// over [0, 2π).
///
/// The data is replicated at ±2π before smoothing so density flows across
/// the wrap point. With `bandwidth` = None, Scott's rule is applied to the
/// weighted sample: σ̂ · n_eff^(−1/5) with n_eff = (Σw)² / Σw². The peak is
/// invariant under rescaling all weights by a positive constant.
pub fn kde_peak_angle(angles: &[f64], weights: &[f64], bandwidth: Option<f64>) -> Result<f64> {
    if angles.is_empty() {
        return Err(Error::data("kde needs at least one angle".to_string()));
    }
    if angles.len() != weights.len() {
        return Err(Error::data(format!(
            "kde got {} angles but {} weights",
            angles.len(),
            weights.len()
        )));
    }
    if angles.iter().any(|a| !a.is_finite()) {
        return Err(Error::data("kde angles must be finite".to_string()));
    }
    if weights.iter().any(|w| !w.is_finite() || *w <= 0.0) {
        return Err(Error::data("kde weights must be positive".to_string()));
    }
    let angles: Vec<f64> = angles.iter().map(|&a| normalize_angle(a)).collect();
    let h = match bandwidth {
        Some(h) if h.is_finite() && h > 0.0 => h,
        Some(h) => {
            return Err(Error::data(format!("kde bandwidth must be positive, got {h}")));
        }
        None => scott_bandwidth(&angles, weights),
    };
    let mut best_i = 0;
    let mut best = f64::NEG_INFINITY;
    for i in 0..KDE_GRID {
        let t = i as f64 * TAU / KDE_GRID as f64;
        let mut dens = 0.0;
        for (a, w) in angles.iter().zip(weights) {
            for shift in [-TAU, 0.0, TAU] {
                let z = (t - a - shift) / h;
                dens += w * (-0.5 * z * z).exp();
            }
        }
        if dens > best {
            best = dens;
            best_i = i;
        }
    }
    Ok(best_i as f64 * TAU / KDE_GRID as f64)
}

fn scott_bandwidth(angles: &[f64], weights: &[f64]) -> f64 {
    let wsum: f64 = weights.iter().sum();
    let wsq: f64 = weights.iter().map(|w| w * w).sum();
    let neff = wsum * wsum / wsq;
    // The scale estimate must be circular: the linear sd of a cluster
    // straddling 0/2π is inflated by the wrap and oversmooths badly.
    let c: f64 = angles.iter().zip(weights).map(|(a, w)| w * a.cos()).sum();
    let s: f64 = angles.iter().zip(weights).map(|(a, w)| w * a.sin()).sum();
    let r = (c * c + s * s).sqrt() / wsum;
    let sd = if r >= 1.0 { 0.0 } else { (-2.0 * r.ln()).sqrt() };
    let h = sd * neff.powf(-0.2);
    // Point masses would give zero bandwidth; fall back to one grid step.
    if h > TAU / KDE_GRID as f64 {
        h
    } else {
        TAU / KDE_GRID as f64
    }
}

/// The code whose position minimizes the summed distance to the entity's
/// other codes (unweighted over distinct codes). Ties go to the smaller
/// radius, then to the lexicographically smaller id.
pub fn representative_node(
    codes: &BTreeMap<String, f64>,
    embedding: &EmbeddingModel,
) -> Result<String> {
    if codes.is_empty() {
        return Err(Error::data(
            "representative node needs at least one code".to_string(),
        ));
    }
    let mut points = Vec::with_capacity(codes.len());
    for (code, weight) in codes {
        if !weight.is_finite() || *weight <= 0.0 {
            return Err(Error::data(format!(
                "code weight must be positive, got {weight} for {code}"
            )));
        }
        let p = embedding
            .position(code)
            .ok_or_else(|| Error::data(format!("code not in embedding: {code}")))?;
        points.push((code.as_str(), p));
    }
    let mut best: Option<(&str, f64, f64)> = None;
    for &(code, p) in &points {
        let total: f64 = points
            .iter()
            .filter(|(other, _)| *other != code)
            .map(|(_, q)| poincare_distance(p, q))
            .sum();
        let radius = p.norm();
        let better = match best {
            None => true,
            Some((bc, bt, br)) => {
                total < bt || (total == bt && (radius < br || (radius == br && code < bc)))
            }
        };
        if better {
            best = Some((code, total, radius));
        }
    }
    Ok(best.unwrap().0.to_string())
}

/// Mean of the 10 smallest radii (or of all radii when fewer than 10).
/// Lower values mean the embedding has material mass near the center.
pub fn hierarchy_summary(radii: &[f64]) -> Result<f64> {
    if radii.is_empty() {
        return Err(Error::data("hierarchy summary of an empty set".to_string()));
    }
    if radii.iter().any(|r| !r.is_finite() || *r < 0.0) {
        return Err(Error::data("radii must be finite and non-negative".to_string()));
    }
    let mut sorted = radii.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let take = sorted.len().min(10);
    Ok(sorted[..take].iter().sum::<f64>() / take as f64)
}

/// Shannon entropy (natural log) of the weighted angular histogram with
/// `bins` equal-width bins over [0, 2π).
pub fn angular_entropy(angles: &[f64], weights: &[f64], bins: usize) -> Result<f64> {
    if bins == 0 {
        return Err(Error::data("angular entropy needs at least one bin".to_string()));
    }
    if angles.is_empty() {
        return Err(Error::data("angular entropy of an empty set".to_string()));
    }
    if angles.len() != weights.len() {
        return Err(Error::data(format!(
            "angular entropy got {} angles but {} weights",
            angles.len(),
            weights.len()
        )));
    }
    if weights.iter().any(|w| !w.is_finite() || *w <= 0.0) {
        return Err(Error::data("angular entropy weights must be positive".to_string()));
    }
    let mut hist = vec![0.0f64; bins];
    for (a, w) in angles.iter().zip(weights) {
        if !a.is_finite() {
            return Err(Error::data("angular entropy angles must be finite".to_string()));
        }
        let idx = ((normalize_angle(*a) / TAU) * bins as f64) as usize;
        hist[idx.min(bins - 1)] += w;
    }
    let total: f64 = hist.iter().sum();
    Ok(hist
        .iter()
        .filter(|&&m| m > 0.0)
        .map(|&m| {
            let p = m / total;
            -p * p.ln()
        })
        .sum())
}

/// Normalized token entropy of a collection of texts.
///
/// Tokens are maximal alphanumeric runs, lowercased. Stopwords and tokens
/// appearing fewer than twice in the whole corpus are dropped. The Shannon
/// entropy of the surviving counts is divided by ln of the surviving
/// vocabulary size; one or zero surviving types give 0.
pub fn normalized_token_entropy<S: AsRef<str>>(texts: &[S], stopwords: &BTreeSet<String>) -> f64 {
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for text in texts {
        for raw in text
            .as_ref()
            .split(|c: char| !c.is_alphanumeric())
            .filter(|t| !t.is_empty())
        {
            let token = raw.to_lowercase();
            if stopwords.contains(&token) {
                continue;
            }
            *counts.entry(token).or_insert(0) += 1;
        }
    }
    counts.retain(|_, c| *c >= 2);
    let n = counts.len();
    if n <= 1 {
        return 0.0;
    }
    let total: u64 = counts.values().sum();
    let h: f64 = counts
        .values()
        .map(|&c| {
            let p = c as f64 / total as f64;
            -p * p.ln()
        })
        .sum();
    h / (n as f64).ln()
}

/// The stopword list shipped with the crate.
pub fn default_stopwords() -> BTreeSet<String> {
    parse_stopwords(include_str!("../data/stopwords.txt"))
}

/// Load a stopword file: one token per line, blank lines ignored.
pub fn load_stopwords(path: &Path) -> Result<BTreeSet<String>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    Ok(parse_stopwords(&text))
}

fn parse_stopwords(text: &str) -> BTreeSet<String> {
    text.lines()
        .map(|l| l.trim().to_lowercase())
        .filter(|l| !l.is_empty())
        .collect()
}

/// Symmetric pairwise distance matrix over a set of embedded nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    ids: Vec<String>,
    values: Vec<f64>,
}

impl DistanceMatrix {
    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.ids.len() + j]
    }

    pub fn by_id(&self, a: &str, b: &str) -> Result<f64> {
        let i = self
            .ids
            .iter()
            .position(|x| x == a)
            .ok_or_else(|| Error::data(format!("id not in matrix: {a}")))?;
        let j = self
            .ids
            .iter()
            .position(|x| x == b)
            .ok_or_else(|| Error::data(format!("id not in matrix: {b}")))?;
        Ok(self.get(i, j))
    }

    /// Mean distance from each node to all others (diagonal excluded).
    /// A 1×1 matrix reports 0.
    pub fn row_means(&self) -> Vec<f64> {
        let n = self.ids.len();
        (0..n)
            .map(|i| {
                if n < 2 {
                    0.0
                } else {
                    (0..n).filter(|&j| j != i).map(|j| self.get(i, j)).sum::<f64>()
                        / (n - 1) as f64
                }
            })
            .collect()
    }

    /// Write as CSV with the ids as header row and leading column.
    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut wtr = csv::Writer::from_path(path)
            .map_err(|e| Error::data(format!("cannot write {}: {e}", path.display())))?;
        let mut header = vec!["id".to_string()];
        header.extend(self.ids.iter().cloned());
        wtr.write_record(&header)
            .map_err(|e| Error::data(format!("csv write failed: {e}")))?;
        for (i, id) in self.ids.iter().enumerate() {
            let mut row = vec![id.clone()];
            for j in 0..self.ids.len() {
                row.push(format!("{}", self.get(i, j)));
            }
            wtr.write_record(&row)
                .map_err(|e| Error::data(format!("csv write failed: {e}")))?;
        }
        wtr.flush()
            .map_err(|e| Error::io(path.display().to_string(), e))?;
        Ok(())
    }

    pub fn read_csv(path: &Path) -> Result<Self> {
        let mut rdr = csv::Reader::from_path(path)
            .map_err(|e| Error::data(format!("cannot read {}: {e}", path.display())))?;
        let ids: Vec<String> = rdr
            .headers()
            .map_err(|e| Error::data(format!("{}: {e}", path.display())))?
            .iter()
            .skip(1)
            .map(|s| s.to_string())
            .collect();
        let n = ids.len();
        let mut values = vec![0.0; n * n];
        let mut row_count = 0;
        for (i, rec) in rdr.records().enumerate() {
            let rec =
                rec.map_err(|e| Error::data(format!("{} row {}: {e}", path.display(), i + 2)))?;
            if i >= n || rec.len() != n + 1 || rec[0] != ids[i] {
                return Err(Error::data(format!(
                    "{} row {}: matrix shape or labels inconsistent",
                    path.display(),
                    i + 2
                )));
            }
            for j in 0..n {
                values[i * n + j] = rec[j + 1].parse().map_err(|_| {
                    Error::data(format!("{} row {}: bad value", path.display(), i + 2))
                })?;
            }
            row_count += 1;
        }
        if row_count != n {
            return Err(Error::data(format!(
                "{}: expected {n} rows, got {row_count}",
                path.display()
            )));
        }
        Ok(DistanceMatrix { ids, values })
    }
}

/// Pairwise geodesic distances between the given embedded nodes.
pub fn pairwise_distances(embedding: &EmbeddingModel, ids: &[String]) -> Result<DistanceMatrix> {
    let mut points = Vec::with_capacity(ids.len());
    for id in ids {
        let p = embedding
            .position(id)
            .ok_or_else(|| Error::data(format!("id not in embedding: {id}")))?;
        points.push(*p);
    }
    pairwise_distances_from_points(ids, &points)
}

/// Pairwise geodesic distances between explicit labeled points, for position
/// sets that do not live in a single embedding.
pub fn pairwise_distances_from_points(
    ids: &[String],
    points: &[HyperbolicPoint],
) -> Result<DistanceMatrix> {
    if ids.len() != points.len() {
        return Err(Error::data(format!(
            "{} ids but {} points",
            ids.len(),
            points.len()
        )));
    }
    let mut seen = BTreeSet::new();
    for id in ids {
        if !seen.insert(id.as_str()) {
            return Err(Error::data(format!("duplicate id in distance matrix: {id}")));
        }
    }
    let n = ids.len();
    let mut values = vec![0.0; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = poincare_distance(&points[i], &points[j]);
            values[i * n + j] = d;
            values[j * n + i] = d;
        }
    }
    Ok(DistanceMatrix {
        ids: ids.to_vec(),
        values,
    })
}

/// Where an entity sits in both embedded spaces for one year.
#[derive(Debug, Clone, PartialEq)]
pub struct EntityProfile {
    pub entity: String,
    pub year: i32,
    /// Papers per code for the year; drives the semantic summaries.
    pub code_weights: BTreeMap<String, f64>,
    pub social_position: HyperbolicPoint,
    pub semantic_position: HyperbolicPoint,
    pub representative_code: String,
    /// Shannon entropy of the entity's code angle histogram (natural log).
    pub angular_entropy: f64,
}

impl EntityProfile {
    /// Assemble a profile from the two embeddings.
    ///
    /// The semantic angle is the KDE peak over the entity's code angles
    /// (weighted by `code_weights`); the semantic radius is the radius of the
    /// entity's representative code, so the semantic position always shares
    /// the radius of a real embedded code. `bins` sets the angular-entropy
    /// histogram resolution (36 is the usual choice).
    pub fn build(
        entity: &str,
        year: i32,
        code_weights: BTreeMap<String, f64>,
        social: &EmbeddingModel,
        semantic: &EmbeddingModel,
        bandwidth: Option<f64>,
        bins: usize,
    ) -> Result<Self> {
        let social_position = *social
            .position(entity)
            .ok_or_else(|| Error::data(format!("entity not in social embedding: {entity}")))?;
        if code_weights.is_empty() {
            return Err(Error::data(format!(
                "entity {entity} has no codes in {year}"
            )));
        }
        let mut angles = Vec::with_capacity(code_weights.len());
        let mut weights = Vec::with_capacity(code_weights.len());
        for (code, w) in &code_weights {
            let p = semantic
                .position(code)
                .ok_or_else(|| Error::data(format!("code not in embedding: {code}")))?;
            angles.push(p.to_polar().1);
            weights.push(*w);
        }
        let theta = kde_peak_angle(&angles, &weights, bandwidth)?;
        let representative_code = representative_node(&code_weights, semantic)?;
        let radius = semantic
            .position(&representative_code)
            .expect("representative code came from the embedding")
            .norm();
        let semantic_position = HyperbolicPoint::from_polar(radius, theta)?;
        let angular_entropy = angular_entropy(&angles, &weights, bins)?;
        Ok(EntityProfile {
            entity: entity.to_string(),
            year,
            code_weights,
            social_position,
            semantic_position,
            representative_code,
            angular_entropy,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::TrainConfig;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn model_from(positions: &[(&str, f64, f64)]) -> EmbeddingModel {
        let map: BTreeMap<String, HyperbolicPoint> = positions
            .iter()
            .map(|(id, x, y)| (id.to_string(), HyperbolicPoint::new(*x, *y).unwrap()))
            .collect();
        EmbeddingModel::from_positions(TrainConfig::with_seed(0), map).unwrap()
    }

    #[test]
    fn kde_point_mass_peaks_at_the_data() {
        let peak = kde_peak_angle(&[1.0, 1.0, 1.0], &[1.0, 1.0, 1.0], None).unwrap();
        assert!(close(peak, 1.0, TAU / KDE_GRID as f64));
    }

    #[test]
    fn kde_heavier_cluster_wins_the_peak() {
        let peak = kde_peak_angle(&[1.0, 4.0], &[10.0, 1.0], None).unwrap();
        assert!(close(peak, 1.0, 0.05), "peak {peak}");
    }

    #[test]
    fn kde_boundary_cluster_gives_one_peak_near_zero() {
        let peak = kde_peak_angle(&[6.2, 0.08], &[1.0, 1.0], None).unwrap();
        let gap = (peak - 0.0).abs().min(TAU - peak);
        assert!(gap < 0.15, "peak {peak} not near the wrap point");
    }

    #[test]
    fn kde_peak_is_invariant_under_weight_rescaling() {
        let angles = [0.4, 0.5, 2.0, 2.1, 2.2, 5.0];
        let weights = [1.0, 2.0, 3.0, 1.0, 2.0, 0.5];
        let scaled: Vec<f64> = weights.iter().map(|w| w * 37.5).collect();
        let a = kde_peak_angle(&angles, &weights, None).unwrap();
        let b = kde_peak_angle(&angles, &scaled, None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn kde_honors_an_explicit_bandwidth_and_rejects_bad_input() {
        let angles = [1.0, 4.0];
        let a = kde_peak_angle(&angles, &[2.0, 1.0], Some(0.2)).unwrap();
        assert!(close(a, 1.0, 0.01));
        assert!(kde_peak_angle(&[], &[], None).is_err());
        assert!(kde_peak_angle(&[1.0], &[1.0, 2.0], None).is_err());
        assert!(kde_peak_angle(&[1.0], &[0.0], None).is_err());
        assert!(kde_peak_angle(&[1.0], &[1.0], Some(0.0)).is_err());
        assert!(kde_peak_angle(&[f64::NAN], &[1.0], None).is_err());
    }

    #[test]
    fn representative_node_single_code_is_itself() {
        let model = model_from(&[("c1", 0.5, 0.0), ("c2", 0.0, 0.3)]);
        let codes: BTreeMap<String, f64> = [("c1".to_string(), 3.0)].into_iter().collect();
        assert_eq!(representative_node(&codes, &model).unwrap(), "c1");
    }

    #[test]
    fn representative_node_tie_prefers_smaller_radius() {
        let model = model_from(&[("far", 0.8, 0.0), ("near", 0.1, 0.0)]);
        let codes: BTreeMap<String, f64> =
            [("far".to_string(), 1.0), ("near".to_string(), 1.0)]
                .into_iter()
                .collect();
        assert_eq!(representative_node(&codes, &model).unwrap(), "near");
    }

    #[test]
    fn representative_node_tie_falls_back_to_lexicographic() {
        let model = model_from(&[("b", 0.4, 0.0), ("a", -0.4, 0.0)]);
        let codes: BTreeMap<String, f64> =
            [("a".to_string(), 1.0), ("b".to_string(), 1.0)].into_iter().collect();
        assert_eq!(representative_node(&codes, &model).unwrap(), "a");
    }

    #[test]
    fn representative_node_minimizes_summed_distance() {
        let model = model_from(&[
            ("center", 0.05, 0.0),
            ("left", -0.6, 0.1),
            ("right", 0.6, 0.1),
        ]);
        let codes: BTreeMap<String, f64> = [
            ("center".to_string(), 1.0),
            ("left".to_string(), 5.0),
            ("right".to_string(), 5.0),
        ]
        .into_iter()
        .collect();
        assert_eq!(representative_node(&codes, &model).unwrap(), "center");
    }

    #[test]
    fn representative_node_rejects_missing_codes_and_empty_maps() {
        let model = model_from(&[("c1", 0.5, 0.0)]);
        let missing: BTreeMap<String, f64> = [("ghost".to_string(), 1.0)].into_iter().collect();
        assert!(representative_node(&missing, &model).is_err());
        assert!(representative_node(&BTreeMap::new(), &model).is_err());
        let bad: BTreeMap<String, f64> = [("c1".to_string(), 0.0)].into_iter().collect();
        assert!(representative_node(&bad, &model).is_err());
    }

    #[test]
    fn hierarchy_summary_averages_ten_smallest() {
        let mut radii: Vec<f64> = (1..=9).map(|k| k as f64 / 10.0).collect();
        radii.push(0.91);
        radii.extend([0.95, 0.96, 0.97, 0.98, 0.99]);
        let got = hierarchy_summary(&radii).unwrap();
        assert!(close(got, 0.541, 1e-12));
    }

    #[test]
    fn hierarchy_summary_with_few_values_uses_them_all() {
        assert!(close(hierarchy_summary(&[0.2, 0.4]).unwrap(), 0.3, 1e-15));
        assert!(hierarchy_summary(&[]).is_err());
        assert!(hierarchy_summary(&[0.1, f64::NAN]).is_err());
    }

    #[test]
    fn angular_entropy_point_mass_is_zero() {
        assert_eq!(angular_entropy(&[2.0, 2.0], &[1.0, 3.0], 36).unwrap(), 0.0);
    }

    #[test]
    fn angular_entropy_two_bins_three_to_one() {
        let h = angular_entropy(&[0.1, 3.5], &[3.0, 1.0], 2).unwrap();
        let want = -(0.75f64 * 0.75f64.ln() + 0.25 * 0.25f64.ln());
        assert!(close(h, want, 1e-15));
        assert!(close(h, 0.5623, 5e-5));
    }

    #[test]
    fn angular_entropy_is_at_most_log_bins() {
        let angles: Vec<f64> = (0..36).map(|i| i as f64 * TAU / 36.0 + 0.01).collect();
        let weights = vec![1.0; 36];
        let h = angular_entropy(&angles, &weights, 36).unwrap();
        assert!(close(h, 36.0f64.ln(), 1e-12));
        for bins in [1usize, 5, 17] {
            let h = angular_entropy(&angles, &weights, bins).unwrap();
            assert!(h <= (bins as f64).ln() + 1e-12);
        }
        assert!(angular_entropy(&[1.0], &[1.0], 0).is_err());
    }

    #[test]
    fn token_entropy_balanced_two_types_is_exactly_one() {
        let h = normalized_token_entropy(&["a a b b"], &BTreeSet::new());
        assert_eq!(h, 1.0);
    }

    #[test]
    fn token_entropy_degenerate_vocabulary_is_zero() {
        let none = BTreeSet::new();
        assert_eq!(normalized_token_entropy::<&str>(&[], &none), 0.0);
        assert_eq!(normalized_token_entropy(&["zebra zebra zebra"], &none), 0.0);
        // Single occurrences never survive the min-count filter.
        assert_eq!(normalized_token_entropy(&["one two three"], &none), 0.0);
    }

    #[test]
    fn token_entropy_drops_stopwords_and_rare_tokens() {
        let stops: BTreeSet<String> = ["the".to_string()].into_iter().collect();
        // "the" is stopped, "rare" appears once: both vanish, leaving a 2/2
        // split between "alpha" and "beta".
        let h = normalized_token_entropy(
            &["the alpha beta rare", "THE alpha; beta!"],
            &stops,
        );
        assert_eq!(h, 1.0);
    }

    #[test]
    fn token_entropy_is_invariant_under_corpus_duplication() {
        // Every type already clears the min-count filter, so doubling the
        // corpus scales counts without changing the distribution.
        let stops = default_stopwords();
        let texts = ["graphs embed softly graphs", "embed softly graphs"];
        let doubled = [texts[0], texts[1], texts[0], texts[1]];
        let a = normalized_token_entropy(&texts, &stops);
        let b = normalized_token_entropy(&doubled, &stops);
        assert!(close(a, b, 1e-15));
        assert!(a > 0.0);
    }

    #[test]
    fn token_entropy_tokenizer_handles_punctuation_and_case() {
        let none = BTreeSet::new();
        let h1 = normalized_token_entropy(&["Rust-Lang rust_lang RUST lang"], &none);
        // rust: 3, lang: 3 after splitting on every non-alphanumeric char.
        assert_eq!(h1, 1.0);
    }

    #[test]
    fn stopword_files_parse_and_default_list_is_sane() {
        let stops = default_stopwords();
        assert!(stops.contains("the"));
        assert!(stops.contains("and"));
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("stops.txt");
        std::fs::write(&path, "Foo\n\n  bar  \n").unwrap();
        let custom = load_stopwords(&path).unwrap();
        assert!(custom.contains("foo") && custom.contains("bar"));
        assert_eq!(custom.len(), 2);
    }

    #[test]
    fn distance_matrix_is_symmetric_with_zero_diagonal() {
        let model = model_from(&[("a", 0.1, 0.0), ("b", -0.2, 0.3), ("c", 0.0, -0.5)]);
        let ids: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let m = pairwise_distances(&model, &ids).unwrap();
        for i in 0..3 {
            assert_eq!(m.get(i, i), 0.0);
            for j in 0..3 {
                assert_eq!(m.get(i, j), m.get(j, i));
            }
        }
        assert_eq!(m.by_id("a", "b").unwrap(), m.get(0, 1));
    }

    #[test]
    fn distance_matrix_row_means_exclude_the_diagonal() {
        let model = model_from(&[("a", 0.1, 0.0), ("b", -0.2, 0.3), ("c", 0.0, -0.5)]);
        let ids: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let m = pairwise_distances(&model, &ids).unwrap();
        let means = m.row_means();
        assert!(close(means[0], (m.get(0, 1) + m.get(0, 2)) / 2.0, 1e-15));

        let single = pairwise_distances(&model, &["a".to_string()]).unwrap();
        assert_eq!(single.row_means(), vec![0.0]);
    }

    #[test]
    fn distance_matrix_rejects_bad_ids() {
        let model = model_from(&[("a", 0.1, 0.0)]);
        assert!(pairwise_distances(&model, &["ghost".to_string()]).is_err());
        assert!(
            pairwise_distances(&model, &["a".to_string(), "a".to_string()]).is_err()
        );
    }

    #[test]
    fn distance_matrix_csv_round_trips() {
        let model = model_from(&[("a", 0.1, 0.0), ("b", -0.2, 0.3), ("c", 0.0, -0.5)]);
        let ids: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let m = pairwise_distances(&model, &ids).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("dist.csv");
        m.write_csv(&path).unwrap();
        let back = DistanceMatrix::read_csv(&path).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn entity_profile_semantic_radius_comes_from_the_representative() {
        let semantic = model_from(&[
            ("c1", 0.3, 0.1),
            ("c2", 0.25, 0.2),
            ("c3", -0.7, 0.0),
        ]);
        let social = model_from(&[("U1", 0.4, -0.2)]);
        let codes: BTreeMap<String, f64> = [
            ("c1".to_string(), 4.0),
            ("c2".to_string(), 2.0),
            ("c3".to_string(), 1.0),
        ]
        .into_iter()
        .collect();
        let profile =
            EntityProfile::build("U1", 2003, codes, &social, &semantic, None, 36).unwrap();
        let rep = profile.representative_code.clone();
        let rep_radius = semantic.position(&rep).unwrap().norm();
        assert_eq!(profile.semantic_position.norm(), rep_radius);
        assert_eq!(profile.year, 2003);
        assert_eq!(profile.social_position, *social.position("U1").unwrap());
        assert!(profile.angular_entropy >= 0.0);
    }

    #[test]
    fn entity_profile_requires_known_entity_and_codes() {
        let semantic = model_from(&[("c1", 0.3, 0.1)]);
        let social = model_from(&[("U1", 0.4, -0.2)]);
        let codes: BTreeMap<String, f64> = [("c1".to_string(), 1.0)].into_iter().collect();
        assert!(
            EntityProfile::build("U9", 2000, codes.clone(), &social, &semantic, None, 36).is_err()
        );
        assert!(EntityProfile::build(
            "U1",
            2000,
            BTreeMap::new(),
            &social,
            &semantic,
            None,
            36
        )
        .is_err());
        let ghost: BTreeMap<String, f64> = [("ghost".to_string(), 1.0)].into_iter().collect();
        assert!(EntityProfile::build("U1", 2000, ghost, &social, &semantic, None, 36).is_err());
    }
}
