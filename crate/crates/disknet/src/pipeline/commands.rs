//! Implementations of the pipeline subcommands.

use super::args::{
    AnalyzeArgs, BaseArg, BuildNetArgs, EmbedArgs, InfoDemoArgs, MetricsArgs, ReportArgs,
    SynthArgs, SynthKind,
};
use super::{run_stage, svg, Stage};
use crate::embedding::{train, EmbeddingModel, TrainConfig};
use crate::geometry::{angular_separation, HyperbolicPoint};
use crate::infotheory::{conditional_entropy, mutual_information, JointDistribution, LogBase};
use crate::metrics::{pairwise_distances, pairwise_distances_from_points, DistanceMatrix, EntityProfile};
use crate::networks::{
    affiliation_map, aggregate_to_institutions, build_coauthor_graph, build_cooccurrence_graph,
    generate_reference_graph, institution_code_weights, read_edge_csv, read_records_jsonl,
    rewire_increase_hierarchy, select_top_institutions, write_edge_csv, ReferenceKind,
};
use crate::rng::substream;
use crate::stats::{bin_means, granger_tally, ols_slope, pearson, SlopePair};
use crate::{Error, Result};
use serde_json::json;
use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

pub fn synth(a: SynthArgs) -> Result<()> {
    run_stage(&a.out, "synth", |stage| {
        let need = |flag: &str, v: Option<u32>| {
            v.ok_or_else(|| {
                Error::usage(format!("--{flag} is required for --kind {}", a.kind.label()))
            })
        };
        let graph = match a.kind {
            SynthKind::Tree => generate_reference_graph(ReferenceKind::Tree {
                branching: need("branching", a.branching)?,
                levels: need("levels", a.levels)?,
            })?,
            SynthKind::RingLattice => generate_reference_graph(ReferenceKind::RingLattice {
                n: need("nodes", a.nodes)?,
                k: need("degree", a.degree)?,
            })?,
            SynthKind::RewiredLattice => {
                let seed = a.seed.ok_or_else(|| {
                    Error::usage("--seed is required for --kind rewired-lattice".to_string())
                })?;
                let base = generate_reference_graph(ReferenceKind::RingLattice {
                    n: need("nodes", a.nodes)?,
                    k: need("degree", a.degree)?,
                })?;
                rewire_increase_hierarchy(&base, a.attempts, &mut substream(seed, "rewire"))?
            }
        };
        let path = stage.create(&format!("{}.csv", a.kind.label()));
        write_edge_csv(&graph, &path)?;
        let parameters = json!({
            "kind": a.kind.label(),
            "branching": a.branching,
            "levels": a.levels,
            "nodes": a.nodes,
            "degree": a.degree,
            "attempts": a.attempts,
        });
        Ok((parameters, a.seed))
    })
}

pub fn build_net(a: BuildNetArgs) -> Result<()> {
    run_stage(&a.out, "build-net", |stage| {
        stage.record_input(&a.records)?;
        let records = read_records_jsonl(&a.records)?;
        if records.is_empty() {
            return Err(Error::data(format!(
                "no records in {}",
                a.records.display()
            )));
        }
        let (start, end) = match &a.years {
            Some(spec) => parse_years(spec)?,
            None => {
                let lo = records.iter().map(|r| r.year).min().unwrap();
                let hi = records.iter().map(|r| r.year).max().unwrap();
                (lo, hi)
            }
        };
        let years: Vec<i32> = (start..=end).collect();
        let in_range: Vec<_> = records
            .iter()
            .filter(|r| (start..=end).contains(&r.year))
            .cloned()
            .collect();
        let mut author_graphs = Vec::with_capacity(years.len());
        let mut inst_graphs = Vec::with_capacity(years.len());
        for &year in &years {
            if !in_range.iter().any(|r| r.year == year) {
                return Err(Error::data(format!("no records in year {year}")));
            }
            let authors = build_coauthor_graph(&in_range, year);
            let aff = affiliation_map(&in_range, year);
            inst_graphs.push(aggregate_to_institutions(&authors, &aff)?);
            author_graphs.push(authors);
        }
        let keep = select_top_institutions(&inst_graphs, a.top_k);
        if keep.is_empty() {
            return Err(Error::data(
                "no institution appears in every year of the range".to_string(),
            ));
        }
        for (i, &year) in years.iter().enumerate() {
            write_edge_csv(
                &author_graphs[i],
                &stage.create(&format!("authors_{year}.csv")),
            )?;
            write_edge_csv(
                &inst_graphs[i].induced_subgraph(&keep),
                &stage.create(&format!("institutions_{year}.csv")),
            )?;
        }
        write_edge_csv(&build_cooccurrence_graph(&in_range), &stage.create("codes.csv"))?;
        let parameters = json!({
            "records": a.records.display().to_string(),
            "years": format!("{start}..{end}"),
            "top_k": a.top_k,
        });
        Ok((parameters, None))
    })
}

fn parse_years(spec: &str) -> Result<(i32, i32)> {
    let usage = || Error::usage(format!("--years must look like 2002..2011, got {spec}"));
    let (a, b) = spec.split_once("..").ok_or_else(usage)?;
    let start: i32 = a.trim().parse().map_err(|_| usage())?;
    let end: i32 = b.trim().parse().map_err(|_| usage())?;
    if start > end {
        return Err(usage());
    }
    Ok((start, end))
}

pub fn embed(a: EmbedArgs) -> Result<()> {
    run_stage(&a.out, "embed", |stage| {
        stage.record_input(&a.edges)?;
        let graph = read_edge_csv(&a.edges)?;
        let config = TrainConfig {
            learning_rate: a.lr,
            negatives: a.negatives,
            batch_size: a.batch,
            epochs: a.epochs,
            burnin_epochs: a.burnin,
            burnin_lr_factor: a.burnin_factor,
            eval_every: a.eval_every,
            epsilon: a.epsilon,
            symmetrize: !a.no_symmetrize,
            validation_fraction: a.validation_fraction,
            seed: a.seed,
        };
        let model = train(&graph, &config)?;
        model.save(&stage.create("model.json"))?;
        let parameters = json!({
            "edges": a.edges.display().to_string(),
            "config": serde_json::to_value(&config).expect("config serialization"),
        });
        Ok((parameters, Some(a.seed)))
    })
}

pub fn metrics(a: MetricsArgs) -> Result<()> {
    run_stage(&a.out, "metrics", |stage| {
        stage.record_input(&a.records)?;
        stage.record_input(&a.social_model)?;
        stage.record_input(&a.semantic_model)?;
        let records = read_records_jsonl(&a.records)?;
        let social = EmbeddingModel::load(&a.social_model)?;
        let semantic = EmbeddingModel::load(&a.semantic_model)?;
        let aff = affiliation_map(&records, a.year);
        let weights = institution_code_weights(&records, a.year, &aff)?;

        let mut profiles = Vec::new();
        for id in social.ids() {
            let Some(codes) = weights.get(id) else {
                continue;
            };
            profiles.push(EntityProfile::build(
                id,
                a.year,
                codes.clone(),
                &social,
                &semantic,
                a.bandwidth,
                a.bins,
            )?);
        }
        if profiles.is_empty() {
            return Err(Error::data(format!(
                "no embedded institution has codes in {}",
                a.year
            )));
        }
        write_profiles_csv(&profiles, &stage.create(&format!("profiles_{}.csv", a.year)))?;

        let ids: Vec<String> = profiles.iter().map(|p| p.entity.clone()).collect();
        let social_matrix = pairwise_distances(&social, &ids)?;
        social_matrix.write_csv(&stage.create(&format!("social_distances_{}.csv", a.year)))?;
        let points: Vec<HyperbolicPoint> =
            profiles.iter().map(|p| p.semantic_position).collect();
        let semantic_matrix = pairwise_distances_from_points(&ids, &points)?;
        semantic_matrix.write_csv(&stage.create(&format!("semantic_distances_{}.csv", a.year)))?;

        let parameters = json!({
            "records": a.records.display().to_string(),
            "year": a.year,
            "social_model": a.social_model.display().to_string(),
            "semantic_model": a.semantic_model.display().to_string(),
            "bandwidth": a.bandwidth,
            "bins": a.bins,
        });
        Ok((parameters, None))
    })
}

const PROFILE_COLUMNS: [&str; 8] = [
    "entity",
    "year",
    "r_social",
    "theta_social",
    "r_semantic",
    "theta_semantic",
    "representative_code",
    "angular_entropy",
];

fn write_profiles_csv(profiles: &[EntityProfile], path: &Path) -> Result<()> {
    let mut wtr = csv::Writer::from_path(path)
        .map_err(|e| Error::data(format!("cannot write {}: {e}", path.display())))?;
    wtr.write_record(PROFILE_COLUMNS)
        .map_err(|e| Error::data(format!("csv write failed: {e}")))?;
    for p in profiles {
        let (r_s, th_s) = p.social_position.to_polar();
        let (r_c, th_c) = p.semantic_position.to_polar();
        wtr.write_record([
            p.entity.as_str(),
            &p.year.to_string(),
            &format!("{r_s}"),
            &format!("{th_s}"),
            &format!("{r_c}"),
            &format!("{th_c}"),
            p.representative_code.as_str(),
            &format!("{}", p.angular_entropy),
        ])
        .map_err(|e| Error::data(format!("csv write failed: {e}")))?;
    }
    wtr.flush().map_err(|e| Error::io(path.display().to_string(), e))?;
    Ok(())
}

struct ProfileRow {
    r_social: f64,
    theta_social: f64,
    r_semantic: f64,
    theta_semantic: f64,
}

fn read_profiles_csv(path: &Path) -> Result<BTreeMap<String, ProfileRow>> {
    let mut rdr = csv::Reader::from_path(path)
        .map_err(|e| Error::data(format!("cannot read {}: {e}", path.display())))?;
    let header = rdr
        .headers()
        .map_err(|e| Error::data(format!("{}: {e}", path.display())))?;
    if header.iter().ne(PROFILE_COLUMNS) {
        return Err(Error::data(format!(
            "{}: unexpected profile columns",
            path.display()
        )));
    }
    let mut rows = BTreeMap::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| Error::data(format!("{} row {}: {e}", path.display(), i + 2)))?;
        let field = |k: usize| -> Result<f64> {
            rec[k].parse().map_err(|_| {
                Error::data(format!("{} row {}: bad number", path.display(), i + 2))
            })
        };
        rows.insert(
            rec[0].to_string(),
            ProfileRow {
                r_social: field(2)?,
                theta_social: field(3)?,
                r_semantic: field(4)?,
                theta_semantic: field(5)?,
            },
        );
    }
    Ok(rows)
}

struct YearData {
    profiles: BTreeMap<String, ProfileRow>,
    social: DistanceMatrix,
    semantic: DistanceMatrix,
}

pub fn analyze(a: AnalyzeArgs) -> Result<()> {
    run_stage(&a.out, "analyze", |stage| {
        let years = discover_profile_years(&a.profiles_dir)?;
        if years.len() < 3 {
            return Err(Error::data(format!(
                "need profiles for at least 3 years in {}, found {}",
                a.profiles_dir.display(),
                years.len()
            )));
        }
        let mut per_year = Vec::with_capacity(years.len());
        for &year in &years {
            per_year.push(load_year(stage, &a.profiles_dir, year)?);
        }

        let mut common: BTreeSet<String> = per_year[0].profiles.keys().cloned().collect();
        for data in &per_year[1..] {
            common.retain(|e| data.profiles.contains_key(e));
        }
        let entities: Vec<String> = common.into_iter().collect();
        if entities.len() < 2 {
            return Err(Error::data(
                "need at least 2 entities present in every profiled year".to_string(),
            ));
        }

        let t_axis: Vec<f64> = years.iter().map(|&y| y as f64).collect();
        let series = collect_series(&entities, &per_year)?;

        let mut slope_rows = Vec::with_capacity(series.pairs.len());
        for (idx, (ea, eb)) in series.pairs.iter().enumerate() {
            let (beta_social, _, _) = ols_slope(&t_axis, &series.soc_dist[idx])?;
            let (beta_semantic, _, _) = ols_slope(&t_axis, &series.sem_dist[idx])?;
            slope_rows.push(SlopePair {
                pair: (ea.clone(), eb.clone()),
                beta_social,
                beta_semantic,
            });
        }
        write_slopes_csv(&slope_rows, &stage.create("slopes.csv"))?;

        let beta_social: Vec<f64> = slope_rows.iter().map(|s| s.beta_social).collect();
        let beta_semantic: Vec<f64> = slope_rows.iter().map(|s| s.beta_semantic).collect();
        let (r, p) = pearson(&beta_social, &beta_semantic)?;
        write_csv_rows(
            &stage.create("slope_correlation.csv"),
            &["r", "p", "n_pairs"],
            &[vec![
                format!("{r}"),
                format!("{p}"),
                slope_rows.len().to_string(),
            ]],
        )?;

        let binned = bin_means(&beta_social, &beta_semantic, a.bins)?;
        write_csv_rows(
            &stage.create("binned.csv"),
            &["bin_center", "mean", "count"],
            &binned
                .iter()
                .map(|(c, m, n)| vec![format!("{c}"), format!("{m}"), n.to_string()])
                .collect::<Vec<_>>(),
        )?;

        let include_ar = !a.no_ar;
        let directions = [
            ("distance", &series.soc_dist, &series.sem_dist),
            ("angle", &series.soc_ang, &series.sem_ang),
            ("radius", &series.soc_rad, &series.sem_rad),
            ("mean-distance", &series.soc_mean, &series.sem_mean),
        ];
        let mut tally_rows = Vec::new();
        for (name, soc, sem) in directions {
            for (label, xs, ys) in [
                (format!("{name} social->semantic"), soc, sem),
                (format!("{name} semantic->social"), sem, soc),
            ] {
                let pairs: Vec<(Vec<f64>, Vec<f64>)> = xs
                    .iter()
                    .zip(ys)
                    .map(|(x, y)| (x.clone(), y.clone()))
                    .collect();
                let tally = granger_tally(&label, &pairs, a.alpha, include_ar)?;
                tally_rows.push(vec![
                    tally.direction.clone(),
                    tally.n_regressions.to_string(),
                    format!("{}", tally.pct_positive_significant()),
                    format!("{}", tally.alpha),
                    tally.excluded.to_string(),
                    tally
                        .pct_positive_among_significant()
                        .map(|v| format!("{v}"))
                        .unwrap_or_default(),
                ]);
            }
        }
        write_csv_rows(
            &stage.create("granger.csv"),
            &[
                "direction",
                "n",
                "pct_positive_significant",
                "alpha",
                "excluded",
                "pct_positive_among_significant",
            ],
            &tally_rows,
        )?;

        let parameters = json!({
            "profiles_dir": a.profiles_dir.display().to_string(),
            "years": format!("{}..{}", years[0], years[years.len() - 1]),
            "bins": a.bins,
            "alpha": a.alpha,
            "autoregressive_term": include_ar,
        });
        Ok((parameters, None))
    })
}

fn discover_profile_years(dir: &Path) -> Result<Vec<i32>> {
    let entries =
        std::fs::read_dir(dir).map_err(|e| Error::io(dir.display().to_string(), e))?;
    let mut years = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(dir.display().to_string(), e))?;
        let name = entry.file_name().to_string_lossy().into_owned();
        if let Some(year) = name
            .strip_prefix("profiles_")
            .and_then(|rest| rest.strip_suffix(".csv"))
            .and_then(|y| y.parse::<i32>().ok())
        {
            years.push(year);
        }
    }
    years.sort_unstable();
    Ok(years)
}

fn load_year(stage: &mut Stage, dir: &Path, year: i32) -> Result<YearData> {
    let profiles_path = dir.join(format!("profiles_{year}.csv"));
    let social_path = dir.join(format!("social_distances_{year}.csv"));
    let semantic_path = dir.join(format!("semantic_distances_{year}.csv"));
    stage.record_input(&profiles_path)?;
    stage.record_input(&social_path)?;
    stage.record_input(&semantic_path)?;
    Ok(YearData {
        profiles: read_profiles_csv(&profiles_path)?,
        social: DistanceMatrix::read_csv(&social_path)?,
        semantic: DistanceMatrix::read_csv(&semantic_path)?,
    })
}

/// Aligned per-pair and per-entity yearly series for the analysis stage.
struct SeriesSet {
    pairs: Vec<(String, String)>,
    soc_dist: Vec<Vec<f64>>,
    sem_dist: Vec<Vec<f64>>,
    soc_ang: Vec<Vec<f64>>,
    sem_ang: Vec<Vec<f64>>,
    soc_rad: Vec<Vec<f64>>,
    sem_rad: Vec<Vec<f64>>,
    soc_mean: Vec<Vec<f64>>,
    sem_mean: Vec<Vec<f64>>,
}

fn collect_series(entities: &[String], per_year: &[YearData]) -> Result<SeriesSet> {
    let n = entities.len();
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((entities[i].clone(), entities[j].clone()));
        }
    }
    let n_pairs = pairs.len();
    let blank = || vec![Vec::with_capacity(per_year.len()); n_pairs];
    let mut set = SeriesSet {
        pairs,
        soc_dist: blank(),
        sem_dist: blank(),
        soc_ang: blank(),
        sem_ang: blank(),
        soc_rad: blank(),
        sem_rad: blank(),
        soc_mean: vec![Vec::with_capacity(per_year.len()); n],
        sem_mean: vec![Vec::with_capacity(per_year.len()); n],
    };
    for data in per_year {
        for (idx, (ea, eb)) in set.pairs.iter().enumerate() {
            let pa = &data.profiles[ea];
            let pb = &data.profiles[eb];
            set.soc_dist[idx].push(data.social.by_id(ea, eb)?);
            set.sem_dist[idx].push(data.semantic.by_id(ea, eb)?);
            set.soc_ang[idx].push(angular_separation(pa.theta_social, pb.theta_social));
            set.sem_ang[idx].push(angular_separation(pa.theta_semantic, pb.theta_semantic));
            set.soc_rad[idx].push((pa.r_social - pb.r_social).abs());
            set.sem_rad[idx].push((pa.r_semantic - pb.r_semantic).abs());
        }
        for (i, entity) in entities.iter().enumerate() {
            let mut soc = 0.0;
            let mut sem = 0.0;
            for other in entities.iter().filter(|o| *o != entity) {
                soc += data.social.by_id(entity, other)?;
                sem += data.semantic.by_id(entity, other)?;
            }
            set.soc_mean[i].push(soc / (n - 1) as f64);
            set.sem_mean[i].push(sem / (n - 1) as f64);
        }
    }
    Ok(set)
}

fn write_slopes_csv(rows: &[SlopePair], path: &Path) -> Result<()> {
    write_csv_rows(
        path,
        &["a", "b", "beta_social", "beta_semantic"],
        &rows
            .iter()
            .map(|s| {
                vec![
                    s.pair.0.clone(),
                    s.pair.1.clone(),
                    format!("{}", s.beta_social),
                    format!("{}", s.beta_semantic),
                ]
            })
            .collect::<Vec<_>>(),
    )
}

fn write_csv_rows(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut wtr = csv::Writer::from_path(path)
        .map_err(|e| Error::data(format!("cannot write {}: {e}", path.display())))?;
    wtr.write_record(header)
        .map_err(|e| Error::data(format!("csv write failed: {e}")))?;
    for row in rows {
        wtr.write_record(row)
            .map_err(|e| Error::data(format!("csv write failed: {e}")))?;
    }
    wtr.flush().map_err(|e| Error::io(path.display().to_string(), e))?;
    Ok(())
}

pub fn info_demo(a: InfoDemoArgs) -> Result<()> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_path(&a.joint)
        .map_err(|e| Error::data(format!("cannot read {}: {e}", a.joint.display())))?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec =
            rec.map_err(|e| Error::data(format!("{} row {}: {e}", a.joint.display(), i + 1)))?;
        let row: Vec<f64> = rec
            .iter()
            .map(|v| {
                v.trim().parse().map_err(|_| {
                    Error::data(format!(
                        "{} row {}: bad probability {v}",
                        a.joint.display(),
                        i + 1
                    ))
                })
            })
            .collect::<Result<_>>()?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(Error::data(format!(
                    "{} row {}: ragged table",
                    a.joint.display(),
                    i + 1
                )));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::data(format!("{} is empty", a.joint.display())));
    }
    let nx = rows.len();
    let ny = rows[0].len();
    let joint = JointDistribution::new(
        vec!["X".to_string(), "Y".to_string()],
        vec![nx, ny],
        rows.into_iter().flatten().collect(),
    )?;
    let (base, label) = match a.base {
        BaseArg::Bits => (LogBase::Two, "bits"),
        BaseArg::Nats => (LogBase::E, "nats"),
    };
    let hx = joint.marginal(&["X"])?.entropy(base);
    let hy = joint.marginal(&["Y"])?.entropy(base);
    let hxy = joint.entropy(base);
    let mi = mutual_information(&joint, base)?;
    let hx_given_y = conditional_entropy(&joint, "X", "Y", base)?;
    let hy_given_x = conditional_entropy(&joint, "Y", "X", base)?;
    println!("base: {label}");
    println!("H(X) = {hx}");
    println!("H(Y) = {hy}");
    println!("H(X,Y) = {hxy}");
    println!("I(X;Y) = {mi}");
    println!("H(X|Y) = {hx_given_y}");
    println!("H(Y|X) = {hy_given_x}");
    Ok(())
}

pub fn report(a: ReportArgs) -> Result<()> {
    if a.model.is_none() && a.binned.is_none() && a.slopes.is_none() {
        return Err(Error::usage(
            "report needs at least one of --model, --binned, --slopes".to_string(),
        ));
    }
    run_stage(&a.out, "report", |stage| {
        if let Some(path) = &a.model {
            stage.record_input(path)?;
            let model = EmbeddingModel::load(path)?;
            let out = stage.create("disk.svg");
            std::fs::write(&out, svg::disk_svg(&model))
                .map_err(|e| Error::io(out.display().to_string(), e))?;
        }
        if let Some(path) = &a.binned {
            stage.record_input(path)?;
            let points = read_xy_csv(path, &["bin_center", "mean", "count"])?;
            let out = stage.create("binned.svg");
            std::fs::write(&out, svg::scatter_svg(&points, "bin center", "bin mean"))
                .map_err(|e| Error::io(out.display().to_string(), e))?;
        }
        if let Some(path) = &a.slopes {
            stage.record_input(path)?;
            let points = read_slope_points(path)?;
            let out = stage.create("slopes.svg");
            std::fs::write(
                &out,
                svg::scatter_svg(&points, "social slope", "semantic slope"),
            )
            .map_err(|e| Error::io(out.display().to_string(), e))?;
        }
        let parameters = json!({
            "model": a.model.as_ref().map(|p| p.display().to_string()),
            "binned": a.binned.as_ref().map(|p| p.display().to_string()),
            "slopes": a.slopes.as_ref().map(|p| p.display().to_string()),
        });
        Ok((parameters, None))
    })
}

/// Read the first two columns of a CSV with the given header as (x, y) pairs.
fn read_xy_csv(path: &Path, expect_header: &[&str]) -> Result<Vec<(f64, f64)>> {
    let mut rdr = csv::Reader::from_path(path)
        .map_err(|e| Error::data(format!("cannot read {}: {e}", path.display())))?;
    let header = rdr
        .headers()
        .map_err(|e| Error::data(format!("{}: {e}", path.display())))?;
    if header.iter().ne(expect_header.iter().copied()) {
        return Err(Error::data(format!(
            "{}: expected columns {}",
            path.display(),
            expect_header.join(",")
        )));
    }
    let mut points = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| Error::data(format!("{} row {}: {e}", path.display(), i + 2)))?;
        let parse = |k: usize| -> Result<f64> {
            rec[k].parse().map_err(|_| {
                Error::data(format!("{} row {}: bad number", path.display(), i + 2))
            })
        };
        points.push((parse(0)?, parse(1)?));
    }
    if points.is_empty() {
        return Err(Error::data(format!("{} has no data rows", path.display())));
    }
    Ok(points)
}

fn read_slope_points(path: &Path) -> Result<Vec<(f64, f64)>> {
    let mut rdr = csv::Reader::from_path(path)
        .map_err(|e| Error::data(format!("cannot read {}: {e}", path.display())))?;
    let header = rdr
        .headers()
        .map_err(|e| Error::data(format!("{}: {e}", path.display())))?;
    if header.iter().ne(["a", "b", "beta_social", "beta_semantic"]) {
        return Err(Error::data(format!(
            "{}: expected slope columns a,b,beta_social,beta_semantic",
            path.display()
        )));
    }
    let mut points = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| Error::data(format!("{} row {}: {e}", path.display(), i + 2)))?;
        let parse = |k: usize| -> Result<f64> {
            rec[k].parse().map_err(|_| {
                Error::data(format!("{} row {}: bad number", path.display(), i + 2))
            })
        };
        points.push((parse(2)?, parse(3)?));
    }
    if points.is_empty() {
        return Err(Error::data(format!("{} has no data rows", path.display())));
    }
    Ok(points)
}
