//! From publication records to the three derived networks: coauthorship,
//! institution aggregation (self-loops for same-institution pairs), and
//! subject-code co-occurrence.
//!
//! Run: cargo run -p disknet --example coauthor_pipeline

use disknet::networks::{
    affiliation_map, aggregate_to_institutions, build_coauthor_graph, build_cooccurrence_graph,
    select_top_institutions, Authorship, PublicationRecord,
};

fn record(id: &str, year: i32, authors: &[(&str, &str)], codes: &[&str]) -> PublicationRecord {
    PublicationRecord {
        id: id.to_string(),
        year,
        authors: authors
            .iter()
            .map(|(a, inst)| Authorship {
                author: a.to_string(),
                institution: Some(inst.to_string()),
            })
            .collect(),
        codes: codes.iter().map(|c| c.to_string()).collect(),
        abstract_text: String::new(),
    }
}

fn main() {
    let records = vec![
        record("r1", 2004, &[("ana", "alpha"), ("bo", "alpha")], &["03.65", "05.30"]),
        record("r2", 2004, &[("ana", "alpha"), ("carla", "beta")], &["03.65"]),
        record("r3", 2004, &[("bo", "alpha"), ("dede", "gamma")], &["42.50", "03.65"]),
        record("r4", 2004, &[("carla", "beta"), ("dede", "gamma")], &["42.50"]),
        record("r5", 2005, &[("ana", "alpha"), ("dede", "gamma")], &["05.30"]),
    ];

    let authors = build_coauthor_graph(&records, 2004);
    println!("coauthors 2004:");
    for (a, b, w) in authors.edges() {
        println!("  {a} - {b}: {w}");
    }

    let aff = affiliation_map(&records, 2004);
    let institutions = aggregate_to_institutions(&authors, &aff).unwrap();
    println!("\ninstitutions 2004 (same-institution pairs fold into self-loops):");
    for (a, b, w) in institutions.edges() {
        println!("  {a} - {b}: {w}");
    }

    let top = select_top_institutions(&[institutions], 2);
    println!("\ntop 2 by incident weight: {top:?}");

    let codes = build_cooccurrence_graph(&records);
    println!("\ncode co-occurrence, pooled over all years:");
    for (a, b, w) in codes.edges() {
        println!("  {a} - {b}: {w}");
    }
}
