//! The coopx-v1 interchange formats: instance and schedule JSON, and the
//! per-round rank trace as CSV.
//!
//! Instances round-trip through full re-validation — a file that names a
//! packet nobody holds, or an edge outside the vertex range, is rejected on
//! read with the same errors the constructors raise.
//!
//! Run with: cargo run --example file_formats

use std::collections::BTreeSet;

use coopx::error::Result;
use coopx::generators::named_graph;
use coopx::instance::Instance;
use coopx::io;
use coopx::scheduler::{baseline_schedule, SetGrade};
use coopx::simulator::simulate;

fn main() -> Result<()> {
    let g = named_graph("path(4)")?;
    let holdings: Vec<BTreeSet<usize>> = vec![
        [0, 1].into_iter().collect(),
        BTreeSet::new(),
        BTreeSet::new(),
        BTreeSet::new(),
    ];
    let inst = Instance::new(g, 2, holdings)?;

    let json = io::instance_to_json(&inst)?;
    println!("instance JSON:\n{json}");
    let parsed = io::instance_from_json(&json)?;
    assert_eq!(parsed.k(), inst.k());
    assert_eq!(parsed.graph().edges(), inst.graph().edges());

    // a tampered file fails validation on read
    let broken = json.replace("\"k\": 2", "\"k\": 1");
    assert!(io::instance_from_json(&broken).is_err());
    println!("tampered copy (k lowered below a held packet) is rejected\n");

    let schedule = baseline_schedule(&inst, SetGrade::Greedy)?.schedule;
    let schedule_json = io::schedule_to_json(&schedule)?;
    println!("schedule JSON:\n{schedule_json}");
    let replayed = io::schedule_from_json(&schedule_json)?;
    assert_eq!(replayed, schedule);

    let trace = simulate(&inst, &schedule)?;
    println!("rank trace CSV:\n{}", io::trace_to_csv(&trace));

    Ok(())
}
