//! Round lower bounds assembled from the covering relaxations.
//!
//! Each bound comes with a hypothesis: one needs pairwise-disjoint holdings,
//! one needs a regular graph, the others hold unconditionally. The report
//! records which hypotheses an instance satisfies, evaluates every
//! applicable bound exactly, and takes the best.
//!
//! Run with: cargo run --example lower_bounds

use std::collections::BTreeSet;

use coopx::bounds::lower_bounds;
use coopx::error::Result;
use coopx::generators::{counterexample_instance, named_graph};
use coopx::instance::Instance;
use coopx::rational::decimal6;

fn show(title: &str, inst: &Instance) -> Result<()> {
    println!("{title} (n={}, k={}):", inst.n(), inst.k());
    let report = lower_bounds(inst)?;
    for entry in &report.entries {
        if entry.applicable {
            println!("  {:<34} {}", entry.label, decimal6(&entry.value));
        } else {
            println!(
                "  {:<34} not applicable ({})",
                entry.label,
                entry.note.as_deref().unwrap_or("hypothesis fails"),
            );
        }
    }
    println!(
        "  best: {} = {}, so at least {} round(s)\n",
        report.best_label,
        decimal6(&report.best),
        report.best_rounds,
    );
    Ok(())
}

fn main() -> Result<()> {
    // a cycle with one packet per vertex: disjoint and regular, so every
    // hypothesis-gated bound applies
    let g = named_graph("cycle(6)")?;
    let holdings: Vec<BTreeSet<usize>> = (0..6).map(|v| [v].into_iter().collect()).collect();
    let inst = Instance::new(g, 6, holdings)?;
    show("cycle(6), one packet per vertex", &inst)?;

    // the same cycle with overlapping holdings: the disjointness gate closes
    let g = named_graph("cycle(6)")?;
    let holdings: Vec<BTreeSet<usize>> = (0..6)
        .map(|v| [v % 3, (v + 1) % 3].into_iter().collect())
        .collect();
    let inst = Instance::new(g, 3, holdings)?;
    show("cycle(6), overlapping holdings", &inst)?;

    // the gap construction is irregular: the average-based bound is gated
    // off, and the unconditional augmented cover does the work
    let inst = counterexample_instance(2, 3)?;
    show("gap construction m=2, k=3", &inst)?;

    Ok(())
}
