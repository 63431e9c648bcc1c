//! The copies-around-a-hub construction, and the full report renderer.
//!
//! Take any connected base graph and a packet count k. Make k copies of the
//! base; in copy i, one designated vertex holds everything and the rest
//! hold everything except packet i; a hub adjacent to each designated
//! vertex holds nothing. Spreading packet i through copy i is then exactly
//! a broadcast-domination problem on the base — schedule quality tracks
//! dominating-set quality, which is why no polynomial scheduler can promise
//! better than a logarithmic factor on general graphs.
//!
//! Run with: cargo run --example hardness_family

use coopx::error::Result;
use coopx::generators::{hardness_instance, named_graph};
use coopx::report::{instance_report, render_human, ReportOptions};

fn main() -> Result<()> {
    let base = named_graph("cycle(5)")?;
    let inst = hardness_instance(&base, 2)?;
    println!(
        "base cycle(5), k = 2: instance on {} vertices ({} copies + hub)\n",
        inst.n(),
        inst.k(),
    );

    let report = instance_report(&inst, &ReportOptions::default())?;
    print!("{}", render_human(&report));
    assert!(report.all_checks_passed);

    // the same construction over other bases, schedule lengths only
    println!();
    for (base_name, k) in [("path(3)", 2), ("path(3)", 3), ("k23_plus_edge", 2)] {
        let base = named_graph(base_name)?;
        let inst = hardness_instance(&base, k)?;
        let report = instance_report(&inst, &ReportOptions::default())?;
        let lengths: Vec<String> = report
            .schedules
            .iter()
            .map(|s| format!("{} {}", s.algorithm, s.length))
            .collect();
        println!(
            "base {base_name}, k={k}: n={}, {}",
            report.instance.n,
            lengths.join(", "),
        );
    }
    Ok(())
}
