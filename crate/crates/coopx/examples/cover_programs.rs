//! The fractional covering programs over vertex neighborhoods, solved
//! exactly with certified rational arithmetic.
//!
//! Four variants share one shape — minimize the total weight subject to
//! every vertex seeing enough weight in its (closed or open) neighborhood:
//! closed/open unit-demand covers, and their demand-k scalings. The open
//! demand-k value always equals k times the open unit value, which this
//! example checks exactly on every catalog graph.
//!
//! Run with: cargo run --example cover_programs

use coopx::error::Result;
use coopx::generators::named_graph;
use coopx::lp::{build_cover_program, solve_lp, CoverVariant};
use coopx::rational::{decimal6, rat_int};

fn main() -> Result<()> {
    let g = named_graph("k23_plus_edge")?;
    println!("covering optima on k23_plus_edge:");
    for variant in [
        CoverVariant::DsF,
        CoverVariant::DsPlusF,
        CoverVariant::KDsF(2),
        CoverVariant::KDsPlusF(2),
    ] {
        let program = build_cover_program(&g, variant)?;
        let cover = solve_lp(&program)?;
        // the solver already verified the certificate; verify once more here
        // to show the call is available to downstream code
        cover.verify(&program)?;
        println!(
            "  {:<12} value {} ({})  weights {}",
            program.label(),
            cover.value,
            decimal6(&cover.value),
            cover
                .values
                .iter()
                .map(decimal6)
                .collect::<Vec<_>>()
                .join(" "),
        );
    }

    println!();
    println!("open-cover scaling identity, exact on every catalog graph:");
    for name in [
        "k23_plus_edge",
        "path(5)",
        "cycle(6)",
        "star(5)",
        "complete(4)",
    ] {
        let g = named_graph(name)?;
        let unit = solve_lp(&build_cover_program(&g, CoverVariant::DsPlusF)?)?.value;
        for k in [2usize, 3, 5] {
            let scaled = solve_lp(&build_cover_program(&g, CoverVariant::KDsPlusF(k))?)?.value;
            assert_eq!(scaled, rat_int(k as i64) * &unit);
        }
        println!(
            "  {name}: k-demand open cover = k * {} for k in {{2, 3, 5}}",
            unit
        );
    }

    Ok(())
}
