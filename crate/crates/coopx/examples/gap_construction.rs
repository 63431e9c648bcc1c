//! The covering optimum does not tell the whole story: a family where the
//! per-part covering bound stays flat while the uncoded cost grows.
//!
//! Take m cliques of size k (vertex j*k + i misses exactly packet i) plus
//! one clique of size m*k whose hub holds everything and whose other
//! members hold nothing, bridged through the hub. The closed covering
//! optimum of the small cliques is m, the big clique's is 1, yet the
//! construction's schedule spends 2m + k rounds: two per small clique plus
//! one hub broadcast per packet. Applying the regular-graphs-only average
//! bound to this irregular graph can claim more rounds than the schedule
//! uses — the regularity hypothesis is load-bearing.
//!
//! Run with: cargo run --example gap_construction

use coopx::error::Result;
use coopx::generators::{counterexample_instance, counterexample_parts};
use coopx::lp::{build_cover_program, solve_lp, CoverVariant};
use coopx::rational::{decimal6, rat_int};
use coopx::scheduler::counterexample_schedule;
use coopx::simulator::verify_complete;

fn main() -> Result<()> {
    println!("m  k  small-part  big-part  schedule  regular-claim");
    for m in 1..=4 {
        for k in [2usize, 3] {
            let inst = counterexample_instance(m, k)?;
            let (small, big) = counterexample_parts(m, k)?;

            let small_ds_f = solve_lp(&build_cover_program(&small, CoverVariant::DsF)?)?.value;
            let big_ds_f = solve_lp(&build_cover_program(&big, CoverVariant::DsF)?)?.value;
            assert_eq!(small_ds_f, rat_int(m as i64));
            assert_eq!(big_ds_f, rat_int(1));

            let schedule = counterexample_schedule(&inst)?;
            assert_eq!(schedule.len(), 2 * m + k);
            assert!(verify_complete(&inst, &schedule)?.complete);

            // what the average-degree bound would claim if regularity were
            // not required: (k - average holding) * closed cover
            let whole = solve_lp(&build_cover_program(inst.graph(), CoverVariant::DsF)?)?.value;
            let claim = (rat_int(k as i64) - inst.d_bar()) * &whole;
            let violated = claim > rat_int(schedule.len() as i64);

            println!(
                "{m}  {k}  {:>10} {:>9} {:>9}  {}{}",
                decimal6(&small_ds_f),
                decimal6(&big_ds_f),
                schedule.len(),
                decimal6(&claim),
                if violated {
                    "  <- exceeds the schedule!"
                } else {
                    ""
                },
            );
        }
    }
    println!("\nper-part covers stay at m and 1 while the schedule grows as 2m + k");
    Ok(())
}
