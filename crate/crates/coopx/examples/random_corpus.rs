//! A seeded random corpus pushed through the whole pipeline, with every
//! cross-check a report performs: constructed schedules complete, lower
//! bounds sit below schedule lengths, and where the exhaustive search fits,
//! the optima are sandwiched correctly.
//!
//! Run with: cargo run --example random_corpus

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use coopx::error::Result;
use coopx::generators::random_instance;
use coopx::report::{instance_report, sweep_header, sweep_row, ReportOptions};

fn main() -> Result<()> {
    let mut rng = ChaCha20Rng::seed_from_u64(42);
    let opts = ReportOptions {
        with_oracle: true,
        ..Default::default()
    };

    println!("{}", sweep_header());
    let mut all_passed = true;
    for i in 0..12 {
        let n = rng.gen_range(3..=6);
        let k = rng.gen_range(1..=3);
        let inst = random_instance(n, k, 0.4, 0.3, &mut rng)?;
        let report = instance_report(&inst, &opts)?;
        all_passed &= report.all_checks_passed;
        println!(
            "{}",
            sweep_row("random", &format!("seed=42;i={i};n={n};k={k}"), &report),
        );
    }

    assert!(all_passed, "every report must pass all of its checks");
    println!("\nall reports passed all checks");
    Ok(())
}
