//! Recomputes the frozen asymptotic constants from exact data.
//!
//! ```text
//! cargo run --release -p hhht --example calibrate_asymptotics
//! ```

use hhht::analysis::{asymptotic_table, RATIO_CALIBRATION_RANGE, RATIO_ERROR_CONSTANT};
use hhht::verify::SCALED_ERROR_BOUND;

fn main() -> Result<(), hhht::Error> {
    let (lo, hi) = RATIO_CALIBRATION_RANGE;
    let ns: Vec<usize> = (lo..=hi).collect();
    let records = asymptotic_table(&ns)?;

    let worst_ratio = records.iter().max_by(|a, b| a.scaled_ratio_error().total_cmp(&b.scaled_ratio_error())).unwrap();
    let worst_scaled = records.iter().max_by(|a, b| a.scaled_err.total_cmp(&b.scaled_err)).unwrap();

    println!("range {lo}..={hi}");
    println!(
        "max n|2 sqrt(n pi) D_n - 1| = {:.6} at n = {} (frozen C1 = {RATIO_ERROR_CONSTANT})",
        worst_ratio.scaled_ratio_error(),
        worst_ratio.n
    );
    println!(
        "max n^1.5 |D_n - leading|   = {:.6} at n = {} (frozen bound = {SCALED_ERROR_BOUND})",
        worst_scaled.scaled_err, worst_scaled.n
    );
    for r in records.iter().filter(|r| [100, 1000, 10_000].contains(&r.n)) {
        println!("n = {:>6}: ratio = {:.12}, n|ratio - 1| = {:.6}", r.n, r.ratio, r.scaled_ratio_error());
    }
    Ok(())
}
