//! Tally verdicts over seeded random codes.
//!
//!     cargo run --release --example random_survey -- 5 500 0.3

use std::collections::BTreeMap;

use neucode::{instances, AnalysisConfig, Analyzer};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> neucode::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let count: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(300);
    let density: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(0.3);
    let analyzer = Analyzer::new(AnalysisConfig::default())?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut table: BTreeMap<String, usize> = BTreeMap::new();
    let mut max_int = 0;
    for _ in 0..count {
        let code = instances::random_code(&mut rng, n.clamp(1, 12), density);
        let r = analyzer.classify(&code)?;
        max_int += usize::from(r.max_intersection_complete);
        *table
            .entry(format!("good {:<7} great {}", r.locally_good.value, r.locally_great.value))
            .or_default() += 1;
    }
    println!("{count} random codes on {n} neurons, word density {density}");
    for (k, v) in &table {
        println!("  {k:<28} {v}");
    }
    println!("  max-intersection complete   {max_int}");
    Ok(())
}
