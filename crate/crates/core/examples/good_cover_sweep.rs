//! Compare locally-good verdicts with good-cover checks on every small code.
//!
//!     cargo run --release --example good_cover_sweep -- 3

use std::collections::BTreeMap;

use neucode::realization::good_cover_check;
use neucode::{instances, AnalysisConfig, Analyzer, Verdict};

fn main() -> neucode::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let analyzer = Analyzer::new(AnalysisConfig::default())?;
    let mut table: BTreeMap<(String, String), usize> = BTreeMap::new();
    let mut total = 0;
    for code in instances::all_codes(n.clamp(1, 3)) {
        let good = analyzer.is_locally_good(&code)?.value;
        let cover = good_cover_check(&code, &analyzer)?.value;
        *table.entry((good.to_string(), cover.to_string())).or_default() += 1;
        total += 1;
        if (good == Verdict::Yes) != (cover == Verdict::Yes) {
            println!("disagreement on {code}");
        }
    }
    println!("{total} codes");
    for ((good, cover), count) in table {
        println!("  locally good {good:<7} good cover {cover:<7} {count}");
    }
    Ok(())
}
