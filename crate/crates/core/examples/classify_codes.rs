//! Classify the named codes and print the verdicts with their witnesses.
//!
//!     cargo run --example classify_codes

use neucode::{instances, AnalysisConfig, Analyzer, Code};

fn main() -> neucode::Result<()> {
    let analyzer = Analyzer::new(AnalysisConfig::default())?;
    let codes: [(&str, Code); 6] = [
        ("intro", instances::intro_code()),
        ("locally good", instances::locally_good_example()),
        ("not locally good", instances::not_locally_good_example()),
        ("connected", instances::connected_not_goodcover()),
        ("counterexample", instances::counterexample()),
        ("C_5", instances::proper_subsets_code(5)),
    ];
    println!("{:<18} {:>6} {:>6} {:>7}  mandatory", "code", "good", "great", "max-int");
    for (name, code) in codes {
        let r = analyzer.classify(&code)?;
        let witness = |s: &neucode::TriStatus| match s.witness {
            Some(w) if !s.is_yes() => format!("{}@{w}", s.value),
            _ => s.value.to_string(),
        };
        let missing: Vec<String> = r
            .mandatory
            .found
            .iter()
            .filter(|f| !code.contains(**f))
            .map(|f| f.to_string())
            .collect();
        println!(
            "{name:<18} {:>6} {:>6} {:>7}  missing: {}",
            witness(&r.locally_good),
            witness(&r.locally_great),
            r.max_intersection_complete,
            if missing.is_empty() { "-".to_string() } else { missing.join(" ") }
        );
    }
    Ok(())
}
