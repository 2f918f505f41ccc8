//! A code that is not locally great but whose locally-good status stays open:
//! the cone over the dunce hat with its apex word removed.
//!
//!     cargo run --example locally_great_gap

use neucode::analysis::cone_minus_apex;
use neucode::collapse::free_pairs;
use neucode::homology::is_acyclic;
use neucode::report::describe_status;
use neucode::{instances, AnalysisConfig, Analyzer, StepMode};

fn main() -> neucode::Result<()> {
    let dh = instances::dunce_hat();
    println!("dunce hat f-vector {:?}", dh.f_vector());
    println!("free pairs: {}", free_pairs(&dh, StepMode::Collapse).len());
    println!("acyclic over F2, F3, F5, F7: {}", is_acyclic(&dh, &[2, 3, 5, 7])?);

    let (code, apex) = cone_minus_apex(&dh)?;
    println!("code on {} neurons, {} words, apex {apex}", code.ambient_n(), code.len());
    let analyzer = Analyzer::new(AnalysisConfig::default())?;
    let report = analyzer.classify(&code)?;
    print!("{}", describe_status("locally good", &report.locally_good));
    print!("{}", describe_status("locally great", &report.locally_great));

    // same construction over the triangle boundary: a sphere, so both fail
    let (code, _) = cone_minus_apex(&instances::triangle_boundary())?;
    let report = analyzer.classify(&code)?;
    println!(
        "triangle boundary cone: good {}, great {}",
        report.locally_good.value, report.locally_great.value
    );
    Ok(())
}
