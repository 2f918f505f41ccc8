//! Search for collapses and replay the certificates.
//!
//!     cargo run --example collapse_certificates

use neucode::collapse::{free_pairs, is_collapsible, verify_certificate};
use neucode::{instances, Engine, Face, SimplicialComplex, StepMode};

fn main() -> neucode::Result<()> {
    let cx = |n, facets: &[&str]| SimplicialComplex::from_faces(n, facets.iter().map(|f| Face::digits(f)));
    let cases = [
        ("two triangles and a tail", cx(5, &["123", "234", "45"])?),
        ("filled tetrahedron minus a facet", cx(4, &["123", "124", "134"])?),
        ("triangle boundary", instances::triangle_boundary()),
        ("dunce hat", instances::dunce_hat()),
    ];
    for (name, complex) in &cases {
        println!("{name}: {complex}");
        println!("  free pairs: {}", free_pairs(complex, StepMode::Collapse).len());
        for engine in [Engine::Strict, Engine::Collapse] {
            let out = is_collapsible(complex, engine, 1_000_000)?;
            print!("  {engine:?}: {} after {} nodes", out.status, out.nodes_explored);
            if let Some(steps) = &out.certificate {
                let ok = verify_certificate(complex, steps, out.mode);
                print!(", {} steps, replay {}", steps.len(), if ok { "ok" } else { "FAILED" });
            }
            println!();
        }
        if let Some(steps) = is_collapsible(complex, Engine::Strict, 1_000_000)?.certificate {
            let shown: Vec<String> = steps.iter().map(|s| s.to_string()).collect();
            println!("  certificate: {}", shown.join(" "));
        }
    }
    Ok(())
}
