//! The arrangement realization: cells, regions and the codes read back off.
//!
//!     cargo run --example realization

use neucode::realization::{
    cell_count, cell_in_open_set, code_complex_realization, enumerate_cells, realized_code_from_closures,
    realized_code_from_u,
};
use neucode::{instances, Face};

fn main() -> neucode::Result<()> {
    for n in 1..=6 {
        print!("n={n}: {} cells ", cell_count(n));
    }
    println!();

    let code = instances::closed_variant_code();
    println!("code {code}");
    let real = code_complex_realization(&code);
    for i in 1..=code.ambient_n() {
        let faces: Vec<String> = real.faces_of(i).iter().map(Face::to_string).collect();
        println!("  U_{i} is built from faces {}", faces.join(" "));
    }
    let in_u1 = enumerate_cells(code.ambient_n())?
        .filter(|c| cell_in_open_set(&code, c, 1))
        .count();
    println!("  cells in U_1: {in_u1}");
    println!("  open sets realize   {}", realized_code_from_u(&code)?);
    println!("  closed sets realize {}", realized_code_from_closures(&code)?);

    let mismatches = instances::all_codes(3)
        .filter(|c| realized_code_from_u(c).map(|r| r != c.without_empty()).unwrap_or(true))
        .count();
    println!("all 127 codes on 3 neurons: {mismatches} mismatches");
    Ok(())
}
