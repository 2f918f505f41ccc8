//! Reduced Betti numbers over several prime fields.
//!
//!     cargo run --example homology

use neucode::homology::reduced_betti;
use neucode::{instances, Face, SimplicialComplex};

fn main() -> neucode::Result<()> {
    let cases = [
        ("point", SimplicialComplex::simplex(1, Face::digits("1"))?),
        ("{∅}", SimplicialComplex::empty_face_only(1)?),
        ("triangle boundary", instances::triangle_boundary()),
        ("tetrahedron boundary", instances::tetrahedron_boundary()),
        ("RP²", instances::rp2()),
        ("dunce hat", instances::dunce_hat()),
        ("cone over RP²", instances::rp2().cone(7)?),
    ];
    for (name, cx) in &cases {
        print!("{name:<22} f={:?}", cx.f_vector());
        for p in [2, 3, 5] {
            let b = reduced_betti(cx, p)?;
            print!("  F{p}:{:?}", b.reduced_betti);
            if b.reduced_betti_minus_one > 0 {
                print!("(β₋₁=1)");
            }
        }
        println!();
    }
    Ok(())
}
