//! Read codes in the three notations and write them back.
//!
//!     cargo run --example code_files

use neucode::format::{emit_code, parse_code, parse_complex};

fn main() -> neucode::Result<()> {
    let binary = "# words as indicator vectors\n1110\n0111\n1100\n";
    let compact = "2345\n123\n134\n145\n13\n14\n23\n34\n45\n3\n4\n0\n";
    let spaced = "n = 12\n1, 10\n11 12\n{3,4}\nempty\n";
    for text in [binary, compact, spaced] {
        let code = parse_code(text, None)?;
        println!("{code}  (n = {}, sparsity {})", code.ambient_n(), code.sparsity());
        let again = parse_code(&emit_code(&code), None)?;
        assert_eq!(again, code);
    }
    match parse_code("1100\n1 2\n", None) {
        Err(e) => println!("mixed notation: {e}"),
        Ok(c) => println!("unexpected {c}"),
    }
    let cx = parse_complex("123\n34\n", None)?;
    println!("complex {cx}, f-vector {:?}", cx.f_vector());
    Ok(())
}
