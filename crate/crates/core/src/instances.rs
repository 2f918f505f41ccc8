//! Named codes and complexes from the literature, plus seeded random
//! families and exhaustive enumerations used by tests and experiments.

use rand::Rng;

use crate::code::Code;
use crate::complex::SimplicialComplex;
use crate::face::Face;

fn complex(n: u32, facets: &[&str]) -> SimplicialComplex {
    SimplicialComplex::from_faces(n, facets.iter().map(|w| Face::digits(w))).expect("valid fixture")
}

/// `{123,234,12,23,13,24,34,1,2,3,4}`: convex, realized by four discs.
pub fn intro_code() -> Code {
    Code::from_digits(
        4,
        &["123", "234", "12", "23", "13", "24", "34", "1", "2", "3", "4"],
    )
}

/// `{123,12,23,1,2}`: locally good.
pub fn locally_good_example() -> Code {
    Code::from_digits(3, &["123", "12", "23", "1", "2"])
}

/// `{13,23,1}`: the link of the missing word 3 is two points.
pub fn not_locally_good_example() -> Code {
    Code::from_digits(3, &["13", "23", "1"])
}

/// `{124,134,234,14,24,34,∅}`: connected, but 4 is a missing mandatory word.
pub fn connected_not_goodcover() -> Code {
    Code::from_digits(4, &["124", "134", "234", "14", "24", "34", "0"])
}

/// `{2345,123,134,145,13,14,23,34,45,3,4}`: a good-cover code on five
/// neurons that is not convex.
pub fn counterexample() -> Code {
    Code::from_digits(
        5,
        &["2345", "123", "134", "145", "13", "14", "23", "34", "45", "3", "4"],
    )
}

/// `{1,12,13}`: closing the open realization adds the word 123.
pub fn closed_variant_code() -> Code {
    Code::from_digits(3, &["1", "12", "13"])
}

/// All proper subsets of `[n]`, including `∅`. Its complex is the boundary of
/// the `(n-1)`-simplex.
pub fn proper_subsets_code(n: u32) -> Code {
    let full = Face::full(n);
    Code::new(n, full.subsets().filter(|s| *s != full)).expect("n is in range")
}

pub fn triangle_boundary() -> SimplicialComplex {
    complex(3, &["12", "13", "23"])
}

pub fn tetrahedron_boundary() -> SimplicialComplex {
    complex(4, &["123", "124", "134", "234"])
}

/// An 8-vertex, 17-triangle triangulation of the dunce hat: contractible,
/// acyclic over every field, and without a single free face.
pub fn dunce_hat() -> SimplicialComplex {
    complex(
        8,
        &[
            "124", "125", "127", "136", "137", "138", "145", "168", "235", "236", "238", "248",
            "267", "345", "347", "467", "468",
        ],
    )
}

/// The 6-vertex, 10-triangle real projective plane.
pub fn rp2() -> SimplicialComplex {
    complex(
        6,
        &[
            "123", "134", "145", "156", "126", "235", "245", "246", "346", "356",
        ],
    )
}

/// Every code on `n` neurons made of nonempty words, excluding the empty
/// code: `2^(2^n - 1) - 1` codes in increasing bit-pattern order.
pub fn all_codes(n: u32) -> impl Iterator<Item = Code> {
    assert!((1..=4).contains(&n), "exhaustive enumeration only for n <= 4");
    let words: Vec<Face> = (1..(1u64 << n)).map(Face::from_bits).collect();
    let total = 1u64 << words.len();
    (1..total).map(move |pattern| {
        Code::new(
            n,
            words
                .iter()
                .enumerate()
                .filter(|(i, _)| pattern >> i & 1 == 1)
                .map(|(_, w)| *w),
        )
        .expect("words fit")
    })
}

/// A random code on `n` neurons: each nonempty word is kept with probability
/// `density`. Never returns an empty code.
pub fn random_code<R: Rng>(rng: &mut R, n: u32, density: f64) -> Code {
    loop {
        let words: Vec<Face> = (1..(1u64 << n))
            .map(Face::from_bits)
            .filter(|_| rng.gen_bool(density))
            .collect();
        if !words.is_empty() {
            return Code::new(n, words).expect("words fit");
        }
    }
}

/// A random complex on at most `n` vertices generated by `facets` random
/// faces of size between 1 and `max_size`.
pub fn random_complex<R: Rng>(rng: &mut R, n: u32, facets: usize, max_size: u32) -> SimplicialComplex {
    let max_size = max_size.clamp(1, n);
    let gens: Vec<Face> = (0..facets.max(1))
        .map(|_| {
            let size = rng.gen_range(1..=max_size);
            let mut f = Face::EMPTY;
            while f.len() < size as usize {
                f = f.with(rng.gen_range(1..=n));
            }
            f
        })
        .collect();
    SimplicialComplex::from_faces(n, gens).expect("faces fit")
}

/// Every complex on `1..=n` with at least one vertex, one per antichain of
/// nonempty faces.
pub fn all_complexes(n: u32) -> Vec<SimplicialComplex> {
    assert!((1..=4).contains(&n), "antichain enumeration only for n <= 4");
    let faces: Vec<Face> = (1..(1u64 << n)).map(Face::from_bits).collect();
    let mut out = Vec::new();
    for pattern in 1u64..(1u64 << faces.len()) {
        let chosen: Vec<Face> = faces
            .iter()
            .enumerate()
            .filter(|(i, _)| pattern >> i & 1 == 1)
            .map(|(_, f)| *f)
            .collect();
        let antichain = chosen.iter().all(|a| {
            chosen
                .iter()
                .all(|b| a == b || !a.is_subset(*b))
        });
        if antichain {
            out.push(SimplicialComplex::from_faces(n, chosen).expect("faces fit"));
        }
    }
    out
}
