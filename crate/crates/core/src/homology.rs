//! Reduced simplicial homology over small prime fields.
//!
//! Used only as a negative certificate: a nonzero reduced Betti number over
//! any field proves a complex is not contractible.

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;

/// Fields used when the caller does not pick any.
pub const DEFAULT_PRIMES: [u32; 3] = [2, 3, 5];

/// Reduced Betti numbers of a complex over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    pub field_characteristic: u32,
    /// `β̃_k` for `k = 0..=dim Δ`.
    pub reduced_betti: Vec<usize>,
    /// `β̃_{-1}`: 1 for the complex `{∅}`, otherwise 0.
    #[serde(skip_serializing_if = "is_zero")]
    pub reduced_betti_minus_one: usize,
}

fn is_zero(x: &usize) -> bool {
    *x == 0
}

impl BettiVector {
    pub fn is_zero(&self) -> bool {
        self.reduced_betti_minus_one == 0 && self.reduced_betti.iter().all(|&b| b == 0)
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn check_prime(p: u32) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Dense matrix over `F_p` with entries in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    pub p: u32,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    /// Product `self * other` over `F_p`.
    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let p = self.p as u64;
        let mut out = FpMatrix::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j) as u64;
                    out.set(i, j, ((cur + a * other.get(k, j) as u64) % p) as u32);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Rank by Gauss–Jordan elimination.
    pub fn rank(&self) -> usize {
        let p = self.p as u64;
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
                continue;
            };
            if pivot != rank {
                for j in 0..cols {
                    m.swap(pivot * cols + j, rank * cols + j);
                }
            }
            let inv = mod_pow(m[rank * cols + c] as u64, p - 2, p);
            for j in c..cols {
                m[rank * cols + j] = ((m[rank * cols + j] as u64 * inv) % p) as u32;
            }
            for r in 0..rows {
                let factor = m[r * cols + c] as u64;
                if r == rank || factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = factor * m[rank * cols + j] as u64 % p;
                    m[r * cols + j] = ((m[r * cols + j] as u64 + p - sub) % p) as u32;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Signed incidence of the `k`-faces (columns) on the `(k-1)`-faces (rows).
///
/// For `k = 0` this is the augmentation map onto the single `(-1)`-face `∅`,
/// which makes the resulting homology the reduced one.
pub fn boundary_matrix(complex: &SimplicialComplex, k: i32, p: u32) -> Result<FpMatrix> {
    check_prime(p)?;
    let dim = complex.dimension();
    if k < 0 || k > dim {
        return Err(Error::DimensionOutOfRange { k, dim });
    }
    let rows = complex.faces_of_dim(k - 1);
    let cols = complex.faces_of_dim(k);
    Ok(boundary_between(&rows, &cols, p))
}

fn boundary_between(rows: &[Face], cols: &[Face], p: u32) -> FpMatrix {
    let mut m = FpMatrix::zeros(p, rows.len(), cols.len());
    for (j, face) in cols.iter().enumerate() {
        for (i, v) in face.labels().enumerate() {
            let facet = face.without(v);
            let r = rows
                .binary_search(&facet)
                .expect("boundary face is present in a simplicial complex");
            let entry = if i % 2 == 0 { 1 } else { p - 1 };
            m.set(r, j, entry % p);
        }
    }
    m
}

/// Reduced Betti numbers over `F_p`.
pub fn reduced_betti(complex: &SimplicialComplex, p: u32) -> Result<BettiVector> {
    check_prime(p)?;
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let dim = complex.dimension();
    // chain groups for k = -1..=dim; index shifted by one
    let groups: Vec<Vec<Face>> = (-1..=dim).map(|k| complex.faces_of_dim(k)).collect();
    // ranks[k + 1] = rank of ∂_k : C_k -> C_{k-1}, for k = 0..=dim
    let mut ranks = vec![0usize; groups.len() + 1];
    for k in 0..=dim {
        let idx = (k + 1) as usize;
        ranks[idx] = boundary_between(&groups[idx - 1], &groups[idx], p).rank();
    }
    let betti_at = |idx: usize| groups[idx].len() - ranks[idx] - ranks[idx + 1];
    Ok(BettiVector {
        field_characteristic: p,
        reduced_betti: (1..groups.len()).map(betti_at).collect(),
        reduced_betti_minus_one: betti_at(0),
    })
}

/// True when every reduced Betti number vanishes over every listed prime.
pub fn is_acyclic(complex: &SimplicialComplex, primes: &[u32]) -> Result<bool> {
    Ok(first_nonzero_betti(complex, primes)?.is_none())
}

/// The first Betti vector (in `primes` order) with a nonzero entry.
pub fn first_nonzero_betti(
    complex: &SimplicialComplex,
    primes: &[u32],
) -> Result<Option<BettiVector>> {
    for &p in primes {
        let b = reduced_betti(complex, p)?;
        if !b.is_zero() {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    fn cx(n: u32, words: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_faces(n, words.iter().map(|w| Face::digits(w))).unwrap()
    }

    #[test]
    fn edge_boundary_over_f2() {
        let m = boundary_matrix(&cx(2, &["12"]), 1, 2).unwrap();
        assert_eq!((m.rows, m.cols), (2, 1));
        assert_eq!(m.data, vec![1, 1]);
    }

    #[test]
    fn triangle_boundary_columns_sum_to_zero() {
        let m = boundary_matrix(&cx(3, &["12", "13", "23"]), 1, 3).unwrap();
        assert_eq!((m.rows, m.cols), (3, 3));
        for c in 0..3 {
            let s: u32 = (0..3).map(|r| m.get(r, c)).sum();
            assert_eq!(s % 3, 0);
        }
    }

    #[test]
    fn solid_triangle_top_boundary() {
        let m = boundary_matrix(&cx(3, &["123"]), 2, 2).unwrap();
        assert_eq!((m.rows, m.cols), (3, 1));
        assert_eq!(m.data, vec![1, 1, 1]);
    }

    #[test]
    fn dimension_out_of_range() {
        assert_eq!(
            boundary_matrix(&cx(2, &["12"]), 2, 2),
            Err(Error::DimensionOutOfRange { k: 2, dim: 1 })
        );
        assert_eq!(boundary_matrix(&cx(2, &["12"]), 1, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn golden_betti_numbers() {
        let circle = cx(3, &["12", "13", "23"]);
        assert_eq!(reduced_betti(&circle, 2).unwrap().reduced_betti, vec![0, 1]);
        let sphere = cx(4, &["123", "124", "134", "234"]);
        assert_eq!(reduced_betti(&sphere, 2).unwrap().reduced_betti, vec![0, 0, 1]);
        let rp2 = instances::rp2();
        assert_eq!(reduced_betti(&rp2, 2).unwrap().reduced_betti, vec![0, 1, 1]);
        assert_eq!(reduced_betti(&rp2, 3).unwrap().reduced_betti, vec![0, 0, 0]);
    }

    #[test]
    fn components_show_up_in_degree_zero() {
        let three_points = cx(3, &["1", "2", "3"]);
        assert_eq!(reduced_betti(&three_points, 5).unwrap().reduced_betti, vec![2]);
    }

    #[test]
    fn empty_face_only_has_class_in_degree_minus_one() {
        let e = SimplicialComplex::empty_face_only(2).unwrap();
        let b = reduced_betti(&e, 2).unwrap();
        assert!(b.reduced_betti.is_empty());
        assert_eq!(b.reduced_betti_minus_one, 1);
        assert!(!b.is_zero());
    }

    #[test]
    fn acyclicity() {
        assert!(is_acyclic(&cx(4, &["1234"]), &DEFAULT_PRIMES).unwrap());
        assert!(!is_acyclic(&cx(3, &["12", "13", "23"]), &[2]).unwrap());
        assert!(is_acyclic(&instances::dunce_hat(), &DEFAULT_PRIMES).unwrap());
        assert_eq!(
            is_acyclic(&SimplicialComplex::void(2).unwrap(), &[2]),
            Err(Error::VoidComplex)
        );
    }

    #[test]
    fn rank_handles_wide_and_tall() {
        let mut m = FpMatrix::zeros(3, 2, 3);
        m.data = vec![1, 2, 0, 2, 1, 0];
        assert_eq!(m.rank(), 1);
    }
}
