//! Combinatorial neural codes.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::complex::{check_ambient, maximal_elements, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::Face;

/// A set of codewords on neurons `1..=n`. May contain the empty word.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Code {
    ambient_n: u32,
    words: BTreeSet<Face>,
}

impl Code {
    pub fn new<I: IntoIterator<Item = Face>>(ambient_n: u32, words: I) -> Result<Self> {
        check_ambient(ambient_n)?;
        let bound = Face::full(ambient_n);
        let words: BTreeSet<Face> = words.into_iter().collect();
        if let Some(bad) = words.iter().find(|w| !w.is_subset(bound)) {
            return Err(Error::LabelOutOfRange {
                label: bad.difference(bound).max_label() as u64,
                max: ambient_n,
            });
        }
        Ok(Code { ambient_n, words })
    }

    /// Builds a code from compact digit words such as `["123", "12", "0"]`.
    /// Panics on bad input; meant for fixtures.
    pub fn from_digits(ambient_n: u32, words: &[&str]) -> Self {
        Code::new(ambient_n, words.iter().map(|w| Face::digits(w))).expect("valid fixture")
    }

    pub fn ambient_n(&self) -> u32 {
        self.ambient_n
    }

    pub fn words(&self) -> &BTreeSet<Face> {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: Face) -> bool {
        self.words.contains(&word)
    }

    pub fn contains_empty(&self) -> bool {
        self.words.contains(&Face::EMPTY)
    }

    /// Nonempty codewords in graded order.
    pub fn nonempty_words(&self) -> Vec<Face> {
        let mut v: Vec<Face> = self.words.iter().copied().filter(|w| !w.is_empty()).collect();
        v.sort_by(Face::graded_cmp);
        v
    }

    pub fn with_empty(&self) -> Code {
        let mut c = self.clone();
        c.words.insert(Face::EMPTY);
        c
    }

    pub fn without_empty(&self) -> Code {
        let mut c = self.clone();
        c.words.remove(&Face::EMPTY);
        c
    }

    /// Codewords maximal under inclusion.
    pub fn maximal_codewords(&self) -> Vec<Face> {
        maximal_elements(self.words.iter().copied().collect())
    }

    /// `Δ(C)`, the smallest simplicial complex containing every codeword.
    pub fn closure(&self) -> SimplicialComplex {
        SimplicialComplex::from_facets_unchecked(self.ambient_n, self.maximal_codewords())
    }

    /// Largest word size (the minimal `k` for which the code is `k`-sparse).
    pub fn sparsity(&self) -> usize {
        self.words.iter().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn is_k_sparse(&self, k: usize) -> bool {
        self.words.iter().all(|w| w.len() <= k)
    }

    /// Nonempty faces of `Δ(C)` that are not codewords, in graded order.
    pub fn missing_faces(&self) -> Vec<Face> {
        self.closure()
            .faces()
            .into_iter()
            .filter(|f| !f.is_empty() && !self.words.contains(f))
            .collect()
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code(n={}, {self})", self.ambient_n)
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut words: Vec<Face> = self.words.iter().copied().collect();
        words.sort_by(|a, b| b.graded_cmp(a));
        f.write_str("{")?;
        for (i, w) in words.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn closure_examples() {
        let c = Code::from_digits(3, &["12", "23", "1", "2", "3"]);
        assert_eq!(c.closure().facets(), &[Face::digits("12"), Face::digits("23")]);

        let empty = Code::new(3, []).unwrap();
        assert!(empty.closure().is_void());
        assert_eq!(empty.closure().dimension(), -1);

        let cex = instances::counterexample();
        let mut facets = cex.closure().facets().to_vec();
        facets.sort();
        let mut expected: Vec<Face> = ["2345", "123", "134", "145"]
            .iter()
            .map(|w| Face::digits(w))
            .collect();
        expected.sort();
        assert_eq!(facets, expected);
    }

    #[test]
    fn sparsity_examples() {
        let cex = instances::counterexample();
        assert!(cex.is_k_sparse(4));
        assert!(!cex.is_k_sparse(3));
        assert_eq!(cex.sparsity(), 4);
        let empty = Code::new(2, []).unwrap();
        assert!(empty.is_k_sparse(0));
    }

    #[test]
    fn rejects_out_of_range_words() {
        assert!(Code::new(2, [Face::digits("13")]).is_err());
        assert!(Code::new(0, []).is_err());
    }

    #[test]
    fn missing_faces_of_counterexample() {
        let cex = instances::counterexample();
        let mut missing: Vec<String> = cex.missing_faces().iter().map(|f| f.to_string()).collect();
        missing.sort();
        let mut expected: Vec<String> =
            ["234", "235", "245", "345", "12", "15", "24", "25", "35", "1", "2", "5"]
                .iter()
                .map(|s| s.to_string())
                .collect();
        expected.sort();
        assert_eq!(missing, expected);
    }
}
