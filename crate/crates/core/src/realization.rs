//! Good-cover realizations, handled purely combinatorially.
//!
//! The facet hyperplanes of an `(n-1)`-simplex in `R^{n-1}` cut space into
//! relatively open cells. In barycentric coordinates `t` (with `Σ t = 1`) a
//! cell is a sign pattern: `t_i > 0` on `P`, `t_j = 0` on `Z`, `t_k < 0`
//! elsewhere. Chambers (`Z = ∅`) correspond to nonempty `σ ⊆ [n]`, and the
//! closed chamber of `σ` contains cell `(P, Z)` iff `P ⊆ σ ⊆ P ∪ Z`.
//!
//! Assigning each boundary cell to the lowest-dimensional closed chamber that
//! contains it gives the regions `R_σ`. Taking `W_i` as the union of `R_σ`
//! over codewords `σ ∋ i` and `U_i = int(W_i)` realizes the code; this module
//! recomputes that realized code cell by cell, and checks the good-cover
//! property through order complexes of codeword families.

use serde::Serialize;

use crate::analysis::Analyzer;
use crate::code::Code;
use crate::complex::order_complex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::status::{Evidence, FaceCheck, Reason, TriStatus, Verdict};

/// Largest `n` accepted by [`enumerate_cells`].
pub const MAX_CELL_N: u32 = 12;

/// One relatively open cell of the facet-hyperplane arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ArrangementCell {
    /// Coordinates that are strictly positive; never empty.
    pub positive: Face,
    /// Coordinates that vanish.
    pub zero: Face,
}

impl ArrangementCell {
    pub fn new(positive: Face, zero: Face) -> Option<Self> {
        (!positive.is_empty() && positive.is_disjoint(zero)).then_some(ArrangementCell { positive, zero })
    }

    /// `(n - 1) - |Z|`.
    pub fn dimension(&self, n: u32) -> i32 {
        n as i32 - 1 - self.zero.len() as i32
    }

    pub fn is_chamber(&self) -> bool {
        self.zero.is_empty()
    }

    /// Whether the cell lies in the closed chamber of `sigma`.
    pub fn in_closed_chamber(&self, sigma: Face) -> bool {
        self.positive.is_subset(sigma) && sigma.is_subset(self.positive.union(self.zero))
    }

    /// Chambers adjacent to the cell: every `τ` with `P ⊆ τ ⊆ P ∪ Z`.
    pub fn adjacent_chambers(&self) -> impl Iterator<Item = Face> + '_ {
        self.zero.subsets().map(move |s| self.positive.union(s))
    }
}

/// Number of cells for ambient size `n`: `3^n - 2^n`.
pub fn cell_count(n: u32) -> u64 {
    3u64.pow(n) - 2u64.pow(n)
}

/// Every cell for ambient size `n`, ordered by `P` then `Z` bit-mask.
pub fn enumerate_cells(n: u32) -> Result<impl Iterator<Item = ArrangementCell>> {
    if n == 0 {
        return Err(Error::AmbientSize(0));
    }
    if n > MAX_CELL_N {
        return Err(Error::TooLarge(n));
    }
    let full = Face::full(n);
    Ok((1..=full.bits()).flat_map(move |p| {
        let positive = Face::from_bits(p);
        let mut zeros: Vec<Face> = full.difference(positive).subsets().collect();
        zeros.reverse();
        zeros.into_iter().map(move |zero| ArrangementCell { positive, zero })
    }))
}

/// The region `R_σ` containing a cell: always `σ = P`, the smallest closed
/// chamber through it.
pub fn cell_region(cell: &ArrangementCell) -> Face {
    cell.positive
}

/// Per-neuron face lists of the code-complex realization
/// `V_i = ⋃_{i ∈ σ ∈ C} int(σ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeComplexRealization {
    pub code: Code,
    /// `(i, {σ ∈ C : i ∈ σ})` for `i = 1..=n`.
    pub neuron_faces: Vec<(u32, Vec<Face>)>,
}

impl CodeComplexRealization {
    pub fn faces_of(&self, neuron: u32) -> &[Face] {
        self.neuron_faces
            .iter()
            .find(|(i, _)| *i == neuron)
            .map(|(_, f)| f.as_slice())
            .unwrap_or(&[])
    }

    /// Faces making up `V_τ`: `{σ ∈ C : τ ⊆ σ}`.
    pub fn region_faces(&self, tau: Face) -> Vec<Face> {
        region_faces(&self.code, tau)
    }
}

pub fn code_complex_realization(code: &Code) -> CodeComplexRealization {
    let words = code.nonempty_words();
    let neuron_faces = (1..=code.ambient_n())
        .map(|i| (i, words.iter().copied().filter(|w| w.contains(i)).collect()))
        .collect();
    CodeComplexRealization {
        code: code.clone(),
        neuron_faces,
    }
}

fn region_faces(code: &Code, tau: Face) -> Vec<Face> {
    code.nonempty_words()
        .into_iter()
        .filter(|w| tau.is_subset(*w))
        .collect()
}

/// `{η : η ∩ τ = ∅, η ∪ τ ∈ C}`, on the same ambient labels.
pub fn code_link(code: &Code, tau: Face) -> Result<Code> {
    if tau.is_empty() {
        return Err(Error::EmptyInput);
    }
    Code::new(
        code.ambient_n(),
        code.words()
            .iter()
            .filter(|w| tau.is_subset(**w))
            .map(|w| w.difference(tau)),
    )
}

/// Contractibility of `V_τ`, decided on the order complex of
/// `{σ ∈ C : τ ⊆ σ}`.
pub fn v_region_contractibility(code: &Code, tau: Face, analyzer: &Analyzer) -> Result<TriStatus> {
    if tau.is_empty() {
        return Err(Error::EmptyInput);
    }
    let gamma = region_faces(code, tau);
    if gamma.is_empty() {
        return Err(Error::EmptyRegion(tau));
    }
    let (oc, _) = order_complex(&gamma)?;
    analyzer.contractibility_status(&oc)
}

/// Whether a cell lies in `U_i = int(W_i)`: needs `i ∈ P` and every adjacent
/// chamber to be a codeword.
pub fn cell_in_open_set(code: &Code, cell: &ArrangementCell, neuron: u32) -> bool {
    cell.positive.contains(neuron) && cell.adjacent_chambers().all(|t| code.contains(t))
}

/// Whether a cell lies in the closure of `W_i`: some adjacent chamber is a
/// codeword containing `i`.
pub fn cell_in_closed_set(code: &Code, cell: &ArrangementCell, neuron: u32) -> bool {
    cell.adjacent_chambers()
        .any(|t| t.contains(neuron) && code.contains(t))
}

fn realized_by<F>(code: &Code, member: F) -> Result<Code>
where
    F: Fn(&ArrangementCell, u32) -> bool,
{
    let n = code.ambient_n();
    let mut words = Vec::new();
    for cell in enumerate_cells(n)? {
        let word = Face::from_labels((1..=n).filter(|&i| member(&cell, i)))?;
        if !word.is_empty() {
            words.push(word);
        }
    }
    Code::new(n, words)
}

/// The code realized by the open sets `U_1, ..., U_n`. Equals `C ∖ {∅}`.
pub fn realized_code_from_u(code: &Code) -> Result<Code> {
    realized_by(code, |cell, i| cell_in_open_set(code, cell, i))
}

/// The code realized by the closures of the `U_i`. May gain extra words.
pub fn realized_code_from_closures(code: &Code) -> Result<Code> {
    realized_by(code, |cell, i| cell_in_closed_set(code, cell, i))
}

/// Good-cover property of the realization: `V_τ` is contractible for every
/// nonempty `τ` with `V_τ ≠ ∅`.
pub fn good_cover_check(code: &Code, analyzer: &Analyzer) -> Result<TriStatus> {
    if code.is_empty() {
        return Err(Error::EmptyInput);
    }
    let complex = code.closure();
    let mut checks = Vec::new();
    for tau in complex.faces().into_iter().filter(|f| !f.is_empty()) {
        let st = v_region_contractibility(code, tau, analyzer)?;
        checks.push(FaceCheck {
            face: tau,
            value: st.value,
            reason: st.reason,
            evidence: st.evidence,
        });
    }
    if let Some(bad) = checks.iter().find(|c| c.value == Verdict::No) {
        return Ok(TriStatus::new(Verdict::No, bad.reason, bad.evidence.clone()).with_witness(bad.face));
    }
    if let Some(open) = checks.iter().find(|c| c.value == Verdict::Unknown) {
        let (face, reason) = (open.face, open.reason);
        return Ok(TriStatus::new(Verdict::Unknown, reason, Evidence::Links { checks }).with_witness(face));
    }
    Ok(TriStatus::new(
        Verdict::Yes,
        Reason::AllLinksVerified,
        Evidence::Links { checks },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::AnalysisConfig;
    use crate::instances;

    fn f(s: &str) -> Face {
        Face::digits(s)
    }

    fn analyzer() -> Analyzer {
        Analyzer::new(AnalysisConfig {
            deterministic: true,
            ..AnalysisConfig::default()
        })
        .unwrap()
    }

    #[test]
    fn code_complex_realization_examples() {
        let r = code_complex_realization(&instances::locally_good_example());
        let sorted = |v: &[Face]| {
            let mut v = v.to_vec();
            v.sort();
            v
        };
        assert_eq!(sorted(r.faces_of(1)), sorted(&[f("123"), f("12"), f("1")]));
        assert_eq!(sorted(r.faces_of(2)), sorted(&[f("123"), f("12"), f("23"), f("2")]));
        assert_eq!(sorted(r.faces_of(3)), sorted(&[f("123"), f("23")]));

        let r = code_complex_realization(&instances::not_locally_good_example());
        assert_eq!(sorted(r.faces_of(3)), sorted(&[f("13"), f("23")]));

        let r = code_complex_realization(&Code::from_digits(1, &["1"]));
        assert_eq!(r.faces_of(1), &[f("1")]);
    }

    #[test]
    fn code_link_examples() {
        let l = code_link(&instances::counterexample(), f("1")).unwrap();
        assert_eq!(l, Code::from_digits(5, &["23", "34", "45", "3", "4"]));
        assert!(!l.contains_empty());

        let l = code_link(&Code::from_digits(2, &["12"]), f("1")).unwrap();
        assert_eq!(l, Code::from_digits(2, &["2"]));

        let simplicial = Code::new(3, instances::locally_good_example().closure().faces()).unwrap();
        let l = code_link(&simplicial, f("123")).unwrap();
        assert_eq!(l, Code::from_digits(3, &["0"]));
    }

    #[test]
    fn v_region_examples() {
        let a = analyzer();
        let st = v_region_contractibility(&instances::locally_good_example(), f("3"), &a).unwrap();
        assert!(st.is_yes());
        let st = v_region_contractibility(&instances::not_locally_good_example(), f("3"), &a).unwrap();
        assert!(st.is_no());
        let st = v_region_contractibility(&instances::locally_good_example(), f("123"), &a).unwrap();
        assert!(st.is_yes());
        assert_eq!(
            v_region_contractibility(&instances::not_locally_good_example(), f("12"), &a),
            Err(Error::EmptyRegion(f("12")))
        );
    }

    #[test]
    fn cell_enumeration() {
        let cells: Vec<_> = enumerate_cells(1).unwrap().collect();
        assert_eq!(cells, vec![ArrangementCell::new(f("1"), Face::EMPTY).unwrap()]);

        let mut cells: Vec<_> = enumerate_cells(2).unwrap().collect();
        cells.sort();
        let mut expected = vec![
            ArrangementCell::new(f("1"), Face::EMPTY).unwrap(),
            ArrangementCell::new(f("2"), Face::EMPTY).unwrap(),
            ArrangementCell::new(f("12"), Face::EMPTY).unwrap(),
            ArrangementCell::new(f("1"), f("2")).unwrap(),
            ArrangementCell::new(f("2"), f("1")).unwrap(),
        ];
        expected.sort();
        assert_eq!(cells, expected);

        assert_eq!(enumerate_cells(3).unwrap().count(), 19);
        assert!(matches!(enumerate_cells(13), Err(Error::TooLarge(13))));
    }

    #[test]
    fn cell_regions() {
        let vertex = ArrangementCell::new(f("1"), f("23")).unwrap();
        assert_eq!(vertex.dimension(3), 0);
        assert_eq!(cell_region(&vertex), f("1"));
        let edge = ArrangementCell::new(f("1"), f("2")).unwrap();
        assert_eq!(edge.dimension(3), 1);
        assert_eq!(cell_region(&edge), f("1"));
        let chamber = ArrangementCell::new(f("13"), Face::EMPTY).unwrap();
        assert_eq!(cell_region(&chamber), f("13"));
        assert!(ArrangementCell::new(Face::EMPTY, f("1")).is_none());
        assert!(ArrangementCell::new(f("12"), f("2")).is_none());
    }

    #[test]
    fn realized_code_examples() {
        let c = instances::locally_good_example();
        assert_eq!(realized_code_from_u(&c).unwrap(), c);

        let c = instances::closed_variant_code();
        assert_eq!(realized_code_from_u(&c).unwrap(), c);
        let closed = realized_code_from_closures(&c).unwrap();
        assert!(closed.contains(f("123")));
        assert_eq!(closed, Code::from_digits(3, &["1", "12", "13", "123"]));

        let single = Code::from_digits(4, &["24"]);
        assert_eq!(realized_code_from_u(&single).unwrap(), single);

        let with_empty = instances::connected_not_goodcover();
        assert_eq!(realized_code_from_u(&with_empty).unwrap(), with_empty.without_empty());
    }

    #[test]
    fn good_cover_examples() {
        let a = analyzer();
        assert!(good_cover_check(&instances::locally_good_example(), &a).unwrap().is_yes());
        let st = good_cover_check(&instances::not_locally_good_example(), &a).unwrap();
        assert!(st.is_no());
        assert_eq!(st.witness, Some(f("3")));
        assert!(good_cover_check(&instances::counterexample(), &a).unwrap().is_yes());
    }
}
