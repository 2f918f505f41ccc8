//! Elementary collapses and the collapsibility search.
//!
//! A step `(σ, τ)` is legal when `σ` is a nonempty face and `τ` is the unique
//! facet containing it; applying it deletes every face containing `σ`. Three
//! step families are supported:
//!
//! * [`StepMode::Generalized`]: `σ ⊆ τ` (facet deletion allowed);
//! * [`StepMode::Collapse`]: `σ ⊊ τ`;
//! * [`StepMode::Strict`]: `|σ| = |τ| - 1`.
//!
//! Collapse and strict steps define the same collapsible complexes; the
//! search defaults to strict steps for the smaller branching factor.

use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::{maximal_elements, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::status::Verdict;

/// Default node budget for [`Collapser`].
pub const DEFAULT_BUDGET: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepMode {
    Generalized,
    Collapse,
    Strict,
}

/// Step family used by the collapsibility search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Collapse,
    #[default]
    Strict,
}

impl Engine {
    pub fn mode(self) -> StepMode {
        match self {
            Engine::Collapse => StepMode::Collapse,
            Engine::Strict => StepMode::Strict,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CollapseStep {
    pub sigma: Face,
    pub tau: Face,
}

impl CollapseStep {
    pub fn new(sigma: Face, tau: Face) -> Self {
        CollapseStep { sigma, tau }
    }
}

impl fmt::Debug for CollapseStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.sigma, self.tau)
    }
}

impl fmt::Display for CollapseStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollapseOutcome {
    pub status: Verdict,
    pub mode: StepMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<CollapseStep>>,
    pub nodes_explored: u64,
    pub budget_exhausted: bool,
}

fn mode_admits(mode: StepMode, sigma: Face, tau: Face) -> bool {
    match mode {
        StepMode::Generalized => true,
        StepMode::Collapse => sigma != tau,
        StepMode::Strict => sigma.len() + 1 == tau.len(),
    }
}

/// Every legal step of the given family, ordered by `|σ|`, then `σ`, then `τ`.
pub fn free_pairs(complex: &SimplicialComplex, mode: StepMode) -> Vec<CollapseStep> {
    let facets = complex.facets();
    let mut pairs = Vec::new();
    for (i, &tau) in facets.iter().enumerate() {
        let unique = |sigma: Face| {
            facets
                .iter()
                .enumerate()
                .all(|(j, f)| j == i || !sigma.is_subset(*f))
        };
        match mode {
            // an isolated vertex has no nonempty codimension-one face
            StepMode::Strict if tau.len() < 2 => {}
            StepMode::Strict => pairs.extend(
                tau.boundary_faces()
                    .filter(|&s| unique(s))
                    .map(|s| CollapseStep::new(s, tau)),
            ),
            _ => pairs.extend(
                tau.subsets()
                    .filter(|s| !s.is_empty() && mode_admits(mode, *s, tau) && unique(*s))
                    .map(|s| CollapseStep::new(s, tau)),
            ),
        }
    }
    pairs.sort_by(|a, b| {
        a.sigma
            .graded_cmp(&b.sigma)
            .then_with(|| a.tau.cmp(&b.tau))
    });
    pairs
}

/// Checks that `step` is legal in `complex` for `mode`.
pub fn check_step(complex: &SimplicialComplex, step: CollapseStep, mode: StepMode) -> Result<()> {
    let illegal = |reason: &str| Error::IllegalStep {
        sigma: step.sigma,
        tau: step.tau,
        reason: reason.to_string(),
    };
    if step.sigma.is_empty() {
        return Err(illegal("sigma is empty"));
    }
    if !step.sigma.is_subset(step.tau) {
        return Err(illegal("sigma is not contained in tau"));
    }
    if !complex.facets().contains(&step.tau) {
        return Err(illegal("tau is not a facet"));
    }
    let containing = complex
        .facets()
        .iter()
        .filter(|f| step.sigma.is_subset(**f))
        .count();
    if containing != 1 {
        return Err(illegal("tau is not the unique facet containing sigma"));
    }
    match mode {
        StepMode::Collapse if step.sigma == step.tau => {
            Err(illegal("sigma equals tau (facet deletion is not a collapse)"))
        }
        StepMode::Strict if step.sigma.len() + 1 != step.tau.len() => {
            Err(illegal("sigma is not a codimension-one face of tau"))
        }
        _ => Ok(()),
    }
}

/// Removes every face containing `step.sigma`, assuming the step is legal.
fn apply_step(complex: &SimplicialComplex, step: CollapseStep) -> SimplicialComplex {
    let mut next: Vec<Face> = Vec::with_capacity(complex.facets().len() + step.sigma.len());
    for &f in complex.facets() {
        if step.sigma.is_subset(f) {
            next.extend(step.sigma.labels().map(|v| f.without(v)));
        } else {
            next.push(f);
        }
    }
    SimplicialComplex::from_facets_unchecked(complex.ambient_n(), maximal_elements(next))
}

/// `Δ' = Δ ∖ {ν ∈ Δ : σ ⊆ ν}` for a legal step.
pub fn elementary_collapse(
    complex: &SimplicialComplex,
    step: CollapseStep,
    mode: StepMode,
) -> Result<SimplicialComplex> {
    check_step(complex, step, mode)?;
    Ok(apply_step(complex, step))
}

/// Applies `steps` in order, checking each one.
pub fn replay(
    complex: &SimplicialComplex,
    steps: &[CollapseStep],
    mode: StepMode,
) -> Result<SimplicialComplex> {
    let mut cur = complex.clone();
    for &s in steps {
        cur = elementary_collapse(&cur, s, mode)?;
    }
    Ok(cur)
}

/// True iff every step is legal when applied and the result is a point.
pub fn verify_certificate(complex: &SimplicialComplex, steps: &[CollapseStep], mode: StepMode) -> bool {
    replay(complex, steps, mode).is_ok_and(|end| end.is_point())
}

#[derive(Clone, Copy, Debug)]
enum MemoEntry {
    /// Collapsible; the step leads to another collapsible complex, or `None`
    /// when this complex is already a point.
    Collapsible(Option<CollapseStep>),
    NotCollapsible,
}

/// Results of finished sub-searches keyed by canonical complex key. Safe to
/// share between threads; entries are never overwritten.
#[derive(Debug, Default)]
pub struct CollapseMemo {
    map: DashMap<Vec<u8>, MemoEntry>,
}

impl CollapseMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    fn key(mode: StepMode, complex: &SimplicialComplex) -> Vec<u8> {
        let mut k = complex.canonical_key();
        k.push(mode as u8);
        k
    }

    fn get(&self, key: &[u8]) -> Option<MemoEntry> {
        self.map.get(key).map(|e| *e)
    }

    fn insert(&self, key: Vec<u8>, entry: MemoEntry) {
        self.map.entry(key).or_insert(entry);
    }

    /// Follows stored steps from a collapsible complex down to a point.
    fn certificate_from(&self, mode: StepMode, complex: &SimplicialComplex) -> Option<Vec<CollapseStep>> {
        let mut steps = Vec::new();
        let mut cur = complex.clone();
        loop {
            match self.get(&Self::key(mode, &cur))? {
                MemoEntry::Collapsible(None) => return Some(steps),
                MemoEntry::Collapsible(Some(step)) => {
                    steps.push(step);
                    cur = apply_step(&cur, step);
                }
                MemoEntry::NotCollapsible => return None,
            }
        }
    }
}

/// Configuration for [`Collapser`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub engine: Engine,
    /// Maximum number of complexes expanded by the exhaustive search.
    pub budget: u64,
    /// Greedy attempts tried before the exhaustive search; 0 disables them.
    pub greedy_restarts: u32,
    pub seed: u64,
    pub use_memo: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            engine: Engine::Strict,
            budget: DEFAULT_BUDGET,
            greedy_restarts: 2,
            seed: 0,
            use_memo: true,
        }
    }
}

enum Search {
    /// Steps from the current complex to a point, in reverse order.
    Found(Vec<CollapseStep>),
    NotFound,
    Exhausted,
}

/// Collapsibility decision with a memo table that can be shared across many
/// queries (and threads).
#[derive(Clone, Debug)]
pub struct Collapser {
    options: SearchOptions,
    memo: Arc<CollapseMemo>,
}

impl Collapser {
    pub fn new(options: SearchOptions) -> Self {
        Collapser {
            options,
            memo: Arc::new(CollapseMemo::new()),
        }
    }

    pub fn with_memo(options: SearchOptions, memo: Arc<CollapseMemo>) -> Self {
        Collapser { options, memo }
    }

    pub fn options(&self) -> &SearchOptions {
        &self.options
    }

    pub fn memo(&self) -> &Arc<CollapseMemo> {
        &self.memo
    }

    /// Decides whether `complex` collapses to a point.
    ///
    /// `Yes` carries a replayable certificate; `No` is only returned after the
    /// exhaustive search finished; `Unknown` means the node budget ran out.
    pub fn is_collapsible(&self, complex: &SimplicialComplex) -> Result<CollapseOutcome> {
        if complex.is_void() {
            return Err(Error::VoidComplex);
        }
        let mode = self.options.engine.mode();
        let mut nodes = 0u64;

        if self.options.greedy_restarts > 0 {
            let g = greedy(complex, mode, self.options.seed, self.options.greedy_restarts);
            nodes += g.nodes_explored;
            if let Some(steps) = g.certificate {
                if self.options.use_memo {
                    self.record_path(mode, complex, &steps);
                }
                return Ok(CollapseOutcome {
                    status: Verdict::Yes,
                    mode,
                    certificate: Some(steps),
                    nodes_explored: nodes,
                    budget_exhausted: false,
                });
            }
        }

        let mut expanded = 0u64;
        let result = self.search(complex, mode, &mut expanded);
        nodes += expanded;
        Ok(match result {
            Search::Found(mut rev) => {
                rev.reverse();
                CollapseOutcome {
                    status: Verdict::Yes,
                    mode,
                    certificate: Some(rev),
                    nodes_explored: nodes,
                    budget_exhausted: false,
                }
            }
            Search::NotFound => CollapseOutcome {
                status: Verdict::No,
                mode,
                certificate: None,
                nodes_explored: nodes,
                budget_exhausted: false,
            },
            Search::Exhausted => CollapseOutcome {
                status: Verdict::Unknown,
                mode,
                certificate: None,
                nodes_explored: nodes,
                budget_exhausted: true,
            },
        })
    }

    fn record_path(&self, mode: StepMode, complex: &SimplicialComplex, steps: &[CollapseStep]) {
        let mut cur = complex.clone();
        for &s in steps {
            let next = apply_step(&cur, s);
            self.memo
                .insert(CollapseMemo::key(mode, &cur), MemoEntry::Collapsible(Some(s)));
            cur = next;
        }
        self.memo
            .insert(CollapseMemo::key(mode, &cur), MemoEntry::Collapsible(None));
    }

    fn search(&self, complex: &SimplicialComplex, mode: StepMode, expanded: &mut u64) -> Search {
        if complex.is_point() {
            return Search::Found(Vec::new());
        }
        let key = self.options.use_memo.then(|| CollapseMemo::key(mode, complex));
        if let Some(k) = &key {
            match self.memo.get(k) {
                Some(MemoEntry::NotCollapsible) => return Search::NotFound,
                Some(MemoEntry::Collapsible(_)) => {
                    if let Some(mut steps) = self.memo.certificate_from(mode, complex) {
                        steps.reverse();
                        return Search::Found(steps);
                    }
                }
                None => {}
            }
        }
        if *expanded >= self.options.budget {
            return Search::Exhausted;
        }
        *expanded += 1;

        for step in free_pairs(complex, mode) {
            let next = apply_step(complex, step);
            match self.search(&next, mode, expanded) {
                Search::Found(mut rev) => {
                    if let Some(k) = key {
                        self.memo.insert(k, MemoEntry::Collapsible(Some(step)));
                        if next.is_point() {
                            self.memo
                                .insert(CollapseMemo::key(mode, &next), MemoEntry::Collapsible(None));
                        }
                    }
                    rev.push(step);
                    return Search::Found(rev);
                }
                Search::NotFound => {}
                Search::Exhausted => return Search::Exhausted,
            }
        }
        if let Some(k) = key {
            self.memo.insert(k, MemoEntry::NotCollapsible);
        }
        Search::NotFound
    }
}

/// Exhaustive collapsibility search with a fresh memo table.
pub fn is_collapsible(
    complex: &SimplicialComplex,
    engine: Engine,
    budget: u64,
) -> Result<CollapseOutcome> {
    Collapser::new(SearchOptions {
        engine,
        budget,
        ..SearchOptions::default()
    })
    .is_collapsible(complex)
}

/// Randomized greedy collapsing with strict steps. Only ever answers `Yes`
/// (with a certificate) or `Unknown`; deterministic for a fixed seed.
pub fn greedy_collapse(
    complex: &SimplicialComplex,
    seed: u64,
    restarts: u32,
) -> Result<CollapseOutcome> {
    greedy_collapse_with(complex, StepMode::Strict, seed, restarts)
}

pub fn greedy_collapse_with(
    complex: &SimplicialComplex,
    mode: StepMode,
    seed: u64,
    restarts: u32,
) -> Result<CollapseOutcome> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(greedy(complex, mode, seed, restarts))
}

fn greedy(complex: &SimplicialComplex, mode: StepMode, seed: u64, restarts: u32) -> CollapseOutcome {
    let mut nodes = 0u64;
    for attempt in 0..restarts.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt as u64));
        let mut cur = complex.clone();
        let mut steps = Vec::new();
        loop {
            if cur.is_point() {
                return CollapseOutcome {
                    status: Verdict::Yes,
                    mode,
                    certificate: Some(steps),
                    nodes_explored: nodes,
                    budget_exhausted: false,
                };
            }
            let pairs = free_pairs(&cur, mode);
            let Some(&step) = pairs.choose(&mut rng) else {
                break;
            };
            nodes += 1;
            cur = apply_step(&cur, step);
            steps.push(step);
        }
        if restarts == 0 {
            break;
        }
    }
    CollapseOutcome {
        status: Verdict::Unknown,
        mode,
        certificate: None,
        nodes_explored: nodes,
        budget_exhausted: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    fn cx(n: u32, words: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_faces(n, words.iter().map(|w| Face::digits(w))).unwrap()
    }

    fn step(s: &str, t: &str) -> CollapseStep {
        CollapseStep::new(Face::digits(s), Face::digits(t))
    }

    #[test]
    fn free_pairs_of_triangle_with_tail() {
        let d = cx(4, &["123", "34"]);
        let pairs = free_pairs(&d, StepMode::Collapse);
        assert_eq!(
            pairs,
            vec![
                step("1", "123"),
                step("2", "123"),
                step("4", "34"),
                step("12", "123"),
                step("13", "123"),
                step("23", "123"),
            ]
        );
        assert!(!pairs.iter().any(|p| p.sigma == Face::digits("3")));
        let strict = free_pairs(&d, StepMode::Strict);
        assert_eq!(
            strict,
            vec![step("4", "34"), step("12", "123"), step("13", "123"), step("23", "123")]
        );
    }

    #[test]
    fn free_pairs_of_point() {
        let pt = cx(1, &["1"]);
        assert!(free_pairs(&pt, StepMode::Collapse).is_empty());
        assert!(free_pairs(&pt, StepMode::Strict).is_empty());
        assert_eq!(free_pairs(&pt, StepMode::Generalized), vec![step("1", "1")]);
    }

    #[test]
    fn dunce_hat_has_no_free_pairs() {
        let dh = instances::dunce_hat();
        assert!(free_pairs(&dh, StepMode::Collapse).is_empty());
        assert!(free_pairs(&dh, StepMode::Strict).is_empty());
    }

    #[test]
    fn named_collapse_examples() {
        let d = cx(4, &["123", "34"]);
        let after = elementary_collapse(&d, step("123", "123"), StepMode::Generalized).unwrap();
        assert_eq!(after, cx(4, &["12", "13", "23", "34"]));

        let after = elementary_collapse(&d, step("1", "123"), StepMode::Collapse).unwrap();
        assert_eq!(after, cx(4, &["23", "34"]));

        let edge = cx(4, &["34"]);
        let after = elementary_collapse(&edge, step("3", "34"), StepMode::Collapse).unwrap();
        assert_eq!(after, cx(4, &["4"]));

        let cert = [step("1", "123"), step("2", "23"), step("3", "34")];
        assert!(verify_certificate(&d, &cert, StepMode::Collapse));
    }

    #[test]
    fn illegal_steps_are_named() {
        let d = cx(4, &["123", "34"]);
        let err = elementary_collapse(&d, step("3", "34"), StepMode::Collapse).unwrap_err();
        assert!(matches!(err, Error::IllegalStep { ref reason, .. } if reason.contains("unique")));
        let err = elementary_collapse(&d, step("123", "123"), StepMode::Collapse).unwrap_err();
        assert!(matches!(err, Error::IllegalStep { .. }));
        let err = elementary_collapse(&d, step("1", "123"), StepMode::Strict).unwrap_err();
        assert!(matches!(err, Error::IllegalStep { ref reason, .. } if reason.contains("codimension")));
    }

    #[test]
    fn triangle_with_tail_is_collapsible() {
        let d = cx(4, &["123", "34"]);
        for engine in [Engine::Collapse, Engine::Strict] {
            let out = is_collapsible(&d, engine, 1000).unwrap();
            assert_eq!(out.status, Verdict::Yes);
            let cert = out.certificate.unwrap();
            assert!(verify_certificate(&d, &cert, engine.mode()));
        }
    }

    #[test]
    fn dunce_hat_is_not_collapsible() {
        let out = is_collapsible(&instances::dunce_hat(), Engine::Strict, 10).unwrap();
        assert_eq!(out.status, Verdict::No);
        assert!(!out.budget_exhausted);
    }

    #[test]
    fn simplices_collapse() {
        for n in 1..=5 {
            let s = SimplicialComplex::simplex(n, Face::full(n)).unwrap();
            let out = is_collapsible(&s, Engine::Strict, 10_000).unwrap();
            assert_eq!(out.status, Verdict::Yes, "simplex on {n} vertices");
        }
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let circle = cx(3, &["12", "13", "23"]);
        let c = Collapser::new(SearchOptions {
            budget: 0,
            greedy_restarts: 0,
            ..SearchOptions::default()
        });
        let out = c.is_collapsible(&circle).unwrap();
        assert_eq!(out.status, Verdict::Unknown);
        assert!(out.budget_exhausted);
    }

    #[test]
    fn greedy_examples() {
        let pt = cx(1, &["1"]);
        let out = greedy_collapse(&pt, 3, 1).unwrap();
        assert_eq!(out.status, Verdict::Yes);
        assert_eq!(out.certificate, Some(vec![]));

        let out = greedy_collapse(&instances::dunce_hat(), 9, 4).unwrap();
        assert_eq!(out.status, Verdict::Unknown);

        let tri = cx(3, &["123"]);
        let faces: Vec<Face> = tri.faces().into_iter().filter(|f| !f.is_empty()).collect();
        let (bary, _) = crate::complex::order_complex(&faces).unwrap();
        let out = greedy_collapse(&bary, 1, 4).unwrap();
        assert_eq!(out.status, Verdict::Yes);
        assert!(verify_certificate(&bary, out.certificate.as_ref().unwrap(), StepMode::Strict));
        assert_eq!(greedy_collapse(&bary, 1, 4).unwrap(), out);
    }

    #[test]
    fn memo_certificates_replay() {
        let c = Collapser::new(SearchOptions {
            greedy_restarts: 0,
            ..SearchOptions::default()
        });
        let d = cx(5, &["123", "234", "345"]);
        let first = c.is_collapsible(&d).unwrap();
        let second = c.is_collapsible(&d).unwrap();
        assert_eq!(first.status, Verdict::Yes);
        assert!(verify_certificate(&d, second.certificate.as_ref().unwrap(), StepMode::Strict));
    }

    #[test]
    fn empty_face_only_is_not_collapsible() {
        let e = SimplicialComplex::empty_face_only(2).unwrap();
        assert_eq!(is_collapsible(&e, Engine::Strict, 10).unwrap().status, Verdict::No);
        let void = SimplicialComplex::void(2).unwrap();
        assert_eq!(is_collapsible(&void, Engine::Strict, 10), Err(Error::VoidComplex));
    }
}
