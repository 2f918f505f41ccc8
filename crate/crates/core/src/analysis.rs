//! Local obstructions of neural codes.
//!
//! A code `C` is *locally good* when every face `σ ∈ Δ(C) ∖ C` has a
//! contractible link, and *locally great* when every such link is
//! collapsible. Contractibility is undecidable in general, so all verdicts
//! are three-valued and carry certificates.

use rayon::prelude::*;
use serde::Serialize;

use crate::code::Code;
use crate::collapse::{Collapser, Engine, SearchOptions, DEFAULT_BUDGET};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{Face, MAX_LABEL};
use crate::homology::{first_nonzero_betti, is_prime, DEFAULT_PRIMES};
use crate::status::{Evidence, FaceCheck, Reason, TriStatus, Verdict};

/// Knobs shared by every analysis in one run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisConfig {
    /// Node limit for each exhaustive collapse search.
    pub budget: u64,
    /// Fields used for the homology (non-contractibility) certificate.
    pub primes: Vec<u32>,
    pub seed: u64,
    /// Single-threaded, with stable certificates.
    pub deterministic: bool,
    pub greedy_restarts: u32,
    pub engine: Engine,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            budget: DEFAULT_BUDGET,
            primes: DEFAULT_PRIMES.to_vec(),
            seed: 0,
            deterministic: false,
            greedy_restarts: 2,
            engine: Engine::Strict,
        }
    }
}

/// Which faces a locally-good test should quantify over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceScope {
    /// Intersections of maximal codewords (sound and complete).
    FacetIntersections,
    /// Every nonempty face of `Δ(C)`.
    AllFaces,
}

/// Mandatory codewords found among the facet intersections.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Mandatory {
    /// Faces whose link was proved non-contractible.
    pub found: Vec<Face>,
    /// Faces whose link could not be decided.
    pub unknown: Vec<Face>,
    #[serde(skip)]
    pub checks: Vec<FaceCheck>,
}

/// Everything `classify` knows about a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub code: Code,
    pub sparsity: usize,
    pub max_intersection_complete: bool,
    pub locally_good: TriStatus,
    pub locally_great: TriStatus,
    pub mandatory: Mandatory,
    pub implication_notes: Vec<String>,
}

/// Runs the classification pipeline with one shared collapse memo.
#[derive(Clone, Debug)]
pub struct Analyzer {
    config: AnalysisConfig,
    collapser: Collapser,
}

impl Analyzer {
    pub fn new(config: AnalysisConfig) -> Result<Self> {
        if let Some(&p) = config.primes.iter().find(|p| !is_prime(**p)) {
            return Err(Error::NotPrime(p));
        }
        let collapser = Collapser::new(SearchOptions {
            engine: config.engine,
            budget: config.budget,
            greedy_restarts: config.greedy_restarts,
            seed: config.seed,
            use_memo: true,
        });
        Ok(Analyzer { config, collapser })
    }

    pub fn config(&self) -> &AnalysisConfig {
        &self.config
    }

    pub fn collapser(&self) -> &Collapser {
        &self.collapser
    }

    /// Layered contractibility test; the first conclusive rung wins.
    ///
    /// 1. dimension ≤ 0: contractible iff exactly one vertex;
    /// 2. dimension 1: contractible iff the graph is a tree;
    /// 3. a vertex in every facet (a cone): contractible;
    /// 4. a nonzero reduced Betti number: not contractible;
    /// 5. a collapse to a point: contractible;
    /// 6. otherwise unknown.
    ///
    /// Rungs 4 and 5 never disagree (collapsible complexes are acyclic), so
    /// running the cheap homology test first does not change any verdict.
    pub fn contractibility_status(&self, complex: &SimplicialComplex) -> Result<TriStatus> {
        if complex.is_void() {
            return Err(Error::VoidComplex);
        }
        let dim = complex.dimension();
        if dim <= 1 {
            let g = graph_summary(complex);
            let tree = g.components == 1 && g.edges + 1 == g.vertices;
            let value = if tree { Verdict::Yes } else { Verdict::No };
            return Ok(TriStatus::new(value, Reason::TreeTest, g.into()));
        }
        if let Some(apex) = complex.cone_apex() {
            return Ok(TriStatus::new(
                Verdict::Yes,
                Reason::ConeApex,
                Evidence::Apex { vertex: apex },
            ));
        }
        if let Some(b) = first_nonzero_betti(complex, &self.config.primes)? {
            return Ok(TriStatus::new(Verdict::No, Reason::NonzeroBetti, Evidence::Betti(b)));
        }
        let out = self.collapser.is_collapsible(complex)?;
        Ok(match out.status {
            Verdict::Yes => TriStatus::new(
                Verdict::Yes,
                Reason::CollapseCertificate,
                Evidence::Collapse {
                    mode: out.mode,
                    steps: out.certificate.unwrap_or_default(),
                },
            ),
            _ => TriStatus::new(
                Verdict::Unknown,
                if out.budget_exhausted {
                    Reason::Budget
                } else {
                    Reason::Inconclusive
                },
                Evidence::Search {
                    nodes_explored: out.nodes_explored,
                    budget_exhausted: out.budget_exhausted,
                },
            ),
        })
    }

    /// Collapsibility as a verdict. A nonzero Betti number settles `No`
    /// without searching.
    pub fn collapsibility_status(&self, complex: &SimplicialComplex) -> Result<TriStatus> {
        if complex.is_void() {
            return Err(Error::VoidComplex);
        }
        if let Some(b) = first_nonzero_betti(complex, &self.config.primes)? {
            return Ok(TriStatus::new(Verdict::No, Reason::NonzeroBetti, Evidence::Betti(b)));
        }
        let out = self.collapser.is_collapsible(complex)?;
        Ok(match out.status {
            Verdict::Yes => TriStatus::new(
                Verdict::Yes,
                Reason::CollapseCertificate,
                Evidence::Collapse {
                    mode: out.mode,
                    steps: out.certificate.unwrap_or_default(),
                },
            ),
            Verdict::No => TriStatus::new(
                Verdict::No,
                Reason::ExhaustiveSearch,
                Evidence::Search {
                    nodes_explored: out.nodes_explored,
                    budget_exhausted: false,
                },
            ),
            Verdict::Unknown => TriStatus::new(
                Verdict::Unknown,
                Reason::Budget,
                Evidence::Search {
                    nodes_explored: out.nodes_explored,
                    budget_exhausted: true,
                },
            ),
        })
    }

    fn check_links<F>(&self, complex: &SimplicialComplex, faces: &[Face], test: F) -> Result<Vec<FaceCheck>>
    where
        F: Fn(&SimplicialComplex) -> Result<TriStatus> + Sync,
    {
        let one = |&face: &Face| -> Result<FaceCheck> {
            let st = test(&complex.link(face)?)?;
            Ok(FaceCheck {
                face,
                value: st.value,
                reason: st.reason,
                evidence: st.evidence,
            })
        };
        if self.config.deterministic {
            faces.iter().map(one).collect()
        } else {
            faces.par_iter().map(one).collect()
        }
    }

    /// Link contractibility for every face in `faces`, in input order.
    pub fn link_contractibility(&self, code: &Code, faces: &[Face]) -> Result<Vec<FaceCheck>> {
        let complex = code.closure();
        self.check_links(&complex, faces, |lk| self.contractibility_status(lk))
    }

    /// Mandatory codewords among the facet intersections of `Δ(C)`.
    pub fn mandatory_codewords(&self, code: &Code) -> Result<Mandatory> {
        if code.is_empty() {
            return Err(Error::EmptyInput);
        }
        let candidates = facet_intersections(&code.closure());
        let checks = self.link_contractibility(code, &candidates)?;
        Ok(Mandatory {
            found: faces_with(&checks, Verdict::No),
            unknown: faces_with(&checks, Verdict::Unknown),
            checks,
        })
    }

    /// Locally good: every missing facet intersection has a contractible link.
    pub fn is_locally_good(&self, code: &Code) -> Result<TriStatus> {
        self.locally_good_over(code, FaceScope::FacetIntersections)
    }

    /// Locally good, quantifying over the chosen face family.
    pub fn locally_good_over(&self, code: &Code, scope: FaceScope) -> Result<TriStatus> {
        if code.is_empty() {
            return Err(Error::EmptyInput);
        }
        let faces: Vec<Face> = match scope {
            FaceScope::FacetIntersections => facet_intersections(&code.closure())
                .into_iter()
                .filter(|f| !code.contains(*f))
                .collect(),
            FaceScope::AllFaces => code.missing_faces(),
        };
        let checks = self.link_contractibility(code, &faces)?;
        Ok(aggregate(checks))
    }

    /// Locally great: every nonempty face of `Δ(C) ∖ C` has a collapsible link.
    pub fn is_locally_great(&self, code: &Code) -> Result<TriStatus> {
        if code.is_empty() {
            return Err(Error::EmptyInput);
        }
        let complex = code.closure();
        let checks = self.check_links(&complex, &code.missing_faces(), |lk| {
            self.collapsibility_status(lk)
        })?;
        Ok(aggregate(checks))
    }

    /// The full report.
    pub fn classify(&self, code: &Code) -> Result<AnalysisReport> {
        if code.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mandatory = self.mandatory_codewords(code)?;
        let missing_checks: Vec<FaceCheck> = mandatory
            .checks
            .iter()
            .filter(|c| !code.contains(c.face))
            .cloned()
            .collect();
        let locally_good = aggregate(missing_checks);
        let locally_great = self.is_locally_great(code)?;

        if locally_great.is_yes() && !locally_good.is_yes() {
            return Err(Error::Inconsistent(format!(
                "locally great but locally good is {}",
                locally_good.value
            )));
        }
        if locally_good.is_no() && !locally_great.is_no() {
            return Err(Error::Inconsistent(format!(
                "not locally good but locally great is {}",
                locally_great.value
            )));
        }

        let implication_notes = implication_notes(&locally_good, &locally_great);
        Ok(AnalysisReport {
            code: code.clone(),
            sparsity: code.sparsity(),
            max_intersection_complete: is_max_intersection_complete(code),
            locally_good,
            locally_great,
            mandatory,
            implication_notes,
        })
    }
}

fn faces_with(checks: &[FaceCheck], value: Verdict) -> Vec<Face> {
    checks.iter().filter(|c| c.value == value).map(|c| c.face).collect()
}

/// Folds per-face checks: any `No` wins (first in order is the witness), then
/// any `Unknown`, else `Yes`.
fn aggregate(checks: Vec<FaceCheck>) -> TriStatus {
    if let Some(bad) = checks.iter().find(|c| c.value == Verdict::No) {
        return TriStatus::new(Verdict::No, bad.reason, bad.evidence.clone()).with_witness(bad.face);
    }
    if let Some(open) = checks.iter().find(|c| c.value == Verdict::Unknown) {
        let (face, reason) = (open.face, open.reason);
        return TriStatus::new(Verdict::Unknown, reason, Evidence::Links { checks }).with_witness(face);
    }
    TriStatus::new(Verdict::Yes, Reason::AllLinksVerified, Evidence::Links { checks })
}

fn implication_notes(good: &TriStatus, great: &TriStatus) -> Vec<String> {
    let mut notes = vec![
        "convex => locally great => locally good <=> good-cover => connected".to_string(),
        "locally great does not imply convex: the 5-neuron code {2345,123,134,145,13,14,23,34,45,3,4} is locally great but not convex".to_string(),
        "locally good does not imply locally great: a cone over a contractible, non-collapsible complex, minus its apex".to_string(),
        "connected does not imply locally good: {124,134,234,14,24,34} is connected but misses the mandatory codeword 4".to_string(),
        "convexity itself is not decided here".to_string(),
    ];
    if good.is_no() {
        notes.push("not locally good, hence not a good-cover code and not convex".to_string());
    } else if great.is_no() {
        notes.push("not locally great, hence not convex".to_string());
    }
    notes
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct GraphSummary {
    vertices: usize,
    edges: usize,
    components: usize,
}

impl From<GraphSummary> for Evidence {
    fn from(g: GraphSummary) -> Self {
        Evidence::Graph {
            vertices: g.vertices,
            edges: g.edges,
            components: g.components,
        }
    }
}

/// Vertex, edge and component counts of the 1-skeleton.
fn graph_summary(complex: &SimplicialComplex) -> GraphSummary {
    let vertices: Vec<u32> = complex.vertex_set().labels().collect();
    let edges = complex.faces_of_dim(1);
    let mut parent: Vec<usize> = (0..=MAX_LABEL as usize).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    for e in &edges {
        let mut it = e.labels();
        let (a, b) = (it.next().unwrap() as usize, it.next().unwrap() as usize);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut roots: Vec<usize> = vertices.iter().map(|&v| find(&mut parent, v as usize)).collect();
    roots.sort_unstable();
    roots.dedup();
    GraphSummary {
        vertices: vertices.len(),
        edges: edges.len(),
        components: roots.len(),
    }
}

/// All nonempty intersections of nonempty sets of facets (facets included),
/// sorted by size and then bit-mask.
pub fn facet_intersections(complex: &SimplicialComplex) -> Vec<Face> {
    let mut found: Vec<Face> = complex
        .facets()
        .iter()
        .copied()
        .filter(|f| !f.is_empty())
        .collect();
    // closing under pairwise intersection yields every multiple intersection
    let mut frontier = found.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &a in &frontier {
            for &f in complex.facets() {
                let x = a.intersection(f);
                if !x.is_empty() && !found.contains(&x) {
                    found.push(x);
                    next.push(x);
                }
            }
        }
        frontier = next;
    }
    found.sort_by(Face::graded_cmp);
    found
}

/// Every nonempty intersection of maximal codewords is itself a codeword.
pub fn is_max_intersection_complete(code: &Code) -> bool {
    facet_intersections(&code.closure())
        .into_iter()
        .all(|f| code.contains(f))
}

/// The code `cone_v(Δ) ∖ {v}` on a fresh apex `v = n + 1`: its complex is the
/// cone and its only missing nonempty face is `{v}`, whose link is `Δ`.
pub fn cone_minus_apex(complex: &SimplicialComplex) -> Result<(Code, u32)> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let apex = complex.ambient_n() + 1;
    let apex_face = Face::singleton(apex)?;
    let cone = complex.cone(apex)?;
    let words = cone
        .faces()
        .into_iter()
        .filter(|f| !f.is_empty() && *f != apex_face);
    Ok((Code::new(apex, words)?, apex))
}
