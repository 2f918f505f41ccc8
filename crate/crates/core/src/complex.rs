//! Abstract simplicial complexes stored by their facets.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::{Face, MAX_LABEL};

/// A downward-closed family of faces on `1..=n`, stored as its facets.
///
/// The void complex has no faces at all; the complex `{∅}` has exactly one
/// face (the empty one) and is stored with the single facet `∅`. Every other
/// complex implicitly contains `∅` as well.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SimplicialComplex {
    ambient_n: u32,
    /// Pairwise incomparable, sorted by [`Face::graded_cmp`].
    facets: Vec<Face>,
}

pub(crate) fn check_ambient(n: u32) -> Result<()> {
    if n == 0 || n > MAX_LABEL {
        Err(Error::AmbientSize(n))
    } else {
        Ok(())
    }
}

/// Keeps only the inclusion-maximal members, sorted graded.
pub(crate) fn maximal_elements(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by(|a, b| b.graded_cmp(a));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    kept.sort_by(Face::graded_cmp);
    kept
}

impl SimplicialComplex {
    /// The smallest complex containing every given face.
    pub fn from_faces<I: IntoIterator<Item = Face>>(ambient_n: u32, faces: I) -> Result<Self> {
        check_ambient(ambient_n)?;
        let faces: Vec<Face> = faces.into_iter().collect();
        let bound = Face::full(ambient_n);
        if let Some(bad) = faces.iter().find(|f| !f.is_subset(bound)) {
            return Err(Error::LabelOutOfRange {
                label: bad.max_label() as u64,
                max: ambient_n,
            });
        }
        Ok(Self::from_facets_unchecked(ambient_n, maximal_elements(faces)))
    }

    pub(crate) fn from_facets_unchecked(ambient_n: u32, facets: Vec<Face>) -> Self {
        SimplicialComplex { ambient_n, facets }
    }

    pub fn void(ambient_n: u32) -> Result<Self> {
        check_ambient(ambient_n)?;
        Ok(SimplicialComplex {
            ambient_n,
            facets: Vec::new(),
        })
    }

    /// The complex whose only face is `∅`.
    pub fn empty_face_only(ambient_n: u32) -> Result<Self> {
        check_ambient(ambient_n)?;
        Ok(SimplicialComplex {
            ambient_n,
            facets: vec![Face::EMPTY],
        })
    }

    /// The full simplex on the labels of `face`.
    pub fn simplex(ambient_n: u32, face: Face) -> Result<Self> {
        Self::from_faces(ambient_n, [face])
    }

    pub fn ambient_n(&self) -> u32 {
        self.ambient_n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for the one-vertex complex, the target of a collapse.
    pub fn is_point(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].len() == 1
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// `max |facet| - 1`, or `-1` for both the void complex and `{∅}`.
    pub fn dimension(&self) -> i32 {
        self.facets.iter().map(|f| f.dimension()).max().unwrap_or(-1)
    }

    /// Union of all facets.
    pub fn vertex_set(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_set().len()
    }

    /// Every face including `∅` (absent only for the void complex), sorted by
    /// dimension and then bit-mask.
    pub fn faces(&self) -> Vec<Face> {
        let mut set = BTreeSet::new();
        for f in &self.facets {
            set.extend(f.subsets());
        }
        let mut v: Vec<Face> = set.into_iter().collect();
        v.sort_by(Face::graded_cmp);
        v
    }

    /// Faces of dimension `k` (`k = -1` yields `[∅]` for a nonvoid complex).
    pub fn faces_of_dim(&self, k: i32) -> Vec<Face> {
        if k < -1 {
            return Vec::new();
        }
        let size = (k + 1) as usize;
        let mut set = BTreeSet::new();
        for f in self.facets.iter().filter(|f| f.len() >= size) {
            set.extend(f.subsets().filter(|s| s.len() == size));
        }
        set.into_iter().collect()
    }

    /// Number of faces in each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let dim = self.dimension();
        let mut counts = vec![0usize; (dim + 1).max(0) as usize];
        for f in self.faces() {
            if !f.is_empty() {
                counts[f.len() - 1] += 1;
            }
        }
        counts
    }

    /// `χ = Σ (-1)^k f_k` over nonempty faces.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// `Lk_σ(Δ) = {τ ∈ Δ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`.
    pub fn link(&self, sigma: Face) -> Result<Self> {
        if !self.contains(sigma) {
            return Err(Error::NotAFace { face: sigma });
        }
        let faces = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma))
            .collect();
        Ok(Self::from_facets_unchecked(
            self.ambient_n,
            maximal_elements(faces),
        ))
    }

    /// `Δ|_σ = {τ ∈ Δ : τ ⊆ σ}`. Always contains `∅` unless `self` is void.
    pub fn restriction(&self, sigma: Face) -> Self {
        let faces = self.facets.iter().map(|f| f.intersection(sigma)).collect();
        Self::from_facets_unchecked(self.ambient_n, maximal_elements(faces))
    }

    /// The cone on a fresh apex `v`. The ambient size grows to `v` when needed.
    pub fn cone(&self, apex: u32) -> Result<Self> {
        let apex_face = Face::singleton(apex)?;
        if self.vertex_set().contains(apex) {
            return Err(Error::VertexInUse { vertex: apex });
        }
        let facets = if self.is_void() {
            vec![apex_face]
        } else {
            self.facets.iter().map(|f| f.union(apex_face)).collect()
        };
        Ok(Self::from_facets_unchecked(
            self.ambient_n.max(apex),
            maximal_elements(facets),
        ))
    }

    /// Some vertex lying in every facet, if one exists.
    pub fn cone_apex(&self) -> Option<u32> {
        let common = self
            .facets
            .iter()
            .fold(Face::full(MAX_LABEL), |acc, f| acc.intersection(*f));
        if self.facets.is_empty() {
            None
        } else {
            common.min_label()
        }
    }

    /// A deterministic byte string identifying the complex exactly.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut key = Vec::with_capacity(1 + 8 * self.facets.len());
        key.push(self.ambient_n as u8);
        for f in &self.facets {
            key.extend_from_slice(&f.bits().to_le_bytes());
        }
        key
    }

    /// Same complex on a different ambient size. Fails if a vertex would
    /// fall outside `1..=n`.
    pub fn with_ambient(&self, n: u32) -> Result<Self> {
        check_ambient(n)?;
        let top = self.vertex_set().max_label();
        if top > n {
            return Err(Error::LabelOutOfRange {
                label: top as u64,
                max: n,
            });
        }
        Ok(Self::from_facets_unchecked(n, self.facets.clone()))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets=[", self.ambient_n)?;
        for (i, face) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{face}")?;
        }
        f.write_str("])")
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return f.write_str("void");
        }
        f.write_str("<")?;
        for (i, face) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{face}")?;
        }
        f.write_str(">")
    }
}

/// The order complex of a family of nonempty faces ordered by inclusion.
///
/// Vertices are the input faces relabeled `1..=m` in graded order (size, then
/// bit-mask); a vertex set spans a face iff the corresponding input faces
/// form a chain. The returned vector maps label `i` to `labels[i - 1]`.
pub fn order_complex(faces: &[Face]) -> Result<(SimplicialComplex, Vec<Face>)> {
    let mut nodes: Vec<Face> = faces.to_vec();
    nodes.sort_by(Face::graded_cmp);
    nodes.dedup();
    if nodes.is_empty() || nodes.iter().any(|f| f.is_empty()) {
        return Err(Error::EmptyInput);
    }
    let m = nodes.len();
    if m > MAX_LABEL as usize {
        return Err(Error::TooManyVertices(m));
    }

    // Maximal chains are paths from a minimal to a maximal element along the
    // cover relation.
    let covers: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (i + 1..m)
                .filter(|&j| {
                    nodes[i].is_proper_subset(nodes[j])
                        && !(i + 1..m).any(|k| {
                            k != j
                                && nodes[i].is_proper_subset(nodes[k])
                                && nodes[k].is_proper_subset(nodes[j])
                        })
                })
                .collect()
        })
        .collect();
    let minimal: Vec<usize> = (0..m)
        .filter(|&i| !(0..m).any(|j| nodes[j].is_proper_subset(nodes[i])))
        .collect();

    let mut chains = Vec::new();
    let mut stack: Vec<(usize, Face)> = minimal
        .into_iter()
        .map(|i| (i, Face::from_bits(1u64 << i)))
        .collect();
    while let Some((i, chain)) = stack.pop() {
        if covers[i].is_empty() {
            chains.push(chain);
        } else {
            for &j in &covers[i] {
                stack.push((j, chain.union(Face::from_bits(1u64 << j))));
            }
        }
    }
    let complex =
        SimplicialComplex::from_facets_unchecked(m as u32, maximal_elements(chains));
    Ok((complex, nodes))
}
