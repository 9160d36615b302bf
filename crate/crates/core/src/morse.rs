//! Discrete Morse theory on face posets: element pairings, their sequential
//! unions, acyclicity checks and critical-cell summaries.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;

/// Mutable copy of a face set, shrunk as element pairings consume faces.
#[derive(Debug, Clone, Default)]
pub struct FaceState {
    faces: FxHashSet<Face>,
}

impl FaceState {
    pub fn new(c: &SimplicialComplex) -> Self {
        FaceState { faces: c.faces().collect() }
    }

    pub fn from_faces(faces: impl IntoIterator<Item = Face>) -> Self {
        FaceState { faces: faces.into_iter().collect() }
    }

    pub fn contains(&self, f: Face) -> bool {
        self.faces.contains(&f)
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn remove_all(&mut self, faces: &[Face]) {
        for f in faces {
            self.faces.remove(f);
        }
    }

    /// Remaining faces ordered by cardinality, then bitmask.
    pub fn sorted(&self) -> Vec<Face> {
        let mut v: Vec<Face> = self.faces.iter().copied().collect();
        v.sort_unstable_by_key(|f| (f.len(), f.0));
        v
    }
}

/// Result of one element pairing `M(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementPairing {
    /// `(σ, σ ∪ {x})` with `x ∉ σ`, sorted.
    pub pairs: Vec<(Face, Face)>,
    /// `N(x)`: every face occurring in a pair.
    pub touched: Vec<Face>,
}

/// `M(x) = {(σ, σ ∪ {x}) : x ∉ σ, both in the state}`. The state is left
/// unchanged; remove `touched` to continue a sequence.
pub fn element_pairing(state: &FaceState, x: usize) -> ElementPairing {
    let mut pairs: Vec<(Face, Face)> = state
        .faces
        .par_iter()
        .filter(|s| !s.contains(x))
        .filter_map(|&s| {
            let t = s.with(x);
            state.faces.contains(&t).then_some((s, t))
        })
        .collect();
    pairs.par_sort_unstable_by_key(|&(s, _)| (s.len(), s.0));
    let touched = pairs.iter().flat_map(|&(s, t)| [s, t]).collect();
    ElementPairing { pairs, touched }
}

/// Union of element pairings over a vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorsePairing {
    pub sequence: Vec<usize>,
    /// Pairs contributed by each step, in sequence order.
    pub steps: Vec<Vec<(Face, Face)>>,
    /// Unpaired faces, by cardinality then bitmask.
    pub critical: Vec<Face>,
    pub face_count: usize,
    pub acyclic: bool,
}

impl MorsePairing {
    pub fn pairs(&self) -> impl Iterator<Item = (Face, Face)> + '_ {
        self.steps.iter().flatten().copied()
    }

    pub fn pair_count(&self) -> usize {
        self.steps.iter().map(Vec::len).sum()
    }

    /// Whether the empty face is matched with a vertex.
    pub fn empty_face_paired(&self) -> bool {
        self.pairs().any(|(s, _)| s.is_empty())
    }

    /// `|faces| = 2·|pairs| + |critical|`.
    pub fn partitions_faces(&self) -> bool {
        self.face_count == 2 * self.pair_count() + self.critical.len()
    }
}

/// Runs `M(x_1), M(x_2), …` over a shrinking copy of the face set and
/// checks the union for acyclicity.
pub fn sequential_pairing(c: &SimplicialComplex, xs: &[usize]) -> Result<MorsePairing> {
    let mut seen = FxHashSet::default();
    for &x in xs {
        if x >= c.ground() {
            return Err(Error::OutsideGround { vertex: x, ground: c.ground() });
        }
        if !seen.insert(x) {
            return Err(Error::DuplicatePairingVertex(format!("e{x}")));
        }
    }
    let mut state = FaceState::new(c);
    let mut steps = Vec::with_capacity(xs.len());
    for &x in xs {
        let ep = element_pairing(&state, x);
        state.remove_all(&ep.touched);
        steps.push(ep.pairs);
    }
    let mut p = MorsePairing {
        sequence: xs.to_vec(),
        steps,
        critical: state.sorted(),
        face_count: c.face_count(),
        acyclic: false,
    };
    p.acyclic = verify_acyclic(c, &p)?;
    Ok(p)
}

/// Checks that `p` is a partial pairing of covering relations of `c` and
/// that no closed V-path exists.
///
/// V-paths alternate between two adjacent dimensions, so each layer gets
/// its own digraph on pairs: pair `(σ, τ)` points to pair `(σ', τ')` when
/// `σ' ≠ σ` is a facet of `τ`. The pairing is acyclic iff each of these is a DAG.
pub fn verify_acyclic(c: &SimplicialComplex, p: &MorsePairing) -> Result<bool> {
    verify_pairs_acyclic(c, &p.pairs().collect::<Vec<_>>())
}

/// [`verify_acyclic`] on a bare list of pairs.
pub fn verify_pairs_acyclic(c: &SimplicialComplex, pairs: &[(Face, Face)]) -> Result<bool> {
    let mut used: FxHashSet<Face> = FxHashSet::default();
    let mut by_layer: BTreeMap<usize, Vec<(Face, Face)>> = BTreeMap::new();
    for &(s, t) in pairs {
        if !s.is_subset(t) || t.len() != s.len() + 1 {
            return Err(Error::MalformedPairing(format!("{s:?} is not a facet of {t:?}")));
        }
        for f in [s, t] {
            if !c.contains_listed(f) {
                return Err(Error::MalformedPairing(format!("{f:?} is not a face")));
            }
            if !used.insert(f) {
                return Err(Error::MalformedPairing(format!("{f:?} occurs in two pairs")));
            }
        }
        by_layer.entry(s.len()).or_default().push((s, t));
    }
    Ok(by_layer.values().all(|layer| layer_is_acyclic(layer)))
}

fn layer_is_acyclic(layer: &[(Face, Face)]) -> bool {
    let index: FxHashMap<Face, usize> = layer.iter().enumerate().map(|(i, &(s, _))| (s, i)).collect();
    let succ: Vec<Vec<usize>> = layer
        .par_iter()
        .map(|&(s, t)| {
            t.iter()
                .map(|v| t.without(v))
                .filter(|&f| f != s)
                .filter_map(|f| index.get(&f).copied())
                .collect()
        })
        .collect();
    let mut indeg = vec![0usize; layer.len()];
    for out in &succ {
        for &j in out {
            indeg[j] += 1;
        }
    }
    let mut queue: Vec<usize> = (0..layer.len()).filter(|&i| indeg[i] == 0).collect();
    let mut done = 0;
    while let Some(i) = queue.pop() {
        done += 1;
        for &j in &succ[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                queue.push(j);
            }
        }
    }
    done == layer.len()
}

/// Cell counts of the homotopy-equivalent CW complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorseSummary {
    /// `c_d` for `d ≥ 0`, including the extra 0-cell when ∅ is paired.
    pub cells: BTreeMap<usize, usize>,
    /// Critical faces per dimension (no extra 0-cell).
    pub critical: BTreeMap<isize, usize>,
    pub empty_face_paired: bool,
    pub description: String,
}

impl fmt::Display for MorseSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.description)
    }
}

/// Counts critical cells and names the resulting CW complex when its shape
/// is a point, a sphere, or a wedge of equidimensional spheres.
pub fn morse_summary(p: &MorsePairing) -> Result<MorseSummary> {
    if !p.acyclic {
        return Err(Error::CyclicPairing);
    }
    let mut critical: BTreeMap<isize, usize> = BTreeMap::new();
    for f in &p.critical {
        *critical.entry(f.dim()).or_default() += 1;
    }
    let empty_paired = p.empty_face_paired();
    let mut cells: BTreeMap<usize, usize> = critical
        .iter()
        .filter(|(&d, _)| d >= 0)
        .map(|(&d, &c)| (d as usize, c))
        .collect();
    if empty_paired {
        *cells.entry(0).or_default() += 1;
    }
    let description = describe(&cells, critical.contains_key(&-1));
    Ok(MorseSummary { cells, critical, empty_face_paired: empty_paired, description })
}

fn describe(cells: &BTreeMap<usize, usize>, empty_critical: bool) -> String {
    if empty_critical {
        return format!("empty face critical; cells {}", list_cells(cells));
    }
    let higher: Vec<(usize, usize)> = cells.iter().filter(|(&d, _)| d > 0).map(|(&d, &c)| (d, c)).collect();
    match (cells.get(&0).copied().unwrap_or(0), higher.as_slice()) {
        (1, []) => "contractible (one 0-cell)".to_string(),
        (1, [(d, 1)]) => format!("one 0-cell and one {d}-cell: S^{d}"),
        (1, [(d, r)]) => vec![format!("S^{d}"); *r].join(" ∨ "),
        (r, []) if r > 1 => format!("{r} points"),
        _ => format!("cells {}", list_cells(cells)),
    }
}

fn list_cells(cells: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = cells.iter().map(|(d, c)| format!("c_{d}={c}")).collect();
    if parts.is_empty() {
        "none".into()
    } else {
        parts.join(", ")
    }
}
