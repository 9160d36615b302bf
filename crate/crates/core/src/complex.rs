//! Simplicial complexes given by facets, with explicit face enumeration,
//! f-vectors and nerves.

use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::face::{Face, FACE_WIDTH};
use crate::graph::GraphView;
use crate::partitions::enumerate_perfect_matchings;

pub const DEFAULT_FACE_CAP: usize = 10_000_000;

/// Largest number of sets accepted by [`nerve`].
pub const NERVE_MAX_SETS: usize = 20;

/// Either the void complex (no faces at all) or a complex containing at
/// least the empty face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Complex {
    Void,
    Simplicial(SimplicialComplex),
}

impl Complex {
    /// Union of the power sets of `facets`; an empty list gives [`Complex::Void`].
    pub fn from_facets(ground: usize, facets: &[Face], cap: usize) -> Result<Complex> {
        if facets.is_empty() {
            return Ok(Complex::Void);
        }
        SimplicialComplex::from_facets(ground, facets, cap).map(Complex::Simplicial)
    }

    pub fn is_void(&self) -> bool {
        matches!(self, Complex::Void)
    }

    pub fn simplicial(&self) -> Result<&SimplicialComplex> {
        match self {
            Complex::Void => Err(Error::VoidComplex("operation needs a non-void complex")),
            Complex::Simplicial(c) => Ok(c),
        }
    }

    pub fn is_face(&self, s: Face) -> bool {
        match self {
            Complex::Void => false,
            Complex::Simplicial(c) => c.is_face(s),
        }
    }
}

/// A non-void simplicial complex with every face listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<Face>,
    /// `layers[c]` holds the faces of cardinality `c`, sorted.
    layers: Vec<Vec<Face>>,
}

impl SimplicialComplex {
    /// Complex generated by `facets` (non-maximal inputs are dropped).
    pub fn from_facets(ground: usize, facets: &[Face], cap: usize) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::VoidComplex("no facets"));
        }
        check_ground(ground, facets)?;
        let facets = maximal(facets);

        let mut bound: u128 = 0;
        for f in &facets {
            let size = 1u128 << f.len().min(127);
            if size > cap as u128 {
                return Err(Error::ComplexTooLarge(format!(
                    "a facet of size {} alone has 2^{} faces, cap is {cap}",
                    f.len(),
                    f.len()
                )));
            }
            bound += size;
        }
        if bound > 64 * cap as u128 {
            return Err(Error::ComplexTooLarge(format!(
                "{} facets span up to {bound} faces, cap is {cap}",
                facets.len()
            )));
        }

        let mut seen: FxHashSet<Face> = FxHashSet::default();
        seen.reserve((bound as usize).min(cap));
        let mut over = false;
        for f in &facets {
            f.for_each_subset(|s| {
                seen.insert(s);
            });
            if seen.len() > cap {
                over = true;
                break;
            }
        }
        if over {
            return Err(Error::ComplexTooLarge(format!("more than {cap} faces")));
        }
        Ok(Self::from_face_set(ground, facets, seen))
    }

    /// Complex on an explicit downward-closed face family.
    pub fn from_faces(ground: usize, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        let set: FxHashSet<Face> = faces.into_iter().collect();
        if set.is_empty() {
            return Err(Error::VoidComplex("no faces"));
        }
        let all: Vec<Face> = set.iter().copied().collect();
        check_ground(ground, &all)?;
        for &f in &set {
            if let Some(v) = f.iter().find(|&v| !set.contains(&f.without(v))) {
                return Err(Error::Internal(format!("face family not closed: {f:?} minus {v}")));
            }
        }
        let facets = maximal(&all);
        Ok(Self::from_face_set(ground, facets, set))
    }

    fn from_face_set(ground: usize, facets: Vec<Face>, set: FxHashSet<Face>) -> Self {
        let top = facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut layers: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
        for f in set {
            layers[f.len()].push(f);
        }
        layers.par_iter_mut().for_each(|l| l.sort_unstable());
        SimplicialComplex { ground, facets, layers }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    /// Inclusion-maximal faces, sorted.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Largest face dimension.
    pub fn dim(&self) -> isize {
        self.layers.len() as isize - 2
    }

    /// Faces of dimension `d` (cardinality `d + 1`), sorted.
    pub fn faces_of_dim(&self, d: isize) -> &[Face] {
        let c = d + 1;
        if c < 0 || c as usize >= self.layers.len() {
            &[]
        } else {
            &self.layers[c as usize]
        }
    }

    /// Faces grouped by cardinality.
    pub fn layers(&self) -> &[Vec<Face>] {
        &self.layers
    }

    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.layers.iter().flatten().copied()
    }

    pub fn face_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// True iff `s` lies in some facet.
    pub fn is_face(&self, s: Face) -> bool {
        self.facets.iter().any(|&f| s.is_subset(f))
    }

    /// Membership in the explicit face list.
    pub fn contains_listed(&self, s: Face) -> bool {
        self.layers
            .get(s.len())
            .is_some_and(|l| l.binary_search(&s).is_ok())
    }

    /// Position of a face within its layer.
    pub fn index_in_layer(&self, s: Face) -> Option<usize> {
        self.layers.get(s.len())?.binary_search(&s).ok()
    }

    /// `f_{-1}, f_0, f_1, …`
    pub fn f_vector(&self) -> Vec<u64> {
        self.layers.iter().map(|l| l.len() as u64).collect()
    }

    /// `Σ_{d ≥ 0} (-1)^d f_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.reduced_euler_characteristic() + 1
    }

    /// `Σ_{d ≥ -1} (-1)^d f_d`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.layers
            .iter()
            .enumerate()
            .map(|(c, l)| if c % 2 == 1 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    /// Every face minus any one element is again a face.
    pub fn is_downward_closed(&self) -> bool {
        self.faces()
            .collect::<Vec<_>>()
            .par_iter()
            .all(|&f| f.iter().all(|v| self.contains_listed(f.without(v))))
    }

    pub fn to_json(&self, facets_only: bool) -> serde_json::Value {
        let facets: Vec<Vec<usize>> = self.facets.iter().map(|f| f.to_vec()).collect();
        if facets_only {
            serde_json::json!({ "ground": self.ground, "facets": facets })
        } else {
            serde_json::json!({ "ground": self.ground, "facets": facets, "f_vector": self.f_vector() })
        }
    }
}

/// Intersection of two facets by index.
pub fn facet_intersection(facets: &[Face], i: usize, j: usize) -> Result<Face> {
    let get = |x: usize| {
        facets
            .get(x)
            .copied()
            .ok_or_else(|| Error::OutOfRange(format!("facet index {x} of {}", facets.len())))
    };
    Ok(get(i)?.intersection(get(j)?))
}

/// Perfect matching complex of a graph with at most 128 edges.
pub fn perfect_matching_complex<G: GraphView + ?Sized>(g: &G, cap: usize) -> Result<Complex> {
    if g.edge_count() > FACE_WIDTH {
        return Err(Error::ComplexTooLarge(format!(
            "{} edges exceed the {FACE_WIDTH}-element face width",
            g.edge_count()
        )));
    }
    let facets = enumerate_perfect_matchings(g)?
        .iter()
        .map(|m| m.to_face())
        .collect::<Result<Vec<_>>>()?;
    Complex::from_facets(g.edge_count(), &facets, cap)
}

/// Nerve of a family of sets: vertex `i` for each set, and `J` a face when
/// the sets indexed by `J` share an element.
pub fn nerve(sets: &[Face]) -> Result<Complex> {
    if sets.len() > NERVE_MAX_SETS {
        return Err(Error::TooManyFacets { count: sets.len(), max: NERVE_MAX_SETS });
    }
    if sets.is_empty() {
        return Ok(Complex::Void);
    }
    let mut faces = vec![Face::EMPTY];

    fn rec(sets: &[Face], start: usize, cur: Face, meet: Face, faces: &mut Vec<Face>) {
        for i in start..sets.len() {
            let next = meet.intersection(sets[i]);
            if !next.is_empty() {
                let f = cur.with(i);
                faces.push(f);
                rec(sets, i + 1, f, next, faces);
            }
        }
    }

    rec(sets, 0, Face::EMPTY, Face(u128::MAX), &mut faces);
    SimplicialComplex::from_faces(sets.len(), faces).map(Complex::Simplicial)
}

fn check_ground(ground: usize, faces: &[Face]) -> Result<()> {
    if ground > FACE_WIDTH {
        return Err(Error::ComplexTooLarge(format!("ground set {ground} exceeds {FACE_WIDTH}")));
    }
    for f in faces {
        if let Some(v) = f.max_element().filter(|&v| v >= ground) {
            return Err(Error::OutsideGround { vertex: v, ground });
        }
    }
    Ok(())
}

fn maximal(faces: &[Face]) -> Vec<Face> {
    let mut v: Vec<Face> = faces.to_vec();
    v.sort_unstable_by_key(|f| std::cmp::Reverse(f.len()));
    let mut out: Vec<Face> = Vec::new();
    for f in v {
        if !out.iter().any(|&g| f.is_subset(g)) {
            out.push(f);
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    fn face(v: &[usize]) -> Face {
        v.iter().copied().collect()
    }

    #[test]
    fn hexagon_complex_is_two_triangles() {
        let c = perfect_matching_complex(&SimpleGraph::cycle(6), DEFAULT_FACE_CAP).unwrap();
        let c = c.simplicial().unwrap();
        assert_eq!(c.f_vector(), vec![1, 6, 6, 2]);
        assert_eq!(c.euler_characteristic(), 2);
    }

    #[test]
    fn path_gives_simplex() {
        let c = perfect_matching_complex(&SimpleGraph::path(6), DEFAULT_FACE_CAP).unwrap();
        let c = c.simplicial().unwrap();
        assert_eq!(c.face_count(), 8);
        assert_eq!(c.reduced_euler_characteristic(), 0);
    }

    #[test]
    fn void_and_empty_are_distinct() {
        let void = perfect_matching_complex(&SimpleGraph::complete_bipartite(2, 3), DEFAULT_FACE_CAP).unwrap();
        assert!(void.is_void());
        assert!(!void.is_face(Face::EMPTY));
        let empty = Complex::from_facets(3, &[Face::EMPTY], DEFAULT_FACE_CAP).unwrap();
        assert!(empty.is_face(Face::EMPTY));
        assert_eq!(empty.simplicial().unwrap().f_vector(), vec![1]);
    }

    #[test]
    fn cap_is_enforced() {
        let big = Face((1u128 << 30) - 1);
        assert!(matches!(
            SimplicialComplex::from_facets(30, &[big], 1000),
            Err(Error::ComplexTooLarge(_))
        ));
    }

    #[test]
    fn nerve_of_disjoint_sets() {
        let n = nerve(&[face(&[0, 1]), face(&[2, 3])]).unwrap();
        assert_eq!(n.simplicial().unwrap().f_vector(), vec![1, 2]);
        assert!(matches!(nerve(&vec![face(&[0]); 21]), Err(Error::TooManyFacets { .. })));
    }

    #[test]
    fn outside_ground() {
        assert!(matches!(
            SimplicialComplex::from_facets(3, &[face(&[5])], 100),
            Err(Error::OutsideGround { vertex: 5, ground: 3 })
        ));
    }
}
