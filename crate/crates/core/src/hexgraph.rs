//! Honeycomb graphs `H_{k×m×n}` built as duals of the triangulated
//! `(k,m,n)`-hexagon.
//!
//! Lattice points are `(p, q)` with the cube point `(x, y, z)` projecting to
//! `(x - z, y - z)`. Every unit triangle is one of
//!
//! * `A(p,q) = {(p,q), (p+1,q), (p+1,q+1)}`
//! * `B(p,q) = {(p,q), (p,q+1), (p+1,q+1)}`
//!
//! and `A(p,q)` borders `B(p,q)`, `B(p,q-1)` and `B(p+1,q)`. Graph vertices
//! are the triangles covered by the tiling of the empty box; edges join
//! triangles sharing a side.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::figure;
use crate::graph::GraphView;

/// Refuse graphs with more edges than this.
pub const EDGE_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TriKind {
    A,
    B,
}

/// A unit triangle of the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triangle {
    pub p: i32,
    pub q: i32,
    pub kind: TriKind,
}

impl Triangle {
    pub const fn a(p: i32, q: i32) -> Self {
        Triangle { p, q, kind: TriKind::A }
    }

    pub const fn b(p: i32, q: i32) -> Self {
        Triangle { p, q, kind: TriKind::B }
    }

    /// Centroid in a drawing frame, in half-units of the figure grid.
    pub fn drawing_position(self, frame: Frame) -> (i32, i32) {
        let dx = match self.kind {
            TriKind::A => -2,
            TriKind::B => 2,
        };
        (
            frame.ox + dx - 6 * self.p + 6 * self.q,
            frame.oy - 3 - 3 * self.p - 3 * self.q,
        )
    }
}

/// Origin of a figure's drawing frame: lattice point `(0,0)` sits at
/// `(ox, oy)` half-units, and `(p, q)` at `origin + p·(-6,-3) + q·(6,-3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frame {
    pub ox: i32,
    pub oy: i32,
}

/// Orientation of a visible unit square of a cube stack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceKind {
    /// Horizontal square `z = const` with corner `(x, y, z)`.
    Top,
    /// Square in the plane `x = const`.
    X,
    /// Square in the plane `y = const`.
    Y,
}

/// The two triangles covered by the lozenge of a unit square at `(x, y, z)`.
pub fn lozenge(kind: FaceKind, x: i32, y: i32, z: i32) -> (Triangle, Triangle) {
    let (p, q) = (x - z, y - z);
    match kind {
        FaceKind::Top => (Triangle::a(p, q), Triangle::b(p, q)),
        FaceKind::X => (Triangle::a(p - 1, q), Triangle::b(p - 1, q - 1)),
        FaceKind::Y => (Triangle::a(p - 1, q - 1), Triangle::b(p, q - 1)),
    }
}

/// Edge families of `H_{1×m×n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'a',
            Family::B => 'b',
            Family::D => 'd',
        }
    }
}

/// Symbolic reference to an edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    /// `a_{i,j}`, `b_{i,j}` or `d_{i,j}` on a `1×m×n` graph.
    Structured(Family, usize, usize),
    /// `x`, `y`, `z`, the Greek letters, and the `2×2×2` figure labels.
    Named(String),
    /// Edge between two vertex indices.
    Raw(usize, usize),
    /// Edge index, written `e<idx>`.
    Index(usize),
}

impl EdgeLabel {
    /// Parses the command-line syntax: `d_0_0`, `c_1_0`, `x`, `alpha`, `e12`, `3-7`.
    pub fn parse(s: &str) -> Result<EdgeLabel> {
        let s = s.trim();
        let unknown = || Error::UnknownLabel(s.to_string());
        if s.is_empty() {
            return Err(unknown());
        }
        let greek = match s {
            "α" | "alpha" => Some("alpha"),
            "β" | "beta" => Some("beta"),
            "γ" | "gamma" => Some("gamma"),
            "δ" | "delta" => Some("delta"),
            _ => None,
        };
        if let Some(g) = greek {
            return Ok(EdgeLabel::Named(g.to_string()));
        }
        if matches!(s, "x" | "y" | "z") {
            return Ok(EdgeLabel::Named(s.to_string()));
        }
        if let Some(rest) = s.strip_prefix('e') {
            if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                return rest.parse().map(EdgeLabel::Index).map_err(|_| unknown());
            }
        }
        if let Some((u, v)) = s.split_once('-') {
            let u: usize = u.parse().map_err(|_| unknown())?;
            let v: usize = v.parse().map_err(|_| unknown())?;
            return Ok(EdgeLabel::Raw(u, v));
        }
        let parts: Vec<&str> = s.split('_').collect();
        if parts.len() == 3 {
            let i: usize = parts[1].parse().map_err(|_| unknown())?;
            let j: usize = parts[2].parse().map_err(|_| unknown())?;
            let fam = match parts[0] {
                "a" => Some(Family::A),
                "b" => Some(Family::B),
                "d" => Some(Family::D),
                "c" => None,
                _ => return Err(unknown()),
            };
            return Ok(match fam {
                Some(f) => EdgeLabel::Structured(f, i, j),
                None => EdgeLabel::Named(format!("c_{i}_{j}")),
            });
        }
        Err(unknown())
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Structured(fam, i, j) => write!(f, "{}_{}_{}", fam.letter(), i, j),
            EdgeLabel::Named(s) => f.write_str(s),
            EdgeLabel::Raw(u, v) => write!(f, "{u}-{v}"),
            EdgeLabel::Index(e) => write!(f, "e{e}"),
        }
    }
}

/// Number of edges of `H_{k×m×n}`: `3(km+mn+nk) - (k+m+n)`.
pub fn edge_count_formula(k: u64, m: u64, n: u64) -> Option<u64> {
    let pairs = k.checked_mul(m)?.checked_add(m.checked_mul(n)?)?.checked_add(n.checked_mul(k)?)?;
    pairs.checked_mul(3)?.checked_sub(k + m + n)
}

/// Honeycomb graph with canonical vertex and edge order.
#[derive(Debug)]
pub struct HexGraph {
    k: usize,
    m: usize,
    n: usize,
    vertices: Vec<Triangle>,
    edges: Vec<(usize, usize)>,
    vertex_index: FxHashMap<Triangle, usize>,
    edge_index: FxHashMap<(usize, usize), usize>,
    structured: Vec<Option<(Family, usize, usize)>>,
    aliases: OnceLock<Result<BTreeMap<&'static str, usize>>>,
}

impl HexGraph {
    /// Builds `H_{k×m×n}`.
    pub fn new(k: usize, m: usize, n: usize) -> Result<HexGraph> {
        if k == 0 || m == 0 || n == 0 {
            return Err(Error::InvalidDimensions(format!(
                "k, m, n must be positive (got {k}x{m}x{n})"
            )));
        }
        let edges_needed = edge_count_formula(k as u64, m as u64, n as u64).unwrap_or(u64::MAX);
        if edges_needed > EDGE_CAP as u64 {
            return Err(Error::GraphTooLarge { edges: edges_needed, cap: EDGE_CAP });
        }
        let (k_, m_, n_) = (k as i32, m as i32, n as i32);

        let mut tris: Vec<Triangle> = Vec::new();
        let mut push = |(s, t): (Triangle, Triangle)| {
            tris.push(s);
            tris.push(t);
        };
        for r in 0..k_ {
            for c in 0..m_ {
                push(lozenge(FaceKind::Top, r, c, 0));
            }
        }
        for c in 0..m_ {
            for z in 0..n_ {
                push(lozenge(FaceKind::X, 0, c, z));
            }
        }
        for r in 0..k_ {
            for z in 0..n_ {
                push(lozenge(FaceKind::Y, r, 0, z));
            }
        }
        tris.sort_unstable();
        let before = tris.len();
        tris.dedup();
        if tris.len() != before {
            return Err(Error::Internal("empty tiling overlaps itself".into()));
        }
        let vertex_index: FxHashMap<Triangle, usize> =
            tris.iter().enumerate().map(|(i, &t)| (t, i)).collect();

        let mut raw_edges: Vec<(usize, usize)> = Vec::new();
        for (i, t) in tris.iter().enumerate() {
            if t.kind != TriKind::A {
                continue;
            }
            for nb in [Triangle::b(t.p, t.q), Triangle::b(t.p, t.q - 1), Triangle::b(t.p + 1, t.q)] {
                if let Some(&j) = vertex_index.get(&nb) {
                    raw_edges.push((i.min(j), i.max(j)));
                }
            }
        }

        let mut structured = Vec::new();
        if k == 1 {
            let mut labelled = structured_labels(m, n)
                .into_iter()
                .map(|(lab, (s, t))| {
                    let (u, v) = (vertex_index[&s], vertex_index[&t]);
                    (lab, (u.min(v), u.max(v)))
                })
                .collect::<Vec<_>>();
            labelled.sort_unstable();
            let mut check: Vec<(usize, usize)> = labelled.iter().map(|&(_, e)| e).collect();
            check.sort_unstable();
            raw_edges.sort_unstable();
            if check != raw_edges {
                return Err(Error::Internal("structured labels do not cover the edge set".into()));
            }
            raw_edges = labelled.iter().map(|&(_, e)| e).collect();
            structured = labelled.into_iter().map(|(l, _)| Some(l)).collect();
        } else {
            // Vertices are already sorted, so index order equals coordinate order.
            raw_edges.sort_unstable();
            structured.resize(raw_edges.len(), None);
        }
        debug_assert_eq!(raw_edges.len() as u64, edges_needed);

        let edge_index = raw_edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Ok(HexGraph {
            k,
            m,
            n,
            vertices: tris,
            edges: raw_edges,
            vertex_index,
            edge_index,
            structured,
            aliases: OnceLock::new(),
        })
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.k, self.m, self.n)
    }

    pub fn vertices(&self) -> &[Triangle] {
        &self.vertices
    }

    pub fn vertex_of(&self, t: Triangle) -> Option<usize> {
        self.vertex_index.get(&t).copied()
    }

    /// Index of the edge joining two vertices.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    /// Index of the edge joining two triangles.
    pub fn edge_of_triangles(&self, s: Triangle, t: Triangle) -> Option<usize> {
        self.edge_between(self.vertex_of(s)?, self.vertex_of(t)?)
    }

    /// Index of the edge drawn as the segment between two half-unit points.
    pub fn edge_at_segment(&self, frame: Frame, a: (i32, i32), b: (i32, i32)) -> Option<usize> {
        let s = self.triangle_at(frame, a)?;
        let t = self.triangle_at(frame, b)?;
        self.edge_of_triangles(s, t)
    }

    fn triangle_at(&self, frame: Frame, (x, y): (i32, i32)) -> Option<Triangle> {
        let s3 = frame.oy - 3 - y;
        if s3 % 3 != 0 {
            return None;
        }
        let s = s3 / 3;
        for (kind, dx) in [(TriKind::A, -2), (TriKind::B, 2)] {
            let d6 = x - frame.ox - dx;
            if d6 % 6 == 0 {
                let d = d6 / 6; // q - p
                if (s + d) % 2 == 0 {
                    let t = Triangle { p: (s - d) / 2, q: (s + d) / 2, kind };
                    if self.vertex_index.contains_key(&t) {
                        return Some(t);
                    }
                }
            }
        }
        None
    }

    /// Structured label of an edge when `k = 1`.
    pub fn structured_label(&self, e: usize) -> Option<(Family, usize, usize)> {
        self.structured.get(e).copied().flatten()
    }

    /// Index of `a_{i,j}`, `b_{i,j}` or `d_{i,j}` on a `1×m×n` graph.
    pub fn structured(&self, fam: Family, i: usize, j: usize) -> Result<usize> {
        if self.k != 1 {
            return Err(Error::RequiresSingleLayer(self.k));
        }
        let label = format!("{}_{}_{}", fam.letter(), i, j);
        if !structured_in_range(self.m, self.n, fam, i, j) {
            return Err(Error::LabelOutOfRange(format!("{label} on {}", self.name())));
        }
        self.structured
            .binary_search(&Some((fam, i, j)))
            .map_err(|_| Error::Internal(format!("{label} missing from edge list")))
    }

    pub fn a(&self, i: usize, j: usize) -> Result<usize> {
        self.structured(Family::A, i, j)
    }

    pub fn b(&self, i: usize, j: usize) -> Result<usize> {
        self.structured(Family::B, i, j)
    }

    pub fn d(&self, i: usize, j: usize) -> Result<usize> {
        self.structured(Family::D, i, j)
    }

    /// `x = d_{0,0}`.
    pub fn x(&self) -> Result<usize> {
        self.d(0, 0)
    }

    /// `y = d_{m,n}`.
    pub fn y(&self) -> Result<usize> {
        self.d(self.m, self.n)
    }

    /// `z = d_{m-1,1}`.
    pub fn z(&self) -> Result<usize> {
        self.d(self.m - 1, 1)
    }

    /// Figure aliases of `H_{2×2×2}`, checked against their support
    /// signatures on first use.
    pub fn aliases(&self) -> Result<&BTreeMap<&'static str, usize>> {
        if self.dims() != (2, 2, 2) {
            return Err(Error::UnknownLabel(format!("figure aliases exist only on H_2x2x2, not {}", self.name())));
        }
        self.aliases
            .get_or_init(|| figure::resolve_aliases(self))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Resolves a label to its edge index.
    pub fn resolve_label(&self, label: &EdgeLabel) -> Result<usize> {
        match label {
            EdgeLabel::Index(e) => {
                if *e < self.edges.len() {
                    Ok(*e)
                } else {
                    Err(Error::LabelOutOfRange(format!("e{e} on {}", self.name())))
                }
            }
            EdgeLabel::Raw(u, v) => self
                .edge_between(*u, *v)
                .ok_or_else(|| Error::UnknownLabel(format!("no edge {u}-{v} in {}", self.name()))),
            EdgeLabel::Structured(fam, i, j) => {
                if self.k == 1 {
                    self.structured(*fam, *i, *j)
                } else if self.dims() == (2, 2, 2) {
                    self.resolve_alias(&label.to_string())
                } else {
                    Err(Error::RequiresSingleLayer(self.k))
                }
            }
            EdgeLabel::Named(name) => match name.as_str() {
                "x" | "y" | "z" => {
                    if self.k != 1 {
                        return Err(Error::RequiresSingleLayer(self.k));
                    }
                    match name.as_str() {
                        "x" => self.x(),
                        "y" => self.y(),
                        _ => self.z(),
                    }
                }
                _ => self.resolve_alias(name),
            },
        }
    }

    /// Parses and resolves a label string.
    pub fn parse_label(&self, s: &str) -> Result<usize> {
        self.resolve_label(&EdgeLabel::parse(s)?)
    }

    fn resolve_alias(&self, name: &str) -> Result<usize> {
        if self.dims() != (2, 2, 2) {
            return Err(Error::UnknownLabel(format!("{name} on {}", self.name())));
        }
        self.aliases()?
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(format!("{name} on {}", self.name())))
    }

    /// Preferred display name of an edge.
    pub fn label_name(&self, e: usize) -> String {
        if let Some((f, i, j)) = self.structured_label(e) {
            return format!("{}_{}_{}", f.letter(), i, j);
        }
        if self.dims() == (2, 2, 2) {
            if let Ok(al) = self.aliases() {
                if let Some((name, _)) = al.iter().find(|(_, &idx)| idx == e) {
                    return (*name).to_string();
                }
            }
        }
        format!("e{e}")
    }

    /// All symbolic labels with their indices, sorted by name.
    pub fn label_map(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for e in 0..self.edges.len() {
            if let Some((f, i, j)) = self.structured_label(e) {
                out.insert(format!("{}_{}_{}", f.letter(), i, j), e);
            }
        }
        if self.k == 1 {
            for (name, r) in [("x", self.x()), ("y", self.y()), ("z", self.z())] {
                if let Ok(e) = r {
                    out.insert(name.to_string(), e);
                }
            }
        }
        if self.dims() == (2, 2, 2) {
            if let Ok(al) = self.aliases() {
                for (name, &e) in al {
                    out.insert((*name).to_string(), e);
                }
            }
        }
        out
    }

    /// `{d_{i,j} : 1 ≤ i ≤ m-1, 1 ≤ j ≤ n-1}`.
    pub fn significant_edges(&self) -> Result<Vec<usize>> {
        if self.k != 1 {
            return Err(Error::RequiresSingleLayer(self.k));
        }
        let mut out = Vec::with_capacity((self.m - 1) * (self.n - 1));
        for i in 1..self.m {
            for j in 1..self.n {
                out.push(self.d(i, j)?);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn name(&self) -> String {
        format!("H_{}x{}x{}", self.k, self.m, self.n)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<_> = self
            .vertices
            .iter()
            .map(|t| {
                serde_json::json!([t.p, t.q, match t.kind {
                    TriKind::A => 0,
                    TriKind::B => 1,
                }])
            })
            .collect();
        serde_json::json!({
            "k": self.k,
            "m": self.m,
            "n": self.n,
            "vertices": vertices,
            "edges": self.edges,
            "labels": self.label_map(),
        })
    }

    pub fn to_dot(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let _ = writeln!(s, "graph {} {{", self.name());
        for (i, t) in self.vertices.iter().enumerate() {
            let kind = match t.kind {
                TriKind::A => 'A',
                TriKind::B => 'B',
            };
            let _ = writeln!(s, "  {i} [label=\"{kind}({},{})\"];", t.p, t.q);
        }
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let _ = writeln!(s, "  {u} -- {v} [label=\"{}\"];", self.label_name(e));
        }
        s.push_str("}\n");
        s
    }
}

impl GraphView for HexGraph {
    fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

fn structured_in_range(m: usize, n: usize, fam: Family, i: usize, j: usize) -> bool {
    match fam {
        Family::A => (1..=m).contains(&i) && j <= n,
        Family::B => i <= m && (1..=n).contains(&j),
        Family::D => i <= m && j <= n && (i, j) != (0, n) && (i, j) != (m, 0),
    }
}

/// Every structured label of `H_{1×m×n}` with its pair of triangles.
///
/// `a_{i,j}` is the top square over column `i` at height `j`, `b_{i,j}` the
/// right-side square between columns `i` and `i+1` at height `j-1`, and
/// `d_{i,j}` the left-side square in column `i+1` at height `j`.
fn structured_labels(m: usize, n: usize) -> Vec<((Family, usize, usize), (Triangle, Triangle))> {
    let mut out = Vec::new();
    for i in 0..=m {
        for j in 0..=n {
            let (ii, jj) = (i as i32, j as i32);
            if structured_in_range(m, n, Family::A, i, j) {
                out.push(((Family::A, i, j), lozenge(FaceKind::Top, 0, ii - 1, jj)));
            }
            if structured_in_range(m, n, Family::B, i, j) {
                out.push(((Family::B, i, j), lozenge(FaceKind::Y, 0, ii, jj - 1)));
            }
            if structured_in_range(m, n, Family::D, i, j) {
                out.push(((Family::D, i, j), lozenge(FaceKind::X, 1, ii, jj)));
            }
        }
    }
    out
}
