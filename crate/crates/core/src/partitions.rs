//! Plane partitions in a `k×m×n` box and their bijection with perfect
//! matchings (lozenge tilings) of `H_{k×m×n}`.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::{Face, FACE_WIDTH};
use crate::graph::GraphView;
use crate::hexgraph::{lozenge, FaceKind, HexGraph};

pub const PARTITION_CAP: usize = 10_000_000;
pub const MATCHING_CAP: usize = 1_000_000;

/// `k×m` array with entries in `0..=n`, weakly decreasing along rows and
/// down columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PlanePartition {
    k: usize,
    m: usize,
    n: usize,
    entries: Vec<u32>,
}

impl PlanePartition {
    /// Row-major entries; validates shape, range and monotonicity.
    pub fn new(k: usize, m: usize, n: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != k * m {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {k}x{m} array, got {}",
                k * m,
                entries.len()
            )));
        }
        let pp = PlanePartition { k, m, n, entries };
        for r in 0..k {
            for c in 0..m {
                let h = pp.get(r, c);
                if h as usize > n {
                    return Err(Error::OutOfRange(format!("entry {h} at ({r},{c}) exceeds {n}")));
                }
                if (c > 0 && pp.get(r, c - 1) < h) || (r > 0 && pp.get(r - 1, c) < h) {
                    return Err(Error::OutOfRange(format!("entries increase at ({r},{c})")));
                }
            }
        }
        Ok(pp)
    }

    /// One-row partition `(h_1, …, h_m)`.
    pub fn row(n: usize, heights: &[u32]) -> Result<Self> {
        Self::new(1, heights.len(), n, heights.to_vec())
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.k, self.m, self.n)
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.m + c]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entry with the box walls: `n` above row 0 and left of column 0,
    /// `0` below the last row and right of the last column.
    fn padded(&self, r: isize, c: isize) -> i32 {
        if r < 0 || c < 0 {
            self.n as i32
        } else if r as usize >= self.k || c as usize >= self.m {
            0
        } else {
            self.get(r as usize, c as usize) as i32
        }
    }

    /// Entries concatenated, e.g. `2210` for a 2×2 tableau.
    pub fn compact(&self) -> String {
        self.entries.iter().map(|h| h.to_string()).collect::<Vec<_>>().join(if self.n > 9 { "," } else { "" })
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.k {
            if r > 0 {
                f.write_str("/")?;
            }
            let row: Vec<String> = (0..self.m).map(|c| self.get(r, c).to_string()).collect();
            f.write_str(&row.join(","))?;
        }
        Ok(())
    }
}

/// All plane partitions in the box, lexicographic in row-major entries.
pub fn enumerate_plane_partitions(k: usize, m: usize, n: usize) -> Result<Vec<PlanePartition>> {
    let cells = k * m;
    let mut out = Vec::new();
    let mut cur = vec![0u32; cells];

    fn rec(
        idx: usize,
        dims: (usize, usize, usize),
        cur: &mut Vec<u32>,
        out: &mut Vec<PlanePartition>,
    ) -> Result<()> {
        let (k, m, n) = dims;
        if idx == k * m {
            if out.len() >= PARTITION_CAP {
                return Err(Error::TooManyPartitions(PARTITION_CAP));
            }
            out.push(PlanePartition { k, m, n, entries: cur.clone() });
            return Ok(());
        }
        let (r, c) = (idx / m, idx % m);
        let mut bound = n as u32;
        if c > 0 {
            bound = bound.min(cur[idx - 1]);
        }
        if r > 0 {
            bound = bound.min(cur[idx - m]);
        }
        for h in 0..=bound {
            cur[idx] = h;
            rec(idx + 1, dims, cur, out)?;
        }
        Ok(())
    }

    rec(0, (k, m, n), &mut cur, &mut out)?;
    Ok(out)
}

/// A set of edges of a graph, stored as a bitset over edge indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: FixedBitSet,
}

impl Matching {
    pub fn from_edges(ground: usize, edges: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = FixedBitSet::with_capacity(ground);
        for e in edges {
            bits.insert(e);
        }
        Matching { edges: bits }
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.contains(e)
    }

    pub fn len(&self) -> usize {
        self.edges.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Edge indices in increasing order.
    pub fn edges(&self) -> Vec<usize> {
        self.edges.ones().collect()
    }

    /// The matching as a complex face; needs every edge index below 128.
    pub fn to_face(&self) -> Result<Face> {
        if let Some(e) = self.edges.ones().find(|&e| e >= FACE_WIDTH) {
            return Err(Error::ComplexTooLarge(format!(
                "edge index {e} exceeds the {FACE_WIDTH}-element face width"
            )));
        }
        Ok(self.edges.ones().collect())
    }

    /// Checks pairwise disjointness and full cover.
    pub fn check_perfect<G: GraphView + ?Sized>(&self, g: &G) -> Result<()> {
        let mut covered = vec![false; g.vertex_count()];
        for e in self.edges.ones() {
            let &(u, v) = g
                .edges()
                .get(e)
                .ok_or_else(|| Error::NotPerfectMatching(format!("edge index {e} out of range")))?;
            for w in [u, v] {
                if covered[w] {
                    return Err(Error::NotPerfectMatching(format!("vertex {w} covered twice")));
                }
                covered[w] = true;
            }
        }
        if let Some(w) = covered.iter().position(|c| !c) {
            return Err(Error::NotPerfectMatching(format!("vertex {w} uncovered")));
        }
        Ok(())
    }
}

fn check_dims(g: &HexGraph, p: &PlanePartition) -> Result<()> {
    if g.dims() != p.dims() {
        let (k, m, n) = p.dims();
        return Err(Error::DimensionMismatch(format!(
            "partition box {k}x{m}x{n} does not fit {}",
            g.name()
        )));
    }
    Ok(())
}

/// Matching of a plane partition: one lozenge per visible unit square of
/// its cube stack.
pub fn pp_to_matching(g: &HexGraph, p: &PlanePartition) -> Result<Matching> {
    check_dims(g, p)?;
    let (k, m, _) = p.dims();
    let (ki, mi) = (k as isize, m as isize);
    let mut edges = Vec::new();
    let mut add = |kind: FaceKind, x: isize, y: isize, z: i32| -> Result<()> {
        let (s, t) = lozenge(kind, x as i32, y as i32, z);
        let e = g
            .edge_of_triangles(s, t)
            .ok_or_else(|| Error::Internal(format!("lozenge {kind:?} at ({x},{y},{z}) outside the hexagon")))?;
        edges.push(e);
        Ok(())
    };
    for r in 0..ki {
        for c in 0..mi {
            add(FaceKind::Top, r, c, p.padded(r, c))?;
        }
    }
    for r in 0..=ki {
        for c in 0..mi {
            for z in p.padded(r, c)..p.padded(r - 1, c) {
                add(FaceKind::X, r, c, z)?;
            }
        }
    }
    for c in 0..=mi {
        for r in 0..ki {
            for z in p.padded(r, c)..p.padded(r, c - 1) {
                add(FaceKind::Y, r, c, z)?;
            }
        }
    }
    Ok(Matching::from_edges(g.edge_count(), edges))
}

/// Closed-form matching of `(h_1, …, h_m)` on `H_{1×m×n}`: with `h_0 = n`
/// and `h_{m+1} = 0`, `a_{i,j}` iff `j = h_i`, `b_{i,j}` iff
/// `h_i ≥ j > h_{i+1}`, `d_{i,j}` iff `j > h_i` or `j < h_{i+1}`.
pub fn pp_to_matching_k1(g: &HexGraph, p: &PlanePartition) -> Result<Matching> {
    let (k, m, n) = g.dims();
    if k != 1 {
        return Err(Error::RequiresSingleLayer(k));
    }
    check_dims(g, p)?;
    let h = |i: usize| -> usize {
        if i == 0 {
            n
        } else if i > m {
            0
        } else {
            p.get(0, i - 1) as usize
        }
    };
    let mut edges = Vec::new();
    for i in 1..=m {
        edges.push(g.a(i, h(i))?);
    }
    for i in 0..=m {
        for j in 1..=n {
            if h(i) >= j && j > h(i + 1) {
                edges.push(g.b(i, j)?);
            }
        }
        for j in 0..=n {
            if (i, j) == (0, n) || (i, j) == (m, 0) {
                continue;
            }
            if j > h(i) || j < h(i + 1) {
                edges.push(g.d(i, j)?);
            }
        }
    }
    Ok(Matching::from_edges(g.edge_count(), edges))
}

/// Inverse of [`pp_to_matching`].
///
/// Heights are read off the horizontal lozenges: along each diagonal
/// `r - c = const` the top square of cell `(r, c)` sits at lattice
/// `p + q = r + c - 2h`, strictly increasing down the diagonal.
pub fn matching_to_pp(g: &HexGraph, mt: &Matching) -> Result<PlanePartition> {
    mt.check_perfect(g)?;
    let (k, m, n) = g.dims();
    let verts = g.vertices();
    let mut diagonals: Vec<Vec<i32>> = vec![Vec::new(); k + m - 1];
    for e in mt.edges.ones() {
        let (u, v) = g.edges()[e];
        let (s, t) = (verts[u], verts[v]);
        if (s.p, s.q) == (t.p, t.q) {
            let d = s.p - s.q + (m as i32 - 1);
            if d < 0 || d as usize >= diagonals.len() {
                return Err(Error::NotPerfectMatching("horizontal lozenge off the box".into()));
            }
            diagonals[d as usize].push(s.p + s.q);
        }
    }
    let mut entries = vec![0u32; k * m];
    for (d, sums) in diagonals.iter_mut().enumerate() {
        sums.sort_unstable();
        let delta = d as isize - (m as isize - 1); // r - c
        let (r0, c0) = if delta >= 0 { (delta as usize, 0) } else { (0, (-delta) as usize) };
        let len = (k - r0).min(m - c0);
        if sums.len() != len {
            return Err(Error::NotPerfectMatching(format!(
                "diagonal {delta} has {} horizontal lozenges, expected {len}",
                sums.len()
            )));
        }
        for (t, &s) in sums.iter().enumerate() {
            let (r, c) = (r0 + t, c0 + t);
            let twice_h = (r + c) as i32 - s;
            if twice_h < 0 || twice_h % 2 != 0 || twice_h / 2 > n as i32 {
                return Err(Error::NotPerfectMatching(format!("inconsistent height at ({r},{c})")));
            }
            entries[r * m + c] = (twice_h / 2) as u32;
        }
    }
    let pp = PlanePartition::new(k, m, n, entries)
        .map_err(|e| Error::NotPerfectMatching(format!("heights do not form a plane partition: {e}")))?;
    if pp_to_matching(g, &pp)? != *mt {
        return Err(Error::NotPerfectMatching("matching is not a lozenge tiling of a cube stack".into()));
    }
    Ok(pp)
}

/// Every perfect matching of `g` by backtracking on the lowest uncovered
/// vertex; sorted by edge-index lists.
pub fn enumerate_perfect_matchings<G: GraphView + ?Sized>(g: &G) -> Result<Vec<Matching>> {
    let nv = g.vertex_count();
    if nv % 2 == 1 {
        return Ok(Vec::new());
    }
    let adj = g.incidence();
    let mut covered = vec![false; nv];
    let mut chosen: Vec<usize> = Vec::with_capacity(nv / 2);
    let mut found: Vec<Vec<usize>> = Vec::new();

    fn rec(
        adj: &[Vec<(usize, usize)>],
        from: usize,
        covered: &mut [bool],
        chosen: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        let Some(u) = (from..covered.len()).find(|&u| !covered[u]) else {
            if found.len() >= MATCHING_CAP {
                return Err(Error::TooManyMatchings(MATCHING_CAP));
            }
            let mut es = chosen.clone();
            es.sort_unstable();
            found.push(es);
            return Ok(());
        };
        covered[u] = true;
        for &(w, e) in &adj[u] {
            if !covered[w] {
                covered[w] = true;
                chosen.push(e);
                rec(adj, u + 1, covered, chosen, found)?;
                chosen.pop();
                covered[w] = false;
            }
        }
        covered[u] = false;
        Ok(())
    }

    rec(&adj, 0, &mut covered, &mut chosen, &mut found)?;
    found.sort_unstable();
    let ne = g.edge_count();
    Ok(found.into_iter().map(|es| Matching::from_edges(ne, es)).collect())
}

/// Every perfect matching of a honeycomb with its plane partition, in
/// partition order.
pub fn matchings_with_partitions(g: &HexGraph) -> Result<Vec<(PlanePartition, Matching)>> {
    let (k, m, n) = g.dims();
    enumerate_plane_partitions(k, m, n)?
        .into_iter()
        .map(|p| {
            let mt = pp_to_matching(g, &p)?;
            Ok((p, mt))
        })
        .collect()
}

/// `C(m+n, m)` with overflow check.
pub fn binomial(a: u64, b: u64) -> Option<u64> {
    if b > a {
        return Some(0);
    }
    let b = b.min(a - b);
    let mut acc: u64 = 1;
    for i in 0..b {
        acc = acc.checked_mul(a - i)? / (i + 1);
    }
    Some(acc)
}
