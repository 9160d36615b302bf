//! Scripted checks of the structural results on honeycomb matching
//! complexes. Every check returns a [`TheoremReport`] of named claims; a
//! report passes only when each of its claims does.
//!
//! Homotopy types are not machine-checkable. The reports check what they
//! imply instead: Morse critical data, integer homology, and the set
//! identities the arguments rely on.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::complex::{nerve, perfect_matching_complex, Complex, SimplicialComplex, DEFAULT_FACE_CAP};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::figure::{CATALOG_2X2X2, FRAME_2X2X2};
use crate::graph::SimpleGraph;
use crate::hexgraph::HexGraph;
use crate::homology::{reduced_homology, HomologyProfile};
use crate::morse::{element_pairing, morse_summary, sequential_pairing, FaceState, MorsePairing};
use crate::partitions::{matchings_with_partitions, pp_to_matching_k1, PlanePartition};

/// One named assertion of a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub passed: bool,
    pub detail: String,
}

/// Graph dimensions a report was run with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl Params {
    fn kmn(k: usize, m: usize, n: usize) -> Self {
        Params { k: Some(k), m: Some(m), n: Some(n) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one theorem check. Timings are kept out of the JSON form so
/// that reruns serialise identically.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub params: Params,
    /// Supported parameter range of this check.
    pub range: String,
    pub status: Status,
    pub claims: Vec<Claim>,
    #[serde(skip)]
    pub timings: Vec<(String, f64)>,
}

impl TheoremReport {
    fn new(theorem: &str, params: Params, range: &str) -> Self {
        TheoremReport {
            theorem: theorem.into(),
            params,
            range: range.into(),
            status: Status::Fail,
            claims: Vec::new(),
            timings: Vec::new(),
        }
    }

    fn check(&mut self, id: &str, statement: &str, passed: bool, detail: impl Into<String>) {
        self.claims.push(Claim { id: id.into(), statement: statement.into(), passed, detail: detail.into() });
    }

    fn timed<T>(&mut self, label: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        self.timings.push((label.into(), t.elapsed().as_secs_f64()));
        out
    }

    fn finish(mut self) -> Self {
        self.status = if !self.claims.is_empty() && self.claims.iter().all(|c| c.passed) {
            Status::Pass
        } else {
            Status::Fail
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed_claims(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.passed)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = [("k", self.params.k), ("m", self.params.m), ("n", self.params.n)]
            .iter()
            .filter_map(|(name, v)| v.map(|v| format!("{name}={v}")))
            .collect();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{} [{}]: {status}", self.theorem, dims.join(" "))?;
        for c in &self.claims {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "  {mark} {}: {}", c.id, c.detail)?;
        }
        Ok(())
    }
}

fn simplicial(c: Complex, what: &'static str) -> Result<SimplicialComplex> {
    match c {
        Complex::Simplicial(s) => Ok(s),
        Complex::Void => Err(Error::VoidComplex(what)),
    }
}

fn names(g: &HexGraph, f: Face) -> String {
    let v: Vec<String> = f.iter().map(|e| g.label_name(e)).collect();
    format!("{{{}}}", v.join(", "))
}

fn face_of(edges: &[usize]) -> Face {
    edges.iter().copied().collect()
}

/// `c_d ≥ b̃_d` for every `d ≥ -1` and `Σ (-1)^d c_d = χ̃`, with the empty
/// face counted in dimension `-1` when it is critical.
fn morse_inequalities(p: &MorsePairing, h: &HomologyProfile) -> (bool, String) {
    let mut c: BTreeMap<isize, i64> = BTreeMap::new();
    for f in &p.critical {
        *c.entry(f.dim()).or_default() += 1;
    }
    let mut ok = h.betti.iter().all(|(d, &b)| c.get(d).copied().unwrap_or(0) >= b as i64);
    let alt: i64 = c.iter().map(|(&d, &v)| if d.rem_euclid(2) == 0 { v } else { -v }).sum();
    ok &= alt == h.euler_characteristic();
    let counts: Vec<String> = c.iter().map(|(d, v)| format!("c_{d}={v}")).collect();
    let counts = if counts.is_empty() { "no critical faces".to_string() } else { counts.join(" ") };
    (ok, format!("{counts}; alternating sum {alt}; {h}"))
}

fn check_pairing_basics(r: &mut TheoremReport, c: &SimplicialComplex, p: &MorsePairing, h: &HomologyProfile) {
    r.check(
        "acyclic",
        "the union of the element pairings is acyclic",
        p.acyclic,
        format!("{} pairs over {} faces", p.pair_count(), c.face_count()),
    );
    r.check(
        "partition",
        "pairs and critical faces partition the face poset",
        p.partitions_faces(),
        format!("{} = 2*{} + {}", p.face_count, p.pair_count(), p.critical.len()),
    );
    let (ok, detail) = morse_inequalities(p, h);
    r.check("morse-inequalities", "critical counts bound the reduced Betti numbers", ok, detail);
}

/// Line of hexagons. The lattice graph `H_{1×n×1}` carries the labels of the
/// line drawing (hexagons `T_{i,1}`); `H_{1×1×n}` is the same graph drawn the
/// other way and is checked for homology as well.
pub fn verify_line(n: usize) -> Result<TheoremReport> {
    if !(1..=6).contains(&n) {
        return Err(Error::OutOfRange(format!("line check supports 1 <= n <= 6 (got n={n})")));
    }
    let mut r = TheoremReport::new("T-line", Params::kmn(1, 1, n), "2 <= n <= 6; n = 1 reports the hexagon");
    if n == 1 {
        let g = HexGraph::new(1, 1, 1)?;
        let c = simplicial(perfect_matching_complex(&g, DEFAULT_FACE_CAP)?, "hexagon")?;
        let h = reduced_homology(&Complex::Simplicial(c.clone()))?;
        let f = c.facets();
        let ok = f.len() == 2 && f[0].intersection(f[1]).is_empty() && h.is_wedge_of_spheres(0, 1);
        r.check(
            "hexagon-excluded",
            "n = 1 is the hexagon C_6, outside the theorem: two disjoint triangles, homology of S^0",
            ok,
            format!("{} facets; {h}", f.len()),
        );
        return Ok(r.finish());
    }

    let g = HexGraph::new(1, n, 1)?;
    let facets: Vec<Face> = matchings_with_partitions(&g)?
        .iter()
        .map(|(_, mt)| mt.to_face())
        .collect::<Result<_>>()?;
    r.check("facet-count", "there are n + 1 perfect matchings", facets.len() == n + 1, format!("{}", facets.len()));

    let mut a = Vec::with_capacity(n + 1);
    let mut unique = true;
    let mut detail = Vec::new();
    for i in 0..=n {
        let b = g.b(i, 1)?;
        let mut stated = Vec::new();
        for r in 1..=i {
            stated.push(g.a(r, 1)?);
            stated.push(g.d(r - 1, 0)?);
        }
        stated.push(b);
        for r in i + 1..=n {
            stated.push(g.d(r, 1)?);
            stated.push(g.a(r, 0)?);
        }
        let stated = face_of(&stated);
        let containing: Vec<Face> = facets.iter().copied().filter(|f| f.contains(b)).collect();
        if containing.len() != 1 || containing[0] != stated {
            unique = false;
            detail.push(format!("b_{i}_1 lies in {} matchings", containing.len()));
        }
        a.push(stated);
    }
    r.check(
        "unique-matching",
        "each b_{i,1} lies in exactly one perfect matching, the stated edge list A_i",
        unique,
        if detail.is_empty() { format!("A_0..A_{n} confirmed") } else { detail.join("; ") },
    );

    let (a11, d00, dn1, an0) = (g.a(1, 1)?, g.d(0, 0)?, g.d(n, 1)?, g.a(n, 0)?);
    let right = a[..n].iter().all(|f| f.contains(dn1) && f.contains(an0));
    let left = a[1..].iter().all(|f| f.contains(a11) && f.contains(d00));
    r.check(
        "shared-edges",
        "A_0..A_{n-1} contain d_{n,1}, a_{n,0}; A_1..A_n contain a_{1,1}, d_{0,0}",
        right && left,
        format!("right {right}, left {left}"),
    );
    let meet = a[0].intersection(a[n]);
    r.check("ends-disjoint", "A_0 and A_n are disjoint", meet.is_empty(), names(&g, meet));

    let nv = nerve(&a)?;
    let lower: Face = (0..n).collect();
    let upper: Face = (1..=n).collect();
    let all: Face = (0..=n).collect();
    let faces_ok = nv.is_face(lower) && nv.is_face(upper) && !nv.is_face(all);
    r.check(
        "nerve-faces",
        "{A_0..A_{n-1}} and {A_1..A_n} are nerve faces and {A_0..A_n} is not",
        faces_ok,
        format!("lower {}, upper {}, all {}", nv.is_face(lower), nv.is_face(upper), nv.is_face(all)),
    );
    let hn = reduced_homology(&nv)?;
    r.check("nerve-homology", "the nerve has trivial reduced homology", hn.is_acyclic(), hn.to_string());

    let c = simplicial(perfect_matching_complex(&g, DEFAULT_FACE_CAP)?, "line")?;
    let h = r.timed("homology", || reduced_homology(&Complex::Simplicial(c.clone())))?;
    r.check("homology", "M_p(H_{1x1xn}) has trivial reduced homology", h.is_acyclic(), format!("{h} (H_1x{n}x1)"));
    let g2 = HexGraph::new(1, 1, n)?;
    let c2 = simplicial(perfect_matching_complex(&g2, DEFAULT_FACE_CAP)?, "line")?;
    let h2 = reduced_homology(&Complex::Simplicial(c2.clone()))?;
    r.check(
        "homology-transposed",
        "the same line drawn as H_{1x1xn} gives the same f-vector and trivial homology",
        h2.is_acyclic() && c2.f_vector() == c.f_vector(),
        format!("{h2}; f-vector {:?}", c2.f_vector()),
    );
    Ok(r.finish())
}

/// `M_p(H_{1×2×n})` via the pairing `[x, y]`.
pub fn verify_1x2xn(n: usize) -> Result<TheoremReport> {
    if !(2..=5).contains(&n) {
        return Err(Error::OutOfRange(format!("1x2xn check supports 2 <= n <= 5 (got n={n})")));
    }
    let mut r = TheoremReport::new("T-1x2xn", Params::kmn(1, 2, n), "2 <= n <= 5");
    let g = HexGraph::new(1, 2, n)?;
    let (x, y) = (g.x()?, g.y()?);
    let c = r.timed("complex", || perfect_matching_complex(&g, DEFAULT_FACE_CAP))?;
    let c = simplicial(c, "1x2xn")?;
    let p = r.timed("pairing", || sequential_pairing(&c, &[x, y]))?;
    let h = r.timed("homology", || reduced_homology(&Complex::Simplicial(c.clone())))?;
    check_pairing_basics(&mut r, &c, &p, &h);

    let (fx, fy) = (Face::singleton(x), Face::singleton(y));
    r.check(
        "empty-face",
        "the empty face is paired with {x}",
        p.steps[0].contains(&(Face::EMPTY, fx)),
        "",
    );

    // Unpaired faces are {y} ∪ σ with σ meeting the four conditions.
    let expected: BTreeSet<Face> = r.timed("unpaired-structure", || {
        c.faces()
            .filter(|s| !s.contains(x) && !s.contains(y))
            .filter(|&s| c.is_face(s.union(fy)) && c.is_face(s.union(fx)) && !c.is_face(s.union(fx).union(fy)))
            .map(|s| s.union(fy))
            .collect()
    });
    let got: BTreeSet<Face> = p.critical.iter().copied().collect();
    r.check(
        "unpaired-structure",
        "after M(x) and M(y) the unpaired faces are {y} ∪ σ with x, y ∉ σ, σ+y and σ+x faces, σ+x+y not a face",
        expected == got,
        format!("{} predicted, {} found", expected.len(), got.len()),
    );

    let sig = face_of(&g.significant_edges()?);
    let low = face_of(&pp_to_matching_k1(&g, &PlanePartition::row(n, &[0, 0])?)?.edges());
    let high = face_of(&pp_to_matching_k1(&g, &PlanePartition::row(n, &[n as u32, n as u32])?)?.edges());
    let within = expected.iter().all(|t| t.without(y).is_subset(low.intersection(high)));
    r.check(
        "sigma-significant",
        "every such σ lies in (0,0) ∩ (n,n) = {d_{1,1}, ..., d_{1,n-1}}",
        within && low.intersection(high) == sig,
        names(&g, sig),
    );

    let mut proper_ok = true;
    for i in 1..n {
        let mt = face_of(&pp_to_matching_k1(&g, &PlanePartition::row(n, &[i as u32, i as u32])?)?.edges());
        proper_ok &= sig.without(g.d(1, i)?).is_subset(mt);
    }
    let xy = fx.union(fy);
    sig.for_each_subset(|rho| {
        if rho != sig {
            proper_ok &= c.is_face(rho.union(xy));
        }
    });
    r.check(
        "proper-subsets",
        "(i,i) contains the significant edges except d_{1,i}, so every proper subset ρ gives a face ρ ∪ {x,y}",
        proper_ok,
        format!("{} proper subsets", (1u64 << sig.len()) - 1),
    );

    let tau = sig.with(y);
    r.check(
        "critical-cell",
        "exactly one critical cell, {y, d_{1,1}, ..., d_{1,n-1}}",
        p.critical == [tau],
        p.critical.iter().map(|&f| names(&g, f)).collect::<Vec<_>>().join(" "),
    );
    let summary = morse_summary(&p)?;
    let d = n - 1;
    r.check(
        "cell-complex",
        "one 0-cell and one (n-1)-cell",
        summary.description == format!("one 0-cell and one {d}-cell: S^{d}"),
        summary.description.clone(),
    );
    r.check(
        "homology",
        "reduced homology of S^{n-1}, torsion-free",
        h.is_wedge_of_spheres(d as isize, 1),
        h.to_string(),
    );
    Ok(r.finish())
}

/// `M_p(H_{1×m×n})`, `m, n ≥ 3`, via the pairing `[x, y, z]` with
/// `z = d_{m-1,1}`.
pub fn verify_1xmxn(m: usize, n: usize) -> Result<TheoremReport> {
    verify_1xmxn_with_cap(m, n, DEFAULT_FACE_CAP)
}

pub fn verify_1xmxn_with_cap(m: usize, n: usize, cap: usize) -> Result<TheoremReport> {
    if m < 3 || n < 3 {
        return Err(Error::OutOfRange(format!(
            "1xmxn check requires m, n >= 3 (got {m}x{n}); use the 1x2xn check when m = 2"
        )));
    }
    let mut r = TheoremReport::new("T-1xmxn", Params::kmn(1, m, n), "m, n >= 3 within the face cap");
    let g = HexGraph::new(1, m, n)?;
    let (x, y, z) = (g.x()?, g.y()?, g.d(m - 1, 1)?);
    let c = r.timed("complex", || perfect_matching_complex(&g, cap))?;
    let c = simplicial(c, "1xmxn")?;
    let p = r.timed("pairing", || sequential_pairing(&c, &[x, y, z]))?;
    let h = r.timed("homology", || reduced_homology(&Complex::Simplicial(c.clone())))?;
    check_pairing_basics(&mut r, &c, &p, &h);
    r.check("no-critical", "M(x), M(y), M(z) pair every face", p.critical.is_empty(), format!("{}", p.critical.len()));
    r.check(
        "empty-face",
        "the empty face is paired with {x}",
        p.steps[0].contains(&(Face::EMPTY, Face::singleton(x))),
        "",
    );

    // Faces left after M(x) ∪ M(y) are those M(z) touches plus the critical ones.
    let sig = face_of(&g.significant_edges()?);
    let (fx, fy) = (Face::singleton(x), Face::singleton(y));
    let mut predicted = BTreeSet::new();
    sig.for_each_subset(|s| {
        let tau = s.union(fy);
        if !c.is_face(tau.union(fx)) {
            predicted.insert(tau);
        }
    });
    let left: BTreeSet<Face> = p.steps[2].iter().flat_map(|&(a, b)| [a, b]).chain(p.critical.iter().copied()).collect();
    r.check(
        "unpaired-structure",
        "after M(x) and M(y) the unpaired faces are {y} ∪ σ with σ ⊆ (0..0) ∩ (n..n) and σ + x + y not a face",
        predicted == left,
        format!("{} predicted, {} found", predicted.len(), left.len()),
    );
    r.check(
        "z-pairs-all",
        "M(z) pairs every face left after M(x) and M(y)",
        p.steps[2].len() * 2 == left.len() && p.critical.is_empty(),
        format!("{} pairs", p.steps[2].len()),
    );

    let (case1, case2) = case_containments(&g, x, y, z, sig)?;
    r.check(
        "case-1",
        "h_{m-1} >= 2, h_m <= 1: σ ∪ {z, x, y} lies in (h_1, ..., h_{m-1}, 2)",
        case1.1 == 0,
        format!("{} (h, σ) checked, {} failures", case1.0, case1.1),
    );
    r.check(
        "case-2",
        "h_{m-1} = 1, h_m <= 1: h_{m-2} >= 1 and σ ∪ {z, x, y} lies in (h_1, ..., h_{m-2}, 0, 0)",
        case2.1 == 0,
        format!("{} (h, σ) checked, {} failures", case2.0, case2.1),
    );

    let summary = morse_summary(&p)?;
    r.check(
        "cell-complex",
        "a single 0-cell",
        summary.description == "contractible (one 0-cell)",
        summary.description.clone(),
    );
    r.check("homology", "trivial reduced homology", h.is_acyclic(), h.to_string());
    Ok(r.finish())
}

/// Counts of `(h, σ)` checked and failed for the two containment cases.
fn case_containments(g: &HexGraph, x: usize, y: usize, z: usize, sig: Face) -> Result<((usize, usize), (usize, usize))> {
    let (_, m, n) = g.dims();
    let matching = |h: &[u32]| -> Result<Face> { Ok(face_of(&pp_to_matching_k1(g, &PlanePartition::row(n, h)?)?.edges())) };
    let mut case1 = (0, 0);
    let mut case2 = (0, 0);
    for p in crate::partitions::enumerate_plane_partitions(1, m, n)? {
        let h = p.entries().to_vec();
        let (hm1, hm) = (h[m - 2], h[m - 1]);
        if hm1 < 1 || hm > 1 {
            continue;
        }
        let mt = matching(&h)?;
        if !(mt.contains(x) && mt.contains(y)) {
            continue;
        }
        let (target, counter) = if hm1 >= 2 {
            let mut t = h.clone();
            t[m - 1] = 2;
            (matching(&t)?, &mut case1)
        } else {
            let mut t = h.clone();
            t[m - 2] = 0;
            t[m - 1] = 0;
            if h[m - 3] < 1 {
                case2.1 += 1;
            }
            (matching(&t)?, &mut case2)
        };
        let xyz = Face::singleton(x).with(y).with(z);
        sig.intersection(mt).for_each_subset(|s| {
            counter.0 += 1;
            if !s.union(xyz).is_subset(target) {
                counter.1 += 1;
            }
        });
    }
    Ok((case1, case2))
}

type Tableau = [u32; 4];

fn tableau(p: &PlanePartition) -> Tableau {
    [p.get(0, 0), p.get(0, 1), p.get(1, 0), p.get(1, 1)]
}

/// `"2**1"` style pattern over `a b / c d`.
fn pattern(s: &str) -> impl Fn(&Tableau) -> bool + '_ {
    move |t: &Tableau| s.chars().zip(t.iter()).all(|(c, &v)| c == '*' || c.to_digit(10) == Some(v))
}

fn power_set(base: Face) -> BTreeSet<Face> {
    let mut out = BTreeSet::new();
    base.for_each_subset(|s| {
        out.insert(s);
    });
    out
}

/// `M_p(H_{2×2×2})` via the nine-step pairing.
pub fn verify_2x2x2() -> Result<TheoremReport> {
    let mut r = TheoremReport::new("T-2x2x2", Params::kmn(2, 2, 2), "fixed graph");
    let g = HexGraph::new(2, 2, 2)?;
    let e = |name: &str| g.parse_label(name);
    let fp: Vec<(Tableau, Face)> = matchings_with_partitions(&g)?
        .iter()
        .map(|(p, mt)| Ok((tableau(p), mt.to_face()?)))
        .collect::<Result<_>>()?;
    let facet = |t: Tableau| fp.iter().find(|(u, _)| *u == t).map(|&(_, f)| f).expect("every tableau is enumerated");
    let c = simplicial(perfect_matching_complex(&g, DEFAULT_FACE_CAP)?, "2x2x2")?;

    // (i) catalog
    let mut catalog_ok = CATALOG_2X2X2.len() == 20;
    let mut drawn = BTreeSet::new();
    for (name, segs) in &CATALOG_2X2X2 {
        let edges: Option<Vec<usize>> = segs.iter().map(|&(a, b)| g.edge_at_segment(FRAME_2X2X2, a, b)).collect();
        let t: Vec<u32> = name.chars().filter_map(|ch| ch.to_digit(10)).collect();
        match (edges, <Tableau>::try_from(t.as_slice())) {
            (Some(edges), Ok(t)) => {
                let f = face_of(&edges);
                catalog_ok &= f.len() == 12 && f == facet(t);
                drawn.insert(f);
            }
            _ => catalog_ok = false,
        }
    }
    let facets: BTreeSet<Face> = c.facets().iter().copied().collect();
    r.check(
        "catalog",
        "the 20 facets are the drawn matchings, each under its tableau",
        catalog_ok && drawn == facets,
        format!("{} drawn, {} facets", drawn.len(), facets.len()),
    );

    // (ii) links of the four Greek edges
    let (alpha, beta, gamma, delta) = (e("alpha")?, e("beta")?, e("gamma")?, e("delta")?);
    let obs: [(&str, usize, Box<dyn Fn(&Tableau) -> bool>); 4] = [
        ("link-alpha", alpha, Box::new(pattern("2***"))),
        ("link-beta", beta, Box::new(|t: &Tableau| pattern("1***")(t) || *t == [2, 2, 2, 2])),
        ("link-gamma", gamma, Box::new(|t: &Tableau| pattern("***1")(t) || *t == [0, 0, 0, 0])),
        ("link-delta", delta, Box::new(pattern("***0"))),
    ];
    let statements = [
        "σ + α is a face iff σ ∈ 2***",
        "σ + β is a face iff σ ∈ 2222 or σ ∈ 1***",
        "σ + γ is a face iff σ ∈ 0000 or σ ∈ ***1",
        "σ + δ is a face iff σ ∈ ***0",
    ];
    for ((id, edge, pred), statement) in obs.iter().zip(statements) {
        let support = fp.iter().all(|(t, f)| f.contains(*edge) == pred(t));
        let family: Vec<Face> = fp.iter().filter(|(t, _)| pred(t)).map(|&(_, f)| f).collect();
        let faces = c.faces().all(|s| c.is_face(s.with(*edge)) == family.iter().any(|&f| s.is_subset(f)));
        r.check(id, statement, support && faces, format!("support {support}, all faces {faces}"));
    }

    let greek = face_of(&[alpha, beta, gamma, delta]);
    let in_family = |s: Face, pat: &str| fp.iter().any(|(t, f)| pattern(pat)(t) && s.is_subset(*f));

    // (iii) triple meet of 2221, 1111, 2222
    let four = face_of(&[e("c_0_0")?, e("c_1_0")?, e("b_2_1")?, e("b_3_2")?]);
    let f1111 = facet([1, 1, 1, 1]);
    let f2222 = facet([2, 2, 2, 2]);
    let named = facet([2, 2, 2, 1]).intersection(f1111).intersection(f2222);
    let mut union = BTreeSet::new();
    for (t, f) in &fp {
        if pattern("2**1")(t) {
            union.extend(power_set(f.intersection(f1111).intersection(f2222).difference(greek)));
        }
    }
    r.check(
        "meet-three-facets",
        "2221 ∩ 1111 ∩ 2222 = {c_{0,0}, c_{1,0}, b_{2,1}, b_{3,2}}, and σ ∈ 2**1, 1111, 2222 ranges over its power set",
        named == four && union == power_set(four),
        names(&g, named),
    );

    // (iv) faces shared by 2**0, 1**0, 2**1 and 1111
    let six = face_of(&[e("b_0_2")?, e("a_1_1")?, e("c_0_0")?, e("c_3_3")?, e("a_3_2")?, e("b_3_2")?]);
    let mut sub2 = BTreeSet::new();
    f1111.difference(greek).for_each_subset(|s| {
        if ["2**0", "1**0", "2**1"].iter().all(|pat| in_family(s, pat)) {
            sub2.insert(s);
        }
    });
    r.check(
        "meet-four-families",
        "σ ∈ 2**0, 1**0, 2**1 and 1111 ranges over the power set of {b_{0,2}, a_{1,1}, c_{0,0}, c_{3,3}, a_{3,2}, b_{3,2}}",
        sub2 == power_set(six),
        format!("{} sets, maximal {}", sub2.len(), sub2.iter().max_by_key(|s| s.len()).map_or(String::new(), |&s| names(&g, s))),
    );

    // (v) the nine-step pairing and its intermediate stages
    let seq_names = ["alpha", "beta", "gamma", "delta", "c_1_0", "b_0_2", "c_3_3", "c_0_0", "b_3_2"];
    let seq: Vec<usize> = seq_names.iter().map(|s| e(s)).collect::<Result<_>>()?;
    let p = r.timed("pairing", || sequential_pairing(&c, &seq))?;
    let h = r.timed("homology", || reduced_homology(&Complex::Simplicial(c.clone())))?;
    check_pairing_basics(&mut r, &c, &p, &h);

    let lift = |sets: &[&[&str]], extra: &[&str]| -> Result<BTreeSet<Face>> {
        let base = face_of(&extra.iter().map(|s| e(s)).collect::<Result<Vec<_>>>()?);
        sets.iter()
            .map(|s| Ok(face_of(&s.iter().map(|n| e(n)).collect::<Result<Vec<_>>>()?).union(base)))
            .collect()
    };
    let with = |base: Face, extra: &[&str]| -> Result<BTreeSet<Face>> {
        let add = face_of(&extra.iter().map(|s| e(s)).collect::<Result<Vec<_>>>()?);
        Ok(power_set(base).into_iter().map(|s| s.union(add)).collect())
    };
    let fam1 = with(four, &["beta", "gamma"])?;
    let mut fam2 = with(face_of(&[e("b_0_2")?, e("b_1_3")?, e("c_3_3")?, e("c_2_3")?]), &["gamma", "delta"])?;
    fam2.extend(lift(
        &[&["b_1_2"], &["c_2_2"], &["b_1_2", "c_2_2"], &["b_1_2", "c_3_3"], &["b_0_2", "c_2_2"]],
        &["gamma", "delta"],
    )?);
    let mut fam3 = with(six, &["beta", "delta"])?;
    fam3.extend(lift(
        &[&["c_1_1"], &["b_2_2"], &["c_0_0", "b_2_2"], &["c_1_1", "b_3_2"], &["c_1_1", "b_2_2"]],
        &["beta", "delta"],
    )?);

    let remaining_after = |k: usize| -> BTreeSet<Face> {
        let mut left: BTreeSet<Face> = p.critical.iter().copied().collect();
        for step in &p.steps[k..] {
            left.extend(step.iter().flat_map(|&(a, b)| [a, b]));
        }
        left
    };
    let after4 = remaining_after(4);
    let three: BTreeSet<Face> = fam1.iter().chain(&fam2).chain(&fam3).copied().collect();
    r.check(
        "after-greek",
        "after α, β, γ, δ the unpaired faces are the three families of Cases 4.2, 2.2 and 3.2",
        after4 == three,
        format!("{} predicted, {} found", three.len(), after4.len()),
    );
    let after5 = remaining_after(5);
    let two: BTreeSet<Face> = fam2.iter().chain(&fam3).copied().collect();
    r.check("after-c10", "pairing with c_{1,0} matches all of family (1)", after5 == two, format!("{} left", after5.len()));
    let mut left6 = lift(&[&["b_1_2"], &["b_1_2", "c_2_2"], &["b_1_2", "c_3_3"]], &["gamma", "delta"])?;
    left6.extend(lift(
        &[&["c_1_1"], &["b_2_2"], &["c_0_0", "b_2_2"], &["c_1_1", "b_3_2"], &["c_1_1", "b_2_2"]],
        &["beta", "delta"],
    )?);
    r.check("after-b02", "pairing with b_{0,2} leaves the eight listed faces", remaining_after(6) == left6, format!("{} left", remaining_after(6).len()));
    let last: Vec<Vec<(Face, Face)>> = vec![
        lift(&[&["b_1_2"], &["b_1_2", "c_3_3"]], &["gamma", "delta"])?.into_iter().collect::<Vec<_>>().chunks(2).map(|w| (w[0], w[1])).collect(),
        lift(&[&["b_2_2"], &["c_0_0", "b_2_2"]], &["beta", "delta"])?.into_iter().collect::<Vec<_>>().chunks(2).map(|w| (w[0], w[1])).collect(),
        lift(&[&["c_1_1"], &["c_1_1", "b_3_2"]], &["beta", "delta"])?.into_iter().collect::<Vec<_>>().chunks(2).map(|w| (w[0], w[1])).collect(),
    ];
    let normalise = |v: &[(Face, Face)]| -> Vec<(Face, Face)> {
        v.iter().map(|&(a, b)| if a.len() < b.len() { (a, b) } else { (b, a) }).collect()
    };
    let last_ok = (0..3).all(|i| normalise(&p.steps[6 + i]) == normalise(&last[i]));
    r.check(
        "final-pairs",
        "c_{3,3}, c_{0,0}, b_{3,2} each pair exactly the one stated pair",
        last_ok,
        format!("{} / {} / {} pairs", p.steps[6].len(), p.steps[7].len(), p.steps[8].len()),
    );

    let crit: BTreeSet<Face> = p.critical.iter().copied().collect();
    let stated = lift(&[&["b_1_2", "c_2_2", "delta", "gamma"], &["c_1_1", "b_2_2", "beta", "delta"]], &[])?;
    r.check(
        "critical-cells",
        "exactly two critical cells, {b_{1,2}, c_{2,2}, δ, γ} and {c_{1,1}, b_{2,2}, β, δ}, both 3-dimensional",
        crit == stated && p.critical.iter().all(|f| f.dim() == 3),
        p.critical.iter().map(|&f| names(&g, f)).collect::<Vec<_>>().join(" "),
    );
    let summary = morse_summary(&p)?;
    r.check("cell-complex", "one 0-cell and two 3-cells", summary.description == "S^3 ∨ S^3", summary.description.clone());

    // The Boolean interval of family (1) can be cleared by any of its four edges.
    let state = FaceState::from_faces(fam1.iter().copied());
    let mut interval_ok = true;
    let mut subs = Vec::new();
    for name in ["c_0_0", "c_1_0", "b_2_1", "b_3_2"] {
        let v = e(name)?;
        interval_ok &= element_pairing(&state, v).touched.len() == fam1.len();
        let mut s = seq.clone();
        let from = s.iter().position(|&w| w == seq[4]).expect("c_1_0 in sequence");
        match s.iter().position(|&w| w == v) {
            Some(to) => s.swap(from, to),
            None => s[from] = v,
        }
        let q = sequential_pairing(&c, &s)?;
        subs.push((name, q.critical.len(), q.acyclic));
    }
    r.check(
        "interval-any-edge",
        "each of c_{0,0}, c_{1,0}, b_{2,1}, b_{3,2} pairs the whole Case 4.2 interval",
        interval_ok,
        format!("{} faces", fam1.len()),
    );
    let same = subs.iter().all(|&(_, k, a)| k == 2 && a);
    let detail: Vec<String> = subs.iter().map(|(n, k, _)| format!("{n}: {k}")).collect();
    r.check(
        "interval-substitution",
        "putting any of the four edges in place of c_{1,0} still leaves two critical cells",
        same,
        detail.join(", "),
    );

    // (vi)
    r.check("homology", "b~_3 = 2, all other reduced groups zero, torsion-free", h.is_wedge_of_spheres(3, 2), h.to_string());
    Ok(r.finish())
}

fn double_factorial(n: u64) -> u64 {
    (1..=n).rev().step_by(2).product()
}

/// Paths, cycles, complete and complete bipartite graphs.
pub fn verify_baselines() -> Result<TheoremReport> {
    let mut r = TheoremReport::new("baseline-cases", Params::default(), "paths and cycles up to 12 vertices");
    let build = |g: &SimpleGraph| perfect_matching_complex(g, DEFAULT_FACE_CAP);

    let mut ok = true;
    let mut detail = Vec::new();
    for n in 1..=6 {
        let c = simplicial(build(&SimpleGraph::path(2 * n))?, "path")?;
        let h = reduced_homology(&Complex::Simplicial(c.clone()))?;
        let good = c.facets().len() == 1 && c.face_count() == 1 << n && h.is_acyclic();
        ok &= good;
        if !good {
            detail.push(format!("P_{}", 2 * n));
        }
    }
    r.check("paths", "M_p(P_{2n}) is the full (n-1)-simplex, n <= 6", ok, if detail.is_empty() { "n = 1..6".into() } else { detail.join(", ") });

    let mut ok = true;
    let mut detail = Vec::new();
    for n in 2..=6 {
        let c = simplicial(build(&SimpleGraph::cycle(2 * n))?, "cycle")?;
        let h = reduced_homology(&Complex::Simplicial(c.clone()))?;
        let f = c.facets();
        let good = f.len() == 2
            && f.iter().all(|x| x.len() == n)
            && f[0].intersection(f[1]).is_empty()
            && h.is_wedge_of_spheres(0, 1);
        ok &= good;
        if !good {
            detail.push(format!("C_{}", 2 * n));
        }
    }
    r.check(
        "cycles",
        "M_p(C_{2n}) is two disjoint (n-1)-simplices with the homology of S^0, n <= 6",
        ok,
        if detail.is_empty() { "n = 2..6".into() } else { detail.join(", ") },
    );

    let void = [SimpleGraph::complete_bipartite(2, 3), SimpleGraph::path(5), SimpleGraph::complete(3)];
    let mut ok = true;
    for g in &void {
        let c = build(g)?;
        ok &= c.is_void() && reduced_homology(&c)?.void;
    }
    r.check("void", "K_{2,3}, P_5 and K_3 have no perfect matching, so their complexes are void", ok, "");

    let mut ok = true;
    let mut detail = Vec::new();
    for n in [2u64, 3] {
        let g = SimpleGraph::complete(2 * n as usize);
        let c = simplicial(build(&g)?, "complete")?;
        let h = reduced_homology(&Complex::Simplicial(c.clone()))?;
        let good = c.facets().len() as u64 == double_factorial(2 * n - 1) && h.euler_characteristic() == c.reduced_euler_characteristic();
        ok &= good;
        detail.push(format!("K_{}: {h}", 2 * n));
    }
    for n in [2u64, 3] {
        let g = SimpleGraph::complete_bipartite(n as usize, n as usize);
        let c = simplicial(build(&g)?, "complete bipartite")?;
        let h = reduced_homology(&Complex::Simplicial(c.clone()))?;
        let good = c.facets().len() as u64 == (1..=n).product::<u64>() && h.euler_characteristic() == c.reduced_euler_characteristic();
        ok &= good;
        detail.push(format!("K_{n},{n}: {h}"));
    }
    r.check(
        "complete",
        "K_{2n} has (2n-1)!! and K_{n,n} has n! facets; Betti numbers match the Euler characteristic",
        ok,
        detail.join("; "),
    );
    Ok(r.finish())
}

/// Membership of `x`, `y` and the meet of the two extreme matchings, for
/// `2 ≤ m, n ≤ 4`.
pub fn verify_lemmas() -> Result<TheoremReport> {
    let mut r = TheoremReport::new("lemmas", Params::default(), "2 <= m, n <= 4");
    let mut xy_fail = Vec::new();
    let mut meet_fail = Vec::new();
    let mut checked = 0;
    for m in 2..=4 {
        for n in 2..=4 {
            let g = HexGraph::new(1, m, n)?;
            let (x, y) = (g.x()?, g.y()?);
            let all = matchings_with_partitions(&g)?;
            for (p, mt) in &all {
                checked += 1;
                let zero = p.entries().iter().all(|&h| h == 0);
                let full = p.entries().iter().all(|&h| h == n as u32);
                if mt.contains(x) == zero || mt.contains(y) == full {
                    xy_fail.push(format!("1x{m}x{n} {p}"));
                }
            }
            let lo = all.first().expect("at least one matching").1.to_face()?;
            let hi = all.last().expect("at least one matching").1.to_face()?;
            if lo.intersection(hi) != face_of(&g.significant_edges()?) {
                meet_fail.push(format!("1x{m}x{n}"));
            }
        }
    }
    r.check(
        "lemma-xy",
        "x = d_{0,0} lies in P iff P != (0..0); y = d_{m,n} lies in P iff P != (n..n)",
        xy_fail.is_empty(),
        if xy_fail.is_empty() { format!("{checked} matchings") } else { xy_fail.join(", ") },
    );
    r.check(
        "lemma-significant",
        "(0..0) ∩ (n..n) is the set of significant edges",
        meet_fail.is_empty(),
        if meet_fail.is_empty() { "9 graphs".to_string() } else { meet_fail.join(", ") },
    );
    Ok(r.finish())
}
