//! Static data transcribed from the `2×2×2` drawings: the named edges used in
//! the `S³ ∨ S³` argument and the catalog of all twenty perfect matchings.
//!
//! Coordinates are in half-units of the drawing grid so they stay integral.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hexgraph::{Frame, HexGraph};
use crate::partitions::{matchings_with_partitions, PlanePartition};

/// Segment between two drawing points, in half-units.
pub type Segment = ((i32, i32), (i32, i32));

/// Frame of the `2×2×2` drawings.
pub const FRAME_2X2X2: Frame = Frame { ox: 14, oy: 12 };

/// Frame of the `1×m×n` drawings.
pub const FRAME_1XMXN: Frame = Frame { ox: 8, oy: 9 };

/// Named edges of `H_{2×2×2}`.
pub static ALIASES_2X2X2: [(&str, Segment); 18] = [
    ("alpha", ((12, 21), (16, 21))),
    ("beta", ((12, 15), (16, 15))),
    ("gamma", ((12, 9), (16, 9))),
    ("delta", ((12, 3), (16, 3))),
    ("a_1_1", ((6, 12), (10, 12))),
    ("a_3_2", ((18, 12), (22, 12))),
    ("b_0_2", ((4, 15), (6, 18))),
    ("b_1_2", ((10, 12), (12, 15))),
    ("b_1_3", ((10, 18), (12, 21))),
    ("b_2_1", ((16, 3), (18, 6))),
    ("b_2_2", ((16, 9), (18, 12))),
    ("b_3_2", ((22, 6), (24, 9))),
    ("c_0_0", ((4, 9), (6, 6))),
    ("c_1_0", ((10, 6), (12, 3))),
    ("c_1_1", ((10, 12), (12, 9))),
    ("c_2_2", ((16, 15), (18, 12))),
    ("c_2_3", ((16, 21), (18, 18))),
    ("c_3_3", ((22, 18), (24, 15))),
];

/// Tableau `a b / c d` as `[a, b, c, d]`.
fn tableau(p: &PlanePartition) -> [u32; 4] {
    [p.get(0, 0), p.get(0, 1), p.get(1, 0), p.get(1, 1)]
}

/// Which tableaux must contain each Greek edge.
fn greek_signature(name: &str, t: [u32; 4]) -> Option<bool> {
    let [a, _, _, d] = t;
    Some(match name {
        "alpha" => a == 2,
        "beta" => a == 1 || t == [2, 2, 2, 2],
        "gamma" => t == [0, 0, 0, 0] || d == 1,
        "delta" => d == 0,
        _ => return None,
    })
}

/// Resolves every alias on `g` and checks the transcription against the
/// membership statements it must satisfy.
pub(crate) fn resolve_aliases(g: &HexGraph) -> Result<BTreeMap<&'static str, usize>> {
    let mut out = BTreeMap::new();
    for &(name, (a, b)) in &ALIASES_2X2X2 {
        let e = g
            .edge_at_segment(FRAME_2X2X2, a, b)
            .ok_or_else(|| Error::AliasTable(format!("{name} is not an edge of {}", g.name())))?;
        if out.values().any(|&f| f == e) {
            return Err(Error::AliasTable(format!("{name} duplicates another alias")));
        }
        out.insert(name, e);
    }

    let facets = matchings_with_partitions(g)?;
    for (name, &e) in &out {
        for (p, mt) in &facets {
            if let Some(expect) = greek_signature(name, tableau(p)) {
                if mt.contains(e) != expect {
                    return Err(Error::AliasTable(format!("{name} membership wrong for tableau {}", p.compact())));
                }
            }
        }
    }

    let find = |t: [u32; 4]| {
        facets
            .iter()
            .find(|(p, _)| tableau(p) == t)
            .map(|(_, mt)| mt.to_face())
            .ok_or_else(|| Error::Internal("missing tableau".into()))?
    };
    let meet = find([2, 2, 2, 1])?.intersection(find([1, 1, 1, 1])?).intersection(find([2, 2, 2, 2])?);
    let expect = ["c_0_0", "c_1_0", "b_2_1", "b_3_2"].iter().map(|n| out[n]).collect();
    if meet != expect {
        return Err(Error::AliasTable(format!(
            "intersection of 2221, 1111, 2222 is {meet:?}, expected {expect:?}"
        )));
    }
    Ok(out)
}

/// Tableaux of the 20 perfect matchings of `H_{2×2×2}` with their drawn
/// edges, in half-units of the 2×2×2 drawing frame.
pub static CATALOG_2X2X2: [(&str, [Segment; 12]); 20] = [
    (
        "2222",
        [((6, 18), (10, 18)), ((12, 21), (16, 21)), ((12, 15), (16, 15)), ((18, 18), (22, 18)), ((4, 15), (6, 12)), ((10, 12), (12, 9)), ((4, 9), (6, 6)), ((10, 6), (12, 3)), ((16, 3), (18, 6)), ((16, 9), (18, 12)), ((22, 6), (24, 9)), ((22, 12), (24, 15))],
    ),
    (
        "2221",
        [((6, 18), (10, 18)), ((12, 21), (16, 21)), ((12, 9), (16, 9)), ((18, 18), (22, 18)), ((4, 15), (6, 12)), ((16, 15), (18, 12)), ((4, 9), (6, 6)), ((10, 6), (12, 3)), ((16, 3), (18, 6)), ((10, 12), (12, 15)), ((22, 6), (24, 9)), ((22, 12), (24, 15))],
    ),
    (
        "2220",
        [((6, 18), (10, 18)), ((12, 21), (16, 21)), ((12, 3), (16, 3)), ((18, 18), (22, 18)), ((4, 15), (6, 12)), ((16, 15), (18, 12)), ((4, 9), (6, 6)), ((16, 9), (18, 6)), ((10, 6), (12, 9)), ((10, 12), (12, 15)), ((22, 6), (24, 9)), ((22, 12), (24, 15))],
    ),
    (
        "2211",
        [((4, 15), (6, 18)), ((10, 18), (12, 15)), ((12, 21), (16, 21)), ((18, 18), (22, 18)), ((24, 15), (22, 12)), ((24, 9), (22, 6)), ((6, 12), (10, 12)), ((18, 6), (16, 3)), ((6, 6), (4, 9)), ((18, 12), (16, 15)), ((12, 9), (16, 9)), ((12, 3), (10, 6))],
    ),
    (
        "2210",
        [((6, 12), (10, 12)), ((12, 21), (16, 21)), ((12, 3), (16, 3)), ((18, 18), (22, 18)), ((10, 18), (12, 15)), ((16, 15), (18, 12)), ((4, 9), (6, 6)), ((16, 9), (18, 6)), ((10, 6), (12, 9)), ((4, 15), (6, 18)), ((22, 6), (24, 9)), ((22, 12), (24, 15))],
    ),
    (
        "2200",
        [((6, 6), (10, 6)), ((12, 21), (16, 21)), ((12, 3), (16, 3)), ((18, 18), (22, 18)), ((10, 18), (12, 15)), ((16, 15), (18, 12)), ((10, 12), (12, 9)), ((16, 9), (18, 6)), ((4, 9), (6, 12)), ((4, 15), (6, 18)), ((22, 6), (24, 9)), ((22, 12), (24, 15))],
    ),
    (
        "2121",
        [((6, 18), (10, 18)), ((12, 21), (16, 21)), ((12, 9), (16, 9)), ((18, 12), (22, 12)), ((4, 15), (6, 12)), ((22, 18), (24, 15)), ((4, 9), (6, 6)), ((10, 6), (12, 3)), ((16, 3), (18, 6)), ((10, 12), (12, 15)), ((22, 6), (24, 9)), ((16, 15), (18, 18))],
    ),
    (
        "2120",
        [((6, 18), (10, 18)), ((12, 21), (16, 21)), ((12, 3), (16, 3)), ((18, 12), (22, 12)), ((4, 15), (6, 12)), ((22, 18), (24, 15)), ((4, 9), (6, 6)), ((16, 9), (18, 6)), ((10, 6), (12, 9)), ((10, 12), (12, 15)), ((22, 6), (24, 9)), ((16, 15), (18, 18))],
    ),
    (
        "2111",
        [((6, 12), (10, 12)), ((12, 21), (16, 21)), ((12, 9), (16, 9)), ((18, 12), (22, 12)), ((10, 18), (12, 15)), ((22, 18), (24, 15)), ((4, 9), (6, 6)), ((10, 6), (12, 3)), ((16, 3), (18, 6)), ((4, 15), (6, 18)), ((22, 6), (24, 9)), ((16, 15), (18, 18))],
    ),
    (
        "2110",
        [((6, 12), (10, 12)), ((12, 21), (16, 21)), ((12, 3), (16, 3)), ((18, 12), (22, 12)), ((10, 18), (12, 15)), ((22, 18), (24, 15)), ((4, 9), (6, 6)), ((16, 9), (18, 6)), ((10, 6), (12, 9)), ((4, 15), (6, 18)), ((22, 6), (24, 9)), ((16, 15), (18, 18))],
    ),
    (
        "2100",
        [((6, 6), (10, 6)), ((12, 21), (16, 21)), ((12, 3), (16, 3)), ((18, 12), (22, 12)), ((10, 18), (12, 15)), ((22, 18), (24, 15)), ((10, 12), (12, 9)), ((16, 9), (18, 6)), ((4, 9), (6, 12)), ((4, 15), (6, 18)), ((22, 6), (24, 9)), ((16, 15), (18, 18))],
    ),
    (
        "2020",
        [((6, 18), (10, 18)), ((12, 21), (16, 21)), ((12, 3), (16, 3)), ((18, 6), (22, 6)), ((4, 15), (6, 12)), ((22, 18), (24, 15)), ((4, 9), (6, 6)), ((22, 12), (24, 9)), ((10, 6), (12, 9)), ((10, 12), (12, 15)), ((16, 9), (18, 12)), ((16, 15), (18, 18))],
    ),
    (
        "2010",
        [((6, 12), (10, 12)), ((12, 21), (16, 21)), ((12, 3), (16, 3)), ((18, 6), (22, 6)), ((10, 18), (12, 15)), ((22, 18), (24, 15)), ((4, 9), (6, 6)), ((22, 12), (24, 9)), ((10, 6), (12, 9)), ((4, 15), (6, 18)), ((16, 9), (18, 12)), ((16, 15), (18, 18))],
    ),
    (
        "2000",
        [((6, 6), (10, 6)), ((12, 21), (16, 21)), ((12, 3), (16, 3)), ((18, 6), (22, 6)), ((10, 18), (12, 15)), ((22, 18), (24, 15)), ((10, 12), (12, 9)), ((22, 12), (24, 9)), ((4, 9), (6, 12)), ((4, 15), (6, 18)), ((16, 9), (18, 12)), ((16, 15), (18, 18))],
    ),
    (
        "1111",
        [((6, 12), (10, 12)), ((12, 15), (16, 15)), ((12, 9), (16, 9)), ((18, 12), (22, 12)), ((16, 21), (18, 18)), ((22, 18), (24, 15)), ((4, 9), (6, 6)), ((10, 6), (12, 3)), ((16, 3), (18, 6)), ((4, 15), (6, 18)), ((22, 6), (24, 9)), ((10, 18), (12, 21))],
    ),
    (
        "1110",
        [((6, 12), (10, 12)), ((12, 15), (16, 15)), ((12, 3), (16, 3)), ((18, 12), (22, 12)), ((16, 21), (18, 18)), ((22, 18), (24, 15)), ((4, 9), (6, 6)), ((16, 9), (18, 6)), ((10, 6), (12, 9)), ((4, 15), (6, 18)), ((22, 6), (24, 9)), ((10, 18), (12, 21))],
    ),
    (
        "1100",
        [((6, 6), (10, 6)), ((12, 15), (16, 15)), ((12, 3), (16, 3)), ((18, 12), (22, 12)), ((16, 21), (18, 18)), ((22, 18), (24, 15)), ((10, 12), (12, 9)), ((16, 9), (18, 6)), ((4, 9), (6, 12)), ((4, 15), (6, 18)), ((22, 6), (24, 9)), ((10, 18), (12, 21))],
    ),
    (
        "1010",
        [((6, 12), (10, 12)), ((12, 15), (16, 15)), ((12, 3), (16, 3)), ((18, 6), (22, 6)), ((16, 21), (18, 18)), ((22, 18), (24, 15)), ((4, 9), (6, 6)), ((22, 12), (24, 9)), ((10, 6), (12, 9)), ((4, 15), (6, 18)), ((16, 9), (18, 12)), ((10, 18), (12, 21))],
    ),
    (
        "1000",
        [((6, 6), (10, 6)), ((12, 15), (16, 15)), ((12, 3), (16, 3)), ((18, 6), (22, 6)), ((16, 21), (18, 18)), ((22, 18), (24, 15)), ((10, 12), (12, 9)), ((22, 12), (24, 9)), ((4, 9), (6, 12)), ((4, 15), (6, 18)), ((16, 9), (18, 12)), ((10, 18), (12, 21))],
    ),
    (
        "0000",
        [((6, 6), (10, 6)), ((12, 9), (16, 9)), ((12, 3), (16, 3)), ((18, 6), (22, 6)), ((16, 21), (18, 18)), ((22, 18), (24, 15)), ((16, 15), (18, 12)), ((22, 12), (24, 9)), ((4, 9), (6, 12)), ((4, 15), (6, 18)), ((10, 12), (12, 15)), ((10, 18), (12, 21))],
    ),
];
