mod common;

use num_bigint::BigInt;
use pmtopo::figure::FRAME_1XMXN;
use pmtopo::partitions::*;
use pmtopo::{Face, GraphView, HexGraph, SimpleGraph};

#[test]
fn single_layer_counts_are_binomial() {
    for m in 1..=5usize {
        for n in 1..=5usize {
            let g = HexGraph::new(1, m, n).unwrap();
            let want = common::binomial((m + n) as u64, m as u64) as usize;
            assert_eq!(enumerate_perfect_matchings(&g).unwrap().len(), want, "1x{m}x{n}");
            assert_eq!(enumerate_plane_partitions(1, m, n).unwrap().len(), want, "1x{m}x{n}");
        }
    }
}

#[test]
fn box_formula_for_small_boxes() {
    for k in 1..=3usize {
        for m in 1..=3usize {
            for n in 1..=3usize {
                let g = HexGraph::new(k, m, n).unwrap();
                let want = common::macmahon(k as u64, m as u64, n as u64);
                assert_eq!(BigInt::from(enumerate_perfect_matchings(&g).unwrap().len()), want);
                assert_eq!(BigInt::from(enumerate_plane_partitions(k, m, n).unwrap().len()), want);
            }
        }
    }
}

#[test]
fn line_has_n_plus_one_matchings() {
    for n in 1..=8 {
        let g = HexGraph::new(1, 1, n).unwrap();
        assert_eq!(enumerate_perfect_matchings(&g).unwrap().len(), n + 1);
    }
}

#[test]
fn odd_graph_has_no_matching() {
    assert!(enumerate_perfect_matchings(&SimpleGraph::path(7)).unwrap().is_empty());
    assert!(enumerate_perfect_matchings(&SimpleGraph::complete_bipartite(2, 3)).unwrap().is_empty());
}

#[test]
fn two_layer_partitions_listed_in_order() {
    let got: Vec<Vec<u32>> = enumerate_plane_partitions(1, 2, 2).unwrap().iter().map(|p| p.entries().to_vec()).collect();
    assert_eq!(got, vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1], vec![2, 2]]);
    assert_eq!(enumerate_plane_partitions(2, 2, 2).unwrap().len(), 20);
}

#[test]
fn vertex_and_edge_counts() {
    for (k, m, n) in [(1, 3, 2), (2, 2, 2), (2, 3, 4), (3, 3, 3)] {
        let g = HexGraph::new(k, m, n).unwrap();
        assert_eq!(g.vertex_count(), 2 * (k * m + k * n + m * n));
        assert_eq!(g.edge_count(), 3 * (k * m + k * n + m * n) - k - m - n);
    }
}

/// The red edges drawn over `H_{1×3×2}` with partition `(2,1,1)`.
#[test]
fn drawn_matching_for_two_one_one() {
    let red: [((f64, f64), (f64, f64)); 11] = [
        ((3.0, 9.0), (5.0, 9.0)),
        ((3.0, 6.0), (2.0, 7.5)),
        ((3.0, 3.0), (2.0, 4.5)),
        ((5.0, 6.0), (6.0, 7.5)),
        ((9.0, 6.0), (8.0, 7.5)),
        ((6.0, 4.5), (8.0, 4.5)),
        ((6.0, 1.5), (5.0, 3.0)),
        ((11.0, 6.0), (12.0, 4.5)),
        ((9.0, 3.0), (11.0, 3.0)),
        ((9.0, 0.0), (8.0, 1.5)),
        ((11.0, 0.0), (12.0, 1.5)),
    ];
    let g = HexGraph::new(1, 3, 2).unwrap();
    let half = |(x, y): (f64, f64)| ((2.0 * x) as i32, (2.0 * y) as i32);
    let drawn: Face = red
        .iter()
        .map(|&(a, b)| g.edge_at_segment(FRAME_1XMXN, half(a), half(b)).expect("segment is an edge"))
        .collect();
    let p = PlanePartition::row(2, &[2, 1, 1]).unwrap();
    let mt = pp_to_matching_k1(&g, &p).unwrap();
    assert_eq!(mt.to_face().unwrap(), drawn);
    for e in [g.a(1, 2).unwrap(), g.a(2, 1).unwrap(), g.a(3, 1).unwrap(), g.d(1, 0).unwrap()] {
        assert!(mt.contains(e));
    }
}

#[test]
fn all_zero_partition_avoids_outer_diagonals() {
    for (m, n) in [(2, 2), (3, 4), (4, 3)] {
        let g = HexGraph::new(1, m, n).unwrap();
        let mt = pp_to_matching_k1(&g, &PlanePartition::row(n, &vec![0; m]).unwrap()).unwrap();
        for j in 0..n {
            assert!(!mt.contains(g.d(0, j).unwrap()));
        }
        for i in 1..m {
            assert!(!mt.contains(g.d(i, 0).unwrap()));
        }
    }
}

#[test]
fn equal_rows_miss_one_significant_edge() {
    let g = HexGraph::new(1, 2, 3).unwrap();
    for i in 1..=2u32 {
        let mt = pp_to_matching_k1(&g, &PlanePartition::row(3, &[i, i]).unwrap()).unwrap();
        for j in 1..=2 {
            assert_eq!(mt.contains(g.d(1, j).unwrap()), j != i as usize);
        }
    }
}

#[test]
fn hexagon_matchings_are_complementary() {
    let g = HexGraph::new(1, 1, 1).unwrap();
    let a = pp_to_matching(&g, &PlanePartition::row(1, &[0]).unwrap()).unwrap().to_face().unwrap();
    let b = pp_to_matching(&g, &PlanePartition::row(1, &[1]).unwrap()).unwrap().to_face().unwrap();
    assert!(a.intersection(b).is_empty());
    assert_eq!(a.union(b).len(), 6);
    assert_eq!(matching_to_pp(&g, &pp_to_matching(&g, &PlanePartition::row(1, &[0]).unwrap()).unwrap()).unwrap().entries(), &[0]);
}

/// `b_{0,j}` is drawn exactly when `j > h_1`, so only the empty partition
/// uses the lowest one and every partition with `h_1 < n` uses the highest.
#[test]
fn first_column_edges_follow_the_first_height() {
    for n in 2..=4 {
        let g = HexGraph::new(1, 2, n).unwrap();
        let all = matchings_with_partitions(&g).unwrap();
        let top = g.b(0, n).unwrap();
        assert_eq!(all.iter().filter(|(_, mt)| mt.contains(top)).count(), all.iter().filter(|(p, _)| p.get(0, 0) < n as u32).count());
        let b = g.b(0, 1).unwrap();
        let with: Vec<_> = matchings_with_partitions(&g).unwrap().into_iter().filter(|(_, mt)| mt.contains(b)).collect();
        assert_eq!(with.len(), 1);
        assert_eq!(matching_to_pp(&g, &with[0].1).unwrap().entries(), &[0, 0]);
    }
}

#[test]
fn non_matchings_are_rejected() {
    let g = HexGraph::new(1, 1, 1).unwrap();
    let bad = Matching::from_edges(g.edge_count(), [0]);
    assert!(matching_to_pp(&g, &bad).is_err());
    assert!(bad.check_perfect(&g).is_err());
}
