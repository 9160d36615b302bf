use std::collections::BTreeSet;

use pmtopo::partitions::*;
use pmtopo::HexGraph;

#[test]
fn closed_form_agrees_with_cube_stack_for_single_layer() {
    for m in 1..=4 {
        for n in 1..=4 {
            let g = HexGraph::new(1, m, n).unwrap();
            for p in enumerate_plane_partitions(1, m, n).unwrap() {
                let a = pp_to_matching(&g, &p).unwrap();
                let b = pp_to_matching_k1(&g, &p).unwrap();
                assert_eq!(a, b, "1x{m}x{n} {p}");
            }
        }
    }
}

#[test]
fn bijection_onto_backtracking_matchings() {
    for k in 1..=3 {
        for m in 1..=3 {
            for n in 1..=3 {
                let g = HexGraph::new(k, m, n).unwrap();
                let images: BTreeSet<Matching> = enumerate_plane_partitions(k, m, n)
                    .unwrap()
                    .iter()
                    .map(|p| {
                        let mt = pp_to_matching(&g, p).unwrap();
                        mt.check_perfect(&g).unwrap();
                        assert_eq!(&matching_to_pp(&g, &mt).unwrap(), p);
                        mt
                    })
                    .collect();
                let brute: BTreeSet<Matching> = enumerate_perfect_matchings(&g).unwrap().into_iter().collect();
                assert_eq!(images, brute, "{k}x{m}x{n}");
            }
        }
    }
}

#[test]
fn aliases_resolve_on_2x2x2() {
    let g = HexGraph::new(2, 2, 2).unwrap();
    let al = g.aliases().unwrap();
    assert_eq!(al.len(), 18);
}
