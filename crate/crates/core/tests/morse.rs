use pmtopo::complex::{perfect_matching_complex, SimplicialComplex, DEFAULT_FACE_CAP};
use pmtopo::morse::*;
use pmtopo::{Face, HexGraph};
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn f(v: &[usize]) -> Face {
    v.iter().copied().collect()
}

fn pm(k: usize, m: usize, n: usize) -> (HexGraph, SimplicialComplex) {
    let g = HexGraph::new(k, m, n).unwrap();
    let c = perfect_matching_complex(&g, DEFAULT_FACE_CAP).unwrap().simplicial().unwrap().clone();
    (g, c)
}

#[test]
fn cone_point_pairs_everything() {
    let c = SimplicialComplex::from_facets(4, &[f(&[0, 1, 2]), f(&[0, 3])], 100).unwrap();
    let e = element_pairing(&FaceState::new(&c), 0);
    assert_eq!(e.pairs.len() * 2, c.face_count());
    assert_eq!(e.pairs[0], (Face::EMPTY, f(&[0])));
    let p = sequential_pairing(&c, &[0]).unwrap();
    assert!(p.critical.is_empty() && p.empty_face_paired() && p.acyclic);
    assert_eq!(morse_summary(&p).unwrap().description, "contractible (one 0-cell)");
}

#[test]
fn element_pairing_skips_missing_cofaces() {
    let c = SimplicialComplex::from_facets(3, &[f(&[0, 1]), f(&[2])], 100).unwrap();
    let e = element_pairing(&FaceState::new(&c), 0);
    assert_eq!(e.pairs, vec![(Face::EMPTY, f(&[0])), (f(&[1]), f(&[0, 1]))]);
    let p = sequential_pairing(&c, &[0]).unwrap();
    assert_eq!(p.critical, vec![f(&[2])]);
}

#[test]
fn cyclic_square_is_rejected() {
    let c = SimplicialComplex::from_facets(4, &[f(&[0, 1]), f(&[1, 2]), f(&[2, 3]), f(&[0, 3])], 100).unwrap();
    let cyc = [(f(&[0]), f(&[0, 1])), (f(&[1]), f(&[1, 2])), (f(&[2]), f(&[2, 3])), (f(&[3]), f(&[0, 3]))];
    assert!(!verify_pairs_acyclic(&c, &cyc).unwrap());
    assert!(verify_pairs_acyclic(&c, &cyc[..3]).unwrap());
    assert!(verify_pairs_acyclic(&c, &[]).unwrap());
}

#[test]
fn malformed_pairs_are_errors() {
    let c = SimplicialComplex::from_facets(3, &[f(&[0, 1, 2])], 100).unwrap();
    assert!(verify_pairs_acyclic(&c, &[(f(&[0]), f(&[1, 2]))]).is_err());
    assert!(verify_pairs_acyclic(&c, &[(f(&[0]), f(&[0, 1])), (f(&[0]), f(&[0, 2]))]).is_err());
    assert!(sequential_pairing(&c, &[5]).is_err());
    assert!(sequential_pairing(&c, &[1, 1]).is_err());
}

#[test]
fn hollow_triangle_leaves_a_circle() {
    let c = SimplicialComplex::from_facets(3, &[f(&[0, 1]), f(&[1, 2]), f(&[0, 2])], 100).unwrap();
    let p = sequential_pairing(&c, &[0, 1]).unwrap();
    assert_eq!(p.critical, vec![f(&[1, 2])]);
    let s = morse_summary(&p).unwrap();
    assert_eq!(s.description, "one 0-cell and one 1-cell: S^1");
    assert_eq!(s.cells.get(&1), Some(&1));
}

#[test]
fn empty_sequence_keeps_every_face() {
    let (_, c) = pm(1, 2, 2);
    let p = sequential_pairing(&c, &[]).unwrap();
    assert_eq!(p.critical.len(), c.face_count());
    assert!(p.acyclic && p.partitions_faces());
}

#[test]
fn significant_pair_collapses_small_box() {
    let (g, c) = pm(1, 2, 2);
    let p = sequential_pairing(&c, &[g.x().unwrap(), g.y().unwrap()]).unwrap();
    assert!(p.acyclic && p.partitions_faces() && p.empty_face_paired());
    assert!(p.critical.iter().all(|s| s.len() == p.critical[0].len()));
}

#[test]
fn random_sequences_stay_acyclic() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for (k, m, n) in [(1, 2, 2), (2, 2, 2)] {
        let (_, c) = pm(k, m, n);
        let mut order: Vec<usize> = (0..c.ground()).collect();
        for _ in 0..100 {
            order.shuffle(&mut rng);
            let len = 1 + (order[0] % 8);
            let p = sequential_pairing(&c, &order[..len]).unwrap();
            assert!(p.acyclic && p.partitions_faces());
            assert!(verify_acyclic(&c, &p).unwrap());
        }
    }
}
