mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use pmtopo::complex::{perfect_matching_complex, Complex, SimplicialComplex, DEFAULT_FACE_CAP};
use pmtopo::homology::{smith_normal_form, SparseMatrix};
use pmtopo::morse::{sequential_pairing, verify_acyclic};
use pmtopo::partitions::*;
use pmtopo::{Face, GraphView, HexGraph};

/// Random box partition: sort rows, then columns, of a random array.
fn partition(k: usize, m: usize, n: usize) -> impl Strategy<Value = PlanePartition> {
    proptest::collection::vec(0..=n as u32, k * m).prop_map(move |mut v| {
        for r in 0..k {
            v[r * m..(r + 1) * m].sort_unstable_by(|a, b| b.cmp(a));
        }
        for c in 0..m {
            let mut col: Vec<u32> = (0..k).map(|r| v[r * m + c]).collect();
            col.sort_unstable_by(|a, b| b.cmp(a));
            for r in 0..k {
                v[r * m + c] = col[r];
            }
        }
        PlanePartition::new(k, m, n, v).unwrap()
    })
}

fn sized_partition() -> impl Strategy<Value = PlanePartition> {
    (1..=3usize, 1..=4usize, 1..=4usize).prop_flat_map(|(k, m, n)| partition(k, m, n))
}

fn complex(k: usize, m: usize, n: usize) -> &'static SimplicialComplex {
    static SMALL: OnceLock<SimplicialComplex> = OnceLock::new();
    static CUBE: OnceLock<SimplicialComplex> = OnceLock::new();
    let cell = if (k, m, n) == (2, 2, 2) { &CUBE } else { &SMALL };
    cell.get_or_init(|| {
        let g = HexGraph::new(k, m, n).unwrap();
        match perfect_matching_complex(&g, DEFAULT_FACE_CAP).unwrap() {
            Complex::Simplicial(c) => c,
            Complex::Void => unreachable!(),
        }
    })
}

fn matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn partitions_give_perfect_matchings_and_back(p in sized_partition()) {
        let (k, m, n) = p.dims();
        let g = HexGraph::new(k, m, n).unwrap();
        let mt = pp_to_matching(&g, &p).unwrap();
        prop_assert!(mt.check_perfect(&g).is_ok());
        prop_assert_eq!(mt.len() * 2, g.vertex_count());
        prop_assert_eq!(matching_to_pp(&g, &mt).unwrap(), p);
    }

    #[test]
    fn single_layer_membership_follows_heights(p in (1..=5usize, 1..=5usize).prop_flat_map(|(m, n)| partition(1, m, n))) {
        let (_, m, n) = p.dims();
        let g = HexGraph::new(1, m, n).unwrap();
        let mt = pp_to_matching_k1(&g, &p).unwrap();
        prop_assert_eq!(&mt, &pp_to_matching(&g, &p).unwrap());
        let h = |i: usize| -> usize {
            if i == 0 { n } else if i > m { 0 } else { p.get(0, i - 1) as usize }
        };
        for i in 0..=m {
            for j in 0..=n {
                if let Ok(e) = g.a(i, j) {
                    prop_assert_eq!(mt.contains(e), j == h(i), "a {} {}", i, j);
                }
                if let Ok(e) = g.b(i, j) {
                    prop_assert_eq!(mt.contains(e), h(i) >= j && j > h(i + 1), "b {} {}", i, j);
                }
                if let Ok(e) = g.d(i, j) {
                    prop_assert_eq!(mt.contains(e), j > h(i) || j < h(i + 1), "d {} {}", i, j);
                }
            }
        }
        prop_assert_eq!(mt.contains(g.x().unwrap()), p.entries().iter().any(|&h| h > 0));
        prop_assert_eq!(mt.contains(g.y().unwrap()), p.entries().iter().any(|&h| h < n as u32));
    }

    #[test]
    fn face_test_matches_listing(bits in any::<u64>(), keep in 0u32..64, cube in any::<bool>()) {
        let c = if cube { complex(2, 2, 2) } else { complex(1, 2, 2) };
        let ground = c.ground();
        let facet = c.facets()[(bits as usize) % c.facets().len()];
        // Thin a facet, sometimes add a stray element.
        let mut s: Face = facet.iter().filter(|&v| (bits >> (v % 64)) & 1 == 1).collect();
        if keep % 3 == 0 {
            s = s.with(keep as usize % ground);
        }
        prop_assert_eq!(c.is_face(s), c.contains_listed(s));
        prop_assert_eq!(c.is_face(s), c.facets().iter().any(|f| s.is_subset(*f)));
    }

    #[test]
    fn pairing_sequences_partition_faces(seq in proptest::collection::vec(0usize..30, 0..8), cube in any::<bool>()) {
        let c = if cube { complex(2, 2, 2) } else { complex(1, 2, 2) };
        let mut xs: Vec<usize> = Vec::new();
        for v in seq.into_iter().map(|v| v % c.ground()) {
            if !xs.contains(&v) {
                xs.push(v);
            }
        }
        let p = sequential_pairing(c, &xs).unwrap();
        prop_assert!(p.partitions_faces());
        prop_assert!(p.acyclic);
        prop_assert!(verify_acyclic(c, &p).unwrap());
        for (s, t) in p.pairs() {
            prop_assert!(s.is_subset(t) && t.len() == s.len() + 1);
        }
    }

    #[test]
    fn smith_form_matches_minors(m in matrix(4)) {
        let snf = smith_normal_form(&SparseMatrix::from_dense(m.len(), m[0].len(), &m));
        let want = common::invariant_factors(&m);
        prop_assert_eq!(snf.rank, want.len());
        prop_assert_eq!(snf.rank, common::rational_rank(&m));
        prop_assert_eq!(snf.invariants(), want);
    }

    #[test]
    fn smith_form_ignores_permutations(m in matrix(6), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let (r, c) = (m.len(), m[0].len());
        let mut rows: Vec<usize> = (0..r).collect();
        let mut cols: Vec<usize> = (0..c).collect();
        rows.shuffle(&mut rng);
        cols.shuffle(&mut rng);
        let permuted: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect();
        let a = smith_normal_form(&SparseMatrix::from_dense(r, c, &m));
        let b = smith_normal_form(&SparseMatrix::from_dense(r, c, &permuted));
        prop_assert_eq!(a, b);
    }
}
