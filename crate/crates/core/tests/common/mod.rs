//! Test-only oracles, written without the library's own algorithms.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use pmtopo::Face;

/// Box formula `∏_{i≤k, j≤m, l≤n} (i+j+l-1)/(i+j+l-2)` for plane partitions.
pub fn macmahon(k: u64, m: u64, n: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=k {
        for j in 1..=m {
            for l in 1..=n {
                num *= i + j + l - 1;
                den *= i + j + l - 2;
            }
        }
    }
    assert!((&num % &den).is_zero());
    num / den
}

pub fn binomial(a: u64, b: u64) -> u64 {
    (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1))
}

/// Rank over the rationals by fraction-free elimination.
pub fn rational_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let g = a[rank][c].clone();
                for cc in 0..cols {
                    let v = &a[r][cc] * &g - &a[rank][cc] * &f;
                    a[r][cc] = v;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else { return BigInt::zero() };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * prev
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Invariant factors from determinantal divisors: `d_k = g_k / g_{k-1}`
/// with `g_k` the gcd of all `k×k` minors. Only for small matrices.
pub fn invariant_factors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs.iter().map(|&r| cs.iter().map(|&c| BigInt::from(m[r][c])).collect()).collect();
                g = g.gcd(&det(sub));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push((&g / &prev).abs());
        prev = g;
    }
    out
}

/// Reduced Betti numbers over the rationals from an explicit face list,
/// with its own boundary construction. Index `d + 1` holds `b̃_d`.
pub fn rational_betti(faces: &[Face]) -> Vec<i64> {
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut layers: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
    for &f in faces {
        layers[f.len()].push(f);
    }
    for l in &mut layers {
        l.sort();
    }
    let rank = |card: usize| -> usize {
        if card == 0 || card > top {
            return 0;
        }
        let lower = &layers[card - 1];
        let dense: Vec<Vec<i64>> = lower
            .iter()
            .map(|&r| {
                layers[card]
                    .iter()
                    .map(|&c| {
                        if !r.is_subset(c) {
                            return 0;
                        }
                        let gone = c.difference(r).iter().next().unwrap();
                        let pos = c.iter().take_while(|&v| v < gone).count();
                        if pos % 2 == 0 { 1 } else { -1 }
                    })
                    .collect()
            })
            .collect();
        rational_rank(&dense)
    };
    (0..=top)
        .map(|card| layers[card].len() as i64 - rank(card) as i64 - rank(card + 1) as i64)
        .collect()
}
