//! Integer simplicial homology through Smith normal forms of the augmented
//! boundary matrices.
//!
//! Boundary matrices are first reduced by sparse elimination on unit pivots,
//! which leaves the Smith form unchanged up to the invariant factors `1`
//! it peels off; whatever remains is diagonalised densely. Elimination runs
//! in `i64` with checked arithmetic and restarts over `BigInt` on overflow.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};
use std::fmt::{self, Debug, Write as _};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::complex::{Complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::Face;

/// Modulus of the prime-field rank check.
pub const CHECK_PRIME: u64 = 2_147_483_647;

/// Ring of matrix entries.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero_value() -> Self;
    fn from_i64(v: i64) -> Self;
    fn vanishes(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// Inverse of a unit.
    fn unit_inverse(&self) -> Self;
    fn checked_mul(&self, o: &Self) -> Option<Self>;
    fn checked_sub(&self, o: &Self) -> Option<Self>;
}

impl Coeff for i64 {
    fn zero_value() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn unit_inverse(&self) -> Self {
        *self
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        i64::checked_mul(*self, *o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        i64::checked_sub(*self, *o)
    }
}

impl Coeff for BigInt {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn unit_inverse(&self) -> Self {
        self.clone()
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
}

/// Element of `GF(CHECK_PRIME)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp(u64);

impl Fp {
    fn pow(self, mut e: u64) -> Fp {
        let (mut base, mut acc) = (self.0, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % CHECK_PRIME;
            }
            base = base * base % CHECK_PRIME;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl Coeff for Fp {
    fn zero_value() -> Self {
        Fp(0)
    }
    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(CHECK_PRIME as i64) as u64)
    }
    fn vanishes(&self) -> bool {
        self.0 == 0
    }
    fn is_unit(&self) -> bool {
        self.0 != 0
    }
    fn unit_inverse(&self) -> Self {
        self.pow(CHECK_PRIME - 2)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        Some(Fp(self.0 * o.0 % CHECK_PRIME))
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(Fp((self.0 + CHECK_PRIME - o.0) % CHECK_PRIME))
    }
}

/// Sparse integer matrix in compressed-column form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Column entries `(row, value)`, sorted by row.
    pub columns: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn from_dense(rows: usize, cols: usize, dense: &[Vec<i64>]) -> Self {
        let columns = (0..cols)
            .map(|c| {
                (0..rows)
                    .filter(|&r| dense[r][c] != 0)
                    .map(|r| (r as u32, dense[r][c]))
                    .collect()
            })
            .collect();
        SparseMatrix { rows, cols, columns }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0i64; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                d[r as usize][c] = v;
            }
        }
        d
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// One `row col value` line per nonzero entry, after a `rows cols nnz` header.
    pub fn to_triplets(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} {}", self.rows, self.cols, self.nnz());
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                let _ = writeln!(s, "{r} {c} {v}");
            }
        }
        s
    }

    fn row_lists<T: Coeff>(&self) -> Vec<Vec<(u32, T)>> {
        let mut rows: Vec<Vec<(u32, T)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                rows[r as usize].push((c as u32, T::from_i64(v)));
            }
        }
        rows
    }
}

/// Faces per dimension and the augmented boundary maps between them.
#[derive(Debug, Clone)]
pub struct ChainComplexData {
    /// `layers[c]`: faces of cardinality `c` (dimension `c - 1`), sorted.
    pub layers: Vec<Vec<Face>>,
    /// `boundaries[c]` maps cardinality `c` to cardinality `c - 1`;
    /// `boundaries[0]` is empty and `boundaries[1]` is the augmentation.
    pub boundaries: Vec<SparseMatrix>,
}

impl ChainComplexData {
    /// Boundary matrix `∂_d` from dimension `d` to `d - 1` (`d ≥ 0`).
    pub fn boundary(&self, d: usize) -> &SparseMatrix {
        &self.boundaries[d + 1]
    }

    /// Checks `∂_{d} ∘ ∂_{d+1} = 0` for every `d`.
    pub fn boundary_squared_is_zero(&self) -> bool {
        (2..self.boundaries.len()).into_par_iter().all(|c| {
            let upper = &self.boundaries[c];
            let lower = &self.boundaries[c - 1];
            upper.columns.iter().all(|col| {
                let mut acc: FxHashMap<u32, i64> = FxHashMap::default();
                for &(mid, a) in col {
                    for &(r, b) in &lower.columns[mid as usize] {
                        *acc.entry(r).or_default() += a * b;
                    }
                }
                acc.values().all(|&v| v == 0)
            })
        })
    }
}

/// Boundary matrices with the sign convention `∂[v_0..v_k] = Σ (-1)^i [.., v̂_i, ..]`
/// over sorted vertex lists, augmented by `∂[v] = [∅]`.
pub fn boundary_matrices(c: &SimplicialComplex) -> ChainComplexData {
    let layers: Vec<Vec<Face>> = c.layers().to_vec();
    let boundaries = (0..layers.len())
        .map(|card| boundary_matrix(&layers, card))
        .collect();
    ChainComplexData { layers, boundaries }
}

fn boundary_matrix(layers: &[Vec<Face>], card: usize) -> SparseMatrix {
    if card == 0 {
        return SparseMatrix { rows: 0, cols: layers[0].len(), columns: vec![Vec::new(); layers[0].len()] };
    }
    let lower = &layers[card - 1];
    let columns = layers[card]
        .par_iter()
        .map(|&f| {
            let mut col: Vec<(u32, i64)> = f
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let r = lower.binary_search(&f.without(v)).expect("complex is downward closed");
                    (r as u32, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    SparseMatrix { rows: lower.len(), cols: layers[card].len(), columns }
}

/// Smith normal form data of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf {
    pub rank: usize,
    /// Number of invariant factors equal to 1.
    pub units: usize,
    /// Invariant factors greater than 1, in divisibility order.
    pub nontrivial: Vec<BigInt>,
}

impl Snf {
    /// All invariant factors `d_1 | d_2 | …`.
    pub fn invariants(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::one(); self.units];
        v.extend(self.nontrivial.iter().cloned());
        v
    }
}

struct Overflow;

/// Sparse elimination state: rows as sorted `(col, value)` lists plus
/// exact column counts and lazily maintained column-to-row lists.
struct Eliminator<T: Coeff> {
    rows: Vec<Vec<(u32, T)>>,
    col_rows: Vec<Vec<u32>>,
    col_nnz: Vec<u32>,
    row_alive: Vec<bool>,
    col_alive: Vec<bool>,
    row_queue: Vec<u32>,
    col_queue: Vec<u32>,
    heap: BinaryHeap<Reverse<(u32, u32)>>,
    pivots: usize,
}

impl<T: Coeff> Eliminator<T> {
    fn new(m: &SparseMatrix) -> Self {
        let rows = m.row_lists::<T>();
        let col_rows: Vec<Vec<u32>> = m.columns.iter().map(|c| c.iter().map(|&(r, _)| r).collect()).collect();
        let col_nnz: Vec<u32> = m.columns.iter().map(|c| c.len() as u32).collect();
        let row_queue = (0..rows.len() as u32).filter(|&r| rows[r as usize].len() == 1).collect();
        let col_queue = (0..m.cols as u32).filter(|&c| col_nnz[c as usize] == 1).collect();
        let heap = (0..m.cols as u32)
            .filter(|&c| col_nnz[c as usize] > 0)
            .map(|c| Reverse((col_nnz[c as usize], c)))
            .collect();
        Eliminator {
            rows,
            col_rows,
            col_nnz,
            row_alive: vec![true; m.rows],
            col_alive: vec![true; m.cols],
            row_queue,
            col_queue,
            heap,
            pivots: 0,
        }
    }

    fn entry(&self, r: u32, c: u32) -> Option<&T> {
        let row = &self.rows[r as usize];
        row.binary_search_by_key(&c, |&(cc, _)| cc).ok().map(|i| &row[i].1)
    }

    /// Live rows with a nonzero in column `c`.
    fn rows_of(&mut self, c: u32) -> Vec<u32> {
        let mut list = std::mem::take(&mut self.col_rows[c as usize]);
        list.sort_unstable();
        list.dedup();
        list.retain(|&r| self.row_alive[r as usize] && self.entry(r, c).is_some());
        self.col_rows[c as usize] = list.clone();
        list
    }

    fn col_changed(&mut self, c: u32) {
        let n = self.col_nnz[c as usize];
        if n == 1 {
            self.col_queue.push(c);
        }
        if n > 0 {
            self.heap.push(Reverse((n, c)));
        }
    }

    fn kill_row(&mut self, r: u32) {
        self.row_alive[r as usize] = false;
        let row = std::mem::take(&mut self.rows[r as usize]);
        for (c, _) in row {
            if self.col_alive[c as usize] {
                self.col_nnz[c as usize] -= 1;
                self.col_changed(c);
            }
        }
    }

    fn kill_col(&mut self, c: u32) {
        self.col_alive[c as usize] = false;
        self.col_nnz[c as usize] = 0;
        self.col_rows[c as usize] = Vec::new();
    }

    /// Removes column `c` from row `r` without other changes.
    fn drop_entry(&mut self, r: u32, c: u32) {
        let row = &mut self.rows[r as usize];
        if let Ok(i) = row.binary_search_by_key(&c, |&(cc, _)| cc) {
            row.remove(i);
            if row.len() == 1 {
                self.row_queue.push(r);
            }
        }
    }

    /// Pivot on `(r, c)` where row `r` has no other entry.
    fn pivot_row_singleton(&mut self, r: u32, c: u32) {
        for r2 in self.rows_of(c) {
            if r2 != r {
                self.drop_entry(r2, c);
            }
        }
        self.kill_col(c);
        self.row_alive[r as usize] = false;
        self.rows[r as usize] = Vec::new();
        self.pivots += 1;
    }

    /// Pivot on `(r, c)` where column `c` has no other entry.
    fn pivot_col_singleton(&mut self, r: u32, c: u32) {
        self.kill_col(c);
        self.kill_row(r);
        self.pivots += 1;
    }

    /// General unit pivot: clears column `c` with row operations.
    fn pivot_general(&mut self, r: u32, c: u32) -> std::result::Result<(), Overflow> {
        let inv = self.entry(r, c).expect("pivot entry").unit_inverse();
        let prow: Vec<(u32, T)> = self.rows[r as usize].iter().filter(|&&(cc, _)| cc != c).cloned().collect();
        for r2 in self.rows_of(c) {
            if r2 == r {
                continue;
            }
            let a = self.entry(r2, c).expect("listed entry").clone();
            let f = a.checked_mul(&inv).ok_or(Overflow)?;
            let old = std::mem::take(&mut self.rows[r2 as usize]);
            let mut merged: Vec<(u32, T)> = Vec::with_capacity(old.len() + prow.len());
            let (mut i, mut j) = (0, 0);
            while i < old.len() || j < prow.len() {
                let take_old = j >= prow.len() || (i < old.len() && old[i].0 < prow[j].0);
                let take_new = i >= old.len() || (j < prow.len() && prow[j].0 < old[i].0);
                if take_old {
                    if old[i].0 != c {
                        merged.push(old[i].clone());
                    }
                    i += 1;
                } else if take_new {
                    let (cc, ref v) = prow[j];
                    let val = T::zero_value().checked_sub(&f.checked_mul(v).ok_or(Overflow)?).ok_or(Overflow)?;
                    merged.push((cc, val));
                    self.col_nnz[cc as usize] += 1;
                    self.col_rows[cc as usize].push(r2);
                    self.col_changed(cc);
                    j += 1;
                } else {
                    let cc = old[i].0;
                    let val = old[i].1.checked_sub(&f.checked_mul(&prow[j].1).ok_or(Overflow)?).ok_or(Overflow)?;
                    if val.vanishes() {
                        self.col_nnz[cc as usize] -= 1;
                        self.col_changed(cc);
                    } else {
                        merged.push((cc, val));
                    }
                    i += 1;
                    j += 1;
                }
            }
            if merged.len() == 1 {
                self.row_queue.push(r2);
            }
            self.rows[r2 as usize] = merged;
        }
        self.kill_col(c);
        self.kill_row(r);
        self.pivots += 1;
        Ok(())
    }

    fn run(&mut self) -> std::result::Result<(), Overflow> {
        loop {
            if let Some(r) = self.row_queue.pop() {
                if self.row_alive[r as usize] && self.rows[r as usize].len() == 1 {
                    let (c, ref v) = self.rows[r as usize][0];
                    if v.is_unit() {
                        self.pivot_row_singleton(r, c);
                    }
                }
                continue;
            }
            if let Some(c) = self.col_queue.pop() {
                if self.col_alive[c as usize] && self.col_nnz[c as usize] == 1 {
                    let rs = self.rows_of(c);
                    debug_assert_eq!(rs.len(), 1);
                    let r = rs[0];
                    if self.entry(r, c).is_some_and(T::is_unit) {
                        self.pivot_col_singleton(r, c);
                    }
                }
                continue;
            }
            let Some(Reverse((n, c))) = self.heap.pop() else {
                return Ok(());
            };
            if !self.col_alive[c as usize] || self.col_nnz[c as usize] != n {
                continue;
            }
            let best = self
                .rows_of(c)
                .into_iter()
                .filter(|&r| self.entry(r, c).is_some_and(T::is_unit))
                .min_by_key(|&r| (self.rows[r as usize].len(), r));
            if let Some(r) = best {
                self.pivot_general(r, c)?;
            }
        }
    }

    /// Live entries left after elimination, as a dense matrix.
    fn residual(&self) -> Vec<Vec<T>> {
        let cols: Vec<u32> = (0..self.col_nnz.len() as u32)
            .filter(|&c| self.col_alive[c as usize] && self.col_nnz[c as usize] > 0)
            .collect();
        let col_pos: FxHashMap<u32, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        self.rows
            .iter()
            .enumerate()
            .filter(|(r, row)| self.row_alive[*r] && !row.is_empty())
            .map(|(_, row)| {
                let mut dense = vec![T::zero_value(); cols.len()];
                for (c, v) in row {
                    if let Some(&i) = col_pos.get(c) {
                        dense[i] = v.clone();
                    }
                }
                dense
            })
            .collect()
    }
}

/// Smith normal form of an integer matrix.
pub fn smith_normal_form(m: &SparseMatrix) -> Snf {
    match snf_with::<i64>(m) {
        Some(s) => s,
        None => snf_with::<BigInt>(m).expect("BigInt arithmetic cannot overflow"),
    }
}

fn snf_with<T: Coeff + IntoBig>(m: &SparseMatrix) -> Option<Snf> {
    let mut el = Eliminator::<T>::new(m);
    el.run().ok()?;
    let residual: Vec<Vec<BigInt>> = el
        .residual()
        .into_iter()
        .map(|row| row.into_iter().map(IntoBig::into_big).collect())
        .collect();
    let diag = dense_snf(residual);
    let ones = diag.iter().filter(|d| d.is_one()).count();
    let nontrivial: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_one()).collect();
    Some(Snf { rank: el.pivots + ones + nontrivial.len(), units: el.pivots + ones, nontrivial })
}

trait IntoBig {
    fn into_big(self) -> BigInt;
}

impl IntoBig for i64 {
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl IntoBig for BigInt {
    fn into_big(self) -> BigInt {
        self
    }
}

/// Rank over `GF(CHECK_PRIME)`.
pub fn rank_mod_p(m: &SparseMatrix) -> usize {
    let mut el = Eliminator::<Fp>::new(m);
    el.run().ok().expect("field arithmetic cannot overflow");
    debug_assert!(el.residual().is_empty());
    el.pivots
}

/// Nonzero diagonal of the Smith form of a dense matrix, each dividing the
/// next: smallest-pivot elimination with full row and column reduction.
pub fn dense_snf(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = smallest_nonzero(&a, t) else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut clean = true;
            for r in t + 1..rows {
                if !a[r][t].is_zero() {
                    let q = a[r][t].div_floor(&a[t][t]);
                    for c in t..cols {
                        let s = &q * &a[t][c];
                        a[r][c] -= s;
                    }
                    if !a[r][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for c in t + 1..cols {
                if !a[t][c].is_zero() {
                    let q = a[t][c].div_floor(&a[t][t]);
                    for r in t..rows {
                        let s = &q * &a[r][t];
                        a[r][c] -= s;
                    }
                    if !a[t][c].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                // Divisibility: fold in any row the pivot does not divide.
                let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !a[r][c].is_multiple_of(&a[t][t])));
                match bad {
                    None => break,
                    Some(r) => {
                        for c in t..cols {
                            let v = a[r][c].clone();
                            a[t][c] += v;
                        }
                    }
                }
            }
            if let Some((pr, pc)) = smallest_nonzero_in_lanes(&a, t) {
                a.swap(t, pr);
                for row in a.iter_mut() {
                    row.swap(t, pc);
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

fn smallest_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (r, row) in a.iter().enumerate().skip(t) {
        for (c, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.is_none_or(|(br, bc)| v.abs() < a[br][bc].abs()) {
                best = Some((r, c));
                if v.is_one() || (-v).is_one() {
                    return best;
                }
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` or column `t` of the trailing block.
fn smallest_nonzero_in_lanes(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let lanes = (t..a.len()).map(|r| (r, t)).chain((t + 1..a[t].len()).map(|c| (t, c)));
    for (r, c) in lanes {
        let v = &a[r][c];
        if !v.is_zero() && best.is_none_or(|(br, bc)| v.abs() < a[br][bc].abs()) {
            best = Some((r, c));
        }
    }
    best
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(dense: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = dense.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for cc in c + 1..cols {
                let v = (&a[rank][c] * &a[r][cc] - &a[r][c] * &a[rank][cc]) / &prev;
                a[r][cc] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers and torsion coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyProfile {
    pub void: bool,
    /// `b̃_d` for `d = -1 ..= dim`.
    pub betti: BTreeMap<isize, u64>,
    /// Torsion coefficients of `H̃_d`, only for dimensions that have any.
    pub torsion: BTreeMap<isize, Vec<BigInt>>,
}

impl HomologyProfile {
    pub fn betti(&self, d: isize) -> u64 {
        self.betti.get(&d).copied().unwrap_or(0)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// All reduced groups vanish.
    pub fn is_acyclic(&self) -> bool {
        !self.void && self.betti.values().all(|&b| b == 0) && self.torsion.is_empty()
    }

    /// Reduced homology of a wedge of `r` spheres of dimension `d`.
    pub fn is_wedge_of_spheres(&self, d: isize, r: u64) -> bool {
        !self.void && self.torsion.is_empty() && self.betti.iter().all(|(&k, &b)| b == if k == d { r } else { 0 }) && self.betti(d) == r
    }

    /// `Σ (-1)^d b̃_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .map(|(&d, &b)| if d.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("profile serialises")
    }
}

struct TorsionList<'a>(&'a [BigInt]);

impl Serialize for TorsionList<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for v in self.0 {
            match v.to_u64() {
                Some(x) => seq.serialize_element(&x)?,
                None => seq.serialize_element(&v.to_string())?,
            }
        }
        seq.end()
    }
}

struct Keyed<'a, V>(&'a BTreeMap<isize, V>);

impl<V: Serialize> Serialize for Keyed<'_, V> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(&k.to_string(), v)?;
        }
        map.end()
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let torsion: BTreeMap<isize, TorsionList> = self.torsion.iter().map(|(&k, v)| (k, TorsionList(v))).collect();
        let mut map = s.serialize_map(None)?;
        if self.void {
            map.serialize_entry("void", &true)?;
        }
        map.serialize_entry("betti_reduced", &Keyed(&self.betti))?;
        map.serialize_entry("torsion", &Keyed(&torsion))?;
        map.end()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.void {
            return f.write_str("void complex");
        }
        let nz: Vec<String> = self
            .betti
            .iter()
            .filter(|(_, &b)| b > 0)
            .map(|(d, b)| format!("b~{d}={b}"))
            .chain(self.torsion.iter().map(|(d, t)| {
                let ts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
                format!("torsion{d}=[{}]", ts.join(","))
            }))
            .collect();
        if nz.is_empty() {
            f.write_str("all reduced homology vanishes")
        } else {
            f.write_str(&nz.join(" "))
        }
    }
}

/// How the chain complex is prepared before Smith reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Build an acyclic matching by coreductions, then reduce the Morse
    /// complex on the unmatched cells.
    Reduce,
    /// Reduce the full boundary matrices.
    Full,
}

/// Per-dimension ranks and invariants of a complex, with the prime-field
/// consistency check.
#[derive(Debug, Clone)]
pub struct HomologyComputation {
    pub profile: HomologyProfile,
    /// Cells per cardinality in the chain complex that was reduced.
    pub cells: Vec<usize>,
    /// Smith data of the map out of each cardinality.
    pub snf: Vec<Snf>,
    /// `rank_p(∂) = rank(∂) - #{invariants divisible by p}` held for every map.
    pub prime_check: bool,
}

/// Reduced integer homology; the void complex gets a profile flagged void.
pub fn reduced_homology(c: &Complex) -> Result<HomologyProfile> {
    match c {
        Complex::Void => Ok(HomologyProfile { void: true, ..Default::default() }),
        Complex::Simplicial(s) => Ok(compute_homology(s, Strategy::Reduce, false)?.profile),
    }
}

/// Full computation on a non-void complex; `check_prime` also runs the
/// `GF(p)` rank comparison on every map.
pub fn compute_homology(c: &SimplicialComplex, strategy: Strategy, check_prime: bool) -> Result<HomologyComputation> {
    let matrices = match strategy {
        Strategy::Full => None,
        Strategy::Reduce => morse_boundaries(&Incidence::new(c)),
    };
    let matrices = match matrices {
        Some(m) => m,
        None => (0..c.layers().len()).map(|card| boundary_matrix(c.layers(), card)).collect(),
    };
    let results: Vec<(Snf, bool)> = matrices
        .par_iter()
        .map(|m| {
            let snf = smith_normal_form(m);
            let ok = !check_prime || {
                let p = BigInt::from(CHECK_PRIME);
                let lost = snf.nontrivial.iter().filter(|d| d.is_multiple_of(&p)).count();
                rank_mod_p(m) == snf.rank - lost
            };
            (snf, ok)
        })
        .collect();
    let prime_check = results.iter().all(|r| r.1);
    let snf: Vec<Snf> = results.into_iter().map(|r| r.0).collect();
    let cells: Vec<usize> = matrices.iter().map(|m| m.cols).collect();

    let mut betti = BTreeMap::new();
    let mut torsion = BTreeMap::new();
    for card in 0..c.layers().len() {
        let d = card as isize - 1;
        let rank_out = snf[card].rank;
        let rank_in = snf.get(card + 1).map_or(0, |s| s.rank);
        let b = cells[card]
            .checked_sub(rank_out + rank_in)
            .ok_or_else(|| Error::Internal(format!("negative Betti number in dimension {d}")))?;
        betti.insert(d, b as u64);
        if let Some(s) = snf.get(card + 1) {
            if !s.nontrivial.is_empty() {
                torsion.insert(d, s.nontrivial.clone());
            }
        }
    }
    Ok(HomologyComputation { profile: HomologyProfile { void: false, betti, torsion }, cells, snf, prime_check })
}

/// Cells numbered layer by layer, with face and coface lists.
struct Incidence {
    /// First id of each cardinality, plus the total.
    offset: Vec<usize>,
    /// Faces of cell `i` sit at `faces[face_start[i]..face_start[i + 1]]`,
    /// ordered by the removed vertex, so the `j`-th has sign `(-1)^j`.
    face_start: Vec<usize>,
    faces: Vec<u32>,
    coface_start: Vec<usize>,
    cofaces: Vec<u32>,
}

impl Incidence {
    fn new(c: &SimplicialComplex) -> Self {
        let layers = c.layers();
        let mut offset = vec![0usize];
        for l in layers {
            offset.push(offset.last().unwrap() + l.len());
        }
        let total = *offset.last().unwrap();
        let mut face_start = Vec::with_capacity(total + 1);
        face_start.push(0);
        for (card, l) in layers.iter().enumerate() {
            for _ in l {
                face_start.push(face_start.last().unwrap() + card);
            }
        }
        let mut faces = vec![0u32; *face_start.last().unwrap()];
        let mut rest: &mut [u32] = &mut faces;
        for card in 1..layers.len() {
            let (chunk, tail) = rest.split_at_mut(layers[card].len() * card);
            rest = tail;
            let lower = &layers[card - 1];
            let base = offset[card - 1] as u32;
            chunk.par_chunks_mut(card).zip(layers[card].par_iter()).for_each(|(out, &f)| {
                for (slot, v) in out.iter_mut().zip(f.iter()) {
                    *slot = base + lower.binary_search(&f.without(v)).expect("complex is downward closed") as u32;
                }
            });
        }
        let mut count = vec![0usize; total + 1];
        for &x in &faces {
            count[x as usize + 1] += 1;
        }
        for i in 0..total {
            count[i + 1] += count[i];
        }
        let coface_start = count.clone();
        let mut cofaces = vec![0u32; faces.len()];
        for cell in 0..total {
            for &x in &faces[face_start[cell]..face_start[cell + 1]] {
                cofaces[count[x as usize]] = cell as u32;
                count[x as usize] += 1;
            }
        }
        Incidence { offset, face_start, faces, coface_start, cofaces }
    }

    fn total(&self) -> usize {
        *self.offset.last().unwrap()
    }

    fn faces(&self, i: u32) -> &[u32] {
        &self.faces[self.face_start[i as usize]..self.face_start[i as usize + 1]]
    }

    fn cofaces(&self, i: u32) -> &[u32] {
        &self.cofaces[self.coface_start[i as usize]..self.coface_start[i as usize + 1]]
    }

    fn card(&self, i: u32) -> usize {
        self.offset.partition_point(|&o| o <= i as usize) - 1
    }
}

const CRITICAL: u32 = u32::MAX;

/// Acyclic matching on the augmented complex built by coreductions: a live
/// cell with exactly one live face is matched with it, and when none is
/// left the lowest live cell becomes critical. `partner[i]` is the matched
/// cell or `CRITICAL`; `time[i]` is the removal order.
struct Matching {
    partner: Vec<u32>,
    lower: Vec<bool>,
    time: Vec<u32>,
}

fn coreduction_matching(inc: &Incidence) -> Matching {
    let total = inc.total();
    let mut live = vec![true; total];
    let mut down: Vec<u8> = (0..total as u32).map(|i| inc.faces(i).len() as u8).collect();
    let mut m = Matching { partner: vec![CRITICAL; total], lower: vec![false; total], time: vec![0; total] };
    let mut queue: std::collections::VecDeque<u32> = (inc.offset[1]..inc.offset.get(2).copied().unwrap_or(total))
        .map(|i| i as u32)
        .collect();
    let mut clock = 0u32;
    let mut remove = |x: u32, live: &mut [bool], down: &mut [u8], queue: &mut std::collections::VecDeque<u32>, time: &mut [u32]| {
        live[x as usize] = false;
        time[x as usize] = clock;
        clock += 1;
        for &y in inc.cofaces(x) {
            if live[y as usize] {
                down[y as usize] -= 1;
                if down[y as usize] == 1 {
                    queue.push_back(y);
                }
            }
        }
    };
    let mut seed = 0usize;
    loop {
        if let Some(c) = queue.pop_front() {
            if !live[c as usize] || down[c as usize] != 1 {
                continue;
            }
            let b = *inc.faces(c).iter().find(|&&b| live[b as usize]).expect("one live face");
            m.partner[b as usize] = c;
            m.partner[c as usize] = b;
            m.lower[b as usize] = true;
            remove(b, &mut live, &mut down, &mut queue, &mut m.time);
            remove(c, &mut live, &mut down, &mut queue, &mut m.time);
        } else {
            while seed < total && !live[seed] {
                seed += 1;
            }
            if seed == total {
                break;
            }
            remove(seed as u32, &mut live, &mut down, &mut queue, &mut m.time);
        }
    }
    m
}

/// Boundary maps of the Morse complex of the coreduction matching, indexed
/// by cardinality; `None` if a coefficient leaves `i64`.
///
/// The boundary of a critical cell is carried along gradient paths: a
/// matched lower cell `b` with partner `a` is replaced by `b - [a:b] ∂a`,
/// matched upper cells are dropped, critical cells are kept. Processing in
/// decreasing removal time visits each cell at most once, because every
/// other face of `a` was removed before `b`.
fn morse_boundaries(inc: &Incidence) -> Option<Vec<SparseMatrix>> {
    let m = coreduction_matching(inc);
    let layers = inc.offset.len() - 1;
    let mut index = vec![u32::MAX; inc.total()];
    let mut critical: Vec<Vec<u32>> = vec![Vec::new(); layers];
    for i in 0..inc.total() as u32 {
        if m.partner[i as usize] == CRITICAL {
            let card = inc.card(i);
            index[i as usize] = critical[card].len() as u32;
            critical[card].push(i);
        }
    }
    let sign = |j: usize| if j % 2 == 0 { 1i64 } else { -1 };
    let flow = |s: u32| -> Option<Vec<(u32, i64)>> {
        let mut chain: FxHashMap<u32, i64> = FxHashMap::default();
        let mut heap: BinaryHeap<(u32, u32)> = BinaryHeap::new();
        for (j, &x) in inc.faces(s).iter().enumerate() {
            chain.insert(x, sign(j));
            heap.push((m.time[x as usize], x));
        }
        let mut out = Vec::new();
        while let Some((_, z)) = heap.pop() {
            let v = chain.remove(&z).expect("queued cells are in the chain");
            if v == 0 {
                continue;
            }
            let a = m.partner[z as usize];
            if a == CRITICAL {
                out.push((index[z as usize], v));
            } else if m.lower[z as usize] {
                let fa = inc.faces(a);
                let pos = fa.iter().position(|&w| w == z).expect("partner is a coface");
                let scale = v.checked_mul(sign(pos))?;
                for (j, &w) in fa.iter().enumerate() {
                    if j == pos {
                        continue;
                    }
                    let delta = scale.checked_mul(sign(j))?;
                    match chain.entry(w) {
                        std::collections::hash_map::Entry::Occupied(mut e) => {
                            let cur = *e.get();
                            *e.get_mut() = cur.checked_sub(delta)?;
                        }
                        std::collections::hash_map::Entry::Vacant(e) => {
                            e.insert(-delta);
                            heap.push((m.time[w as usize], w));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        Some(out)
    };
    (0..layers)
        .map(|card| {
            let rows = if card == 0 { 0 } else { critical[card - 1].len() };
            let columns = if card == 0 {
                vec![Vec::new(); critical[0].len()]
            } else {
                critical[card].par_iter().map(|&s| flow(s)).collect::<Option<Vec<_>>>()?
            };
            Some(SparseMatrix { rows, cols: critical[card].len(), columns })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::DEFAULT_FACE_CAP;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_snfs() {
        let id = SparseMatrix::from_dense(3, 3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(smith_normal_form(&id).invariants(), big(&[1, 1, 1]));
        let m = SparseMatrix::from_dense(2, 2, &[vec![2, 0], vec![0, 3]]);
        assert_eq!(smith_normal_form(&m).invariants(), big(&[1, 6]));
        let z = SparseMatrix::from_dense(2, 3, &[vec![0, 0, 0], vec![0, 0, 0]]);
        let s = smith_normal_form(&z);
        assert_eq!((s.rank, s.invariants().len()), (0, 0));
    }

    #[test]
    fn edge_boundary_signs() {
        let c = SimplicialComplex::from_facets(2, &[Face(0b11)], DEFAULT_FACE_CAP).unwrap();
        let data = boundary_matrices(&c);
        assert_eq!(data.boundary(1).to_dense(), vec![vec![-1], vec![1]]);
    }

    #[test]
    fn hollow_triangle() {
        let facets = [Face(0b011), Face(0b101), Face(0b110)];
        let c = SimplicialComplex::from_facets(3, &facets, DEFAULT_FACE_CAP).unwrap();
        let data = boundary_matrices(&c);
        assert_eq!(smith_normal_form(data.boundary(1)).rank, 2);
        let h = compute_homology(&c, Strategy::Full, true).unwrap();
        assert!(h.profile.is_wedge_of_spheres(1, 1));
        assert!(h.prime_check);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big_entry = 1i64 << 62;
        let m = SparseMatrix::from_dense(2, 2, &[vec![1, big_entry], vec![big_entry, 1]]);
        let s = smith_normal_form(&m);
        let det = BigInt::from(1) - BigInt::from(big_entry) * BigInt::from(big_entry);
        assert_eq!(s.invariants(), vec![BigInt::one(), det.abs()]);
    }

    #[test]
    fn json_keys_in_numeric_order() {
        let p = HomologyProfile {
            void: false,
            betti: BTreeMap::from([(-1, 0), (0, 1), (10, 0), (2, 0)]),
            torsion: BTreeMap::from([(1, vec![BigInt::from(2)])]),
        };
        assert_eq!(
            p.to_json_string(),
            r#"{"betti_reduced":{"-1":0,"0":1,"2":0,"10":0},"torsion":{"1":[2]}}"#
        );
    }
}
