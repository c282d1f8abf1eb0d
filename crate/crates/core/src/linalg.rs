//! Vectors, matrices, row reduction, duals, and codeword/coset enumeration
//! over a finite field.
//!
//! Enumeration order is fixed throughout: tuples over `GF(q)` are counted
//! lexicographically with the first coordinate most significant, which is
//! also the numeric order of their encodings under [`encode_vec`].

use crate::gf::{Elem, Field};
use crate::{Budget, Error, Result};
use rayon::prelude::*;
use std::sync::OnceLock;

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Reduced row-echelon form of a matrix, with rank and pivot columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    /// Builds a matrix from row-major data. `rows` may be zero (the empty
    /// parity matrix of the full space); `cols` must be positive.
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if cols == 0 {
            return Err(Error::Dimension("matrix must have at least one column".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        for &v in &data {
            field.check_elem(v as u64)?;
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zero(self.field.clone(), self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = 0;
                for t in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(r, t), rhs.get(t, c)));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Reduced row-echelon form with the leftmost-pivot, scaled-to-1
    /// convention; deterministic for a given input.
    pub fn rref(&self) -> Rref {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let (a, b) = (m.get(r, j), m.get(pr, j));
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let scale = f.inv(m.get(r, c)).expect("pivot entry is nonzero");
            for j in 0..m.cols {
                m.set(r, j, f.mul(scale, m.get(r, j)));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        // row-reduce [self | I]
        let mut aug = Matrix::zero(self.field.clone(), n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let red = aug.rref();
        if red.pivots.len() < n || red.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut out = Matrix::zero(self.field.clone(), n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, red.matrix.get(r, n + c));
            }
        }
        Some(out)
    }
}

/// Encodes a tuple over `GF(q)` as an integer, first coordinate most
/// significant; the numeric order of encodings is the lexicographic order
/// of tuples.
pub fn encode_vec(q: u32, v: &[Elem]) -> u64 {
    v.iter().fold(0u64, |acc, &d| acc * q as u64 + d as u64)
}

/// Inverse of [`encode_vec`].
pub fn decode_vec(q: u32, mut index: u64, len: usize) -> Vec<Elem> {
    let mut out = vec![0; len];
    for d in out.iter_mut().rev() {
        *d = (index % q as u64) as Elem;
        index /= q as u64;
    }
    out
}

/// Base-q odometer visiting all tuples of a fixed length in lexicographic
/// order, reporting each digit change so callers can update linear
/// combinations incrementally.
struct Odometer {
    q: u32,
    digits: Vec<Elem>,
}

impl Odometer {
    fn new(q: u32, len: usize) -> Odometer {
        Odometer { q, digits: vec![0; len] }
    }

    /// Advances to the next tuple; reports every digit change as
    /// `(position, old, new)`. Returns false after the last tuple.
    fn step(&mut self, mut on_change: impl FnMut(usize, Elem, Elem)) -> bool {
        for i in (0..self.digits.len()).rev() {
            let old = self.digits[i];
            if (old as u32) + 1 < self.q {
                self.digits[i] = old + 1;
                on_change(i, old, old + 1);
                return true;
            }
            self.digits[i] = 0;
            on_change(i, old, 0);
        }
        false
    }
}

/// A linear `[n, k]_q` code held by a generator matrix, with cached standard
/// form and (possibly supplied, otherwise derived) parity-check matrix.
///
/// `k = n` is admitted (the whole space, a single coset); the dual then does
/// not exist as a code.
pub struct LinearCode {
    field: Field,
    n: usize,
    k: usize,
    g: Matrix,
    h: OnceLock<Matrix>,
    std_form: OnceLock<Rref>,
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        LinearCode {
            field: self.field.clone(),
            n: self.n,
            k: self.k,
            g: self.g.clone(),
            h: self.h.clone(),
            std_form: self.std_form.clone(),
        }
    }
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}] code over {}", self.n, self.k, self.field)
    }
}

impl LinearCode {
    /// Builds a code from a full-rank generator matrix (n >= 2, 1 <= k <= n).
    pub fn from_generator(g: Matrix) -> Result<LinearCode> {
        let (k, n) = (g.rows(), g.cols());
        if n < 2 {
            return Err(Error::Dimension("code length must be at least 2".into()));
        }
        if k == 0 || k > n {
            return Err(Error::Dimension(format!("dimension {k} out of range for length {n}")));
        }
        let rr = g.rref();
        if rr.rank != k {
            return Err(Error::RankDeficient { rank: rr.rank, expected: k });
        }
        let field = g.field().clone();
        let code = LinearCode { field, n, k, g, h: OnceLock::new(), std_form: OnceLock::new() };
        let _ = code.std_form.set(rr);
        Ok(code)
    }

    /// Builds a code from a full-rank parity-check matrix.
    pub fn from_parity(h: Matrix) -> Result<LinearCode> {
        let (r, n) = (h.rows(), h.cols());
        if n < 2 {
            return Err(Error::Dimension("code length must be at least 2".into()));
        }
        if r == 0 || r >= n {
            return Err(Error::Dimension(format!("parity matrix with {r} rows out of range for length {n}")));
        }
        let rr = h.rref();
        if rr.rank != r {
            return Err(Error::RankDeficient { rank: rr.rank, expected: r });
        }
        let g = nullspace_basis(&rr, n);
        let code = LinearCode::from_generator(g)?;
        code.h.set(h).ok();
        Ok(code)
    }

    /// Builds a code from both matrices, checking `G * H^T = 0` and ranks.
    pub fn from_generator_and_parity(g: Matrix, h: Matrix) -> Result<LinearCode> {
        if g.field() != h.field() {
            return Err(Error::FieldMismatch);
        }
        if h.rows() != g.cols() - g.rows() || h.cols() != g.cols() {
            return Err(Error::Dimension("parity matrix shape does not match".into()));
        }
        if h.rank() != h.rows() {
            return Err(Error::RankDeficient { rank: h.rank(), expected: h.rows() });
        }
        if !g.mul(&h.transpose())?.is_zero() {
            return Err(Error::InvalidParameter("G * H^T is not zero".into()));
        }
        let code = LinearCode::from_generator(g)?;
        code.h.set(h).ok();
        Ok(code)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &Matrix {
        &self.g
    }

    /// Cached RREF of the generator with pivot columns.
    pub fn standard_form(&self) -> &Rref {
        self.std_form.get_or_init(|| self.g.rref())
    }

    /// Parity-check matrix; derived from the standard form when not supplied.
    /// For `k = n` this is the empty 0 x n matrix.
    pub fn parity(&self) -> &Matrix {
        self.h.get_or_init(|| nullspace_basis(self.standard_form(), self.n))
    }

    /// The `[n, n-k]` dual code. Errors for the whole space (`k = n`).
    pub fn dual(&self) -> Result<LinearCode> {
        if self.k == self.n {
            return Err(Error::InvalidParameter("the full space has a zero dual".into()));
        }
        let g = self.parity().clone();
        let code = LinearCode::from_generator(g)?;
        code.h.set(self.g.clone()).ok();
        Ok(code)
    }

    /// Number of codewords, if it fits in a u128.
    pub fn size(&self) -> Option<u128> {
        (self.field.q() as u128).checked_pow(self.k as u32)
    }

    /// Membership test by reduction against the standard form.
    pub fn contains(&self, v: &[Elem]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let f = &self.field;
        let rr = self.standard_form();
        let mut w = v.to_vec();
        for (row, &pc) in rr.pivots.iter().enumerate() {
            let c = w[pc];
            if c == 0 {
                continue;
            }
            for j in 0..self.n {
                w[j] = f.sub(w[j], f.mul(c, rr.matrix.get(row, j)));
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// True when every codeword of `self` lies in `other` and the dimension
    /// is strictly smaller.
    pub fn is_proper_subcode_of(&self, other: &LinearCode) -> bool {
        self.field == other.field
            && self.n == other.n
            && self.k < other.k
            && (0..self.k).all(|r| other.contains(self.g.row(r)))
    }

    /// Visits all `q^k` codewords exactly once, in the order induced by
    /// message tuples counted lexicographically.
    pub fn for_each_codeword(
        &self,
        budget: &Budget,
        mut visit: impl FnMut(&[Elem]),
    ) -> Result<()> {
        budget.check_pow(self.field.q() as u64, self.k as u32)?;
        self.scan_coset_impl(&vec![0; self.n], &mut visit);
        Ok(())
    }

    /// All codewords as owned vectors (small instances only).
    pub fn codewords(&self, budget: &Budget) -> Result<Vec<Vec<Elem>>> {
        let mut out = Vec::new();
        self.for_each_codeword(budget, |cw| out.push(cw.to_vec()))?;
        Ok(out)
    }

    /// Flat codeword list with stride n, in enumeration order.
    pub(crate) fn codeword_table(&self, budget: &Budget) -> Result<Vec<Elem>> {
        let count = budget.check_pow(self.field.q() as u64, self.k as u32)?;
        let mut out = Vec::with_capacity(count as usize * self.n);
        self.scan_coset_impl(&vec![0; self.n], &mut |cw: &[Elem]| out.extend_from_slice(cw));
        Ok(out)
    }

    /// Walks `rep + c` over all codewords `c`, incrementally.
    fn scan_coset_impl(&self, rep: &[Elem], visit: &mut impl FnMut(&[Elem])) {
        let f = &self.field;
        let q = f.q();
        let mut v = rep.to_vec();
        let mut odo = Odometer::new(q, self.k);
        visit(&v);
        loop {
            let more = odo.step(|row, old, new| {
                let delta = f.sub(new, old);
                let grow = self.g.row(row);
                for (vi, &gi) in v.iter_mut().zip(grow) {
                    *vi = f.add(*vi, f.mul(delta, gi));
                }
            });
            if !more {
                break;
            }
            visit(&v);
        }
    }

    /// Syndrome of a vector under [`LinearCode::parity`], as digits.
    pub fn syndrome(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let h = self.parity();
        (0..h.rows())
            .map(|r| {
                let mut acc = 0;
                for (j, &x) in v.iter().enumerate() {
                    acc = f.add(acc, f.mul(h.get(r, j), x));
                }
                acc
            })
            .collect()
    }

    /// For every syndrome, the minimum of `weight` over the corresponding
    /// coset. The maximum over syndromes is the covering radius in the
    /// metric induced by `weight`.
    ///
    /// Cosets are streamed one representative at a time; memory stays
    /// `O(q^(n-k))` for the result. Syndromes are encoded by [`encode_vec`].
    pub fn coset_scan<W>(&self, budget: &Budget, weight: W) -> Result<CosetScan>
    where
        W: Fn(&[Elem]) -> u32 + Sync,
    {
        budget.check_pow(self.field.q() as u64, self.n as u32)?;
        let q = self.field.q();
        let nk = self.n - self.k;
        let reps = CosetReps::new(self);
        let syndrome_count = (q as u64).pow(nk as u32);

        let min_weight: Vec<u32> = (0..syndrome_count)
            .into_par_iter()
            .map(|s| {
                let rep = reps.representative(s);
                let mut best = u32::MAX;
                self.scan_coset_impl(&rep, &mut |v: &[Elem]| {
                    let w = weight(v);
                    if w < best {
                        best = w;
                    }
                });
                best
            })
            .collect();

        Ok(CosetScan { q, len: nk, min_weight })
    }

    /// Some vector in the coset with the given syndrome index, without
    /// enumerating the coset.
    pub fn coset_representative(&self, syndrome: u64) -> Vec<Elem> {
        CosetReps::new(self).representative(syndrome)
    }

    /// The lexicographically least vector of minimum `weight` in the coset
    /// with the given syndrome index.
    pub fn coset_leader<W>(&self, syndrome: u64, weight: W) -> (Vec<Elem>, u32)
    where
        W: Fn(&[Elem]) -> u32,
    {
        let reps = CosetReps::new(self);
        let rep = reps.representative(syndrome);
        let q = self.field.q();
        let mut best: Option<(u32, u64, Vec<Elem>)> = None;
        self.scan_coset_impl(&rep, &mut |v: &[Elem]| {
            let w = weight(v);
            let key = encode_vec(q, v);
            let better = match &best {
                None => true,
                Some((bw, bk, _)) => w < *bw || (w == *bw && key < *bk),
            };
            if better {
                best = Some((w, key, v.to_vec()));
            }
        });
        let (w, _, v) = best.expect("coset is nonempty");
        (v, w)
    }

    /// Cyclic start indices `i` such that generator columns
    /// `i, i+1, ..., i+k-1` (mod n when `cyclic`) are linearly independent.
    pub fn window_independent(&self, cyclic: bool) -> Vec<usize> {
        let starts: Vec<usize> = if cyclic {
            (0..self.n).collect()
        } else {
            (0..=self.n - self.k).collect()
        };
        starts
            .into_iter()
            .filter(|&s| {
                let mut sub = Matrix::zero(self.field.clone(), self.k, self.k);
                for j in 0..self.k {
                    let col = (s + j) % self.n;
                    for r in 0..self.k {
                        sub.set(r, j, self.g.get(r, col));
                    }
                }
                sub.rank() == self.k
            })
            .collect()
    }
}

/// Per-syndrome coset representatives, from an inverted pivot submatrix of
/// the parity-check matrix.
struct CosetReps {
    field: Field,
    n: usize,
    pivots: Vec<usize>,
    inv: Matrix,
}

impl CosetReps {
    fn new(code: &LinearCode) -> CosetReps {
        let h = code.parity();
        let rr = h.rref();
        debug_assert_eq!(rr.rank, h.rows());
        let nk = h.rows();
        let mut sub = Matrix::zero(code.field.clone(), nk, nk);
        for (j, &pc) in rr.pivots.iter().enumerate() {
            for r in 0..nk {
                sub.set(r, j, h.get(r, pc));
            }
        }
        let inv = sub.inverse().expect("pivot submatrix is invertible");
        CosetReps { field: code.field.clone(), n: code.n, pivots: rr.pivots, inv }
    }

    /// A vector whose syndrome is the given index, supported on the pivot
    /// columns of the parity-check matrix.
    fn representative(&self, syndrome: u64) -> Vec<Elem> {
        let f = &self.field;
        let nk = self.pivots.len();
        let s = decode_vec(f.q(), syndrome, nk);
        let mut rep = vec![0; self.n];
        for (j, &pc) in self.pivots.iter().enumerate() {
            let mut acc = 0;
            for (t, &st) in s.iter().enumerate() {
                acc = f.add(acc, f.mul(self.inv.get(j, t), st));
            }
            rep[pc] = acc;
        }
        rep
    }
}

/// Result of [`LinearCode::coset_scan`]: per-syndrome minimum weights.
#[derive(Clone, Debug)]
pub struct CosetScan {
    q: u32,
    len: usize,
    /// Minimum weight per coset, indexed by syndrome encoding.
    pub min_weight: Vec<u32>,
}

impl CosetScan {
    /// Maximum over syndromes of the per-coset minimum.
    pub fn covering_radius(&self) -> u32 {
        self.min_weight.iter().copied().max().unwrap_or(0)
    }

    /// Smallest syndrome index attaining the covering radius.
    pub fn deepest_syndrome(&self) -> u64 {
        let max = self.covering_radius();
        self.min_weight.iter().position(|&w| w == max).unwrap_or(0) as u64
    }

    pub fn syndrome_digits(&self, index: u64) -> Vec<Elem> {
        decode_vec(self.q, index, self.len)
    }
}

/// Basis of the nullspace of a row-reduced matrix, one row per free column.
///
/// For the reduced matrix `[I | A]` (up to column placement) this produces
/// the standard `[-A^T | I]` companion, giving generator from parity and
/// vice versa.
fn nullspace_basis(rr: &Rref, n: usize) -> Matrix {
    let field = rr.matrix.field().clone();
    let f = field.clone();
    let free: Vec<usize> = (0..n).filter(|c| !rr.pivots.contains(c)).collect();
    let mut out = Matrix::zero(field, free.len(), n);
    for (j, &fc) in free.iter().enumerate() {
        out.set(j, fc, 1);
        for (i, &pc) in rr.pivots.iter().enumerate() {
            out.set(j, pc, f.neg(rr.matrix.get(i, fc)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let m = Matrix::identity(f2(), 3);
        let rr = m.rref();
        assert_eq!(rr.matrix, m);
        assert_eq!(rr.rank, 3);
        assert_eq!(rr.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Matrix::new(f2(), 3, 6, vec![1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1]).unwrap();
        let once = m.rref();
        let twice = once.matrix.rref();
        assert_eq!(once.matrix, twice.matrix);
        assert_eq!(once.pivots, twice.pivots);
    }

    #[test]
    fn example_matrices_have_expected_ranks() {
        assert_eq!(families::example4().generator().rank(), 4);
        assert_eq!(families::example3().parity().rank(), 3);
    }

    #[test]
    fn matrix_entries_validated() {
        assert!(matches!(
            Matrix::new(f2(), 1, 2, vec![0, 5]),
            Err(Error::ElementOutOfRange { value: 5, .. })
        ));
    }

    #[test]
    fn rank_deficient_generator_rejected() {
        let g = Matrix::new(f2(), 2, 4, vec![1, 1, 0, 0, 1, 1, 0, 0]).unwrap();
        assert!(matches!(LinearCode::from_generator(g), Err(Error::RankDeficient { rank: 1, expected: 2 })));
    }

    #[test]
    fn dual_of_self_dual_codes() {
        // (I_n | I_n) is self-dual: same codeword set as its dual
        let c = families::example1(3).unwrap();
        let d = c.dual().unwrap();
        assert_eq!(d.k(), c.k());
        assert_eq!(c.standard_form().matrix, d.standard_form().matrix);

        // example 4: G * G^T = 0 and dimension 4 = 8 - 4
        let c4 = families::example4();
        let gt = c4.generator().mul(&c4.generator().transpose()).unwrap();
        assert!(gt.is_zero());
        let d4 = c4.dual().unwrap();
        assert_eq!(c4.standard_form().matrix, d4.standard_form().matrix);
    }

    #[test]
    fn dual_of_repetition_is_even_weight_code() {
        let g = Matrix::new(f2(), 1, 4, vec![1, 1, 1, 1]).unwrap();
        let c = LinearCode::from_generator(g).unwrap();
        let d = c.dual().unwrap();
        assert_eq!((d.n(), d.k()), (4, 3));
        let mut all_even = true;
        d.for_each_codeword(&budget(), |cw| {
            all_even &= cw.iter().filter(|&&x| x != 0).count() % 2 == 0;
        })
        .unwrap();
        assert!(all_even);
    }

    #[test]
    fn dual_dual_round_trip() {
        for c in [families::example3(), families::example4()] {
            let dd = c.dual().unwrap().dual().unwrap();
            assert_eq!(c.standard_form().matrix, dd.standard_form().matrix);
        }
    }

    #[test]
    fn enumerate_repetition_code() {
        let g = Matrix::new(f2(), 1, 2, vec![1, 1]).unwrap();
        let c = LinearCode::from_generator(g).unwrap();
        assert_eq!(c.codewords(&budget()).unwrap(), vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn enumerate_example3_contains_000111() {
        let c = families::example3();
        let words = c.codewords(&budget()).unwrap();
        assert_eq!(words.len(), 8);
        assert!(words.contains(&vec![0, 0, 0, 1, 1, 1]));
    }

    #[test]
    fn enumerate_rs_42_over_f5() {
        let f5 = Field::prime(5).unwrap();
        let c = families::rs_code(&f5, 4, 2, None).unwrap();
        let words = c.codewords(&budget()).unwrap();
        assert_eq!(words.len(), 25);
        let mut sorted: Vec<u64> = words.iter().map(|w| encode_vec(5, w)).collect();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 25);
    }

    #[test]
    fn enumeration_budget_enforced() {
        let c = families::example1(3).unwrap();
        let tiny = Budget::new(2);
        assert!(matches!(c.codewords(&tiny), Err(Error::BudgetExceeded { .. })));
    }

    fn hamming_weight(v: &[Elem]) -> u32 {
        v.iter().filter(|&&x| x != 0).count() as u32
    }

    #[test]
    fn coset_scan_whole_space() {
        let c = LinearCode::from_generator(Matrix::identity(f2(), 3)).unwrap();
        let scan = c.coset_scan(&budget(), hamming_weight).unwrap();
        assert_eq!(scan.min_weight, vec![0]);
        assert_eq!(scan.covering_radius(), 0);
    }

    #[test]
    fn coset_scan_hamming_covering_radii() {
        let scan3 = families::example3().coset_scan(&budget(), hamming_weight).unwrap();
        assert_eq!(scan3.covering_radius(), 2);
        let scan4 = families::example4().coset_scan(&budget(), hamming_weight).unwrap();
        assert_eq!(scan4.covering_radius(), 2);
    }

    #[test]
    fn coset_scan_agrees_with_direct_definition() {
        // brute-force the definition: max over x of min over c of d_H(x, c)
        for c in [families::example3(), families::example1(2).unwrap()] {
            let q = c.field().q();
            let scan = c.coset_scan(&budget(), hamming_weight).unwrap();
            let words = c.codewords(&budget()).unwrap();
            let f = c.field().clone();
            let mut direct = 0;
            for idx in 0..(q as u64).pow(c.n() as u32) {
                let x = decode_vec(q, idx, c.n());
                let best = words
                    .iter()
                    .map(|w| {
                        x.iter()
                            .zip(w)
                            .filter(|&(&a, &b)| f.sub(a, b) != 0)
                            .count() as u32
                    })
                    .min()
                    .unwrap();
                direct = direct.max(best);
            }
            assert_eq!(scan.covering_radius(), direct);
        }
    }

    #[test]
    fn syndrome_partition_counts() {
        // cosets are disjoint and cover the space: each syndrome bucket has q^k vectors
        let c = families::example3();
        let q = c.field().q();
        let mut counts = vec![0u64; 8];
        for idx in 0..(q as u64).pow(c.n() as u32) {
            let x = decode_vec(q, idx, c.n());
            let s = encode_vec(q, &c.syndrome(&x));
            counts[s as usize] += 1;
        }
        assert!(counts.iter().all(|&n| n == 8));
    }

    #[test]
    fn coset_leader_is_lex_least_minimum() {
        let c = families::example3();
        let scan = c.coset_scan(&budget(), hamming_weight).unwrap();
        let deep = scan.deepest_syndrome();
        let (leader, w) = c.coset_leader(deep, hamming_weight);
        assert_eq!(w, scan.covering_radius());
        assert_eq!(encode_vec(2, &c.syndrome(&leader)), deep);
    }

    #[test]
    fn window_independent_examples() {
        let f7 = Field::prime(7).unwrap();
        let rs = families::rs_code(&f7, 6, 3, None).unwrap();
        assert_eq!(rs.window_independent(true), vec![0, 1, 2, 3, 4, 5]);

        let ex2 = families::example2(2).unwrap();
        assert!(ex2.window_independent(true).is_empty());

        let ex1 = families::example1(3).unwrap();
        assert!(ex1.window_independent(true).contains(&0));
    }

    #[test]
    fn window_independent_non_cyclic_flag() {
        let ex3 = families::example3();
        let cyclic = ex3.window_independent(true);
        let plain = ex3.window_independent(false);
        assert!(plain.iter().all(|s| s + ex3.k() <= ex3.n()));
        assert!(plain.iter().all(|s| cyclic.contains(s)));
    }

    #[test]
    fn contains_and_subcode_checks() {
        let c = families::example3();
        assert!(c.contains(&[0, 0, 0, 1, 1, 1]));
        assert!(!c.contains(&[1, 0, 0, 0, 0, 0]));
        let sub = LinearCode::from_generator(
            Matrix::new(f2(), 2, 6, [c.generator().row(0), c.generator().row(1)].concat()).unwrap(),
        )
        .unwrap();
        assert!(sub.is_proper_subcode_of(&c));
        assert!(!c.is_proper_subcode_of(&sub));
        assert!(!c.is_proper_subcode_of(&c.clone()));
    }

    #[test]
    fn encode_decode_round_trip() {
        for q in [2u32, 3, 5] {
            for idx in 0..(q as u64).pow(3) {
                let v = decode_vec(q, idx, 3);
                assert_eq!(encode_vec(q, &v), idx);
            }
        }
    }
}
