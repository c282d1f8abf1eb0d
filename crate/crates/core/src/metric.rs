//! The b-symbol metric: read vectors, weights, distances, balls and their
//! volumes, minimum distance and covering radius of linear codes.
//!
//! `b = 1` is admitted and is exactly the Hamming metric, so the same code
//! paths serve both; the classical range of interest is `2 <= b <= n-1`.

use crate::gf::{Elem, Field};
use crate::linalg::{decode_vec, LinearCode};
use crate::{Budget, Error, Result};
use num_bigint::BigUint;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

/// Validates `1 <= b <= n-1`.
pub fn check_b(b: usize, n: usize) -> Result<()> {
    if b >= 1 && b + 1 <= n {
        Ok(())
    } else {
        Err(Error::BOutOfRange { b, n })
    }
}

/// The b-symbol read of a vector: its n cyclic windows of b consecutive
/// symbols, window `i` being `(x_i, x_{i+1}, ..., x_{i+b-1})` mod n.
pub fn b_symbol_read(x: &[Elem], b: usize) -> Result<Vec<Vec<Elem>>> {
    let n = x.len();
    check_b(b, n)?;
    Ok((0..n)
        .map(|i| (0..b).map(|j| x[(i + j) % n]).collect())
        .collect())
}

/// Number of nonzero windows of the b-symbol read; `O(n)` via the maximal
/// cyclic zero runs (a run of `L >= b` zeros hides `L - b + 1` windows).
pub(crate) fn b_weight_raw(x: &[Elem], b: usize) -> u32 {
    let n = x.len();
    if b == 1 {
        return x.iter().filter(|&&v| v != 0).count() as u32;
    }
    let Some(start) = x.iter().position(|&v| v != 0) else {
        return 0;
    };
    let mut zero_windows = 0;
    let mut run = 0;
    for t in 1..=n {
        let mut idx = start + t;
        if idx >= n {
            idx -= n;
        }
        if x[idx] == 0 {
            run += 1;
        } else {
            if run >= b {
                zero_windows += run - b + 1;
            }
            run = 0;
        }
    }
    (n - zero_windows) as u32
}

/// The b-symbol weight `wt_b(x)`.
pub fn b_weight(x: &[Elem], b: usize) -> Result<u32> {
    check_b(b, x.len())?;
    Ok(b_weight_raw(x, b))
}

pub fn hamming_weight(x: &[Elem]) -> u32 {
    b_weight_raw(x, 1)
}

/// The b-symbol distance `d_b(x, y) = wt_b(x - y)`; the difference form is
/// equivalent to comparing the two read vectors because the read is linear.
pub fn b_distance(field: &Field, x: &[Elem], y: &[Elem], b: usize) -> Result<u32> {
    if x.len() != y.len() {
        return Err(Error::Dimension("vectors of different lengths".into()));
    }
    check_b(b, x.len())?;
    let diff: Vec<Elem> = x.iter().zip(y).map(|(&a, &c)| field.sub(a, c)).collect();
    Ok(b_weight_raw(&diff, b))
}

/// Minimum b-symbol distance of a linear code: the least `wt_b` over the
/// nonzero codewords (translation invariance). Equals `d_H` at `b = 1`.
pub fn min_b_distance(code: &LinearCode, b: usize, budget: &Budget) -> Result<u32> {
    check_b(b, code.n())?;
    let mut best = u32::MAX;
    let mut first = true;
    code.for_each_codeword(budget, |cw| {
        if first {
            first = false; // the zero codeword comes first in message order
            return;
        }
        let w = b_weight_raw(cw, b);
        if w < best {
            best = w;
        }
    })?;
    Ok(best)
}

/// How to compute a covering radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoveringMode {
    /// Per-coset minimum weights via syndrome streaming (the default).
    Coset,
    /// The definition, max over all vectors of the distance to the code;
    /// kept as an independent oracle.
    Direct,
}

/// Covering radius of a linear code in the b-symbol metric.
pub fn b_covering_radius(
    code: &LinearCode,
    b: usize,
    mode: CoveringMode,
    budget: &Budget,
) -> Result<u32> {
    check_b(b, code.n())?;
    match mode {
        CoveringMode::Coset => {
            let scan = code.coset_scan(budget, |v| b_weight_raw(v, b))?;
            Ok(scan.covering_radius())
        }
        CoveringMode::Direct => covering_radius_direct(code, b, budget),
    }
}

fn covering_radius_direct(code: &LinearCode, b: usize, budget: &Budget) -> Result<u32> {
    let q = code.field().q();
    let n = code.n();
    let total = budget.check_pow(q as u64, n as u32)?;
    let words = code.codeword_table(budget)?;
    let f = code.field().clone();
    let radius = (0..total)
        .into_par_iter()
        .map_init(
            || vec![0; n],
            |diff, idx| {
                let x = decode_vec(q, idx, n);
                let mut best = u32::MAX;
                for w in words.chunks_exact(n) {
                    for j in 0..n {
                        diff[j] = f.sub(x[j], w[j]);
                    }
                    let d = b_weight_raw(diff, b);
                    if d < best {
                        best = d;
                        if best == 0 {
                            break;
                        }
                    }
                }
                best
            },
        )
        .max()
        .unwrap_or(0);
    Ok(radius)
}

/// A coset witnessing the covering radius: its syndrome and the
/// lexicographically least vector of minimum b-weight in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeepCoset {
    pub radius: u32,
    pub syndrome: Vec<Elem>,
    pub leader: Vec<Elem>,
}

pub fn deep_coset(code: &LinearCode, b: usize, budget: &Budget) -> Result<DeepCoset> {
    check_b(b, code.n())?;
    let scan = code.coset_scan(budget, |v| b_weight_raw(v, b))?;
    let syndrome = scan.deepest_syndrome();
    let (leader, radius) = code.coset_leader(syndrome, |v| b_weight_raw(v, b));
    Ok(DeepCoset { radius, syndrome: scan.syndrome_digits(syndrome), leader })
}

/// `|B_b(0, r)|` by closed form where one is valid, otherwise by exhaustive
/// enumeration (budget-guarded).
///
/// Closed forms: the ball is trivial for `r <= b-1`; it is the Hamming ball
/// of radius one for `r = b`; for `b = 2, r = 3` and `n >= 4` it counts the
/// single coordinates plus adjacent pairs, `1 + n(q-1) + n(q-1)^2` (at
/// `n = 3` that expression undercounts: full-support vectors also reach
/// pair weight 3, and the ball is the whole space). For `r >= n` the ball
/// is the whole space.
pub fn ball_volume(q: u64, n: u64, b: u64, r: u64, budget: &Budget) -> Result<BigUint> {
    if q < 2 {
        return Err(Error::InvalidParameter("q must be at least 2".into()));
    }
    if b < 1 || b + 1 > n {
        return Err(Error::BOutOfRange { b: b as usize, n: n as usize });
    }
    if r < b {
        // r <= b - 1: only the center
        return Ok(BigUint::from(1u32));
    }
    let qm1 = BigUint::from(q - 1);
    if r >= n {
        let exp = u32::try_from(n)
            .map_err(|_| Error::InvalidParameter("length too large".into()))?;
        return Ok(BigUint::from(q).pow(exp));
    }
    if r == b {
        return Ok(BigUint::from(1u32) + BigUint::from(n) * &qm1);
    }
    if b == 2 && r == 3 && n >= 4 {
        let n = BigUint::from(n);
        return Ok(BigUint::from(1u32) + &n * &qm1 + n * &qm1 * &qm1);
    }
    let q32 = u32::try_from(q).map_err(|_| Error::FieldTooLarge { q: q as u128 })?;
    ball_volume_enumerated(q32, n as usize, b as usize, r as u32, budget)
}

/// `|B_b(0, r)|` by plain enumeration of all of `GF(q)^n`; the independent
/// route the closed forms are checked against.
pub fn ball_volume_enumerated(
    q: u32,
    n: usize,
    b: usize,
    r: u32,
    budget: &Budget,
) -> Result<BigUint> {
    check_b(b, n)?;
    let total = budget.check_pow(q as u64, n as u32)?;
    let count: u64 = (0..total)
        .into_par_iter()
        .filter(|&idx| {
            let x = decode_vec(q, idx, n);
            b_weight_raw(&x, b) <= r
        })
        .count() as u64;
    Ok(BigUint::from(count))
}

/// Nonzero-codeword weight profile of a code at a given `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightProfile {
    pub b: usize,
    /// Weights attained by nonzero codewords.
    pub weights: BTreeSet<u32>,
    /// Number of nonzero codewords per weight, exact.
    pub distribution: BTreeMap<u32, BigUint>,
}

pub fn b_weight_profile(code: &LinearCode, b: usize, budget: &Budget) -> Result<WeightProfile> {
    check_b(b, code.n())?;
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    let mut first = true;
    code.for_each_codeword(budget, |cw| {
        if first {
            first = false;
            return;
        }
        *counts.entry(b_weight_raw(cw, b)).or_insert(0) += 1;
    })?;
    Ok(WeightProfile {
        b,
        weights: counts.keys().copied().collect(),
        distribution: counts.into_iter().map(|(w, c)| (w, BigUint::from(c))).collect(),
    })
}

/// The computed invariants of a `(code, b)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BProfile {
    pub b: usize,
    pub d_h: u32,
    pub d_b: u32,
    pub r_h: u32,
    pub r_b: u32,
    pub nonzero_b_weights: BTreeSet<u32>,
}

/// Computes minimum distances, covering radii and the nonzero b-weight set
/// in one pass of scans.
pub fn b_profile(code: &LinearCode, b: usize, budget: &Budget) -> Result<BProfile> {
    check_b(b, code.n())?;
    let d_h = min_b_distance(code, 1, budget)?;
    let d_b = min_b_distance(code, b, budget)?;
    let r_h = b_covering_radius(code, 1, CoveringMode::Coset, budget)?;
    let r_b = b_covering_radius(code, b, CoveringMode::Coset, budget)?;
    let profile = b_weight_profile(code, b, budget)?;
    let n = code.n() as u32;
    let b32 = b as u32;
    debug_assert!(d_h + b32 - 1 <= d_b && d_b <= (b32 * d_h).min(n));
    debug_assert!(r_h + b32 - 1 <= r_b || r_h == 0);
    debug_assert!(r_b <= (b32 * r_h).min(n) || r_h == 0);
    Ok(BProfile { b, d_h, d_b, r_h, r_b, nonzero_b_weights: profile.weights })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::linalg::Matrix;

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn read_vector_matches_definition() {
        let zeros = vec![0; 6];
        assert_eq!(b_symbol_read(&zeros, 2).unwrap(), vec![vec![0, 0]; 6]);

        // single leading one wraps into the last window
        assert_eq!(
            b_symbol_read(&[1, 0, 0], 2).unwrap(),
            vec![vec![1, 0], vec![0, 0], vec![0, 1]]
        );

        let x = [0, 0, 0, 1, 1, 1];
        let windows = b_symbol_read(&x, 3).unwrap();
        assert_eq!(windows.len(), 6);
        let nonzero = windows.iter().filter(|w| w.iter().any(|&v| v != 0)).count();
        assert_eq!(nonzero, 5);
    }

    #[test]
    fn read_vector_rejects_bad_b() {
        assert!(matches!(b_symbol_read(&[0, 1], 2), Err(Error::BOutOfRange { b: 2, n: 2 })));
        assert!(matches!(b_symbol_read(&[0, 1], 0), Err(Error::BOutOfRange { .. })));
    }

    #[test]
    fn pair_weights_of_known_vectors() {
        assert_eq!(b_weight(&[0, 0, 0, 0, 0, 0], 2).unwrap(), 0);
        assert_eq!(b_weight(&[0, 0, 0, 1, 1, 1], 2).unwrap(), 4);
        assert_eq!(b_weight(&[1, 0, 0, 0, 0, 0], 2).unwrap(), 2);
        // against the window definition
        for x in [[1u16, 0, 1, 0, 1, 0], [1, 1, 1, 1, 1, 1], [0, 1, 0, 0, 1, 0]] {
            for b in 1..=5 {
                let windows = b_symbol_read(&x, b).unwrap();
                let by_def = windows.iter().filter(|w| w.iter().any(|&v| v != 0)).count() as u32;
                assert_eq!(b_weight(&x, b).unwrap(), by_def, "x={x:?} b={b}");
            }
        }
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(min_b_distance(&families::example3(), 2, &budget()).unwrap(), 4);

        let f5 = Field::prime(5).unwrap();
        let rs = families::rs_code(&f5, 4, 2, None).unwrap();
        assert_eq!(min_b_distance(&rs, 2, &budget()).unwrap(), 4); // Singleton-tight: n-k+b

        let ham = families::hamming_code(&Field::prime(2).unwrap(), 3, &budget()).unwrap();
        let d2 = min_b_distance(&ham, 2, &budget()).unwrap();
        assert!(d2 <= 5);
        assert_eq!(d2, 5);
    }

    #[test]
    fn covering_radius_examples() {
        let b = budget();
        let ex1 = families::example1(3).unwrap();
        assert_eq!(b_covering_radius(&ex1, 2, CoveringMode::Coset, &b).unwrap(), 4);
        assert_eq!(b_covering_radius(&families::example3(), 2, CoveringMode::Coset, &b).unwrap(), 4);
        assert_eq!(b_covering_radius(&families::example4(), 2, CoveringMode::Coset, &b).unwrap(), 4);
        let f7 = Field::prime(7).unwrap();
        let rs = families::rs_code(&f7, 6, 3, None).unwrap();
        assert_eq!(b_covering_radius(&rs, 2, CoveringMode::Coset, &b).unwrap(), 4);
    }

    #[test]
    fn coset_and_direct_modes_agree_small() {
        let b = budget();
        for code in [families::example3(), families::example1(2).unwrap()] {
            for bb in 1..=3usize {
                let coset = b_covering_radius(&code, bb, CoveringMode::Coset, &b).unwrap();
                let direct = b_covering_radius(&code, bb, CoveringMode::Direct, &b).unwrap();
                assert_eq!(coset, direct, "code={code:?} b={bb}");
            }
        }
    }

    #[test]
    fn ball_volume_closed_forms() {
        let b = budget();
        assert_eq!(ball_volume(2, 7, 2, 2, &b).unwrap(), BigUint::from(8u32));
        assert_eq!(ball_volume(3, 4, 2, 3, &b).unwrap(), BigUint::from(25u32));
        assert_eq!(ball_volume(2, 5, 3, 2, &b).unwrap(), BigUint::from(1u32));
        // whole space once r reaches n
        assert_eq!(ball_volume(2, 5, 2, 5, &b).unwrap(), BigUint::from(32u32));
        // closed forms also work far beyond enumeration scale
        assert_eq!(
            ball_volume(1 << 16, 1 << 20, 3, 3, &b).unwrap(),
            BigUint::from(1u32) + BigUint::from(1u64 << 20) * BigUint::from((1u64 << 16) - 1)
        );
    }

    #[test]
    fn ball_volume_brute_confirms_closed_forms() {
        let b = budget();
        for q in [2u32, 3] {
            for n in 3..=6usize {
                for bb in 1..n {
                    for r in 0..=n as u32 {
                        let brute = ball_volume_enumerated(q, n, bb, r, &b).unwrap();
                        let fast = ball_volume(q as u64, n as u64, bb as u64, r as u64, &b).unwrap();
                        assert_eq!(brute, fast, "q={q} n={n} b={bb} r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn pair_ball_at_radius_three_fills_short_spaces() {
        // at n = 3 every vector has pair weight <= 3
        let v = ball_volume(2, 3, 2, 3, &budget()).unwrap();
        assert_eq!(v, BigUint::from(8u32));
    }

    #[test]
    fn weight_profile_examples() {
        let b = budget();
        let ex4 = families::example4();
        let pair = b_weight_profile(&ex4, 2, &b).unwrap();
        assert_eq!(pair.weights, [5, 6, 8].into_iter().collect());
        let ham = b_weight_profile(&ex4, 1, &b).unwrap();
        assert_eq!(ham.weights, [4, 8].into_iter().collect());
        // 14 weight-4 words and the all-ones word
        assert_eq!(ham.distribution[&4], BigUint::from(14u32));
        assert_eq!(ham.distribution[&8], BigUint::from(1u32));

        let f2 = Field::prime(2).unwrap();
        let rep = crate::LinearCode::from_generator(Matrix::new(f2, 1, 2, vec![1, 1]).unwrap()).unwrap();
        assert_eq!(b_weight_profile(&rep, 1, &b).unwrap().weights, [2].into_iter().collect());
    }

    #[test]
    fn profile_sandwich_holds() {
        let b = budget();
        let p = b_profile(&families::example3(), 2, &b).unwrap();
        assert_eq!((p.d_h, p.d_b, p.r_h, p.r_b), (3, 4, 2, 4));
        assert!(p.d_h + 1 <= p.d_b && p.d_b <= 2 * p.d_h);
        assert!(p.r_h + 1 <= p.r_b && p.r_b <= 2 * p.r_h);
    }

    #[test]
    fn weight_monotone_in_b() {
        for idx in 0..3u64.pow(5) {
            let x = decode_vec(3, idx, 5);
            for b in 1..4usize {
                assert!(b_weight_raw(&x, b) <= b_weight_raw(&x, b + 1));
            }
        }
    }

    #[test]
    fn distance_is_translation_invariant_spot() {
        let f3 = Field::prime(3).unwrap();
        let x = [1u16, 2, 0, 1];
        let y = [0u16, 1, 1, 2];
        let t = [2u16, 2, 1, 0];
        for b in 1..=3usize {
            let xt: Vec<Elem> = x.iter().zip(&t).map(|(&a, &c)| f3.add(a, c)).collect();
            let yt: Vec<Elem> = y.iter().zip(&t).map(|(&a, &c)| f3.add(a, c)).collect();
            assert_eq!(
                b_distance(&f3, &x, &y, b).unwrap(),
                b_distance(&f3, &xt, &yt, b).unwrap()
            );
        }
    }
}
