//! Exact list-decodability measurement in the b-symbol metric, and the
//! covering-code calculators bounding list-decodable code sizes: the plain
//! Singleton-style bound, the block-Hamming covering improvement, its
//! punctured pair-metric variant, and the MDS length verdict it implies.
//!
//! Bound values are exact big integers. Exponents are kept as exact
//! rationals and floored only for the final integer value.

use crate::linalg::{decode_vec, LinearCode};
use crate::metric::{b_weight_raw, check_b};
use crate::{Budget, Error, Result};
use num_bigint::BigUint;
use num_rational::Ratio;
use rayon::prelude::*;

/// Exact maximum number of codewords in any b-symbol ball of a given radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListProfile {
    pub b: usize,
    pub radius: u32,
    /// `max_x |C ∩ B_b(x, radius)|`.
    pub l_max: u64,
    /// Lexicographically least center attaining the maximum.
    pub witness: Vec<crate::Elem>,
}

/// Scans every center in `GF(q)^n` against every codeword. Budget is the
/// full product `q^n * q^k`.
pub fn list_size_at_radius(
    code: &LinearCode,
    b: usize,
    d: u32,
    budget: &Budget,
) -> Result<ListProfile> {
    let n = code.n();
    let k = code.k();
    check_b(b, n)?;
    let q = code.field().q();
    let pairs = (q as u128)
        .checked_pow((n + k) as u32)
        .ok_or(Error::BudgetExceeded { count: u128::MAX, cap: budget.cap_log2() })?;
    budget.check_count(pairs)?;

    let words = code.codeword_table(budget)?;
    let f = code.field().clone();
    let centers = (q as u64).pow(n as u32);

    let (l_max, best_idx) = (0..centers)
        .into_par_iter()
        .map_init(
            || vec![0; n],
            |diff, idx| {
                let x = decode_vec(q, idx, n);
                let mut count = 0u64;
                for w in words.chunks_exact(n) {
                    for j in 0..n {
                        diff[j] = f.sub(x[j], w[j]);
                    }
                    if b_weight_raw(diff, b) <= d {
                        count += 1;
                    }
                }
                (count, idx)
            },
        )
        .reduce(
            || (0, u64::MAX),
            |a, b| {
                // larger count wins; ties break to the smaller center index,
                // so the reduction is deterministic under any partitioning
                if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                    b
                } else {
                    a
                }
            },
        );

    Ok(ListProfile { b, radius: d, l_max, witness: decode_vec(q, best_idx, n) })
}

/// `|C| <= L * |C1|` for any covering code `C1` of radius at most the list
/// radius: balls around its codewords cover the space.
pub fn covering_list_bound(l: u64, covering_size: &BigUint) -> BigUint {
    BigUint::from(l) * covering_size
}

/// An exact bound value `L * q^exponent` with a rational exponent, floored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValue {
    pub exponent: Ratio<i64>,
    pub value: BigUint,
}

/// `floor(L * q^(p/r))`, exact: the r-th root of `L^r * q^p`.
fn floor_l_q_pow(q: u64, exponent: Ratio<i64>, l: u64) -> Option<BigUint> {
    let p = *exponent.numer();
    let r = *exponent.denom(); // > 0 after reduction
    if p < 0 {
        return None;
    }
    let p = u32::try_from(p).ok()?;
    let r = u32::try_from(r).ok()?;
    let inside = BigUint::from(l).pow(r) * BigUint::from(q).pow(p);
    Some(inside.nth_root(r))
}

/// Size bound for a `(d, L)` list-decodable b-symbol code:
/// `|C| <= L * q^(n-d+b-1)`, from a covering code of redundancy `d - b + 1`.
pub fn list_singleton_bound(q: u64, n: u64, b: u64, d: u64, l: u64) -> Result<BoundValue> {
    if b < 1 || b + 1 > n {
        return Err(Error::BOutOfRange { b: b as usize, n: n as usize });
    }
    let exponent = Ratio::from_integer(n as i64 - d as i64 + b as i64 - 1);
    let value = floor_l_q_pow(q, exponent, l)
        .ok_or_else(|| Error::InvalidParameter("negative exponent: bound is vacuous".into()))?;
    Ok(BoundValue { exponent, value })
}

/// Parameters of the block-Hamming covering improvement: for
/// `n = t(q^m-1)/(q-1)` and radius `d = b*t` with `b <= (q^m-1)/(q-1)`,
/// a `(d, L)` list-decodable b-symbol code has `|C| <= L * q^(n - m*d/b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCoveringBound {
    pub n: u64,
    pub d: u64,
    pub bound: BoundValue,
}

pub fn block_covering_bound(q: u64, m: u32, t: u64, b: u64, l: u64) -> Result<BlockCoveringBound> {
    if q < 2 || m < 2 || t < 1 {
        return Err(Error::InvalidParameter("need q >= 2, m >= 2, t >= 1".into()));
    }
    let qm = (q as u128)
        .checked_pow(m)
        .ok_or(Error::InvalidParameter("q^m overflows".into()))?;
    let block_len = ((qm - 1) / (q as u128 - 1)) as u64;
    if b < 1 || b > block_len {
        return Err(Error::InvalidParameter(format!(
            "b = {b} out of range: the block covering needs b <= {block_len}"
        )));
    }
    let n = t * block_len;
    let d = b * t;
    // n - m*d/b reduces to n - m*t here, but keep the rational form
    let exponent = Ratio::new(n as i64 * b as i64 - m as i64 * d as i64, b as i64);
    let value = floor_l_q_pow(q, exponent, l)
        .ok_or_else(|| Error::InvalidParameter("negative exponent: bound is vacuous".into()))?;
    Ok(BlockCoveringBound { n, d, bound: BoundValue { exponent, value } })
}

/// Pair-metric (`b = 2`) length-adjusted bound built on the `m = 5` block
/// covering: write `n = t(q^5-1)/(q-1) + v` and take the better of
/// puncturing the last `v` coordinates or zero-extending to the next
/// multiple; valid for minimum pair distance `D <= 4t+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuncturedPairBound {
    pub t: u64,
    pub v: u64,
    pub puncture_exponent: Ratio<i64>,
    pub extend_exponent: Ratio<i64>,
    pub bound: BoundValue,
}

pub fn punctured_pair_bound(q: u64, n: u64, pair_distance: u64) -> Result<PuncturedPairBound> {
    if q < 2 || pair_distance < 1 {
        return Err(Error::InvalidParameter("need q >= 2 and D >= 1".into()));
    }
    let q5 = (q as u128).pow(5);
    let block_len = u64::try_from((q5 - 1) / (q as u128 - 1))
        .map_err(|_| Error::InvalidParameter("q too large".into()))?;
    let t = n / block_len;
    let v = n % block_len;
    if t < 1 {
        return Err(Error::InvalidParameter(format!(
            "length {n} is below one covering block ({block_len})"
        )));
    }
    if pair_distance > 4 * t + 1 {
        return Err(Error::InvalidParameter(format!(
            "pair distance {pair_distance} exceeds 4t+1 = {}",
            4 * t + 1
        )));
    }
    let n = i64::try_from(n).map_err(|_| Error::InvalidParameter("length too large".into()))?;
    let dm1 = (pair_distance - 1) as i64;
    let puncture = Ratio::new(4 * n - 5 * dm1 + v as i64, 4);
    let extend = Ratio::new(4 * n - 5 * dm1 + 4 * (block_len as i64 - v as i64), 4);
    let exponent = puncture.min(extend);
    let value = floor_l_q_pow(q, exponent, 1)
        .ok_or_else(|| Error::InvalidParameter("negative exponent: bound is vacuous".into()))?;
    Ok(PuncturedPairBound {
        t,
        v,
        puncture_exponent: puncture,
        extend_exponent: extend,
        bound: BoundValue { exponent, value },
    })
}

/// Verdict on whether a symbol-pair code of the given length and minimum
/// pair distance can meet the pair-metric Singleton bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdsLengthVerdict {
    /// Some precondition set was satisfied, so the verdict is informative.
    pub applicable: bool,
    /// The code cannot be MDS in the pair metric.
    pub not_mds: bool,
    pub note: &'static str,
}

/// Long codes cannot be MDS symbol-pair codes: the general rule requires
/// `D > 2q^5 + 1` and `n > (D-1)(q^5-1)/(2(q-1))`; over `GF(2)` the stated
/// rule is `D >= 63` and `n >= 31(D-1)/2`.
pub fn mds_pair_length_verdict(q: u64, n: u64, pair_distance: u64) -> MdsLengthVerdict {
    let d = pair_distance;
    let q5 = BigUint::from(q).pow(5);
    let general = d > 1
        && BigUint::from(d) > BigUint::from(2u32) * &q5 + 1u32
        && BigUint::from(n) * (BigUint::from(2u32) * (q - 1))
            > BigUint::from(d - 1) * (&q5 - 1u32);
    let binary = q == 2 && d >= 63 && 2 * n >= 31 * (d - 1);
    if general {
        MdsLengthVerdict { applicable: true, not_mds: true, note: "general length rule" }
    } else if binary {
        MdsLengthVerdict { applicable: true, not_mds: true, note: "binary length rule" }
    } else {
        MdsLengthVerdict { applicable: false, not_mds: false, note: "preconditions not met" }
    }
}

/// The rules [`singleton_list_bounds`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ListRule {
    Singleton,
    BlockCovering,
    PuncturedPair,
    MdsLength,
}

impl ListRule {
    pub fn name(&self) -> &'static str {
        match self {
            ListRule::Singleton => "singleton",
            ListRule::BlockCovering => "block_covering",
            ListRule::PuncturedPair => "punctured_pair",
            ListRule::MdsLength => "mds_length",
        }
    }
}

/// Inputs for the full bound set; optional structure parameters gate the
/// structured rules.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ListBoundParams {
    pub q: u64,
    pub n: u64,
    pub b: u64,
    pub d: u64,
    pub l: u64,
    pub m: Option<u32>,
    pub t: Option<u64>,
    pub v: Option<u64>,
    /// Minimum pair distance, for the pair-metric rules.
    pub pair_distance: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListBoundItem {
    pub rule: ListRule,
    pub applicable: bool,
    pub exponent: Option<Ratio<i64>>,
    pub value: Option<BigUint>,
    /// Only for the MDS length rule.
    pub verdict: Option<bool>,
    pub note: Option<String>,
}

/// Evaluates every size-bound rule on one parameter set; rules whose
/// preconditions fail are reported inapplicable, never computed anyway.
pub fn singleton_list_bounds(p: &ListBoundParams) -> Vec<ListBoundItem> {
    let mut items = Vec::new();

    items.push(match list_singleton_bound(p.q, p.n, p.b, p.d, p.l) {
        Ok(bv) => ListBoundItem {
            rule: ListRule::Singleton,
            applicable: true,
            exponent: Some(bv.exponent),
            value: Some(bv.value),
            verdict: None,
            note: None,
        },
        Err(e) => ListBoundItem {
            rule: ListRule::Singleton,
            applicable: false,
            exponent: None,
            value: None,
            verdict: None,
            note: Some(e.to_string()),
        },
    });

    items.push(match p.m {
        None => ListBoundItem {
            rule: ListRule::BlockCovering,
            applicable: false,
            exponent: None,
            value: None,
            verdict: None,
            note: Some("needs the block parameter m".into()),
        },
        Some(m) => {
            let t = p.t.unwrap_or_else(|| {
                // derive t from the length when not supplied
                let qm = (p.q as u128).saturating_pow(m);
                let block = ((qm - 1) / (p.q as u128 - 1)).max(1) as u64;
                p.n / block
            });
            match block_covering_bound(p.q, m, t.max(1), p.b, p.l) {
                Ok(bc) if bc.n == p.n && bc.d == p.d => ListBoundItem {
                    rule: ListRule::BlockCovering,
                    applicable: true,
                    exponent: Some(bc.bound.exponent),
                    value: Some(bc.bound.value),
                    verdict: None,
                    note: None,
                },
                Ok(bc) => ListBoundItem {
                    rule: ListRule::BlockCovering,
                    applicable: false,
                    exponent: None,
                    value: None,
                    verdict: None,
                    note: Some(format!(
                        "needs n = t(q^m-1)/(q-1) and d = b*t (got n = {}, d = {}, wanted {}, {})",
                        p.n, p.d, bc.n, bc.d
                    )),
                },
                Err(e) => ListBoundItem {
                    rule: ListRule::BlockCovering,
                    applicable: false,
                    exponent: None,
                    value: None,
                    verdict: None,
                    note: Some(e.to_string()),
                },
            }
        }
    });

    let pair_distance = match (p.b, p.pair_distance) {
        (2, Some(dd)) => Ok(dd),
        (_, None) => Err("needs the minimum pair distance".to_string()),
        _ => Err("pair-metric rule: needs b = 2".to_string()),
    };
    items.push(match pair_distance {
        Ok(dd) => match punctured_pair_bound(p.q, p.n, dd) {
            Ok(pp) => {
                let v_ok = p.v.map_or(true, |v| v == pp.v);
                ListBoundItem {
                    rule: ListRule::PuncturedPair,
                    applicable: v_ok,
                    exponent: v_ok.then_some(pp.bound.exponent),
                    value: v_ok.then_some(pp.bound.value),
                    verdict: None,
                    note: (!v_ok).then(|| format!("v should be {} for this length", pp.v)),
                }
            }
            Err(e) => ListBoundItem {
                rule: ListRule::PuncturedPair,
                applicable: false,
                exponent: None,
                value: None,
                verdict: None,
                note: Some(e.to_string()),
            },
        },
        Err(note) => ListBoundItem {
            rule: ListRule::PuncturedPair,
            applicable: false,
            exponent: None,
            value: None,
            verdict: None,
            note: Some(note),
        },
    });

    items.push(match p.pair_distance {
        Some(dd) => {
            let v = mds_pair_length_verdict(p.q, p.n, dd);
            ListBoundItem {
                rule: ListRule::MdsLength,
                applicable: v.applicable,
                exponent: None,
                value: None,
                verdict: Some(v.not_mds),
                note: Some(v.note.to_string()),
            }
        }
        None => ListBoundItem {
            rule: ListRule::MdsLength,
            applicable: false,
            exponent: None,
            value: None,
            verdict: None,
            note: Some("needs the minimum pair distance".into()),
        },
    });

    items
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::gf::Field;
    use crate::metric::{b_covering_radius, CoveringMode};

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn whole_space_radius_lists_everything() {
        let c = families::example3();
        let p = list_size_at_radius(&c, 2, 6, &budget()).unwrap();
        assert_eq!(p.l_max, 8);
        assert_eq!(p.witness, vec![0; 6]); // ties break lexicographically
    }

    #[test]
    fn hamming_pair_list_radius_two() {
        let f2 = Field::prime(2).unwrap();
        let ham = families::hamming_code(&f2, 3, &budget()).unwrap();
        // the pair ball of radius 2 is the Hamming ball of radius 1, and the
        // code is Hamming-perfect
        let p = list_size_at_radius(&ham, 2, 2, &budget()).unwrap();
        assert_eq!(p.l_max, 1);
    }

    #[test]
    fn below_b_radius_lists_single_codeword() {
        let c = families::example3();
        let p = list_size_at_radius(&c, 3, 1, &budget()).unwrap();
        assert_eq!(p.l_max, 1);
    }

    #[test]
    fn list_size_monotone_in_radius() {
        let c = families::example3();
        let mut last = 0;
        for d in 0..=6 {
            let p = list_size_at_radius(&c, 2, d, &budget()).unwrap();
            assert!(p.l_max >= last);
            last = p.l_max;
        }
        assert_eq!(list_size_at_radius(&c, 2, 0, &budget()).unwrap().l_max, 1);
    }

    #[test]
    fn singleton_bound_values() {
        let bv = list_singleton_bound(2, 14, 2, 4, 1).unwrap();
        assert_eq!(bv.exponent, Ratio::from_integer(11));
        assert_eq!(bv.value, BigUint::from(1u32) << 11);
    }

    #[test]
    fn block_covering_bound_values() {
        let bc = block_covering_bound(2, 3, 2, 2, 1).unwrap();
        assert_eq!((bc.n, bc.d), (14, 4));
        assert_eq!(bc.bound.exponent, Ratio::from_integer(8));
        assert_eq!(bc.bound.value, BigUint::from(256u32));
        // b beyond the block length is rejected
        assert!(block_covering_bound(2, 2, 1, 4, 1).is_err());
    }

    #[test]
    fn block_covering_beats_singleton_when_m_large() {
        for (q, m, t, b) in [(2u64, 3u32, 2u64, 2u64), (2, 4, 2, 2), (3, 3, 1, 2), (2, 5, 2, 4)] {
            let bc = block_covering_bound(q, m, t, b, 1).unwrap();
            let sg = list_singleton_bound(q, bc.n, b, bc.d, 1).unwrap();
            if m as u64 >= b {
                assert!(bc.bound.value <= sg.value, "q={q} m={m} t={t} b={b}");
            }
        }
    }

    #[test]
    fn punctured_pair_bound_aligned_matches_block_covering() {
        // with v = 0 and D = 4t+1 the punctured exponent equals n - 5t
        let q = 2u64;
        let block = 31u64;
        for t in 1..=3 {
            let n = t * block;
            let d = 4 * t + 1;
            let pp = punctured_pair_bound(q, n, d).unwrap();
            assert_eq!(pp.v, 0);
            assert_eq!(pp.puncture_exponent, Ratio::from_integer((n - 5 * t) as i64));
            let bc = block_covering_bound(q, 5, t, 2, 1).unwrap();
            assert_eq!(pp.puncture_exponent, bc.bound.exponent);
        }
    }

    #[test]
    fn punctured_pair_bound_fractional_exponent() {
        // v = 1 makes the puncture exponent fractional: check exact flooring
        let pp = punctured_pair_bound(2, 32, 5).unwrap();
        assert_eq!((pp.t, pp.v), (1, 1));
        assert_eq!(pp.puncture_exponent, Ratio::new(4 * 32 - 20 + 1, 4));
        // min(109/4, 28 + 30) -> 109/4; floor(2^(109/4)) = floor(2^27.25)
        assert_eq!(pp.bound.exponent, Ratio::new(109, 4));
        let expected = BigUint::from(2u32).pow(109).nth_root(4);
        assert_eq!(pp.bound.value, expected);
    }

    #[test]
    fn mds_length_verdicts() {
        // the stated binary rule covers D = 63, n = 961
        let v = mds_pair_length_verdict(2, 961, 63);
        assert!(v.applicable && v.not_mds);
        // the general rule needs D > 2q^5 + 1
        let v2 = mds_pair_length_verdict(2, 10_000, 100);
        assert!(v2.applicable && v2.not_mds);
        assert_eq!(v2.note, "general length rule");
        // short codes get no verdict
        let v3 = mds_pair_length_verdict(2, 10, 5);
        assert!(!v3.applicable && !v3.not_mds);
    }

    #[test]
    fn covering_to_list_consistency() {
        // any covering code C1 of radius <= d forces L_max * |C1| >= |C|
        let f2 = Field::prime(2).unwrap();
        let c1 = families::block_hamming(&f2, 3, 2, &budget()).unwrap();
        let r2 = b_covering_radius(&c1, 2, CoveringMode::Coset, &budget()).unwrap();
        assert_eq!(r2, 4);
        let c = families::example1(7).unwrap(); // [14, 7]
        let lp = list_size_at_radius(&c, 2, 4, &budget()).unwrap();
        let c1_size = BigUint::from(2u32).pow(c1.k() as u32);
        assert!(covering_list_bound(lp.l_max, &c1_size) >= BigUint::from(2u32).pow(7));
    }

    #[test]
    fn aggregate_bound_set() {
        let params = ListBoundParams {
            q: 2,
            n: 14,
            b: 2,
            d: 4,
            l: 1,
            m: Some(3),
            t: Some(2),
            v: None,
            pair_distance: Some(9),
        };
        let items = singleton_list_bounds(&params);
        assert_eq!(items.len(), 4);
        let singleton = &items[0];
        assert!(singleton.applicable);
        assert_eq!(singleton.value.as_ref().unwrap(), &(BigUint::from(1u32) << 11));
        let block = &items[1];
        assert!(block.applicable);
        assert_eq!(block.value.as_ref().unwrap(), &BigUint::from(256u32));
        let pair = &items[2];
        assert!(!pair.applicable); // n = 14 is below one m=5 block
        let mds = &items[3];
        assert!(!mds.applicable);
    }

    #[test]
    fn zero_never_returned_for_positive_bounds() {
        use num_traits::Zero;
        let bv = list_singleton_bound(3, 5, 2, 4, 2).unwrap();
        assert!(!bv.value.is_zero());
    }
}
