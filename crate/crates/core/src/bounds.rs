//! Evaluation of covering-radius and distance bounds in the b-symbol metric,
//! violation witnesses, and perfectness decisions.
//!
//! The Hamming-metric Delsarte and Norse bounds are theorems; their b-symbol
//! analogues can fail, so those two items are reported as evidence
//! (holds / violated) rather than asserted.

use crate::gf::Elem;
use crate::linalg::{LinearCode, Matrix};
use crate::metric::{
    b_covering_radius, b_weight_profile, check_b, deep_coset, min_b_distance, CoveringMode,
};
use crate::{Budget, Error, Result};
use std::ops::RangeInclusive;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundStatus {
    Holds,
    Violated,
    /// Precondition not met or enumeration budget exceeded; never silently
    /// skipped.
    Inapplicable,
}

/// The individual rules a [`BoundReport`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundRule {
    /// `R_H + b - 1 <= R_b <= min(b*R_H, n)`.
    Sandwich,
    /// `R_b <= min(n-k+b-1, n)` when some k cyclically consecutive generator
    /// columns are independent.
    Redundancy,
    /// `(b+1) * floor(n / (2(k+1))) <= R_b`, from partitioning the
    /// coordinates into runs of k+1.
    PartitionLower,
    /// `d_b <= n - k + b`; equality is the MDS condition for the metric.
    SingletonB,
    /// `R_b <=` number of nonzero b-weights of the dual (evidence only).
    DelsarteB,
    /// Binary, dual distance >= 2: `R_b <= floor(n/2)` (evidence only).
    NorseB,
}

impl BoundRule {
    pub fn name(&self) -> &'static str {
        match self {
            BoundRule::Sandwich => "sandwich",
            BoundRule::Redundancy => "redundancy",
            BoundRule::PartitionLower => "partition_lower",
            BoundRule::SingletonB => "singleton_b",
            BoundRule::DelsarteB => "delsarte_b",
            BoundRule::NorseB => "norse_b",
        }
    }

    pub fn relation(&self) -> &'static str {
        match self {
            BoundRule::Sandwich => "R_H + b - 1 <= R_b <= min(b*R_H, n)",
            BoundRule::Redundancy => "R_b <= min(n-k+b-1, n)",
            BoundRule::PartitionLower => "(b+1) * floor(n/(2(k+1))) <= R_b",
            BoundRule::SingletonB => "d_b <= n - k + b",
            BoundRule::DelsarteB => "R_b <= #nonzero b-weights of the dual",
            BoundRule::NorseB => "R_b <= floor(n/2) (q = 2, dual distance >= 2)",
        }
    }
}

/// Coset or codeword evidence attached to a bound item.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A coset whose minimum b-weight attains R_b.
    Coset { syndrome: Vec<Elem>, leader: Vec<Elem>, weight: u32 },
    /// A codeword attaining the quantity in question.
    Codeword { word: Vec<Elem>, weight: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundItem {
    pub rule: BoundRule,
    pub lower: Option<u64>,
    pub upper: Option<u64>,
    /// The quantity being bounded (R_b, or d_b for the Singleton item).
    pub computed: Option<u64>,
    pub status: BoundStatus,
    /// Equality attained on an applicable side.
    pub tight: bool,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl BoundItem {
    fn inapplicable(rule: BoundRule, note: impl Into<String>) -> BoundItem {
        BoundItem {
            rule,
            lower: None,
            upper: None,
            computed: None,
            status: BoundStatus::Inapplicable,
            tight: false,
            witness: None,
            note: Some(note.into()),
        }
    }
}

/// One evaluation record per bound rule, plus the invariants they were
/// judged against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub b: usize,
    pub d_h: Option<u32>,
    pub d_b: Option<u32>,
    pub r_h: Option<u32>,
    pub r_b: Option<u32>,
    pub items: Vec<BoundItem>,
    /// Singleton equality: `d_b = n - k + b`.
    pub mds_b_symbol: bool,
}

const BUDGET_NOTE: &str = "enumeration budget exceeded";

fn ok_or_budget<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Evaluates every bound rule against exactly computed invariants. Items a
/// budget-exceeded computation starves are reported inapplicable.
pub fn bound_report(code: &LinearCode, b: usize, budget: &Budget) -> Result<BoundReport> {
    let n = code.n();
    let k = code.k();
    check_b(b, n)?;
    if k == n {
        return Err(Error::InvalidParameter("bounds are not defined for the full space".into()));
    }

    let d_h = ok_or_budget(min_b_distance(code, 1, budget))?;
    let d_b = ok_or_budget(min_b_distance(code, b, budget))?;
    let r_h = ok_or_budget(b_covering_radius(code, 1, CoveringMode::Coset, budget))?;
    let r_b = ok_or_budget(b_covering_radius(code, b, CoveringMode::Coset, budget))?;
    let witness = match r_b {
        Some(_) => ok_or_budget(deep_coset(code, b, budget))?
            .map(|d| Witness::Coset { syndrome: d.syndrome, leader: d.leader, weight: d.radius }),
        None => None,
    };

    let dual = code.dual()?;
    let dual_b_weights = ok_or_budget(b_weight_profile(&dual, b, budget))?.map(|p| p.weights);
    let dual_distance = ok_or_budget(min_b_distance(&dual, 1, budget))?;
    let windows = code.window_independent(true);

    let mut items = Vec::new();

    // (a) two-sided sandwich between the Hamming covering radius and n
    items.push(match (r_h, r_b) {
        (Some(rh), Some(rb)) => {
            let lower = rh as u64 + b as u64 - 1;
            let upper = (b as u64 * rh as u64).min(n as u64);
            let holds = lower <= rb as u64 && (rb as u64) <= upper;
            let tight = holds && (rb as u64 == lower || rb as u64 == upper);
            BoundItem {
                rule: BoundRule::Sandwich,
                lower: Some(lower),
                upper: Some(upper),
                computed: Some(rb as u64),
                status: if holds { BoundStatus::Holds } else { BoundStatus::Violated },
                tight,
                witness: if tight { witness.clone() } else { None },
                note: None,
            }
        }
        _ => BoundItem::inapplicable(BoundRule::Sandwich, BUDGET_NOTE),
    });

    // (b) redundancy bound, applicable only with an independent cyclic window
    items.push(if windows.is_empty() {
        BoundItem::inapplicable(BoundRule::Redundancy, "no k cyclically consecutive independent generator columns")
    } else {
        match r_b {
            Some(rb) => {
                let upper = ((n - k + b - 1) as u64).min(n as u64);
                let holds = rb as u64 <= upper;
                let tight = holds && rb as u64 == upper;
                BoundItem {
                    rule: BoundRule::Redundancy,
                    lower: None,
                    upper: Some(upper),
                    computed: Some(rb as u64),
                    status: if holds { BoundStatus::Holds } else { BoundStatus::Violated },
                    tight,
                    witness: if tight { witness.clone() } else { None },
                    note: None,
                }
            }
            None => BoundItem::inapplicable(BoundRule::Redundancy, BUDGET_NOTE),
        }
    });

    // (c) partition lower bound
    items.push(match r_b {
        Some(rb) => {
            let lower = (b as u64 + 1) * (n as u64 / (2 * (k as u64 + 1)));
            let holds = lower <= rb as u64;
            BoundItem {
                rule: BoundRule::PartitionLower,
                lower: Some(lower),
                upper: None,
                computed: Some(rb as u64),
                status: if holds { BoundStatus::Holds } else { BoundStatus::Violated },
                tight: holds && lower == rb as u64,
                witness: None,
                note: None,
            }
        }
        None => BoundItem::inapplicable(BoundRule::PartitionLower, BUDGET_NOTE),
    });

    // (d) Singleton bound for the metric; equality = MDS
    let mut mds = false;
    items.push(match d_b {
        Some(db) => {
            let upper = (n - k + b) as u64;
            let holds = db as u64 <= upper;
            let tight = holds && db as u64 == upper;
            mds = tight;
            BoundItem {
                rule: BoundRule::SingletonB,
                lower: None,
                upper: Some(upper),
                computed: Some(db as u64),
                status: if holds { BoundStatus::Holds } else { BoundStatus::Violated },
                tight,
                witness: None,
                note: None,
            }
        }
        None => BoundItem::inapplicable(BoundRule::SingletonB, BUDGET_NOTE),
    });

    // an MDS b-symbol code always has an independent window, so the
    // redundancy item must be applicable whenever the MDS flag is set
    debug_assert!(!mds || !windows.is_empty());

    // (e) Delsarte analogue, evidence only
    items.push(match (r_b, &dual_b_weights) {
        (Some(rb), Some(w)) => {
            let upper = w.len() as u64;
            let holds = rb as u64 <= upper;
            BoundItem {
                rule: BoundRule::DelsarteB,
                lower: None,
                upper: Some(upper),
                computed: Some(rb as u64),
                status: if holds { BoundStatus::Holds } else { BoundStatus::Violated },
                tight: holds && rb as u64 == upper,
                witness: if !holds { witness.clone() } else { None },
                note: None,
            }
        }
        _ => BoundItem::inapplicable(BoundRule::DelsarteB, BUDGET_NOTE),
    });

    // (f) Norse analogue, evidence only
    items.push(if code.field().q() != 2 {
        BoundItem::inapplicable(BoundRule::NorseB, "only stated for binary codes")
    } else {
        match (r_b, dual_distance) {
            (Some(rb), Some(dd)) if dd >= 2 => {
                let upper = n as u64 / 2;
                let holds = rb as u64 <= upper;
                BoundItem {
                    rule: BoundRule::NorseB,
                    lower: None,
                    upper: Some(upper),
                    computed: Some(rb as u64),
                    status: if holds { BoundStatus::Holds } else { BoundStatus::Violated },
                    tight: holds && rb as u64 == upper,
                    witness: if !holds { witness.clone() } else { None },
                    note: None,
                }
            }
            (_, Some(dd)) if dd < 2 => {
                BoundItem::inapplicable(BoundRule::NorseB, "dual distance below 2")
            }
            _ => BoundItem::inapplicable(BoundRule::NorseB, BUDGET_NOTE),
        }
    });

    Ok(BoundReport { b, d_h, d_b, r_h, r_b, items, mds_b_symbol: mds })
}

/// Certified lower bound on `R_b(code)` from a proper supercode: every coset
/// `v + code` with `v` in the supercode consists of nonzero supercode words,
/// so the coset minimum is at least `d_b` of the supercode.
pub fn subcode_lower_bound(
    code: &LinearCode,
    supercode: &LinearCode,
    b: usize,
    budget: &Budget,
) -> Result<u32> {
    if !code.is_proper_subcode_of(supercode) {
        return Err(Error::NotProperSubcode);
    }
    min_b_distance(supercode, b, budget)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerfectDecision {
    Perfect,
    NotPerfect,
    /// Budget exceeded with no filter applicable; reported, never guessed.
    Undecided,
}

/// Which rule decided a perfectness verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecidingRule {
    /// Exact comparison `R_b = floor((d_b - 1)/2)`.
    Definition,
    /// Impossibility from the sandwich: either `b >= (n+1)/2`, or the packing
    /// radius already falls below `floor((d_H-1)/2) + b - 1`.
    SandwichFilter,
    /// Reading `2(k+1)` symbols at once forces the covering radius to n.
    FullRadiusFilter,
    /// A proper supercode with `2*d_2 >= b*d_H` pushes R_b past the packing
    /// radius.
    SupercodeFilter,
    /// Pair-metric ball-volume arithmetic: no perfect code at packing
    /// radius 3.
    SpherePacking,
    /// No rule fired.
    None,
}

impl DecidingRule {
    pub fn name(&self) -> &'static str {
        match self {
            DecidingRule::Definition => "definition",
            DecidingRule::SandwichFilter => "sandwich_filter",
            DecidingRule::FullRadiusFilter => "full_radius_filter",
            DecidingRule::SupercodeFilter => "supercode_filter",
            DecidingRule::SpherePacking => "sphere_packing",
            DecidingRule::None => "none",
        }
    }
}

/// A perfectness decision. `Perfect` means `R_b = floor((d_b - 1)/2)`;
/// filters only ever pre-decide the negative case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectVerdict {
    pub decision: PerfectDecision,
    pub rule: DecidingRule,
    pub packing_radius: Option<u32>,
    pub covering_radius: Option<u32>,
    pub d_b: Option<u32>,
}

/// Largest syndrome space searched for supercode witnesses when none is
/// supplied and the exact check is out of budget.
const SUPERCODE_SEARCH_CAP: u64 = 1 << 12;

/// Decides perfectness in the b-symbol metric. Cheap negative filters run
/// first, then the exact definition when the budget allows, then a bounded
/// search for a codimension-1 supercode witness; otherwise undecided.
pub fn perfect_check(
    code: &LinearCode,
    b: usize,
    supercode: Option<&LinearCode>,
    budget: &Budget,
) -> Result<PerfectVerdict> {
    let n = code.n();
    let k = code.k();
    check_b(b, n)?;
    if let Some(sup) = supercode {
        if !code.is_proper_subcode_of(sup) {
            return Err(Error::NotProperSubcode);
        }
    }

    let d_h = ok_or_budget(min_b_distance(code, 1, budget))?;
    let d_b = ok_or_budget(min_b_distance(code, b, budget))?;
    let packing = d_b.map(|d| (d - 1) / 2);

    let verdict = |rule, covering| PerfectVerdict {
        decision: PerfectDecision::NotPerfect,
        rule,
        packing_radius: packing,
        covering_radius: covering,
        d_b,
    };

    // reading width filter: b >= (n+1)/2 leaves no room for a perfect code
    if 2 * b >= n + 1 {
        return Ok(verdict(DecidingRule::SandwichFilter, None));
    }
    // packing radius must reach floor((d_H-1)/2) + b - 1, since R_b does
    if let (Some(dh), Some(db)) = (d_h, d_b) {
        if (db - 1) / 2 < (dh - 1) / 2 + b as u32 - 1 {
            return Ok(verdict(DecidingRule::SandwichFilter, None));
        }
    }
    // a [n, k] code read 2(k+1) symbols at a time has covering radius n
    if b == 2 * (k + 1) {
        return Ok(verdict(DecidingRule::FullRadiusFilter, None));
    }
    // no perfect pair-metric code has packing radius 3
    if b == 2 && d_b == Some(7) {
        return Ok(verdict(DecidingRule::SpherePacking, None));
    }
    // supplied supercode witness
    if let (Some(sup), Some(dh)) = (supercode, d_h) {
        if let Some(d2_sup) = ok_or_budget(min_b_distance(sup, 2, budget))? {
            if 2 * d2_sup as u64 >= b as u64 * dh as u64 {
                return Ok(verdict(DecidingRule::SupercodeFilter, None));
            }
        }
    }
    // exact definition
    match (
        d_b,
        ok_or_budget(b_covering_radius(code, b, CoveringMode::Coset, budget))?,
    ) {
        (Some(db), Some(rb)) => {
            let perfect = rb == (db - 1) / 2;
            return Ok(PerfectVerdict {
                decision: if perfect { PerfectDecision::Perfect } else { PerfectDecision::NotPerfect },
                rule: DecidingRule::Definition,
                packing_radius: packing,
                covering_radius: Some(rb),
                d_b,
            });
        }
        _ => {}
    }
    // last resort: search codimension-1 supercodes for a witness
    if let Some(dh) = d_h {
        if k < n && supercode.is_none() {
            if let Some(found) = search_supercode_witness(code, b, dh, budget)? {
                if found {
                    return Ok(verdict(DecidingRule::SupercodeFilter, None));
                }
            }
        }
    }
    Ok(PerfectVerdict {
        decision: PerfectDecision::Undecided,
        rule: DecidingRule::None,
        packing_radius: packing,
        covering_radius: None,
        d_b,
    })
}

/// Scans all codimension-1 supercodes (one per nonzero syndrome) for one
/// with `2*d_2 >= b*d_H(code)`. `Ok(None)` means the search itself was out
/// of budget.
fn search_supercode_witness(
    code: &LinearCode,
    b: usize,
    d_h: u32,
    budget: &Budget,
) -> Result<Option<bool>> {
    let q = code.field().q() as u64;
    let nk = (code.n() - code.k()) as u32;
    let Some(syndromes) = q.checked_pow(nk).filter(|&s| s <= SUPERCODE_SEARCH_CAP) else {
        return Ok(None);
    };
    for s in 1..syndromes {
        let rep = code.coset_representative(s);
        let mut rows = Vec::with_capacity((code.k() + 1) * code.n());
        for r in 0..code.k() {
            rows.extend_from_slice(code.generator().row(r));
        }
        rows.extend_from_slice(&rep);
        let g = Matrix::new(code.field().clone(), code.k() + 1, code.n(), rows)?;
        let sup = LinearCode::from_generator(g)?;
        match ok_or_budget(min_b_distance(&sup, 2, budget))? {
            Some(d2) if 2 * d2 as u64 >= b as u64 * d_h as u64 => return Ok(Some(true)),
            Some(_) => {}
            None => return Ok(None),
        }
    }
    Ok(Some(false))
}

/// All `(n, k)` in the given ranges satisfying the pair-metric
/// sphere-packing equation at packing radius 3:
/// `1 + n(q-1) + n(q-1)^2 = q^(n-k)`.
///
/// The left side is 1 mod q while the right side is 0 mod q whenever n > k,
/// so the list is empty for every q; the scan verifies that numerically.
pub fn sphere_packing_scan(
    q: u64,
    n_range: RangeInclusive<u64>,
    k_range: RangeInclusive<u64>,
) -> Vec<(u64, u64)> {
    let mut hits = Vec::new();
    if q < 2 {
        return hits;
    }
    for n in n_range {
        let lhs = 1u128 + n as u128 * (q as u128 - 1) + n as u128 * (q as u128 - 1).pow(2);
        for k in k_range.clone() {
            if k >= n {
                continue;
            }
            let Some(rhs) = (q as u128).checked_pow((n - k) as u32) else {
                continue; // beyond u128, far above any attainable left side
            };
            if lhs == rhs {
                hits.push((n, k));
            }
        }
    }
    hits
}
