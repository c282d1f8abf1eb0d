//! Constructors for the concrete code families under study: Hamming codes,
//! Reed-Solomon codes, cyclic and constacyclic codes, the four fixed worked
//! examples, and the block-diagonal Hamming covering construction.

use crate::gf::{poly, Elem, Field};
use crate::linalg::{LinearCode, Matrix};
use crate::{Budget, Error, Result};

/// The `[(q^m-1)/(q-1), (q^m-1)/(q-1) - m, 3]_q` Hamming code.
///
/// Parity-check columns are one representative per projective point,
/// normalized so the first nonzero coordinate is 1 (the lexicographically
/// least representative) and listed in ascending lexicographic order.
pub fn hamming_code(field: &Field, m: u32, budget: &Budget) -> Result<LinearCode> {
    if m < 2 {
        return Err(Error::InvalidParameter("hamming code needs m >= 2".into()));
    }
    let q = field.q() as u64;
    let total = q
        .checked_pow(m)
        .ok_or(Error::InvalidParameter("q^m overflows".into()))?;
    let n = (total - 1) / (q - 1);
    budget.check_count(n as u128)?;

    let mut columns: Vec<Vec<Elem>> = Vec::with_capacity(n as usize);
    for idx in 1..total {
        let v = crate::linalg::decode_vec(field.q(), idx, m as usize);
        let lead = v.iter().find(|&&x| x != 0).copied().expect("nonzero vector");
        if lead == 1 {
            columns.push(v);
        }
    }
    debug_assert_eq!(columns.len(), n as usize);

    let mut h = Matrix::zero(field.clone(), m as usize, n as usize);
    for (c, col) in columns.iter().enumerate() {
        for (r, &v) in col.iter().enumerate() {
            h.set(r, c, v);
        }
    }
    LinearCode::from_parity(h)
}

/// The `[n, k, n-k+1]_q` Reed-Solomon code evaluated at `points` (default:
/// the first `n` field elements in encoding order). Generator row `i` is
/// the pointwise `i`-th power of the points.
pub fn rs_code(field: &Field, n: usize, k: usize, points: Option<&[Elem]>) -> Result<LinearCode> {
    let q = field.q();
    if n > q as usize {
        return Err(Error::LengthExceedsField { n, q });
    }
    if k == 0 || k > n {
        return Err(Error::Dimension(format!("dimension {k} out of range for length {n}")));
    }
    let pts: Vec<Elem> = match points {
        Some(p) => {
            if p.len() != n {
                return Err(Error::Dimension(format!("expected {n} evaluation points, got {}", p.len())));
            }
            for &x in p {
                field.check_elem(x as u64)?;
            }
            p.to_vec()
        }
        None => field.elements().take(n).collect(),
    };
    let mut seen = vec![false; q as usize];
    for &p in &pts {
        if std::mem::replace(&mut seen[p as usize], true) {
            return Err(Error::RepeatedPoints);
        }
    }
    let mut g = Matrix::zero(field.clone(), k, n);
    for (j, &p) in pts.iter().enumerate() {
        let mut acc: Elem = 1;
        for i in 0..k {
            g.set(i, j, acc);
            acc = field.mul(acc, p);
        }
    }
    LinearCode::from_generator(g)
}

/// The binary self-dual `[2n, n, 2]` code with generator `(I_n | I_n)`.
pub fn example1(n: usize) -> Result<LinearCode> {
    if n < 2 {
        return Err(Error::InvalidParameter("example 1 needs n >= 2".into()));
    }
    let f2 = Field::prime(2).expect("GF(2)");
    let mut g = Matrix::zero(f2, n, 2 * n);
    for i in 0..n {
        g.set(i, i, 1);
        g.set(i, n + i, 1);
    }
    LinearCode::from_generator(g)
}

/// The binary `[4t, 2t, 2]` code whose generator row `i` carries `11` at
/// columns `2i, 2i+1`; self-dual, with no independent cyclic k-window for
/// `t >= 2`.
pub fn example2(t: usize) -> Result<LinearCode> {
    if t < 1 {
        return Err(Error::InvalidParameter("example 2 needs t >= 1".into()));
    }
    let f2 = Field::prime(2).expect("GF(2)");
    let mut g = Matrix::zero(f2, 2 * t, 4 * t);
    for i in 0..2 * t {
        g.set(i, 2 * i, 1);
        g.set(i, 2 * i + 1, 1);
    }
    LinearCode::from_generator(g)
}

/// A fixed binary `[6, 3, 3]` code, given by its printed parity-check matrix.
pub fn example3() -> LinearCode {
    let f2 = Field::prime(2).expect("GF(2)");
    let h = Matrix::new(
        f2,
        3,
        6,
        vec![
            1, 0, 0, 1, 1, 0, //
            0, 1, 0, 0, 1, 1, //
            0, 0, 1, 1, 0, 1,
        ],
    )
    .expect("valid matrix");
    LinearCode::from_parity(h).expect("full-rank parity matrix")
}

/// The `[8, 4, 4]` extended binary Hamming code, given by its printed
/// generator matrix.
pub fn example4() -> LinearCode {
    let f2 = Field::prime(2).expect("GF(2)");
    let g = Matrix::new(
        f2,
        4,
        8,
        vec![
            1, 1, 1, 1, 0, 0, 0, 0, //
            0, 0, 0, 0, 1, 1, 1, 1, //
            1, 1, 0, 0, 1, 1, 0, 0, //
            0, 1, 1, 0, 0, 1, 1, 0,
        ],
    )
    .expect("valid matrix");
    LinearCode::from_generator(g).expect("full-rank generator")
}

/// Dispatch over the four fixed worked examples by number.
pub fn example_code(id: u8, param: Option<usize>) -> Result<LinearCode> {
    match (id, param) {
        (1, Some(n)) => example1(n),
        (2, Some(t)) => example2(t),
        (3, None) => Ok(example3()),
        (4, None) => Ok(example4()),
        (1, None) | (2, None) => Err(Error::InvalidParameter(format!("example {id} needs a size parameter"))),
        (3, Some(_)) | (4, Some(_)) => Err(Error::InvalidParameter(format!("example {id} takes no parameter"))),
        _ => Err(Error::InvalidParameter(format!("no example {id}"))),
    }
}

/// A lambda-constacyclic code of length `n` generated by `g`, which must
/// divide `x^n - lambda`; plain cyclic when `lambda = 1` (the default).
/// Generator-matrix rows are `g, x*g, ..., x^(k-1)*g` with `k = n - deg g`.
pub fn cyclic_code(field: &Field, n: usize, g: &[Elem], lambda: Option<Elem>) -> Result<LinearCode> {
    let lambda = lambda.unwrap_or(1);
    field.check_elem(lambda as u64)?;
    if lambda == 0 {
        return Err(Error::InvalidParameter("lambda must be nonzero".into()));
    }
    for &c in g {
        field.check_elem(c as u64)?;
    }
    let Some(dg) = poly::deg(g) else {
        return Err(Error::InvalidParameter("zero generator polynomial".into()));
    };
    if dg >= n {
        return Err(Error::InvalidParameter(format!(
            "generator polynomial degree {dg} must be below the length {n}"
        )));
    }
    let modulus = poly::x_pow_minus(field, n, lambda);
    if !poly::divides(field, &g[..=dg], &modulus) {
        return Err(Error::NotADivisor { n });
    }
    let k = n - dg;
    let mut mat = Matrix::zero(field.clone(), k, n);
    for i in 0..k {
        for (j, &c) in g.iter().enumerate().take(dg + 1) {
            mat.set(i, i + j, c);
        }
    }
    LinearCode::from_generator(mat)
}

/// The lambda-twisted cyclic shift `(c_0, ..., c_{n-1}) ->
/// (lambda * c_{n-1}, c_0, ..., c_{n-2})`; constacyclic codes are closed
/// under it.
pub fn twisted_shift(field: &Field, v: &[Elem], lambda: Elem) -> Vec<Elem> {
    let n = v.len();
    let mut out = Vec::with_capacity(n);
    out.push(field.mul(lambda, v[n - 1]));
    out.extend_from_slice(&v[..n - 1]);
    out
}

/// The `[t*(q^m-1)/(q-1), t*((q^m-1)/(q-1) - m)]_q` code whose parity-check
/// matrix stacks `t` Hamming parity blocks on the diagonal. Its covering
/// radius in the b-symbol metric is `b*t` for small `b`, which drives the
/// block-covering list bound.
pub fn block_hamming(field: &Field, m: u32, t: usize, budget: &Budget) -> Result<LinearCode> {
    if t < 1 {
        return Err(Error::InvalidParameter("block construction needs t >= 1".into()));
    }
    let block = hamming_code(field, m, budget)?;
    let hb = block.parity();
    let (bm, bn) = (hb.rows(), hb.cols());
    budget.check_count((t * bn) as u128)?;
    let mut h = Matrix::zero(field.clone(), t * bm, t * bn);
    for blk in 0..t {
        for r in 0..bm {
            for c in 0..bn {
                h.set(blk * bm + r, blk * bn + c, hb.get(r, c));
            }
        }
    }
    LinearCode::from_parity(h)
}

/// A buildable description of one family member; the CLI's `family` stanza
/// parses into this.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Hamming { q: u64, m: u32 },
    Rs { q: u64, n: usize, k: usize, points: Option<Vec<u64>> },
    Cyclic { q: u64, n: usize, g: Vec<u64>, lambda: Option<u64> },
    Example1 { n: usize },
    Example2 { t: usize },
    Example3,
    Example4,
    BlockHamming { q: u64, m: u32, t: usize },
}

impl FamilySpec {
    pub fn build(&self, budget: &Budget) -> Result<LinearCode> {
        match self {
            FamilySpec::Hamming { q, m } => hamming_code(&Field::with_order(*q)?, *m, budget),
            FamilySpec::Rs { q, n, k, points } => {
                let field = Field::with_order(*q)?;
                let pts = match points {
                    None => None,
                    Some(raw) => Some(
                        raw.iter()
                            .map(|&v| field.check_elem(v))
                            .collect::<Result<Vec<Elem>>>()?,
                    ),
                };
                rs_code(&field, *n, *k, pts.as_deref())
            }
            FamilySpec::Cyclic { q, n, g, lambda } => {
                let field = Field::with_order(*q)?;
                let gi = g
                    .iter()
                    .map(|&v| field.check_elem(v))
                    .collect::<Result<Vec<Elem>>>()?;
                let lam = lambda.map(|v| field.check_elem(v)).transpose()?;
                cyclic_code(&field, *n, &gi, lam)
            }
            FamilySpec::Example1 { n } => example1(*n),
            FamilySpec::Example2 { t } => example2(*t),
            FamilySpec::Example3 => Ok(example3()),
            FamilySpec::Example4 => Ok(example4()),
            FamilySpec::BlockHamming { q, m, t } => {
                block_hamming(&Field::with_order(*q)?, *m, *t, budget)
            }
        }
    }
}
