//! Exact arithmetic in finite fields `GF(p^e)` with a canonical integer
//! encoding of elements.
//!
//! An element is the integer whose base-`p` digits (ascending) are the
//! coefficients of its polynomial representative of degree `< e`. The
//! encoding depends only on `p` and `e`, never on the modulus, so it is
//! stable enough to appear in file formats.

use crate::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// A field element under the canonical integer encoding, in `[0, q)`.
pub type Elem = u16;

/// Largest supported field order.
pub const ORDER_CAP: u128 = 1 << 16;

/// Orders up to this get full add/mul/inv lookup tables at construction.
const TABLE_LIMIT: u32 = 256;

/// Largest order for which a default modulus is searched when none is given.
const DEFAULT_MODULUS_CAP: u64 = 64;

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    /// Ascending coefficients of the monic irreducible modulus, length e + 1.
    /// `None` for prime fields.
    modulus: Option<Vec<Elem>>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    inv: Vec<Elem>,
}

/// A finite field `GF(p^e)`. Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p
            && self.inner.e == other.inner.e
            && self.inner.modulus == other.inner.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.inner.q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.e == 1 {
            write!(f, "GF({})", self.inner.q)
        } else {
            write!(f, "GF({}^{})", self.inner.p, self.inner.e)
        }
    }
}

impl Field {
    /// Builds `GF(p^e)`. For `e > 1` a modulus may be given as ascending
    /// coefficients over `GF(p)` of length `e + 1`; when omitted, the
    /// smallest monic irreducible polynomial (by encoded value) is used,
    /// available for orders up to 64.
    pub fn new(p: u64, e: u32, modulus: Option<&[Elem]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidParameter("extension degree must be >= 1".into()));
        }
        let q = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
        if q > ORDER_CAP {
            return Err(Error::FieldTooLarge { q });
        }
        let p = p as u32;
        let q = q as u32;

        let modulus = if e == 1 {
            // A prime field needs no modulus; reject one of the wrong shape.
            match modulus {
                None => None,
                Some(m) => return Err(Error::ModulusDegree { expected: 1, found: poly_deg_raw(m) }),
            }
        } else {
            let m = match modulus {
                Some(m) => m.to_vec(),
                None => default_modulus(p, e)?,
            };
            validate_modulus(p, e, &m)?;
            Some(m)
        };

        let mut inner = Inner { p, e, q, modulus, add: Vec::new(), mul: Vec::new(), inv: Vec::new() };
        if q <= TABLE_LIMIT {
            build_tables(&mut inner);
        }
        Ok(Field { inner: Arc::new(inner) })
    }

    /// Builds the prime field `GF(p)`.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// Builds the field of order `q`, factoring `q = p^e`.
    pub fn with_order(q: u64) -> Result<Field> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::new(p, e, None)
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn e(&self) -> u32 {
        self.inner.e
    }

    /// The order q = p^e.
    pub fn q(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> Option<&[Elem]> {
        self.inner.modulus.as_deref()
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.inner.q as Elem
    }

    /// Validates an externally supplied value as an element encoding.
    pub fn check_elem(&self, value: u64) -> Result<Elem> {
        if value < self.inner.q as u64 {
            Ok(value as Elem)
        } else {
            Err(Error::ElementOutOfRange { value, q: self.inner.q })
        }
    }

    /// Base-p digits (ascending) of an element, i.e. its polynomial coefficients.
    pub fn to_coeffs(&self, a: Elem) -> Vec<Elem> {
        let mut out = vec![0; self.inner.e as usize];
        digits(self.inner.p, a as u32, &mut out);
        out
    }

    /// Inverse of [`Field::to_coeffs`].
    pub fn from_coeffs(&self, coeffs: &[Elem]) -> Result<Elem> {
        if coeffs.len() > self.inner.e as usize {
            return Err(Error::InvalidParameter("too many coefficients".into()));
        }
        let mut v: u64 = 0;
        for &c in coeffs.iter().rev() {
            if c as u32 >= self.inner.p {
                return Err(Error::ElementOutOfRange { value: c as u64, q: self.inner.q });
            }
            v = v * self.inner.p as u64 + c as u64;
        }
        self.check_elem(v)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.inner;
        if !f.add.is_empty() {
            return f.add[a as usize * f.q as usize + b as usize];
        }
        self.add_slow(a, b)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let f = &*self.inner;
        if f.e == 1 {
            return if a == 0 { 0 } else { (f.p - a as u32) as Elem };
        }
        // negate each base-p digit
        let mut out = 0u32;
        let mut pw = 1u32;
        let mut v = a as u32;
        for _ in 0..f.e {
            let d = v % f.p;
            v /= f.p;
            let nd = if d == 0 { 0 } else { f.p - d };
            out += nd * pw;
            pw *= f.p;
        }
        out as Elem
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.inner;
        if !f.mul.is_empty() {
            return f.mul[a as usize * f.q as usize + b as usize];
        }
        self.mul_slow(a, b)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self, a: Elem) -> Result<Elem> {
        let f = &*self.inner;
        if a == 0 {
            return Err(Error::DivisionByZero { q: f.q });
        }
        if !f.inv.is_empty() {
            return Ok(f.inv[a as usize]);
        }
        // a^(q-2) in any finite field
        Ok(self.pow(a, f.q as u64 - 2))
    }

    pub fn pow(&self, a: Elem, mut exp: u64) -> Elem {
        let mut base = a;
        let mut acc: Elem = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    fn add_slow(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.inner;
        if f.e == 1 {
            return ((a as u32 + b as u32) % f.p) as Elem;
        }
        let mut out = 0u32;
        let mut pw = 1u32;
        let mut x = a as u32;
        let mut y = b as u32;
        for _ in 0..f.e {
            let d = (x % f.p + y % f.p) % f.p;
            x /= f.p;
            y /= f.p;
            out += d * pw;
            pw *= f.p;
        }
        out as Elem
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.inner;
        if f.e == 1 {
            return ((a as u64 * b as u64) % f.p as u64) as Elem;
        }
        let e = f.e as usize;
        let modulus = f.modulus.as_ref().expect("extension field has a modulus");
        let mut da = vec![0; e];
        let mut db = vec![0; e];
        digits(f.p, a as u32, &mut da);
        digits(f.p, b as u32, &mut db);
        // convolution, then reduction by the monic modulus
        let mut conv = vec![0u32; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                conv[i + j] = (conv[i + j] + x as u32 * y as u32) % f.p;
            }
        }
        for i in (e..2 * e - 1).rev() {
            let c = conv[i];
            if c == 0 {
                continue;
            }
            conv[i] = 0;
            for (j, &m) in modulus.iter().enumerate().take(e) {
                let pos = i - e + j;
                let sub = (c * m as u32) % f.p;
                conv[pos] = (conv[pos] + f.p - sub) % f.p;
            }
        }
        let mut out = 0u32;
        for i in (0..e).rev() {
            out = out * f.p + conv[i];
        }
        out as Elem
    }
}

fn build_tables(f: &mut Inner) {
    let q = f.q as usize;
    let tableless = Field {
        inner: Arc::new(Inner {
            p: f.p,
            e: f.e,
            q: f.q,
            modulus: f.modulus.clone(),
            add: Vec::new(),
            mul: Vec::new(),
            inv: Vec::new(),
        }),
    };
    let mut add = vec![0; q * q];
    let mut mul = vec![0; q * q];
    let mut inv = vec![0; q];
    for a in 0..q {
        for b in 0..q {
            add[a * q + b] = tableless.add_slow(a as Elem, b as Elem);
            let m = tableless.mul_slow(a as Elem, b as Elem);
            mul[a * q + b] = m;
            if m == 1 {
                inv[a] = b as Elem;
            }
        }
    }
    f.add = add;
    f.mul = mul;
    f.inv = inv;
}

#[inline]
fn digits(p: u32, mut v: u32, out: &mut [Elem]) {
    for d in out.iter_mut() {
        *d = (v % p) as Elem;
        v /= p;
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Factors `q` as `p^e` with `p` prime, if possible.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut v = q;
            let mut e = 0;
            while v % p == 0 {
                v /= p;
                e += 1;
            }
            return (v == 1).then_some((p, e));
        }
        p += 1;
    }
    Some((q, 1))
}

fn poly_deg_raw(coeffs: &[Elem]) -> usize {
    coeffs.iter().rposition(|&c| c != 0).unwrap_or(0)
}

fn validate_modulus(p: u32, e: u32, m: &[Elem]) -> Result<()> {
    let deg = poly_deg_raw(m);
    if m.len() != e as usize + 1 || deg != e as usize || m[e as usize] != 1 {
        return Err(Error::ModulusDegree { expected: e, found: deg });
    }
    let fp = Field::prime(p as u64)?;
    for &c in m {
        fp.check_elem(c as u64)?;
    }
    if !poly::is_irreducible(&fp, m) {
        return Err(Error::ReducibleModulus);
    }
    Ok(())
}

/// Smallest (by encoded value) monic irreducible polynomial of degree `e`
/// over `GF(p)`, for orders up to [`DEFAULT_MODULUS_CAP`].
fn default_modulus(p: u32, e: u32) -> Result<Vec<Elem>> {
    let q = (p as u64).pow(e);
    if q > DEFAULT_MODULUS_CAP {
        return Err(Error::NoDefaultModulus { p: p as u64, e });
    }
    let fp = Field::prime(p as u64)?;
    let e = e as usize;
    for tail in 0..q {
        let mut m = vec![0; e + 1];
        digits(p, tail as u32, &mut m[..e]);
        m[e] = 1;
        if poly::is_irreducible(&fp, &m) {
            return Ok(m);
        }
    }
    // every degree admits an irreducible polynomial
    unreachable!("no irreducible polynomial of degree {e} over GF({p})");
}

/// Dense polynomial helpers over an arbitrary [`Field`], coefficients
/// ascending. Used for modulus validation and generator-polynomial codes.
pub(crate) mod poly {
    use super::{Elem, Field};

    /// Degree, or `None` for the zero polynomial.
    pub fn deg(a: &[Elem]) -> Option<usize> {
        a.iter().rposition(|&c| c != 0)
    }

    /// Remainder of `num` modulo `den` (`den` nonzero).
    pub fn rem(f: &Field, num: &[Elem], den: &[Elem]) -> Vec<Elem> {
        let dd = deg(den).expect("division by the zero polynomial");
        let lead_inv = f.inv(den[dd]).expect("nonzero leading coefficient");
        let mut r = num.to_vec();
        while let Some(dr) = deg(&r) {
            if dr < dd {
                break;
            }
            let c = f.mul(r[dr], lead_inv);
            let shift = dr - dd;
            for (j, &m) in den.iter().enumerate().take(dd + 1) {
                r[shift + j] = f.sub(r[shift + j], f.mul(c, m));
            }
        }
        r.truncate(deg(&r).map_or(0, |d| d + 1));
        r
    }

    pub fn divides(f: &Field, den: &[Elem], num: &[Elem]) -> bool {
        rem(f, num, den).is_empty()
    }

    /// Irreducibility over `f` by trial division against every monic
    /// polynomial of degree up to half the degree of `a`.
    pub fn is_irreducible(f: &Field, a: &[Elem]) -> bool {
        let Some(d) = deg(a) else { return false };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let q = f.q() as u64;
        for t in 1..=d / 2 {
            // all monic polynomials of degree t: q^t coefficient tails
            for tail in 0..q.pow(t as u32) {
                let mut cand = vec![0; t + 1];
                let mut v = tail;
                for c in cand.iter_mut().take(t) {
                    *c = (v % q) as Elem;
                    v /= q;
                }
                cand[t] = 1;
                if divides(f, &cand, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Coefficients of `x^n - lambda`.
    pub fn x_pow_minus(f: &Field, n: usize, lambda: Elem) -> Vec<Elem> {
        let mut out = vec![0; n + 1];
        out[0] = f.neg(lambda);
        out[n] = 1;
        out
    }
}
