//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! An element of order `n` is stored as its coefficient vector in the power
//! basis `1, ζ, ..., ζ^{φ(n)-1}`, i.e. a polynomial reduced modulo the
//! cyclotomic polynomial `Φ_n`. Elements of different orders are combined by
//! lifting both into `Q(ζ_lcm)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num::integer::Integer;
use num::{BigInt, BigRational, One, Signed, Zero};

/// Environment variable overriding the refinement cap of [`Scalar::sign`].
pub const SIGN_CAP_ENV: &str = "HOPFSTAR_SIGN_CAP";

/// Refinement rounds used by [`Scalar::sign`] when the environment does not
/// say otherwise. Precision doubles every round, starting at 64 bits.
pub const DEFAULT_SIGN_CAP: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("scalar {0} is not real")]
    NotReal(String),
    #[error("sign still undecided after {0} refinement rounds")]
    PrecisionExhausted(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("order must be positive")]
    ZeroOrder,
    #[error("order {order} takes {expected} coefficients, got {got}")]
    Length { order: u32, expected: usize, got: usize },
    #[error("malformed scalar `{text}`: {reason}")]
    Parse { text: String, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// An element of `Q(ζ_n)`.
///
/// Invariant: `coeffs.len() == φ(order)`, and an element whose coefficients
/// beyond the constant term all vanish is stored with `order == 1`.
#[derive(Clone, Debug)]
pub struct Scalar {
    order: u32,
    coeffs: Vec<BigRational>,
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `Φ_n`, lowest degree first. Monic of degree `φ(n)`.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Φ_d with d a proper divisor of n.
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let divisor = cyclotomic_polynomial(d);
            poly = exact_monic_quotient(&poly, &divisor);
        }
    }
    let poly = Arc::new(poly);
    cyclotomic_cache().lock().unwrap().insert(n, poly.clone());
    poly
}

fn exact_monic_quotient(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Euler's totient, which is the degree of `Φ_n`.
pub fn totient(n: u32) -> usize {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// Reduces a polynomial modulo `Φ_n`, returning exactly `φ(n)` coefficients.
fn reduce_mod_cyclotomic(order: u32, mut poly: Vec<BigRational>) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(order);
    let deg = phi.len() - 1;
    if poly.len() > deg {
        for k in (deg..poly.len()).rev() {
            let c = std::mem::replace(&mut poly[k], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for (j, pj) in phi.iter().enumerate().take(deg) {
                if !pj.is_zero() {
                    poly[k - deg + j] -= &c * BigRational::from_integer(pj.clone());
                }
            }
        }
    }
    poly.resize(deg, BigRational::zero());
    poly
}

impl Scalar {
    fn from_reduced(order: u32, coeffs: Vec<BigRational>) -> Scalar {
        if order != 1 && coeffs.iter().skip(1).all(Zero::is_zero) {
            let c0 = coeffs.into_iter().next().unwrap_or_else(BigRational::zero);
            return Scalar {
                order: 1,
                coeffs: vec![c0],
            };
        }
        Scalar { order, coeffs }
    }

    /// Builds `Σ poly[k] ζ_n^k` for a polynomial of any length.
    pub fn from_poly(order: u32, poly: Vec<BigRational>) -> Result<Scalar, ScalarError> {
        if order == 0 {
            return Err(ScalarError::ZeroOrder);
        }
        Ok(Self::from_reduced(order, reduce_mod_cyclotomic(order, poly)))
    }

    /// Builds an element from exactly `φ(order)` power-basis coefficients.
    pub fn new(order: u32, coeffs: Vec<BigRational>) -> Result<Scalar, ScalarError> {
        if order == 0 {
            return Err(ScalarError::ZeroOrder);
        }
        let expected = totient(order);
        if coeffs.len() != expected {
            return Err(ScalarError::Length {
                order,
                expected,
                got: coeffs.len(),
            });
        }
        Ok(Self::from_reduced(order, coeffs))
    }

    pub fn zero() -> Scalar {
        Scalar {
            order: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Scalar {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Scalar {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(p: i64, q: i64) -> Scalar {
        Self::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_rational(q: BigRational) -> Scalar {
        Scalar {
            order: 1,
            coeffs: vec![q],
        }
    }

    /// `ζ_n^k` with `ζ_n = exp(2πi/n)`; negative `k` allowed.
    pub fn zeta(n: u32, k: i64) -> Scalar {
        assert!(n > 0, "root of unity of order 0");
        let e = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![BigRational::zero(); e + 1];
        poly[e] = BigRational::one();
        Self::from_reduced(n, reduce_mod_cyclotomic(n, poly))
    }

    /// The imaginary unit `ζ_4`.
    pub fn i() -> Scalar {
        Self::zeta(4, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_one()
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.order == 1).then(|| &self.coeffs[0])
    }

    /// Coefficients of the same element in `Q(ζ_m)`; `m` must be a multiple
    /// of the current order.
    pub fn lift_coeffs(&self, m: u32) -> Vec<BigRational> {
        assert!(
            m.is_multiple_of(self.order),
            "cannot lift order {} to {}",
            self.order,
            m
        );
        if m == self.order {
            return self.coeffs.clone();
        }
        let step = (m / self.order) as usize;
        let mut poly = vec![BigRational::zero(); step * (self.coeffs.len() - 1) + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        reduce_mod_cyclotomic(m, poly)
    }

    fn common_order(&self, other: &Scalar) -> u32 {
        self.order.lcm(&other.order)
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Scalar {
        if self.order == 1 {
            return self.clone();
        }
        let n = self.order as usize;
        let mut poly = vec![BigRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[(n - k) % n] += c;
        }
        Self::from_reduced(self.order, reduce_mod_cyclotomic(self.order, poly))
    }

    pub fn is_real(&self) -> bool {
        self.order == 1 || self.conj() == *self
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.order == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        let modulus: Vec<BigRational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let u = poly::inverse_mod(&self.coeffs, &modulus);
        Ok(Self::from_reduced(self.order, reduce_mod_cyclotomic(self.order, u)))
    }

    /// Sign of a real element, using the cap from the environment.
    pub fn sign(&self) -> Result<Sign, ScalarError> {
        self.sign_with_cap(sign_cap())
    }

    /// Sign of a real element. Zero is detected exactly; otherwise the value
    /// is enclosed in rational intervals of doubling precision until the
    /// enclosure excludes zero or `cap` rounds have run.
    pub fn sign_with_cap(&self, cap: u32) -> Result<Sign, ScalarError> {
        if !self.is_real() {
            return Err(ScalarError::NotReal(self.to_string()));
        }
        if self.is_zero() {
            return Ok(Sign::Zero);
        }
        if self.order == 1 {
            return Ok(if self.coeffs[0].is_positive() {
                Sign::Positive
            } else {
                Sign::Negative
            });
        }
        let mut bits: u64 = 64;
        for _ in 0..cap {
            let (lo, hi) = interval::real_part_enclosure(self.order, &self.coeffs, bits);
            if lo.is_positive() {
                return Ok(Sign::Positive);
            }
            if hi.is_negative() {
                return Ok(Sign::Negative);
            }
            bits = bits.saturating_mul(2);
        }
        Err(ScalarError::PrecisionExhausted(cap))
    }

    /// Rational enclosure `(lo, hi)` of the real part at `bits` of precision.
    pub fn real_part_enclosure(&self, bits: u64) -> (BigRational, BigRational) {
        interval::real_part_enclosure(self.order, &self.coeffs, bits)
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

/// Refinement cap for [`Scalar::sign`]: `HOPFSTAR_SIGN_CAP` if set and
/// parseable, else [`DEFAULT_SIGN_CAP`].
pub fn sign_cap() -> u32 {
    std::env::var(SIGN_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SIGN_CAP)
}

mod poly {
    use num::{BigRational, One, Zero};

    fn trim(p: &mut Vec<BigRational>) {
        while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    }

    fn degree(p: &[BigRational]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }

    fn div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let db = degree(b).expect("polynomial division by zero");
        let mut rem = a.to_vec();
        let mut quot = vec![BigRational::zero(); a.len().max(1)];
        let lead = b[db].clone();
        while let Some(dr) = degree(&rem) {
            if dr < db {
                break;
            }
            let c = &rem[dr] / &lead;
            for j in 0..=db {
                rem[dr - db + j] -= &c * &b[j];
            }
            quot[dr - db] = c;
        }
        trim(&mut quot);
        trim(&mut rem);
        (quot, rem)
    }

    fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); a.len().max(b.len())];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, y) in b.iter().enumerate() {
            out[i] -= y;
        }
        trim(&mut out);
        out
    }

    /// `u` with `u·a ≡ 1 (mod m)`; requires `gcd(a, m) = 1`.
    pub(super) fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
        let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
        trim(&mut r1);
        let (mut t0, mut t1) = (vec![BigRational::zero()], vec![BigRational::one()]);
        while degree(&r1).is_some() {
            let (q, r) = div_rem(&r0, &r1);
            let t2 = sub(&t0, &mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t2);
        }
        // r0 is a nonzero constant since the inputs are coprime.
        let c = r0[degree(&r0).expect("gcd is zero")].clone();
        debug_assert_eq!(degree(&r0), Some(0), "inputs are not coprime");
        t0.iter().map(|x| x / &c).collect()
    }
}

mod interval {
    //! Fixed-point enclosures of `cos(2πk/n)` with rigorous error bounds in
    //! units of `2^-bits`.

    use num::{BigInt, BigRational, One, Signed, Zero};

    /// `(value, err)` with `|atan(1/m)·2^bits - value| <= err`.
    fn arctan_recip(m: u64, bits: u64) -> (BigInt, u64) {
        let one = BigInt::one() << bits;
        let m = BigInt::from(m);
        let m2 = &m * &m;
        let mut power = m.clone();
        let mut sum = BigInt::zero();
        let mut terms = 0u64;
        for j in 0u64.. {
            let term = &one / (&power * BigInt::from(2 * j + 1));
            if term.is_zero() {
                break;
            }
            if j % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
            terms += 1;
            power *= &m2;
        }
        // One ulp of truncation per term plus the omitted alternating tail.
        (sum, terms + 1)
    }

    fn pi_fixed(bits: u64) -> (BigInt, u64) {
        let (a5, e5) = arctan_recip(5, bits);
        let (a239, e239) = arctan_recip(239, bits);
        (a5 * 16 - a239 * 4, 16 * e5 + 4 * e239)
    }

    /// `(value, err)` enclosing `cos(2πk/n)·2^bits`.
    fn cos_turn(k: u64, n: u64, pi: &(BigInt, u64), bits: u64) -> (BigInt, u64) {
        let mut k = k % n;
        if 2 * k > n {
            k = n - k;
        }
        // θ = 2πk/n ∈ [0, π]; the floor adds one ulp, and 2k/n <= 1.
        let theta = (&pi.0 * BigInt::from(2 * k)) / BigInt::from(n);
        let theta_err = pi.1 + 1;
        let theta_sq = &theta * &theta;
        let scale = BigInt::one() << (2 * bits);
        let mut term = BigInt::one() << bits;
        let mut term_err: u64 = 0;
        let mut sum = term.clone();
        let mut err_total: u64 = 0;
        let mut j: u64 = 1;
        loop {
            let d = (2 * j - 1) * (2 * j);
            term = (&term * &theta_sq) / (&scale * BigInt::from(d));
            // θ̃ < 4, so θ̃²/d < 16/d.
            term_err = (term_err * 16).div_ceil(d) + 1;
            if j >= 3 && term.is_zero() {
                // Alternating tail with decreasing terms is bounded by the
                // first omitted one.
                err_total += term_err + 1;
                break;
            }
            if j % 2 == 1 {
                sum -= &term;
            } else {
                sum += &term;
            }
            err_total += term_err;
            j += 1;
        }
        // cos is 1-Lipschitz, covering the error in θ̃ itself.
        (sum, err_total + theta_err)
    }

    pub(super) fn real_part_enclosure(order: u32, coeffs: &[BigRational], bits: u64) -> (BigRational, BigRational) {
        let guard = 16;
        let work = bits + guard;
        let pi = pi_fixed(work);
        let denom = BigInt::one() << work;
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (v, e) = cos_turn(k as u64, order as u64, &pi, work);
            let l = BigRational::new(&v - BigInt::from(e), denom.clone());
            let h = BigRational::new(&v + BigInt::from(e), denom.clone());
            if c.is_negative() {
                lo += c * &h;
                hi += c * &l;
            } else {
                lo += c * &l;
                hi += c * &h;
            }
        }
        (lo, hi)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let m = self.common_order(other);
        self.lift_coeffs(m) == other.lift_coeffs(m)
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

fn add_impl(a: &Scalar, b: &Scalar, negate_b: bool) -> Scalar {
    if a.order == b.order {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| if negate_b { x - y } else { x + y })
            .collect();
        return Scalar::from_reduced(a.order, coeffs);
    }
    let m = a.common_order(b);
    let coeffs = a
        .lift_coeffs(m)
        .into_iter()
        .zip(b.lift_coeffs(m))
        .map(|(x, y)| if negate_b { x - y } else { x + y })
        .collect();
    Scalar::from_reduced(m, coeffs)
}

fn mul_impl(a: &Scalar, b: &Scalar) -> Scalar {
    if a.order == 1 && b.order == 1 {
        return Scalar::from_rational(&a.coeffs[0] * &b.coeffs[0]);
    }
    if a.order == 1 || b.order == 1 {
        let (r, s) = if a.order == 1 { (a, b) } else { (b, a) };
        let r = &r.coeffs[0];
        if r.is_zero() {
            return Scalar::zero();
        }
        return Scalar::from_reduced(s.order, s.coeffs.iter().map(|c| c * r).collect());
    }
    let m = a.common_order(b);
    let x = a.lift_coeffs(m);
    let y = b.lift_coeffs(m);
    let mut poly = vec![BigRational::zero(); x.len() + y.len() - 1];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                poly[i + j] += xi * yj;
            }
        }
    }
    Scalar::from_reduced(m, reduce_mod_cyclotomic(m, poly))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, |a: &Scalar, b: &Scalar| mul_impl(
    a,
    &b.inv().expect("scalar division by zero")
));

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = add_impl(self, rhs, false);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = add_impl(self, rhs, true);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = mul_impl(self, rhs);
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            order: self.order,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Scalar {
        Scalar::from_rational(q)
    }
}

/// Text form `cyclo(n)[c0, c1, ...]`, each coefficient `p` or `p/q` in lowest
/// terms with `q > 0`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        write!(f, "cyclo({})[", self.order)?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

fn parse_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = p.parse().ok()?;
    let q: BigInt = q.parse().ok()?;
    if q.is_zero() {
        return None;
    }
    Some(BigRational::new(p, q))
}

/// Accepts the text form written by `Display`, and bare rationals `p` or
/// `p/q` as elements of `Q`.
impl FromStr for Scalar {
    type Err = ScalarError;

    fn from_str(text: &str) -> Result<Scalar, ScalarError> {
        let err = |reason: &str| ScalarError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        let Some(rest) = t.strip_prefix("cyclo(") else {
            return parse_rational(t)
                .map(Scalar::from_rational)
                .ok_or_else(|| err("expected `cyclo(n)[...]` or a rational"));
        };
        let (order, rest) = rest.split_once(')').ok_or_else(|| err("missing `)`"))?;
        let order: u32 = order
            .trim()
            .parse()
            .map_err(|_| err("order is not a positive integer"))?;
        if order == 0 {
            return Err(err("order must be positive"));
        }
        let body = rest
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| err("coefficients must be enclosed in `[...]`"))?;
        let coeffs = body
            .split(',')
            .map(|c| parse_rational(c).ok_or_else(|| err("bad coefficient")))
            .collect::<Result<Vec<_>, _>>()?;
        Scalar::new(order, coeffs).map_err(|e| err(&e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn cyclotomic_polynomials_match_known_coefficients() {
        let as_i64 = |n| {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| i64::try_from(c.clone()).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        // First cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
        let p105 = as_i64(105);
        assert_eq!(p105.len(), 49);
        assert_eq!(p105[7], -2);
        assert_eq!(p105[41], -2);
    }

    #[test]
    fn totient_small_values() {
        let got: Vec<usize> = (1..=12).map(totient).collect();
        assert_eq!(got, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn conjugation_of_zeta8_sum() {
        // ζ + ζ³ in Q(ζ_8) conjugates to ζ⁷ + ζ⁵ = -ζ³ - ζ.
        let s = Scalar::new(8, vec![q(0, 1), q(1, 1), q(0, 1), q(1, 1)]).unwrap();
        let expected = Scalar::new(8, vec![q(0, 1), q(-1, 1), q(0, 1), q(-1, 1)]).unwrap();
        assert_eq!(s.conj(), expected);
    }

    #[test]
    fn sqrt2_is_positive() {
        // ζ_8 + ζ_8^7 = √2.
        let s = Scalar::zeta(8, 1) + Scalar::zeta(8, 7);
        assert!(s.is_real());
        assert_eq!(s.sign(), Ok(Sign::Positive));
        assert_eq!((&s * &s), Scalar::from_int(2));
    }

    #[test]
    fn zero_sum_of_roots_is_exactly_zero() {
        let s = Scalar::one() + Scalar::zeta(3, 1) + Scalar::zeta(3, 2);
        assert!(s.is_zero());
        assert_eq!(s.sign(), Ok(Sign::Zero));
    }

    #[test]
    fn imaginary_unit_is_not_real() {
        assert!(matches!(Scalar::i().sign(), Err(ScalarError::NotReal(_))));
    }

    #[test]
    fn tiny_real_value_needs_refinement() {
        // √2 - 1414213562373095/10^15 is about 4.9e-17, well below 2^-50.
        let s = Scalar::zeta(8, 1) + Scalar::zeta(8, 7)
            - Scalar::from_rational(BigRational::new(
                BigInt::from(1_414_213_562_373_095i64),
                BigInt::from(1_000_000_000_000_000i64),
            ));
        assert_eq!(s.sign(), Ok(Sign::Positive));
        assert_eq!((-s).sign(), Ok(Sign::Negative));
    }

    #[test]
    fn sign_cap_zero_exhausts_immediately() {
        let s = Scalar::zeta(8, 1) + Scalar::zeta(8, 7);
        assert_eq!(s.sign_with_cap(0), Err(ScalarError::PrecisionExhausted(0)));
    }

    #[test]
    fn inverse_in_cyclotomic_field() {
        let s = Scalar::from_int(2) + Scalar::zeta(5, 2) - Scalar::zeta(5, 3);
        let t = s.inv().unwrap();
        assert!((&s * &t).is_one());
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn mixed_orders_lift_to_lcm() {
        // i · ζ_3 lives in Q(ζ_12) and equals ζ_12^{3+4}.
        let p = Scalar::i() * Scalar::zeta(3, 1);
        assert_eq!(p.order(), 12);
        assert_eq!(p, Scalar::zeta(12, 7));
        // -1 as ζ_2 collapses to a rational.
        assert_eq!(Scalar::zeta(2, 1), Scalar::from_int(-1));
        assert_eq!(Scalar::zeta(2, 1).order(), 1);
    }

    #[test]
    fn text_form_round_trips() {
        let s = Scalar::new(3, vec![q(1, 2), q(-3, 4)]).unwrap();
        let text = s.to_string();
        assert_eq!(text, "cyclo(3)[1/2, -3/4]");
        assert_eq!(text.parse::<Scalar>().unwrap(), s);
        assert_eq!("cyclo(1)[7]".parse::<Scalar>().unwrap(), Scalar::from_int(7));
        assert_eq!("-2/6".parse::<Scalar>().unwrap(), Scalar::from_ratio(-1, 3));
        assert_eq!(Scalar::from_ratio(-1, 3).to_string(), "-1/3");
        assert!("cyclo(3)[1]".parse::<Scalar>().is_err());
        assert!("cyclo(0)[1]".parse::<Scalar>().is_err());
        assert!("cyclo(4)[1, 1/0]".parse::<Scalar>().is_err());
    }
}
