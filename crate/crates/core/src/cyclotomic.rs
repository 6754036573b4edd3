//! Exact arithmetic in cyclotomic fields Q(ζ_m).
//!
//! An element is stored in the power basis `1, ζ, …, ζ^{φ(m)-1}` modulo the
//! m-th cyclotomic polynomial, with a common positive denominator. Every value
//! is kept in canonical form, so field equality is coefficient equality.
//!
//! Conductors `m ≡ 2 (mod 4)` are replaced by `m/2` (the two fields coincide),
//! which makes e.g. `ζ_6` and `-ζ_3^2` literally the same representation.
//!
//! Coefficients live in `i64` while they fit and silently move to `BigInt`
//! when an operation would overflow.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::CycError;

/// Data shared by every element of one field Q(ζ_m).
#[derive(Debug)]
pub struct CyclotomicField {
    conductor: u32,
    degree: usize,
    /// Coefficients of Φ_m, lowest degree first (monic).
    modulus: Vec<i64>,
    /// `powers[k]` is `x^k mod Φ_m` for `0 ≤ k < m`, stored sparsely.
    powers: Vec<Vec<(usize, i64)>>,
}

impl CyclotomicField {
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// φ(m), the dimension over Q.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of the cyclotomic polynomial Φ_m, constant term first.
    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }
}

/// Replaces `m ≡ 2 (mod 4)` with `m/2`; both give the same field.
pub fn canonical_conductor(m: u32) -> u32 {
    assert!(m >= 1, "conductor must be positive");
    if m % 4 == 2 {
        m / 2
    } else {
        m
    }
}

fn divisors(n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

/// Φ_m by dividing `x^m - 1` by Φ_d for every proper divisor d of m.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    fn rec(m: u32, memo: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
        if let Some(p) = memo.get(&m) {
            return p.clone();
        }
        let mut poly = vec![0i64; m as usize + 1];
        poly[0] = -1;
        poly[m as usize] = 1;
        for d in divisors(m) {
            if d == m {
                continue;
            }
            let div = rec(d, memo);
            poly = exact_div_monic(&poly, &div);
        }
        memo.insert(m, poly.clone());
        poly
    }
    rec(m, &mut HashMap::new())
}

/// Exact division of integer polynomials by a monic divisor.
fn exact_div_monic(num: &[i64], div: &[i64]) -> Vec<i64> {
    let dd = div.len() - 1;
    debug_assert_eq!(div[dd], 1);
    let mut rem: Vec<i128> = num.iter().map(|&c| c as i128).collect();
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd];
        quot[k] = i64::try_from(c).expect("cyclotomic coefficient overflow");
        if c != 0 {
            for (i, &d) in div.iter().enumerate() {
                rem[k + i] -= c * d as i128;
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact polynomial division");
    quot
}

fn build_field(m: u32) -> CyclotomicField {
    let modulus = cyclotomic_polynomial(m);
    let degree = modulus.len() - 1;
    let mut powers = Vec::with_capacity(m as usize);
    // x^k for k < degree is itself; beyond that multiply by x and reduce.
    let mut cur = vec![0i64; degree];
    cur[0] = 1;
    for _ in 0..m {
        powers.push(
            cur.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i, c))
                .collect::<Vec<_>>(),
        );
        // cur <- x * cur mod Φ_m
        let top = cur[degree - 1];
        for i in (1..degree).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..degree {
                cur[i] -= top * modulus[i];
            }
        }
    }
    CyclotomicField {
        conductor: m,
        degree,
        modulus,
        powers,
    }
}

/// Returns the shared field data for conductor `m` (canonicalized).
pub fn field(m: u32) -> Arc<CyclotomicField> {
    static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
    let m = canonical_conductor(m);
    let cache = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("field cache poisoned");
    guard
        .entry(m)
        .or_insert_with(|| Arc::new(build_field(m)))
        .clone()
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Coeffs {
    Small { num: Vec<i64>, den: i64 },
    Big { num: Vec<BigInt>, den: BigInt },
}

/// An exact element of Q(ζ_m).
#[derive(Clone)]
pub struct CycNumber {
    field: Arc<CyclotomicField>,
    coeffs: Coeffs,
}

/// The four field operations accepted by [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic, embedding both operands into a common field first.
pub fn arith(op: ArithOp, a: &CycNumber, b: &CycNumber) -> Result<CycNumber, CycError> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.div(b),
    }
}

/// ζ_m^e in canonical form.
pub fn root_of_unity(m: u32, e: i64) -> CycNumber {
    CycNumber::root_of_unity(m, e)
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn small_from_i128(num: Vec<i128>, den: i128) -> Option<Coeffs> {
    debug_assert!(den != 0);
    let mut g = den;
    for &c in &num {
        if c != 0 {
            g = gcd_i128(g, c);
            if g == 1 {
                break;
            }
        }
    }
    let g = if den < 0 { -g.abs() } else { g.abs() };
    let den = den / g;
    let mut out = Vec::with_capacity(num.len());
    for c in num {
        out.push(i64::try_from(c / g).ok()?);
    }
    let den = i64::try_from(den).ok()?;
    if out.iter().all(|&c| c == 0) {
        return Some(Coeffs::Small { num: out, den: 1 });
    }
    Some(Coeffs::Small { num: out, den })
}

fn normalize_big(num: Vec<BigInt>, den: BigInt) -> Coeffs {
    debug_assert!(!den.is_zero());
    if num.iter().all(|c| c.is_zero()) {
        return Coeffs::Small {
            num: vec![0; num.len()],
            den: 1,
        };
    }
    let mut g = den.abs();
    for c in &num {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    if den.is_negative() {
        g = -g;
    }
    let num: Vec<BigInt> = num.into_iter().map(|c| c / &g).collect();
    let den = den / g;
    // demote when everything fits
    let small: Option<Vec<i64>> = num.iter().map(|c| c.to_i64()).collect();
    match (small, den.to_i64()) {
        (Some(num), Some(den)) => Coeffs::Small { num, den },
        _ => Coeffs::Big { num, den },
    }
}

impl Coeffs {
    fn to_big(&self) -> (Vec<BigInt>, BigInt) {
        match self {
            Coeffs::Small { num, den } => {
                (num.iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(*den))
            }
            Coeffs::Big { num, den } => (num.clone(), den.clone()),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Coeffs::Small { num, .. } => num.iter().all(|&c| c == 0),
            Coeffs::Big { num, .. } => num.iter().all(|c| c.is_zero()),
        }
    }
}

impl CycNumber {
    fn from_parts(field: Arc<CyclotomicField>, coeffs: Coeffs) -> Self {
        CycNumber { field, coeffs }
    }

    /// The zero element of Q(ζ_m).
    pub fn zero(m: u32) -> Self {
        let field = field(m);
        let d = field.degree;
        Self::from_parts(field, Coeffs::Small { num: vec![0; d], den: 1 })
    }

    pub fn one(m: u32) -> Self {
        Self::from_int(m, 1)
    }

    pub fn from_int(m: u32, v: i64) -> Self {
        let field = field(m);
        let mut num = vec![0; field.degree];
        num[0] = v;
        Self::from_parts(field, Coeffs::Small { num, den: 1 })
    }

    /// The rational `num/den` viewed inside Q(ζ_m).
    pub fn from_ratio(m: u32, num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let field = field(m);
        let mut v = vec![0i128; field.degree];
        v[0] = num as i128;
        let coeffs = small_from_i128(v, den as i128).expect("rational fits");
        Self::from_parts(field, coeffs)
    }

    /// Builds an element from power-basis coordinates (reduced modulo Φ_m).
    pub fn from_coeffs(m: u32, coeffs: &[BigRational]) -> Self {
        let field = field(m);
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let mut acc = vec![BigInt::zero(); field.degree];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scaled = c.numer() * (&den / c.denom());
            let m = field.conductor as usize;
            for &(i, t) in &field.powers[k % m] {
                acc[i] += &scaled * t;
            }
        }
        let coeffs = normalize_big(acc, den);
        Self::from_parts(field, coeffs)
    }

    /// ζ_m^e; the exponent is reduced modulo m.
    pub fn root_of_unity(m: u32, e: i64) -> Self {
        assert!(m >= 1, "conductor must be positive");
        let e = e.rem_euclid(m as i64);
        if m % 4 == 2 {
            // ζ_{2k} = -ζ_k^{(k+1)/2} for odd k
            let k = (m / 2) as i64;
            let base = Self::root_of_unity(k as u32, (e * ((k + 1) / 2)).rem_euclid(k));
            return if e % 2 == 0 { base } else { -&base };
        }
        let field = field(m);
        let mut num = vec![0i64; field.degree];
        for &(i, c) in &field.powers[e as usize] {
            num[i] = c;
        }
        Self::from_parts(field, Coeffs::Small { num, den: 1 })
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn is_one(&self) -> bool {
        match &self.coeffs {
            Coeffs::Small { num, den } => {
                *den == 1 && num[0] == 1 && num[1..].iter().all(|&c| c == 0)
            }
            Coeffs::Big { .. } => false,
        }
    }

    /// Power-basis coordinates as exact rationals.
    pub fn coefficients(&self) -> Vec<BigRational> {
        let (num, den) = self.coeffs.to_big();
        num.into_iter()
            .map(|c| BigRational::new(c, den.clone()))
            .collect()
    }

    /// Same value viewed in Q(ζ_target); `target` must be a multiple of the conductor.
    pub fn embed(&self, target: u32) -> CycNumber {
        let target = canonical_conductor(target);
        let m1 = self.field.conductor;
        if target == m1 {
            return self.clone();
        }
        assert!(
            target % m1 == 0,
            "cannot embed conductor {m1} into {target}"
        );
        let step = (target / m1) as usize;
        let tf = field(target);
        let (num, den) = self.coeffs.to_big();
        let mut acc = vec![BigInt::zero(); tf.degree];
        for (k, c) in num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, t) in &tf.powers[(k * step) % target as usize] {
                acc[i] += c * t;
            }
        }
        let coeffs = normalize_big(acc, den);
        Self::from_parts(tf, coeffs)
    }

    fn align(a: &CycNumber, b: &CycNumber) -> (CycNumber, CycNumber) {
        let m = (a.field.conductor as u64).lcm(&(b.field.conductor as u64));
        let m = u32::try_from(m).expect("conductor overflow");
        (a.embed(m), b.embed(m))
    }

    fn same_field(&self, other: &CycNumber) -> bool {
        self.field.conductor == other.field.conductor
    }

    fn add_same(&self, other: &CycNumber, negate: bool) -> CycNumber {
        if let (Coeffs::Small { num: a, den: da }, Coeffs::Small { num: b, den: db }) =
            (&self.coeffs, &other.coeffs)
        {
            let sign: i128 = if negate { -1 } else { 1 };
            let (da, db) = (*da as i128, *db as i128);
            let fast = if da == db {
                let v: Vec<i128> = a
                    .iter()
                    .zip(b)
                    .map(|(&x, &y)| x as i128 + sign * y as i128)
                    .collect();
                small_from_i128(v, da)
            } else {
                let v: Vec<i128> = a
                    .iter()
                    .zip(b)
                    .map(|(&x, &y)| x as i128 * db + sign * y as i128 * da)
                    .collect();
                small_from_i128(v, da * db)
            };
            if let Some(c) = fast {
                return Self::from_parts(self.field.clone(), c);
            }
        }
        let (a, da) = self.coeffs.to_big();
        let (b, db) = other.coeffs.to_big();
        let v: Vec<BigInt> = a
            .iter()
            .zip(&b)
            .map(|(x, y)| {
                if negate {
                    x * &db - y * &da
                } else {
                    x * &db + y * &da
                }
            })
            .collect();
        Self::from_parts(self.field.clone(), normalize_big(v, da * db))
    }

    fn mul_small(&self, a: &[i64], da: i64, b: &[i64], db: i64) -> Option<Coeffs> {
        let f = &self.field;
        let m = f.conductor as usize;
        let mut acc = vec![0i128; m];
        let nb: Vec<(usize, i128)> = b
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c as i128))
            .collect();
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = x as i128;
            for &(j, y) in &nb {
                let k = (i + j) % m;
                acc[k] = acc[k].checked_add(x.checked_mul(y)?)?;
            }
        }
        let d = f.degree;
        let mut out = vec![0i128; d];
        out.copy_from_slice(&acc[..d]);
        for (k, &c) in acc.iter().enumerate().skip(d) {
            if c == 0 {
                continue;
            }
            for &(i, t) in &f.powers[k] {
                out[i] = out[i].checked_add(c.checked_mul(t as i128)?)?;
            }
        }
        small_from_i128(out, (da as i128) * (db as i128))
    }

    fn mul_same(&self, other: &CycNumber) -> CycNumber {
        if let (Coeffs::Small { num: a, den: da }, Coeffs::Small { num: b, den: db }) =
            (&self.coeffs, &other.coeffs)
        {
            if let Some(c) = self.mul_small(a, *da, b, *db) {
                return Self::from_parts(self.field.clone(), c);
            }
        }
        let f = &self.field;
        let m = f.conductor as usize;
        let (a, da) = self.coeffs.to_big();
        let (b, db) = other.coeffs.to_big();
        let mut acc = vec![BigInt::zero(); m];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                acc[(i + j) % m] += x * y;
            }
        }
        let mut out: Vec<BigInt> = acc[..f.degree].to_vec();
        for (k, c) in acc.iter().enumerate().skip(f.degree) {
            if c.is_zero() {
                continue;
            }
            for &(i, t) in &f.powers[k] {
                out[i] += c * t;
            }
        }
        Self::from_parts(self.field.clone(), normalize_big(out, da * db))
    }

    /// Multiplicative inverse, by solving `self · y = 1` in the power basis.
    pub fn inv(&self) -> Result<CycNumber, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        let d = self.field.degree;
        let m = self.field.conductor as usize;
        let (num, den) = self.coeffs.to_big();
        let nonzero: Vec<usize> = (0..d).filter(|&i| !num[i].is_zero()).collect();
        if nonzero.len() == 1 {
            // c·ζ^k  ->  (1/c)·ζ^{m-k}
            let k = nonzero[0];
            let c = BigRational::new(num[k].clone(), den);
            let mut coeffs = vec![BigRational::zero(); m];
            coeffs[(m - k) % m] = c.recip();
            return Ok(CycNumber::from_coeffs(self.field.conductor, &coeffs));
        }
        // column j holds self·ζ^j
        let mut mat: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); d + 1]; d];
        for j in 0..d {
            let col = (self * &CycNumber::root_of_unity(self.field.conductor, j as i64)).coefficients();
            for i in 0..d {
                mat[i][j] = col[i].clone();
            }
        }
        mat[0][d] = BigRational::one();
        let sol = solve_rational(mat, d).ok_or(CycError::DivisionByZero)?;
        Ok(CycNumber::from_coeffs(self.field.conductor, &sol))
    }

    /// `self / other`; division by zero is an error value.
    pub fn div(&self, other: &CycNumber) -> Result<CycNumber, CycError> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<CycNumber, CycError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut result = CycNumber::one(self.field.conductor);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(result)
    }

    /// Smallest k ≥ 1 with `self^k = 1`, or `None` if `self` is not a root of unity.
    ///
    /// Roots of unity in Q(ζ_m) have order dividing `lcm(2, m)`, so only those
    /// divisors are tried.
    pub fn multiplicative_order(&self) -> Result<Option<u64>, CycError> {
        if self.is_zero() {
            return Err(CycError::ZeroHasNoOrder);
        }
        let m = self.field.conductor;
        let bound = if m % 2 == 1 { 2 * m } else { m };
        for d in divisors(bound) {
            if self.pow(d as i64)?.is_one() {
                return Ok(Some(d as u64));
            }
        }
        Ok(None)
    }

    /// Total order used to sort multisets deterministically.
    pub fn canonical_cmp(&self, other: &CycNumber) -> Ordering {
        let (a, b) = if self.same_field(other) {
            (self.clone(), other.clone())
        } else {
            Self::align(self, other)
        };
        let (na, da) = a.coeffs.to_big();
        let (nb, db) = b.coeffs.to_big();
        na.cmp(&nb).then(da.cmp(&db))
    }

    /// Renders the value as a polynomial in `symbol` (standing for ζ_m).
    pub fn render(&self, symbol: &str) -> String {
        let (num, den) = self.coeffs.to_big();
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in num.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => symbol.to_string(),
                _ => format!("{symbol}^{k}"),
            };
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{sign} {body}"));
            }
        }
        let poly = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        };
        if den.is_one() {
            poly
        } else {
            format!("({poly})/{den}")
        }
    }
}

/// Gaussian elimination on an augmented `d × (d+1)` system; `None` if singular.
fn solve_rational(mut mat: Vec<Vec<BigRational>>, d: usize) -> Option<Vec<BigRational>> {
    for col in 0..d {
        let pivot = (col..d).find(|&r| !mat[r][col].is_zero())?;
        mat.swap(col, pivot);
        let inv = mat[col][col].recip();
        for c in col..=d {
            mat[col][c] = &mat[col][c] * &inv;
        }
        for r in 0..d {
            if r != col && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in col..=d {
                    let t = &mat[col][c] * &factor;
                    mat[r][c] -= t;
                }
            }
        }
    }
    Some(mat.into_iter().map(|row| row[d].clone()).collect())
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.same_field(other) {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = Self::align(self, other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for CycNumber {}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]{{{}}}", self.field.conductor, self.render("z"))
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("z"))
    }
}

impl Serialize for CycNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render("z"))
    }
}

impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &'a CycNumber) -> CycNumber {
        if self.same_field(rhs) {
            self.add_same(rhs, false)
        } else {
            let (a, b) = CycNumber::align(self, rhs);
            a.add_same(&b, false)
        }
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &'a CycNumber) -> CycNumber {
        if self.same_field(rhs) {
            self.add_same(rhs, true)
        } else {
            let (a, b) = CycNumber::align(self, rhs);
            a.add_same(&b, true)
        }
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &'a CycNumber) -> CycNumber {
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.same_field(rhs) {
            self.mul_same(rhs)
        } else {
            let (a, b) = CycNumber::align(self, rhs);
            a.mul_same(&b)
        }
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        let coeffs = match &self.coeffs {
            Coeffs::Small { num, den } => match num.iter().map(|c| c.checked_neg()).collect() {
                Some(num) => Coeffs::Small { num, den: *den },
                None => {
                    let (n, d) = self.coeffs.to_big();
                    normalize_big(n.into_iter().map(|c| -c).collect(), d)
                }
            },
            Coeffs::Big { num, den } => {
                normalize_big(num.iter().map(|c| -c).collect(), den.clone())
            }
        };
        CycNumber::from_parts(self.field.clone(), coeffs)
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

impl AddAssign<&CycNumber> for CycNumber {
    fn add_assign(&mut self, rhs: &CycNumber) {
        if self.same_field(rhs) {
            if let (Coeffs::Small { num: a, den: da }, Coeffs::Small { num: b, den: db }) =
                (&mut self.coeffs, &rhs.coeffs)
            {
                if *da == 1 && *db == 1 {
                    let mut ok = true;
                    let mut out = a.clone();
                    for (x, &y) in out.iter_mut().zip(b) {
                        match x.checked_add(y) {
                            Some(v) => *x = v,
                            None => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if ok {
                        *a = out;
                        return;
                    }
                }
            }
        }
        *self = &*self + rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials_small() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).iter().any(|&c| c == -2));
    }

    #[test]
    fn root_of_unity_examples() {
        assert_eq!(root_of_unity(4, 2), CycNumber::from_int(4, -1));
        for m in 1..30 {
            assert!(root_of_unity(m, 0).is_one());
        }
        let z = root_of_unity(9, 3);
        assert_eq!(z.multiplicative_order().unwrap(), Some(3));
        assert_eq!(z, root_of_unity(3, 1));
    }

    #[test]
    fn order_matches_formula_by_repeated_multiplication() {
        for m in [4u32, 8, 9, 12, 16, 25] {
            for e in 0..m as i64 {
                let z = root_of_unity(m, e);
                // brute force: first k with z^k = 1
                let mut acc = z.clone();
                let mut k = 1u64;
                while !acc.is_one() {
                    acc = &acc * &z;
                    k += 1;
                }
                let expected = m as u64 / (m as u64).gcd(&(e as u64));
                assert_eq!(k, expected);
                assert_eq!(z.multiplicative_order().unwrap(), Some(expected));
            }
        }
    }

    #[test]
    fn geometric_sum_vanishes() {
        for m in 2..20u32 {
            let mut s = CycNumber::zero(m);
            for t in 0..m as i64 {
                s += &root_of_unity(m, t);
            }
            assert!(s.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn inverse_pairs_and_division() {
        for m in [3u32, 4, 9, 16, 25] {
            let z = root_of_unity(m, 1);
            assert!((&z * &root_of_unity(m, m as i64 - 1)).is_one());
        }
        let i = root_of_unity(4, 1);
        let q = CycNumber::one(4).div(&i).unwrap();
        assert_eq!(q, root_of_unity(4, 3));
        assert_eq!(q, -&i);
        assert_eq!(
            CycNumber::one(4).div(&CycNumber::zero(4)),
            Err(CycError::DivisionByZero)
        );
    }

    #[test]
    fn zero_tests() {
        assert!(CycNumber::zero(7).is_zero());
        assert!((&root_of_unity(4, 1) + &root_of_unity(4, 3)).is_zero());
        assert!(!(&root_of_unity(9, 1) - &root_of_unity(9, 2)).is_zero());
    }

    #[test]
    fn canonical_across_conductors() {
        let a = root_of_unity(6, 1);
        let b = -&root_of_unity(3, 2);
        assert_eq!(a.conductor(), b.conductor());
        assert_eq!(a.coefficients(), b.coefficients());
        // mixed conductors meet in the lcm
        let i = root_of_unity(4, 1);
        let w = root_of_unity(3, 1);
        let p = &i * &w;
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, root_of_unity(12, 3 + 4));
    }

    #[test]
    fn rationals_are_not_roots_of_unity() {
        assert_eq!(CycNumber::one(9).multiplicative_order().unwrap(), Some(1));
        assert_eq!(CycNumber::from_int(9, 2).multiplicative_order().unwrap(), None);
        assert_eq!(CycNumber::from_int(1, -1).multiplicative_order().unwrap(), Some(2));
        assert!(CycNumber::zero(9).multiplicative_order().is_err());
    }

    #[test]
    fn big_fallback_roundtrip() {
        let big = CycNumber::from_int(9, i64::MAX);
        let sq = &big * &big;
        let back = sq.div(&big).unwrap();
        assert_eq!(back, big);
        let tiny = CycNumber::from_ratio(9, 1, i64::MAX);
        assert!((&tiny * &big).is_one());
    }

    #[test]
    fn render_polynomials() {
        assert_eq!(root_of_unity(9, 2).render("z"), "z^2");
        assert_eq!(CycNumber::from_ratio(9, -3, 4).render("z"), "(-3)/4");
        let v = &root_of_unity(9, 1) - &CycNumber::from_int(9, 2);
        assert_eq!(v.to_string(), "z - 2");
    }
}
