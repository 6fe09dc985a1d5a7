//! Elements of cyclotomic fields `Q(ζ_N)` with exact rational coefficients.
//!
//! A [`Scalar`] stores its coordinates in the power basis `1, ζ, …, ζ^{φ(N)-1}`
//! after reduction modulo the `N`-th cyclotomic polynomial, so two scalars of
//! the same order are equal exactly when their coefficient vectors agree.
//! Arithmetic through the `std::ops` traits embeds operands of different
//! orders into `Q(ζ_lcm)`; [`cyclotomic_arith`] is the strict variant that
//! refuses mismatched orders.

use std::borrow::Cow;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

const PHI_CACHE: usize = 256;

fn phi_table() -> &'static [Vec<i64>] {
    static TABLE: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table: Vec<Vec<i64>> = vec![Vec::new()];
        for n in 1..=PHI_CACHE {
            let p = compute_cyclotomic(n, &table);
            table.push(p);
        }
        table
    })
}

fn compute_cyclotomic(n: usize, lower: &[Vec<i64>]) -> Vec<i64> {
    // x^n - 1 divided by every Phi_d with d | n, d < n
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = div_monic(&p, &lower[d]);
        }
    }
    p
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for k in (dn..num.len()).rev() {
        let c = rem[k];
        if c != 0 {
            quot[k - dn] = c;
            for (j, dj) in den.iter().enumerate() {
                rem[k - dn + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Coefficients (low degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Cow<'static, [i64]> {
    assert!(n >= 1, "cyclotomic order must be positive");
    let n = n as usize;
    if n <= PHI_CACHE {
        return Cow::Borrowed(&phi_table()[n]);
    }
    let mut lower: Vec<Vec<i64>> = vec![Vec::new(); n];
    for d in 1..n {
        if n.is_multiple_of(d) {
            lower[d] = cyclotomic_polynomial(d as u32).into_owned();
        }
    }
    Cow::Owned(compute_cyclotomic(n, &lower))
}

/// Euler's totient, the degree of `Q(ζ_n)` over `Q`.
pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
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

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

fn reduce_poly(mut poly: Vec<Rational>, order: u32) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(order);
    let d = phi.len() - 1;
    if poly.len() > d {
        for k in (d..poly.len()).rev() {
            if poly[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut poly[k], Rational::zero());
            for (j, &pj) in phi.iter().enumerate().take(d) {
                if pj != 0 {
                    poly[k - d + j] -= &c * Rational::from_integer(BigInt::from(pj));
                }
            }
        }
        poly.truncate(d);
    }
    poly.resize(d, Rational::zero());
    poly
}

/// Exact element of `Q(ζ_order)`.
#[derive(Clone)]
pub struct Scalar {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(k: i64) -> Self {
        Scalar::from_rational(Rational::from_integer(BigInt::from(k)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: Rational) -> Self {
        Scalar { order: 1, coeffs: vec![q] }
    }

    /// Builds `Σ coeffs[k] ζ^k` in `Q(ζ_order)`; exponents past the degree are reduced.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let mut poly = coeffs;
        if poly.len() > order as usize {
            let mut folded = vec![Rational::zero(); order as usize];
            for (k, c) in poly.into_iter().enumerate() {
                folded[k % order as usize] += c;
            }
            poly = folded;
        }
        Scalar { order, coeffs: reduce_poly(poly, order) }
    }

    /// `ζ_order^k`, with negative `k` allowed.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Scalar { order, coeffs: reduce_poly(poly, order) }
    }

    /// Primitive fourth root of unity.
    pub fn i() -> Self {
        Scalar::root_of_unity(4, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Re-expresses the scalar in `Q(ζ_target)`; `order` must divide `target`.
    pub fn embed(&self, target: u32) -> Result<Self> {
        if !target.is_multiple_of(self.order) {
            return Err(Error::OrderMismatch { left: self.order, right: target });
        }
        if target == self.order {
            return Ok(self.clone());
        }
        if self.is_rational() {
            return Ok(Scalar::from_rational(self.coeffs[0].clone()).embed_rational(target));
        }
        let step = (target / self.order) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        Ok(Scalar { order: target, coeffs: reduce_poly(poly, target) })
    }

    fn embed_rational(self, target: u32) -> Self {
        let mut coeffs = vec![Rational::zero(); euler_phi(target)];
        coeffs[0] = self.coeffs.into_iter().next().unwrap_or_else(Rational::zero);
        Scalar { order: target, coeffs }
    }

    /// Drops to order 1 when the value is rational.
    pub fn simplify(self) -> Self {
        if self.order != 1 && self.is_rational() {
            Scalar::from_rational(self.coeffs[0].clone())
        } else {
            self
        }
    }

    fn aligned<'a>(a: &'a Scalar, b: &'a Scalar) -> (Cow<'a, Scalar>, Cow<'a, Scalar>) {
        if a.order == b.order {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let l = lcm(a.order, b.order);
        let ea = if a.order == l { Cow::Borrowed(a) } else { Cow::Owned(a.embed(l).unwrap()) };
        let eb = if b.order == l { Cow::Borrowed(b) } else { Cow::Owned(b.embed(l).unwrap()) };
        (ea, eb)
    }

    fn add_same(&self, other: &Scalar) -> Scalar {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x + y).collect();
        Scalar { order: self.order, coeffs }
    }

    fn sub_same(&self, other: &Scalar) -> Scalar {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x - y).collect();
        Scalar { order: self.order, coeffs }
    }

    fn mul_same(&self, other: &Scalar) -> Scalar {
        if self.coeffs.len() == 1 {
            return Scalar { order: self.order, coeffs: vec![&self.coeffs[0] * &other.coeffs[0]] };
        }
        let d = self.coeffs.len();
        let mut poly = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    poly[i + j] += a * b;
                }
            }
        }
        Scalar { order: self.order, coeffs: reduce_poly(poly, self.order) }
    }

    fn scale_rational(&self, q: &Rational) -> Scalar {
        Scalar { order: self.order, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if self.is_rational() {
            let q = self.coeffs[0].recip();
            return Ok(Scalar { order: self.order, coeffs: Scalar::from_rational(q).embed_rational(self.order).coeffs });
        }
        // Solve (multiplication by self) x = 1 in the power basis.
        let d = self.coeffs.len();
        let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::zero(); d + 1]; d];
        for j in 0..d {
            let basis = Scalar::root_of_unity(self.order, j as i64);
            let col = self.mul_same(&basis);
            for i in 0..d {
                rows[i][j] = col.coeffs[i].clone();
            }
        }
        rows[0][d] = Rational::one();
        let sol = solve_rational_square(rows, d).ok_or(Error::ZeroInverse)?;
        Ok(Scalar { order: self.order, coeffs: sol })
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Scalar::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Some `r` with `r^k = self`, when `self` is a rational multiple of a
    /// root of unity and the rational part has an exact `k`-th root. The
    /// result may live in a larger cyclotomic field.
    pub fn nth_root(&self, k: u32) -> Option<Scalar> {
        assert!(k >= 1);
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        let n = self.order;
        for j in 0..n as i64 {
            let w = self * &Scalar::root_of_unity(n, -j);
            let Some(q) = w.to_rational() else { continue };
            let r = rational_nth_root(&q.abs(), k)?;
            let mut root = Scalar::from_rational(r);
            if j != 0 {
                root = &root * &Scalar::root_of_unity(n * k, j);
            }
            if q.is_negative() {
                root = &root * &Scalar::root_of_unity(2 * k, 1);
            }
            return Some(root.simplify());
        }
        None
    }

    /// Renders the coefficients as `c0 + c1*z + c2*z^2 + …` in `ζ_{target}`.
    pub fn format_at(&self, target: u32) -> Result<String> {
        Ok(self.embed(target)?.to_string())
    }

    /// Parses the `c0 + c1*z + …` notation with `z = ζ_order`.
    pub fn parse(text: &str, order: u32) -> Result<Scalar> {
        let cleaned = text.replace(' ', "");
        if cleaned.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        let chars: Vec<char> = cleaned.chars().collect();
        for (idx, &ch) in chars.iter().enumerate() {
            let prev = if idx == 0 { None } else { Some(chars[idx - 1]) };
            let splits = ch == '+' || (ch == '-' && !matches!(prev, None | Some('+') | Some('*') | Some('^')));
            if splits && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            if ch != '+' {
                cur.push(ch);
            }
        }
        if !cur.is_empty() {
            terms.push(cur);
        }
        let mut poly = vec![Rational::zero(); order as usize];
        for term in terms {
            let (coeff, exp) = parse_term(&term)?;
            poly[exp.rem_euclid(order as i64) as usize] += coeff;
        }
        Ok(Scalar::from_coeffs(order, poly))
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a = BigInt::from_str(a).map_err(|_| bad())?;
            let b = BigInt::from_str(b).map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(a, b))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

fn parse_term(term: &str) -> Result<(Rational, i64)> {
    let Some(zpos) = term.find('z') else {
        return Ok((parse_rational(term)?, 0));
    };
    let head = &term[..zpos];
    let tail = &term[zpos + 1..];
    let coeff = match head {
        "" => Rational::one(),
        "-" => -Rational::one(),
        h => parse_rational(h.strip_suffix('*').ok_or_else(|| Error::Parse(format!("bad term `{term}`")))?)?,
    };
    let exp = if tail.is_empty() {
        1
    } else {
        tail.strip_prefix('^')
            .and_then(|e| e.parse::<i64>().ok())
            .ok_or_else(|| Error::Parse(format!("bad exponent in `{term}`")))?
    };
    Ok((coeff, exp))
}

fn rational_nth_root(q: &Rational, k: u32) -> Option<Rational> {
    let exact = |n: &BigInt| -> Option<BigInt> {
        let r = n.nth_root(k);
        (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
    };
    Some(Rational::new(exact(q.numer())?, exact(q.denom())?))
}

/// Gaussian elimination on an augmented `d x (d+1)` rational system.
fn solve_rational_square(mut rows: Vec<Vec<Rational>>, d: usize) -> Option<Vec<Rational>> {
    for c in 0..d {
        let p = (c..d).find(|&r| !rows[r][c].is_zero())?;
        rows.swap(c, p);
        let inv = rows[c][c].recip();
        for v in rows[c].iter_mut() {
            *v *= &inv;
        }
        let pivot = rows[c].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(rows.into_iter().map(|r| r[d].clone()).collect())
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Scalar::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match k {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{k}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]({})", self.order, self)
    }
}

impl From<i64> for Scalar {
    fn from(k: i64) -> Self {
        Scalar::from_int(k)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        let (a, b) = Scalar::aligned(self, rhs);
        a.add_same(&b)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        let (a, b) = Scalar::aligned(self, rhs);
        a.sub_same(&b)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if rhs.is_rational() {
            return self.scale_rational(&rhs.coeffs[0]);
        }
        if self.is_rational() {
            return rhs.scale_rational(&self.coeffs[0]);
        }
        let (a, b) = Scalar::aligned(self, rhs);
        a.mul_same(&b)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x += y;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x -= y;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

/// Arithmetic operation selector for [`cyclotomic_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Inv,
    Neg,
}

/// Strict field arithmetic: both operands must carry the same ambient order.
pub fn cyclotomic_arith(op: ArithOp, a: &Scalar, b: Option<&Scalar>) -> Result<Scalar> {
    let need_b = || b.ok_or_else(|| Error::Precondition("binary operation needs two operands".into()));
    if let Some(b) = b {
        if b.order != a.order {
            return Err(Error::OrderMismatch { left: a.order, right: b.order });
        }
    }
    match op {
        ArithOp::Add => Ok(a.add_same(need_b()?)),
        ArithOp::Mul => Ok(a.mul_same(need_b()?)),
        ArithOp::Inv => a.inv(),
        ArithOp::Neg => Ok(-a),
    }
}

/// Roots in the ambient field of a polynomial given by its coefficients
/// (low degree first). Candidates are the rational-root-theorem values for
/// rational polynomials and small rational multiples of roots of unity;
/// roots are returned with multiplicity.
pub fn polynomial_roots(poly: &[Scalar]) -> Vec<Scalar> {
    let mut p: Vec<Scalar> = poly.to_vec();
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    let mut roots = Vec::new();
    if p.len() <= 1 {
        return roots;
    }
    while p.len() > 1 && p[0].is_zero() {
        roots.push(Scalar::zero());
        p.remove(0);
    }
    let order = p.iter().fold(4u32, |acc, c| lcm(acc, c.order()));
    let mut candidates: Vec<Scalar> = Vec::new();
    if p.iter().all(Scalar::is_rational) {
        candidates.extend(rational_root_candidates(&p));
    }
    for q in [1i64, 2, 3] {
        for den in [1i64, 2, 3] {
            for j in 0..order as i64 {
                candidates.push(&Scalar::from_ratio(q, den) * &Scalar::root_of_unity(order, j));
            }
        }
    }
    let mut progressed = true;
    while p.len() > 1 && progressed {
        progressed = false;
        for c in &candidates {
            if let Some(q) = deflate(&p, c) {
                roots.push(c.clone().simplify());
                p = q;
                progressed = true;
                break;
            }
        }
    }
    roots
}

fn deflate(p: &[Scalar], r: &Scalar) -> Option<Vec<Scalar>> {
    // synthetic division; returns quotient when r is a root
    let n = p.len() - 1;
    let mut q = vec![Scalar::zero(); n];
    let mut acc = p[n].clone();
    for k in (0..n).rev() {
        q[k] = acc.clone();
        acc = &(&acc * r) + &p[k];
    }
    acc.is_zero().then_some(q)
}

fn rational_root_candidates(p: &[Scalar]) -> Vec<Scalar> {
    let coeffs: Vec<Rational> = p.iter().map(|c| c.to_rational().unwrap()).collect();
    let lcm_den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Rational::from_integer(lcm_den.clone())).to_integer()).collect();
    let a0 = ints[0].abs();
    let an = ints[ints.len() - 1].abs();
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let Some(v) = n.to_u64() else { return vec![BigInt::one()] };
        if v > 1_000_000 {
            return vec![BigInt::one()];
        }
        (1..=v).filter(|d| v % d == 0).map(BigInt::from).collect()
    };
    let mut out = Vec::new();
    for a in divisors(&a0) {
        for b in divisors(&an) {
            let q = Rational::new(a.clone(), b.clone());
            out.push(Scalar::from_rational(q.clone()));
            out.push(Scalar::from_rational(-q));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials_small() {
        assert_eq!(&*cyclotomic_polynomial(1), &[-1, 1]);
        assert_eq!(&*cyclotomic_polynomial(3), &[1, 1, 1]);
        assert_eq!(&*cyclotomic_polynomial(4), &[1, 0, 1]);
        assert_eq!(&*cyclotomic_polynomial(12), &[1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(300).len() - 1, euler_phi(300));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = Scalar::i();
        assert_eq!(&i * &i, Scalar::from_int(-1));
    }

    #[test]
    fn root_of_unity_inverse() {
        for n in [3u32, 4, 5, 8, 12] {
            for k in 0..n as i64 {
                let z = Scalar::root_of_unity(n, k);
                assert_eq!(z.inv().unwrap(), Scalar::root_of_unity(n, n as i64 - k));
            }
        }
    }

    #[test]
    fn zeta3_plus_square_is_minus_one() {
        // 1 + x + x^2 = 0 in Q(ζ_3)
        let z = Scalar::root_of_unity(3, 1);
        let z2 = Scalar::root_of_unity(3, 2);
        assert_eq!(&z + &z2, Scalar::from_int(-1));
    }

    #[test]
    fn strict_arith_rejects_mixed_orders() {
        let a = Scalar::root_of_unity(4, 1);
        let b = Scalar::root_of_unity(3, 1);
        assert!(matches!(cyclotomic_arith(ArithOp::Add, &a, Some(&b)), Err(Error::OrderMismatch { .. })));
        assert_eq!(cyclotomic_arith(ArithOp::Inv, &Scalar::zero(), None), Err(Error::ZeroInverse));
        let m = cyclotomic_arith(ArithOp::Mul, &a, Some(&a)).unwrap();
        assert_eq!(m, Scalar::from_int(-1));
    }

    #[test]
    fn mixed_order_equality_embeds() {
        let i4 = Scalar::i();
        let i12 = Scalar::root_of_unity(12, 3);
        assert_eq!(i4, i12);
        assert_ne!(Scalar::root_of_unity(12, 1), i4);
    }

    #[test]
    fn primitive_roots_are_primitive() {
        for n in [2u32, 3, 4, 6, 8, 9, 16] {
            let z = Scalar::root_of_unity(n, 1);
            for k in 1..n as i64 {
                assert!(!z.pow(k).unwrap().is_one(), "ζ_{n}^{k} = 1");
            }
            assert!(z.pow(n as i64).unwrap().is_one());
        }
    }

    #[test]
    fn parse_round_trip() {
        let s = Scalar::parse("1/2 + -3*z^2 + z", 8).unwrap();
        assert_eq!(Scalar::parse(&s.to_string(), 8).unwrap(), s);
        assert_eq!(Scalar::parse("z^4", 4).unwrap(), Scalar::one());
        assert_eq!(Scalar::parse("-z", 4).unwrap(), -Scalar::i());
        assert!(Scalar::parse("1/0", 4).is_err());
        assert!(Scalar::parse("", 4).is_err());
    }

    #[test]
    fn nth_roots() {
        let r = Scalar::from_int(-4).nth_root(2).unwrap();
        assert_eq!(&r * &r, Scalar::from_int(-4));
        let i = Scalar::i();
        let r = i.nth_root(4).unwrap();
        assert_eq!(r.pow(4).unwrap(), i);
        assert!(Scalar::from_int(2).nth_root(2).is_none());
    }

    #[test]
    fn roots_of_quadratics() {
        // x^2 + 1
        let roots = polynomial_roots(&[Scalar::one(), Scalar::zero(), Scalar::one()]);
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&Scalar::i()) && roots.contains(&-Scalar::i()));
        // x^2 - 3x + 2
        let roots = polynomial_roots(&[Scalar::from_int(2), Scalar::from_int(-3), Scalar::one()]);
        assert!(roots.contains(&Scalar::from_int(1)) && roots.contains(&Scalar::from_int(2)));
    }
}
