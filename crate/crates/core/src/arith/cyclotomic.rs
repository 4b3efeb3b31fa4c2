use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{bigint_gcd_slice, lcm_u64, parse_rational, rat, rat_to_string, solve_rational, Rational};
use crate::error::{Error, Result};

/// Q(zeta_n) with its defining polynomial Phi_n.
#[derive(Debug)]
struct CycField {
    n: u64,
    phi: usize,
    /// Phi_n coefficients, degree 0 upward; monic with integer coefficients.
    modulus: Vec<BigInt>,
}

static FIELDS: OnceLock<RwLock<HashMap<u64, Arc<CycField>>>> = OnceLock::new();

fn field(n: u64) -> Arc<CycField> {
    assert!(n >= 1, "conductor must be positive");
    let cache = FIELDS.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().expect("field cache poisoned").get(&n) {
        return f.clone();
    }
    let modulus = compute_cyclotomic(n);
    let f = Arc::new(CycField {
        n,
        phi: modulus.len() - 1,
        modulus,
    });
    cache
        .write()
        .expect("field cache poisoned")
        .entry(n)
        .or_insert(f)
        .clone()
}

// (x^n - 1) divided by Phi_d for every proper divisor d of n.
fn compute_cyclotomic(n: u64) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            p = div_monic(&p, &field(d).modulus);
        }
    }
    p
}

fn div_monic(p: &[BigInt], m: &[BigInt]) -> Vec<BigInt> {
    let dm = m.len() - 1;
    let mut rem = p.to_vec();
    let mut q = vec![BigInt::zero(); p.len() - dm];
    for i in (0..q.len()).rev() {
        let c = rem[i + dm].clone();
        if !c.is_zero() {
            for (j, mc) in m.iter().enumerate() {
                rem[i + j] -= &c * mc;
            }
        }
        q[i] = c;
    }
    debug_assert!(rem[..dm].iter().all(|c| c.is_zero()));
    q
}

/// Coefficients of the n-th cyclotomic polynomial, degree 0 upward.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    field(n).modulus.clone()
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

impl CycField {
    /// Reduces a polynomial in zeta_n (any length) modulo x^n - 1 and then Phi_n.
    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        let n = self.n as usize;
        if v.len() > n {
            for i in n..v.len() {
                let c = std::mem::take(&mut v[i]);
                v[i % n] += c;
            }
            v.truncate(n);
        }
        let phi = self.phi;
        for top in (phi..v.len()).rev() {
            let c = std::mem::take(&mut v[top]);
            if c.is_zero() {
                continue;
            }
            for j in 0..phi {
                v[top - phi + j] -= &c * &self.modulus[j];
            }
        }
        v.resize(phi, BigInt::zero());
        v
    }
}

/// Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1), stored as
/// integer coefficients over one positive common denominator.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CycField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    fn from_parts(field: Arc<CycField>, num: Vec<BigInt>, den: BigInt) -> Self {
        debug_assert_eq!(num.len(), field.phi);
        let mut x = CycNum { field, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for c in self.num.iter_mut() {
                *c = -&*c;
            }
        }
        let g = bigint_gcd_slice(&self.num);
        if g.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let g = g.gcd(&self.den);
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn zero() -> Self {
        CycNum::from_int(0)
    }

    pub fn one() -> Self {
        CycNum::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        CycNum::from_rational(&rat(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        CycNum::from_parts(field(1), vec![n], BigInt::one())
    }

    pub fn from_rational(q: &Rational) -> Self {
        CycNum::from_parts(field(1), vec![q.numer().clone()], q.denom().clone())
    }

    /// zeta_n^m, reduced into Q(zeta_n).
    pub fn root_of_unity(n: u64, m: i64) -> Self {
        let f = field(n);
        let e = m.rem_euclid(n as i64) as usize;
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::one();
        let num = f.reduce(v);
        CycNum::from_parts(f, num, BigInt::one())
    }

    /// Builds sum_i coeffs[i] * zeta_n^i; any length is accepted and reduced.
    pub fn from_coeffs(n: u64, coeffs: &[Rational]) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("conductor must be at least 1"));
        }
        let f = field(n);
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let v: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let num = f.reduce(v);
        Ok(CycNum::from_parts(f, num, den))
    }

    pub fn conductor(&self) -> u64 {
        self.field.n
    }

    /// Power-basis coefficients, length phi(conductor).
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    /// The value as a rational integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.den.is_one()).then(|| self.num[0].clone())
    }

    /// Re-expresses the value in Q(zeta_l); `l` must be a multiple of the conductor.
    pub fn lift(&self, l: u64) -> Result<CycNum> {
        let n = self.field.n;
        if l % n != 0 {
            return Err(Error::invalid(format!(
                "cannot lift conductor {n} to {l}: not a multiple"
            )));
        }
        if l == n {
            return Ok(self.clone());
        }
        let step = (l / n) as usize;
        let target = field(l);
        let mut v = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (i, c) in self.num.iter().enumerate() {
            v[i * step] = c.clone();
        }
        let num = target.reduce(v);
        Ok(CycNum::from_parts(target, num, self.den.clone()))
    }

    fn common(&self, other: &CycNum) -> (CycNum, CycNum) {
        let (a, b) = (self.field.n, other.field.n);
        if a == b {
            return (self.clone(), other.clone());
        }
        let l = lcm_u64(a, b);
        (self.lift(l).unwrap(), other.lift(l).unwrap())
    }

    /// Applies zeta -> zeta^a; `a` must be coprime to the conductor.
    pub fn galois(&self, a: i64) -> CycNum {
        let n = self.field.n as i64;
        debug_assert_eq!(a.rem_euclid(n).gcd(&n), 1);
        let mut v = vec![BigInt::zero(); n as usize];
        for (i, c) in self.num.iter().enumerate() {
            let e = ((i as i64) * a).rem_euclid(n) as usize;
            v[e] += c;
        }
        let num = self.field.reduce(v);
        CycNum::from_parts(self.field.clone(), num, self.den.clone())
    }

    /// Complex conjugation, zeta -> zeta^-1.
    pub fn conj(&self) -> CycNum {
        self.galois(-1)
    }

    fn other_conjugates_product(&self) -> CycNum {
        let n = self.field.n as i64;
        let mut acc = CycNum::one();
        for a in 2..n.max(2) {
            if a.gcd(&n) == 1 {
                acc = &acc * &self.galois(a);
            }
        }
        acc
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        (self * &self.other_conjugates_product())
            .to_rational()
            .expect("norm is rational")
    }

    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.other_conjugates_product();
        let nrm = (self * &p).to_rational().expect("norm is rational");
        Ok(p.scale(&nrm.recip()))
    }

    pub fn checked_div(&self, rhs: &CycNum) -> Result<CycNum> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, q: &Rational) -> CycNum {
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        CycNum::from_parts(self.field.clone(), num, &self.den * q.denom())
    }

    pub fn pow(&self, e: u32) -> CycNum {
        let mut base = self.clone();
        let mut acc = CycNum::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Rewrites the value over the smallest conductor dividing the current one.
    pub fn minimize(&self) -> CycNum {
        let n = self.field.n;
        for d in (1..n).filter(|d| n % d == 0) {
            let fixed = (1..n as i64)
                .filter(|&a| a.gcd(&(n as i64)) == 1 && (a as u64) % d == 1 % d)
                .all(|a| self.galois(a) == *self);
            if !fixed {
                continue;
            }
            let phi_d = field(d).phi;
            let cols: Vec<Vec<Rational>> = (0..phi_d)
                .map(|j| CycNum::root_of_unity(d, j as i64).lift(n).unwrap().coeffs())
                .collect();
            if let Some(y) = solve_rational(&cols, &self.coeffs()) {
                return CycNum::from_coeffs(d, &y).expect("positive conductor");
            }
        }
        self.clone()
    }

    /// Numeric value via the principal embedding zeta -> exp(2 pi i / N).
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.field.n as f64;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let (mut re, mut im) = (0.0, 0.0);
        for (i, c) in self.num.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            let th = 2.0 * std::f64::consts::PI * i as f64 / n;
            re += c * th.cos();
            im += c * th.sin();
        }
        (re, im)
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &CycNum) -> bool {
        if self.field.n == other.field.n {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = self.common(other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}

/// `c0 + c1*z + c2*z^2; conductor=N`, omitting zero terms.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => rat_to_string(c),
                1 => format!("{}*z", rat_to_string(c)),
                _ => format!("{}*z^{i}", rat_to_string(c)),
            })
            .collect();
        let body = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        write!(f, "{body}; conductor={}", self.field.n)
    }
}

impl FromStr for CycNum {
    type Err = Error;

    fn from_str(s: &str) -> Result<CycNum> {
        let bad = |m: &str| Error::Parse {
            offset: 0,
            message: format!("cyclotomic value {s:?}: {m}"),
        };
        let (body, cond) = s
            .split_once(';')
            .ok_or_else(|| bad("missing '; conductor=N'"))?;
        let n: u64 = cond
            .trim()
            .strip_prefix("conductor=")
            .and_then(|x| x.trim().parse().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(|| bad("bad conductor"))?;
        let mut coeffs: Vec<Rational> = Vec::new();
        for term in body.split(" + ") {
            let term = term.trim();
            let (c, e) = match term.split_once("*z") {
                None => (term, 0usize),
                Some((c, rest)) => {
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|x| x.parse().ok())
                            .ok_or_else(|| bad("bad exponent"))?
                    };
                    (c, e)
                }
            };
            let c = parse_rational(c).ok_or_else(|| bad("bad coefficient"))?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] += c;
        }
        CycNum::from_coeffs(n, &coeffs)
    }
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        let (a, b) = self.common(rhs);
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| x * &b.den + y * &a.den)
            .collect();
        CycNum::from_parts(a.field.clone(), num, &a.den * &b.den)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self + &(-rhs)
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        let (a, b) = self.common(rhs);
        let phi = a.field.phi;
        let mut v = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] += x * y;
                }
            }
        }
        let num = a.field.reduce(v);
        CycNum::from_parts(a.field.clone(), num, &a.den * &b.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl std::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::zero(), |a, b| &a + &b)
    }
}

pub fn cyc_root_of_unity(n: u64, m: i64) -> Result<CycNum> {
    if n == 0 {
        return Err(Error::invalid("root of unity order must be at least 1"));
    }
    Ok(CycNum::root_of_unity(n, m))
}

/// sum over j in 0..r of zeta_r^(j m); equals r when r | m and 0 otherwise.
pub fn cyc_sum_over_roots(r: u64, m: i64) -> Result<Rational> {
    if r == 0 {
        return Err(Error::invalid("r must be at least 1"));
    }
    let s: CycNum = (0..r as i64)
        .map(|j| CycNum::root_of_unity(r, j * m))
        .sum();
    s.to_rational()
        .ok_or_else(|| Error::consistency("sum over roots of unity is not rational"))
}

/// The quadratic Gauss sum g(1) = sum_x zeta_p^(x^2).
pub fn gauss_sum(p: u64) -> Result<CycNum> {
    if !crate::combinat::is_prime(p) || p == 2 {
        return Err(Error::invalid(format!("{p} is not an odd prime")));
    }
    Ok((0..p as i64)
        .map(|x| CycNum::root_of_unity(p, x * x))
        .sum())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussReport {
    pub p: u64,
    pub square: Rational,
    /// p when p = 1 mod 4, -p when p = 3 mod 4.
    pub expected: i64,
    pub holds: bool,
}

pub fn gauss_sum_check(p: u64) -> Result<GaussReport> {
    let g = gauss_sum(p)?;
    let sq = (&g * &g)
        .to_rational()
        .ok_or_else(|| Error::consistency("g(1)^2 is not rational"))?;
    let expected = if p % 4 == 1 { p as i64 } else { -(p as i64) };
    Ok(GaussReport {
        p,
        holds: sq == rat(expected),
        square: sq,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9
    }

    #[test]
    fn cyclotomic_polynomials() {
        let ints = |v: Vec<BigInt>| v.iter().map(|c| c.to_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(ints(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(ints(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(ints(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(ints(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
        for n in 1..40 {
            assert_eq!(cyclotomic_polynomial(n).len() as u64 - 1, euler_phi(n));
        }
    }

    #[test]
    fn sum_of_primitive_fifth_roots() {
        let s: CycNum = (1..5).map(|j| CycNum::root_of_unity(5, j)).sum();
        assert_eq!(s, CycNum::from_int(-1));
    }

    #[test]
    fn sums_over_roots() {
        assert_eq!(cyc_sum_over_roots(6, 12).unwrap(), rat(6));
        assert_eq!(cyc_sum_over_roots(6, 4).unwrap(), rat(0));
    }

    #[test]
    fn equality_across_conductors() {
        assert_eq!(CycNum::root_of_unity(4, 2), CycNum::from_int(-1));
        assert_eq!(CycNum::root_of_unity(12, 3), CycNum::root_of_unity(4, 1));
        assert_eq!(CycNum::root_of_unity(6, 2), CycNum::root_of_unity(3, 1));
    }

    #[test]
    fn minimize_finds_smaller_field() {
        let x = CycNum::root_of_unity(12, 4) + CycNum::root_of_unity(12, 8);
        let m = x.minimize();
        assert_eq!(m.conductor(), 1);
        assert_eq!(m, CycNum::from_int(-1));
        let y = CycNum::root_of_unity(15, 5).minimize();
        assert_eq!(y.conductor(), 3);
        let g = gauss_sum(7).unwrap().minimize();
        assert_eq!(g.conductor(), 7);
        let s = (CycNum::root_of_unity(20, 4) + CycNum::root_of_unity(20, 16)).minimize();
        assert_eq!(s.conductor(), 5);
    }

    #[test]
    fn gauss_sums() {
        for p in [3u64, 5, 7, 11, 13, 17] {
            let r = gauss_sum_check(p).unwrap();
            assert!(r.holds, "p = {p}: {:?}", r);
        }
        assert!(gauss_sum(9).is_err());
    }

    #[test]
    fn display_round_trip() {
        let x = CycNum::from_coeffs(5, &[rat(1), rat(0), super::super::rat_frac(-3, 2)]).unwrap();
        let s = x.to_string();
        assert_eq!(s, "1 + -3/2*z^2; conductor=5");
        assert_eq!(s.parse::<CycNum>().unwrap(), x);
        assert_eq!(CycNum::zero().to_string(), "0; conductor=1");
    }

    fn cyc() -> impl Strategy<Value = CycNum> {
        (
            prop::sample::select(vec![1u64, 2, 3, 4, 5, 6, 7, 8, 9, 12]),
            proptest::collection::vec(-4i64..=4, 1..6),
            1i64..4,
        )
            .prop_map(|(n, cs, d)| {
                let cs: Vec<Rational> = cs.iter().map(|&c| super::super::rat_frac(c, d)).collect();
                CycNum::from_coeffs(n, &cs).unwrap()
            })
    }

    proptest! {
        #[test]
        fn field_axioms_against_float_oracle(a in cyc(), b in cyc(), c in cyc()) {
            let (ar, ai) = a.to_complex();
            let (br, bi) = b.to_complex();
            prop_assert!(close((&a + &b).to_complex(), (ar + br, ai + bi)));
            prop_assert!(close((&a * &b).to_complex(), (ar * br - ai * bi, ar * bi + ai * br)));
            prop_assert!(close(a.conj().to_complex(), (ar, -ai)));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a - &a, CycNum::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), CycNum::one());
                prop_assert_eq!(a.minimize(), a.clone());
            }
        }

        #[test]
        fn conjugation_is_multiplicative(a in cyc(), b in cyc()) {
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            let n = &a * &a.conj();
            prop_assert_eq!(n.conj(), n);
            prop_assert_eq!((&a * &a).norm(), a.norm() * a.norm());
        }
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(CycNum::zero().inv(), Err(Error::DivisionByZero));
    }
}
