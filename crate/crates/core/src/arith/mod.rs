//! Exact arithmetic: rationals, polynomials over Q, cyclotomic numbers and
//! elements of quadratic fields.

mod cyclotomic;
mod linalg;
mod poly;
mod quad;

pub use cyclotomic::{
    cyc_root_of_unity, cyc_sum_over_roots, cyclotomic_polynomial, euler_phi, gauss_sum,
    gauss_sum_check, CycNum, GaussReport,
};
pub use linalg::solve_rational;
pub use poly::Poly;
pub use quad::QuadNum;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Renders a rational as `n` or `n/d`.
pub fn rat_to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `n` or `n/d` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub(crate) fn bigint_gcd_slice(xs: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in xs {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    g.abs()
}

pub(crate) fn lcm_u64(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}
