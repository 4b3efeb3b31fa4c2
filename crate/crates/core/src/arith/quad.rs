use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{gauss_sum, rat, rat_to_string, CycNum, Rational};
use crate::error::{Error, Result};

/// `a + b s` with `s^2 = d`, where `d` is a nonzero integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadNum {
    d: i64,
    a: Rational,
    b: Rational,
}

impl QuadNum {
    pub fn new(d: i64, a: Rational, b: Rational) -> Result<Self> {
        if d == 0 {
            return Err(Error::invalid("quadratic radicand must be nonzero"));
        }
        Ok(QuadNum { d, a, b })
    }

    pub fn from_rational(d: i64, a: Rational) -> Result<Self> {
        QuadNum::new(d, a, Rational::zero())
    }

    /// The generator `s`.
    pub fn sqrt(d: i64) -> Result<Self> {
        QuadNum::new(d, Rational::zero(), Rational::one())
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn same_field(&self, other: &QuadNum) -> Result<()> {
        if self.d != other.d {
            return Err(Error::invalid(format!(
                "quadratic fields differ: d = {} and d = {}",
                self.d, other.d
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &QuadNum) -> Result<QuadNum> {
        self.same_field(other)?;
        Ok(QuadNum {
            d: self.d,
            a: &self.a + &other.a,
            b: &self.b + &other.b,
        })
    }

    pub fn checked_sub(&self, other: &QuadNum) -> Result<QuadNum> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &QuadNum) -> Result<QuadNum> {
        self.same_field(other)?;
        let d = rat(self.d);
        Ok(QuadNum {
            d: self.d,
            a: &self.a * &other.a + &self.b * &other.b * d,
            b: &self.a * &other.b + &self.b * &other.a,
        })
    }

    pub fn scale(&self, q: &Rational) -> QuadNum {
        QuadNum {
            d: self.d,
            a: &self.a * q,
            b: &self.b * q,
        }
    }

    /// `a - b s`
    pub fn conj(&self) -> QuadNum {
        QuadNum {
            d: self.d,
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    pub fn pow(&self, e: u32) -> QuadNum {
        let mut acc = QuadNum::from_rational(self.d, Rational::one()).expect("d nonzero");
        let mut base = self.clone();
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

    /// Image in Q(zeta_p) sending `s` to the Gauss sum g(1). Requires `d = p` for
    /// p = 1 mod 4 or `d = -p` for p = 3 mod 4, p an odd prime.
    pub fn to_cyc(&self) -> Result<CycNum> {
        let p = self.d.unsigned_abs();
        let sign_ok = if p % 4 == 1 { self.d > 0 } else { self.d < 0 };
        if !crate::combinat::is_prime(p) || p == 2 || !sign_ok {
            return Err(Error::unsupported(format!(
                "no Gauss-sum embedding for d = {}",
                self.d
            )));
        }
        let g = gauss_sum(p)?;
        Ok(&CycNum::from_rational(&self.a) + &g.scale(&self.b))
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = if self.d < 0 {
            format!("i*sqrt({})", -self.d)
        } else {
            format!("sqrt({})", self.d)
        };
        if self.b.is_zero() {
            return write!(f, "{}", rat_to_string(&self.a));
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        write!(
            f,
            "{} {sign} {}*{root}",
            rat_to_string(&self.a),
            rat_to_string(&self.b.abs())
        )
    }
}

impl Add for &QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &QuadNum) -> QuadNum {
        self.checked_add(rhs).expect("quadratic fields must agree")
    }
}

impl Sub for &QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &QuadNum) -> QuadNum {
        self.checked_sub(rhs).expect("quadratic fields must agree")
    }
}

impl Mul for &QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &QuadNum) -> QuadNum {
        self.checked_mul(rhs).expect("quadratic fields must agree")
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum {
            d: self.d,
            a: -&self.a,
            b: -&self.b,
        }
    }
}
