use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::arith::{rat_to_string, Poly, Rational};
use crate::error::{Error, Result};

/// Quotient of polynomials over Q in lowest terms, normalised so that `den(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: Poly::one(),
            });
        }
        let g = Poly::gcd(&num, &den);
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::invalid(format!(
                "denominator {den} vanishes at t = 0; not a power series"
            )));
        }
        let s = d0.recip();
        Ok(RatFunc {
            num: num.scale(&s),
            den: den.scale(&s),
        })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// First `n` power-series coefficients.
    pub fn series(&self, n: usize) -> Result<Vec<Rational>> {
        self.num.series_div(&self.den, n)
    }

    pub fn to_json(&self) -> Value {
        let cs = |p: &Poly| p.coeffs().iter().map(rat_to_string).collect::<Vec<_>>();
        json!({
            "num": cs(&self.num),
            "den": cs(&self.den),
            "num_text": self.num.to_string(),
            "den_text": self.den.to_string(),
        })
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
