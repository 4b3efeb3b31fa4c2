use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{rat, Rational};
use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::group::size_rat;

/// Exponential generating function `sum_{k <= order} c_k t^k / k!`, stored as `c_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfTruncation {
    pub coeffs: Vec<Rational>,
}

impl EgfTruncation {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::invalid("an EGF truncation needs at least c_0"));
        }
        Ok(EgfTruncation { coeffs })
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c;
        EgfTruncation { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn check(&self, other: &EgfTruncation) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::invalid(format!(
                "EGF orders differ: {} and {}",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    /// Product of EGFs: the binomial convolution of coefficients.
    pub fn product(&self, other: &EgfTruncation) -> Result<EgfTruncation> {
        self.check(other)?;
        let n = self.order();
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(Rational::zero(), |acc, i| {
                    acc + size_rat(&binomial(k as u64, i as u64)) * &self.coeffs[i] * &other.coeffs[k - i]
                })
            })
            .collect();
        Ok(EgfTruncation { coeffs })
    }

    pub fn pow(&self, e: u32) -> EgfTruncation {
        (0..e).fold(EgfTruncation::constant(Rational::one(), self.order()), |acc, _| {
            acc.product(self).expect("same order")
        })
    }

    pub fn add(&self, other: &EgfTruncation) -> Result<EgfTruncation> {
        self.check(other)?;
        Ok(EgfTruncation {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> EgfTruncation {
        EgfTruncation {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// `f(t) -> f(s t)`, i.e. `c_k -> s^k c_k`.
    pub fn scale_arg(&self, s: &Rational) -> EgfTruncation {
        let mut p = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c * &p;
                p *= s;
                out
            })
            .collect();
        EgfTruncation { coeffs }
    }

    /// `c_k` as a nonnegative integer: the count the EGF enumerates.
    pub fn count(&self, k: usize) -> Result<BigUint> {
        let c = self
            .coeffs
            .get(k)
            .ok_or_else(|| Error::out_of_range(format!("coefficient {k} beyond order {}", self.order())))?;
        if !c.is_integer() {
            return Err(Error::consistency(format!("EGF coefficient c_{k} = {c} is not an integer")));
        }
        c.to_integer()
            .to_biguint()
            .ok_or_else(|| Error::consistency(format!("EGF coefficient c_{k} is negative")))
    }
}

/// `h_j(t, r) = sum_{m = j - 1 mod r} t^m / m!`, truncated at `order`.
/// `h_1(t, 2) = cosh t` and `h_2(t, 2) = sinh t`.
pub fn egf_hyperbolic(j: i64, r: u32, order: usize) -> Result<EgfTruncation> {
    if r == 0 {
        return Err(Error::invalid("hyperbolic EGF needs r >= 1"));
    }
    let res = (j - 1).rem_euclid(r as i64) as usize;
    let coeffs = (0..=order)
        .map(|m| rat((m % r as usize == res) as i64))
        .collect();
    Ok(EgfTruncation { coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(e: &EgfTruncation) -> Vec<i64> {
        e.coeffs.iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect()
    }

    #[test]
    fn cosh_and_sinh() {
        assert_eq!(ints(&egf_hyperbolic(1, 2, 5).unwrap()), [1, 0, 1, 0, 1, 0]);
        assert_eq!(ints(&egf_hyperbolic(2, 2, 5).unwrap()), [0, 1, 0, 1, 0, 1]);
        assert_eq!(ints(&egf_hyperbolic(0, 3, 6).unwrap()), [0, 0, 1, 0, 0, 1, 0]);
    }

    #[test]
    fn cosh_squared() {
        // cosh^2 t = (1 + cosh 2t) / 2
        let c = egf_hyperbolic(1, 2, 8).unwrap();
        let sq = c.product(&c).unwrap();
        let other = EgfTruncation::constant(rat(1), 8)
            .add(&c.scale_arg(&rat(2)))
            .unwrap()
            .scale(&crate::arith::rat_frac(1, 2));
        assert_eq!(sq, other);
    }

    #[test]
    fn exp_product_is_power_of_two() {
        let e = EgfTruncation::from_coeffs(vec![rat(1); 7]).unwrap();
        assert_eq!(ints(&e.pow(2)), [1, 2, 4, 8, 16, 32, 64]);
        assert!(e.product(&EgfTruncation::constant(rat(1), 3)).is_err());
    }
}
