use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::Poly;
use crate::combinat::{prime_power, Count};
use crate::error::{Error, Result};
use crate::group::LinearModule;
use crate::series::{int_poly, RatFunc};

fn check_q(q: u32) -> Result<i64> {
    match prime_power(q as u64) {
        Some((p, _)) if p != 2 => Ok(q as i64),
        _ => Err(Error::invalid(format!("q must be an odd prime power, got {q}"))),
    }
}

fn pow(b: i64, e: u32) -> BigInt {
    BigInt::from(b).pow(e)
}

fn sign(k: u32) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn exact(num: BigInt, den: BigInt) -> Result<Count> {
    if !(&num % &den).is_zero() || num.is_negative() {
        return Err(Error::consistency(format!("{num}/{den} is not a count")));
    }
    Ok((num / den).to_biguint().expect("nonnegative"))
}

/// Invariants of GL2(q) in `V^{⊗k}`.
pub fn gl2_dims(q: u32, k: u32, which: LinearModule) -> Result<Count> {
    let q = check_q(q)?;
    if k == 0 {
        return Ok(Count::one());
    }
    match which {
        LinearModule::Induced => exact(
            pow(q + 1, k - 1) + BigInt::from(q * (q - 2)) * pow(2, k - 1) + (q - 1),
            BigInt::from(q * (q - 1)),
        ),
        LinearModule::Steinberg => exact(
            2 * pow(q, k - 1) + BigInt::from(q * (q - 1)) * sign(k) + (q + 1) * (q - 2),
            BigInt::from(2 * (q * q - 1)),
        ),
    }
}

/// Invariants of SL2(q) in `V^{⊗k}`.
pub fn sl2_dims(q: u32, k: u32, which: LinearModule) -> Result<Count> {
    let q = check_q(q)?;
    if k == 0 {
        return Ok(Count::one());
    }
    match which {
        LinearModule::Induced => exact(
            2 * pow(q + 1, k - 1) + BigInt::from(q * (q - 3)) * pow(2, k - 1) + 2 * (q - 1),
            BigInt::from(q * (q - 1)),
        ),
        LinearModule::Steinberg => exact(
            4 * pow(q, k - 1) + BigInt::from((q - 1) * (q - 1)) * sign(k) + (q - 3) * (q + 1),
            BigInt::from(2 * (q * q - 1)),
        ),
    }
}

fn factors(roots: &[i64]) -> Poly {
    roots.iter().fold(Poly::one(), |acc, &x| &acc * &int_poly(&[1, -x]))
}

pub fn gl2_poincare(q: u32, which: LinearModule) -> Result<RatFunc> {
    let q = check_q(q)?;
    match which {
        LinearModule::Induced => RatFunc::new(
            int_poly(&[1, -(q + 3), 2 * q + 3, -q]),
            factors(&[1, 2, q + 1]),
        ),
        LinearModule::Steinberg => RatFunc::new(int_poly(&[1, -q, 0, 1]), factors(&[1, -1, q])),
    }
}

pub fn sl2_poincare(q: u32, which: LinearModule) -> Result<RatFunc> {
    let q = check_q(q)?;
    match which {
        LinearModule::Induced => RatFunc::new(
            int_poly(&[1, -(q + 3), 2 * q + 3, -(q - 1)]),
            factors(&[1, 2, q + 1]),
        ),
        LinearModule::Steinberg => RatFunc::new(int_poly(&[1, -q, 0, 2]), factors(&[1, -1, q])),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_gl2, build_sl2};
    use crate::quiver::invariant_counts;
    use crate::group::size_rat as size_of;

    #[test]
    fn examples() {
        assert_eq!(gl2_dims(3, 1, LinearModule::Induced).unwrap(), Count::from(1u32));
        assert_eq!(sl2_dims(3, 2, LinearModule::Steinberg).unwrap(), Count::from(1u32));
        assert_eq!(gl2_dims(3, 3, LinearModule::Steinberg).unwrap(), Count::from(1u32));
        assert!(gl2_dims(4, 1, LinearModule::Induced).is_err());
        assert_eq!(
            gl2_poincare(3, LinearModule::Induced).unwrap(),
            RatFunc::new(int_poly(&[1, -6, 9, -3]), factors(&[1, 2, 4])).unwrap()
        );
        assert_eq!(
            sl2_poincare(3, LinearModule::Steinberg).unwrap(),
            RatFunc::new(int_poly(&[1, -3, 0, 2]), factors(&[-1, 1, 3])).unwrap()
        );
    }

    #[test]
    fn closed_forms_match_characters_and_series() {
        for q in [3, 5, 7, 9] {
            for which in [LinearModule::Induced, LinearModule::Steinberg] {
                for (g, dims, pc) in [
                    (build_gl2(q).unwrap(), gl2_dims as fn(u32, u32, LinearModule) -> Result<Count>, gl2_poincare(q, which).unwrap()),
                    (build_sl2(q).unwrap(), sl2_dims, sl2_poincare(q, which).unwrap()),
                ] {
                    let v = which.character(&g).unwrap();
                    let counts = invariant_counts(&g, &v, 8).unwrap();
                    let series = pc.series(9).unwrap();
                    for k in 0..=8u32 {
                        let d = dims(q, k, which).unwrap();
                        assert_eq!(d, counts[k as usize], "{} {which:?} k={k}", g.name);
                        assert_eq!(size_of(&d), series[k as usize]);
                    }
                }
            }
        }
    }
}
