use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{rat, rat_frac, QuadNum, Rational};
use crate::combinat::{is_prime, Count};
use crate::error::{Error, Result};
use crate::group::quadratic_residues;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PaleyKind {
    Zero,
    QuadraticResidue,
    QuadraticNonResidue,
}

/// Target vertex class for walks from 0 on the Paley (di)graph of order p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PaleyTarget {
    pub p: u32,
    pub kind: PaleyKind,
}

impl PaleyTarget {
    pub fn new(p: u32, kind: PaleyKind) -> Result<Self> {
        if p == 2 || !is_prime(p as u64) {
            return Err(Error::invalid(format!("paley needs an odd prime, got {p}")));
        }
        Ok(PaleyTarget { p, kind })
    }

    /// Classifies the residue `c` mod p.
    pub fn from_residue(p: u32, c: u32) -> Result<Self> {
        let t = PaleyTarget::new(p, PaleyKind::Zero)?;
        Ok(PaleyTarget {
            kind: kind_of(p, c as u64),
            ..t
        })
    }

    /// A residue of this kind: 0, 1, or the least nonresidue.
    pub fn representative(&self) -> u32 {
        match self.kind {
            PaleyKind::Zero => 0,
            PaleyKind::QuadraticResidue => 1,
            PaleyKind::QuadraticNonResidue => least_nonresidue(self.p),
        }
    }
}

impl fmt::Display for PaleyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PaleyKind::Zero => "zero",
            PaleyKind::QuadraticResidue => "residue",
            PaleyKind::QuadraticNonResidue => "nonresidue",
        })
    }
}

fn kind_of(p: u32, c: u64) -> PaleyKind {
    let c = (c % p as u64) as u32;
    if c == 0 {
        PaleyKind::Zero
    } else if quadratic_residues(p).binary_search(&c).is_ok() {
        PaleyKind::QuadraticResidue
    } else {
        PaleyKind::QuadraticNonResidue
    }
}

fn least_nonresidue(p: u32) -> u32 {
    let qr = quadratic_residues(p);
    (2..p).find(|x| qr.binary_search(x).is_err()).expect("odd prime has nonresidues")
}

/// The Gauss-sum radicand: p when p = 1 mod 4, -p when p = 3 mod 4.
fn radicand(p: u32) -> i64 {
    if p % 4 == 1 {
        p as i64
    } else {
        -(p as i64)
    }
}

fn sign(k: u32) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Walks of `k` steps from 0 to the target, from the Gauss-sum expansion of the
/// eigenvalues: the sums of `omega^{-jc}` over residues `j` and over nonresidues `j`
/// are `f(-c)` and `f(-ac)` with `f(0) = (p-1)/2`, `f(QR) = (s-1)/2`, `f(QNR) = -(s+1)/2`.
pub fn paley_closed_form(target: PaleyTarget, k: u32) -> Result<Count> {
    let p = target.p;
    PaleyTarget::new(p, target.kind)?;
    if k == 0 {
        return Ok(Count::from((target.kind == PaleyKind::Zero) as u32));
    }
    let d = radicand(p);
    let s = QuadNum::sqrt(d)?;
    let one = QuadNum::from_rational(d, rat(1))?;
    let half = rat_frac(1, 2);
    let f = |kind: PaleyKind| match kind {
        PaleyKind::Zero => QuadNum::from_rational(d, rat_frac(p as i64 - 1, 2)).expect("d nonzero"),
        PaleyKind::QuadraticResidue => (&s - &one).scale(&half),
        PaleyKind::QuadraticNonResidue => (&s + &one).scale(&-&half),
    };
    let c = target.representative() as u64;
    let a = least_nonresidue(p) as u64;
    let minus_c = p as u64 - c % p as u64;
    let t0 = QuadNum::from_rational(d, rat_frac(p as i64 - 1, 2).pow(k as i32))?;
    let t1 = &(&s - &one).scale(&half).pow(k) * &f(kind_of(p, minus_c));
    let t2 = (&(&s + &one).scale(&half).pow(k) * &f(kind_of(p, a * minus_c))).scale(&sign(k));
    let total = (&(&t0 + &t1) + &t2).scale(&rat_frac(1, p as i64));
    if !total.is_rational() {
        return Err(Error::consistency(format!(
            "paley count {total} has a nonzero irrational part"
        )));
    }
    let q = total.rational_part();
    if !q.is_integer() || q < &Rational::zero() {
        return Err(Error::consistency(format!("paley count {q} is not a count")));
    }
    Ok(q.to_integer().to_biguint().expect("nonnegative"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremVariant {
    /// The case lines exactly as published.
    Printed,
    /// Signs repaired so that each line agrees with the eigenvalue expansion.
    Corrected,
}

/// The three-case closed form with `xi sqrt p` as the field generator; needs `k >= 1`.
/// The printed variant can be non-integral or irrational, so the value is returned as is.
pub fn paley_theorem(target: PaleyTarget, k: u32, variant: TheoremVariant) -> Result<QuadNum> {
    let p = target.p;
    PaleyTarget::new(p, target.kind)?;
    if k == 0 {
        return Err(Error::invalid("the case formulas need k >= 1"));
    }
    let d = radicand(p);
    let s = QuadNum::sqrt(d)?;
    let one = QuadNum::from_rational(d, rat(1))?;
    let c = |x: Rational| QuadNum::from_rational(d, x).expect("d nonzero");
    let sm = &s - &one;
    let sp = &s + &one;
    let pm1 = rat(p as i64 - 1);
    let pp1 = rat(p as i64 + 1);
    let printed = variant == TheoremVariant::Printed;
    let p1 = p % 4 == 1;
    let (prefactor, bracket) = match target.kind {
        PaleyKind::QuadraticResidue if p1 => (
            Rational::one(),
            &(&c(rat(2) * pm1.pow(k as i32)) + &sm.pow(k + 1)) + &sp.pow(k + 1).scale(&sign(k + 1)),
        ),
        PaleyKind::QuadraticResidue => {
            let last_sign = if printed { sign(k) } else { sign(k + 1) };
            (
                Rational::one(),
                &(&c(rat(2) * pm1.pow(k as i32)) + &sm.pow(k - 1).scale(&pp1))
                    + &sp.pow(k - 1).scale(&(last_sign * &pp1)),
            )
        }
        PaleyKind::QuadraticNonResidue if p1 => {
            let mid_sign = if printed { rat(1) } else { rat(-1) };
            (
                pm1.clone(),
                &(&c(rat(2) * pm1.pow(k as i32 - 1)) + &sm.pow(k - 1).scale(&mid_sign))
                    + &sp.pow(k - 1).scale(&sign(k)),
            )
        }
        PaleyKind::QuadraticNonResidue => {
            let middle = if printed { -&sp.pow(k + 1) } else { sm.pow(k + 1) };
            (
                Rational::one(),
                &(&c(rat(2) * pm1.pow(k as i32)) + &middle) + &sp.pow(k + 1).scale(&sign(k + 1)),
            )
        }
        PaleyKind::Zero => (
            pm1.clone(),
            &(&c(rat(2) * pm1.pow(k as i32 - 1)) + &sm.pow(k)) + &sp.pow(k).scale(&sign(k)),
        ),
    };
    let den = rat(2).pow(k as i32 + 1) * rat(p as i64);
    Ok(bracket.scale(&(prefactor / den)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::circulant_walks;

    fn t(p: u32, kind: PaleyKind) -> PaleyTarget {
        PaleyTarget::new(p, kind).unwrap()
    }

    #[test]
    fn examples() {
        use PaleyKind::*;
        assert_eq!(paley_closed_form(t(13, QuadraticResidue), 2).unwrap(), Count::from(2u32));
        assert_eq!(paley_closed_form(t(7, QuadraticNonResidue), 2).unwrap(), Count::from(2u32));
        assert_eq!(paley_closed_form(t(13, Zero), 2).unwrap(), Count::from(6u32));
        assert_eq!(paley_closed_form(t(7, Zero), 0).unwrap(), Count::from(1u32));
        assert_eq!(paley_closed_form(t(7, QuadraticResidue), 0).unwrap(), Count::from(0u32));
        assert!(PaleyTarget::new(9, Zero).is_err());
    }

    #[test]
    fn matches_circulant_count() {
        for p in [5, 7, 11, 13, 17] {
            let qr = quadratic_residues(p);
            for kind in [PaleyKind::Zero, PaleyKind::QuadraticResidue, PaleyKind::QuadraticNonResidue] {
                let target = t(p, kind);
                for k in 0..=8 {
                    let expect = circulant_walks(p, &qr, k, target.representative()).unwrap();
                    assert_eq!(paley_closed_form(target, k).unwrap(), expect, "p={p} {kind} k={k}");
                    if k >= 1 {
                        let q = paley_theorem(target, k, TheoremVariant::Corrected).unwrap();
                        assert!(q.is_rational());
                        assert_eq!(*q.rational_part(), crate::group::size_rat(&expect));
                    }
                }
            }
        }
    }

    #[test]
    fn printed_lines_where_they_fail() {
        let q = paley_theorem(t(7, PaleyKind::QuadraticResidue), 1, TheoremVariant::Printed).unwrap();
        assert_eq!(q, QuadNum::from_rational(-7, rat_frac(12, 28)).unwrap());
        let q = paley_theorem(t(13, PaleyKind::QuadraticNonResidue), 1, TheoremVariant::Printed).unwrap();
        assert_ne!(q, QuadNum::from_rational(13, rat(0)).unwrap());
        let q = paley_theorem(t(7, PaleyKind::QuadraticNonResidue), 2, TheoremVariant::Printed).unwrap();
        assert_ne!(q, QuadNum::from_rational(-7, rat(2)).unwrap());
        // The p = 1 mod 4 residue line and the zero line are printed correctly.
        let q = paley_theorem(t(13, PaleyKind::QuadraticResidue), 2, TheoremVariant::Printed).unwrap();
        assert_eq!(q, QuadNum::from_rational(13, rat(2)).unwrap());
        let q = paley_theorem(t(13, PaleyKind::Zero), 2, TheoremVariant::Printed).unwrap();
        assert_eq!(q, QuadNum::from_rational(13, rat(6)).unwrap());
    }

    #[test]
    fn residue_classification() {
        assert_eq!(PaleyTarget::from_residue(13, 4).unwrap().kind, PaleyKind::QuadraticResidue);
        assert_eq!(PaleyTarget::from_residue(13, 2).unwrap().kind, PaleyKind::QuadraticNonResidue);
        assert_eq!(PaleyTarget::from_residue(13, 13).unwrap().kind, PaleyKind::Zero);
        assert_eq!(PaleyTarget::new(7, PaleyKind::QuadraticNonResidue).unwrap().representative(), 3);
    }
}
