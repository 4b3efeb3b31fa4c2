//! Rational generating functions for walk counts and truncated exponential
//! generating functions.

mod egf;
mod ratfunc;

pub use egf::{egf_hyperbolic, EgfTruncation};
pub use ratfunc::RatFunc;

use num_traits::{One, Zero};

use crate::arith::{rat, CycNum, Poly, Rational};
use crate::error::{Error, Result};
use crate::group::{size_rat, GroupData, ModuleChar};
use crate::quiver::WalkMatrix;

/// Determinant of a matrix over Q[t] by fraction-free (Bareiss) elimination.
pub fn poly_det(matrix: &[Vec<Poly>]) -> Result<Poly> {
    let n = matrix.len();
    if matrix.iter().any(|r| r.len() != n) {
        return Err(Error::invalid("determinant needs a square matrix"));
    }
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut m = matrix.to_vec();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(Poly::zero());
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

fn one_minus_t_matrix(a: &WalkMatrix, transpose: bool) -> Vec<Vec<Poly>> {
    let n = a.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = if transpose { a.get(j, i) } else { a.get(i, j) };
                    let c = -size_rat(x);
                    let c0 = if i == j { Rational::one() } else { Rational::zero() };
                    Poly::from_coeffs(vec![c0, c])
                })
                .collect()
        })
        .collect()
}

/// `det(I - tA)`
pub fn char_det(a: &WalkMatrix) -> Result<Poly> {
    poly_det(&one_minus_t_matrix(a, false))
}

/// `sum_k (A^k)_{alpha,gamma} t^k` as `det(M)/det(I - tA)`, where M is `I - tA^T`
/// with column `gamma` replaced by the unit vector at `alpha`.
pub fn walk_generating_function(a: &WalkMatrix, alpha: usize, gamma: usize) -> Result<RatFunc> {
    let n = a.dim();
    if alpha >= n || gamma >= n {
        return Err(Error::out_of_range(format!(
            "vertices ({alpha}, {gamma}) outside a {n}-vertex quiver"
        )));
    }
    let den = char_det(a)?;
    let mut m = one_minus_t_matrix(a, true);
    for (i, row) in m.iter_mut().enumerate() {
        row[gamma] = if i == alpha { Poly::one() } else { Poly::zero() };
    }
    RatFunc::new(poly_det(&m)?, den)
}

/// Poincare series of the multiplicity of irrep `lam`, by Cramer's rule on the McKay quiver.
pub fn poincare_cramer(a: &WalkMatrix, lam: usize) -> Result<RatFunc> {
    walk_generating_function(a, 0, lam)
}

/// Polynomial with cyclotomic coefficients, degree 0 upward.
fn cyc_poly_mul(a: &[CycNum], b: &[CycNum]) -> Vec<CycNum> {
    let mut out = vec![CycNum::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn cyc_poly_to_rational(p: &[CycNum], what: &str) -> Result<Poly> {
    p.iter()
        .map(|c| {
            c.to_rational()
                .ok_or_else(|| Error::consistency(format!("{what} has an irrational coefficient {c}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Poly::from_coeffs)
}

/// `prod_c (1 - chi_V(c) t)` over all classes.
pub fn class_product(v: &ModuleChar) -> Result<Poly> {
    let mut acc = vec![CycNum::one()];
    for x in &v.values {
        acc = cyc_poly_mul(&acc, &[CycNum::one(), -x]);
    }
    cyc_poly_to_rational(&acc, "prod (1 - chi_V t)")
}

/// Poincare series of irrep `lam` from the class sum
/// `(1/|G|) sum_c |c| conj(chi_lam(c)) / (1 - chi_V(c) t)`.
/// Also returns the degree of the common denominator before reduction.
pub fn poincare_character(g: &GroupData, v: &ModuleChar, lam: usize) -> Result<(RatFunc, usize)> {
    let chi = g.character(lam)?;
    let mut groups: Vec<(CycNum, CycNum)> = Vec::new();
    for (c, x) in v.values.iter().enumerate() {
        let w = chi[c].conj().scale(&size_rat(&g.classes[c].size));
        match groups.iter_mut().find(|(y, _)| y == x) {
            Some((_, acc)) => *acc = &*acc + &w,
            None => groups.push((x.clone(), w)),
        }
    }
    let factor = |x: &CycNum| vec![CycNum::one(), -x];
    let mut den = vec![CycNum::one()];
    for (x, _) in &groups {
        den = cyc_poly_mul(&den, &factor(x));
    }
    let mut num = vec![CycNum::zero(); groups.len().max(1)];
    for (i, (_, w)) in groups.iter().enumerate() {
        let mut term = vec![w.clone()];
        for (j, (y, _)) in groups.iter().enumerate() {
            if j != i {
                term = cyc_poly_mul(&term, &factor(y));
            }
        }
        for (k, c) in term.into_iter().enumerate() {
            num[k] = &num[k] + &c;
        }
    }
    let num = cyc_poly_to_rational(&num, "character-route numerator")?;
    let den = cyc_poly_to_rational(&den, "character-route denominator")?;
    let degree = groups.len();
    let rf = RatFunc::new(num, den.scale(&size_rat(&g.order)))?;
    Ok((rf, degree))
}

/// Whether `det(I - tA) = prod_c (1 - chi_V(c) t)`.
pub fn det_factorization_check(v: &ModuleChar, a: &WalkMatrix) -> Result<bool> {
    Ok(char_det(a)? == class_product(v)?)
}

/// `det(I - t A_removed) / det(I - tA)` where `A_removed` drops vertex `remove`.
pub fn dynkin_quotient(a: &WalkMatrix, remove: usize) -> Result<RatFunc> {
    let n = a.dim();
    if remove >= n {
        return Err(Error::out_of_range(format!("vertex {remove} of {n}")));
    }
    let keep: Vec<usize> = (0..n).filter(|&i| i != remove).collect();
    let sub = WalkMatrix::new(
        keep.iter().map(|&i| a.labels[i].clone()).collect(),
        keep.iter()
            .map(|&i| keep.iter().map(|&j| a.get(i, j).clone()).collect())
            .collect(),
    )?;
    RatFunc::new(char_det(&sub)?, char_det(a)?)
}

/// `1 - t`-style helper for closed forms: builds a polynomial from integer coefficients.
pub fn int_poly(cs: &[i64]) -> Poly {
    Poly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_spec;
    use crate::quiver::{mckay_adjacency, walk_count_matrix};

    #[test]
    fn triangle_determinant() {
        let a = WalkMatrix::from_u64(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap();
        assert_eq!(char_det(&a).unwrap(), int_poly(&[1, 0, -3, -2]));
    }

    #[test]
    fn determinant_against_cofactor_expansion() {
        fn cofactor(m: &[Vec<Poly>]) -> Poly {
            if m.len() == 1 {
                return m[0][0].clone();
            }
            let mut acc = Poly::zero();
            for j in 0..m.len() {
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * &cofactor(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        let m: Vec<Vec<Poly>> = (0..4)
            .map(|i| (0..4).map(|j| int_poly(&[(i * 3 + j) % 5 - 2, (i + 2 * j) % 3 - 1])).collect())
            .collect();
        assert_eq!(poly_det(&m).unwrap(), cofactor(&m));
        let mut zero_pivot = m.clone();
        zero_pivot[0][0] = Poly::zero();
        assert_eq!(poly_det(&zero_pivot).unwrap(), cofactor(&zero_pivot));
    }

    #[test]
    fn cramer_matches_walks() {
        let (g, v) = parse_spec("S4").unwrap().build().unwrap();
        let a = mckay_adjacency(&g, &v).unwrap();
        for lam in 0..5 {
            let rf = poincare_cramer(&a, lam).unwrap();
            let s = rf.series(9).unwrap();
            for (k, c) in s.iter().enumerate() {
                let w = walk_count_matrix(&a, k as u32, 0, lam).unwrap();
                assert_eq!(*c, size_rat(&w));
            }
            let (rc, _) = poincare_character(&g, &v, lam).unwrap();
            assert_eq!(rc, rf);
        }
        assert!(det_factorization_check(&v, &a).unwrap());
    }

    #[test]
    fn wreath_character_route() {
        let (g, v) = parse_spec("Z2wrS2").unwrap().build().unwrap();
        let (rf, _) = poincare_character(&g, &v, 0).unwrap();
        assert_eq!(rf, RatFunc::new(int_poly(&[1, 0, -3]), int_poly(&[1, 0, -4])).unwrap());
    }

    #[test]
    fn dynkin() {
        // Path on 2 vertices: removing one leaves a single vertex.
        let a = WalkMatrix::from_u64(&[vec![0, 1], vec![1, 0]]).unwrap();
        let q = dynkin_quotient(&a, 0).unwrap();
        assert_eq!(q, RatFunc::new(Poly::one(), int_poly(&[1, 0, -1])).unwrap());
    }
}
