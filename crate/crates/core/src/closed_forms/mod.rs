//! Family-specific closed formulas. Each is computed without the generic
//! character or matrix engines so the two can check each other.

mod linear;
mod paley;
mod wreath;

pub use linear::{gl2_dims, gl2_poincare, sl2_dims, sl2_poincare};
pub use paley::{paley_closed_form, paley_theorem, PaleyKind, PaleyTarget, TheoremVariant};
pub use wreath::{
    wreath_brute_force, wreath_invariants, wreath_invariants_character, wreath_invariants_egf,
    wreath_invariants_egf_printed, wreath_invariants_fixed_points, wreath_invariants_printed,
    WREATH_BRUTE_FORCE_LIMIT,
};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::combinat::{
    binomial, congruent_multinomial_sum, even_block_partitions, for_each_congruent_composition,
    kostka_hook_content, multinomial, stirling2, Count, Partition,
};
use crate::error::{Error, Result};
use crate::series::{egf_hyperbolic, EgfTruncation};

/// Walks of `k` steps from `a` to `c` on the McKay quiver of Z_r with V = G_1 + G_{r-1}:
/// `sum C(k, l)` over `k - 2l = c - a mod r`.
pub fn cyclic_walks(r: u32, k: u32, a: u32, c: u32) -> Result<Count> {
    if r < 2 {
        return Err(Error::invalid(format!("cyclic walks need r >= 2, got {r}")));
    }
    if a >= r || c >= r {
        return Err(Error::out_of_range(format!("vertices ({a}, {c}) outside Z_{r}")));
    }
    let r = r as i64;
    let target = (c as i64 - a as i64).rem_euclid(r);
    Ok((0..=k as u64)
        .filter(|&l| (k as i64 - 2 * l as i64).rem_euclid(r) == target)
        .map(|l| binomial(k as u64, l))
        .sum())
}

/// Walks of `k` steps from 0 to `c` on the circulant digraph of Z_r with the given connection set.
pub fn circulant_walks(r: u32, connection: &[u32], k: u32, c: u32) -> Result<Count> {
    if r < 2 {
        return Err(Error::invalid(format!("circulant walks need r >= 2, got {r}")));
    }
    if connection.is_empty() || connection.iter().any(|&s| s == 0 || s >= r) {
        return Err(Error::invalid(format!(
            "connection residues must lie in 1..{r}, got {connection:?}"
        )));
    }
    if c >= r {
        return Err(Error::out_of_range(format!("target {c} outside Z_{r}")));
    }
    let free = vec![(1, 0); connection.len()];
    let mut total = BigUint::zero();
    for_each_congruent_composition(k, &free, &mut |ls| {
        let shift: u64 = ls.iter().zip(connection).map(|(&l, &s)| l as u64 * s as u64).sum();
        if shift % r as u64 == c as u64 {
            total += multinomial(k, ls).expect("parts sum to k");
        }
    });
    Ok(total)
}

/// Walks of `k` steps from 0 to `c` for `Z_{r_1} x ... x Z_{r_n}` with the coordinate module.
pub fn abelian_walks(radii: &[u32], k: u32, c: &[u32]) -> Result<Count> {
    if radii.is_empty() || radii.contains(&0) {
        return Err(Error::invalid(format!("radii must be positive, got {radii:?}")));
    }
    if c.len() != radii.len() || c.iter().zip(radii).any(|(&x, &r)| x >= r) {
        return Err(Error::out_of_range(format!(
            "target {c:?} does not fit radii {radii:?}"
        )));
    }
    let constraints: Vec<(u32, u32)> = radii.iter().copied().zip(c.iter().copied()).collect();
    Ok(congruent_multinomial_sum(k, &constraints))
}

/// `prod_j h_{1+c_j}(t, r_j)`: its k-th coefficient is `abelian_walks(radii, k, c)`.
pub fn abelian_walk_egf(radii: &[u32], c: &[u32], order: usize) -> Result<EgfTruncation> {
    if radii.is_empty() || radii.contains(&0) {
        return Err(Error::invalid(format!("radii must be positive, got {radii:?}")));
    }
    if c.len() != radii.len() || c.iter().zip(radii).any(|(&x, &r)| x >= r) {
        return Err(Error::out_of_range(format!(
            "target {c:?} does not fit radii {radii:?}"
        )));
    }
    let mut acc = EgfTruncation::constant(Rational::one(), order);
    for (&r, &cj) in radii.iter().zip(c) {
        acc = acc.product(&egf_hyperbolic(1 + cj as i64, r, order)?)?;
    }
    Ok(acc)
}

/// Multiplicity of `S^lambda` in `(C^n)^{⊗k}`: `sum_l S(k, l) K_{lambda, (n-l, 1^l)}`.
pub fn sn_irrep_dim_formula(n: u32, k: u32, lambda: &Partition) -> Result<Count> {
    if lambda.size() != n {
        return Err(Error::invalid(format!("{lambda} is not a partition of {n}")));
    }
    let mut total = BigUint::zero();
    for l in 0..=n.min(k) {
        let s = stirling2(k, l);
        if !s.is_zero() {
            total += s * kostka_hook_content(lambda, l)?;
        }
    }
    Ok(total)
}

/// Centralizer dimension of the hyperoctahedral group on `(C^n)^{⊗k}`: `sum_{s=1}^n T(k, s)`.
pub fn weyl_bc_centralizer(n: u32, k: u32) -> Result<Count> {
    if n == 0 || k == 0 {
        return Err(Error::invalid(format!("need n >= 1 and k >= 1, got n = {n}, k = {k}")));
    }
    let mut total = BigUint::zero();
    for s in 1..=n {
        total += even_block_partitions(k, s)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_symmetric, natural_module_symmetric, parse_spec};
    use crate::quiver::{mckay_adjacency, walk_count_character, walk_count_matrix};
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(cyclic_walks(10, 6, 0, 8).unwrap(), big(15));
        assert_eq!(cyclic_walks(10, 12, 0, 0).unwrap(), big(948));
        assert_eq!(cyclic_walks(5, 0, 3, 3).unwrap(), big(1));
        assert_eq!(cyclic_walks(5, 0, 3, 4).unwrap(), big(0));
        assert!(cyclic_walks(5, 2, 5, 0).is_err());
    }

    #[test]
    fn paley13_two_steps() {
        let qr = crate::group::quadratic_residues(13);
        assert_eq!(circulant_walks(13, &qr, 2, 0).unwrap(), big(6));
        assert_eq!(circulant_walks(13, &qr, 2, 1).unwrap(), big(2));
        assert!(circulant_walks(13, &[0, 1], 2, 1).is_err());
    }

    #[test]
    fn circulant_reduces_to_cyclic() {
        for k in 0..=8 {
            for c in 0..7 {
                assert_eq!(circulant_walks(7, &[1, 6], k, c).unwrap(), cyclic_walks(7, k, 0, c).unwrap());
            }
        }
    }

    #[test]
    fn abelian_examples() {
        assert_eq!(abelian_walks(&[4, 2], 6, &[2, 0]).unwrap(), big(16));
        assert_eq!(abelian_walks(&[4, 2], 6, &[1, 1]).unwrap(), big(12));
        assert_eq!(abelian_walks(&[2, 2], 2, &[0, 0]).unwrap(), big(2));
        assert!(abelian_walks(&[4, 2], 6, &[1, 2]).is_err());
    }

    #[test]
    fn abelian_matches_quiver() {
        let (g, v) = parse_spec("Z3xZ2xZ2").unwrap().build().unwrap();
        let a = mckay_adjacency(&g, &v).unwrap();
        for k in 0..=6 {
            for ci in 0..g.num_classes() {
                let t = crate::group::tuple_of(ci, &[3, 2, 2]);
                assert_eq!(abelian_walks(&[3, 2, 2], k, &t).unwrap(), walk_count_matrix(&a, k, 0, ci).unwrap());
            }
        }
    }

    #[test]
    fn hypercube_egf_is_cosh_sinh() {
        let c = egf_hyperbolic(1, 2, 10).unwrap();
        let s = egf_hyperbolic(2, 2, 10).unwrap();
        let e = abelian_walk_egf(&[2, 2, 2], &[1, 0, 1], 10).unwrap();
        assert_eq!(e, c.product(&s).unwrap().product(&s).unwrap());
        for k in 0..=10 {
            assert_eq!(e.count(k).unwrap(), abelian_walks(&[2, 2, 2], k as u32, &[1, 0, 1]).unwrap());
        }
    }

    #[test]
    fn sn_examples() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(sn_irrep_dim_formula(4, 3, &p(&[1, 1, 1, 1])).unwrap(), big(1));
        assert_eq!(sn_irrep_dim_formula(4, 2, &p(&[4])).unwrap(), big(2));
        assert_eq!(sn_irrep_dim_formula(2, 1, &p(&[1, 1])).unwrap(), big(1));
        assert!(sn_irrep_dim_formula(3, 1, &p(&[2, 1, 1])).is_err());
    }

    #[test]
    fn sn_matches_characters() {
        for n in 1..=5 {
            let g = build_symmetric(n).unwrap();
            let v = natural_module_symmetric(&g).unwrap();
            for lam in 0..g.num_irreps() {
                let shape: Partition = g.irreps[lam].label.parse().unwrap();
                for k in 0..=6 {
                    assert_eq!(
                        sn_irrep_dim_formula(n, k, &shape).unwrap(),
                        walk_count_character(&g, &v, k, 0, lam).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(weyl_bc_centralizer(2, 2).unwrap(), big(4));
        assert_eq!(weyl_bc_centralizer(1, 3).unwrap(), big(1));
        assert_eq!(weyl_bc_centralizer(3, 2).unwrap(), big(4));
    }

    proptest! {
        #[test]
        fn cyclic_row_sums_to_two_power(r in 2u32..12, k in 0u32..14, a in 0u32..12) {
            let a = a % r;
            let total: BigUint = (0..r).map(|c| cyclic_walks(r, k, a, c).unwrap()).sum();
            prop_assert_eq!(total, BigUint::from(2u32).pow(k));
        }

        #[test]
        fn cyclic_is_translation_invariant(r in 2u32..12, k in 0u32..12, a in 0u32..12, c in 0u32..12, s in 0u32..12) {
            let (a, c, s) = (a % r, c % r, s % r);
            prop_assert_eq!(
                cyclic_walks(r, k, a, c).unwrap(),
                cyclic_walks(r, k, (a + s) % r, (c + s) % r).unwrap()
            );
        }
    }
}
