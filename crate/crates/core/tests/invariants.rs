use num_bigint::BigUint;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use tensor_walks::arith::{rat_frac, CycNum, QuadNum};
use tensor_walks::combinat::{factorial, rencontres};
use tensor_walks::group::{parse_spec, GroupData, ModuleChar};
use tensor_walks::quiver::{bratteli, mckay_adjacency, walk_count_matrix};

fn cyc() -> impl Strategy<Value = CycNum> {
    (prop::sample::select(vec![1u64, 3, 4, 5, 8, 12]), prop::collection::vec(-5i64..=5, 12))
        .prop_map(|(n, cs)| {
            let coeffs: Vec<_> = cs.iter().take(n as usize).map(|&c| rat_frac(c, 2)).collect();
            CycNum::from_coeffs(n, &coeffs).unwrap()
        })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(x in cyc()) {
        prop_assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn norm_term_is_nonnegative(x in cyc()) {
        if let Some(q) = (&x * &x.conj()).to_rational() {
            prop_assert!(!q.is_negative());
        }
    }

    #[test]
    fn nonzero_elements_invert(x in cyc()) {
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), CycNum::one());
        }
    }

    #[test]
    fn quadratic_embedding_is_a_homomorphism(
        p in prop::sample::select(vec![5i64, 7, 13]),
        a in -6i64..6, b in -6i64..6, c in -6i64..6, d in -6i64..6,
    ) {
        let dd = if p % 4 == 1 { p } else { -p };
        let x = QuadNum::new(dd, rat_frac(a, 1), rat_frac(b, 2)).unwrap();
        let y = QuadNum::new(dd, rat_frac(c, 3), rat_frac(d, 1)).unwrap();
        prop_assert_eq!((&x * &y).to_cyc().unwrap(), &x.to_cyc().unwrap() * &y.to_cyc().unwrap());
        prop_assert_eq!((&x + &y).to_cyc().unwrap(), &x.to_cyc().unwrap() + &y.to_cyc().unwrap());
    }
}

#[test]
fn rencontres_moments() {
    for n in 1..=8u32 {
        let total: BigUint = (0..=n).map(|m| rencontres(n, m).unwrap()).sum();
        let first: BigUint = (0..=n).map(|m| rencontres(n, m).unwrap() * m).sum();
        assert_eq!(total, factorial(n as u64));
        assert_eq!(first, factorial(n as u64));
    }
}

#[test]
fn symmetric_sign_row() {
    for n in 1..=7 {
        let (g, _) = parse_spec(&format!("S{n}")).unwrap().build().unwrap();
        let sign: Vec<CycNum> = g
            .classes
            .iter()
            .map(|c| {
                let parts = c.label.trim_matches(|ch| ch == '(' || ch == ')').split(',').count() as u32;
                CycNum::from_int(if (n - parts) % 2 == 0 { 1 } else { -1 })
            })
            .collect();
        assert!(g.char_table.contains(&sign), "S{n}");
        assert!(g.char_table[0].iter().all(|x| *x == CycNum::one()));
    }
}

fn quivers() -> Vec<(std::sync::Arc<GroupData>, ModuleChar)> {
    ["Z5", "Z10", "Z4xZ2", "Z3xZ3", "S3", "S4", "S5", "paley(7)", "paley(13)", "hypercube(3)"]
        .iter()
        .map(|s| parse_spec(s).unwrap().build().unwrap())
        .collect()
}

#[test]
fn row_dimension_count() {
    for (g, v) in quivers() {
        let a = mckay_adjacency(&g, &v).unwrap();
        for nu in 0..g.num_irreps() {
            let lhs: BigUint = (0..g.num_irreps()).map(|l| a.get(nu, l) * &g.irreps[l].dim).sum();
            assert_eq!(lhs, &g.irreps[nu].dim * &v.dim, "{}", g.name);
        }
    }
}

#[test]
fn self_dual_modules_give_symmetric_quivers() {
    for spec in ["Z5", "Z10", "Z12", "S3", "S4", "S5", "S6"] {
        let (g, v) = parse_spec(spec).unwrap().build().unwrap();
        assert!(v.is_self_dual());
        assert!(mckay_adjacency(&g, &v).unwrap().is_symmetric(), "{spec}");
    }
    let (g, v) = parse_spec("paley(7)").unwrap().build().unwrap();
    assert!(!v.is_self_dual());
    assert!(!mckay_adjacency(&g, &v).unwrap().is_symmetric());
}

#[test]
fn bratteli_recurrence_matches_matrix_powers() {
    for (g, v) in quivers() {
        let a = mckay_adjacency(&g, &v).unwrap();
        let b = bratteli(&g, &v, 8).unwrap();
        for k in 0..=8 {
            for lam in 0..g.num_irreps() {
                assert_eq!(b.multiplicity(k, lam), walk_count_matrix(&a, k as u32, 0, lam).unwrap());
            }
            let present: Vec<usize> = b.levels[k].iter().map(|(l, _)| *l).collect();
            assert!(b.levels[k].iter().all(|(_, m)| !m.is_zero()));
            assert_eq!(present.len(), (0..g.num_irreps()).filter(|&l| !b.multiplicity(k, l).is_zero()).count());
        }
    }
}
