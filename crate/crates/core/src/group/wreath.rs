use std::sync::Arc;

use num_bigint::BigUint;

use super::{ClassInfo, GroupData, GroupKind, IrrepInfo, ModuleChar, ModuleKind, Tier};
use crate::arith::CycNum;
use crate::combinat::{factorial, multipartitions_of, z_multipartition, MultiPartition, Partition};
use crate::error::{Error, Result};

pub(crate) fn wreath_classes(r: u32, n: u32) -> Vec<MultiPartition> {
    let mut all = multipartitions_of(r, n);
    let mut id = vec![Partition::new(vec![1; n as usize]).expect("valid")];
    id.extend((1..r).map(|_| Partition::default()));
    let id = MultiPartition::new(id);
    all.retain(|a| *a != id);
    all.insert(0, id);
    all
}

/// `Z_r wr S_n` as an InvariantOnly group: classes are r-tuples of partitions,
/// where component i collects cycles whose colour sum is i mod r.
pub fn build_wreath_invariant(r: u32, n: u32) -> Result<Arc<GroupData>> {
    if r < 2 || !(1..=8).contains(&n) {
        return Err(Error::invalid(format!(
            "wreath product needs r >= 2 and 1 <= n <= 8, got r = {r}, n = {n}"
        )));
    }
    let order = BigUint::from(r).pow(n) * factorial(n as u64);
    let classes = wreath_classes(r, n);
    let one = CycNum::one();
    Ok(Arc::new(GroupData {
        name: format!("Z{r}wrS{n}"),
        tier: Tier::InvariantOnly,
        kind: GroupKind::Wreath { r, n },
        classes: classes
            .iter()
            .map(|a| ClassInfo {
                label: a.to_string(),
                size: &order / z_multipartition(a, r),
            })
            .collect(),
        irreps: vec![IrrepInfo {
            label: "trivial".into(),
            dim: BigUint::from(1u32),
        }],
        char_table: vec![vec![one; classes.len()]],
        order,
        exponent: r as u64 * (1..=n as u64).fold(1, num_integer::lcm),
    }))
}

/// Monomial module C^n: `chi_V(alpha) = sum_i p_1(alpha^(i)) zeta_r^(i-1)`.
pub fn natural_module_wreath(g: &Arc<GroupData>) -> Result<ModuleChar> {
    let GroupKind::Wreath { r, n } = g.kind else {
        return Err(Error::invalid(format!("{} is not a wreath product", g.name)));
    };
    let values = wreath_classes(r, n)
        .iter()
        .map(|a| {
            a.components()
                .iter()
                .enumerate()
                .map(|(i, p)| CycNum::root_of_unity(r as u64, i as i64).scale(&crate::arith::rat(p.fixed_points() as i64)))
                .sum()
        })
        .collect();
    ModuleChar::new(g.clone(), values, "monomial", ModuleKind::Natural)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_sizes_sum_to_order() {
        for r in 2..=4 {
            for n in 1..=4 {
                let g = build_wreath_invariant(r, n).unwrap();
                g.validate().unwrap();
                assert_eq!(g.classes[0].label, {
                    let ones = vec!["1"; n as usize].join(",");
                    let empties = vec!["()"; r as usize - 1].join(",");
                    format!("[({ones}),{empties}]")
                });
            }
        }
    }

    #[test]
    fn natural_dimension() {
        let g = build_wreath_invariant(3, 4).unwrap();
        let v = natural_module_wreath(&g).unwrap();
        assert_eq!(v.dim, BigUint::from(4u32));
        assert!(build_wreath_invariant(1, 2).is_err());
        assert!(build_wreath_invariant(2, 9).is_err());
    }
}
