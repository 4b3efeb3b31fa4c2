use std::collections::HashMap;
use std::sync::Arc;

use super::{ClassInfo, GroupData, GroupKind, IrrepInfo, ModuleChar, ModuleKind, Tier};
use crate::arith::CycNum;
use crate::combinat::{factorial, partitions_of, z_lambda, Partition};
use crate::error::{Error, Result};

type Memo = HashMap<(Vec<u32>, Vec<u32>), i64>;

/// Character value `chi^lambda(mu)` by the Murnaghan-Nakayama rule.
pub fn sn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::invalid(format!(
            "{lambda} and {mu} are partitions of different integers"
        )));
    }
    Ok(mn(lambda.parts(), mu.parts(), &mut HashMap::new()))
}

// Removes rim hooks of length mu[0] using beta-numbers: a hook of length m is a bead
// moved from b to b - m, with sign (-1)^(beads jumped over).
fn mn(lam: &[u32], mu: &[u32], memo: &mut Memo) -> i64 {
    let Some((&m, rest)) = mu.split_first() else {
        return lam.is_empty() as i64;
    };
    let key = (lam.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = lam.len() as u32;
    let beta: Vec<u32> = lam
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i as u32)
        .collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < m || beta.contains(&(b - m)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > b - m && x < b).count();
        let mut nb = beta.clone();
        nb[i] = b - m;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let new_lam: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j as u32))
            .filter(|&p| p > 0)
            .collect();
        let v = mn(&new_lam, rest, memo);
        total += if jumped % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

/// S_n with irreps in reverse-lex order (index 0 is `(n)`) and classes in the
/// opposite order, so that class 0 is the identity `(1^n)`.
pub fn build_symmetric(n: u32) -> Result<Arc<GroupData>> {
    if !(1..=12).contains(&n) {
        return Err(Error::invalid(format!("S_n is supported for 1 <= n <= 12, got {n}")));
    }
    let irreps = partitions_of(n);
    let classes: Vec<Partition> = irreps.iter().rev().cloned().collect();
    let order = factorial(n as u64);
    let mut memo = Memo::new();
    let char_table: Vec<Vec<CycNum>> = irreps
        .iter()
        .map(|lam| {
            classes
                .iter()
                .map(|mu| CycNum::from_int(mn(lam.parts(), mu.parts(), &mut memo)))
                .collect()
        })
        .collect();
    Ok(Arc::new(GroupData {
        name: format!("S{n}"),
        tier: Tier::FullTable,
        kind: GroupKind::Symmetric(n),
        classes: classes
            .iter()
            .map(|mu| ClassInfo {
                label: mu.to_string(),
                size: &order / z_lambda(mu),
            })
            .collect(),
        irreps: irreps
            .iter()
            .zip(&char_table)
            .map(|(lam, row)| IrrepInfo {
                label: lam.to_string(),
                dim: row[0]
                    .to_integer()
                    .and_then(|d| d.to_biguint())
                    .expect("dimension is a positive integer"),
            })
            .collect(),
        char_table,
        order,
        exponent: (1..=n as u64).fold(1, num_integer::lcm),
    }))
}

/// Permutation module C^n of S_n; `chi_V(mu)` is the number of fixed points.
pub fn natural_module_symmetric(g: &Arc<GroupData>) -> Result<ModuleChar> {
    let GroupKind::Symmetric(_) = g.kind else {
        return Err(Error::invalid(format!("{} is not a symmetric group", g.name)));
    };
    let values = g
        .classes
        .iter()
        .map(|c| {
            let mu: Partition = c.label.parse()?;
            Ok(CycNum::from_int(mu.fixed_points() as i64))
        })
        .collect::<Result<Vec<_>>>()?;
    ModuleChar::new(g.clone(), values, "permutation", ModuleKind::Natural)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn ints(row: &[CycNum]) -> Vec<i64> {
        row.iter()
            .map(|x| i64::try_from(x.to_integer().unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn s4_table() {
        let g = build_symmetric(4).unwrap();
        let sizes: Vec<u32> = g.classes.iter().map(|c| u32::try_from(&c.size).unwrap()).collect();
        assert_eq!(sizes, [1, 6, 3, 8, 6]);
        let table: Vec<Vec<i64>> = g.char_table.iter().map(|r| ints(r)).collect();
        assert_eq!(
            table,
            vec![
                vec![1, 1, 1, 1, 1],
                vec![3, 1, -1, 0, -1],
                vec![2, 0, 2, -1, 0],
                vec![3, -1, -1, 0, 1],
                vec![1, -1, 1, 1, -1],
            ]
        );
        g.validate().unwrap();
    }

    #[test]
    fn tables_validate_up_to_seven() {
        for n in 1..=7 {
            build_symmetric(n).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn dimensions_square_sum() {
        for n in 1..=9 {
            let g = build_symmetric(n).unwrap();
            let s: BigUint = g.irreps.iter().map(|ir| &ir.dim * &ir.dim).sum();
            assert_eq!(s, g.order);
        }
    }

    #[test]
    fn natural_module() {
        let g = build_symmetric(4).unwrap();
        let v = natural_module_symmetric(&g).unwrap();
        assert_eq!(ints(&v.values), [4, 2, 0, 1, 0]);
        assert!(build_symmetric(13).is_err());
    }
}
