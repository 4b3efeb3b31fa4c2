use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;

use super::{ClassInfo, GroupData, GroupKind, IrrepInfo, ModuleChar, ModuleKind, Tier};
use crate::arith::CycNum;
use crate::combinat::is_prime;
use crate::error::{Error, Result};

/// Z_r with classes and irreps both indexed by residues, `chi_a(b) = zeta_r^(ab)`.
pub fn build_cyclic(r: u32) -> Result<Arc<GroupData>> {
    if r < 1 {
        return Err(Error::invalid("cyclic group order must be at least 1"));
    }
    let mut g = abelian_data(&[r], format!("Z{r}"));
    g.kind = GroupKind::Cyclic(r);
    for (i, c) in g.classes.iter_mut().enumerate() {
        c.label = i.to_string();
    }
    for (i, ir) in g.irreps.iter_mut().enumerate() {
        ir.label = i.to_string();
    }
    Ok(Arc::new(g))
}

/// `Z_{r_1} x ... x Z_{r_n}`; elements and irreps are tuples in mixed radix order
/// with the first coordinate most significant.
pub fn build_abelian(radii: &[u32]) -> Result<Arc<GroupData>> {
    if radii.is_empty() || radii.iter().any(|&r| r < 2) {
        return Err(Error::invalid(format!(
            "abelian radii must be a nonempty list of integers >= 2, got {radii:?}"
        )));
    }
    let order: u64 = radii.iter().map(|&r| r as u64).product();
    if order > 1 << 16 {
        return Err(Error::invalid(format!("group order {order} is too large")));
    }
    let name = radii
        .iter()
        .map(|r| format!("Z{r}"))
        .collect::<Vec<_>>()
        .join("x");
    Ok(Arc::new(abelian_data(radii, name)))
}

/// `(Z_2)^n`
pub fn build_hypercube(n: u32) -> Result<Arc<GroupData>> {
    if !(1..=16).contains(&n) {
        return Err(Error::invalid("hypercube dimension must be in 1..=16"));
    }
    let radii = vec![2; n as usize];
    let mut g = abelian_data(&radii, format!("hypercube({n})"));
    g.kind = GroupKind::Abelian(radii);
    Ok(Arc::new(g))
}

pub(crate) fn tuple_of(index: usize, radii: &[u32]) -> Vec<u32> {
    let mut out = vec![0; radii.len()];
    let mut x = index;
    for (j, &r) in radii.iter().enumerate().rev() {
        out[j] = (x % r as usize) as u32;
        x /= r as usize;
    }
    out
}

#[cfg(test)]
fn index_of(tuple: &[u32], radii: &[u32]) -> usize {
    tuple
        .iter()
        .zip(radii)
        .fold(0, |acc, (&a, &r)| acc * r as usize + (a % r) as usize)
}

fn tuple_label(t: &[u32]) -> String {
    let inner: Vec<String> = t.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

fn abelian_data(radii: &[u32], name: String) -> GroupData {
    let order: usize = radii.iter().map(|&r| r as usize).product();
    let l = radii.iter().fold(1u64, |acc, &r| acc.lcm(&(r as u64)));
    let tuples: Vec<Vec<u32>> = (0..order).map(|i| tuple_of(i, radii)).collect();
    let char_table = tuples
        .iter()
        .map(|a| {
            tuples
                .iter()
                .map(|b| {
                    let e: u64 = radii
                        .iter()
                        .enumerate()
                        .map(|(j, &r)| (a[j] as u64 * b[j] as u64 % r as u64) * (l / r as u64))
                        .sum();
                    CycNum::root_of_unity(l, e as i64)
                })
                .collect()
        })
        .collect();
    GroupData {
        name,
        order: BigUint::from(order),
        tier: Tier::FullTable,
        kind: GroupKind::Abelian(radii.to_vec()),
        classes: tuples
            .iter()
            .map(|t| ClassInfo {
                label: tuple_label(t),
                size: BigUint::from(1u32),
            })
            .collect(),
        irreps: tuples
            .iter()
            .map(|t| IrrepInfo {
                label: tuple_label(t),
                dim: BigUint::from(1u32),
            })
            .collect(),
        char_table,
        exponent: l,
    }
}

fn cyclic_order(g: &GroupData) -> Result<u32> {
    match g.kind {
        GroupKind::Cyclic(r) => Ok(r),
        GroupKind::Abelian(ref radii) if radii.len() == 1 => Ok(radii[0]),
        _ => Err(Error::invalid(format!("{} is not a cyclic group", g.name))),
    }
}

/// `V = G_1 + G_{r-1}` over Z_r, so `chi_V(b) = zeta^b + zeta^-b`.
pub fn standard_module_cyclic(g: &Arc<GroupData>) -> Result<ModuleChar> {
    let r = cyclic_order(g)?;
    let values = (0..r as i64)
        .map(|b| &CycNum::root_of_unity(r as u64, b) + &CycNum::root_of_unity(r as u64, -b))
        .collect();
    ModuleChar::new(g.clone(), values, "G_1+G_{r-1}", ModuleKind::CyclicStandard)
}

/// `V = G_{e_1} + ... + G_{e_n}` over a product of cyclic groups.
pub fn coordinate_module(g: &Arc<GroupData>) -> Result<ModuleChar> {
    let GroupKind::Abelian(radii) = &g.kind else {
        return Err(Error::invalid(format!("{} is not a product of cyclic groups", g.name)));
    };
    let values = (0..g.classes.len())
        .map(|i| {
            let b = tuple_of(i, radii);
            radii
                .iter()
                .zip(&b)
                .map(|(&r, &bj)| CycNum::root_of_unity(r as u64, bj as i64))
                .sum()
        })
        .collect();
    ModuleChar::new(g.clone(), values, "coordinate", ModuleKind::Coordinate)
}

/// `V = sum_{s in S} G_s` over Z_r; the McKay quiver is the circulant graph on S.
pub fn circulant_module(g: &Arc<GroupData>, connection: &[u32]) -> Result<ModuleChar> {
    let r = cyclic_order(g)?;
    if connection.is_empty() {
        return Err(Error::invalid("connection set must be nonempty"));
    }
    if let Some(&s) = connection.iter().find(|&&s| s == 0 || s >= r) {
        return Err(Error::invalid(format!(
            "connection residue {s} must lie in 1..{}",
            r.saturating_sub(1)
        )));
    }
    let values = (0..r as i64)
        .map(|b| {
            connection
                .iter()
                .map(|&s| CycNum::root_of_unity(r as u64, s as i64 * b))
                .sum()
        })
        .collect();
    let label = format!(
        "circulant({})",
        connection.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
    );
    ModuleChar::new(g.clone(), values, label, ModuleKind::Circulant(connection.to_vec()))
}

/// Nonzero quadratic residues mod p, ascending.
pub(crate) fn quadratic_residues(p: u32) -> Vec<u32> {
    let mut s: Vec<u32> = (1..p).map(|x| (x as u64 * x as u64 % p as u64) as u32).collect();
    s.sort_unstable();
    s.dedup();
    s
}

/// Circulant module over Z_p whose connection set is the nonzero squares.
pub fn paley_module(p: u32) -> Result<(Arc<GroupData>, ModuleChar)> {
    if p == 2 || !is_prime(p as u64) {
        return Err(Error::invalid(format!("paley needs an odd prime, got {p}")));
    }
    let g = build_cyclic(p)?;
    let mut v = circulant_module(&g, &quadratic_residues(p))?;
    v.label = format!("paley({p})");
    v.kind = ModuleKind::Paley(p);
    Ok((g, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_tables_validate() {
        for r in 1..=12 {
            build_cyclic(r).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn abelian_tables_validate() {
        for radii in [vec![4, 2], vec![2, 2, 2], vec![3, 3], vec![2, 3, 2]] {
            let g = build_abelian(&radii).unwrap();
            g.validate().unwrap();
            let v = coordinate_module(&g).unwrap();
            assert_eq!(v.dim, BigUint::from(radii.len()));
        }
        assert!(build_abelian(&[4, 1]).is_err());
        assert!(build_abelian(&[]).is_err());
    }

    #[test]
    fn tuple_indexing() {
        let radii = [4, 2];
        assert_eq!(tuple_of(5, &radii), vec![2, 1]);
        for i in 0..8 {
            assert_eq!(index_of(&tuple_of(i, &radii), &radii), i);
        }
        let g = build_abelian(&radii).unwrap();
        assert_eq!(g.irreps[5].label, "(2,1)");
    }

    #[test]
    fn paley_connection_set() {
        assert_eq!(quadratic_residues(13), vec![1, 3, 4, 9, 10, 12]);
        assert!(paley_module(15).is_err());
        let (_, v) = paley_module(5).unwrap();
        assert_eq!(v.dim, BigUint::from(2u32));
    }

    #[test]
    fn circulant_rejects_bad_residues() {
        let g = build_cyclic(6).unwrap();
        assert!(circulant_module(&g, &[0]).is_err());
        assert!(circulant_module(&g, &[6]).is_err());
        assert!(circulant_module(&g, &[1, 5]).unwrap().is_self_dual());
    }

    #[test]
    fn coordinate_module_not_self_dual() {
        let g = build_abelian(&[4, 2]).unwrap();
        assert!(!coordinate_module(&g).unwrap().is_self_dual());
        let g = build_cyclic(10).unwrap();
        assert!(standard_module_cyclic(&g).unwrap().is_self_dual());
    }
}
