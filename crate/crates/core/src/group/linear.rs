use std::sync::Arc;

use num_bigint::BigUint;

use super::{ClassInfo, GroupData, GroupKind, IrrepInfo, ModuleChar, ModuleKind, Tier};
use crate::arith::CycNum;
use crate::combinat::prime_power;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearModule {
    /// `V = Ind_B^G 1`, dimension q + 1.
    Induced,
    /// Steinberg module `V_q`, dimension q.
    Steinberg,
}

struct ClassRow {
    name: &'static str,
    count: i64,
    size: i64,
    chi_v: i64,
    chi_vq: i64,
}

fn check_q(q: u32) -> Result<i64> {
    match prime_power(q as u64) {
        Some((p, _)) if p != 2 && q <= 13 => Ok(q as i64),
        _ => Err(Error::invalid(format!(
            "q must be an odd prime power <= 13, got {q}"
        ))),
    }
}

fn char_p(q: i64) -> u64 {
    prime_power(q as u64).expect("checked").0
}

fn gl2_rows(q: i64) -> Vec<ClassRow> {
    vec![
        ClassRow { name: "a", count: q - 1, size: 1, chi_v: q + 1, chi_vq: q },
        ClassRow { name: "b", count: q - 1, size: q * q - 1, chi_v: 1, chi_vq: 0 },
        ClassRow { name: "c", count: (q - 1) * (q - 2) / 2, size: q * q + q, chi_v: 2, chi_vq: 1 },
        ClassRow { name: "d", count: q * (q - 1) / 2, size: q * q - q, chi_v: 0, chi_vq: -1 },
    ]
}

fn sl2_rows(q: i64) -> Vec<ClassRow> {
    vec![
        ClassRow { name: "+-I", count: 2, size: 1, chi_v: q + 1, chi_vq: q },
        ClassRow { name: "u", count: (q - 3) / 2, size: q * (q + 1), chi_v: 2, chi_vq: 1 },
        ClassRow { name: "v", count: 2, size: (q * q - 1) / 2, chi_v: 1, chi_vq: 0 },
        ClassRow { name: "-v", count: 2, size: (q * q - 1) / 2, chi_v: 1, chi_vq: 0 },
        ClassRow { name: "w", count: (q - 1) / 2, size: q * (q - 1), chi_v: 0, chi_vq: -1 },
    ]
}

// Class order: table row order, then parameter index within the row.
fn linear_group(name: String, order: i64, exponent: u64, kind: GroupKind, rows: &[ClassRow]) -> GroupData {
    let mut classes = Vec::new();
    for row in rows {
        for i in 1..=row.count {
            classes.push(ClassInfo {
                label: format!("{}#{i}", row.name),
                size: BigUint::from(row.size as u64),
            });
        }
    }
    let n = classes.len();
    GroupData {
        name,
        order: BigUint::from(order as u64),
        tier: Tier::InvariantOnly,
        kind,
        classes,
        irreps: vec![IrrepInfo {
            label: "trivial".into(),
            dim: BigUint::from(1u32),
        }],
        char_table: vec![vec![CycNum::one(); n]],
        exponent,
    }
}

pub fn build_gl2(q: u32) -> Result<Arc<GroupData>> {
    let q = check_q(q)?;
    let order = q * (q + 1) * (q - 1) * (q - 1);
    Ok(Arc::new(linear_group(
        format!("GL2({q})"),
        order,
        char_p(q) * (q * q - 1) as u64,
        GroupKind::Gl2(q as u32),
        &gl2_rows(q),
    )))
}

pub fn build_sl2(q: u32) -> Result<Arc<GroupData>> {
    let q = check_q(q)?;
    let order = q * (q - 1) * (q + 1);
    Ok(Arc::new(linear_group(
        format!("SL2({q})"),
        order,
        char_p(q) * (q * q - 1) as u64 / 2,
        GroupKind::Sl2(q as u32),
        &sl2_rows(q),
    )))
}

impl LinearModule {
    /// Character of this module on `g`, which must come from `build_gl2` or `build_sl2`.
    pub fn character(self, g: &Arc<GroupData>) -> Result<ModuleChar> {
        let rows = match g.kind {
            GroupKind::Gl2(q) => gl2_rows(q as i64),
            GroupKind::Sl2(q) => sl2_rows(q as i64),
            _ => {
                return Err(Error::invalid(format!("{} is not GL2(q) or SL2(q)", g.name)));
            }
        };
        let mut values = Vec::new();
        for row in &rows {
            let v = match self {
                LinearModule::Induced => row.chi_v,
                LinearModule::Steinberg => row.chi_vq,
            };
            values.extend((0..row.count).map(|_| CycNum::from_int(v)));
        }
        let (label, kind) = match self {
            LinearModule::Induced => ("V", ModuleKind::Induced),
            LinearModule::Steinberg => ("steinberg", ModuleKind::Steinberg),
        };
        ModuleChar::new(g.clone(), values, label, kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(m: &ModuleChar) -> Vec<i64> {
        m.values
            .iter()
            .map(|x| i64::try_from(x.to_integer().unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn class_equations() {
        for q in [3, 5, 7, 9, 11, 13] {
            build_gl2(q).unwrap().validate().unwrap();
            build_sl2(q).unwrap().validate().unwrap();
        }
        for bad in [2, 4, 6, 15, 17] {
            assert!(build_gl2(bad).is_err());
        }
    }

    #[test]
    fn gl2_3_induced() {
        let g = build_gl2(3).unwrap();
        let v = LinearModule::Induced.character(&g).unwrap();
        assert_eq!(ints(&v), [4, 4, 1, 1, 2, 0, 0, 0]);
        assert_eq!(g.classes.len(), 8);
    }

    #[test]
    fn sl2_3_steinberg() {
        let g = build_sl2(3).unwrap();
        let v = LinearModule::Steinberg.character(&g).unwrap();
        assert_eq!(ints(&v), [3, 3, 0, 0, 0, 0, -1]);
        assert_eq!(v.dim, BigUint::from(3u32));
    }
}
