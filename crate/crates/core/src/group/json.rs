use std::sync::Arc;

use num_bigint::BigUint;
use serde_json::{json, Value};

use super::{ClassInfo, GroupData, GroupKind, IrrepInfo, ModuleChar, ModuleKind, Tier};
use crate::arith::CycNum;
use crate::error::{Error, Result};

fn cyc_strings(values: &[CycNum]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect())
}

/// `{name, order, tier, classes: [{label, size}], chi_V: [...]}`; full tables also
/// carry `irreps` and `char_table`.
pub fn group_to_json(g: &GroupData, v: &ModuleChar) -> Value {
    let mut out = json!({
        "name": g.name,
        "order": g.order.to_string(),
        "tier": g.tier.as_str(),
        "classes": g.classes.iter().map(|c| json!({"label": c.label, "size": c.size.to_string()})).collect::<Vec<_>>(),
        "chi_V": cyc_strings(&v.values),
    });
    if g.tier == Tier::FullTable {
        out["irreps"] = json!(g.irreps.iter().map(|ir| ir.label.clone()).collect::<Vec<_>>());
        out["char_table"] = Value::Array(g.char_table.iter().map(|row| cyc_strings(row)).collect());
    }
    out
}

fn bad(msg: impl Into<String>) -> Error {
    Error::invalid(format!("group JSON: {}", msg.into()))
}

fn big(v: &Value, what: &str) -> Result<BigUint> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| bad(format!("{what} is not an integer"))),
        Value::Number(n) => n
            .as_u64()
            .map(BigUint::from)
            .ok_or_else(|| bad(format!("{what} is not a nonnegative integer"))),
        _ => Err(bad(format!("{what} must be a string or number"))),
    }
}

fn cyc_list(v: &Value, what: &str) -> Result<Vec<CycNum>> {
    v.as_array()
        .ok_or_else(|| bad(format!("{what} must be an array")))?
        .iter()
        .map(|x| match x {
            Value::String(s) => s.parse::<CycNum>(),
            Value::Number(n) => n
                .as_i64()
                .map(CycNum::from_int)
                .ok_or_else(|| bad(format!("{what} entry is not an integer"))),
            _ => Err(bad(format!("{what} entries must be strings"))),
        })
        .collect()
}

/// Reads a group and module written by [`group_to_json`] (or by hand). Groups
/// read this way have kind `Custom`; the result is validated before returning.
pub fn group_from_json(value: &Value) -> Result<(Arc<GroupData>, ModuleChar)> {
    let name = value["name"].as_str().unwrap_or("custom").to_string();
    let order = big(&value["order"], "order")?;
    let tier = match value["tier"].as_str() {
        Some("FullTable") => Tier::FullTable,
        Some("InvariantOnly") | None => Tier::InvariantOnly,
        Some(t) => return Err(bad(format!("unknown tier {t:?}"))),
    };
    let classes = value["classes"]
        .as_array()
        .ok_or_else(|| bad("classes must be an array"))?
        .iter()
        .map(|c| {
            Ok(ClassInfo {
                label: c["label"].as_str().ok_or_else(|| bad("class label missing"))?.to_string(),
                size: big(&c["size"], "class size")?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let chi_v = cyc_list(&value["chi_V"], "chi_V")?;
    let (irreps, char_table) = match tier {
        Tier::FullTable => {
            let rows = value["char_table"]
                .as_array()
                .ok_or_else(|| bad("FullTable groups need char_table"))?
                .iter()
                .map(|row| cyc_list(row, "char_table row"))
                .collect::<Result<Vec<_>>>()?;
            let labels: Vec<String> = match value["irreps"].as_array() {
                Some(ls) => ls.iter().map(|l| l.as_str().unwrap_or("").to_string()).collect(),
                None => (0..rows.len()).map(|i| i.to_string()).collect(),
            };
            if labels.len() != rows.len() || rows.iter().any(|r| r.len() != classes.len()) {
                return Err(bad("char_table shape does not match classes and irreps"));
            }
            let irreps = labels
                .into_iter()
                .zip(&rows)
                .map(|(label, row)| {
                    let dim = row[0]
                        .to_integer()
                        .and_then(|d| d.to_biguint())
                        .ok_or_else(|| bad("irrep dimension is not a positive integer"))?;
                    Ok(IrrepInfo { label, dim })
                })
                .collect::<Result<Vec<_>>>()?;
            (irreps, rows)
        }
        Tier::InvariantOnly => (
            vec![IrrepInfo {
                label: "trivial".into(),
                dim: BigUint::from(1u32),
            }],
            vec![vec![CycNum::one(); classes.len()]],
        ),
    };
    let exponent = chi_v
        .iter()
        .chain(char_table.iter().flatten())
        .fold(1u64, |acc, x| crate::arith::lcm_u64(acc, x.minimize().conductor()));
    let g = Arc::new(GroupData {
        name,
        order,
        tier,
        kind: GroupKind::Custom,
        classes,
        irreps,
        char_table,
        exponent,
    });
    g.validate()?;
    let v = ModuleChar::new(g.clone(), chi_v, "V", ModuleKind::Custom)?;
    Ok((g, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_spec;

    #[test]
    fn round_trip() {
        for s in ["Z4xZ2", "S4", "SL2(5)", "Z3wrS2", "paley(7)"] {
            let (g, v) = parse_spec(s).unwrap().build().unwrap();
            let j = group_to_json(&g, &v);
            let (g2, v2) = group_from_json(&j).unwrap();
            assert_eq!(g2.order, g.order);
            assert_eq!(g2.classes, g.classes);
            assert_eq!(g2.char_table, g.char_table);
            assert_eq!(v2.values, v.values);
        }
    }

    #[test]
    fn rejects_bad_class_equation() {
        let j = json!({
            "name": "bad", "order": "4", "tier": "InvariantOnly",
            "classes": [{"label": "e", "size": "1"}, {"label": "x", "size": "2"}],
            "chi_V": ["2; conductor=1", "0; conductor=1"],
        });
        assert!(matches!(group_from_json(&j), Err(Error::Consistency(_))));
    }
}
