//! McKay quivers, walk counts and Bratteli diagrams.

use num_bigint::BigUint;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arith::CycNum;
use crate::group::{size_rat, GroupData, ModuleChar};
use crate::error::{Error, Result};

/// Square matrix of nonnegative integers, rows and columns indexed by `labels`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkMatrix {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<BigUint>>,
}

impl WalkMatrix {
    pub fn new(labels: Vec<String>, entries: Vec<Vec<BigUint>>) -> Result<Self> {
        let n = labels.len();
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("walk matrix must be square and match its labels"));
        }
        Ok(WalkMatrix { labels, entries })
    }

    /// Builds a matrix with labels `0..n`.
    pub fn from_u64(rows: &[Vec<u64>]) -> Result<Self> {
        let labels = (0..rows.len()).map(|i| i.to_string()).collect();
        WalkMatrix::new(
            labels,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigUint::from(x)).collect())
                .collect(),
        )
    }

    pub fn identity(labels: Vec<String>) -> Self {
        let n = labels.len();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| BigUint::from((i == j) as u32)).collect())
            .collect();
        WalkMatrix { labels, entries }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.entries[i][j]
    }

    pub fn transpose(&self) -> WalkMatrix {
        let n = self.dim();
        WalkMatrix {
            labels: self.labels.clone(),
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect())
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn mul(&self, other: &WalkMatrix) -> WalkMatrix {
        let n = self.dim();
        let entries = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut row = vec![BigUint::zero(); n];
                for (l, a) in self.entries[i].iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in other.entries[l].iter().enumerate() {
                        if !b.is_zero() {
                            row[j] += a * b;
                        }
                    }
                }
                row
            })
            .collect();
        WalkMatrix {
            labels: self.labels.clone(),
            entries,
        }
    }

    /// `A^k` by binary exponentiation.
    pub fn pow(&self, k: u32) -> WalkMatrix {
        let mut acc = WalkMatrix::identity(self.labels.clone());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[BigUint]) -> Vec<BigUint> {
        let n = self.dim();
        let mut out = vec![BigUint::zero(); n];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, a) in self.entries[i].iter().enumerate() {
                if !a.is_zero() {
                    out[j] += x * a;
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "labels": self.labels,
            "adjacency": self.entries.iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    /// Graphviz rendering: a pair with `a_ij = a_ji` becomes `a_ij` undirected
    /// edges, any other pair becomes directed edges in each direction.
    pub fn to_dot(&self, name: &str) -> String {
        let n = self.dim();
        let mut out = format!("digraph \"{}\" {{\n", name.replace('"', "'"));
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", l.replace('"', "'")));
        }
        let times = |x: &BigUint| -> usize { x.try_into().unwrap_or(usize::MAX).min(64) };
        for i in 0..n {
            for j in i..n {
                let (a, b) = (&self.entries[i][j], &self.entries[j][i]);
                if a == b {
                    for _ in 0..times(a) {
                        out.push_str(&format!("  n{i} -> n{j} [dir=none];\n"));
                    }
                } else {
                    for _ in 0..times(a) {
                        out.push_str(&format!("  n{i} -> n{j};\n"));
                    }
                    for _ in 0..times(b) {
                        out.push_str(&format!("  n{j} -> n{i};\n"));
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

fn nonneg_integer(x: &CycNum, what: impl Fn() -> String) -> Result<BigUint> {
    x.to_integer()
        .filter(|v| !v.is_negative())
        .and_then(|v| v.to_biguint())
        .ok_or_else(|| Error::consistency(format!("{} = {x} is not a nonnegative integer", what())))
}

/// `a_{nu,lambda} = <chi_nu chi_V, chi_lambda>`.
pub fn mckay_adjacency(g: &GroupData, v: &ModuleChar) -> Result<WalkMatrix> {
    g.require_full_table("the McKay quiver")?;
    let n = g.num_irreps();
    let entries = (0..n)
        .into_par_iter()
        .map(|nu| {
            let prod: Vec<CycNum> = g.char_table[nu]
                .iter()
                .zip(&v.values)
                .map(|(a, b)| a * b)
                .collect();
            (0..n)
                .map(|lam| {
                    let ip = g.inner_product(&prod, &g.char_table[lam]);
                    nonneg_integer(&ip, || format!("a[{nu}][{lam}]"))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    WalkMatrix::new(g.irreps.iter().map(|i| i.label.clone()).collect(), entries)
}

fn check_index(a: &WalkMatrix, i: usize) -> Result<()> {
    if i >= a.dim() {
        return Err(Error::out_of_range(format!(
            "vertex {i} (quiver has {} vertices)",
            a.dim()
        )));
    }
    Ok(())
}

/// `(A^k)_{from,to}` by matrix powering.
pub fn walk_count_matrix(a: &WalkMatrix, k: u32, from: usize, to: usize) -> Result<BigUint> {
    check_index(a, from)?;
    check_index(a, to)?;
    Ok(a.pow(k).entries[from][to].clone())
}

/// `(1/|G|) sum_c |c| chi_V(c)^k chi_from(c)` for every class, the common factor
/// of every character-route count.
fn weighted_powers(g: &GroupData, v: &ModuleChar, k: u32, from: &[CycNum]) -> Vec<CycNum> {
    let inv_order = size_rat(&g.order).recip();
    g.classes
        .par_iter()
        .enumerate()
        .map(|(c, cl)| {
            (&v.values[c].pow(k) * &from[c]).scale(&(size_rat(&cl.size) * &inv_order))
        })
        .collect()
}

fn pair_count(w: &[CycNum], to: &[CycNum], what: impl Fn() -> String) -> Result<BigUint> {
    let s: CycNum = w.iter().zip(to).map(|(x, y)| x * &y.conj()).sum();
    nonneg_integer(&s, what)
}

/// `(1/|G|) sum_mu |C_mu| chi_from(mu) chi_V(mu)^k conj(chi_to(mu))`.
pub fn walk_count_character(
    g: &GroupData,
    v: &ModuleChar,
    k: u32,
    from: usize,
    to: usize,
) -> Result<BigUint> {
    let cf = g.character(from)?;
    let ct = g.character(to)?;
    let w = weighted_powers(g, v, k, cf);
    pair_count(&w, ct, || format!("character-route count ({from} -> {to}, k = {k})"))
}

/// Character-route counts from `from` to every irrep at level `k`.
pub fn walk_counts_character_row(
    g: &GroupData,
    v: &ModuleChar,
    k: u32,
    from: usize,
) -> Result<Vec<BigUint>> {
    g.require_full_table("a full row of walk counts")?;
    let w = weighted_powers(g, v, k, g.character(from)?);
    g.char_table
        .par_iter()
        .enumerate()
        .map(|(to, row)| pair_count(&w, row, || format!("count ({from} -> {to}, k = {k})")))
        .collect()
}

/// Trivial-isotypic multiplicities `dim (V^{(x)k})^G` for `k = 0..=max_k`.
pub fn invariant_counts(g: &GroupData, v: &ModuleChar, max_k: u32) -> Result<Vec<BigUint>> {
    let inv_order = size_rat(&g.order).recip();
    let mut pw: Vec<CycNum> = g
        .classes
        .iter()
        .map(|c| CycNum::from_rational(&(size_rat(&c.size) * &inv_order)))
        .collect();
    let mut out = Vec::with_capacity(max_k as usize + 1);
    for k in 0..=max_k {
        let s: CycNum = pw.iter().cloned().sum();
        out.push(nonneg_integer(&s, || format!("invariant count at k = {k}"))?);
        pw = pw.par_iter().zip(&v.values).map(|(p, x)| p * x).collect();
    }
    Ok(out)
}

/// `dim End_G(V^{(x)k})`, computed as the number of closed walks of length 2k at the
/// trivial vertex. This shortcut is valid only for self-dual V.
pub fn centralizer_dim(g: &GroupData, v: &ModuleChar, k: u32) -> Result<BigUint> {
    if !v.is_self_dual() {
        return Err(Error::unsupported(format!(
            "module {} of {} is not self-dual; use the Bratteli diagram instead",
            v.label, g.name
        )));
    }
    walk_count_character(g, v, 2 * k, 0, 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BratteliDiagram {
    pub labels: Vec<String>,
    /// `levels[k]` lists `(irrep, multiplicity)` for the irreps occurring in `V^{(x)k}`.
    pub levels: Vec<Vec<(usize, BigUint)>>,
    pub adjacency: WalkMatrix,
    /// True when V is self-dual, so every edge is undirected.
    pub real: bool,
}

impl BratteliDiagram {
    pub fn multiplicity(&self, k: usize, lam: usize) -> BigUint {
        self.levels[k]
            .iter()
            .find(|(l, _)| *l == lam)
            .map_or_else(BigUint::zero, |(_, m)| m.clone())
    }

    /// `dim Z_k = sum_lambda m_lambda^2`.
    pub fn centralizer_dim(&self, k: usize) -> BigUint {
        self.levels[k].iter().map(|(_, m)| m * m).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "real": self.real,
            "levels": self.levels.iter().enumerate().map(|(k, lv)| json!({
                "k": k,
                "vertices": lv.iter().map(|(l, m)| json!({
                    "irrep": self.labels[*l],
                    "multiplicity": m.to_string(),
                })).collect::<Vec<_>>(),
                "centralizer_dim": self.centralizer_dim(k).to_string(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph bratteli {\n  rankdir=TB;\n");
        for (k, lv) in self.levels.iter().enumerate() {
            out.push_str(&format!("  subgraph level{k} {{ rank=same;"));
            for (l, m) in lv {
                out.push_str(&format!(
                    " \"{k}:{l}\" [label=\"{} ({m})\"];",
                    self.labels[*l].replace('"', "'")
                ));
            }
            out.push_str(" }\n");
        }
        for k in 1..self.levels.len() {
            for (i, _) in &self.levels[k - 1] {
                for (j, _) in &self.levels[k] {
                    let a = self.adjacency.get(*i, *j);
                    if !a.is_zero() {
                        let lbl = if a > &BigUint::from(1u32) {
                            format!(" [label=\"{a}\"]")
                        } else {
                            String::new()
                        };
                        out.push_str(&format!("  \"{}:{i}\" -> \"{k}:{j}\"{lbl};\n", k - 1));
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Levels `0..=max_k` of the Bratteli diagram of `V` starting at the trivial irrep.
pub fn bratteli(g: &GroupData, v: &ModuleChar, max_k: u32) -> Result<BratteliDiagram> {
    let a = mckay_adjacency(g, v)?;
    let n = a.dim();
    let mut cur = vec![BigUint::zero(); n];
    cur[0] = BigUint::from(1u32);
    let mut levels = Vec::new();
    for k in 0..=max_k {
        if k > 0 {
            cur = a.apply_row(&cur);
        }
        levels.push(
            cur.iter()
                .enumerate()
                .filter(|(_, m)| !m.is_zero())
                .map(|(l, m)| (l, m.clone()))
                .collect(),
        );
    }
    Ok(BratteliDiagram {
        labels: a.labels.clone(),
        levels,
        real: v.is_self_dual(),
        adjacency: a,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenReport {
    pub holds: bool,
    /// First `(irrep, class)` where `sum_lambda a_{nu,lambda} chi_lambda(c)` differs
    /// from `chi_V(c) chi_nu(c)`.
    pub first_failure: Option<(usize, usize)>,
}

/// Checks that each class column of the character table is an eigenvector of A
/// with eigenvalue `chi_V(c)`.
pub fn eigen_check(g: &GroupData, v: &ModuleChar, a: &WalkMatrix) -> Result<EigenReport> {
    g.require_full_table("the eigenvector check")?;
    let n = g.num_irreps();
    for nu in 0..n {
        for c in 0..g.num_classes() {
            let lhs: CycNum = (0..n)
                .filter(|&l| !a.entries[nu][l].is_zero())
                .map(|l| g.char_table[l][c].scale(&size_rat(&a.entries[nu][l])))
                .sum();
            let rhs = &v.values[c] * &g.char_table[nu][c];
            if lhs != rhs {
                return Ok(EigenReport {
                    holds: false,
                    first_failure: Some((nu, c)),
                });
            }
        }
    }
    Ok(EigenReport {
        holds: true,
        first_failure: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_cyclic, circulant_module, parse_spec};

    fn quiver(spec: &str) -> (std::sync::Arc<GroupData>, ModuleChar, WalkMatrix) {
        let (g, v) = parse_spec(spec).unwrap().build().unwrap();
        let a = mckay_adjacency(&g, &v).unwrap();
        (g, v, a)
    }

    fn u(x: &BigUint) -> u64 {
        x.try_into().unwrap()
    }

    #[test]
    fn z2_single_edge() {
        let g = build_cyclic(2).unwrap();
        let v = circulant_module(&g, &[1]).unwrap();
        let a = mckay_adjacency(&g, &v).unwrap();
        assert_eq!(a, WalkMatrix::from_u64(&[vec![0, 1], vec![1, 0]]).unwrap());
    }

    #[test]
    fn z10_counts() {
        let (g, v, a) = quiver("Z10");
        assert_eq!(u(&walk_count_matrix(&a, 6, 0, 8).unwrap()), 15);
        assert_eq!(u(&walk_count_character(&g, &v, 6, 0, 8).unwrap()), 15);
        assert_eq!(u(&walk_count_matrix(&a, 12, 0, 0).unwrap()), 948);
        assert_eq!(u(&walk_count_character(&g, &v, 12, 0, 0).unwrap()), 948);
        assert!(walk_count_matrix(&a, 1, 0, 10).is_err());
    }

    #[test]
    fn s4_level_two() {
        let (g, v, _) = quiver("S4");
        let row: Vec<u64> = walk_counts_character_row(&g, &v, 2, 0)
            .unwrap()
            .iter()
            .map(u)
            .collect();
        assert_eq!(row, [2, 3, 1, 1, 0]);
        assert_eq!(u(&centralizer_dim(&g, &v, 2).unwrap()), 15);
        let b = bratteli(&g, &v, 2).unwrap();
        assert_eq!(u(&b.centralizer_dim(2)), 15);
    }

    #[test]
    fn not_self_dual_rejected() {
        let (g, v, _) = quiver("Z4xZ2");
        assert!(matches!(centralizer_dim(&g, &v, 2), Err(Error::Unsupported(_))));
        let b = bratteli(&g, &v, 6).unwrap();
        let col: Vec<u64> = (0..=6).map(|k| u(&b.centralizer_dim(k))).collect();
        assert_eq!(col, [1, 2, 6, 20, 72, 272, 1056]);
        assert!(!b.real);
    }

    #[test]
    fn invariant_only_groups() {
        let (g, v) = parse_spec("Z2wrS2").unwrap().build().unwrap();
        let seq: Vec<u64> = invariant_counts(&g, &v, 6).unwrap().iter().map(u).collect();
        assert_eq!(seq, [1, 0, 1, 0, 4, 0, 16]);
        assert!(matches!(mckay_adjacency(&g, &v), Err(Error::Unsupported(_))));
        assert!(matches!(walk_count_character(&g, &v, 2, 0, 1), Err(Error::Unsupported(_))));
        let (g, v) = parse_spec("SL2(3)@steinberg").unwrap().build().unwrap();
        assert_eq!(u(&walk_count_character(&g, &v, 2, 0, 0).unwrap()), 1);
        let (g, v) = parse_spec("GL2(3)").unwrap().build().unwrap();
        assert_eq!(u(&walk_count_character(&g, &v, 1, 0, 0).unwrap()), 1);
    }

    #[test]
    fn eigenvectors() {
        for s in ["S4", "Z4xZ2", "paley(7)", "circulant(8;1,3)"] {
            let (g, v, a) = quiver(s);
            assert!(eigen_check(&g, &v, &a).unwrap().holds, "{s}");
        }
        let (g, v, mut a) = quiver("S4");
        a.entries[0][1] += 1u32;
        let r = eigen_check(&g, &v, &a).unwrap();
        assert_eq!(r.first_failure.map(|f| f.0), Some(0));
    }

    #[test]
    fn dot_marks_direction() {
        let (_, _, a) = quiver("Z4xZ2");
        let dot = a.to_dot("Z4xZ2");
        assert!(dot.lines().any(|l| l.contains("->") && !l.contains("dir=none")));
        let (_, _, a) = quiver("S3");
        assert!(a.to_dot("S3").contains("dir=none"));
    }
}
