//! The matrix-unit basis `E_gamma^beta` of the centralizer algebra of an abelian
//! group acting on `V^{⊗k}`, with `V` the sum of the coordinate characters,
//! and its realization as two-row diagrams.
//!
//! Words use letters `1..=n`, one per cyclic factor. `bottom` is the word the
//! element accepts and `top` the word it produces.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::arith::CycNum;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramElement {
    pub radii: Vec<u32>,
    pub bottom: Vec<u32>,
    pub top: Vec<u32>,
}

fn check_radii(radii: &[u32]) -> Result<()> {
    if radii.is_empty() || radii.contains(&0) {
        return Err(Error::invalid(format!("radii must be positive, got {radii:?}")));
    }
    Ok(())
}

fn check_word(radii: &[u32], word: &[u32]) -> Result<()> {
    let n = radii.len() as u32;
    if let Some(x) = word.iter().find(|&&x| x == 0 || x > n) {
        return Err(Error::out_of_range(format!("letter {x} outside 1..={n}")));
    }
    Ok(())
}

/// `sum_i epsilon_{gamma_i}` reduced componentwise mod the radii.
pub fn word_target(radii: &[u32], word: &[u32]) -> Result<Vec<u32>> {
    check_radii(radii)?;
    check_word(radii, word)?;
    let mut c = vec![0u32; radii.len()];
    for &x in word {
        let j = x as usize - 1;
        c[j] = (c[j] + 1) % radii[j];
    }
    Ok(c)
}

impl DiagramElement {
    /// Checks shape only; use [`DiagramElement::is_valid`] for the congruence condition.
    pub fn new(radii: Vec<u32>, bottom: Vec<u32>, top: Vec<u32>) -> Result<Self> {
        check_radii(&radii)?;
        if bottom.len() != top.len() {
            return Err(Error::invalid(format!(
                "rows have different lengths {} and {}",
                bottom.len(),
                top.len()
            )));
        }
        check_word(&radii, &bottom)?;
        check_word(&radii, &top)?;
        Ok(DiagramElement { radii, bottom, top })
    }

    pub fn k(&self) -> usize {
        self.bottom.len()
    }

    /// Every letter occurs equally often in both rows modulo its radius.
    pub fn is_valid(&self) -> bool {
        word_target(&self.radii, &self.bottom).ok() == word_target(&self.radii, &self.top).ok()
    }

    pub fn target(&self) -> Vec<u32> {
        word_target(&self.radii, &self.bottom).expect("checked on construction")
    }

    fn same_shape(&self, other: &DiagramElement) -> Result<()> {
        if self.radii != other.radii || self.k() != other.k() {
            return Err(Error::invalid(format!(
                "elements live in different algebras: radii {:?} k = {} and radii {:?} k = {}",
                self.radii,
                self.k(),
                other.radii,
                other.k()
            )));
        }
        Ok(())
    }

    /// Node classes: for each letter, the top positions and bottom positions carrying it (1-based).
    pub fn blocks(&self) -> BTreeMap<u32, (Vec<usize>, Vec<usize>)> {
        let mut out: BTreeMap<u32, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for (i, &x) in self.top.iter().enumerate() {
            out.entry(x).or_default().0.push(i + 1);
        }
        for (i, &x) in self.bottom.iter().enumerate() {
            out.entry(x).or_default().1.push(i + 1);
        }
        out
    }

    pub fn render_text(&self) -> String {
        let row = |w: &[u32]| w.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" ");
        let mut s = format!("top    {}\nbottom {}\n", row(&self.top), row(&self.bottom));
        for (x, (t, b)) in self.blocks() {
            let t: Vec<String> = t.iter().map(|i| format!("t{i}")).collect();
            let b: Vec<String> = b.iter().map(|i| format!("b{i}")).collect();
            s.push_str(&format!("block {x}: {}\n", [t, b].concat().join(" - ")));
        }
        s
    }

    /// Undirected DOT graph; each block is drawn as a path through its nodes.
    pub fn render_dot(&self) -> String {
        let mut s = String::from("graph diagram {\n  node [shape=circle];\n");
        for (name, w) in [("t", &self.top), ("b", &self.bottom)] {
            s.push_str("  { rank=same;");
            for (i, x) in w.iter().enumerate() {
                s.push_str(&format!(" {name}{} [label=\"{x}\"];", i + 1));
            }
            s.push_str(" }\n");
        }
        for (i, _) in self.top.iter().enumerate().skip(1) {
            s.push_str(&format!("  t{} -- t{} [style=invis];\n", i, i + 1));
        }
        for (_, (t, b)) in self.blocks() {
            let nodes: Vec<String> = t
                .iter()
                .map(|i| format!("t{i}"))
                .chain(b.iter().map(|i| format!("b{i}")))
                .collect();
            for pair in nodes.windows(2) {
                s.push_str(&format!("  {} -- {};\n", pair[0], pair[1]));
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "radii": self.radii,
            "bottom": self.bottom,
            "top": self.top,
            "valid": self.is_valid(),
        })
    }
}

impl fmt::Display for DiagramElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "E[{}]^[{}]", w(&self.bottom), w(&self.top))
    }
}

/// `e1 e2`: apply `e2`, then `e1`. Nonzero exactly when `e2.top == e1.bottom`.
pub fn compose(e1: &DiagramElement, e2: &DiagramElement) -> Result<Option<DiagramElement>> {
    e1.same_shape(e2)?;
    Ok((e2.top == e1.bottom).then(|| DiagramElement {
        radii: e1.radii.clone(),
        bottom: e2.bottom.clone(),
        top: e1.top.clone(),
    }))
}

/// `E_gamma^beta x(alpha) = delta_{alpha, gamma} x(beta)`.
pub fn action_on_tensor(e: &DiagramElement, word: &[u32]) -> Result<Option<Vec<u32>>> {
    if word.len() != e.k() {
        return Err(Error::invalid(format!(
            "word of length {} applied to an element with k = {}",
            word.len(),
            e.k()
        )));
    }
    check_word(&e.radii, word)?;
    Ok((word == e.bottom.as_slice()).then(|| e.top.clone()))
}

/// All words of length k, lexicographic, grouped by target.
fn words_by_target(radii: &[u32], k: usize) -> BTreeMap<Vec<u32>, Vec<Vec<u32>>> {
    let n = radii.len() as u32;
    let mut out: BTreeMap<Vec<u32>, Vec<Vec<u32>>> = BTreeMap::new();
    let mut w = vec![1u32; k];
    loop {
        out.entry(word_target(radii, &w).expect("letters in range"))
            .or_default()
            .push(w.clone());
        let Some(i) = (0..k).rev().find(|&i| w[i] < n) else {
            break;
        };
        w[i] += 1;
        for x in &mut w[i + 1..] {
            *x = 1;
        }
    }
    out
}

/// Lazy enumeration of the basis in lexicographic order of `(bottom, top)`.
pub struct BasisIter {
    radii: Vec<u32>,
    bottoms: Vec<(Vec<u32>, Vec<u32>)>,
    buckets: BTreeMap<Vec<u32>, Vec<Vec<u32>>>,
    i: usize,
    j: usize,
}

impl Iterator for BasisIter {
    type Item = DiagramElement;

    fn next(&mut self) -> Option<DiagramElement> {
        loop {
            let (bottom, c) = self.bottoms.get(self.i)?;
            let tops = &self.buckets[c];
            if let Some(top) = tops.get(self.j) {
                self.j += 1;
                return Some(DiagramElement {
                    radii: self.radii.clone(),
                    bottom: bottom.clone(),
                    top: top.clone(),
                });
            }
            self.i += 1;
            self.j = 0;
        }
    }
}

pub fn basis_iter(radii: &[u32], k: usize, target: Option<&[u32]>) -> Result<BasisIter> {
    check_radii(radii)?;
    if let Some(c) = target {
        if c.len() != radii.len() || c.iter().zip(radii).any(|(&x, &r)| x >= r) {
            return Err(Error::out_of_range(format!("target {c:?} does not fit radii {radii:?}")));
        }
    }
    let buckets = words_by_target(radii, k);
    let mut bottoms: Vec<(Vec<u32>, Vec<u32>)> = buckets
        .iter()
        .filter(|(c, _)| target.is_none_or(|t| t == c.as_slice()))
        .flat_map(|(c, ws)| ws.iter().map(move |w| (w.clone(), c.clone())))
        .collect();
    bottoms.sort();
    Ok(BasisIter {
        radii: radii.to_vec(),
        bottoms,
        buckets,
        i: 0,
        j: 0,
    })
}

pub fn enumerate_basis(radii: &[u32], k: usize, target: Option<&[u32]>) -> Result<Vec<DiagramElement>> {
    Ok(basis_iter(radii, k, target)?.collect())
}

/// Number of basis elements, `sum_c m_c^2`, without building them.
pub fn basis_size(radii: &[u32], k: usize, target: Option<&[u32]>) -> Result<u64> {
    let it = basis_iter(radii, k, target)?;
    Ok(it
        .buckets
        .iter()
        .filter(|(c, _)| target.is_none_or(|t| t == c.as_slice()))
        .map(|(_, ws)| (ws.len() as u64).pow(2))
        .sum())
}

/// Eigenvalue of the group element `a` on `x(word)`: `prod_i zeta_{r_j}^{a_j}` with `j = word_i`.
pub fn word_character(radii: &[u32], word: &[u32], a: &[u32]) -> Result<CycNum> {
    check_radii(radii)?;
    check_word(radii, word)?;
    if a.len() != radii.len() {
        return Err(Error::invalid("group element has the wrong number of coordinates"));
    }
    Ok(word.iter().fold(CycNum::one(), |acc, &x| {
        let j = x as usize - 1;
        &acc * &CycNum::root_of_unity(radii[j] as u64, a[j] as i64)
    }))
}

/// `chi_c(a) = prod_j zeta_{r_j}^{a_j c_j}`.
pub fn target_character(radii: &[u32], c: &[u32], a: &[u32]) -> Result<CycNum> {
    check_radii(radii)?;
    if a.len() != radii.len() || c.len() != radii.len() {
        return Err(Error::invalid("tuple has the wrong number of coordinates"));
    }
    Ok((0..radii.len()).fold(CycNum::one(), |acc, j| {
        &acc * &CycNum::root_of_unity(radii[j] as u64, a[j] as i64 * c[j] as i64)
    }))
}
