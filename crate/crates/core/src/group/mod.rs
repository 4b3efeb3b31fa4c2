//! Finite groups described by conjugacy classes and character values.
//!
//! - `FullTable` groups carry the whole character table.
//! - `InvariantOnly` groups carry class sizes and module characters only; the
//!   trivial character is still stored as the single row of the table.

mod builders;
mod json;
mod linear;
mod parse;
mod symmetric;
mod wreath;

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{CycNum, Rational};
use crate::error::{Error, Result};

pub use builders::{
    build_abelian, build_cyclic, build_hypercube, circulant_module, coordinate_module,
    paley_module, standard_module_cyclic,
};
pub(crate) use builders::{quadratic_residues, tuple_of};
pub(crate) use wreath::wreath_classes;
pub use json::{group_from_json, group_to_json};
pub use linear::{build_gl2, build_sl2, LinearModule};
pub use parse::{parse_spec, GroupSpec};
pub use symmetric::{build_symmetric, natural_module_symmetric, sn_character};
pub use wreath::{build_wreath_invariant, natural_module_wreath};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    FullTable,
    InvariantOnly,
}

impl Tier {
    pub fn as_str(&self) -> &'static str {
        match self {
            Tier::FullTable => "FullTable",
            Tier::InvariantOnly => "InvariantOnly",
        }
    }
}

/// Which built-in family a group belongs to; used to dispatch closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(u32),
    Abelian(Vec<u32>),
    Symmetric(u32),
    Wreath { r: u32, n: u32 },
    Gl2(u32),
    Sl2(u32),
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    /// `G_1 + G_{r-1}` over a cyclic group.
    CyclicStandard,
    /// `G_{e_1} + ... + G_{e_n}` over a product of cyclic groups.
    Coordinate,
    Circulant(Vec<u32>),
    Paley(u32),
    /// Permutation module of S_n, or the monomial module of a wreath product.
    Natural,
    /// `V = Ind_B^G 1` for GL2/SL2.
    Induced,
    Steinberg,
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub label: String,
    pub size: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepInfo {
    pub label: String,
    pub dim: BigUint,
}

#[derive(Clone, Debug)]
pub struct GroupData {
    pub name: String,
    pub order: BigUint,
    pub tier: Tier,
    pub kind: GroupKind,
    /// Index 0 is the identity class.
    pub classes: Vec<ClassInfo>,
    /// Index 0 is the trivial representation.
    pub irreps: Vec<IrrepInfo>,
    /// `char_table[irrep][class]`
    pub char_table: Vec<Vec<CycNum>>,
    pub exponent: u64,
}

/// Character of a module V, one value per class of `group`.
#[derive(Clone, Debug)]
pub struct ModuleChar {
    pub group: Arc<GroupData>,
    pub values: Vec<CycNum>,
    pub dim: BigUint,
    pub label: String,
    pub kind: ModuleKind,
}

impl GroupData {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn num_irreps(&self) -> usize {
        self.irreps.len()
    }

    pub fn require_full_table(&self, what: &str) -> Result<()> {
        match self.tier {
            Tier::FullTable => Ok(()),
            Tier::InvariantOnly => Err(Error::unsupported(format!(
                "{what} needs the full character table, but {} is InvariantOnly",
                self.name
            ))),
        }
    }

    pub fn character(&self, lam: usize) -> Result<&[CycNum]> {
        self.char_table
            .get(lam)
            .map(Vec::as_slice)
            .ok_or_else(|| match self.tier {
                Tier::InvariantOnly => Error::unsupported(format!(
                    "{} is InvariantOnly; only the trivial irrep (index 0) is available",
                    self.name
                )),
                Tier::FullTable => Error::out_of_range(format!(
                    "irrep index {lam} (group has {} irreps)",
                    self.irreps.len()
                )),
            })
    }

    /// Resolves an irrep given as an index or a label.
    pub fn irrep_index(&self, key: &str) -> Result<usize> {
        let key = key.trim();
        if let Some(i) = self.irreps.iter().position(|ir| ir.label == key) {
            return Ok(i);
        }
        let compact: String = key.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(i) = self.irreps.iter().position(|ir| ir.label == compact) {
            return Ok(i);
        }
        match key.parse::<usize>() {
            Ok(i) if i < self.irreps.len() => Ok(i),
            Ok(i) if self.tier == Tier::InvariantOnly && i > 0 => Err(Error::unsupported(
                format!("{} is InvariantOnly; only irrep 0 is available", self.name),
            )),
            _ => Err(Error::out_of_range(format!(
                "no irrep {key:?} in {}",
                self.name
            ))),
        }
    }

    /// `(1/|G|) sum_c |c| chi(c) conj(psi(c))`
    pub fn inner_product(&self, chi: &[CycNum], psi: &[CycNum]) -> CycNum {
        let s: CycNum = self
            .classes
            .iter()
            .zip(chi.iter().zip(psi))
            .map(|(c, (x, y))| (x * &y.conj()).scale(&size_rat(&c.size)))
            .sum();
        s.scale(&size_rat(&self.order).recip())
    }

    /// Checks that class sizes sum to the order and, for full tables, both
    /// orthogonality relations.
    pub fn validate(&self) -> Result<()> {
        let total: BigUint = self.classes.iter().map(|c| &c.size).sum();
        if total != self.order {
            return Err(Error::consistency(format!(
                "{}: class sizes sum to {total}, order is {}",
                self.name, self.order
            )));
        }
        if self.classes.first().is_none_or(|c| !c.size.is_one()) {
            return Err(Error::consistency("class 0 must be the identity"));
        }
        if self.tier == Tier::InvariantOnly {
            return Ok(());
        }
        if self.irreps.len() != self.classes.len() {
            return Err(Error::consistency(format!(
                "{}: {} irreps but {} classes",
                self.name,
                self.irreps.len(),
                self.classes.len()
            )));
        }
        for (i, a) in self.char_table.iter().enumerate() {
            for (j, b) in self.char_table.iter().enumerate().skip(i) {
                let ip = self.inner_product(a, b);
                let want = CycNum::from_int((i == j) as i64);
                if ip != want {
                    return Err(Error::consistency(format!(
                        "{}: row orthogonality fails at ({i}, {j})",
                        self.name
                    )));
                }
            }
        }
        let n = self.classes.len();
        for c in 0..n {
            for d in c..n {
                let s: CycNum = self
                    .char_table
                    .iter()
                    .map(|row| &row[c] * &row[d].conj())
                    .sum();
                let want = if c == d {
                    CycNum::from_bigint((&self.order / &self.classes[c].size).into())
                } else {
                    CycNum::zero()
                };
                if s != want {
                    return Err(Error::consistency(format!(
                        "{}: column orthogonality fails at ({c}, {d})",
                        self.name
                    )));
                }
            }
        }
        Ok(())
    }
}

impl ModuleChar {
    pub fn new(
        group: Arc<GroupData>,
        values: Vec<CycNum>,
        label: impl Into<String>,
        kind: ModuleKind,
    ) -> Result<Self> {
        if values.len() != group.classes.len() {
            return Err(Error::invalid(format!(
                "module character has {} values for {} classes",
                values.len(),
                group.classes.len()
            )));
        }
        let dim = values[0]
            .to_integer()
            .and_then(|d| d.to_biguint())
            .filter(|d| !d.is_zero())
            .ok_or_else(|| Error::invalid("module character at the identity is not a positive integer"))?;
        Ok(ModuleChar {
            group,
            values,
            dim,
            label: label.into(),
            kind,
        })
    }

    pub fn is_self_dual(&self) -> bool {
        self.values.iter().all(|v| *v == v.conj())
    }
}

pub(crate) fn size_rat(n: &BigUint) -> Rational {
    Rational::from_integer(n.clone().into())
}
