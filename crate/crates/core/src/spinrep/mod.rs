//! Representations of the groups in the catalog: homomorphism checks, the
//! intertwiner (classical) method, the IR catalog by spin type, characters,
//! and the projective restriction to G27.

mod catalog;
mod character;
mod classical;
mod cocycle;
mod rep;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::exactlin::ArithError;
use crate::groupcore::GroupError;
use crate::mackey::MackeyError;

pub use catalog::{
    classical_setup, descend, full_catalog, induced_pi_0n, irreps_by_spin_type,
    irreps_partially_spin_mu_direct, linear_pi, projection_from_r243, Catalog, ClassicalSetup,
};
pub use character::{
    character, column_orthogonality, inner_product, spin_character_table, CharacterRow,
    CharacterTable, ClassData, ClassFunction,
};
pub use classical::{
    extend_and_tensor, intertwiner_power_identities, solve_intertwiner, Intertwiner, WAction,
};
pub use cocycle::{canonical_section, restrict_to_projective, CocycleTable, ProjectiveImage};
pub use rep::{inflate, verify_rep, Label, Representation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Mackey(#[from] MackeyError),
    #[error("{relation} fails: lhs {lhs}, rhs {rhs}")]
    RelationFailed {
        relation: String,
        lhs: String,
        rhs: String,
    },
    #[error("intertwiner space has dimension {0}, expected 1")]
    IntertwinerDimension(usize),
    #[error("no cube root of {0} normalizes the intertwiner")]
    NoCubeRoot(String),
    #[error("representation lives on {found}, expected {expected}")]
    SchemaMismatch { expected: String, found: String },
    #[error("section is not a lift: {0}")]
    BadSection(String),
    #[error("invalid spin type {0:?}")]
    BadSpinType(String),
}

/// The character χ_{ε,μ} of the multiplier: z₁₂ ↦ ω^ε, z₂₃ ↦ ω^μ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpinType {
    pub eps: u8,
    pub mu: u8,
}

impl SpinType {
    /// Exponents are reduced mod 3, so −1 and 2 agree.
    pub fn new(eps: i64, mu: i64) -> Self {
        SpinType {
            eps: eps.rem_euclid(3) as u8,
            mu: mu.rem_euclid(3) as u8,
        }
    }

    pub const NON_SPIN: SpinType = SpinType { eps: 0, mu: 0 };

    pub fn all() -> Vec<SpinType> {
        (0..3)
            .flat_map(|e| (0..3).map(move |m| SpinType { eps: e, mu: m }))
            .collect()
    }

    pub fn is_non_spin(&self) -> bool {
        self.eps == 0 && self.mu == 0
    }

    pub fn is_partially_spin(&self) -> bool {
        (self.eps == 0) != (self.mu == 0)
    }

    pub fn is_purely_spin(&self) -> bool {
        self.eps != 0 && self.mu != 0
    }
}

impl fmt::Display for SpinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.eps, self.mu)
    }
}

/// Parses `"e,m"` with integer entries; `-1` is accepted for 2.
impl FromStr for SpinType {
    type Err = RepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RepError::BadSpinType(s.to_string());
        let (e, m) = s.split_once(',').ok_or_else(bad)?;
        let e: i64 = e.trim().parse().map_err(|_| bad())?;
        let m: i64 = m.trim().parse().map_err(|_| bad())?;
        if !(-1..=2).contains(&e) || !(-1..=2).contains(&m) {
            return Err(bad());
        }
        Ok(SpinType::new(e, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_type_classification() {
        let all = SpinType::all();
        assert_eq!(all.len(), 9);
        assert_eq!(all.iter().filter(|s| s.is_non_spin()).count(), 1);
        assert_eq!(all.iter().filter(|s| s.is_partially_spin()).count(), 4);
        assert_eq!(all.iter().filter(|s| s.is_purely_spin()).count(), 4);
    }

    #[test]
    fn spin_type_parsing() {
        assert_eq!(
            "1,-1".parse::<SpinType>().unwrap(),
            SpinType { eps: 1, mu: 2 }
        );
        assert_eq!(
            " 2, 0".parse::<SpinType>().unwrap(),
            SpinType { eps: 2, mu: 0 }
        );
        assert!("3,0".parse::<SpinType>().is_err());
        assert!("1".parse::<SpinType>().is_err());
    }
}
