//! Exact arithmetic in ℚ, ℚ(ω) and ℚ(ζ₉), plus small dense matrices over
//! those fields.

mod cyc;
mod cyc9;
mod field;
mod linsolve;
mod matrix;
mod rational;

pub use cyc::CycNumber;
pub use cyc9::Cyc9;
pub use field::Field;
pub use linsolve::{null_space, solve_commuting};
pub use matrix::{Cyc9Matrix, CycMatrix, Matrix};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("cannot parse {0:?}")]
    Parse(String),
}
