use std::fmt::{Debug, Display};
use std::hash::Hash;

use super::ArithError;

/// The operations the matrix and elimination code need from a field of
/// coefficients. Implemented by [`super::CycNumber`] and [`super::Cyc9`].
pub trait Field: Clone + Eq + Hash + Display + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn inv(&self) -> Result<Self, ArithError>;
    /// Complex conjugation.
    fn conj(&self) -> Self;
}
