//! Exact arithmetic: rationals, small finite fields and dense matrices.

mod field;
mod gfspan;
mod matrix;
mod rational;

pub use field::{Elem, FiniteField};
pub use gfspan::{gf_solve, Span};
pub use matrix::RationalMatrix;
pub use rational::Rational;

/// Build GF(q) for q in {2,3,4,5,7,8,9}.
pub fn field_make(q: u32) -> crate::Result<FiniteField> {
    FiniteField::new(q)
}
