//! Explicit finite groups: closure, conjugacy classes and character degrees.

mod degrees;
mod field;
mod group;
mod models;

use thiserror::Error;

pub use degrees::{char_degrees, dixon_prime, DegreeReport};
pub use field::{FieldError, FiniteField};
pub use group::{ConcreteGroup, ConjugacyClass, ElementKind, DEFAULT_BOUND};
pub use models::{build_lemma33_group, build_sylow_lie, even_part, permutation_group, SylowFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("group order exceeds the bound {bound}")]
    BoundExceeded { bound: usize },
    #[error("inconsistent generators: {0}")]
    InconsistentGenerators(String),
    #[error("no prime l = 1 mod {exponent} below {limit}")]
    NoModularPrime { exponent: u64, limit: u64 },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("unsupported model: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}
