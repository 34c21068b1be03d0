//! Certified Seshadri constants of polarized abelian varieties.
//!
//! An instance ([`AVSpec`]) lists numerical data only: dimension, degree `L^n`,
//! catalogued abelian subvarieties with their restricted degrees, and curve
//! certificates. The [`engine`] applies exact inference rules ([`rules`]) to a
//! fixpoint and returns an exact value or a certified interval with a proof tree.
//! Every inequality is decided by [`Radical`] comparison on integers.

pub mod cli;
pub mod engine;
pub mod error;
pub mod model;
pub mod oracle;
pub mod radical;
pub mod rational;
pub mod rules;

pub use engine::{evaluate, explain, summary, Engine, ProofTree, SeshadriResult, Status, Submaximality};
pub use error::{DomainError, EvalError};
pub use model::{validate, AVSpec, CurveCert, Diagnostic, PpavType};
pub use radical::{Comparison, Radical};
pub use rational::Rational;
