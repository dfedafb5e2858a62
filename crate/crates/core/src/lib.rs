pub mod associator;
pub mod braid_lie;
pub mod cli;
pub mod error;
pub mod freegrp;
pub mod linalg;
pub mod morphism_lab;
pub mod racinet;
pub mod ring;
pub mod series;
pub mod sphere_braid;
pub mod w_algebras;

pub use error::{AlgebraError, Result};
pub use ring::{q, qf, Ring, Truncated, Q};
pub use series::{Alphabet, TensorSeries, TruncSeries, UniSeries, Word};
