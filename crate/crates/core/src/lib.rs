pub mod algebra;
pub mod bq;
pub mod cocycle;
pub mod cyclotomic;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod taft;
pub mod tensor;
pub mod twist;
pub mod verify;

#[cfg(test)]
mod properties;

pub use algebra::{Algebra, AlgebraRef, TableAlgebra};
pub use cyclotomic::{arith, root_of_unity, ArithOp, CycNumber};
pub use error::{AlgebraError, ConstructionError, CycError, InputError};
pub use tensor::{AlgebraElement, TensorElement};
