pub mod algebra;
pub mod constraint;
pub mod divided_power;
pub mod hurwitz;
pub mod error;
pub mod free_rb;
pub mod scalar;
pub mod verifier;
