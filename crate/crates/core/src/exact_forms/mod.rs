//! Exact scalars, binary and ternary forms, and symmetric 3x3 matrices.

pub mod binary;
pub mod field;
mod poly;
pub mod quartic;
pub mod ring;
pub mod symmetric;
pub mod ternary;

pub use binary::{
    binary_gcd, binary_gcd_all, disc3, discriminant, resultant, squarefree_decomposition, squarefree_pattern,
    BinaryForm, SquarefreePattern,
};
pub use field::{Field, FieldElement, Modulus, DEFAULT_PRIME};
pub use quartic::{j_of_cross_ratio, quartic_i, quartic_j, BinaryQuartic};
pub use ring::Ring;
pub use symmetric::{det3, rank3, Sym3, SymMatrix3};
pub use ternary::{hessian, TernaryForm};
