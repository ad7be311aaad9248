//! Brute-force ground truth. Strings are realized as matrix representations
//! on finite sample chains and every Hom, factorization and exactness
//! question is answered by exact linear algebra, without using any of the
//! closed forms in [`crate::rep`] or [`crate::stable`].

mod chain;
mod field;
mod hom;
mod linalg;
mod realize;

pub use chain::{SampleChain, PAD, SHEETS};
pub use field::{Field, FieldKind, Fp, PRIME};
pub use hom::{
    canonical_morphism, exactness_check, hom_dim_circle_direct, hom_dim_circle_oracle,
    left_intersect_oracle, proj_factor_dim_oracle, standard_composite_is_zero,
    standard_morphism_matrix, CircleHom, WINDINGS,
};
pub use linalg::{Echelon, Matrix, SparseRow};
pub use realize::{
    compose, hom_basis, hom_dim_linear, is_natural, realize, realize_string, MatrixRep, Morphism,
};
