//! The abelian category of string modules on the ∞-gon: intervals, Hom
//! calculus, hammocks, projectives, extensions and Auslander–Reiten theory.

mod hom;
mod interval;
mod sequences;

pub use hom::{
    compose_nonzero, exists_epi, exists_mono, hammock_classify, hom_dim_rep, hom_report,
    in_h_minus, in_h_plus, in_p, injective_envelope, left_intersect_nonempty, proj_factor_dim,
    projective_cover, windings, Hammock, HomReport,
};
pub use interval::{Derived, Interval, LiftedEndpoint};
pub use sequences::{
    almost_split_sequence, composition_factors, irreducible_rep, middle_terms, AlmostSplitSequence,
    CompositionSeries,
};
