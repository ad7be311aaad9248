//! The stable category: admissible arcs of the ∞-gon, the bijection with
//! non-projective intervals, shift, translate, Hom-hammocks, almost split
//! triangles and the Auslander–Reiten quiver.

mod arc;
mod hom;
mod quiver;

pub use arc::{phi, phi_inv, shift, tau, Arc};
pub use hom::{
    almost_split_triangle, compose_nonzero_stable, hom_dim, hom_dim_closed_form, in_minus,
    in_minus_closed_form, in_plus, in_plus_closed_form, irreducible, serre_dual_check,
    spherical_profile, thick_closure, ArTriangle,
};
pub use quiver::{ar_quiver, Adjacency, ArQuiver, Component, ComponentLabel};
