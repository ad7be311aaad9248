use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rep::interval::{Interval, LiftedEndpoint};

/// Where a target `V` sits relative to a source `U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Hammock {
    /// `V ∈ H⁺(U)`.
    Hplus,
    /// `V ∈ H⁻(Σ⁻¹U)`.
    Hminus,
    /// `V ∈ P(U′)`: every morphism factors through a projective.
    P,
    None,
    /// `U = V` projective-injective, with a two-dimensional Hom space.
    ProjSelf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomReport {
    pub dim_rep: u8,
    pub dim_proj: u8,
    pub dim_stable: u8,
    pub hammock: Hammock,
}

/// Whether `(V + 2nπ) ∩_L U` is nonempty.
pub fn left_intersect_nonempty(v: &Interval, u: &Interval, n: i64) -> bool {
    let floor = LiftedEndpoint::new(u.u1.succ(), 0);
    match n {
        0 => v.u1 <= u.u1 && floor <= v.upper() && v.upper() <= u.upper(),
        -1 => {
            let top = LiftedEndpoint::new(v.u2, 0);
            v.h == 1 && floor <= top && top <= u.upper()
        }
        _ => false,
    }
}

/// The windings `n` (always among 0 and −1) with `(V + 2nπ) ∩_L U ≠ ∅`.
pub fn windings(u: &Interval, v: &Interval) -> impl Iterator<Item = i64> {
    let (u, v) = (*u, *v);
    [0, -1]
        .into_iter()
        .filter(move |&n| left_intersect_nonempty(&v, &u, n))
}

pub fn hom_dim_rep(u: &Interval, v: &Interval) -> u8 {
    if u == v && u.is_projective() {
        return 2;
    }
    windings(u, v).count() as u8
}

/// `V ∈ H⁺(U)`.
pub fn in_h_plus(u: &Interval, v: &Interval) -> bool {
    if u.h == 0 {
        v.h == 0 && v.u1 <= u.u1 && u.u1.succ() <= v.u2 && v.u2 <= u.u2
    } else {
        v.h == 1 && u.u2 <= v.u1 && v.u1 <= u.u1 && v.u2 <= u.u2
    }
}

/// `V ∈ H⁻(U)`.
pub fn in_h_minus(u: &Interval, v: &Interval) -> bool {
    if u.h == 0 {
        v.h == 0 && u.u1 <= v.u1 && v.u1 <= u.u2.pred() && v.u2 >= u.u2
    } else {
        v.h == 1 && v.u1 >= u.u1 && u.u2 <= v.u2 && v.u2 <= u.u1
    }
}

/// `V ∈ P(U)`.
pub fn in_p(u: &Interval, v: &Interval) -> bool {
    if u.h == 0 {
        let start = LiftedEndpoint::new(v.u1, -(v.h as i64)) <= u.lower() && v.u2 >= u.u2;
        let end = v.u1 <= u.u1 && v.upper() >= LiftedEndpoint::new(u.u2, 0);
        start || end
    } else {
        v.h == 1 && v.u1 <= u.u1 && v.u2 >= u.u2
    }
}

/// Which of `H⁺(U)`, `H⁻(Σ⁻¹U)`, `P(U′)` contains `V`. The projective
/// self pair counts as `P`.
pub fn hammock_classify(u: &Interval, v: &Interval) -> Hammock {
    if u == v && u.is_projective() {
        return Hammock::P;
    }
    if in_h_plus(u, v) {
        return Hammock::Hplus;
    }
    if let Some(si) = u.sigma_inv() {
        if in_h_minus(&si, v) {
            return Hammock::Hminus;
        }
    }
    if in_p(&u.prime(), v) {
        return Hammock::P;
    }
    Hammock::None
}

/// Dimension of the subspace of `Hom(U, V)` of maps factoring through a
/// projective.
pub fn proj_factor_dim(u: &Interval, v: &Interval) -> u8 {
    if u == v && u.is_projective() {
        2
    } else if in_p(&u.prime(), v) {
        hom_dim_rep(u, v)
    } else {
        0
    }
}

pub fn hom_report(u: &Interval, v: &Interval) -> HomReport {
    let dim_rep = hom_dim_rep(u, v);
    let dim_proj = proj_factor_dim(u, v);
    let hammock = if u == v && u.is_projective() {
        Hammock::ProjSelf
    } else {
        hammock_classify(u, v)
    };
    HomReport {
        dim_rep,
        dim_proj,
        dim_stable: dim_rep - dim_proj,
        hammock,
    }
}

/// Whether some morphism `U → V` is a monomorphism.
pub fn exists_mono(u: &Interval, v: &Interval) -> Result<bool> {
    if u.is_projective() {
        return Err(Error::Domain(format!(
            "mono criterion needs a non-projective source, got {u}"
        )));
    }
    Ok([0, -1].into_iter().any(|l| {
        left_intersect_nonempty(v, u, l) && u.upper() == LiftedEndpoint::new(v.u2, v.h as i64 + l)
    }))
}

/// Whether some morphism `U → V` is an epimorphism.
pub fn exists_epi(u: &Interval, v: &Interval) -> Result<bool> {
    if v.is_projective() {
        return Err(Error::Domain(format!(
            "epi criterion needs a non-projective target, got {v}"
        )));
    }
    Ok(left_intersect_nonempty(v, u, 0) && u.u1 == v.u1)
}

pub fn projective_cover(u: &Interval) -> Interval {
    Interval::projective(u.u1)
}

pub fn injective_envelope(u: &Interval) -> Interval {
    Interval::projective(u.u2.pred())
}

fn only_winding(u: &Interval, v: &Interval) -> Option<i64> {
    let mut it = windings(u, v);
    let n = it.next()?;
    it.next().is_none().then_some(n)
}

/// Whether `g ∘ f ≠ 0` for nonzero `f: U → V` and `g: V → W`.
///
/// Requires the three objects pairwise distinct and both Hom spaces one
/// dimensional. Winding patterns outside the known nonzero and zero cases
/// are refused.
pub fn compose_nonzero(u: &Interval, v: &Interval, w: &Interval) -> Result<bool> {
    if u == v || v == w || u == w {
        return Err(Error::Domain(format!(
            "{u}, {v}, {w} are not pairwise distinct"
        )));
    }
    let (n_uv, n_vw) = match (only_winding(u, v), only_winding(v, w)) {
        (Some(a), Some(b)) if hom_dim_rep(u, v) == 1 && hom_dim_rep(v, w) == 1 => (a, b),
        _ => {
            return Err(Error::Domain(format!(
                "need one-dimensional Hom spaces along {u} -> {v} -> {w}"
            )))
        }
    };
    let Some(n_uw) = only_winding(u, w) else {
        return Ok(false);
    };
    match (n_uv, n_vw, n_uw) {
        (0, 0, 0) | (0, -1, -1) | (-1, 0, -1) => Ok(true),
        (-1, -1, _) | (0, -1, 0) | (-1, 0, 0) => Ok(false),
        pattern => Err(Error::Domain(format!(
            "winding pattern {pattern:?} for {u} -> {v} -> {w} is not covered"
        ))),
    }
}
