use serde::Serialize;

use crate::error::{Error, Result};
use crate::rep::hom::{hom_dim_rep, proj_factor_dim, windings};
use crate::rep::interval::{Interval, LiftedEndpoint};

/// The middle terms `I` and `J` of the extension of `V` by `U`.
///
/// Requires `U` non-projective, `Hom(U⁻, V)` one dimensional and not
/// factoring through a projective. `J` is absent when its two lifted
/// endpoints coincide.
pub fn middle_terms(u: &Interval, v: &Interval) -> Result<(Interval, Option<Interval>)> {
    if u.is_projective() {
        return Err(Error::Projective(*u));
    }
    let um = u.minus();
    if hom_dim_rep(&um, v) != 1 || proj_factor_dim(&um, v) != 0 {
        return Err(Error::Domain(format!(
            "Hom({um}, {v}) must be one dimensional and stably nonzero"
        )));
    }
    let l = windings(&um, v)
        .next()
        .expect("one-dimensional Hom has a winding");
    let ih = u.h as i64 - l;
    let jh = v.h as i64 + l;
    let i = Interval::raw(v.u1, u.u2, ih as u8);
    if !(0..=1).contains(&ih) || !i.is_in_i() {
        return Err(Error::Domain(format!(
            "middle term for {u}, {v} leaves the interval set"
        )));
    }
    if LiftedEndpoint::new(v.u2, jh) == u.lower() {
        return Ok((i, None));
    }
    let j = Interval::raw(u.u1, v.u2, jh as u8);
    if !(0..=1).contains(&jh) || !j.is_in_i() {
        return Err(Error::Domain(format!(
            "middle term for {u}, {v} leaves the interval set"
        )));
    }
    Ok((i, Some(j)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositionSeries {
    /// Simple factors from the socle upward.
    pub factors: Vec<Interval>,
    pub finite: bool,
    pub total_length: Option<i64>,
}

/// The first `k` composition factors of `U`, socle first. Finite-length
/// modules stop at their length.
pub fn composition_factors(u: &Interval, k: usize) -> CompositionSeries {
    let finite = u.h == 0 && u.u1.copy == u.u2.copy;
    let total_length = finite.then(|| u.u2.index - u.u1.index);
    let take = match total_length {
        Some(len) => k.min(len as usize),
        None => k,
    };
    let factors = (1..=take as i64)
        .map(|i| Interval::simple(u.u2.offset(-i)))
        .collect();
    CompositionSeries {
        factors,
        finite,
        total_length,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlmostSplitSequence {
    pub left: Interval,
    pub middle: Vec<Interval>,
    pub right: Interval,
}

pub fn almost_split_sequence(u: &Interval) -> Result<AlmostSplitSequence> {
    if u.is_projective() {
        return Err(Error::Projective(*u));
    }
    let d = u.derived();
    let middle = [d.u1, d.u2].into_iter().flatten().collect();
    Ok(AlmostSplitSequence {
        left: *u,
        middle,
        right: d.minus,
    })
}

/// Whether there is an irreducible morphism `U → V`.
pub fn irreducible_rep(u: &Interval, v: &Interval) -> bool {
    let d = u.derived();
    d.u1 == Some(*v) || d.u2 == Some(*v)
}
