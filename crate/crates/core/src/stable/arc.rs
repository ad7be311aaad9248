use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rep::Interval;
use crate::zgon::{GonConfig, Point};

/// A chord `(a1, a2)` of the ∞-gon. Admissible arcs are the indecomposable
/// objects of the stable category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Arc {
    pub a1: Point,
    pub a2: Point,
}

impl Arc {
    pub const fn new(a1: Point, a2: Point) -> Self {
        Arc { a1, a2 }
    }

    pub fn m1(a1: i64, a2: i64) -> Self {
        Arc::new(Point::new(1, a1), Point::new(1, a2))
    }

    /// The triple this arc would come from, before checking it lands in
    /// the non-projective part of the interval set.
    fn preimage(&self) -> Option<Interval> {
        let (a1, a2) = (self.a1, self.a2);
        if a1.index.rem_euclid(2) == 1 {
            (a2.index.rem_euclid(2) == 0).then(|| {
                Interval::raw(
                    Point::new(a2.copy, a2.index / 2),
                    Point::new(a1.copy, (a1.index + 1) / 2),
                    0,
                )
            })
        } else {
            (a2.index.rem_euclid(2) == 1).then(|| {
                Interval::raw(
                    Point::new(a1.copy, a1.index / 2),
                    Point::new(a2.copy, (a2.index + 1).div_euclid(2)),
                    1,
                )
            })
        }
    }

    /// Admissible means: the image of a non-projective interval.
    pub fn is_admissible(&self) -> bool {
        self.preimage()
            .is_some_and(|u| u.is_in_i() && !u.is_projective())
    }

    /// The same condition stated on the arc: `a1 ≥ a2 + 1` in the gon order
    /// and an odd index difference.
    pub fn is_admissible_closed_form(&self) -> bool {
        self.a1 >= self.a2.succ() && (self.a1.index - self.a2.index).rem_euclid(2) == 1
    }

    pub fn validate(&self, cfg: &GonConfig) -> Result<()> {
        cfg.check_point(self.a1)?;
        cfg.check_point(self.a2)?;
        if !self.is_admissible() {
            return Err(Error::NotAdmissible(*self));
        }
        Ok(())
    }
}

/// The bijection from non-projective intervals to admissible arcs.
pub fn phi(u: &Interval) -> Result<Arc> {
    if u.is_projective() {
        return Err(Error::Projective(*u));
    }
    if !u.is_in_i() {
        return Err(Error::NotAnInterval(*u));
    }
    let (u1, u2) = (u.u1, u.u2);
    Ok(if u.h == 0 {
        Arc::new(
            Point::new(u2.copy, 2 * u2.index - 1),
            Point::new(u1.copy, 2 * u1.index),
        )
    } else {
        Arc::new(
            Point::new(u1.copy, 2 * u1.index),
            Point::new(u2.copy, 2 * u2.index - 1),
        )
    })
}

pub fn phi_inv(a: &Arc) -> Result<Interval> {
    match a.preimage() {
        Some(u) if u.is_in_i() && !u.is_projective() => Ok(u),
        _ => Err(Error::NotAdmissible(*a)),
    }
}

/// `Σᵏa`, rotating both ends clockwise by `k`.
pub fn shift(a: &Arc, k: i64) -> Arc {
    Arc::new(a.a1.offset(-k), a.a2.offset(-k))
}

/// The Auslander–Reiten translate, `Σ⁻²`.
pub fn tau(a: &Arc) -> Arc {
    Arc::new(a.a1.offset(2), a.a2.offset(2))
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.a1, self.a2)
    }
}

impl FromStr for Arc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected an arc `(p1:n1 | p2:n2)`, got `{s}`"));
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (a, b) = body.split_once('|').ok_or_else(bad)?;
        Ok(Arc::new(a.parse()?, b.parse()?))
    }
}

impl TryFrom<String> for Arc {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Arc> for String {
    fn from(a: Arc) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{windowed_arcs, windowed_nonprojective};

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&Interval::m1(0, 1, 0)), Ok(Arc::m1(1, 0)));
        assert_eq!(phi(&Interval::m1(0, -1, 1)), Ok(Arc::m1(0, -3)));
        let u = Interval::m1(0, 2, 0);
        assert_eq!(phi_inv(&phi(&u).unwrap()), Ok(u));
        assert!(phi(&Interval::m1(0, 1, 1)).is_err());
    }

    #[test]
    fn phi_is_a_bijection_on_windows() {
        for m in 1..=3 {
            let cfg = GonConfig::new(m).unwrap();
            for u in windowed_nonprojective(&cfg, 4) {
                let a = phi(&u).unwrap();
                assert!(a.is_admissible());
                assert_eq!(phi_inv(&a), Ok(u));
            }
            for a in windowed_arcs(&cfg, 8) {
                assert_eq!(phi(&phi_inv(&a).unwrap()), Ok(a));
            }
        }
    }

    #[test]
    fn admissibility_closed_form_agrees() {
        for m in 1..=3 {
            let cfg = GonConfig::new(m).unwrap();
            let pts = cfg.window_points(7);
            for &x in &pts {
                for &y in &pts {
                    let a = Arc::new(x, y);
                    assert_eq!(a.is_admissible(), a.is_admissible_closed_form(), "{a}");
                }
            }
        }
    }

    #[test]
    fn shift_and_tau_examples() {
        assert_eq!(shift(&Arc::m1(1, 0), 1), Arc::m1(0, -1));
        let a = Arc::m1(3, 0);
        assert_eq!(shift(&shift(&a, 1), -1), a);
        let u = Interval::m1(0, 2, 0);
        let via_interval = phi(&u.sigma().unwrap()).unwrap();
        assert_eq!(shift(&phi(&u).unwrap(), 1), via_interval);
        assert_eq!(via_interval, Arc::m1(2, -1));

        assert_eq!(tau(&Arc::m1(1, 0)), Arc::m1(3, 2));
        let b = Arc::m1(5, 2);
        assert_eq!(tau(&shift(&b, 2)), b);
        // τ agrees with the right end of the almost split sequence.
        assert_eq!(tau(&phi(&u.minus()).unwrap()), phi(&u).unwrap());
    }

    #[test]
    fn text_round_trip() {
        let a: Arc = "(1:1|1:0)".parse().unwrap();
        assert_eq!(a, Arc::m1(1, 0));
        assert_eq!(a.to_string(), "(1:1 | 1:0)");
        assert_eq!(a.to_string().parse::<Arc>().unwrap(), a);
        assert!("(1:1, 1:0)".parse::<Arc>().is_err());
    }
}
