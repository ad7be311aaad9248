use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::zgon::{GonConfig, Point};

/// A point of the gon lifted to the universal cover: `base + 2·winding·π`.
///
/// Bases all live in `(0, 2π)`, so comparing winding first and base second
/// is the order of the real numbers they stand for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LiftedEndpoint {
    pub winding: i64,
    pub base: Point,
}

impl LiftedEndpoint {
    pub const fn new(base: Point, winding: i64) -> Self {
        LiftedEndpoint { winding, base }
    }
}

/// The triple `(u1, u2, h)`, standing for the real interval
/// `(u1, u2 + 2hπ]` and the string module it induces on the circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Interval {
    pub u1: Point,
    pub u2: Point,
    pub h: u8,
}

/// The intervals attached to `U` by shrinking, shifting and complementing.
/// Members that would leave the interval set are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Derived {
    pub u1: Option<Interval>,
    pub u2: Option<Interval>,
    pub minus: Interval,
    pub sigma: Option<Interval>,
    pub sigma_inv: Option<Interval>,
    pub prime: Interval,
}

impl Interval {
    /// Builds the triple without checking membership.
    pub const fn raw(u1: Point, u2: Point, h: u8) -> Self {
        Interval { u1, u2, h }
    }

    /// Builds the triple and checks that it belongs to the interval set.
    pub fn new(u1: Point, u2: Point, h: u8) -> Result<Self> {
        let u = Interval::raw(u1, u2, h);
        if u.is_in_i() {
            Ok(u)
        } else {
            Err(Error::NotAnInterval(u))
        }
    }

    /// Shorthand for the one-copy case, where points are plain integers.
    pub fn m1(u1: i64, u2: i64, h: u8) -> Self {
        Interval::raw(Point::new(1, u1), Point::new(1, u2), h)
    }

    pub fn simple(z: Point) -> Self {
        Interval::raw(z, z.succ(), 0)
    }

    pub fn projective(z: Point) -> Self {
        Interval::raw(z, z.succ(), 1)
    }

    /// Membership in the interval set: `u1⁺ ≤ u2 + 2hπ ≤ u1⁺ + 2π`.
    pub fn is_in_i(&self) -> bool {
        match self.h {
            0 => self.u2 >= self.u1.succ(),
            1 => self.u2 <= self.u1.succ(),
            _ => false,
        }
    }

    pub fn validate(&self, cfg: &GonConfig) -> Result<()> {
        cfg.check_point(self.u1)?;
        cfg.check_point(self.u2)?;
        if !self.is_in_i() {
            return Err(Error::NotAnInterval(*self));
        }
        Ok(())
    }

    pub fn is_simple(&self) -> bool {
        self.h == 0 && self.u2 == self.u1.succ()
    }

    pub fn is_projective(&self) -> bool {
        self.h == 1 && self.u2 == self.u1.succ()
    }

    /// Left end as a lifted point (winding 0).
    pub fn lower(&self) -> LiftedEndpoint {
        LiftedEndpoint::new(self.u1, 0)
    }

    /// Right end `u2 + 2hπ`.
    pub fn upper(&self) -> LiftedEndpoint {
        LiftedEndpoint::new(self.u2, self.h as i64)
    }

    pub fn derived(&self) -> Derived {
        let Interval { u1, u2, h } = *self;
        let proj = self.is_projective();
        Derived {
            u1: (!proj).then(|| Interval::raw(u1.pred(), u2, h)),
            u2: (!self.is_simple()).then(|| Interval::raw(u1, u2.pred(), h)),
            minus: Interval::raw(u1.pred(), u2.pred(), h),
            sigma: (!proj).then(|| Interval::raw(u2.pred(), u1, 1 - h)),
            sigma_inv: (!proj).then(|| Interval::raw(u2, u1.succ(), 1 - h)),
            prime: Interval::raw(u2.pred(), u1.succ(), 1 - h),
        }
    }

    pub fn minus(&self) -> Interval {
        Interval::raw(self.u1.pred(), self.u2.pred(), self.h)
    }

    /// `Σ⁻¹U`, defined for non-projective `U`.
    pub fn sigma_inv(&self) -> Option<Interval> {
        (!self.is_projective()).then(|| Interval::raw(self.u2, self.u1.succ(), 1 - self.h))
    }

    /// `ΣU`, defined for non-projective `U`.
    pub fn sigma(&self) -> Option<Interval> {
        (!self.is_projective()).then(|| Interval::raw(self.u2.pred(), self.u1, 1 - self.h))
    }

    pub fn prime(&self) -> Interval {
        Interval::raw(self.u2.pred(), self.u1.succ(), 1 - self.h)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {})", self.u1, self.u2, self.h)
    }
}

impl FromStr for Interval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "expected an interval `(p1:n1, p2:n2; h)`, got `{s}`"
            ))
        };
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (ends, h) = body.split_once(';').ok_or_else(bad)?;
        let (a, b) = ends.split_once(',').ok_or_else(bad)?;
        let h: u8 = h.trim().parse().map_err(|_| bad())?;
        if h > 1 {
            return Err(Error::Parse(format!(
                "winding flag must be 0 or 1 in `{s}`"
            )));
        }
        Ok(Interval::raw(a.parse()?, b.parse()?, h))
    }
}

impl TryFrom<String> for Interval {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Interval> for String {
    fn from(u: Interval) -> String {
        u.to_string()
    }
}
