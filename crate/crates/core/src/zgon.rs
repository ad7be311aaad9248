//! The ∞-gon: `m` copies of ℤ placed around the circle, accumulating at
//! `m` two-sided accumulation points that are not themselves points.
//!
//! Angles are exact rationals measured in units of π, so `Angle(2)` is a
//! full turn. No predicate anywhere in the crate looks at more than the
//! order type of an embedding; the concrete [`Embedding`] only matters to
//! the sampling oracle and to figure layout.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of the ∞-gon: index `index` in copy `copy` of ℤ.
///
/// The derived order is the linear order of the gon: copies first, then
/// indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Point {
    pub copy: u32,
    pub index: i64,
}

impl Point {
    pub const fn new(copy: u32, index: i64) -> Self {
        Point { copy, index }
    }

    pub const fn succ(self) -> Self {
        Point::new(self.copy, self.index + 1)
    }

    pub const fn pred(self) -> Self {
        Point::new(self.copy, self.index - 1)
    }

    /// Shift within the copy.
    pub const fn offset(self, by: i64) -> Self {
        Point::new(self.copy, self.index + by)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.copy, self.index)
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected a point `p:n`, got `{s}`"));
        let (p, n) = s.trim().split_once(':').ok_or_else(bad)?;
        let copy: u32 = p.trim().parse().map_err(|_| bad())?;
        let index: i64 = n.trim().parse().map_err(|_| bad())?;
        if copy == 0 {
            return Err(Error::Parse(format!(
                "copy index must be positive in `{s}`"
            )));
        }
        Ok(Point::new(copy, index))
    }
}

impl TryFrom<String> for Point {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Point> for String {
    fn from(p: Point) -> String {
        p.to_string()
    }
}

/// Number of accumulation points, equivalently copies of ℤ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GonConfig {
    m: u32,
}

impl GonConfig {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::Config("m must be at least 1".into()));
        }
        Ok(GonConfig { m })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn check_point(&self, p: Point) -> Result<()> {
        if p.copy == 0 || p.copy > self.m {
            return Err(Error::CopyOutOfRange {
                point: p,
                m: self.m,
            });
        }
        Ok(())
    }

    /// Every point with `|index| <= window`, in gon order.
    pub fn window_points(&self, window: i64) -> Vec<Point> {
        (1..=self.m)
            .flat_map(|copy| (-window..=window).map(move |n| Point::new(copy, n)))
            .collect()
    }
}

/// Compare two points of the same gon.
pub fn compare(cfg: &GonConfig, a: Point, b: Point) -> Result<Ordering> {
    cfg.check_point(a)?;
    cfg.check_point(b)?;
    Ok(a.cmp(&b))
}

/// An exact angle, in units of π.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Angle(pub Rational64);

impl Angle {
    pub fn zero() -> Self {
        Angle(Rational64::zero())
    }

    pub fn turns(k: i64) -> Self {
        Angle(Rational64::from_integer(2 * k))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Angle(Rational64::new(num, den))
    }

    /// Representative in `[0, 2)`.
    pub fn reduce(self) -> Self {
        let two = Rational64::from_integer(2);
        let q = (self.0 / two).floor();
        Angle(self.0 - q * two)
    }

    pub fn midpoint(self, other: Angle) -> Angle {
        Angle((self.0 + other.0) / Rational64::from_integer(2))
    }

    /// Approximate radians, for drawing only.
    pub fn to_radians_f64(self) -> f64 {
        (*self.0.numer() as f64 / *self.0.denom() as f64) * std::f64::consts::PI
    }
}

impl std::ops::Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle(self.0 + rhs.0)
    }
}

impl std::ops::Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        Angle(self.0 - rhs.0)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}π", self.0.numer())
        } else {
            write!(f, "{}/{}π", self.0.numer(), self.0.denom())
        }
    }
}

/// Where an angle of `[0, 2π)` falls relative to the gon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    /// Exactly at accumulation point `p` (the lower boundary of copy `p`).
    Accumulation(u32),
    /// In the half-open gap `[z, z⁺)`.
    Gap(Point),
}

/// A strictly order-preserving placement of the gon in `(0, 2π)`.
///
/// Copy `p` occupies the open arc between `boundaries[p-1]` and
/// `boundaries[p]`; inside it, index `n` sits at the fraction
/// `(1 + n / (softness + |n|)) / 2` of the arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    boundaries: Vec<Rational64>,
    softness: i64,
}

impl Embedding {
    /// Equal arcs, softness 1.
    pub fn standard(cfg: &GonConfig) -> Self {
        let m = cfg.m() as i64;
        Embedding {
            boundaries: (0..=m).map(|p| Rational64::new(2 * p, m)).collect(),
            softness: 1,
        }
    }

    /// Arc `p` proportional to `p`, softness 3. Used to show that nothing
    /// depends on the concrete placement.
    pub fn skewed(cfg: &GonConfig) -> Self {
        let m = cfg.m() as i64;
        let total = m * (m + 1);
        Embedding {
            boundaries: (0..=m)
                .map(|p| Rational64::new(2 * p * (p + 1), total))
                .collect(),
            softness: 3,
        }
    }

    pub fn m(&self) -> u32 {
        (self.boundaries.len() - 1) as u32
    }

    /// Angle of accumulation point `p`.
    pub fn accumulation(&self, p: u32) -> Angle {
        Angle(self.boundaries[(p - 1) as usize])
    }

    pub fn copy_arc(&self, copy: u32) -> (Angle, Angle) {
        let i = copy as usize;
        (Angle(self.boundaries[i - 1]), Angle(self.boundaries[i]))
    }

    fn squash(&self, n: i64) -> Rational64 {
        let half = Rational64::new(1, 2);
        half * (Rational64::one() + Rational64::new(n, self.softness + n.abs()))
    }

    pub fn angle(&self, p: Point) -> Angle {
        let (lo, hi) = self.copy_arc(p.copy);
        Angle(lo.0 + (hi.0 - lo.0) * self.squash(p.index))
    }

    /// Classify an angle (reduced mod 2π first).
    pub fn locate(&self, t: Angle) -> Location {
        let s = t.reduce().0;
        let m = self.m();
        for p in 1..=m {
            if s == self.boundaries[(p - 1) as usize] {
                return Location::Accumulation(p);
            }
        }
        let copy = (1..=m)
            .find(|&p| s < self.boundaries[p as usize])
            .expect("reduced angle lies below 2π");
        let (lo, hi) = self.copy_arc(copy);
        let g = Rational64::from_integer(2) * (s - lo.0) / (hi.0 - lo.0) - Rational64::one();
        let c = Rational64::from_integer(self.softness);
        // Invert n ↦ n / (c + |n|) on (-1, 1).
        let guess = if g >= Rational64::zero() {
            (g * c / (Rational64::one() - g)).floor().to_integer()
        } else {
            (g * c / (Rational64::one() + g)).floor().to_integer()
        };
        let z = Point::new(copy, guess);
        debug_assert!(self.angle(z).0 <= s && s < self.angle(z.succ()).0);
        Location::Gap(z)
    }
}

/// The Kupisch function of the gon, for a given placement.
///
/// Returns `2π + z⁺ − s` when `s = t mod 2π` lies in `[z, z⁺)`, and `2π`
/// when `s` is an accumulation point.
pub fn kupisch(emb: &Embedding, t: Angle) -> Angle {
    let s = t.reduce();
    match emb.locate(s) {
        Location::Accumulation(_) => Angle::turns(1),
        Location::Gap(z) => Angle::turns(1) + emb.angle(z.succ()) - s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(m: u32) -> GonConfig {
        GonConfig::new(m).unwrap()
    }

    #[test]
    fn compare_examples() {
        let c = cfg(3);
        assert_eq!(
            compare(&c, Point::new(1, 0), Point::new(1, 0)),
            Ok(Ordering::Equal)
        );
        assert_eq!(
            compare(&c, Point::new(1, 5), Point::new(2, -100)),
            Ok(Ordering::Less)
        );
        assert_eq!(
            compare(&c, Point::new(2, 3), Point::new(2, 4)),
            Ok(Ordering::Less)
        );
        assert!(matches!(
            compare(&cfg(1), Point::new(2, 0), Point::new(1, 0)),
            Err(Error::CopyOutOfRange { .. })
        ));
    }

    #[test]
    fn succ_pred() {
        assert_eq!(Point::new(1, 0).succ(), Point::new(1, 1));
        assert_eq!(Point::new(3, -7).pred(), Point::new(3, -8));
        assert_eq!(Point::new(2, 0).pred().succ(), Point::new(2, 0));
    }

    #[test]
    fn embed_examples() {
        let e1 = Embedding::standard(&cfg(1));
        assert_eq!(e1.angle(Point::new(1, 0)), Angle::ratio(1, 1));
        let e2 = Embedding::standard(&cfg(2));
        assert_eq!(e2.angle(Point::new(1, 0)), Angle::ratio(1, 2));
        assert!(e1.angle(Point::new(1, 0)) < e1.angle(Point::new(1, 1)));
    }

    #[test]
    fn embed_is_strictly_monotone_inside_arcs() {
        for emb in [Embedding::standard(&cfg(3)), Embedding::skewed(&cfg(3))] {
            let pts = cfg(3).window_points(40);
            for w in pts.windows(2) {
                assert!(emb.angle(w[0]) < emb.angle(w[1]), "{} {}", w[0], w[1]);
            }
            for p in pts {
                let (lo, hi) = emb.copy_arc(p.copy);
                let a = emb.angle(p);
                assert!(lo < a && a < hi);
            }
        }
    }

    #[test]
    fn locate_inverts_embedding() {
        for emb in [Embedding::standard(&cfg(2)), Embedding::skewed(&cfg(2))] {
            for z in cfg(2).window_points(25) {
                let a = emb.angle(z);
                assert_eq!(emb.locate(a), Location::Gap(z));
                let mid = a.midpoint(emb.angle(z.succ()));
                assert_eq!(emb.locate(mid), Location::Gap(z));
                assert_eq!(emb.locate(a + Angle::turns(3)), Location::Gap(z));
            }
            assert_eq!(emb.locate(Angle::zero()), Location::Accumulation(1));
            assert_eq!(emb.locate(emb.accumulation(2)), Location::Accumulation(2));
        }
    }

    #[test]
    fn kupisch_examples() {
        let e2 = Embedding::standard(&cfg(2));
        assert_eq!(kupisch(&e2, Angle::zero()), Angle::turns(1));
        let e1 = Embedding::standard(&cfg(1));
        let s = e1.angle(Point::new(1, 0));
        assert_eq!(
            kupisch(&e1, s),
            Angle::turns(1) + e1.angle(Point::new(1, 1)) - s
        );
        let t = e1.angle(Point::new(1, 3));
        assert_eq!(kupisch(&e1, t + Angle::turns(1)), kupisch(&e1, t));
    }

    #[test]
    fn kupisch_axioms_on_samples() {
        for m in 1..=3 {
            let c = cfg(m);
            for emb in [Embedding::standard(&c), Embedding::skewed(&c)] {
                let mut samples: Vec<Angle> = Vec::new();
                for z in c.window_points(6) {
                    let a = emb.angle(z);
                    samples.push(a);
                    samples.push(a.midpoint(emb.angle(z.succ())));
                }
                for p in 1..=m {
                    samples.push(emb.accumulation(p));
                }
                let lifted: Vec<Angle> = (-1..=1)
                    .flat_map(|w| samples.iter().map(move |&s| s + Angle::turns(w)))
                    .collect();
                let mut sorted = lifted.clone();
                sorted.sort();
                for &t in &sorted {
                    assert_eq!(kupisch(&emb, t), kupisch(&emb, t + Angle::turns(1)));
                    assert!(kupisch(&emb, t).0 > Rational64::zero());
                }
                for w in sorted.windows(2) {
                    let (t1, t2) = (w[0], w[1]);
                    assert!(
                        t1 + kupisch(&emb, t1) <= t2 + kupisch(&emb, t2),
                        "{t1} {t2}"
                    );
                }
            }
        }
    }

    #[test]
    fn point_text_format() {
        let p: Point = "2:-3".parse().unwrap();
        assert_eq!(p, Point::new(2, -3));
        assert_eq!(p.to_string(), "2:-3");
        assert!("0:1".parse::<Point>().is_err());
        assert!("x".parse::<Point>().is_err());
    }
}
