use std::collections::HashMap;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::zgon::{Angle, Embedding, GonConfig, Point};

/// Extra indices sampled beyond the requested window on each side, so that
/// derived intervals (`U⁻`, `Σ⁻¹U`, covers, envelopes) still land on
/// sample points.
pub const PAD: i64 = 3;

/// How many sheets of the universal cover the line chain spans.
pub const SHEETS: RangeInclusive<i64> = -4..=5;

/// A finite ordered sample of the circle and of a stretch of its
/// universal cover.
///
/// The base samples lie in `[0, 2π)`: the embedded window points, one
/// midpoint per gap between neighbours, each accumulation angle, and one
/// sample on either side of it. The line chain repeats the base on every
/// sheet in [`SHEETS`].
#[derive(Debug, Clone)]
pub struct SampleChain {
    emb: Embedding,
    points: Vec<Point>,
    base: Vec<Angle>,
    base_index: HashMap<Angle, usize>,
    line: Vec<Angle>,
    line_index: HashMap<Angle, usize>,
}

impl SampleChain {
    /// Samples every point with `|index| ≤ window + PAD`.
    pub fn new(cfg: &GonConfig, emb: Embedding, window: i64) -> Self {
        let reach = window + PAD;
        let mut base = Vec::new();
        for copy in 1..=cfg.m() {
            let (lo, hi) = emb.copy_arc(copy);
            let first = emb.angle(Point::new(copy, -reach));
            let last = emb.angle(Point::new(copy, reach));
            base.push(lo);
            base.push(lo.midpoint(first));
            for n in -reach..=reach {
                let z = Point::new(copy, n);
                base.push(emb.angle(z));
                if n < reach {
                    base.push(emb.angle(z).midpoint(emb.angle(z.succ())));
                }
            }
            base.push(last.midpoint(hi));
        }
        debug_assert!(base.windows(2).all(|w| w[0] < w[1]));
        let base_index = base.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let line: Vec<Angle> = SHEETS
            .flat_map(|w| base.iter().map(move |&a| a + Angle::turns(w)))
            .collect();
        let line_index = line.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        SampleChain {
            emb,
            points: cfg.window_points(reach),
            base,
            base_index,
            line,
            line_index,
        }
    }

    pub fn embedding(&self) -> &Embedding {
        &self.emb
    }

    /// Every gon point the chain samples.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn contains_point(&self, p: Point) -> bool {
        self.base_index.contains_key(&self.emb.angle(p))
    }

    pub fn base(&self) -> &[Angle] {
        &self.base
    }

    pub fn line(&self) -> &[Angle] {
        &self.line
    }

    /// Position of a lifted angle in the line chain, with at least one
    /// sample of margin on both sides.
    pub fn line_position(&self, t: Angle) -> Result<usize> {
        match self.line_index.get(&t) {
            Some(&i) if i > 0 && i + 1 < self.line.len() => Ok(i),
            _ => Err(Error::Range(format!(
                "angle {t} is not an interior sample of the chain"
            ))),
        }
    }

    pub fn base_position(&self, t: Angle) -> Result<usize> {
        self.base_index
            .get(&t)
            .copied()
            .ok_or_else(|| Error::Range(format!("angle {t} is not a sample of the chain")))
    }

    /// Distance travelled along the circle from sample `i` to the next one.
    pub fn step(&self, i: usize) -> Angle {
        let n = self.base.len();
        if i + 1 < n {
            self.base[i + 1] - self.base[i]
        } else {
            self.base[0] + Angle::turns(1) - self.base[i]
        }
    }
}
