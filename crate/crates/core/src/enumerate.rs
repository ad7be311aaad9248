//! Finite windows of objects: everything with endpoint indices `|n| ≤ window`.

use crate::rep::Interval;
use crate::stable::Arc;
use crate::zgon::GonConfig;

pub fn windowed_intervals(cfg: &GonConfig, window: i64) -> Vec<Interval> {
    let pts = cfg.window_points(window);
    let mut out = Vec::new();
    for &a in &pts {
        for &b in &pts {
            for h in 0..2 {
                let u = Interval::raw(a, b, h);
                if u.is_in_i() {
                    out.push(u);
                }
            }
        }
    }
    out
}

pub fn windowed_nonprojective(cfg: &GonConfig, window: i64) -> Vec<Interval> {
    windowed_intervals(cfg, window)
        .into_iter()
        .filter(|u| !u.is_projective())
        .collect()
}

pub fn windowed_arcs(cfg: &GonConfig, window: i64) -> Vec<Arc> {
    let pts = cfg.window_points(window);
    let mut out = Vec::new();
    for &a in &pts {
        for &b in &pts {
            let arc = Arc::new(a, b);
            if arc.is_admissible() {
                out.push(arc);
            }
        }
    }
    out
}

/// Finite-length intervals (single copy, no winding) inside the window.
pub fn windowed_finite(cfg: &GonConfig, window: i64) -> Vec<Interval> {
    windowed_intervals(cfg, window)
        .into_iter()
        .filter(|u| u.h == 0 && u.u1.copy == u.u2.copy)
        .collect()
}
