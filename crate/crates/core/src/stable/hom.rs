use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rep::{self, Hammock, Interval};
use crate::stable::arc::{phi_inv, shift, tau, Arc};
use crate::zgon::GonConfig;

fn interval(a: &Arc) -> Interval {
    phi_inv(a).unwrap_or_else(|_| panic!("{a} is not admissible"))
}

/// `b ∈ H⁺(a)`.
pub fn in_plus(a: &Arc, b: &Arc) -> bool {
    rep::in_h_plus(&interval(a), &interval(b))
}

/// `b ∈ H⁻(Σ⁻¹a)`.
pub fn in_minus(a: &Arc, b: &Arc) -> bool {
    let si = interval(a)
        .sigma_inv()
        .expect("admissible arcs are non-projective");
    rep::in_h_minus(&si, &interval(b))
}

/// `H⁺(a)` written on the arcs themselves.
pub fn in_plus_closed_form(a: &Arc, b: &Arc) -> bool {
    a.a2.succ() <= b.a1
        && b.a1 <= a.a1
        && b.a2 <= a.a2
        && (b.a1.index - a.a1.index).rem_euclid(2) == 0
}

/// `H⁻(a)` written on the arcs themselves.
pub fn in_minus_closed_form(a: &Arc, b: &Arc) -> bool {
    b.a1 >= a.a1
        && a.a2 <= b.a2
        && b.a2 <= a.a1.pred()
        && (b.a1.index - a.a1.index).rem_euclid(2) == 0
}

/// `dim Hom(a, b)` in the stable category. Both arcs must be admissible.
pub fn hom_dim(a: &Arc, b: &Arc) -> u8 {
    match rep::hammock_classify(&interval(a), &interval(b)) {
        Hammock::Hplus | Hammock::Hminus => 1,
        _ => 0,
    }
}

/// The same dimension from the arc-level hammock formulas.
pub fn hom_dim_closed_form(a: &Arc, b: &Arc) -> u8 {
    (in_plus_closed_form(a, b) || in_minus_closed_form(&shift(a, -1), b)) as u8
}

/// Checks `Hom(a, b) ≅ D Hom(b, Σ⁻¹a)` at the level of dimensions.
pub fn serre_dual_check(a: &Arc, b: &Arc) -> bool {
    hom_dim(a, b) == hom_dim(b, &shift(a, -1))
}

/// Whether `g ∘ f ≠ 0` for nonzero `f: a → b`, `g: b → c`.
pub fn compose_nonzero_stable(a: &Arc, b: &Arc, c: &Arc) -> Result<bool> {
    if hom_dim(a, b) != 1 || hom_dim(b, c) != 1 {
        return Err(Error::Domain(format!(
            "need nonzero Hom spaces along {a} -> {b} -> {c}"
        )));
    }
    let plus_chain = in_plus(a, b) && in_plus(a, c) && in_plus(b, c);
    let plus_then_minus = in_plus(a, b) && in_minus(a, c) && in_minus(b, c);
    let minus_then_plus = in_minus(a, b) && in_minus(a, c) && in_plus(b, c);
    Ok(plus_chain || plus_then_minus || minus_then_plus)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArTriangle {
    pub left: Arc,
    pub middle: Vec<Arc>,
    pub right: Arc,
    pub shift_of_left: Arc,
}

/// The almost split triangle ending in `a`.
pub fn almost_split_triangle(a: &Arc) -> ArTriangle {
    let left = tau(a);
    let middle = if a.a1 == a.a2.succ() {
        vec![Arc::new(a.a1.offset(2), a.a2)]
    } else {
        vec![
            Arc::new(a.a1, a.a2.offset(2)),
            Arc::new(a.a1.offset(2), a.a2),
        ]
    };
    ArTriangle {
        left,
        middle,
        right: *a,
        shift_of_left: shift(&left, 1),
    }
}

/// Whether there is an irreducible morphism `a → b`.
pub fn irreducible(a: &Arc, b: &Arc) -> bool {
    *b == Arc::new(a.a1, a.a2.offset(-2)) || *b == Arc::new(a.a1.offset(-2), a.a2)
}

/// `dim Hom(a, Σⁿa)` for `n` in `lo..=hi`.
pub fn spherical_profile(a: &Arc, lo: i64, hi: i64) -> Vec<u8> {
    (lo..=hi).map(|n| hom_dim(a, &shift(a, n))).collect()
}

fn in_window(a: &Arc, window: i64) -> bool {
    a.a1.index.abs() <= window && a.a2.index.abs() <= window
}

/// The part of the thick subcategory generated by `seed` that can be
/// reached inside the window: shifts of members, together with completion of
/// almost split triangles whose terms all lie in the window.
pub fn thick_closure(cfg: &GonConfig, seed: &Arc, window: i64) -> Result<BTreeSet<Arc>> {
    if cfg.m() != 1 {
        return Err(Error::Unsupported(
            "thick closure is only implemented for one accumulation point".into(),
        ));
    }
    seed.validate(cfg)?;
    if !in_window(seed, window) {
        return Err(Error::Range(format!(
            "seed {seed} lies outside window {window}"
        )));
    }
    let arcs = crate::enumerate::windowed_arcs(cfg, window);
    let triangles: Vec<ArTriangle> = arcs
        .iter()
        .map(almost_split_triangle)
        .filter(|t| in_window(&t.left, window) && t.middle.iter().all(|x| in_window(x, window)))
        .collect();

    let mut set = BTreeSet::new();
    let add_shifts = |set: &mut BTreeSet<Arc>, a: &Arc| {
        for k in -4 * window - 4..=4 * window + 4 {
            let s = shift(a, k);
            if in_window(&s, window) {
                set.insert(s);
            }
        }
    };
    add_shifts(&mut set, seed);
    loop {
        let before = set.len();
        for t in &triangles {
            let l = set.contains(&t.left);
            let r = set.contains(&t.right);
            let mid = t.middle.iter().all(|x| set.contains(x));
            let mut new = Vec::new();
            if l && r && !mid {
                new.extend(t.middle.iter().copied());
            }
            if l && mid && !r {
                new.push(t.right);
            }
            if mid && r && !l {
                new.push(t.left);
            }
            for a in new {
                add_shifts(&mut set, &a);
            }
        }
        if set.len() == before {
            return Ok(set);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::windowed_arcs;

    fn a(x: i64, y: i64) -> Arc {
        Arc::m1(x, y)
    }

    #[test]
    fn hom_examples() {
        assert_eq!(hom_dim(&a(1, 0), &a(1, -2)), 1);
        assert_eq!(hom_dim(&a(1, 0), &a(2, 1)), 1);
        assert_eq!(hom_dim(&a(1, 0), &a(7, 4)), 0);
        assert_eq!(hom_dim(&a(1, 0), &a(1, 0)), 1);
    }

    #[test]
    fn closed_form_matches_interval_hammocks() {
        for m in 1..=3 {
            let cfg = GonConfig::new(m).unwrap();
            let arcs = windowed_arcs(&cfg, 5);
            for x in &arcs {
                for y in &arcs {
                    assert_eq!(hom_dim(x, y), hom_dim_closed_form(x, y), "{x} {y}");
                    assert_eq!(in_plus(x, y), in_plus_closed_form(x, y), "{x} {y}");
                    assert_eq!(
                        in_minus(x, y),
                        in_minus_closed_form(&shift(x, -1), y),
                        "{x} {y}"
                    );
                }
            }
        }
    }

    #[test]
    fn serre_examples() {
        assert!(serre_dual_check(&a(1, 0), &a(3, 0)));
        assert_eq!(hom_dim(&a(1, 0), &a(3, 0)), 0);
        assert!(serre_dual_check(&a(1, 0), &a(7, 4)));
        assert!(serre_dual_check(&a(1, 0), &a(1, 0)));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(
            compose_nonzero_stable(&a(5, 0), &a(3, 0), &a(3, -2)),
            Ok(true)
        );
        assert_eq!(
            compose_nonzero_stable(&a(3, 0), &a(4, 3), &a(4, 1)),
            Ok(true)
        );
        assert!(in_minus(&a(3, 0), &a(4, 3)));
        assert!(in_minus(&a(3, 0), &a(4, 1)) && in_plus(&a(4, 3), &a(4, 1)));
        // Hom(a, c) = 0 forces a zero composite.
        let (x, y, z) = (a(1, 0), a(2, 1), a(2, -1));
        assert_eq!(hom_dim(&x, &z), 0);
        assert_eq!(compose_nonzero_stable(&x, &y, &z), Ok(false));
        assert!(compose_nonzero_stable(&a(1, 0), &a(7, 4), &a(7, 4)).is_err());
    }

    #[test]
    fn triangle_examples() {
        let t = almost_split_triangle(&a(1, 0));
        assert_eq!((t.left, t.middle.clone()), (a(3, 2), vec![a(3, 0)]));
        let t = almost_split_triangle(&a(3, 0));
        assert_eq!(
            (t.left, t.middle.clone()),
            (a(5, 2), vec![a(3, 2), a(5, 0)])
        );
        assert_eq!(t.shift_of_left, a(4, 1));
    }

    #[test]
    fn irreducible_examples() {
        assert!(irreducible(&a(3, 0), &a(1, 0)));
        assert!(irreducible(&a(3, 0), &a(3, -2)));
        assert!(!irreducible(&a(3, 0), &a(5, 2)));
    }

    #[test]
    fn spherical_examples() {
        assert_eq!(
            spherical_profile(&a(1, 0), -3, 3),
            vec![0, 0, 1, 1, 0, 0, 0]
        );
        assert_eq!(spherical_profile(&a(5, 0), 0, 0), vec![1]);
    }

    #[test]
    fn thick_examples() {
        let cfg = GonConfig::new(1).unwrap();
        let all: BTreeSet<Arc> = windowed_arcs(&cfg, 5).into_iter().collect();
        assert_eq!(thick_closure(&cfg, &a(1, 0), 5).unwrap(), all);
        let small = thick_closure(&cfg, &a(1, 0), 1).unwrap();
        assert_eq!(small, [a(0, -1), a(1, 0)].into_iter().collect());
        assert!(thick_closure(&cfg, &a(1, 0), 3).unwrap().contains(&a(3, 0)));
        let two = GonConfig::new(2).unwrap();
        assert!(matches!(
            thick_closure(&two, &a(1, 0), 3),
            Err(Error::Unsupported(_))
        ));
    }
}
