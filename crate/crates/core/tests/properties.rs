use num_rational::Rational64;
use proptest::prelude::*;

use zgon_core::oracle::{Echelon, Field, Fp, Matrix};
use zgon_core::rep::{self, Hammock};
use zgon_core::stable::{self, phi, phi_inv, shift, tau};
use zgon_core::zgon::{kupisch, Angle, Embedding, Location};
use zgon_core::{Arc, GonConfig, Interval, Point};

const M: u32 = 3;

fn point() -> impl Strategy<Value = Point> {
    (1..=M, -40i64..40).prop_map(|(c, i)| Point::new(c, i))
}

fn interval() -> impl Strategy<Value = Interval> {
    (point(), point(), 0u8..=1).prop_filter_map("not in the interval set", |(a, b, h)| {
        Interval::new(a, b, h).ok()
    })
}

fn nonprojective() -> impl Strategy<Value = Interval> {
    interval().prop_filter("projective", |u| !u.is_projective())
}

fn arc() -> impl Strategy<Value = Arc> {
    (point(), point())
        .prop_map(|(a, b)| Arc::new(a, b))
        .prop_filter("not admissible", Arc::is_admissible)
}

proptest! {
    #[test]
    fn point_text_round_trip(p in point()) {
        prop_assert_eq!(p.to_string().parse::<Point>().unwrap(), p);
    }

    #[test]
    fn interval_and_arc_json_round_trip(u in interval(), a in arc()) {
        let s = serde_json::to_string(&u).unwrap();
        prop_assert_eq!(serde_json::from_str::<Interval>(&s).unwrap(), u);
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Arc>(&s).unwrap(), a);
    }

    #[test]
    fn successor_is_order_cover(p in point(), q in point()) {
        prop_assert!(p < p.succ());
        prop_assert_eq!(p.succ().pred(), p);
        prop_assert!(!(p < q && q < p.succ()));
    }

    #[test]
    fn embedding_is_monotone_and_inverted_by_locate(p in point(), q in point(), skewed in any::<bool>()) {
        let cfg = GonConfig::new(M).unwrap();
        let emb = if skewed { Embedding::skewed(&cfg) } else { Embedding::standard(&cfg) };
        prop_assert_eq!(p.cmp(&q), emb.angle(p).cmp(&emb.angle(q)));
        let t = emb.angle(p);
        prop_assert_eq!(emb.locate(t), Location::Gap(p));
        prop_assert_eq!(emb.locate(t.midpoint(emb.angle(p.succ()))), Location::Gap(p));
    }

    #[test]
    fn kupisch_is_periodic_and_reaches_past_successor(p in point(), k in -3i64..3) {
        let cfg = GonConfig::new(M).unwrap();
        let emb = Embedding::standard(&cfg);
        let t = emb.angle(p);
        let shifted = t + Angle::turns(k);
        prop_assert_eq!(kupisch(&emb, shifted), kupisch(&emb, t));
        // Starting at z, the longest interval ends at z⁺ + 2π.
        let end = t + kupisch(&emb, t);
        prop_assert_eq!(end, emb.angle(p.succ()) + Angle::turns(1));
    }

    #[test]
    fn phi_is_a_bijection(u in nonprojective(), a in arc()) {
        prop_assert_eq!(phi_inv(&phi(&u).unwrap()).unwrap(), u);
        prop_assert_eq!(phi(&phi_inv(&a).unwrap()).unwrap(), a);
        prop_assert!(phi(&u).unwrap().is_admissible());
    }

    #[test]
    fn admissibility_closed_form(a in point(), b in point()) {
        let x = Arc::new(a, b);
        prop_assert_eq!(x.is_admissible(), x.is_admissible_closed_form());
    }

    #[test]
    fn shifts_compose(a in arc(), j in -5i64..5, k in -5i64..5) {
        prop_assert_eq!(shift(&shift(&a, j), k), shift(&a, j + k));
        prop_assert_eq!(tau(&a), shift(&a, -2));
        prop_assert!(shift(&a, j).is_admissible());
    }

    #[test]
    fn stable_hom_duality(a in arc(), b in arc()) {
        let d = stable::hom_dim(&a, &b);
        prop_assert!(d <= 1);
        prop_assert_eq!(d, stable::hom_dim_closed_form(&a, &b));
        prop_assert_eq!(d, stable::hom_dim(&b, &shift(&a, -1)));
        prop_assert!(stable::serre_dual_check(&a, &b));
    }

    #[test]
    fn stable_hom_is_shift_invariant(a in arc(), b in arc(), k in -4i64..4) {
        prop_assert_eq!(stable::hom_dim(&a, &b), stable::hom_dim(&shift(&a, k), &shift(&b, k)));
    }

    #[test]
    fn stabilization_subtracts_projective_part(u in interval(), v in interval()) {
        let r = rep::hom_report(&u, &v);
        prop_assert_eq!(r.dim_stable, r.dim_rep - r.dim_proj);
        if !u.is_projective() && !v.is_projective() {
            prop_assert_eq!(r.dim_stable, stable::hom_dim(&phi(&u).unwrap(), &phi(&v).unwrap()));
        } else {
            prop_assert_eq!(r.dim_stable, 0);
        }
        let nonzero = r.hammock != Hammock::None;
        prop_assert_eq!(nonzero, r.dim_rep > 0);
    }

    #[test]
    fn covers_and_envelopes_are_projective(u in nonprojective()) {
        let p = rep::projective_cover(&u);
        let i = rep::injective_envelope(&u);
        prop_assert!(p.is_projective() && i.is_projective());
        prop_assert!(rep::exists_epi(&p, &u).unwrap());
        prop_assert!(rep::exists_mono(&u, &i).unwrap());
    }

    #[test]
    fn almost_split_sequences_stabilize(u in nonprojective()) {
        let seq = rep::almost_split_sequence(&u).unwrap();
        prop_assert_eq!(seq.left, u);
        let tri = stable::almost_split_triangle(&phi(&seq.right).unwrap());
        prop_assert_eq!(tri.left, phi(&u).unwrap());
    }

    #[test]
    fn echelon_rank_matches_dense_rank(rows in prop::collection::vec(prop::collection::vec(-2i64..3, 5), 0..7)) {
        let mut dense = Matrix::<Rational64>::zeros(rows.len(), 5);
        let mut ech = Echelon::<Rational64>::new();
        for (r, row) in rows.iter().enumerate() {
            let mut sparse = Vec::new();
            for (c, &x) in row.iter().enumerate() {
                dense.set(r, c, Rational64::from_integer(x));
                if x != 0 {
                    sparse.push((c, Rational64::from_integer(x)));
                }
            }
            ech.insert(sparse);
        }
        prop_assert_eq!(ech.rank(), dense.rank());
        prop_assert_eq!(ech.nullspace(5).len(), 5 - dense.rank());
    }

    #[test]
    fn prime_field_inverts(x in 1i64..65521) {
        let a = Fp::new(x);
        prop_assert_eq!((a * a.inv()).value(), 1);
    }
}
