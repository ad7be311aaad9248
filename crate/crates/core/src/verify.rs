//! Verification suites: every closed form in the library checked on a
//! finite window, either against an identity it must satisfy or against
//! the linear-algebra oracle.
//!
//! Each suite produces a [`SuiteReport`] with the number of checks, every
//! counterexample verbatim, and a SHA-256 digest over all records so that
//! two runs can be compared bit for bit.

use std::collections::BTreeSet;
use std::fmt::{self, Display, Write as _};
use std::str::FromStr;

use num_rational::Rational64;
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::enumerate::{
    windowed_arcs, windowed_finite, windowed_intervals, windowed_nonprojective,
};
use crate::error::{Error, Result};
use crate::oracle::{self, Field, FieldKind, Fp, SampleChain};
use crate::par::{self, ExecMode};
use crate::rep::{self, Interval};
use crate::stable::{self, Arc, ComponentLabel};
use crate::zgon::{kupisch, Angle, Embedding, GonConfig};

/// Which order-preserving placement of the gon the oracle samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EmbeddingKind {
    #[default]
    Standard,
    Skewed,
}

impl EmbeddingKind {
    pub fn build(self, cfg: &GonConfig) -> Embedding {
        match self {
            EmbeddingKind::Standard => Embedding::standard(cfg),
            EmbeddingKind::Skewed => Embedding::skewed(cfg),
        }
    }
}

impl FromStr for EmbeddingKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(EmbeddingKind::Standard),
            "skewed" => Ok(EmbeddingKind::Skewed),
            other => Err(Error::Parse(format!("unknown embedding `{other}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub gon: GonConfig,
    /// Index bound `|n| ≤ window` for enumerated objects.
    pub window: i64,
    pub field: FieldKind,
    pub seed: u64,
    /// Seeded pairs checked against the Hom oracle.
    pub pair_samples: usize,
    /// Seeded pairs checked against the projective-factoring oracle.
    pub proj_samples: usize,
    /// Seeded triples checked for composite vanishing.
    pub triple_samples: usize,
    /// Seeded finite-length intervals checked for uniseriality.
    pub uniserial_samples: usize,
    pub embedding: EmbeddingKind,
    pub mode: ExecMode,
}

impl VerifyConfig {
    pub fn new(m: u32, window: i64) -> Result<Self> {
        if window < 1 {
            return Err(Error::Config(format!(
                "window must be at least 1, got {window}"
            )));
        }
        Ok(VerifyConfig {
            gon: GonConfig::new(m)?,
            window,
            field: FieldKind::Rational,
            seed: 0,
            pair_samples: 2000,
            proj_samples: 1000,
            triple_samples: 400,
            uniserial_samples: 200,
            embedding: EmbeddingKind::Standard,
            mode: ExecMode::default(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Kupisch,
    HomAgreement,
    LeftIntersection,
    HammockPartition,
    ProjFactoring,
    Exactness,
    CompositeVanishing,
    Uniseriality,
    SerreDuality,
    FunctorIdentities,
    Spherical,
    ComponentCensus,
    FieldIndependence,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Kupisch,
        Suite::HomAgreement,
        Suite::LeftIntersection,
        Suite::HammockPartition,
        Suite::ProjFactoring,
        Suite::Exactness,
        Suite::CompositeVanishing,
        Suite::Uniseriality,
        Suite::SerreDuality,
        Suite::FunctorIdentities,
        Suite::Spherical,
        Suite::ComponentCensus,
        Suite::FieldIndependence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Kupisch => "kupisch",
            Suite::HomAgreement => "hom_agreement",
            Suite::LeftIntersection => "left_intersection",
            Suite::HammockPartition => "hammock_partition",
            Suite::ProjFactoring => "proj_factoring",
            Suite::Exactness => "exactness",
            Suite::CompositeVanishing => "composite_vanishing",
            Suite::Uniseriality => "uniseriality",
            Suite::SerreDuality => "serre_duality",
            Suite::FunctorIdentities => "functor_identities",
            Suite::Spherical => "spherical",
            Suite::ComponentCensus => "component_census",
            Suite::FieldIndependence => "field_independence",
        }
    }
}

impl Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub subject: String,
    pub closed_form: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub m: u32,
    pub window: i64,
    pub checked: usize,
    /// Inputs outside the hypotheses of the closed form, counted but not
    /// compared.
    pub skipped: usize,
    pub failures: Vec<Counterexample>,
    pub digest: String,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Records from one unit of work, merged in input order.
#[derive(Default)]
struct Batch {
    lines: String,
    checked: usize,
    skipped: usize,
    failures: Vec<Counterexample>,
}

impl Batch {
    fn check(&mut self, subject: impl Display, closed: impl Display, oracle: impl Display) {
        let (closed, oracle) = (closed.to_string(), oracle.to_string());
        let ok = closed == oracle;
        let _ = writeln!(self.lines, "{subject}\t{closed}\t{oracle}\t{ok}");
        self.checked += 1;
        if !ok {
            self.failures.push(Counterexample {
                subject: subject.to_string(),
                closed_form: closed,
                oracle,
            });
        }
    }

    fn skip(&mut self, subject: impl Display) {
        let _ = writeln!(self.lines, "{subject}\tskipped");
        self.skipped += 1;
    }
}

fn finish(suite: Suite, cfg: &VerifyConfig, batches: Vec<Batch>) -> SuiteReport {
    let mut hasher = Sha256::new();
    let mut report = SuiteReport {
        suite,
        m: cfg.gon.m(),
        window: cfg.window,
        checked: 0,
        skipped: 0,
        failures: Vec::new(),
        digest: String::new(),
    };
    for b in batches {
        hasher.update(b.lines.as_bytes());
        report.checked += b.checked;
        report.skipped += b.skipped;
        report.failures.extend(b.failures);
    }
    report.digest = hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect();
    report
}

fn rng(cfg: &VerifyConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ (salt << 32) ^ cfg.gon.m() as u64)
}

/// Seeded pairs: half with a uniform target, half with a target that
/// receives a nonzero morphism, so that both answers are well exercised.
fn sample_pairs(all: &[Interval], count: usize, rng: &mut ChaCha8Rng) -> Vec<(Interval, Interval)> {
    (0..count)
        .map(|k| {
            let u = *all.choose(rng).expect("window has intervals");
            let v = if k % 2 == 0 {
                *all.choose(rng).unwrap()
            } else {
                let support: Vec<&Interval> =
                    all.iter().filter(|v| rep::hom_dim_rep(&u, v) > 0).collect();
                **support.choose(rng).unwrap()
            };
            (u, v)
        })
        .collect()
}

fn show<T: Display, E: Display>(r: &std::result::Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

struct Ctx<'a> {
    cfg: &'a VerifyConfig,
    chain: SampleChain,
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    match cfg.field {
        FieldKind::Rational => run::<Rational64>(suite, cfg),
        FieldKind::Prime => run::<Fp>(suite, cfg),
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|&s| run_suite(s, cfg)).collect()
}

fn run<F: Field>(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    let ctx = Ctx {
        cfg,
        chain: SampleChain::new(&cfg.gon, cfg.embedding.build(&cfg.gon), cfg.window),
    };
    let batches = match suite {
        Suite::Kupisch => kupisch_suite(&ctx),
        Suite::HomAgreement => hom_agreement::<F>(&ctx),
        Suite::LeftIntersection => left_intersection(&ctx),
        Suite::HammockPartition => hammock_partition(&ctx),
        Suite::ProjFactoring => proj_factoring::<F>(&ctx),
        Suite::Exactness => exactness::<F>(&ctx),
        Suite::CompositeVanishing => composite_vanishing::<F>(&ctx),
        Suite::Uniseriality => uniseriality(&ctx),
        Suite::SerreDuality => serre_duality(&ctx),
        Suite::FunctorIdentities => functor_identities(&ctx),
        Suite::Spherical => spherical(&ctx),
        Suite::ComponentCensus => component_census(&ctx),
        Suite::FieldIndependence => field_independence(&ctx),
    };
    finish(suite, cfg, batches)
}

fn kupisch_suite(ctx: &Ctx) -> Vec<Batch> {
    let emb = ctx.chain.embedding();
    let mut b = Batch::default();
    let pts = ctx.cfg.gon.window_points(ctx.cfg.window + 1);
    for w in pts.windows(2) {
        b.check(
            format_args!("{} < {}", w[0], w[1]),
            emb.angle(w[0]) < emb.angle(w[1]),
            true,
        );
    }
    let mut ts: Vec<Angle> = ctx.chain.base().to_vec();
    ts.extend(ctx.chain.base().iter().map(|&t| t + Angle::turns(1)));
    for &t in &ts {
        b.check(
            format_args!("κ({t} + 2π)"),
            kupisch(emb, t + Angle::turns(1)),
            kupisch(emb, t),
        );
    }
    for w in ts.windows(2) {
        let (s, t) = (w[0], w[1]);
        b.check(
            format_args!("monotone {s} {t}"),
            s + kupisch(emb, s) <= t + kupisch(emb, t),
            true,
        );
    }
    vec![b]
}

fn hom_agreement<F: Field>(ctx: &Ctx) -> Vec<Batch> {
    let all = windowed_intervals(&ctx.cfg.gon, ctx.cfg.window);
    let mut out = par::map(ctx.cfg.mode, &all, |u| {
        let mut b = Batch::default();
        for v in &all {
            let d = rep::hom_dim_rep(u, v);
            let self_pair = u == v && u.is_projective();
            let expected = if self_pair { 2 } else { d.min(1) };
            b.check(format_args!("bound {u} {v}"), d, expected);
        }
        b
    });
    let pairs = sample_pairs(&all, ctx.cfg.pair_samples, &mut rng(ctx.cfg, 1));
    out.extend(par::map(ctx.cfg.mode, &pairs, |(u, v)| {
        let mut b = Batch::default();
        let closed = rep::hom_dim_rep(u, v);
        let oracle = oracle::hom_dim_circle_oracle::<F>(u, v, &ctx.chain).and_then(|h| {
            let direct = oracle::hom_dim_circle_direct::<F>(u, v, &ctx.chain)?;
            let stray = h.stray_windings();
            Ok(if stray.is_empty() && direct == h.total {
                h.total.to_string()
            } else {
                format!("line {} direct {direct} stray windings {stray:?}", h.total)
            })
        });
        b.check(format_args!("{u} {v}"), closed, show(&oracle));
        b
    }));
    out
}

fn left_intersection(ctx: &Ctx) -> Vec<Batch> {
    let all = windowed_intervals(&ctx.cfg.gon, ctx.cfg.window);
    let pairs = sample_pairs(&all, ctx.cfg.pair_samples, &mut rng(ctx.cfg, 2));
    let emb = ctx.chain.embedding();
    par::map(ctx.cfg.mode, &pairs, |(u, v)| {
        let mut b = Batch::default();
        for n in oracle::WINDINGS {
            b.check(
                format_args!("({v} + {n}) ∩ {u}"),
                rep::left_intersect_nonempty(v, u, n),
                oracle::left_intersect_oracle(emb, v, u, n),
            );
        }
        b
    })
}

fn hammock_partition(ctx: &Ctx) -> Vec<Batch> {
    let all = windowed_intervals(&ctx.cfg.gon, ctx.cfg.window);
    par::map(ctx.cfg.mode, &all, |u| {
        let mut b = Batch::default();
        let si = u.sigma_inv();
        let prime = u.prime();
        for v in &all {
            let plus = rep::in_h_plus(u, v);
            let minus = si.is_some_and(|s| rep::in_h_minus(&s, v));
            let p = rep::in_p(&prime, v) || (u == v && u.is_projective());
            let hits = plus as u8 + minus as u8 + p as u8;
            let supported = (rep::hom_dim_rep(u, v) > 0) as u8;
            b.check(format_args!("{u} {v}"), hits, supported);
        }
        b
    })
}

fn proj_factoring<F: Field>(ctx: &Ctx) -> Vec<Batch> {
    let all = windowed_intervals(&ctx.cfg.gon, ctx.cfg.window);
    let pairs = sample_pairs(&all, ctx.cfg.proj_samples, &mut rng(ctx.cfg, 3));
    par::map(ctx.cfg.mode, &pairs, |(u, v)| {
        let mut b = Batch::default();
        let r = rep::hom_report(u, v);
        let oracle = oracle::proj_factor_dim_oracle::<F>(u, v, &ctx.chain).and_then(|p| {
            let h = oracle::hom_dim_circle_direct::<F>(u, v, &ctx.chain)?;
            Ok(format!("proj {p} stable {}", h - p))
        });
        b.check(
            format_args!("{u} {v}"),
            format_args!("proj {} stable {}", r.dim_proj, r.dim_stable),
            show(&oracle),
        );
        b
    })
}

fn exactness<F: Field>(ctx: &Ctx) -> Vec<Batch> {
    let nonproj = windowed_nonprojective(&ctx.cfg.gon, ctx.cfg.window);
    let all = windowed_intervals(&ctx.cfg.gon, ctx.cfg.window);
    par::map(ctx.cfg.mode, &nonproj, |u| {
        let mut b = Batch::default();
        let s = rep::almost_split_sequence(u).expect("non-projective");
        b.check(
            format_args!("ar {u}"),
            true,
            show(&oracle::exactness_check::<F>(
                &s.left, &s.middle, &s.right, &ctx.chain,
            )),
        );
        let um = u.minus();
        for v in &all {
            if rep::hom_dim_rep(&um, v) != 1 || rep::proj_factor_dim(&um, v) != 0 {
                continue;
            }
            let subject = format!("extension {u} {v}");
            match rep::middle_terms(u, v) {
                Ok((i, j)) => {
                    let middles: Vec<Interval> = std::iter::once(i).chain(j).collect();
                    let exact = oracle::exactness_check::<F>(u, &middles, v, &ctx.chain);
                    b.check(&subject, true, show(&exact));
                    b.check(
                        format_args!("{subject} split off"),
                        j.is_none() && i.is_projective(),
                        um.sigma_inv() == Some(*v),
                    );
                }
                Err(e) => b.check(&subject, format_args!("error: {e}"), true),
            }
        }
        b
    })
}

fn sample_triples(
    all: &[Interval],
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<(Interval, Interval, Interval)> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let u = *all.choose(rng).unwrap();
        let vs: Vec<&Interval> = all
            .iter()
            .filter(|v| **v != u && rep::hom_dim_rep(&u, v) == 1)
            .collect();
        let Some(&&v) = vs.choose(rng) else { continue };
        let ws: Vec<&Interval> = all
            .iter()
            .filter(|w| **w != u && **w != v && rep::hom_dim_rep(&v, w) == 1)
            .collect();
        let Some(&&w) = ws.choose(rng) else { continue };
        out.push((u, v, w));
    }
    out
}

fn composite_vanishing<F: Field>(ctx: &Ctx) -> Vec<Batch> {
    let all = windowed_intervals(&ctx.cfg.gon, ctx.cfg.window);
    let mut r = rng(ctx.cfg, 4);
    let triples = sample_triples(&all, ctx.cfg.triple_samples, &mut r);
    let mut out = par::map(ctx.cfg.mode, &triples, |(u, v, w)| {
        let mut b = Batch::default();
        let subject = format!("{u} {v} {w}");
        match rep::compose_nonzero(u, v, w) {
            Ok(closed) => {
                let zero = oracle::standard_composite_is_zero::<F>(u, v, w, &ctx.chain);
                b.check(&subject, closed, show(&zero.map(|z| !z)));
            }
            Err(_) => b.skip(&subject),
        }
        b
    });

    let nonproj = windowed_nonprojective(&ctx.cfg.gon, ctx.cfg.window);
    let arc_triples: Vec<(Interval, Interval, Interval)> = (0..ctx.cfg.triple_samples)
        .filter_map(|_| {
            let u = *nonproj.choose(&mut r).unwrap();
            let a = stable::phi(&u).ok()?;
            let bs: Vec<&Interval> = nonproj
                .iter()
                .filter(|v| stable::hom_dim(&a, &stable::phi(v).unwrap()) == 1)
                .collect();
            let v = **bs.choose(&mut r)?;
            let b = stable::phi(&v).unwrap();
            let cs: Vec<&Interval> = nonproj
                .iter()
                .filter(|w| stable::hom_dim(&b, &stable::phi(w).unwrap()) == 1)
                .collect();
            let w = **cs.choose(&mut r)?;
            Some((u, v, w))
        })
        .collect();
    out.extend(par::map(ctx.cfg.mode, &arc_triples, |(u, v, w)| {
        let mut b = Batch::default();
        let (x, y, z) = (
            stable::phi(u).unwrap(),
            stable::phi(v).unwrap(),
            stable::phi(w).unwrap(),
        );
        let subject = format!("stable {x} {y} {z}");
        let closed = stable::compose_nonzero_stable(&x, &y, &z);
        // A composite of nonzero stable maps survives stably exactly when
        // the matrices compose to something nonzero that does not factor
        // through a projective.
        let oracle =
            oracle::standard_composite_is_zero::<F>(u, v, w, &ctx.chain).and_then(|zero| {
                let proj = oracle::proj_factor_dim_oracle::<F>(u, w, &ctx.chain)?;
                Ok(!zero && proj == 0)
            });
        b.check(&subject, show(&closed), show(&oracle));
        b
    }));
    out
}

fn uniseriality(ctx: &Ctx) -> Vec<Batch> {
    let emb = ctx.chain.embedding();
    let finite = windowed_finite(&ctx.cfg.gon, ctx.cfg.window);
    let mut r = rng(ctx.cfg, 5);
    let mut b = Batch::default();
    let points = ctx.chain.points();
    for _ in 0..ctx.cfg.uniserial_samples {
        let u = *finite.choose(&mut r).unwrap();
        let s = rep::composition_factors(&u, usize::MAX);
        let (lo, hi) = (emb.angle(u.u1), emb.angle(u.u2));
        let counted = points
            .iter()
            .filter(|&&z| {
                let t = emb.angle(z);
                lo < t && t <= hi
            })
            .count();
        b.check(format_args!("length {u}"), s.factors.len(), counted);
        b.check(
            format_args!("declared length {u}"),
            show_opt(s.total_length),
            counted,
        );
        let simple = s.factors.iter().all(Interval::is_simple);
        let descending = s.factors.windows(2).all(|w| w[1].u1 == w[0].u1.pred());
        let top = s.factors.first().map(|f| f.u2) == Some(u.u2);
        let bottom = s.factors.last() == Some(&Interval::simple(u.u1));
        b.check(
            format_args!("series {u}"),
            simple && descending && top && bottom,
            true,
        );
    }
    for z in ctx.cfg.gon.window_points(ctx.cfg.window) {
        let p = Interval::projective(z);
        let s = rep::composition_factors(&p, 10);
        let expected: Vec<Interval> = (0..10).map(|i| Interval::simple(z.offset(-i))).collect();
        b.check(
            format_args!("projective {p}"),
            format_args!("{:?} {}", s.factors, s.finite),
            format_args!("{expected:?} false"),
        );
    }
    vec![b]
}

fn show_opt(v: Option<i64>) -> String {
    v.map_or("infinite".into(), |x| x.to_string())
}

fn serre_duality(ctx: &Ctx) -> Vec<Batch> {
    let arcs = windowed_arcs(&ctx.cfg.gon, ctx.cfg.window);
    par::map(ctx.cfg.mode, &arcs, |a| {
        let mut b = Batch::default();
        let dual = stable::shift(a, -1);
        for x in &arcs {
            let d = stable::hom_dim(a, x);
            b.check(format_args!("{a} {x}"), d, stable::hom_dim(x, &dual));
            if d == 1 {
                b.check(
                    format_args!("pairing {a} {x}"),
                    show(&stable::compose_nonzero_stable(a, x, &dual)),
                    true,
                );
            }
        }
        b
    })
}

fn functor_identities(ctx: &Ctx) -> Vec<Batch> {
    let arcs = windowed_arcs(&ctx.cfg.gon, ctx.cfg.window);
    let all = windowed_intervals(&ctx.cfg.gon, ctx.cfg.window);
    let mut b = Batch::default();
    for a in &arcs {
        b.check(
            format_args!("tau {a}"),
            stable::tau(a),
            stable::shift(a, -2),
        );
        b.check(
            format_args!("phi phi_inv {a}"),
            show(&stable::phi_inv(a).and_then(|u| stable::phi(&u))),
            a,
        );
        b.check(
            format_args!("closed admissible {a}"),
            a.is_admissible_closed_form(),
            true,
        );
    }
    for u in &all {
        if u.is_projective() {
            b.check(format_args!("phi {u}"), stable::phi(u).is_err(), true);
            continue;
        }
        b.check(
            format_args!("phi_inv phi {u}"),
            show(&stable::phi(u).and_then(|a| stable::phi_inv(&a))),
            u,
        );
        // The almost split sequence starting at U stabilizes to the almost
        // split triangle ending at φ(U⁻).
        let seq = rep::almost_split_sequence(u).unwrap();
        let tri = stable::almost_split_triangle(&stable::phi(&seq.right).unwrap());
        let mut mids: Vec<Arc> = seq
            .middle
            .iter()
            .filter(|x| !x.is_projective())
            .map(|x| stable::phi(x).unwrap())
            .collect();
        mids.sort();
        let mut tri_mids = tri.middle.clone();
        tri_mids.sort();
        b.check(
            format_args!("ar {u}"),
            format_args!("{} {:?}", tri.left, tri_mids),
            format_args!("{} {:?}", stable::phi(u).unwrap(), mids),
        );
    }
    let rows = par::map(ctx.cfg.mode, &all, |u| {
        let mut b = Batch::default();
        for v in &all {
            let r = rep::hom_report(u, v);
            let stable_dim = if u.is_projective() || v.is_projective() {
                0
            } else {
                stable::hom_dim(&stable::phi(u).unwrap(), &stable::phi(v).unwrap())
            };
            b.check(format_args!("stabilize {u} {v}"), r.dim_stable, stable_dim);
            b.check(
                format_args!("difference {u} {v}"),
                r.dim_stable,
                r.dim_rep - r.dim_proj,
            );
        }
        b
    });
    std::iter::once(b).chain(rows).collect()
}

fn spherical(ctx: &Ctx) -> Vec<Batch> {
    let mut b = Batch::default();
    let arcs = windowed_arcs(&ctx.cfg.gon, ctx.cfg.window);
    for a in &arcs {
        for n in -6..=6 {
            let s = stable::shift(a, n);
            b.check(
                format_args!("serre profile {a} {n}"),
                stable::hom_dim(a, &s),
                stable::hom_dim(&s, &stable::shift(a, -1)),
            );
        }
    }
    if ctx.cfg.gon.m() == 1 {
        let seed = Arc::m1(1, 0);
        let profile = stable::spherical_profile(&seed, -6, 6);
        let expected: Vec<u8> = (-6..=6).map(|n| (n == 0 || n == -1) as u8).collect();
        b.check(
            format_args!("profile {seed}"),
            format_args!("{profile:?}"),
            format_args!("{expected:?}"),
        );
        let closure = stable::thick_closure(&ctx.cfg.gon, &seed, ctx.cfg.window);
        let everything: BTreeSet<Arc> = arcs.into_iter().collect();
        b.check(
            format_args!("thick {seed}"),
            match closure {
                Ok(c) => format!("{} arcs, equal {}", c.len(), c == everything),
                Err(e) => format!("error: {e}"),
            },
            format_args!("{} arcs, equal true", everything.len()),
        );
    } else {
        b.skip("thick closure needs one accumulation point");
    }
    vec![b]
}

fn component_census(ctx: &Ctx) -> Vec<Batch> {
    let m = ctx.cfg.gon.m() as usize;
    let q = stable::ar_quiver(&ctx.cfg.gon, ctx.cfg.window);
    let mut b = Batch::default();
    b.check("components", q.component_count(), 2 * m + m * (m - 1));
    let comps = q.labeled_components();
    let labels: BTreeSet<ComponentLabel> = comps.iter().map(|c| c.label).collect();
    b.check("distinct labels", labels.len(), comps.len());
    for c in &comps {
        let uniform = c.members.iter().all(|a| ComponentLabel::of(a) == c.label);
        b.check(format_args!("label {}", c.label), uniform, true);
    }
    for a in windowed_arcs(&ctx.cfg.gon, ctx.cfg.window) {
        b.check(format_args!("out degree {a}"), q.out_degree(&a) <= 2, true);
    }
    vec![b]
}

fn field_independence(ctx: &Ctx) -> Vec<Batch> {
    let all = windowed_intervals(&ctx.cfg.gon, ctx.cfg.window);
    let pairs = sample_pairs(
        &all,
        (ctx.cfg.pair_samples / 10).max(20),
        &mut rng(ctx.cfg, 6),
    );
    par::map(ctx.cfg.mode, &pairs, |(u, v)| {
        let mut b = Batch::default();
        let q = oracle::hom_dim_circle_direct::<Rational64>(u, v, &ctx.chain);
        let p = oracle::hom_dim_circle_direct::<Fp>(u, v, &ctx.chain);
        b.check(format_args!("hom {u} {v}"), show(&q), show(&p));
        let q = oracle::proj_factor_dim_oracle::<Rational64>(u, v, &ctx.chain);
        let p = oracle::proj_factor_dim_oracle::<Fp>(u, v, &ctx.chain);
        b.check(format_args!("proj {u} {v}"), show(&q), show(&p));
        b
    })
}
