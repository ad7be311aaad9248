//! End-to-end acceptance checks. Each criterion prints one line; the
//! process exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use zgon_core::enumerate::windowed_arcs;
use zgon_core::stable;
use zgon_core::verify::{run_suite, EmbeddingKind, Suite, SuiteReport, VerifyConfig};
use zgon_core::{Arc, GonConfig};

/// A criterion's verdict and a one-line summary.
type Verdict = (bool, String);

type Criterion = (&'static str, fn() -> Verdict);

fn config(m: u32, window: i64) -> VerifyConfig {
    VerifyConfig::new(m, window).expect("valid configuration")
}

/// Runs `suite` for every `m`, returning whether all passed and a summary.
fn sweep(suite: Suite, ms: &[u32], window: i64, tweak: impl Fn(&mut VerifyConfig)) -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for &m in ms {
        let mut cfg = config(m, window);
        tweak(&mut cfg);
        let r = run_suite(suite, &cfg);
        ok &= r.passed() && r.checked > 0;
        parts.push(summary(&r));
    }
    (ok, parts.join(", "))
}

fn summary(r: &SuiteReport) -> String {
    let mut s = format!(
        "m={} checked {} failed {}",
        r.m,
        r.checked,
        r.failures.len()
    );
    if r.skipped > 0 {
        s.push_str(&format!(" skipped {}", r.skipped));
    }
    if let Some(c) = r.failures.first() {
        s.push_str(&format!(
            " [{}: {} vs {}]",
            c.subject, c.closed_form, c.oracle
        ));
    }
    s
}

fn hom_agreement() -> Verdict {
    let start = Instant::now();
    let (ok, detail) = sweep(Suite::HomAgreement, &[1, 2, 3], 4, |c| {
        c.pair_samples = 2000
    });
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(120);
    (
        ok && fast,
        format!("{detail}; {:.1}s", elapsed.as_secs_f64()),
    )
}

fn hammock_partition() -> Verdict {
    sweep(Suite::HammockPartition, &[1, 2, 3], 4, |_| {})
}

fn proj_factoring() -> Verdict {
    sweep(Suite::ProjFactoring, &[1, 2, 3], 4, |c| {
        c.proj_samples = 1000
    })
}

fn exactness() -> Verdict {
    sweep(Suite::Exactness, &[1, 2], 4, |_| {})
}

fn serre_duality() -> Verdict {
    sweep(Suite::SerreDuality, &[1, 2, 3], 5, |_| {})
}

fn functor_identities() -> Verdict {
    sweep(Suite::FunctorIdentities, &[1, 2, 3], 4, |_| {})
}

fn spherical() -> Verdict {
    let seed = Arc::m1(1, 0);
    let profile = stable::spherical_profile(&seed, -6, 6);
    let expected: Vec<u8> = (-6..=6).map(|n| (n == 0 || n == -1) as u8).collect();
    let gon = GonConfig::new(1).unwrap();
    let everything: BTreeSet<Arc> = windowed_arcs(&gon, 5).into_iter().collect();
    let closure = stable::thick_closure(&gon, &seed, 5);
    let thick = closure.as_ref().is_ok_and(|c| *c == everything);
    let (suite_ok, detail) = sweep(Suite::Spherical, &[1], 5, |_| {});
    (
        profile == expected && thick && suite_ok,
        format!(
            "profile {profile:?}, closure {} of {} arcs, {detail}",
            closure.map(|c| c.len()).unwrap_or(0),
            everything.len()
        ),
    )
}

fn component_census() -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for m in 1..=3u32 {
        let gon = GonConfig::new(m).unwrap();
        let q = stable::ar_quiver(&gon, 4);
        let want = 2 * m as usize + m as usize * (m as usize - 1);
        ok &= q.component_count() == want;
        parts.push(format!("m={m} {} of {want}", q.component_count()));
    }
    let (suite_ok, _) = sweep(Suite::ComponentCensus, &[1, 2, 3], 4, |_| {});
    (ok && suite_ok, parts.join(", "))
}

fn uniseriality() -> Verdict {
    sweep(Suite::Uniseriality, &[1, 2, 3], 4, |c| {
        c.uniserial_samples = 200
    })
}

fn embedding_independence() -> Verdict {
    let mut ok = true;
    let mut compared = 0;
    let mut mismatches = Vec::new();
    for (suite, window) in [
        (Suite::HomAgreement, 4),
        (Suite::HammockPartition, 4),
        (Suite::SerreDuality, 5),
        (Suite::FunctorIdentities, 4),
    ] {
        for m in 1..=3 {
            let standard = config(m, window);
            let mut skewed = standard.clone();
            skewed.embedding = EmbeddingKind::Skewed;
            let a = run_suite(suite, &standard);
            let b = run_suite(suite, &skewed);
            compared += 1;
            if a.digest != b.digest || !a.passed() || !b.passed() {
                ok = false;
                mismatches.push(format!("{suite} m={m}"));
            }
        }
    }
    (
        ok,
        format!("{compared} digest pairs compared, mismatches {mismatches:?}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("hom agreement", hom_agreement),
        ("hammock partition", hammock_partition),
        ("projective factoring", proj_factoring),
        ("exactness", exactness),
        ("duality", serre_duality),
        ("functor identities", functor_identities),
        ("spherical object", spherical),
        ("component census", component_census),
        ("uniseriality", uniseriality),
        ("embedding independence", embedding_independence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (ok, detail) = run();
        failed += !ok as usize;
        println!(
            "criterion {:>2} {name:<24} {} ({detail})",
            i + 1,
            if ok { "PASS" } else { "FAIL" }
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
