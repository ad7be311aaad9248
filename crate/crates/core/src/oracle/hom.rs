use crate::error::{Error, Result};
use crate::oracle::chain::SampleChain;
use crate::oracle::field::Field;
use crate::oracle::linalg::{Echelon, Matrix};
use crate::oracle::realize::{
    compose, flatten, hom_basis, hom_dim_linear, is_natural, realize, realize_string, MatrixRep,
    Morphism,
};
use crate::rep::Interval;
use crate::zgon::{Angle, Embedding};

/// Lifts scanned when summing line Homs into a circle Hom.
pub const WINDINGS: std::ops::RangeInclusive<i64> = -3..=3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleHom {
    pub total: usize,
    /// `dim Hom_ℝ(M_U, M_{V+2nπ})` for `n` in [`WINDINGS`].
    pub by_winding: Vec<usize>,
}

impl CircleHom {
    /// Windings outside `{0, −1}` that carry morphisms.
    pub fn stray_windings(&self) -> Vec<i64> {
        WINDINGS
            .zip(&self.by_winding)
            .filter(|&(n, &d)| d > 0 && n != 0 && n != -1)
            .map(|(n, _)| n)
            .collect()
    }
}

/// `dim Hom(M̄_U, M̄_V)` summed over line lifts of `V`.
pub fn hom_dim_circle_oracle<F: Field>(
    u: &Interval,
    v: &Interval,
    chain: &SampleChain,
) -> Result<CircleHom> {
    let m: MatrixRep<F> = realize(u, 0, chain)?;
    let by_winding = WINDINGS
        .map(|n| hom_dim_linear(&m, &realize::<F>(v, n, chain)?))
        .collect::<Result<Vec<usize>>>()?;
    Ok(CircleHom {
        total: by_winding.iter().sum(),
        by_winding,
    })
}

/// `dim Hom(M̄_U, M̄_V)` solved directly on the circle, loop included.
pub fn hom_dim_circle_direct<F: Field>(
    u: &Interval,
    v: &Interval,
    chain: &SampleChain,
) -> Result<usize> {
    hom_dim_linear(
        &realize_string::<F>(u, chain)?,
        &realize_string::<F>(v, chain)?,
    )
}

/// Real endpoints of `U + 2·shift·π`.
fn real_interval(emb: &Embedding, u: &Interval, shift: i64) -> (Angle, Angle) {
    (
        emb.angle(u.u1) + Angle::turns(shift),
        emb.angle(u.u2) + Angle::turns(u.h as i64 + shift),
    )
}

/// Whether `(V + 2nπ) ∩_L U ≠ ∅`, straight from the quantified definition:
/// the overlap must be nonempty and every `v ∈ V∖U` and `v ∈ V` must lie
/// below every `u ∈ U` and `u ∈ U∖V` respectively. Membership only changes
/// at the four endpoints, so endpoints, midpoints and one point beyond each
/// extreme are enough witnesses.
pub fn left_intersect_oracle(emb: &Embedding, v: &Interval, u: &Interval, n: i64) -> bool {
    let (a, b) = real_interval(emb, u, 0);
    let (c, d) = real_interval(emb, v, n);
    left_intersect_real((c, d), (a, b))
}

fn left_intersect_real(v: (Angle, Angle), u: (Angle, Angle)) -> bool {
    let mut ends = vec![u.0, u.1, v.0, v.1];
    ends.sort();
    ends.dedup();
    let mut samples = vec![
        ends[0] - Angle::turns(1),
        *ends.last().unwrap() + Angle::turns(1),
    ];
    for w in ends.windows(2) {
        samples.push(w[0].midpoint(w[1]));
    }
    samples.extend(&ends);
    let in_u = |x: Angle| u.0 < x && x <= u.1;
    let in_v = |x: Angle| v.0 < x && x <= v.1;
    if !samples.iter().any(|&x| in_u(x) && in_v(x)) {
        return false;
    }
    for &p in &samples {
        for &q in &samples {
            let first = in_v(p) && !in_u(p) && in_u(q);
            let second = in_v(p) && in_u(q) && !in_v(q);
            if (first || second) && p >= q {
                return false;
            }
        }
    }
    true
}

/// The standard morphism `M̄_U → M̄_V` through the lift `V + 2nπ`: identity
/// on the left intersection, zero elsewhere.
pub fn standard_morphism_matrix<F: Field>(
    u: &Interval,
    v: &Interval,
    n: i64,
    chain: &SampleChain,
) -> Result<(MatrixRep<F>, MatrixRep<F>, Morphism<F>)> {
    let mu = realize_string::<F>(u, chain)?;
    let mv = realize_string::<F>(v, chain)?;
    let f = standard_between(&mu, &mv, u, v, n, chain)?;
    Ok((mu, mv, f))
}

fn standard_between<F: Field>(
    mu: &MatrixRep<F>,
    mv: &MatrixRep<F>,
    u: &Interval,
    v: &Interval,
    n: i64,
    chain: &SampleChain,
) -> Result<Morphism<F>> {
    let emb = chain.embedding();
    let nonempty = left_intersect_oracle(emb, v, u, n);
    let (a, _) = real_interval(emb, u, 0);
    let (_, d) = real_interval(emb, v, n);
    let f: Morphism<F> = (0..mu.len())
        .map(|x| {
            let mut m = Matrix::zeros(mv.dims[x], mu.dims[x]);
            if nonempty {
                for (c, &b) in mu.basis[x].iter().enumerate() {
                    if a < b && b <= d {
                        let target = b - Angle::turns(n);
                        if let Some(r) = mv.basis[x].iter().position(|&t| t == target) {
                            m.set(r, c, F::one());
                        }
                    }
                }
            }
            m
        })
        .collect();
    if !is_natural(mu, mv, &f) {
        return Err(Error::Domain(format!(
            "standard morphism {u} -> {v} at winding {n} is not natural"
        )));
    }
    Ok(f)
}

/// The unique winding carrying a standard morphism `U → V`, if any.
fn standard_winding(emb: &Embedding, u: &Interval, v: &Interval) -> Result<Option<i64>> {
    let hits: Vec<i64> = WINDINGS
        .filter(|&n| left_intersect_oracle(emb, v, u, n))
        .collect();
    match hits.as_slice() {
        [] => Ok(None),
        [n] => Ok(Some(*n)),
        _ => Err(Error::Domain(format!(
            "several standard morphisms {u} -> {v}"
        ))),
    }
}

/// The nonzero standard morphism `U → V`, or zero if there is none.
pub fn canonical_morphism<F: Field>(
    mu: &MatrixRep<F>,
    mv: &MatrixRep<F>,
    u: &Interval,
    v: &Interval,
    chain: &SampleChain,
) -> Result<Morphism<F>> {
    match standard_winding(chain.embedding(), u, v)? {
        Some(n) => standard_between(mu, mv, u, v, n, chain),
        None => Ok((0..mu.len())
            .map(|x| Matrix::zeros(mv.dims[x], mu.dims[x]))
            .collect()),
    }
}

/// Whether the composite of the standard morphisms `U → V → W` is zero.
pub fn standard_composite_is_zero<F: Field>(
    u: &Interval,
    v: &Interval,
    w: &Interval,
    chain: &SampleChain,
) -> Result<bool> {
    let mu = realize_string::<F>(u, chain)?;
    let mv = realize_string::<F>(v, chain)?;
    let mw = realize_string::<F>(w, chain)?;
    let f = canonical_morphism(&mu, &mv, u, v, chain)?;
    let g = canonical_morphism(&mv, &mw, v, w, chain)?;
    Ok(compose(&g, &f).iter().all(Matrix::is_zero))
}

/// Dimension of the span of all composites `U → P_z → V` over sampled `z`.
pub fn proj_factor_dim_oracle<F: Field>(
    u: &Interval,
    v: &Interval,
    chain: &SampleChain,
) -> Result<usize> {
    let witness = u.u2.pred();
    if !chain.contains_point(witness) {
        return Err(Error::Range(format!(
            "projective witness at {witness} is outside the chain"
        )));
    }
    let mu = realize_string::<F>(u, chain)?;
    let mv = realize_string::<F>(v, chain)?;
    let mut span = Echelon::new();
    for &z in chain.points() {
        if !chain.contains_point(z.succ()) {
            continue;
        }
        let p = realize_string::<F>(&Interval::projective(z), chain)?;
        let into = hom_basis(&mu, &p)?;
        if into.is_empty() {
            continue;
        }
        let out = hom_basis(&p, &mv)?;
        for f in &into {
            for g in &out {
                span.insert(flatten(&mu, &mv, &compose(g, f)));
            }
        }
    }
    Ok(span.rank())
}

/// Checks that `0 → U → ⊕ middles → V → 0` is exact at every sample, with
/// left map `(f_i)` and right map `(−g_1, g_2, …)` built from standard
/// morphisms.
pub fn exactness_check<F: Field>(
    u: &Interval,
    middles: &[Interval],
    v: &Interval,
    chain: &SampleChain,
) -> Result<bool> {
    if middles.is_empty() {
        return Err(Error::Domain(
            "a short exact sequence needs a middle term".into(),
        ));
    }
    let mu = realize_string::<F>(u, chain)?;
    let mv = realize_string::<F>(v, chain)?;
    let mut fs = Vec::new();
    let mut gs = Vec::new();
    let mut dims_mid = vec![0; mu.len()];
    for (i, x) in middles.iter().enumerate() {
        let mx = realize_string::<F>(x, chain)?;
        let sign = if i == 0 { -F::one() } else { F::one() };
        fs.push(canonical_morphism(&mu, &mx, u, x, chain)?);
        let g = canonical_morphism(&mx, &mv, x, v, chain)?;
        gs.push(
            g.into_iter()
                .map(|m| m.scale(sign))
                .collect::<Morphism<F>>(),
        );
        for (d, e) in dims_mid.iter_mut().zip(&mx.dims) {
            *d += e;
        }
    }
    for x in 0..mu.len() {
        let (du, dv, dm) = (mu.dims[x], mv.dims[x], dims_mid[x]);
        if du + dv != dm {
            return Ok(false);
        }
        let a = Matrix::vstack(&fs.iter().map(|f| f[x].clone()).collect::<Vec<_>>(), du);
        let b = Matrix::hstack(&gs.iter().map(|g| g[x].clone()).collect::<Vec<_>>(), dv);
        let ra = a.rank();
        let rb = b.rank();
        if !b.mul(&a).is_zero() || ra != du || rb != dv || ra + rb != dm {
            return Ok(false);
        }
    }
    Ok(true)
}
