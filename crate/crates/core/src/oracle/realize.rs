use crate::error::{Error, Result};
use crate::oracle::chain::SampleChain;
use crate::oracle::field::Field;
use crate::oracle::linalg::{Echelon, Matrix, SparseRow};
use crate::rep::Interval;
use crate::zgon::Angle;

/// A representation of a finite chain of samples: a vector space per sample
/// and a linear map per step. On the circle the last step wraps around.
#[derive(Debug, Clone)]
pub struct MatrixRep<F> {
    pub dims: Vec<usize>,
    /// `maps[i]` goes from sample `i` to its successor.
    pub maps: Vec<Matrix<F>>,
    pub cyclic: bool,
    /// The lifts spanning each space, in basis order.
    pub basis: Vec<Vec<Angle>>,
}

/// A natural transformation, one matrix per sample.
pub type Morphism<F> = Vec<Matrix<F>>;

impl<F: Field> MatrixRep<F> {
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    fn next(&self, i: usize) -> Option<usize> {
        if i + 1 < self.len() {
            Some(i + 1)
        } else if self.cyclic {
            Some(0)
        } else {
            None
        }
    }

    /// Builds the representation from a per-sample basis of lifts and a
    /// rule moving a lift across each step.
    fn from_lifts(
        basis: Vec<Vec<Angle>>,
        cyclic: bool,
        moved: impl Fn(usize, Angle) -> Option<Angle>,
    ) -> Self {
        let n = basis.len();
        let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
        let steps = if cyclic { n } else { n.saturating_sub(1) };
        let maps = (0..steps)
            .map(|i| {
                let j = (i + 1) % n;
                let mut m = Matrix::zeros(dims[j], dims[i]);
                for (c, &b) in basis[i].iter().enumerate() {
                    if let Some(t) = moved(i, b) {
                        if let Some(r) = basis[j].iter().position(|&x| x == t) {
                            m.set(r, c, F::one());
                        }
                    }
                }
                m
            })
            .collect();
        MatrixRep {
            dims,
            maps,
            cyclic,
            basis,
        }
    }
}

fn lifted_bounds(chain: &SampleChain, u: &Interval, shift: i64) -> (Angle, Angle) {
    let emb = chain.embedding();
    (
        emb.angle(u.u1) + Angle::turns(shift),
        emb.angle(u.u2) + Angle::turns(u.h as i64 + shift),
    )
}

/// The interval module of `U + 2·shift·π` on the line chain.
pub fn realize<F: Field>(u: &Interval, shift: i64, chain: &SampleChain) -> Result<MatrixRep<F>> {
    let (lo, hi) = lifted_bounds(chain, u, shift);
    let ilo = chain.line_position(lo)?;
    let ihi = chain.line_position(hi)?;
    let line = chain.line();
    let basis = line
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            if i > ilo && i <= ihi {
                vec![x]
            } else {
                Vec::new()
            }
        })
        .collect();
    Ok(MatrixRep::from_lifts(basis, false, |i, _| {
        Some(line[i + 1])
    }))
}

/// The string module of `U` on the circle: at each sample, one basis vector
/// per lift of the sample into `(u1, u2 + 2hπ]`.
pub fn realize_string<F: Field>(u: &Interval, chain: &SampleChain) -> Result<MatrixRep<F>> {
    let (lo, hi) = lifted_bounds(chain, u, 0);
    chain.base_position(lo.reduce())?;
    chain.base_position(hi.reduce())?;
    let basis = chain
        .base()
        .iter()
        .map(|&x| {
            (0..3)
                .map(|j| x + Angle::turns(j))
                .filter(|&b| lo < b && b <= hi)
                .collect()
        })
        .collect();
    Ok(MatrixRep::from_lifts(basis, true, |i, b| {
        let t = b + chain.step(i);
        (lo < t && t <= hi).then_some(t)
    }))
}

/// Variable layout for `Hom(M, N)`: the entries of each per-sample matrix,
/// row-major, concatenated.
struct Layout {
    offsets: Vec<usize>,
    total: usize,
}

impl Layout {
    fn new<F: Field>(m: &MatrixRep<F>, n: &MatrixRep<F>) -> Self {
        let mut offsets = Vec::with_capacity(m.len());
        let mut total = 0;
        for i in 0..m.len() {
            offsets.push(total);
            total += m.dims[i] * n.dims[i];
        }
        Layout { offsets, total }
    }
}

fn check_compatible<F: Field>(m: &MatrixRep<F>, n: &MatrixRep<F>) -> Result<()> {
    if m.len() != n.len() || m.cyclic != n.cyclic {
        return Err(Error::Domain(
            "representations live on different chains".into(),
        ));
    }
    Ok(())
}

fn commuting_system<F: Field>(m: &MatrixRep<F>, n: &MatrixRep<F>, layout: &Layout) -> Echelon<F> {
    let mut ech = Echelon::new();
    for x in 0..m.len() {
        let Some(y) = m.next(x) else { continue };
        let (mx, my, ny) = (m.dims[x], m.dims[y], n.dims[y]);
        let nx = n.dims[x];
        if ny == 0 || mx == 0 {
            continue;
        }
        let (ms, ns) = (&m.maps[x], &n.maps[x]);
        // N(step)·f(x) − f(y)·M(step) = 0, entry (r, c).
        for r in 0..ny {
            for c in 0..mx {
                let mut row: SparseRow<F> = Vec::new();
                for j in 0..nx {
                    let v = ns.get(r, j);
                    if !v.is_zero() {
                        row.push((layout.offsets[x] + j * mx + c, v));
                    }
                }
                for j in 0..my {
                    let v = ms.get(j, c);
                    if !v.is_zero() {
                        row.push((layout.offsets[y] + r * my + j, -v));
                    }
                }
                row.sort_by_key(|e| e.0);
                let mut merged: SparseRow<F> = Vec::with_capacity(row.len());
                for (col, v) in row {
                    match merged.last_mut() {
                        Some(last) if last.0 == col => last.1 = last.1 + v,
                        _ => merged.push((col, v)),
                    }
                }
                ech.insert(merged);
            }
        }
    }
    ech
}

/// `dim Hom(M, N)` as the nullity of the commuting-square system.
pub fn hom_dim_linear<F: Field>(m: &MatrixRep<F>, n: &MatrixRep<F>) -> Result<usize> {
    check_compatible(m, n)?;
    let layout = Layout::new(m, n);
    Ok(layout.total - commuting_system(m, n, &layout).rank())
}

/// A basis of `Hom(M, N)`.
pub fn hom_basis<F: Field>(m: &MatrixRep<F>, n: &MatrixRep<F>) -> Result<Vec<Morphism<F>>> {
    check_compatible(m, n)?;
    let layout = Layout::new(m, n);
    let ech = commuting_system(m, n, &layout);
    Ok(ech
        .nullspace(layout.total)
        .into_iter()
        .map(|v| unflatten(m, n, &layout, &v))
        .collect())
}

fn unflatten<F: Field>(
    m: &MatrixRep<F>,
    n: &MatrixRep<F>,
    layout: &Layout,
    v: &[F],
) -> Morphism<F> {
    (0..m.len())
        .map(|x| {
            let mut f = Matrix::zeros(n.dims[x], m.dims[x]);
            for r in 0..n.dims[x] {
                for c in 0..m.dims[x] {
                    f.set(r, c, v[layout.offsets[x] + r * m.dims[x] + c]);
                }
            }
            f
        })
        .collect()
}

/// Flattens a morphism `M → N` into the coordinates used by
/// [`hom_basis`], as a sparse row.
pub fn flatten<F: Field>(m: &MatrixRep<F>, n: &MatrixRep<F>, f: &Morphism<F>) -> SparseRow<F> {
    let layout = Layout::new(m, n);
    let mut out = Vec::new();
    for (x, fx) in f.iter().enumerate() {
        for r in 0..fx.rows() {
            for c in 0..fx.cols() {
                let v = fx.get(r, c);
                if !v.is_zero() {
                    out.push((layout.offsets[x] + r * fx.cols() + c, v));
                }
            }
        }
    }
    out
}

/// Whether `f` commutes with the structure maps.
pub fn is_natural<F: Field>(m: &MatrixRep<F>, n: &MatrixRep<F>, f: &Morphism<F>) -> bool {
    (0..m.len()).all(|x| match m.next(x) {
        Some(y) => n.maps[x].mul(&f[x]) == f[y].mul(&m.maps[x]),
        None => true,
    })
}

pub fn compose<F: Field>(g: &Morphism<F>, f: &Morphism<F>) -> Morphism<F> {
    g.iter().zip(f).map(|(gx, fx)| gx.mul(fx)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::field::Fp;
    use crate::zgon::{Embedding, GonConfig, Point};
    use num_rational::Rational64;

    fn chain(m: u32, w: i64) -> SampleChain {
        let cfg = GonConfig::new(m).unwrap();
        SampleChain::new(&cfg, Embedding::standard(&cfg), w)
    }

    #[test]
    fn simple_support_on_the_line() {
        let c = chain(1, 2);
        let r: MatrixRep<Rational64> = realize(&Interval::m1(0, 1, 0), 0, &c).unwrap();
        let emb = c.embedding();
        let (a, b) = (emb.angle(Point::new(1, 0)), emb.angle(Point::new(1, 1)));
        for (i, &x) in c.line().iter().enumerate() {
            assert_eq!(r.dims[i], (a < x && x <= b) as usize);
        }
    }

    #[test]
    fn shifted_realization_is_a_translate() {
        let c = chain(1, 2);
        let u = Interval::m1(0, 2, 0);
        let r0: MatrixRep<Fp> = realize(&u, 0, &c).unwrap();
        let r1: MatrixRep<Fp> = realize(&u, 1, &c).unwrap();
        let k = c.base().len();
        assert_eq!(&r0.dims[..r0.len() - k], &r1.dims[k..]);
    }

    #[test]
    fn projective_spans_more_than_a_turn() {
        let c = chain(1, 2);
        let p: MatrixRep<Fp> = realize(&Interval::m1(0, 1, 1), 0, &c).unwrap();
        let idx: Vec<usize> = (0..p.len()).filter(|&i| p.dims[i] > 0).collect();
        let span = c.line()[*idx.last().unwrap()] - c.line()[idx[0]];
        assert!(span > Angle::turns(1));
        let s: MatrixRep<Fp> = realize_string(&Interval::m1(0, 1, 1), &c).unwrap();
        assert!(s.dims.iter().all(|&d| d >= 1) && s.dims.contains(&2));
    }

    #[test]
    fn out_of_range_is_reported() {
        let c = chain(1, 1);
        let far = Interval::m1(0, 50, 0);
        assert!(matches!(realize::<Fp>(&far, 0, &c), Err(Error::Range(_))));
        assert!(matches!(
            realize::<Fp>(&Interval::m1(0, 1, 0), 9, &c),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn line_hom_examples() {
        let c = chain(1, 3);
        let m: MatrixRep<Rational64> = realize(&Interval::m1(0, 2, 0), 0, &c).unwrap();
        assert_eq!(hom_dim_linear(&m, &m), Ok(1));
        let n = realize(&Interval::m1(-1, 1, 0), 0, &c).unwrap();
        assert_eq!(hom_dim_linear(&m, &n), Ok(1));
        let s = realize(&Interval::m1(0, 1, 0), 0, &c).unwrap();
        let t = realize(&Interval::m1(2, 3, 0), 0, &c).unwrap();
        assert_eq!(hom_dim_linear(&s, &t), Ok(0));
        let circ: MatrixRep<Rational64> = realize_string(&Interval::m1(0, 1, 0), &c).unwrap();
        assert!(hom_dim_linear(&s, &circ).is_err());
    }

    #[test]
    fn basis_elements_are_natural() {
        let c = chain(1, 2);
        let p: MatrixRep<Rational64> = realize_string(&Interval::m1(0, 1, 1), &c).unwrap();
        let b = hom_basis(&p, &p).unwrap();
        assert_eq!(b.len(), 2);
        for f in &b {
            assert!(is_natural(&p, &p, f));
        }
    }
}
