//! Exact linear algebra: small dense matrices for per-sample maps and an
//! incremental sparse row echelon form for the large, very sparse
//! commuting-square systems.

use std::collections::BTreeMap;

use crate::oracle::field::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let data = if rows * cols == 0 {
            Vec::new()
        } else {
            vec![F::zero(); rows * cols]
        };
        Matrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn scale(&self, s: F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x * s).collect(),
        }
    }

    /// Stack blocks on top of each other.
    pub fn vstack(blocks: &[Matrix<F>], cols: usize) -> Matrix<F> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut r0 = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            for r in 0..b.rows {
                for c in 0..cols {
                    out.set(r0 + r, c, b.get(r, c));
                }
            }
            r0 += b.rows;
        }
        out
    }

    /// Place blocks side by side.
    pub fn hstack(blocks: &[Matrix<F>], rows: usize) -> Matrix<F> {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut c0 = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for r in 0..rows {
                for c in 0..b.cols {
                    out.set(r, c0 + c, b.get(r, c));
                }
            }
            c0 += b.cols;
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new();
        for r in 0..self.rows {
            ech.insert(
                (0..self.cols)
                    .map(|c| (c, self.get(r, c)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            );
        }
        ech.rank()
    }
}

/// A sparse row: `(column, value)` pairs sorted by column, no zeros.
pub type SparseRow<F> = Vec<(usize, F)>;

/// `a + s·b` for sparse rows.
fn axpy<F: Field>(a: &[(usize, F)], s: F, b: &[(usize, F)]) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, s * b[j].1));
            j += 1;
        } else {
            let v = a[i].1 + s * b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row echelon form built one row at a time. Each stored row has leading
/// coefficient one and is keyed by its leading column.
#[derive(Debug, Clone)]
pub struct Echelon<F> {
    pivots: BTreeMap<usize, SparseRow<F>>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon {
            pivots: BTreeMap::new(),
        }
    }

    /// Reduce `row` against the stored pivots; keep it if it is independent.
    pub fn insert(&mut self, mut row: SparseRow<F>) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        loop {
            let Some(&(lead, val)) = row.first() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(p) => row = axpy(&row, -val, p),
                None => {
                    let inv = val.inv();
                    for e in row.iter_mut() {
                        e.1 = e.1 * inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// A basis of the solution space of `row · x = 0` for every stored row,
    /// in `ncols` unknowns. One vector per free column.
    pub fn nullspace(&self, ncols: usize) -> Vec<Vec<F>> {
        let free: Vec<usize> = (0..ncols)
            .filter(|c| !self.pivots.contains_key(c))
            .collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![F::zero(); ncols];
                x[f] = F::one();
                for (&p, row) in self.pivots.iter().rev() {
                    let mut acc = F::zero();
                    for &(c, v) in &row[1..] {
                        acc = acc + v * x[c];
                    }
                    x[p] = -acc;
                }
                x
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::field::Fp;
    use num_rational::Rational64;

    fn q(v: i64) -> Rational64 {
        Rational64::from_integer(v)
    }

    #[test]
    fn echelon_rank_and_nullspace() {
        let mut e = Echelon::<Rational64>::new();
        assert!(e.insert(vec![(0, q(1)), (1, q(-1))]));
        assert!(e.insert(vec![(1, q(1)), (2, q(-1))]));
        assert!(!e.insert(vec![(0, q(1)), (2, q(-1))]));
        assert_eq!(e.rank(), 2);
        let ns = e.nullspace(3);
        assert_eq!(ns, vec![vec![q(1), q(1), q(1)]]);
    }

    #[test]
    fn nullspace_vectors_solve_the_system() {
        let rows: Vec<SparseRow<Fp>> = vec![
            vec![(0, Fp::new(2)), (3, Fp::new(1))],
            vec![(1, Fp::new(1)), (2, Fp::new(-1)), (4, Fp::new(5))],
            vec![
                (0, Fp::new(4)),
                (1, Fp::new(1)),
                (2, Fp::new(-1)),
                (3, Fp::new(2)),
                (4, Fp::new(5)),
            ],
        ];
        let mut e = Echelon::new();
        for r in &rows {
            e.insert(r.clone());
        }
        assert_eq!(e.rank(), 2);
        let ns = e.nullspace(5);
        assert_eq!(ns.len(), 3);
        for x in ns {
            for r in &rows {
                let dot = r.iter().fold(Fp::zero(), |acc, &(c, v)| acc + v * x[c]);
                assert_eq!(dot, Fp::zero());
            }
        }
    }

    #[test]
    fn dense_rank_and_products() {
        let mut m = Matrix::<Rational64>::zeros(2, 2);
        m.set(0, 0, q(1));
        m.set(0, 1, q(1));
        m.set(1, 0, q(2));
        m.set(1, 1, q(2));
        assert_eq!(m.rank(), 1);
        assert_eq!(Matrix::<Rational64>::identity(3).rank(), 3);
        assert_eq!(m.mul(&Matrix::identity(2)), m);
        let z = Matrix::<Rational64>::zeros(0, 3);
        assert!(z.is_zero());
        assert_eq!(z.rank(), 0);
    }
}
