use serde::{Deserialize, Serialize};

use super::{LinAlgError, Scalar, SparseVec};

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Signature of a symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

impl Inertia {
    pub fn is_positive_definite(&self) -> bool {
        self.zero == 0 && self.negative == 0 && self.positive > 0
    }

    pub fn is_positive_semidefinite(&self) -> bool {
        self.negative == 0
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(LinAlgError::Shape(format!("ragged rows in {r}x{c} matrix")));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Convenience constructor for small integer-fraction test matrices.
    pub fn from_fracs(rows: &[&[(i64, i64)]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|(n, d)| Scalar::new(*n, *d)).collect())
                .collect(),
        )
        .expect("rectangular input")
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|x| Scalar::from_int(*x)).collect()).collect())
            .expect("rectangular input")
    }

    /// Builds a matrix whose rows are the given sparse vectors.
    pub fn from_sparse_rows(rows: &[SparseVec], cols: usize) -> Self {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in r.iter() {
                m.set(i, *j, c.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_sparse(&self, i: usize) -> SparseVec {
        SparseVec::from_dense(self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self - c * I`
    pub fn shift(&self, c: &Scalar) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = m.get(i, i) - c;
            m.set(i, i, v);
        }
        m
    }

    /// `x^T self y`
    pub fn bilinear(&self, x: &SparseVec, y: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let g = self.get(*i, *j);
                if !g.is_zero() {
                    acc += &(&(a * b) * g);
                }
            }
        }
        acc
    }

    pub fn mul_sparse(&self, v: &SparseVec) -> SparseVec {
        (0..self.rows)
            .filter_map(|i| {
                let mut acc = Scalar::zero();
                for (j, c) in v.iter() {
                    let a = self.get(i, *j);
                    if !a.is_zero() {
                        acc += &(a * c);
                    }
                }
                (!acc.is_zero()).then_some((i, acc))
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row-echelon form. Pivots are taken as the first nonzero entry
    /// scanning columns left to right, rows top to bottom.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pj = m.get(r, j);
                    if !pj.is_zero() {
                        let v = m.get(i, j) - &(&f * pj);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Null-space basis read off the reduced echelon form: one vector per
    /// free column, with a one in that column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for p in &pivots {
            is_pivot[*p] = true;
        }
        (0..self.cols)
            .filter(|j| !is_pivot[*j])
            .map(|free| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[free] = Scalar::one();
                for (r, p) in pivots.iter().enumerate() {
                    v[*p] = -matrix.get(r, free);
                }
                v
            })
            .collect()
    }

    /// Exact signature of a symmetric matrix by congruence (symmetric
    /// Gaussian elimination). When every remaining diagonal entry is zero
    /// but an off-diagonal one is not, row/column `j` is added to `i`, which
    /// puts `2 a_ij` on the diagonal without changing the signature.
    pub fn inertia(&self) -> Result<Inertia, LinAlgError> {
        if !self.is_symmetric() {
            return Err(LinAlgError::NotSymmetric);
        }
        let n = self.rows;
        let mut a: Vec<Vec<Scalar>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut active: Vec<usize> = (0..n).collect();
        let (mut pos, mut neg) = (0, 0);
        while !active.is_empty() {
            let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
            let p = match pivot {
                Some(p) => p,
                None => {
                    let pair = active.iter().copied().find_map(|i| {
                        active.iter().copied().find(|&j| j != i && !a[i][j].is_zero()).map(|j| (i, j))
                    });
                    let Some((i, j)) = pair else { break };
                    for k in 0..n {
                        let v = &a[i][k] + &a[j][k];
                        a[i][k] = v;
                    }
                    for k in 0..n {
                        let v = &a[k][i] + &a[k][j];
                        a[k][i] = v;
                    }
                    i
                }
            };
            let d = a[p][p].clone();
            if d.is_negative() {
                neg += 1;
            } else {
                pos += 1;
            }
            active.retain(|&x| x != p);
            let inv = d.recip();
            let prow = a[p].clone();
            for &i in &active {
                let f = &a[i][p] * &inv;
                if f.is_zero() {
                    continue;
                }
                for &j in &active {
                    if !prow[j].is_zero() {
                        let v = &a[i][j] - &(&f * &prow[j]);
                        a[i][j] = v;
                    }
                }
                a[i][p] = Scalar::zero();
            }
        }
        Ok(Inertia { positive: pos, negative: neg, zero: n - pos - neg })
    }
}

/// Sparse row-major matrix; used for the wide relation systems.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub cols: usize,
    pub rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn new(cols: usize) -> Self {
        SparseMatrix { cols, rows: Vec::new() }
    }

    pub fn from_dense(m: &Matrix) -> Self {
        SparseMatrix { cols: m.cols(), rows: (0..m.rows()).map(|i| m.row_sparse(i)).collect() }
    }

    pub fn to_dense(&self) -> Matrix {
        Matrix::from_sparse_rows(&self.rows, self.cols)
    }

    /// Reduced row-echelon form with the same pivot rule as [`Matrix::rref`]
    /// (leftmost column first). Zero rows are dropped from the result.
    pub fn rref(&self) -> (SparseMatrix, Vec<usize>) {
        // pivot column -> row, kept fully reduced
        let mut piv: std::collections::BTreeMap<usize, SparseVec> = Default::default();
        for r in &self.rows {
            let mut v = r.clone();
            for (c, row) in &piv {
                let f = v.get(*c);
                if !f.is_zero() {
                    v = v.add_scaled(row, &-f);
                }
            }
            let Some(&(c, ref lead)) = v.first() else { continue };
            let inv = lead.recip();
            v.scale_in_place(&inv);
            for row in piv.values_mut() {
                let f = row.get(c);
                if !f.is_zero() {
                    *row = row.add_scaled(&v, &-f);
                }
            }
            piv.insert(c, v);
        }
        let pivots: Vec<usize> = piv.keys().copied().collect();
        (SparseMatrix { cols: self.cols, rows: piv.into_values().collect() }, pivots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);

        let z = Matrix::zeros(2, 4);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());

        let m = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(4).kernel().is_empty());
        let k = Matrix::zeros(3, 3).kernel();
        assert_eq!(k.len(), 3);
        assert_eq!(k[1], vec![Scalar::zero(), Scalar::one(), Scalar::zero()]);
        let k = Matrix::from_ints(&[&[1, 1]]).kernel();
        assert_eq!(k, vec![vec![Scalar::from_int(-1), Scalar::one()]]);
    }

    #[test]
    fn inertia_examples() {
        let g = Matrix::from_fracs(&[&[(1, 1), (1, 8)], &[(1, 8), (1, 1)]]);
        assert_eq!(g.inertia().unwrap(), Inertia { positive: 2, zero: 0, negative: 0 });
        assert_eq!(Matrix::zeros(3, 3).inertia().unwrap(), Inertia { positive: 0, zero: 3, negative: 0 });
        let d = Matrix::from_ints(&[&[1, 0], &[0, -1]]);
        assert_eq!(d.inertia().unwrap(), Inertia { positive: 1, zero: 0, negative: 1 });
        let h = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(h.inertia().unwrap(), Inertia { positive: 1, zero: 0, negative: 1 });
        assert!(Matrix::from_ints(&[&[0, 1], &[0, 0]]).inertia().is_err());
    }

    #[test]
    fn sparse_and_dense_rref_agree() {
        let m = Matrix::from_ints(&[&[0, 2, 4, 1], &[1, 1, 0, 0], &[1, 3, 4, 1], &[0, 0, 0, 5]]);
        let (s, piv) = SparseMatrix::from_dense(&m).rref();
        let d = m.rref();
        assert_eq!(piv, d.pivots);
        let dense_rows: Vec<SparseVec> = (0..d.rank).map(|i| d.matrix.row_sparse(i)).collect();
        assert_eq!(s.rows, dense_rows);
    }
}
