use super::{echelon, PrimeField, Subspace};

/// Dense matrix over a prime field, stored row-major.
///
/// A matrix with `rows × cols` shape is the linear map `F^cols → F^rows`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing each entry mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.element(v));
            }
        }
        m
    }

    /// Builds a `rows × columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.field, rhs.field, "field mismatch");
        assert_eq!(
            self.cols, rhs.rows,
            "shape mismatch: {}x{} · {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let f = self.field;
        let p = f.modulus() as u64;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        let mut acc = vec![0u64; rhs.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (j, slot) in acc.iter_mut().enumerate() {
                    let b = rhs.data[k * rhs.cols + j] as u64;
                    if b != 0 {
                        *slot = (*slot + a * b) % p;
                    }
                }
            }
            for (j, &v) in acc.iter().enumerate() {
                out.data[i * rhs.cols + j] = v as u32;
            }
        }
        out
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, x: &[u32]) -> Vec<u32> {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        let p = self.field.modulus() as u64;
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let mut acc = 0u64;
                for (a, b) in row.iter().zip(x) {
                    if *a != 0 && *b != 0 {
                        acc = (acc + *a as u64 * *b as u64) % p;
                    }
                }
                acc as u32
            })
            .collect()
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, idx.len(), self.cols);
        for (i, &r) in idx.iter().enumerate() {
            m.data[i * self.cols..(i + 1) * self.cols].copy_from_slice(self.row(r));
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.set(r, j, self.get(r, c));
            }
        }
        m
    }

    /// Row-echelon rank over F_p.
    pub fn rank(&self) -> usize {
        let mut rows = self.row_vecs();
        echelon(self.field, &mut rows, None).len()
    }

    /// Null space `{x : Mx = 0}` as a subspace of `F^cols`.
    pub fn kernel_basis(&self) -> Subspace {
        let f = self.field;
        let mut rows = self.row_vecs();
        let pivots = echelon(f, &mut rows, None);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vectors = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(rows[i][free]);
            }
            vectors.push(v);
        }
        Subspace::from_vectors(f, self.cols, vectors)
    }

    /// Column space as a subspace of `F^rows`.
    pub fn image_basis(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.rows, self.columns())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_d1(field: PrimeField) -> Matrix {
        // vertices v0 v1 v2; edges 01 02 12; ∂[a,b] = b - a
        Matrix::from_rows(field, &[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]])
    }

    #[test]
    fn ranks() {
        let f = PrimeField::TWO;
        assert_eq!(Matrix::zeros(f, 3, 3).rank(), 0);
        assert_eq!(Matrix::identity(f, 4).rank(), 4);
        assert_eq!(triangle_d1(f).rank(), 2);
        assert_eq!(triangle_d1(PrimeField::THREE).rank(), 2);
    }

    #[test]
    fn kernel_and_image_of_identity_and_zero() {
        let f = PrimeField::THREE;
        let id = Matrix::identity(f, 3);
        assert_eq!(id.kernel_basis().dim(), 0);
        assert_eq!(id.image_basis().dim(), 3);
        let z = Matrix::zeros(f, 2, 3);
        assert_eq!(z.kernel_basis().dim(), 3);
        assert_eq!(z.image_basis().dim(), 0);
    }

    #[test]
    fn triangle_cycle() {
        for f in [PrimeField::TWO, PrimeField::THREE, PrimeField::new(5).unwrap()] {
            let d = triangle_d1(f);
            let ker = d.kernel_basis();
            assert_eq!(ker.dim(), 1);
            // oriented cycle 01 - 02 + 12
            let cycle = vec![1, f.element(-1), 1];
            assert!(ker.contains(&cycle));
            assert!(d.apply(&cycle).iter().all(|&v| v == 0));
        }
    }

    #[test]
    fn product_and_transpose() {
        let f = PrimeField::new(7).unwrap();
        let a = Matrix::from_rows(f, &[vec![1, 2], vec![3, 4]]);
        let b = Matrix::from_rows(f, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b), Matrix::from_rows(f, &[vec![2, 1], vec![4, 3]]));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.apply(&[1, 1]), vec![3, 0]);
    }
}
