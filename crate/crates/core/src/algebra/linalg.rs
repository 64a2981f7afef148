//! Exact Gaussian elimination over a field.

use super::scalar::Field;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(domain: &F::Domain, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(domain); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix { rows: nrows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c).mul(&inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c).sub(&factor.mul(m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn kernel(&self, domain: &F::Domain) -> Vec<Vec<F>> {
        let ech = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(domain); self.cols];
                v[f] = F::one(domain);
                for (r, &pc) in ech.pivots.iter().enumerate() {
                    v[pc] = ech.matrix.get(r, f).neg();
                }
                v
            })
            .collect()
    }

    pub fn mul_vec(&self, v: &[F], domain: &F::Domain) -> Vec<F> {
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(F::zero(domain), |acc, (a, b)| acc.add(&a.mul(b))))
            .collect()
    }

    /// Solve `A x = b`; `None` if inconsistent. Free variables set to zero.
    pub fn solve(&self, b: &[F], domain: &F::Domain) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(domain, self.rows, self.cols + 1);
        for (r, br) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, br.clone());
        }
        let ech = aug.rref();
        if ech.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(domain); self.cols];
        for (r, &pc) in ech.pivots.iter().enumerate() {
            x[pc] = ech.matrix.get(r, self.cols).clone();
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{Fp, Rational};

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows[0].len();
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect()).collect(), cols)
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(q(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(q(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).rank(), 3);
        assert_eq!(q(&[&[0, 0], &[0, 0]]).rank(), 0);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = q(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 0, 1, 0]]);
        let k = a.kernel(&());
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v, &()).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rank_mod_p_sees_characteristic() {
        let p = 5u32;
        let m = Matrix::from_rows(vec![vec![Fp::new(1, p), Fp::new(2, p)], vec![Fp::new(3, p), Fp::new(1, p)]], 2);
        // det = 1 - 6 = -5 = 0 mod 5
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = q(&[&[1, 1], &[1, -1]]);
        let x = a.solve(&[Rational::from_integer(3), Rational::from_integer(1)], &()).unwrap();
        assert_eq!(x, vec![Rational::from_integer(2), Rational::from_integer(1)]);
        let b = q(&[&[1, 1], &[2, 2]]);
        assert!(b.solve(&[Rational::from_integer(1), Rational::from_integer(3)], &()).is_none());
    }
}
