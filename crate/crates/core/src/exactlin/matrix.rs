use std::fmt;
use std::ops::Mul;

use super::{ArithError, Cyc9, CycNumber, Field};

/// A dense square matrix over a field, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    n: usize,
    entries: Vec<F>,
}

pub type CycMatrix = Matrix<CycNumber>;
pub type Cyc9Matrix = Matrix<Cyc9>;

impl<F: Field> Matrix<F> {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            entries: vec![F::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = F::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &F) -> Self {
        Matrix::identity(n).scale(c)
    }

    pub fn diagonal(diag: &[F]) -> Self {
        let n = diag.len();
        let mut m = Matrix::zeros(n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
        }
        m
    }

    /// Build from rows; every row must have the same length as the row count.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, ArithError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(ArithError::DimensionMismatch {
                left: n,
                right: rows.iter().map(Vec::len).find(|&l| l != n).unwrap_or(n),
            });
        }
        Ok(Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub(crate) fn from_flat(n: usize, entries: Vec<F>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        Matrix { n, entries }
    }

    /// The cyclic shift `J` with ones at (i, i+1 mod n).
    pub fn shift(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m.entries[i * n + (i + 1) % n] = F::one();
        }
        m
    }

    /// The inverse shift, ones at (i, i−1 mod n); equals `shift(n)²` for n = 3.
    pub fn shift_inverse(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m.entries[i * n + (i + n - 1) % n] = F::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<F>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.n)
    }

    /// `Some(c)` when the matrix equals c·I.
    pub fn as_scalar(&self) -> Option<F> {
        let c = self.get(0, 0).clone();
        (*self == Matrix::scalar(self.n, &c)).then_some(c)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, &F)> {
        self.entries.iter().enumerate().find(|(_, e)| !e.is_zero())
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e.times(c)).collect(),
        }
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Result<Self, ArithError> {
        self.check_dim(rhs)?;
        Ok(Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.plus(b))
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Matrix<F>) -> Result<Self, ArithError> {
        self.check_dim(rhs)?;
        Ok(Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.minus(b))
                .collect(),
        })
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Result<Self, ArithError> {
        self.check_dim(rhs)?;
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = F::zero();
                for k in 0..n {
                    let a = &self.entries[i * n + k];
                    let b = &rhs.entries[k * n + j];
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.plus(&a.times(b));
                    }
                }
                out.push(acc);
            }
        }
        Ok(Matrix { n, entries: out })
    }

    pub fn trace(&self) -> F {
        (0..self.n).fold(F::zero(), |acc, i| acc.plus(self.get(i, i)))
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.entries[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        m
    }

    pub fn conj_transpose(&self) -> Self {
        let mut m = self.transpose();
        for e in &mut m.entries {
            *e = e.conj();
        }
        m
    }

    /// Determinant by elimination over the field.
    pub fn det(&self) -> F {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return F::zero();
            };
            if p != col {
                for j in 0..n {
                    a.swap(p * n + j, col * n + j);
                }
                det = det.negate();
            }
            let pivot = a[col * n + col].clone();
            det = det.times(&pivot);
            let inv = pivot.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                let f = a[r * n + col].times(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = a[r * n + j].minus(&f.times(&a[col * n + j]));
                    a[r * n + j] = v;
                }
            }
        }
        det
    }

    /// Gauss–Jordan inverse; fails on a singular matrix.
    pub fn inverse(&self) -> Result<Self, ArithError> {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut inv = Matrix::<F>::identity(n).entries;
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or(ArithError::Singular)?;
            if p != col {
                for j in 0..n {
                    a.swap(p * n + j, col * n + j);
                    inv.swap(p * n + j, col * n + j);
                }
            }
            let pinv = a[col * n + col].inv()?;
            for j in 0..n {
                a[col * n + j] = a[col * n + j].times(&pinv);
                inv[col * n + j] = inv[col * n + j].times(&pinv);
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].clone();
                for j in 0..n {
                    a[r * n + j] = a[r * n + j].minus(&f.times(&a[col * n + j]));
                    inv[r * n + j] = inv[r * n + j].minus(&f.times(&inv[col * n + j]));
                }
            }
        }
        Ok(Matrix { n, entries: inv })
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Matrix::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn map<G>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn check_dim(&self, rhs: &Matrix<F>) -> Result<(), ArithError> {
        if self.n != rhs.n {
            return Err(ArithError::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        Ok(())
    }
}

/// Panics on a dimension mismatch; the fallible form is [`Matrix::mul`].
impl<F: Field> Mul<&Matrix<F>> for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        Matrix::mul(self, rhs).expect("matrix dimensions agree")
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.chunks(self.n).enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
        }
        f.write_str("]")
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<&CycMatrix> for Cyc9Matrix {
    fn from(m: &CycMatrix) -> Self {
        m.map(|x| Cyc9::from(x.clone()))
    }
}

impl From<CycMatrix> for Cyc9Matrix {
    fn from(m: CycMatrix) -> Self {
        Cyc9Matrix::from(&m)
    }
}

impl Cyc9Matrix {
    /// `Some` when every entry lies in ℚ(ω).
    pub fn as_cyc(&self) -> Option<CycMatrix> {
        let entries = self
            .entries
            .iter()
            .map(Cyc9::as_cyc)
            .collect::<Option<Vec<_>>>()?;
        Some(Matrix { n: self.n, entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rational;

    fn w(k: i64) -> CycNumber {
        CycNumber::root_of_unity(k)
    }

    #[test]
    fn shift_powers() {
        let j = CycMatrix::shift(3);
        let k = CycMatrix::shift_inverse(3);
        assert_eq!(&j * &j, k);
        assert_eq!(&k * &k, j);
        assert!(j.pow(3).unwrap().is_identity());
        assert!(k.pow(3).unwrap().is_identity());
        assert_eq!(j.pow(-1).unwrap(), k);
    }

    #[test]
    fn circulant_trace_and_det() {
        let (a, b, c) = (
            CycNumber::from_ints(2, -1),
            CycNumber::new(Rational::new(1, 3).unwrap(), Rational::from_int(1)),
            CycNumber::from_ints(0, 5),
        );
        let j = CycMatrix::shift(3);
        let k = CycMatrix::shift_inverse(3);
        let y = CycMatrix::scalar(3, &a)
            .add(&j.scale(&b))
            .unwrap()
            .add(&k.scale(&c))
            .unwrap();
        assert_eq!(y.trace(), CycNumber::from(3) * &a);
        let expected = &(&(&(&a * &a) * &a) + &(&(&b * &b) * &b)) + &(&(&c * &c) * &c);
        let expected = &expected - &(&(&(&a * &b) * &c) * &CycNumber::from(3));
        assert_eq!(y.det(), expected);
    }

    #[test]
    fn det_inverse_and_errors() {
        assert_eq!(CycMatrix::identity(3).det(), CycNumber::one());
        let m = CycMatrix::diagonal(&[w(1), w(2), CycNumber::from(2)]);
        assert_eq!(m.det(), CycNumber::from(2));
        assert!(m.inverse().unwrap().mul(&m).unwrap().is_identity());
        let singular = CycMatrix::diagonal(&[w(1), CycNumber::zero(), w(0)]);
        assert_eq!(singular.inverse(), Err(ArithError::Singular));
        assert!(CycMatrix::identity(2).mul(&CycMatrix::identity(3)).is_err());
        assert!(CycMatrix::from_rows(vec![vec![w(0)], vec![w(1), w(2)]]).is_err());
    }

    #[test]
    fn scalar_detection() {
        assert_eq!(CycMatrix::scalar(3, &w(1)).as_scalar(), Some(w(1)));
        assert_eq!(CycMatrix::shift(3).as_scalar(), None);
    }
}
