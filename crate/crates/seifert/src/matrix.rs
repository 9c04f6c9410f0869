//! Dense matrices of arbitrary-precision integers.
//!
//! All arithmetic is exact. Determinants use fraction-free (Bareiss)
//! elimination so intermediate values stay integral.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The integer type used throughout the crate.
pub type Int = BigInt;

/// Row-major matrix over [`Int`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Int>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::BadShape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    /// Convenience constructor from machine integers; panics on a bad shape.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        IntMatrix {
            rows,
            cols,
            entries: entries.iter().map(|&e| Int::from(e)).collect(),
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Int] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Matrix product; panics on incompatible shapes (internal misuse).
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(
            self.cols, rhs.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += &self[(i, k)] * &rhs[(k, j)];
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    pub fn add(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }

    /// Exact determinant by fraction-free elimination.
    ///
    /// The empty 0x0 matrix has determinant 1.
    pub fn det(&self) -> Result<Int> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Int::one());
        }
        let mut work: Vec<Vec<Int>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if work[k][k].is_zero() {
                match (k + 1..n).find(|&r| !work[r][k].is_zero()) {
                    Some(r) => {
                        work.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(Int::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &work[i][j] * &work[k][k] - &work[i][k] * &work[k][j];
                    // Bareiss: division by the previous pivot is exact.
                    work[i][j] = num / &prev;
                }
            }
            prev = work[k][k].clone();
        }
        Ok(sign * work[n - 1][n - 1].clone())
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    /// Row-major bracket form, e.g. `[[3,2],[1,0]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `p * v * p^T` for unimodular `p`.
pub fn congruent_transform(p: &IntMatrix, v: &IntMatrix) -> Result<IntMatrix> {
    if !v.is_square() {
        return Err(Error::NonSquare {
            rows: v.rows,
            cols: v.cols,
        });
    }
    if !p.is_square() || p.rows() != v.rows() {
        return Err(Error::DimensionMismatch {
            left: (p.rows, p.cols),
            right: (v.rows, v.cols),
        });
    }
    if !p.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    Ok(p.mul(v).mul(&p.transpose()))
}

/// An integral square matrix `V` with `det(V - V^T) = 1`.
///
/// The condition forces even size, and for 2x2 matrices `((a,b),(c,d))`
/// it forces `|b - c| = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeifertMatrix(IntMatrix);

impl SeifertMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NonSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let skew = m.sub(&m.transpose())?;
        if skew.det()? != Int::one() {
            return Err(Error::NotSeifert);
        }
        Ok(SeifertMatrix(m))
    }

    pub fn from_i64(n: usize, entries: &[i64]) -> Result<Self> {
        Self::new(IntMatrix::from_i64(n, n, entries))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    /// `V + V^T`, the symmetrized form.
    pub fn symmetrized(&self) -> IntMatrix {
        self.0.add(&self.0.transpose()).expect("same shape")
    }

    /// Unimodular congruence `p V p^T`, which stays a Seifert matrix.
    pub fn transform(&self, p: &IntMatrix) -> Result<SeifertMatrix> {
        let m = congruent_transform(p, &self.0)?;
        SeifertMatrix::new(m)
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent determinant oracle: cofactor expansion along the first row.
    fn det_cofactor(m: &IntMatrix) -> Int {
        let n = m.rows();
        if n == 0 {
            return Int::one();
        }
        if n == 1 {
            return m[(0, 0)].clone();
        }
        let mut acc = Int::zero();
        for j in 0..n {
            if m[(0, j)].is_zero() {
                continue;
            }
            let mut sub = IntMatrix::zero(n - 1, n - 1);
            for i in 1..n {
                let mut jj = 0;
                for k in 0..n {
                    if k == j {
                        continue;
                    }
                    sub[(i - 1, jj)] = m[(i, k)].clone();
                    jj += 1;
                }
            }
            let term = &m[(0, j)] * det_cofactor(&sub);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn det_examples() {
        assert_eq!(IntMatrix::identity(2).det().unwrap(), Int::from(1));
        let m = IntMatrix::from_i64(2, 2, &[3, 2, 1, 0]);
        assert_eq!(det_cofactor(&m), Int::from(-2));
        assert_eq!(m.det().unwrap(), Int::from(-2));
        let m = IntMatrix::from_i64(2, 2, &[6, 3, 3, 0]);
        assert_eq!(det_cofactor(&m), Int::from(-9));
        assert_eq!(m.det().unwrap(), Int::from(-9));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = IntMatrix::from_i64(2, 3, &[1, 2, 3, 4, 5, 6]);
        assert!(matches!(m.det(), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn congruence_examples() {
        let v = IntMatrix::from_i64(2, 2, &[3, 2, 1, 0]);
        let id = IntMatrix::identity(2);
        assert_eq!(congruent_transform(&id, &v).unwrap(), v);

        // shear witness for the metabolizer shift a -> a + (2b+1)
        let p = IntMatrix::from_i64(2, 2, &[1, 1, 0, 1]);
        let v = IntMatrix::from_i64(2, 2, &[0, 1, 2, 0]);
        assert_eq!(
            congruent_transform(&p, &v).unwrap(),
            IntMatrix::from_i64(2, 2, &[3, 1, 2, 0])
        );

        let neg = IntMatrix::from_i64(2, 2, &[-1, 0, 0, -1]);
        let v = IntMatrix::from_i64(2, 2, &[5, -3, -2, 7]);
        assert_eq!(congruent_transform(&neg, &v).unwrap(), v);
    }

    #[test]
    fn congruence_rejects_non_unimodular() {
        let p = IntMatrix::from_i64(2, 2, &[2, 0, 0, 1]);
        let v = IntMatrix::from_i64(2, 2, &[3, 2, 1, 0]);
        assert_eq!(congruent_transform(&p, &v), Err(Error::NotUnimodular));
    }

    #[test]
    fn seifert_matrix_validation() {
        assert!(SeifertMatrix::from_i64(2, &[3, 2, 1, 0]).is_ok());
        assert!(SeifertMatrix::from_i64(2, &[3, 2, 2, 0]).is_err());
        // odd size can never satisfy det(V - V^T) = 1
        assert!(SeifertMatrix::from_i64(1, &[5]).is_err());
        // empty matrix is the unknot's Seifert matrix
        assert!(SeifertMatrix::new(IntMatrix::zero(0, 0)).is_ok());
    }

    prop_compose! {
        fn small_matrix(max_n: usize, bound: i64)
            (n in 1..=max_n)
            (n in Just(n), entries in proptest::collection::vec(-bound..=bound, n * n))
            -> IntMatrix
        {
            IntMatrix::from_i64(n, n, &entries)
        }
    }

    fn unimodular_strategy(n: usize) -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec((0u8..3, 0..n, 0..n, -3i64..=3), 0..5)
            .prop_map(move |ops| crate::testutil::unimodular(n, ops))
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(m in small_matrix(4, 20)) {
            prop_assert_eq!(m.det().unwrap(), det_cofactor(&m));
        }

        #[test]
        fn congruence_preserves_det_and_skew_det(
            p in unimodular_strategy(2),
            entries in proptest::collection::vec(-10i64..=10, 4),
        ) {
            let v = IntMatrix::from_i64(2, 2, &entries);
            let w = congruent_transform(&p, &v).unwrap();
            prop_assert_eq!(w.det().unwrap(), v.det().unwrap());
            let skew_v = v.sub(&v.transpose()).unwrap().det().unwrap();
            let skew_w = w.sub(&w.transpose()).unwrap().det().unwrap();
            prop_assert_eq!(skew_v, skew_w);
        }
    }
}
