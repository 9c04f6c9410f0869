//! Integer Laurent polynomials and the Alexander polynomial
//! `det(V - t V^T)` of a Seifert matrix.
//!
//! Two Laurent polynomials are *unit equivalent* when they differ by a
//! factor `+-t^k`. [`canonicalize`] picks the representative with lowest
//! degree 0 and positive leading coefficient, so unit equivalence becomes
//! equality of canonical forms.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Int, SeifertMatrix};

/// Finitely supported integer Laurent polynomial.
///
/// `coeffs[i]` is the coefficient of `t^(lowdeg + i)`. The first and last
/// stored coefficients are nonzero, except for the canonical zero
/// (empty coefficients, `lowdeg = 0`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    coeffs: Vec<Int>,
    lowdeg: i64,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: Vec::new(),
            lowdeg: 0,
        }
    }

    pub fn one() -> Self {
        LaurentPoly {
            coeffs: vec![Int::one()],
            lowdeg: 0,
        }
    }

    pub fn constant(c: Int) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    /// Build from raw parts, trimming zero coefficients at both ends.
    pub fn from_coeffs(lowdeg: i64, coeffs: Vec<Int>) -> Self {
        let mut p = LaurentPoly { coeffs, lowdeg };
        p.trim();
        p
    }

    pub fn from_i64(lowdeg: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(lowdeg, coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.lowdeg += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lowdeg = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lowdeg(&self) -> i64 {
        self.lowdeg
    }

    pub fn highdeg(&self) -> i64 {
        self.lowdeg + self.coeffs.len() as i64 - 1
    }

    /// Difference between highest and lowest exponent (0 for the zero poly).
    pub fn degree_span(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.coeffs.len() as i64 - 1
        }
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, k: i64) -> Int {
        let idx = k - self.lowdeg;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            Int::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Multiply by `t^k`.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.clone(),
            lowdeg: self.lowdeg + k,
        }
    }

    pub fn eval_at_one(&self) -> Int {
        self.coeffs.iter().sum()
    }

    pub fn eval_at_minus_one(&self) -> Int {
        let mut acc = Int::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if (self.lowdeg + i as i64).rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.lowdeg.min(rhs.lowdeg);
        let high = self.highdeg().max(rhs.highdeg());
        let mut coeffs = vec![Int::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lowdeg - low) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.lowdeg - low) as usize + i] += c;
        }
        LaurentPoly::from_coeffs(low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            lowdeg: self.lowdeg,
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.lowdeg + rhs.lowdeg, coeffs)
    }
}

impl fmt::Display for LaurentPoly {
    /// Explicit-sign rendering, highest degree first: `2*t^2 - 5*t + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let k = self.lowdeg + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            match (k, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Determinant of a square matrix of Laurent polynomials, by expansion
/// along rows with memoization over column subsets (O(2^n * n) ring ops).
fn poly_det(rows: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = rows.len();
    assert!(n <= 16, "polynomial determinant limited to size 16");
    if n == 0 {
        return LaurentPoly::one();
    }
    let full = (1usize << n) - 1;
    let mut memo: Vec<Option<LaurentPoly>> = vec![None; full + 1];
    memo[0] = Some(LaurentPoly::one());
    for mask in 1..=full {
        let k = (mask as u32).count_ones() as usize; // submatrix uses rows 0..k
        let mut acc = LaurentPoly::zero();
        // expand along row k-1; idx is the position of column j inside mask
        let mut rem = mask;
        let mut idx = 0usize;
        while rem != 0 {
            let j = rem.trailing_zeros() as usize;
            rem &= rem - 1;
            let e = &rows[k - 1][j];
            if !e.is_zero() {
                let sub = memo[mask & !(1 << j)]
                    .as_ref()
                    .expect("subsets filled in increasing order");
                let term = e * sub;
                if ((k - 1) + idx) % 2 == 0 {
                    acc = &acc + &term;
                } else {
                    acc = &acc - &term;
                }
            }
            idx += 1;
        }
        memo[mask] = Some(acc);
    }
    memo[full].take().unwrap()
}

/// Alexander polynomial `det(V - t V^T)`, exact and unnormalized.
pub fn alexander(v: &SeifertMatrix) -> LaurentPoly {
    let n = v.size();
    let m = v.matrix();
    let rows: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| LaurentPoly::from_coeffs(0, vec![m[(i, j)].clone(), -m[(j, i)].clone()]))
                .collect()
        })
        .collect();
    poly_det(&rows)
}

/// Unit normalization: multiply by `+-t^k` so that `lowdeg = 0` and the
/// leading coefficient is positive. Two polynomials are unit equivalent
/// iff their canonical forms are equal.
pub fn canonicalize(p: &LaurentPoly) -> Result<LaurentPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let shifted = p.shifted(-p.lowdeg());
    if shifted.coeffs.last().expect("nonzero").is_negative() {
        Ok(-&shifted)
    } else {
        Ok(shifted)
    }
}

/// `|Delta(-1)|`, the knot determinant. Also equal to `|det(V + V^T)|`,
/// which is asserted internally.
pub fn knot_determinant(v: &SeifertMatrix) -> Int {
    let d = alexander(v).eval_at_minus_one().abs();
    let sym = v.symmetrized().det().expect("square").abs();
    assert_eq!(d, sym, "two determinant routes disagree");
    d
}

/// Integers `(b, c)` with `p` unit equivalent to `(b - c t)(b - c t^-1)`,
/// if any exist. The search runs over signed divisors of the extreme
/// coefficients; genus-one inputs have degree span at most 2 and anything
/// wider returns `None`.
pub fn symmetric_linear_factorization(p: &LaurentPoly) -> Result<Option<(Int, Int)>> {
    let target = canonicalize(p)?;
    if target.degree_span() > 2 {
        return Ok(None);
    }
    let lead = target.coeffs().last().expect("nonzero").abs();
    let constant = target.coeffs().first().expect("nonzero").abs();
    let mut b_range = signed_divisors(&constant);
    b_range.push(Int::zero());
    let mut c_range = vec![Int::zero()];
    c_range.extend(signed_divisors(&lead));
    for b in &b_range {
        for c in &c_range {
            if b.is_zero() && c.is_zero() {
                continue;
            }
            // (b - c t)(b - c t^-1) = -bc t^-1 + (b^2 + c^2) - bc t
            let product = LaurentPoly::from_coeffs(
                -1,
                vec![-(b * c), b * b + c * c, -(b * c)],
            );
            if canonicalize(&product)? == target {
                return Ok(Some((b.clone(), c.clone())));
            }
        }
    }
    Ok(None)
}

/// Signed divisors of `|n|`, ordered by absolute value, positive first.
/// Empty for `n = 0`.
fn signed_divisors(n: &Int) -> Vec<Int> {
    let n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = Int::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
        .into_iter()
        .flat_map(|d| [d.clone(), -d])
        .collect()
}
