//! Integer quadratic-form utilities: perfect squares, isotropic vectors of
//! 2x2 bilinear forms, and exact signatures of small symmetric matrices.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Int, IntMatrix};

/// `Some(r)` with `r*r = n` when `n` is a perfect square, else `None`.
pub fn is_perfect_square(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Reduce to a primitive vector whose first nonzero coordinate is positive.
fn primitive(x: Int, y: Int) -> (Int, Int) {
    debug_assert!(!(x.is_zero() && y.is_zero()));
    let g = x.gcd(&y);
    let (mut x, mut y) = (x / &g, y / &g);
    let lead_negative = if x.is_zero() {
        y.is_negative()
    } else {
        x.is_negative()
    };
    if lead_negative {
        x = -x;
        y = -y;
    }
    (x, y)
}

/// Primitive `(x, y) != (0, 0)` with `(x,y) v (x,y)^T = 0` for a 2x2 `v`,
/// if the quadratic form `a x^2 + (b+c) xy + d y^2` represents zero
/// nontrivially; `None` otherwise.
///
/// Such a vector exists iff the discriminant `(b+c)^2 - 4ad` is a perfect
/// square. Output is deterministic: `(0,1)` when `d = 0`, otherwise the
/// `+sqrt` root `(2d, -(b+c) + sqrt(disc))` made primitive.
pub fn isotropic_vector(v: &IntMatrix) -> Option<(Int, Int)> {
    assert!(
        v.is_square() && v.rows() == 2,
        "isotropic_vector is defined for 2x2 matrices"
    );
    let a = &v[(0, 0)];
    let b_plus_c = &v[(0, 1)] + &v[(1, 0)];
    let d = &v[(1, 1)];
    if d.is_zero() {
        return Some((Int::zero(), Int::from(1)));
    }
    let disc = &b_plus_c * &b_plus_c - Int::from(4) * a * d;
    let s = is_perfect_square(&disc)?;
    Some(primitive(Int::from(2) * d, -b_plus_c + s))
}

/// Value of the self-pairing `x v x^T`.
pub fn form_value(v: &IntMatrix, x: &Int, y: &Int) -> Int {
    x * (&v[(0, 0)] * x + &v[(0, 1)] * y) + y * (&v[(1, 0)] * x + &v[(1, 1)] * y)
}

/// Signature (positives minus negatives of the spectrum) of a symmetric
/// integer matrix of size at most 4, computed exactly by pivoted
/// congruence diagonalization over the rationals, carried out in integers.
pub fn signature(m: &IntMatrix) -> Result<i64> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() > 4 {
        return Err(Error::SignatureTooLarge(m.rows()));
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = m.rows();
    let work: Vec<Vec<Int>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    Ok(sig_rec(work))
}

fn sig_rec(mut m: Vec<Vec<Int>>) -> i64 {
    let n = m.len();
    if n == 0 {
        return 0;
    }
    if let Some(i) = (0..n).find(|&i| !m[i][i].is_zero()) {
        // symmetric swap of index i with 0
        m.swap(0, i);
        for row in m.iter_mut() {
            row.swap(0, i);
        }
        let p = m[0][0].clone();
        let sp: i64 = if p.is_positive() { 1 } else { -1 };
        // complement d[i][j] = p*m[i][j] - m[i][0]*m[0][j]; then
        // sig(m) = sign(p) + sign(p) * sig(d)
        let d: Vec<Vec<Int>> = (1..n)
            .map(|i| {
                (1..n)
                    .map(|j| &p * &m[i][j] - &m[i][0] * &m[0][j])
                    .collect()
            })
            .collect();
        sp + sp * sig_rec(d)
    } else {
        // zero diagonal: either the zero matrix or a hyperbolic pair,
        // which contributes 0 to the signature
        let mut off = None;
        'scan: for i in 0..n {
            for j in i + 1..n {
                if !m[i][j].is_zero() {
                    off = Some((i, j));
                    break 'scan;
                }
            }
        }
        let Some((i, j)) = off else {
            return 0;
        };
        // symmetric moves (i,j) -> (0,1); i < j, so j stays put under the
        // first swap
        m.swap(0, i);
        for row in m.iter_mut() {
            row.swap(0, i);
        }
        m.swap(1, j);
        for row in m.iter_mut() {
            row.swap(1, j);
        }
        let x = m[0][1].clone();
        let sx: i64 = if x.is_positive() { 1 } else { -1 };
        // complement over the hyperbolic block ((0,x),(x,0)):
        // d[i][j] = x*m[i][j] - m[i][0]*m[j][1] - m[i][1]*m[j][0]
        let d: Vec<Vec<Int>> = (2..n)
            .map(|i| {
                (2..n)
                    .map(|j| &x * &m[i][j] - &m[i][0] * &m[j][1] - &m[i][1] * &m[j][0])
                    .collect()
            })
            .collect();
        sx * sig_rec(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn psq(n: i64) -> Option<i64> {
        is_perfect_square(&Int::from(n)).map(|r| i64::try_from(&r).unwrap())
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(psq(9), Some(3));
        assert_eq!(psq(15), None);
        assert_eq!(psq(0), Some(0));
        assert_eq!(psq(-4), None);
    }

    #[test]
    fn perfect_square_vs_exhaustive() {
        for n in 0i64..=10_000 {
            let expected = (0..=n).find(|r| r * r == n);
            assert_eq!(psq(n), expected, "mismatch at {n}");
        }
    }

    fn iso(entries: &[i64; 4]) -> Option<(i64, i64)> {
        isotropic_vector(&IntMatrix::from_i64(2, 2, &entries[..]))
            .map(|(x, y)| (i64::try_from(&x).unwrap(), i64::try_from(&y).unwrap()))
    }

    #[test]
    fn isotropic_examples() {
        assert_eq!(iso(&[3, 2, 1, 0]), Some((0, 1)));
        // trefoil: discriminant 1 - 4 = -3
        assert_eq!(iso(&[-1, 1, 0, -1]), None);
        // x^2 + 3xy - 2y^2 has discriminant 17, not a square
        assert_eq!(iso(&[1, 2, 1, -2]), None);
    }

    /// Exhaustive oracle over primitive pairs with |x|,|y| <= bound.
    fn search_oracle(v: &IntMatrix, bound: i64) -> bool {
        let a = i64::try_from(&v[(0, 0)]).unwrap();
        let bc = i64::try_from(&v[(0, 1)]).unwrap() + i64::try_from(&v[(1, 0)]).unwrap();
        let d = i64::try_from(&v[(1, 1)]).unwrap();
        for x in -bound..=bound {
            for y in -bound..=bound {
                if x == 0 && y == 0 {
                    continue;
                }
                if a * x * x + bc * x * y + d * y * y == 0 {
                    return true;
                }
            }
        }
        false
    }

    fn spec_bound(entries: &[i64; 4]) -> i64 {
        let max = entries.iter().map(|e| e.abs()).max().unwrap();
        4 * (1 + max) * (1 + max)
    }

    fn check_against_oracle(entries: &[i64; 4]) {
        let v = IntMatrix::from_i64(2, 2, &entries[..]);
        match isotropic_vector(&v) {
            Some((x, y)) => {
                assert!(form_value(&v, &x, &y).is_zero(), "bad witness for {v}");
                assert_eq!(x.gcd(&y), Int::from(1), "witness not primitive for {v}");
            }
            None => {
                assert!(
                    !search_oracle(&v, spec_bound(entries)),
                    "search found a zero that the closed form missed for {v}"
                );
            }
        }
    }

    #[test]
    fn isotropic_matches_search_small_grid() {
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                for c in -4i64..=4 {
                    for d in -4i64..=4 {
                        check_against_oracle(&[a, b, c, d]);
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn isotropic_matches_search_sampled(
            a in -6i64..=6, b in -6i64..=6, c in -6i64..=6, d in -6i64..=6,
        ) {
            check_against_oracle(&[a, b, c, d]);
        }
    }

    #[test]
    fn signature_examples() {
        let sig = |e: &[i64]| signature(&IntMatrix::from_i64(2, 2, e)).unwrap();
        assert_eq!(sig(&[-2, -1, -1, -2]), -2);
        assert_eq!(sig(&[1, 0, 0, 1]), 2);
        assert_eq!(sig(&[0, 1, 1, 0]), 0);
    }

    #[test]
    fn signature_errors() {
        let m = IntMatrix::from_i64(2, 2, &[0, 1, 2, 0]);
        assert_eq!(signature(&m), Err(Error::NotSymmetric));
        let m = IntMatrix::zero(5, 5);
        assert_eq!(signature(&m), Err(Error::SignatureTooLarge(5)));
    }

    /// 2x2 oracle: classify by determinant and trace.
    fn sig2_oracle(a: i64, b: i64, d: i64) -> i64 {
        let det = a * d - b * b;
        let tr = a + d;
        if det > 0 {
            if tr > 0 {
                2
            } else {
                -2
            }
        } else if det < 0 {
            0
        } else if tr > 0 {
            1
        } else if tr < 0 {
            -1
        } else {
            0
        }
    }

    proptest! {
        #[test]
        fn signature_matches_2x2_oracle(a in -9i64..=9, b in -9i64..=9, d in -9i64..=9) {
            let m = IntMatrix::from_i64(2, 2, &[a, b, b, d]);
            prop_assert_eq!(signature(&m).unwrap(), sig2_oracle(a, b, d));
        }

        #[test]
        fn signature_invariant_under_congruence(
            diag in proptest::collection::vec(-5i64..=5, 4),
            ops in proptest::collection::vec((0u8..3, 0usize..4, 0usize..4, -2i64..=2), 0..4),
        ) {
            let mut m = IntMatrix::zero(4, 4);
            let mut expected = 0i64;
            for (i, &v) in diag.iter().enumerate() {
                m[(i, i)] = Int::from(v);
                expected += v.signum();
            }
            let p = crate::testutil::unimodular(4, ops);
            let scrambled = crate::matrix::congruent_transform(&p, &m).unwrap();
            prop_assert_eq!(signature(&scrambled).unwrap(), expected);
        }
    }
}
