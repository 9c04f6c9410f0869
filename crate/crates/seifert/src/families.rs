//! Seifert matrices for the standard genus-one families (three-strand
//! pretzels with odd parameters and twisted Whitehead doubles), the
//! metabolizer normal form `((a,b),(b+1,0))` of an algebraically slice
//! 2x2 Seifert matrix, and the text grammar for knot specifications.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::forms::isotropic_vector;
use crate::matrix::{congruent_transform, Int, IntMatrix, SeifertMatrix};

/// Clasp sign of a twisted Whitehead double.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Clasp {
    Positive,
    Negative,
}

impl fmt::Display for Clasp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clasp::Positive => write!(f, "+"),
            Clasp::Negative => write!(f, "-"),
        }
    }
}

/// A knot given by Seifert data: an explicit matrix, a family, or a name
/// from the embedded genus-one catalog.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum KnotSpec {
    Matrix(SeifertMatrix),
    Pretzel { p: Int, q: Int, r: Int },
    Whitehead { clasp: Clasp, twists: Int },
    Catalog(String),
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotSpec::Matrix(m) => {
                write!(f, "matrix ")?;
                let v = m.matrix();
                for i in 0..v.rows() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    for j in 0..v.cols() {
                        if j > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{}", v[(i, j)])?;
                    }
                }
                Ok(())
            }
            KnotSpec::Pretzel { p, q, r } => write!(f, "pretzel {p},{q},{r}"),
            KnotSpec::Whitehead { clasp, twists } => write!(f, "whitehead {clasp} {twists}"),
            KnotSpec::Catalog(name) => write!(f, "catalog {name}"),
        }
    }
}

fn parse_int(tok: &str) -> Result<Int> {
    tok.trim()
        .parse::<Int>()
        .map_err(|_| Error::Parse(alloc::format!("expected an integer, got {tok:?}")))
}

impl FromStr for KnotSpec {
    type Err = Error;

    /// Grammar: `matrix a,b;c,d` | `pretzel p,q,r` | `whitehead +|- n` |
    /// `catalog NAME`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, rest) = match s.split_once(char::is_whitespace) {
            Some((h, r)) => (h, r.trim()),
            None => (s, ""),
        };
        match head {
            "matrix" => {
                if rest.is_empty() {
                    return Err(Error::Parse("matrix needs entries".to_string()));
                }
                let rows: Vec<Vec<Int>> = rest
                    .split(';')
                    .map(|row| row.split(',').map(parse_int).collect::<Result<_>>())
                    .collect::<Result<_>>()?;
                let n = rows.len();
                if rows.iter().any(|r| r.len() != n) {
                    return Err(Error::Parse("matrix must be square".to_string()));
                }
                let entries: Vec<Int> = rows.into_iter().flatten().collect();
                let m = IntMatrix::new(n, n, entries).map_err(|e| Error::Parse(e.to_string()))?;
                let sm = SeifertMatrix::new(m).map_err(|_| {
                    Error::Parse("matrix is not a Seifert matrix: det(V - V^T) != 1".to_string())
                })?;
                Ok(KnotSpec::Matrix(sm))
            }
            "pretzel" => {
                let parts: Vec<Int> =
                    rest.split(',').map(parse_int).collect::<Result<_>>()?;
                let [p, q, r] = <[Int; 3]>::try_from(parts).map_err(|_| {
                    Error::Parse("pretzel takes exactly three parameters".to_string())
                })?;
                Ok(KnotSpec::Pretzel { p, q, r })
            }
            "whitehead" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                let (clasp, n_tok) = match toks.as_slice() {
                    ["+", n] => (Clasp::Positive, *n),
                    ["-", n] => (Clasp::Negative, *n),
                    [one] if one.starts_with('+') => (Clasp::Positive, &one[1..]),
                    [one] if one.starts_with('-') => (Clasp::Negative, &one[1..]),
                    _ => {
                        return Err(Error::Parse(
                            "whitehead takes a clasp sign and a twist count".to_string(),
                        ))
                    }
                };
                Ok(KnotSpec::Whitehead {
                    clasp,
                    twists: parse_int(n_tok)?,
                })
            }
            "catalog" => {
                if rest.is_empty() || rest.split_whitespace().count() != 1 {
                    return Err(Error::Parse("catalog takes a single name".to_string()));
                }
                Ok(KnotSpec::Catalog(rest.to_string()))
            }
            other => Err(Error::Parse(alloc::format!(
                "unknown specification kind {other:?}"
            ))),
        }
    }
}

/// Seifert matrix `((p+q, q+1), (q-1, q+r)) / 2` of the pretzel knot
/// `P(p,q,r)`; odd parameters make every entry integral.
pub fn pretzel_seifert(p: &Int, q: &Int, r: &Int) -> Result<SeifertMatrix> {
    if p.is_even() || q.is_even() || r.is_even() {
        return Err(Error::EvenPretzelParameter);
    }
    let two = Int::from(2);
    let entries = alloc::vec![
        (p + q) / &two,
        (q + 1) / &two,
        (q - 1) / &two,
        (q + r) / &two,
    ];
    let m = IntMatrix::new(2, 2, entries).expect("shape");
    SeifertMatrix::new(m)
}

/// `|pq + qr + pr|`, the determinant of `P(p,q,r)` for odd parameters.
pub fn pretzel_determinant(p: &Int, q: &Int, r: &Int) -> Result<Int> {
    if p.is_even() || q.is_even() || r.is_even() {
        return Err(Error::EvenPretzelParameter);
    }
    Ok((p * q + q * r + p * r).abs())
}

/// Seifert matrix of the `n`-twisted Whitehead double: `((-1,0),(-1,n))`
/// for a positive clasp, `((1,0),(1,n))` (the mirrored form) for a
/// negative clasp. The matrix depends only on the clasp and `n`, not on
/// the companion knot.
pub fn whitehead_seifert(clasp: Clasp, n: &Int) -> SeifertMatrix {
    let s = match clasp {
        Clasp::Positive => Int::from(-1),
        Clasp::Negative => Int::one(),
    };
    let m = IntMatrix::new(2, 2, alloc::vec![s.clone(), Int::zero(), s, n.clone()])
        .expect("shape");
    SeifertMatrix::new(m).expect("det(V - V^T) = 1 holds for both clasps")
}

/// A basis change putting a 2x2 Seifert matrix into the shape
/// `((a, b), (b+1, 0))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MetabolizerForm {
    pub a: Int,
    pub b: Int,
    pub basis_change: IntMatrix,
}

impl MetabolizerForm {
    pub fn matrix(&self) -> SeifertMatrix {
        crate::sequiv::metabolizer_matrix(&self.a, &self.b)
    }
}

/// Complete a primitive vector `w` to a basis `(u, w)` of determinant 1.
fn complete_basis(w: &(Int, Int)) -> (Int, Int) {
    if w.0.is_zero() {
        // w = (0, 1) after normalization
        return (Int::one(), Int::zero());
    }
    let e = w.0.extended_gcd(&w.1);
    debug_assert!(e.gcd.is_one());
    // u_x w_y - u_y w_x = 1 with u = (beta, -alpha)
    (e.y, -e.x)
}

/// Metabolizer normal form of a 2x2 Seifert matrix, when the matrix is
/// algebraically slice (its form has an isotropic vector); `None`
/// otherwise.
///
/// The isotropic vector is completed to a basis with the null vector
/// second. If the resulting `((a, b), (c, 0))` has `c = b - 1` instead of
/// `c = b + 1`, two orientation fixes compete: negating the null basis
/// vector (giving `(a, -b)`) and, when it exists over the integers, a
/// congruence realizing the transpose (giving `(a, b-1)`). The candidate
/// minimizing `(|b|, |a|)` lexicographically wins.
pub fn metabolizer_form(v: &SeifertMatrix) -> Option<MetabolizerForm> {
    assert_eq!(v.size(), 2, "metabolizer form is defined for 2x2 matrices");
    let m = v.matrix();
    let w = isotropic_vector(m)?;
    let u = complete_basis(&w);

    let bil = |r: &(Int, Int), s: &(Int, Int)| -> Int {
        &r.0 * (&m[(0, 0)] * &s.0 + &m[(0, 1)] * &s.1)
            + &r.1 * (&m[(1, 0)] * &s.0 + &m[(1, 1)] * &s.1)
    };
    let a1 = bil(&u, &u);
    let b1 = bil(&u, &w);
    let c1 = bil(&w, &u);
    debug_assert!((&c1 - &b1).abs().is_one());

    let p0 = IntMatrix::new(
        2,
        2,
        alloc::vec![u.0.clone(), u.1.clone(), w.0.clone(), w.1.clone()],
    )
    .expect("shape");

    let chosen = if c1 == &b1 + 1 {
        (a1, b1, p0)
    } else {
        // candidate 1: negate the null vector
        let neg = IntMatrix::from_i64(2, 2, &[1, 0, 0, -1]);
        let cand1 = (a1.clone(), -&b1, neg.mul(&p0));
        // candidate 2: congruence realizing the transpose, when integral
        let cand2 = transpose_fix(&a1, &b1).map(|t| (a1, &b1 - Int::one(), t.mul(&p0)));
        match cand2 {
            Some(c2) if (c2.1.abs(), c2.0.abs()) < (cand1.1.abs(), cand1.0.abs()) => c2,
            _ => cand1,
        }
    };

    let (a, b, basis_change) = chosen;
    let target = crate::sequiv::metabolizer_matrix(&a, &b);
    assert_eq!(
        congruent_transform(&basis_change, m).expect("basis change is unimodular"),
        *target.matrix(),
        "basis change must witness the claimed form"
    );
    Some(MetabolizerForm { a, b, basis_change })
}

/// For `M = ((A, B), (B-1, 0))`, a determinant `-1` matrix `T` with
/// `T M T^T = M^T`, when one exists over the integers. Writing
/// `g = gcd(A, 2B-1)`, `A = g A1`, `2B-1 = g B1`, the matrix
/// `T = ((A1, (1-A1^2)/B1), (B1, -A1))` works exactly when
/// `B1` divides `1 - A1^2`.
fn transpose_fix(a: &Int, b: &Int) -> Option<IntMatrix> {
    let two_b_minus_1 = Int::from(2) * b - 1;
    let g = a.gcd(&two_b_minus_1);
    let a1 = a / &g;
    let b1 = &two_b_minus_1 / &g;
    let numer = Int::one() - &a1 * &a1;
    let (y, rem) = numer.div_rem(&b1);
    if !rem.is_zero() {
        return None;
    }
    Some(
        IntMatrix::new(2, 2, alloc::vec![a1.clone(), y, b1, -a1])
            .expect("shape"),
    )
}
