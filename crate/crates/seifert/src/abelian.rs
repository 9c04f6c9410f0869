//! Finitely generated abelian groups in invariant-factor form, and the
//! first homology of the double branched cover presented by `V + V^T`.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::{Int, IntMatrix, SeifertMatrix};
use crate::snf::smith_normal_form;

/// `Z_{d1} (+) ... (+) Z_{dk} (+) Z^r` with `1 < d1 | d2 | ... | dk`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianGroup {
    torsion: Vec<Int>,
    free_rank: usize,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            torsion: Vec::new(),
            free_rank: 0,
        }
    }

    /// Build from a divisibility chain; units are dropped, entries must be
    /// nonnegative with each nonzero entry dividing the next.
    pub fn from_invariant_factors(factors: Vec<Int>, free_rank: usize) -> Self {
        let torsion: Vec<Int> = factors
            .into_iter()
            .filter(|d| !d.is_one() && !d.is_zero())
            .collect();
        for d in &torsion {
            assert!(d > &Int::one(), "torsion entries must exceed 1");
        }
        for pair in torsion.windows(2) {
            assert!(
                (&pair[1] % &pair[0]).is_zero(),
                "invariant factors must form a divisibility chain"
            );
        }
        AbelianGroup { torsion, free_rank }
    }

    pub fn torsion(&self) -> &[Int] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// Finite cyclic: free rank 0 and at most one invariant factor.
    pub fn is_finite_cyclic(&self) -> bool {
        self.free_rank == 0 && self.torsion.len() <= 1
    }

    /// Order of the group when finite.
    pub fn order(&self) -> Option<Int> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianGroup {
    /// Renders as `Z_3 ⊕ Z_9 ⊕ Z^2`; the trivial group is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in &self.torsion {
            if !first {
                write!(f, " ⊕ ")?;
            }
            write!(f, "Z_{d}")?;
            first = false;
        }
        if self.free_rank > 0 {
            if !first {
                write!(f, " ⊕ ")?;
            }
            if self.free_rank == 1 {
                write!(f, "Z")?;
            } else {
                write!(f, "Z^{}", self.free_rank)?;
            }
        }
        Ok(())
    }
}

/// Group presented by an integer matrix, with relations as rows over
/// column generators. Invariant factors come from the Smith normal form;
/// units are dropped and zero diagonal entries count toward the free rank.
pub fn group_from_presentation(m: &IntMatrix) -> AbelianGroup {
    let diag = smith_normal_form(m).diagonal();
    let killed = diag.iter().filter(|d| !d.is_zero()).count();
    AbelianGroup::from_invariant_factors(diag, m.cols() - killed)
}

/// First homology of the double cover of S^3 branched along the knot,
/// presented by `V + V^T`.
pub fn h1_double_cover(v: &SeifertMatrix) -> AbelianGroup {
    group_from_presentation(&v.symmetrized())
}

/// Closed form for the group presented by `((2x, 2y+1), (2y+1, 0))`:
/// trivial when `y` is `0` or `-1`, otherwise `Z_d (+) Z_{(2y+1)^2 / d}`
/// with `d = gcd(2x, |2y+1|)`.
pub fn h1_metabolizer_closed_form(x: &Int, y: &Int) -> AbelianGroup {
    if y.is_zero() || *y == Int::from(-1) {
        return AbelianGroup::trivial();
    }
    let two_y1: Int = (Int::from(2) * y + Int::from(1)).abs();
    let d = (Int::from(2) * x).gcd(&two_y1);
    let co = &two_y1 * &two_y1 / &d;
    AbelianGroup::from_invariant_factors(alloc::vec![d, co], 0)
}
