//! Smith normal form with transforming matrices.
//!
//! `smith_normal_form(m)` returns `(s, u, w)` with `u * m * w = s`,
//! `u` and `w` unimodular, and `s` diagonal with nonnegative entries
//! forming a divisibility chain. Pivots are always chosen with minimal
//! absolute value, which keeps intermediate entries small at this scale
//! and makes the output deterministic.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::matrix::{Int, IntMatrix};

/// Diagonalization `u * input * w = s` by unimodular `u`, `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub w: IntMatrix,
}

impl SnfResult {
    /// Diagonal of `s`, the invariant factors (units and zeros included).
    pub fn diagonal(&self) -> Vec<Int> {
        let k = self.s.rows().min(self.s.cols());
        (0..k).map(|i| self.s[(i, i)].clone()).collect()
    }
}

struct Worker {
    s: IntMatrix,
    u: IntMatrix,
    w: IntMatrix,
}

impl Worker {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.s.cols() {
            let tmp = self.s[(a, j)].clone();
            self.s[(a, j)] = self.s[(b, j)].clone();
            self.s[(b, j)] = tmp;
        }
        for j in 0..self.u.cols() {
            let tmp = self.u[(a, j)].clone();
            self.u[(a, j)] = self.u[(b, j)].clone();
            self.u[(b, j)] = tmp;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.s.rows() {
            let tmp = self.s[(i, a)].clone();
            self.s[(i, a)] = self.s[(i, b)].clone();
            self.s[(i, b)] = tmp;
        }
        for i in 0..self.w.rows() {
            let tmp = self.w[(i, a)].clone();
            self.w[(i, a)] = self.w[(i, b)].clone();
            self.w[(i, b)] = tmp;
        }
    }

    /// row[target] += c * row[src]
    fn add_row(&mut self, target: usize, src: usize, c: &Int) {
        for j in 0..self.s.cols() {
            let delta = c * &self.s[(src, j)];
            self.s[(target, j)] += delta;
        }
        for j in 0..self.u.cols() {
            let delta = c * &self.u[(src, j)];
            self.u[(target, j)] += delta;
        }
    }

    /// col[target] += c * col[src]
    fn add_col(&mut self, target: usize, src: usize, c: &Int) {
        for i in 0..self.s.rows() {
            let delta = c * &self.s[(i, src)];
            self.s[(i, target)] += delta;
        }
        for i in 0..self.w.rows() {
            let delta = c * &self.w[(i, src)];
            self.w[(i, target)] += delta;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.s.cols() {
            let v = -self.s[(r, j)].clone();
            self.s[(r, j)] = v;
        }
        for j in 0..self.u.cols() {
            let v = -self.u[(r, j)].clone();
            self.u[(r, j)] = v;
        }
    }

    /// Nonzero entry of minimal absolute value in the block at (k,k),
    /// first in row-major scan among ties.
    fn min_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, Int)> = None;
        for i in k..self.s.rows() {
            for j in k..self.s.cols() {
                let v = &self.s[(i, j)];
                if v.is_zero() {
                    continue;
                }
                let a = v.abs();
                match &best {
                    Some((_, _, cur)) if *cur <= a => {}
                    _ => best = Some((i, j, a)),
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut wk = Worker {
        s: m.clone(),
        u: IntMatrix::identity(m.rows()),
        w: IntMatrix::identity(m.cols()),
    };
    let steps = m.rows().min(m.cols());
    'outer: for k in 0..steps {
        loop {
            let Some((pi, pj)) = wk.min_pivot(k) else {
                break 'outer; // remaining block is zero
            };
            wk.swap_rows(k, pi);
            wk.swap_cols(k, pj);

            let pivot = wk.s[(k, k)].clone();
            for i in k + 1..wk.s.rows() {
                if !wk.s[(i, k)].is_zero() {
                    let q = -(&wk.s[(i, k)] / &pivot);
                    wk.add_row(i, k, &q);
                }
            }
            for j in k + 1..wk.s.cols() {
                if !wk.s[(k, j)].is_zero() {
                    let q = -(&wk.s[(k, j)] / &pivot);
                    wk.add_col(j, k, &q);
                }
            }

            let col_clear = (k + 1..wk.s.rows()).all(|i| wk.s[(i, k)].is_zero());
            let row_clear = (k + 1..wk.s.cols()).all(|j| wk.s[(k, j)].is_zero());
            if !col_clear || !row_clear {
                continue; // residues became new, smaller pivot candidates
            }

            // divisibility: drag a non-divisible entry into row k and retry
            let bad = (k + 1..wk.s.rows())
                .flat_map(|i| (k + 1..wk.s.cols()).map(move |j| (i, j)))
                .find(|&(i, j)| !(&wk.s[(i, j)] % &pivot).is_zero());
            match bad {
                Some((i, _)) => {
                    let one = Int::from(1);
                    wk.add_row(k, i, &one);
                }
                None => break,
            }
        }
        if wk.s[(k, k)].is_negative() {
            wk.negate_row(k);
        }
    }
    SnfResult {
        s: wk.s,
        u: wk.u,
        w: wk.w,
    }
}
