//! S-equivalence of Seifert matrices: the three elementary moves
//! (unimodular congruence, column expansion, row expansion) and their
//! inverses, checked certificates of move sequences, a complete
//! congruence classifier for 2x2 metabolizer forms, a brute-force
//! congruence search used as its oracle, and explicit certificates
//! for the `a -> a*b^2` chain and the shifted pairs built from it.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Int, IntMatrix, SeifertMatrix};

/// One elementary move on a Seifert matrix.
///
/// Expansions grow an `n x n` matrix to `(n+2) x (n+2)`: a column
/// expansion appends the rows `(u_1 .. u_n, 0, 0)` and `(0 .. 0, 1, 0)`
/// below `V` padded by two zero columns; a row expansion is the
/// transposed picture. Contractions are the inverses and require the
/// exact block shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SMove {
    Congruence(IntMatrix),
    ColumnExpansion(Vec<Int>),
    RowExpansion(Vec<Int>),
    ColumnContraction,
    RowContraction,
}

impl SMove {
    pub fn kind(&self) -> &'static str {
        match self {
            SMove::Congruence(_) => "congruence",
            SMove::ColumnExpansion(_) => "column_expansion",
            SMove::RowExpansion(_) => "row_expansion",
            SMove::ColumnContraction => "column_contraction",
            SMove::RowContraction => "row_contraction",
        }
    }
}

fn fmt_int_list(f: &mut fmt::Formatter<'_>, u: &[Int]) -> fmt::Result {
    write!(f, "[")?;
    for (i, x) in u.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "]")
}

impl fmt::Display for SMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SMove::Congruence(p) => write!(f, "kind={} params={}", self.kind(), p),
            SMove::ColumnExpansion(u) | SMove::RowExpansion(u) => {
                write!(f, "kind={} params=", self.kind())?;
                fmt_int_list(f, u)
            }
            SMove::ColumnContraction | SMove::RowContraction => {
                write!(f, "kind={} params=[]", self.kind())
            }
        }
    }
}

/// Apply one move; the result is again a Seifert matrix.
pub fn apply_move(m: &SeifertMatrix, mv: &SMove) -> Result<SeifertMatrix> {
    let n = m.size();
    let v = m.matrix();
    match mv {
        SMove::Congruence(p) => {
            if !p.is_square() || p.rows() != n {
                return Err(Error::InvalidMove("congruence matrix has the wrong size"));
            }
            if !p.is_unimodular() {
                return Err(Error::InvalidMove("congruence matrix is not unimodular"));
            }
            m.transform(p)
        }
        SMove::ColumnExpansion(u) => {
            if u.len() != n {
                return Err(Error::InvalidMove("expansion vector length must match size"));
            }
            let mut w = IntMatrix::zero(n + 2, n + 2);
            for i in 0..n {
                for j in 0..n {
                    w[(i, j)] = v[(i, j)].clone();
                }
            }
            for (j, uj) in u.iter().enumerate() {
                w[(n, j)] = uj.clone();
            }
            w[(n + 1, n)] = Int::one();
            SeifertMatrix::new(w)
        }
        SMove::RowExpansion(u) => {
            if u.len() != n {
                return Err(Error::InvalidMove("expansion vector length must match size"));
            }
            let mut w = IntMatrix::zero(n + 2, n + 2);
            for i in 0..n {
                for j in 0..n {
                    w[(i, j)] = v[(i, j)].clone();
                }
            }
            for (i, ui) in u.iter().enumerate() {
                w[(i, n)] = ui.clone();
            }
            w[(n, n + 1)] = Int::one();
            SeifertMatrix::new(w)
        }
        SMove::ColumnContraction => {
            if n < 2 {
                return Err(Error::InvalidMove("matrix too small to contract"));
            }
            let k = n - 2;
            let ok = (0..k).all(|i| v[(i, k)].is_zero() && v[(i, k + 1)].is_zero())
                && v[(k, k)].is_zero()
                && v[(k, k + 1)].is_zero()
                && (0..k).all(|j| v[(k + 1, j)].is_zero())
                && v[(k + 1, k)].is_one()
                && v[(k + 1, k + 1)].is_zero();
            if !ok {
                return Err(Error::InvalidMove(
                    "matrix is not in column-expansion block form",
                ));
            }
            let mut w = IntMatrix::zero(k, k);
            for i in 0..k {
                for j in 0..k {
                    w[(i, j)] = v[(i, j)].clone();
                }
            }
            SeifertMatrix::new(w)
        }
        SMove::RowContraction => {
            if n < 2 {
                return Err(Error::InvalidMove("matrix too small to contract"));
            }
            let k = n - 2;
            let ok = (0..k).all(|i| v[(i, k + 1)].is_zero())
                && (0..k).all(|j| v[(k, j)].is_zero())
                && v[(k, k)].is_zero()
                && v[(k, k + 1)].is_one()
                && (0..=k + 1).all(|j| v[(k + 1, j)].is_zero());
            if !ok {
                return Err(Error::InvalidMove(
                    "matrix is not in row-expansion block form",
                ));
            }
            let mut w = IntMatrix::zero(k, k);
            for i in 0..k {
                for j in 0..k {
                    w[(i, j)] = v[(i, j)].clone();
                }
            }
            SeifertMatrix::new(w)
        }
    }
}

/// One verified link of a certificate chain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CertStep {
    pub before: SeifertMatrix,
    pub mv: SMove,
    pub after: SeifertMatrix,
}

/// A sequence of S-moves with every intermediate matrix recorded.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SEquivCertificate {
    steps: Vec<CertStep>,
}

impl SEquivCertificate {
    pub fn empty() -> Self {
        SEquivCertificate { steps: Vec::new() }
    }

    /// Build by applying `moves` in order starting from `start`.
    pub fn from_moves(start: &SeifertMatrix, moves: &[SMove]) -> Result<Self> {
        let mut steps = Vec::with_capacity(moves.len());
        let mut current = start.clone();
        for mv in moves {
            let after = apply_move(&current, mv)?;
            steps.push(CertStep {
                before: current,
                mv: mv.clone(),
                after: after.clone(),
            });
            current = after;
        }
        Ok(SEquivCertificate { steps })
    }

    /// Raw constructor for externally assembled step lists.
    pub fn from_steps(steps: Vec<CertStep>) -> Self {
        SEquivCertificate { steps }
    }

    pub fn steps(&self) -> &[CertStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn initial(&self) -> Option<&SeifertMatrix> {
        self.steps.first().map(|s| &s.before)
    }

    pub fn terminal(&self) -> Option<&SeifertMatrix> {
        self.steps.last().map(|s| &s.after)
    }

    /// Concatenate a further move onto the end of the chain.
    pub fn extend(&mut self, mv: SMove) -> Result<()> {
        let before = match self.terminal() {
            Some(t) => t.clone(),
            None => return Err(Error::InvalidMove("cannot extend an empty certificate")),
        };
        let after = apply_move(&before, &mv)?;
        self.steps.push(CertStep { before, mv, after });
        Ok(())
    }
}

impl fmt::Display for SEquivCertificate {
    /// Line-oriented serialization, one step per line:
    /// `MOVE kind=... params=... from=[...] to=[...]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(
                f,
                "MOVE {} from={} to={}",
                step.mv, step.before, step.after
            )?;
        }
        Ok(())
    }
}

/// Why certificate verification failed, and at which step.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CertificateFailure {
    pub step: usize,
    pub reason: String,
}

impl fmt::Display for CertificateFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "certificate invalid at step {}: {}", self.step, self.reason)
    }
}

/// Check that consecutive steps chain together and that every step's
/// `after` really is `apply_move(before, mv)`. The empty certificate is
/// valid. Matrices are Seifert matrices by construction of the type.
pub fn verify_certificate(c: &SEquivCertificate) -> core::result::Result<(), CertificateFailure> {
    for (i, step) in c.steps().iter().enumerate() {
        if i > 0 && c.steps()[i - 1].after != step.before {
            return Err(CertificateFailure {
                step: i,
                reason: String::from("chain is disconnected"),
            });
        }
        match apply_move(&step.before, &step.mv) {
            Ok(expected) if expected == step.after => {}
            Ok(_) => {
                return Err(CertificateFailure {
                    step: i,
                    reason: String::from("recorded result does not match the move"),
                })
            }
            Err(e) => {
                return Err(CertificateFailure {
                    step: i,
                    reason: alloc::format!("move not applicable: {e}"),
                })
            }
        }
    }
    Ok(())
}

/// Decide integral congruence of `((a,b),(b+1,0))` and `((c,b),(b+1,0))`.
///
/// The two are congruent iff `a + n(2b+1) = c` for some integer `n`;
/// returns that `n`. For `b` in `{0, -1}` the modulus is a unit and the
/// matrices are always congruent.
pub fn congruence_classifier_2x2(a: &Int, b: &Int, c: &Int) -> Option<Int> {
    let modulus = Int::from(2) * b + 1;
    let (q, r) = (c - a).div_rem(&modulus);
    if r.is_zero() {
        Some(q)
    } else {
        None
    }
}

/// Shear witness for the classifier: `((1,n),(0,1)) V ((1,n),(0,1))^T`
/// sends `((a,b),(b+1,0))` to `((a + n(2b+1), b),(b+1,0))`.
pub fn shift_witness(n: &Int) -> IntMatrix {
    let mut p = IntMatrix::identity(2);
    p[(0, 1)] = n.clone();
    p
}

/// Exhaustive search for a unimodular `p` with `p v p^T = w`, entries of
/// `p` bounded by `bound` in absolute value.
///
/// Entries are enumerated row-major, each running through
/// `0, 1, -1, 2, -2, ...`; the first hit in that order is returned, so
/// the witness is deterministic and `v = w` yields the identity.
/// Failure to find a witness at a given bound is evidence, not proof,
/// except where a complete classification caps the search.
pub fn brute_force_congruence(v: &IntMatrix, w: &IntMatrix, bound: u64) -> Option<IntMatrix> {
    assert!(v.is_square() && w.is_square(), "inputs must be square");
    assert_eq!(v.rows(), w.rows(), "inputs must share a size");
    let n = v.rows();
    if n == 0 {
        return Some(IntMatrix::identity(0));
    }
    if n == 2 {
        if let Some(found) = brute_force_2x2_fast(v, w, bound) {
            return found.map(|p| IntMatrix::from_i64(2, 2, &p));
        }
    }
    // general (and arbitrary-precision fallback) path
    let mut p = IntMatrix::zero(n, n);
    if dfs_rows(v, w, bound, 0, &mut p) {
        Some(p)
    } else {
        None
    }
}

/// Values 0, 1, -1, 2, -2, ..., bound, -bound.
fn spiral(bound: u64) -> impl Iterator<Item = i64> {
    let b = bound as i64;
    core::iter::once(0).chain((1..=b).flat_map(|k| [k, -k]))
}

fn dfs_rows(v: &IntMatrix, w: &IntMatrix, bound: u64, row: usize, p: &mut IntMatrix) -> bool {
    let n = v.rows();
    if row == n {
        return p.det().map(|d| d.abs().is_one()).unwrap_or(false);
    }
    dfs_entries(v, w, bound, row, 0, p)
}

fn dfs_entries(
    v: &IntMatrix,
    w: &IntMatrix,
    bound: u64,
    row: usize,
    col: usize,
    p: &mut IntMatrix,
) -> bool {
    let n = v.rows();
    if col == n {
        // rows 0..=row of p are fixed; check all pairings they determine
        for j in 0..=row {
            if pairing(v, p, row, j) != w[(row, j)] || pairing(v, p, j, row) != w[(j, row)] {
                return false;
            }
        }
        return dfs_rows(v, w, bound, row + 1, p);
    }
    for val in spiral(bound) {
        p[(row, col)] = Int::from(val);
        if dfs_entries(v, w, bound, row, col + 1, p) {
            return true;
        }
    }
    p[(row, col)] = Int::zero();
    false
}

/// `(p v p^T)[i][j]` from rows `i`, `j` of `p`.
fn pairing(v: &IntMatrix, p: &IntMatrix, i: usize, j: usize) -> Int {
    let n = v.rows();
    let mut acc = Int::zero();
    for a in 0..n {
        if p[(i, a)].is_zero() {
            continue;
        }
        for b in 0..n {
            acc += &p[(i, a)] * &v[(a, b)] * &p[(j, b)];
        }
    }
    acc
}

/// Machine-integer fast path for the 2x2 search. Returns `None` when the
/// inputs are too large to evaluate safely in `i128`, in which case the
/// caller falls back to exact arithmetic. Iteration order matches the
/// general path exactly.
fn brute_force_2x2_fast(
    v: &IntMatrix,
    w: &IntMatrix,
    bound: u64,
) -> Option<Option<[i64; 4]>> {
    const ENTRY_CAP: i128 = 1 << 40;
    if bound > 1 << 20 {
        return None;
    }
    let mut ve = [0i128; 4];
    let mut we = [0i128; 4];
    for k in 0..4 {
        ve[k] = i128::try_from(&v.entries()[k]).ok()?;
        we[k] = i128::try_from(&w.entries()[k]).ok()?;
        if ve[k].abs() > ENTRY_CAP || we[k].abs() > ENTRY_CAP {
            return None;
        }
    }
    let pair = |r: [i128; 2], s: [i128; 2]| -> i128 {
        r[0] * (ve[0] * s[0] + ve[1] * s[1]) + r[1] * (ve[2] * s[0] + ve[3] * s[1])
    };
    for p00 in spiral(bound) {
        for p01 in spiral(bound) {
            let r0 = [p00 as i128, p01 as i128];
            if pair(r0, r0) != we[0] {
                continue;
            }
            for p10 in spiral(bound) {
                for p11 in spiral(bound) {
                    let r1 = [p10 as i128, p11 as i128];
                    if pair(r1, r1) != we[3]
                        || pair(r0, r1) != we[1]
                        || pair(r1, r0) != we[2]
                    {
                        continue;
                    }
                    let det = r0[0] * r1[1] - r0[1] * r1[0];
                    if det == 1 || det == -1 {
                        return Some(Some([p00, p01, p10, p11]));
                    }
                }
            }
        }
    }
    Some(None)
}

/// Explicit certificate that `((a,b),(b+1,0))` is S-equivalent to
/// `((a b^2, b),(b+1,0))`.
///
/// The chain expands to 4x4, walks through seven congruences (two of
/// them pure basis permutations), contracts back to 2x2 and finishes
/// with a swap. Size-changing arrows are realized as expansion or
/// contraction moves, everything else as explicit unimodular matrices.
pub fn metabolizer_chain_certificate(a: &Int, b: &Int) -> SEquivCertificate {
    let start = metabolizer_matrix(a, b);
    let ab = a * b;

    // helpers over 4x4 matrices
    let elem = |pairs: &[(usize, usize, Int)]| {
        let mut p = IntMatrix::identity(4);
        for (i, j, c) in pairs {
            p[(*i, *j)] = c.clone();
        }
        p
    };
    let perm4 = |s: usize, t: usize| {
        let mut p = IntMatrix::identity(4);
        p[(s, s)] = Int::zero();
        p[(t, t)] = Int::zero();
        p[(s, t)] = Int::one();
        p[(t, s)] = Int::one();
        p
    };
    let swap2 = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]);

    let moves = vec![
        SMove::RowExpansion(vec![Int::one(), Int::zero()]),
        SMove::Congruence(elem(&[(1, 2, -b.clone())])),
        SMove::Congruence(perm4(1, 3)),
        SMove::Congruence(elem(&[(0, 1, Int::one())])),
        SMove::Congruence(elem(&[(1, 0, b.clone()), (2, 3, Int::from(-1))])),
        SMove::Congruence(perm4(0, 2)),
        SMove::Congruence(elem(&[(1, 3, -ab.clone()), (2, 3, -a.clone())])),
        SMove::ColumnContraction,
        SMove::Congruence(swap2),
    ];
    SEquivCertificate::from_moves(&start, &moves)
        .expect("chain moves are legal for every a, b")
}

/// `((a, b), (b+1, 0))`.
pub fn metabolizer_matrix(a: &Int, b: &Int) -> SeifertMatrix {
    let m = IntMatrix::new(
        2,
        2,
        vec![a.clone(), b.clone(), b + 1, Int::zero()],
    )
    .expect("shape");
    SeifertMatrix::new(m).expect("metabolizer matrices satisfy det(V - V^T) = 1")
}

/// S-equivalent but non-congruent neighbors `((a,b),(b+1,0))` and
/// `((a+1,b),(b+1,0))` built from the chain certificate plus a single
/// congruence shift.
#[derive(Clone, Debug)]
pub struct UnitShiftPair {
    pub a: Int,
    pub k: Int,
    pub certificate: SEquivCertificate,
}

/// For `b > 4` with `b = 0 or 2 mod 3`, find the least nonnegative `a`
/// with `a (1 - b^2) = -1 mod (2b+1)`, the `k` with
/// `a + 1 = a b^2 + k (2b+1)`, and a verified certificate joining the
/// neighbors. The classifier confirms they are not congruent.
pub fn unit_shift_pair(b: &Int) -> Result<UnitShiftPair> {
    if *b <= Int::from(4) {
        return Err(Error::Precondition(alloc::format!(
            "require b > 4, got {b}"
        )));
    }
    let rem3 = b.mod_floor(&Int::from(3));
    if rem3 == Int::one() {
        return Err(Error::Precondition(alloc::format!(
            "1 - b^2 shares a factor 3 with 2b+1 when b = 1 mod 3 (b = {b})"
        )));
    }
    let modulus = Int::from(2) * b + 1;
    let coeff = (Int::one() - b * b).mod_floor(&modulus);
    let egcd = coeff.extended_gcd(&modulus);
    debug_assert!(egcd.gcd.is_one());
    // a = -(1 - b^2)^{-1} mod (2b+1), least nonnegative representative
    let inv = egcd.x.mod_floor(&modulus);
    let a = (-inv).mod_floor(&modulus);
    let numer: Int = &a + Int::one() - &a * b * b;
    let (k, r) = numer.div_rem(&modulus);
    debug_assert!(r.is_zero(), "a(1-b^2) = -1 mod 2b+1 forces divisibility");

    let mut certificate = metabolizer_chain_certificate(&a, b);
    certificate
        .extend(SMove::Congruence(shift_witness(&k)))
        .expect("shift congruence is unimodular");
    debug_assert_eq!(
        certificate.terminal(),
        Some(&metabolizer_matrix(&(&a + 1), b))
    );
    assert!(
        congruence_classifier_2x2(&a, b, &(&a + 1)).is_none(),
        "neighbors must not be congruent"
    );
    Ok(UnitShiftPair { a, k, certificate })
}

/// Rigidity criterion: when `|det V|` is 1 or a prime, every matrix
/// S-equivalent to `V` is integrally congruent to `V`. Primality is by
/// trial division; inputs here are tiny.
pub fn trotter_rigid(v: &SeifertMatrix) -> bool {
    let d = v.matrix().det().expect("square").abs();
    d.is_one() || is_prime(&d)
}

fn is_prime(n: &Int) -> bool {
    let two = Int::from(2);
    if *n < two {
        return false;
    }
    if *n == two {
        return true;
    }
    if n.is_even() {
        return false;
    }
    let mut d = Int::from(3);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 2;
    }
    true
}
