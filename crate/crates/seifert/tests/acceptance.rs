//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`).

use num_traits::Signed;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use seifert::abelian::{group_from_presentation, h1_double_cover, h1_metabolizer_closed_form};
use seifert::families::{whitehead_seifert, Clasp, KnotSpec};
use seifert::laurent::{alexander, canonicalize, knot_determinant, LaurentPoly};
use seifert::matrix::congruent_transform;
use seifert::pipeline::{analyze, catalog, run_table_screen, ObstructionTag, Verdict};
use seifert::sequiv::{
    apply_move, brute_force_congruence, congruence_classifier_2x2, metabolizer_chain_certificate,
    metabolizer_matrix, unit_shift_pair, verify_certificate, SEquivCertificate, SMove,
};
use seifert::{Int, IntMatrix, SeifertMatrix};

fn int(x: i64) -> Int {
    Int::from(x)
}

#[test]
fn acceptance_01_table_reproduction() {
    let expected: [(&str, i64); 23] = [
        ("3_1", 3),
        ("4_1", 5),
        ("5_2", 7),
        ("6_1", 9),
        ("7_2", 11),
        ("7_4", 15),
        ("8_1", 13),
        ("8_3", 17),
        ("9_2", 15),
        ("9_5", 23),
        ("9_35", 27),
        ("9_46", 9),
        ("10_1", 17),
        ("10_3", 25),
        ("11a_247", 19),
        ("11a_343", 31),
        ("11a_362", 39),
        ("11a_363", 35),
        ("11n_139", 9),
        ("11n_141", 21),
        ("12a_803", 21),
        ("12a_1287", 37),
        ("12a_1166", 33),
    ];
    let entries = catalog();
    assert_eq!(entries.len(), 23);
    for (entry, (name, det)) in entries.iter().zip(expected) {
        assert_eq!((entry.name, entry.determinant), (name, det));
    }
    let screen = run_table_screen();
    assert_eq!(screen.survivors, ["6_1", "9_46", "10_3", "11n_139"]);
    // the computed screen agrees with the stored square markings
    for (entry, row) in entries.iter().zip(&screen.rows) {
        assert_eq!(entry.known_square, row.square, "marking mismatch at {}", entry.name);
    }
    println!("ACCEPTANCE 01 PASS: catalog matches the table; survivors are 6_1, 9_46, 10_3, 11n_139");
}

#[test]
fn acceptance_02_pretzel_9_46() {
    let spec: KnotSpec = "pretzel 3,3,-3".parse().unwrap();
    let r = analyze(&spec, false).unwrap();
    assert_eq!(
        r.seifert.as_ref().unwrap().matrix(),
        &IntMatrix::from_i64(2, 2, &[3, 2, 1, 0])
    );
    let h1 = r.h1.as_ref().unwrap();
    assert_eq!(
        h1.torsion(),
        &[int(3), int(3)],
        "H1 must be Z_3 + Z_3"
    );
    assert_eq!(h1.free_rank(), 0);
    assert_eq!(r.verdict, Verdict::Obstructed);
    assert!(r
        .reasons
        .iter()
        .any(|x| x.tag == ObstructionTag::HomologyNotCyclic));
    println!("ACCEPTANCE 02 PASS: 9_46 has V=[[3,2],[1,0]], H1=Z_3+Z_3, OBSTRUCTED via non-cyclic H1");
}

#[test]
fn acceptance_03_pretzel_11n_139() {
    let spec: KnotSpec = "pretzel -5,3,-3".parse().unwrap();
    let r = analyze(&spec, false).unwrap();
    assert_eq!(
        r.seifert.as_ref().unwrap().matrix(),
        &IntMatrix::from_i64(2, 2, &[-1, 2, 1, 0])
    );
    let h1 = r.h1.as_ref().unwrap();
    assert_eq!(h1.torsion(), &[int(9)]);
    assert_eq!(r.h1_cyclic, Some(true), "step 3 passes: H1 = Z_9 is cyclic");
    assert_eq!(r.trotter_applicable, Some(true), "|det V| = 2 is prime");
    assert_eq!(r.congruence_blocked, Some(true));
    // classifier empty for both unit shifts of the metabolizer form
    let mf = r.metab.as_ref().unwrap();
    assert!(congruence_classifier_2x2(&mf.a, &mf.b, &(&mf.a + 1)).is_none());
    assert!(congruence_classifier_2x2(&mf.a, &mf.b, &(&mf.a - 1)).is_none());
    assert_eq!(r.verdict, Verdict::Obstructed);
    println!("ACCEPTANCE 03 PASS: 11n_139 has V=[[-1,2],[1,0]], H1=Z_9 cyclic, rigid, both shifts non-congruent, OBSTRUCTED");
}

#[test]
fn acceptance_04_closed_form_vs_snf() {
    let mut cases = 0;
    for x in -12i64..=12 {
        for y in -12i64..=12 {
            let m = IntMatrix::from_i64(2, 2, &[2 * x, 2 * y + 1, 2 * y + 1, 0]);
            assert_eq!(
                h1_metabolizer_closed_form(&int(x), &int(y)),
                group_from_presentation(&m),
                "closed form disagrees with SNF at x={x} y={y}"
            );
            cases += 1;
        }
    }
    println!("ACCEPTANCE 04 PASS: closed form equals SNF group on {cases} cases");
}

#[test]
fn acceptance_05_classifier_vs_brute_force() {
    let mut cases = 0;
    for b in -4i64..=4 {
        for a in -8i64..=8 {
            for c in -8i64..=8 {
                let v = IntMatrix::from_i64(2, 2, &[a, b, b + 1, 0]);
                let w = IntMatrix::from_i64(2, 2, &[c, b, b + 1, 0]);
                let bound =
                    2 * (1 + a.unsigned_abs() + b.unsigned_abs() + c.unsigned_abs());
                let classified = congruence_classifier_2x2(&int(a), &int(b), &int(c));
                let searched = brute_force_congruence(&v, &w, bound);
                assert_eq!(
                    classified.is_some(),
                    searched.is_some(),
                    "disagreement at a={a} b={b} c={c} (bound {bound})"
                );
                if let Some(p) = searched {
                    assert_eq!(congruent_transform(&p, &v).unwrap(), w);
                }
                cases += 1;
            }
        }
    }
    println!(
        "ACCEPTANCE 05 PASS: classifier matches brute force on {cases} cases, bound 2(1+|a|+|b|+|c|)"
    );
}

#[test]
fn acceptance_06_chain_certificates() {
    let mut cases = 0;
    for a in -5i64..=5 {
        for b in -5i64..=5 {
            let cert = metabolizer_chain_certificate(&int(a), &int(b));
            verify_certificate(&cert).unwrap_or_else(|e| panic!("a={a} b={b}: {e}"));
            assert_eq!(
                cert.initial().unwrap(),
                &metabolizer_matrix(&int(a), &int(b))
            );
            assert_eq!(
                cert.terminal().unwrap(),
                &metabolizer_matrix(&int(a * b * b), &int(b)),
                "wrong endpoint for a={a} b={b}"
            );
            cases += 1;
        }
    }
    println!("ACCEPTANCE 06 PASS: {cases} chain certificates verified with endpoint ((a*b^2, b),(b+1, 0))");
}

#[test]
fn acceptance_07_unit_shift_pairs() {
    let valid: Vec<i64> = (5..=30).filter(|b| b % 3 != 1).collect();
    for &b in &valid {
        let pair = unit_shift_pair(&int(b)).unwrap();
        // a + 1 = a b^2 + k (2b+1)
        assert_eq!(
            &pair.a + 1,
            &pair.a * int(b * b) + &pair.k * int(2 * b + 1),
            "arithmetic identity fails at b={b}"
        );
        verify_certificate(&pair.certificate).unwrap_or_else(|e| panic!("b={b}: {e}"));
        assert_eq!(
            pair.certificate.initial().unwrap(),
            &metabolizer_matrix(&pair.a, &int(b))
        );
        assert_eq!(
            pair.certificate.terminal().unwrap(),
            &metabolizer_matrix(&(&pair.a + 1), &int(b))
        );
        assert!(
            congruence_classifier_2x2(&pair.a, &int(b), &(&pair.a + 1)).is_none(),
            "pair at b={b} must not be congruent"
        );
    }
    let spot = unit_shift_pair(&int(5)).unwrap();
    assert_eq!((spot.a, spot.k), (int(6), int(-13)));
    println!(
        "ACCEPTANCE 07 PASS: verified S-equivalent non-congruent pairs for b in {valid:?}; b=5 gives (a,k)=(6,-13)"
    );
}

#[test]
fn acceptance_08_whitehead_family() {
    for n in -10i64..=10 {
        let v = whitehead_seifert(Clasp::Positive, &int(n));
        let expected = LaurentPoly::from_i64(0, &[-n, 2 * n + 1, -n]);
        assert_eq!(
            canonicalize(&alexander(&v)).unwrap(),
            canonicalize(&expected).unwrap(),
            "Alexander polynomial mismatch at n={n}"
        );
        let spec = KnotSpec::Whitehead {
            clasp: Clasp::Positive,
            twists: int(n),
        };
        let verdict = analyze(&spec, false).unwrap().verdict;
        if n < 0 || n.rem_euclid(2) == 1 {
            assert_eq!(
                verdict,
                Verdict::Obstructed,
                "positive-clasp double with n={n} must be obstructed"
            );
        }
    }
    println!("ACCEPTANCE 08 PASS: twisted-double Alexander family reproduced for n in [-10,10]; all n<0 and odd |n| obstructed");
}

#[test]
fn acceptance_09_pretzel_determinant_identity() {
    let mut cases = 0;
    for p in (-9i64..=9).step_by(2) {
        for q in (-9i64..=9).step_by(2) {
            for r in (-9i64..=9).step_by(2) {
                let det = seifert::families::pretzel_determinant(&int(p), &int(q), &int(r))
                    .unwrap();
                let v = seifert::families::pretzel_seifert(&int(p), &int(q), &int(r)).unwrap();
                assert_eq!(det, knot_determinant(&v), "mismatch at ({p},{q},{r})");
                cases += 1;
            }
        }
    }
    println!("ACCEPTANCE 09 PASS: |pq+qr+pr| = |Delta(-1)| on {cases} odd triples");
}

fn random_seifert(rng: &mut ChaCha8Rng) -> SeifertMatrix {
    let a = rng.gen_range(-5i64..=5);
    let b = rng.gen_range(-5i64..=5);
    let d = rng.gen_range(-5i64..=5);
    let c = if rng.gen_bool(0.5) { b + 1 } else { b - 1 };
    SeifertMatrix::from_i64(2, &[a, b, c, d]).unwrap()
}

fn random_certificate(rng: &mut ChaCha8Rng, start: &SeifertMatrix) -> SEquivCertificate {
    let n_moves = rng.gen_range(0..=4);
    let mut moves = Vec::new();
    let mut size = start.size();
    let mut last_expansion: Option<bool> = None;
    for _ in 0..n_moves {
        match rng.gen_range(0u8..4) {
            0 => {
                let u: Vec<Int> = (0..size).map(|_| int(rng.gen_range(-3..=3))).collect();
                moves.push(SMove::ColumnExpansion(u));
                size += 2;
                last_expansion = Some(true);
            }
            1 => {
                let u: Vec<Int> = (0..size).map(|_| int(rng.gen_range(-3..=3))).collect();
                moves.push(SMove::RowExpansion(u));
                size += 2;
                last_expansion = Some(false);
            }
            2 => {
                if let Some(was_col) = last_expansion.take() {
                    moves.push(if was_col {
                        SMove::ColumnContraction
                    } else {
                        SMove::RowContraction
                    });
                    size -= 2;
                }
            }
            _ => {
                let ops = vec![(
                    rng.gen_range(0u8..3),
                    rng.gen_range(0..size),
                    rng.gen_range(0..size),
                    rng.gen_range(-2i64..=2),
                )];
                moves.push(SMove::Congruence(test_unimodular(size, ops)));
                last_expansion = None;
            }
        }
    }
    SEquivCertificate::from_moves(start, &moves).expect("generated moves are legal")
}

/// Unimodular matrix from elementary operations (mirror of the library's
/// internal test helper; certificates need explicit congruence matrices).
fn test_unimodular(n: usize, ops: Vec<(u8, usize, usize, i64)>) -> IntMatrix {
    let mut p = IntMatrix::identity(n);
    for (kind, i, j, c) in ops {
        let i = i % n;
        let mut j = j % n;
        if n > 1 && i == j {
            j = (j + 1) % n;
        }
        let mut e = IntMatrix::identity(n);
        match kind % 3 {
            0 if i != j => e[(i, j)] = int(c),
            1 if i != j => {
                e[(i, i)] = int(0);
                e[(j, j)] = int(0);
                e[(i, j)] = int(1);
                e[(j, i)] = int(1);
            }
            _ => e[(i, i)] = int(-1),
        }
        p = p.mul(&e);
    }
    p
}

#[test]
fn acceptance_10_invariance_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f3a7);
    for trial in 0..500 {
        let v = random_seifert(&mut rng);
        let delta = alexander(&v);
        assert_eq!(
            delta.eval_at_one().abs(),
            int(1),
            "|Delta(1)| != 1 on trial {trial}"
        );
        assert_eq!(
            delta.eval_at_minus_one().abs(),
            v.symmetrized().det().unwrap().abs(),
            "|Delta(-1)| route mismatch on trial {trial}"
        );
        let cert = random_certificate(&mut rng, &v);
        verify_certificate(&cert).unwrap_or_else(|e| panic!("trial {trial}: {e}"));
        let end = cert.terminal().cloned().unwrap_or_else(|| v.clone());
        assert_eq!(
            canonicalize(&alexander(&end)).unwrap(),
            canonicalize(&delta).unwrap(),
            "canonical Alexander polynomial changed on trial {trial}"
        );
        assert_eq!(
            h1_double_cover(&end),
            h1_double_cover(&v),
            "double-cover homology changed on trial {trial}"
        );
        // a replayed move sequence lands on the same endpoint
        let moves: Vec<SMove> = cert.steps().iter().map(|s| s.mv.clone()).collect();
        let mut replay = v.clone();
        for mv in &moves {
            replay = apply_move(&replay, mv).unwrap();
        }
        assert_eq!(&replay, &end);
    }
    println!("ACCEPTANCE 10 PASS: Delta and H1 preserved along 500 randomized certificates; unit values check out");
}
