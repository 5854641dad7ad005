//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `--nocapture`).  The census criteria read the
//! prepared catalog under `data/` with the reproduction configuration under
//! `configs/`.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crosscheck_core::census::{self, CensusConfig, KnotRecord, RuleId, Status};
use crosscheck_core::factor::{factor_int, factor_kronecker, factor_mod_p, Gf2Poly};
use crosscheck_core::laurent::{IntPoly, LaurentPoly};
use crosscheck_core::linalg::{
    det_bareiss, poly_det, smith_normal_form, solve_integral, IntMatrix, PolyMatrix,
};
use crosscheck_core::obstruction::{
    detect_bad_factor, detect_bad_factor_bruteforce, det_has_square_factor,
};
use crosscheck_core::seifert::{pretzel_seifert_matrix, SeifertMatrix};

fn repo_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

fn reproduction_config() -> CensusConfig {
    let text = std::fs::read_to_string(repo_path("configs/reproduction.toml"))
        .expect("reproduction config present");
    CensusConfig::from_toml(&text).expect("reproduction config parses")
}

fn load_catalog(rel: &str) -> Vec<KnotRecord> {
    let cfg = reproduction_config();
    let file = std::fs::File::open(repo_path(rel)).expect("catalog present");
    let (records, warnings) = census::parse_catalog(file, &cfg).expect("catalog parses");
    assert!(
        warnings.is_empty(),
        "catalog has ingest warnings: {warnings:?}"
    );
    records
}

fn report_line(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

const PSI_BITS: u128 = 0b11111; // 1 + t + t^2 + t^3 + t^4

#[test]
fn criterion_01_psi_irreducibility() {
    let start = Instant::now();
    let psi = IntPoly::from_i64(&[1, 1, 1, 1, 1]);
    let f = factor_mod_p(&psi, 2).unwrap();
    let quad = Gf2Poly::from_bits(0b111);
    let square = quad.mul(&quad);
    let pass = f.is_irreducible()
        && Gf2Poly::from_bits(PSI_BITS).is_irreducible()
        && square.bits() == 0b10101
        && square != Gf2Poly::from_bits(PSI_BITS);
    report_line(
        "1 (psi irreducibility)",
        pass,
        &format!(
            "1+t+t^2+t^3+t^4 irreducible mod 2; (1+t+t^2)^2 = 1+t^2+t^4; {:?} elapsed",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_02_pretzel_family_grid() {
    let start = Instant::now();
    let mut tuples = 0;
    for p1 in [1i64, 5, 9] {
        for p2 in [1i64, 5, 9] {
            for p3 in [1i64, 5, 9] {
                for p4 in [1i64, 5, 9] {
                    for q in [3i64, 7, 11, 15] {
                        let (sm, cond) = pretzel_seifert_matrix(p1, p2, p3, p4, q).unwrap();
                        if !(cond.positivity && cond.congruence) {
                            continue;
                        }
                        tuples += 1;
                        let delta = sm.alexander_polynomial().unwrap();
                        let rep = delta.int_rep().unwrap();
                        let mod2 = Gf2Poly::from_int_poly(&rep).unwrap();
                        assert_eq!(
                            mod2.bits(),
                            PSI_BITS,
                            "Δ mod 2 != ψ for P({p1},{p2},{p3},{p4},-{q})"
                        );
                        let verdict = detect_bad_factor(&delta).unwrap();
                        assert!(
                            !verdict.bad_factor_exists(),
                            "bad factor reported for P({p1},{p2},{p3},{p4},-{q})"
                        );
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = tuples == 307 && elapsed.as_secs_f64() < 1.0;
    report_line(
        "2 (pretzel family)",
        pass,
        &format!("{tuples} admissible tuples, Δ ≡ ψ (mod 2) and no bad factor; {elapsed:?}"),
    );
}

#[test]
fn criterion_03_pretzel_arithmetic() {
    let mut pass = true;
    let mut notes = Vec::new();
    for q in [7i64, 11, 55, 155] {
        let (sm, _) = pretzel_seifert_matrix(1, 5, 1, 1, q).unwrap();
        let det = sm.knot_determinant().unwrap();
        let expected = BigInt::from(16 * q - 5);
        if det != expected {
            pass = false;
        }
        notes.push(format!("q={q}: det {det}"));
    }
    let (sm, _) = pretzel_seifert_matrix(1, 5, 1, 1, 155).unwrap();
    let det = sm.knot_determinant().unwrap();
    if det != BigInt::from(2475)
        || !(&det % BigInt::from(25)).is_zero()
        || !det_has_square_factor(&det)
    {
        pass = false;
    }
    report_line(
        "3 (pretzel determinants 16q-5)",
        pass,
        &format!("{}; q=155 gives 2475 = 25·99 with square factor", notes.join(", ")),
    );
}

#[test]
fn criterion_04_ten_crossing_spot_checks() {
    let start = Instant::now();
    let records = load_catalog("data/knotinfo_le11.csv");
    let expect = [
        ("10_108", false),
        ("10_164", false),
        ("10_87", true),
        ("10_98", true),
        ("10_129", true),
        ("10_147", true),
    ];
    let mut pass = true;
    let mut notes = Vec::new();
    for (name, want_bad) in expect {
        let rec = records
            .iter()
            .find(|r| r.name == name)
            .unwrap_or_else(|| panic!("{name} in catalog"));
        let got = detect_bad_factor(&rec.delta).unwrap().bad_factor_exists();
        if got != want_bad {
            pass = false;
        }
        notes.push(format!("{name}: bad={got}"));
    }
    report_line(
        "4 (ten-crossing spot checks)",
        pass,
        &format!("{}; {:?}", notes.join(", "), start.elapsed()),
    );
}

const EXPECTED_EXCEPTIONS: [&str; 18] = [
    "11a_6", "11a_36", "11a_38", "11a_58", "11a_67", "11a_87", "11a_102", "11a_103",
    "11a_104", "11a_115", "11a_132", "11a_165", "11a_168", "11a_169", "11a_199",
    "11a_201", "11a_283", "11a_352",
];

#[test]
fn criterion_05_census_headline_counts() {
    let start = Instant::now();
    let cfg = reproduction_config();
    let records = load_catalog("data/knotinfo_alternating_le11.csv");
    let report = census::run_census(&records, Vec::new(), &cfg);
    let s = &report.summary;

    let eleven = s.by_crossings.get(&11).cloned().unwrap_or_default();
    let a = eleven.total == 367;
    let b = eleven.four_condition_filter == 45;
    let c = s.no_bad_factor_total == 483;
    let lm_eleven = report
        .verdicts
        .iter()
        .filter(|v| {
            v.crossings == 11
                && v.status
                    == Status::ProvedPrior { rule: RuleId::InvariantFactorsSquareFree }
        })
        .count();
    let d = lm_eleven == 7;
    let exceptions_eleven: BTreeSet<String> = report
        .verdicts
        .iter()
        .filter(|v| v.crossings == 11 && matches!(v.status, Status::Exception))
        .map(|v| v.name.clone())
        .collect();
    let expected: BTreeSet<String> =
        EXPECTED_EXCEPTIONS.iter().map(|s| s.to_string()).collect();
    let e = exceptions_eleven == expected;
    let elapsed = start.elapsed();
    let pass = a && b && c && d && e && elapsed.as_secs() < 30;
    report_line(
        "5 (census headline counts)",
        pass,
        &format!(
            "ingested total {} (11-crossing alternating {}), filter {}, no-bad-factor {}, \
             invariant-factor verdicts at 11 crossings {}, exception set matches: {}; {elapsed:?}",
            s.total, eleven.total, eleven.four_condition_filter, s.no_bad_factor_total,
            lm_eleven, e
        ),
    );
}

#[test]
fn criterion_06_ten_or_fewer_count() {
    let cfg = reproduction_config();
    let records = load_catalog("data/knotinfo_le11.csv");
    let report = census::run_census(&records, Vec::new(), &cfg);
    let verified: usize = report
        .summary
        .by_crossings
        .iter()
        .filter(|(cr, _)| **cr <= 10)
        .map(|(_, row)| row.detector_verified)
        .sum();
    let total: usize = report
        .summary
        .by_crossings
        .iter()
        .filter(|(cr, _)| **cr <= 10)
        .map(|(_, row)| row.total)
        .sum();
    let pass = verified == 200;
    report_line(
        "6 (ten-or-fewer verified count)",
        pass,
        &format!("{verified} of {total} prime knots ≤ 10 crossings verified (catalog includes the unknot)"),
    );
}

fn random_int_poly(rng: &mut ChaCha8Rng, max_deg: usize, coeff: i64) -> IntPoly {
    let deg = rng.gen_range(0..=max_deg);
    IntPoly::from_coeffs(
        (0..=deg)
            .map(|_| BigInt::from(rng.gen_range(-coeff..=coeff)))
            .collect(),
    )
}

#[test]
fn criterion_07_factorization_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7001);
    let mut checked = 0;
    while checked < 1000 {
        let p = random_int_poly(&mut rng, 8, 9);
        if p.is_zero() {
            continue;
        }
        let fast = factor_int(&p).unwrap();
        let oracle = factor_kronecker(&p).unwrap();
        assert_eq!(fast, oracle, "factorization mismatch for {p}");
        assert_eq!(fast.reconstruct(), p, "reconstruction failed for {p}");
        checked += 1;
    }
    let records = load_catalog("data/knotinfo_le11.csv");
    let mut census_checked = 0;
    for rec in &records {
        let rep = rec.delta.int_rep().expect("census Δ nonzero");
        let fast = factor_int(&rep).unwrap();
        let oracle = factor_kronecker(&rep).unwrap();
        assert_eq!(fast, oracle, "factorization mismatch for {} ({rep})", rec.name);
        assert_eq!(fast.reconstruct(), rep);
        census_checked += 1;
    }
    report_line(
        "7 (factorization oracle equivalence)",
        true,
        &format!(
            "{checked} random polynomials and {census_checked} census polynomials agree; {:?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_08_detector_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8001);
    let mut planted = 0;
    while planted < 500 {
        // random primitive f with |f(-1)| != 1
        let f = random_int_poly(&mut rng, 3, 5);
        if f.is_zero() || f.degree() == Some(0) {
            continue;
        }
        let f = f.primitive_part();
        if f.eval(&BigInt::from(-1)).abs().is_one() {
            continue;
        }
        // random symmetric cofactor h(t) = g(t) g(1/t)
        let g = random_int_poly(&mut rng, 2, 3);
        if g.is_zero() {
            continue;
        }
        let h = &g.to_laurent() * &g.to_laurent().bar();
        let delta = &(&f.to_laurent() * &f.to_laurent().bar()) * &h;
        let detected = detect_bad_factor(&delta).unwrap().bad_factor_exists();
        let brute = detect_bad_factor_bruteforce(&delta, 16).unwrap();
        assert_eq!(detected, brute, "planted disagreement for {delta}");
        assert!(detected, "planted bad factor {f} not detected in {delta}");
        planted += 1;
    }
    let records = load_catalog("data/knotinfo_le11.csv");
    for rec in &records {
        let detected = detect_bad_factor(&rec.delta).unwrap().bad_factor_exists();
        let brute = detect_bad_factor_bruteforce(&rec.delta, 16).unwrap();
        assert_eq!(detected, brute, "census disagreement for {}", rec.name);
    }
    report_line(
        "8 (detector oracle equivalence)",
        true,
        &format!(
            "{planted} planted constructions and {} census polynomials agree; {:?}",
            records.len(),
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_09_linear_algebra_properties() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9001);
    // SNF postconditions on 500 random matrices up to 8x8
    for _ in 0..500 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=8);
        let mut m = IntMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = BigInt::from(rng.gen_range(-20..=20i64));
            }
        }
        let snf = smith_normal_form(&m);
        assert_eq!(snf.u.mul(&m).unwrap().mul(&snf.w).unwrap(), snf.d);
        assert_eq!(det_bareiss(&snf.u).unwrap().abs(), BigInt::one());
        assert_eq!(det_bareiss(&snf.w).unwrap().abs(), BigInt::one());
        let inv = snf.invariant_factors();
        for pair in inv.windows(2) {
            assert!((&pair[1] % &pair[0]).is_zero(), "divisibility chain broken");
        }
        for d in &inv {
            assert!(d.is_positive());
        }
        if rows == cols {
            let det = det_bareiss(&m).unwrap();
            let prod: BigInt = inv.iter().product();
            if !det.is_zero() {
                assert_eq!(prod.abs(), det.abs(), "|∏ d_i| != |det|");
            }
        }
    }
    // solve_integral soundness and completeness against a rational solve
    let mut solved = 0;
    let mut checked = 0;
    while checked < 300 {
        let n = rng.gen_range(1..=5);
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = BigInt::from(rng.gen_range(-6..=6i64));
            }
        }
        let det = det_bareiss(&m).unwrap();
        if det.is_zero() {
            continue;
        }
        let b: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.gen_range(-9..=9i64))).collect();
        // Cramer: x_i = det(M_i) / det(M); integral iff all divide
        let mut cramer_integral = true;
        let mut cramer = Vec::with_capacity(n);
        for i in 0..n {
            let mut mi = m.clone();
            for r in 0..n {
                mi[(r, i)] = b[r].clone();
            }
            let di = det_bareiss(&mi).unwrap();
            let (q, rem) = num_integer::Integer::div_rem(&di, &det);
            if !rem.is_zero() {
                cramer_integral = false;
                break;
            }
            cramer.push(q);
        }
        let solution = solve_integral(&m, &b).unwrap();
        assert_eq!(
            solution.is_some(),
            cramer_integral,
            "solvability disagrees with Cramer for {m} b={b:?}"
        );
        if let Some(x) = solution {
            assert_eq!(m.mul_vec(&x).unwrap(), b, "returned solution is wrong");
            assert_eq!(x, cramer, "nonsingular solution unique");
            solved += 1;
        }
        checked += 1;
    }
    assert!(solved > 10, "too few solvable systems exercised");
    // poly_det via interpolation == cofactor expansion for all <= 4x4 in a
    // random corpus
    let mut rng2 = ChaCha8Rng::seed_from_u64(9002);
    for _ in 0..200 {
        let n = rng2.gen_range(1..=4);
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = LaurentPoly::from_terms((0..2).map(|_| {
                    (
                        rng2.gen_range(-2..=2i64),
                        BigInt::from(rng2.gen_range(-3..=3i64)),
                    )
                }));
            }
        }
        assert_eq!(
            poly_det(&m).unwrap(),
            m.det_cofactor().unwrap(),
            "interpolation vs cofactor mismatch"
        );
    }
    report_line(
        "9 (linear-algebra properties)",
        true,
        &format!(
            "500 SNF postconditions, {checked} integral solves vs Cramer ({solved} solvable), \
             200 poly_det cross-checks; {:?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_10_proof_trace_identities() {
    let start = Instant::now();
    // the genus-one unknot surface reproduces the fully trivial trace
    let unknot = SeifertMatrix::new(IntMatrix::from_i64_rows(&[&[0, 1], &[0, 0]])).unwrap();
    let trace = unknot.proof_trace().unwrap();
    let k = trace.kernel.expect("singular minor");
    let trivial_ok = k.v1 == vec![IntPoly::one()]
        && k.f.is_one()
        && k.f_at_minus_one.is_one()
        && k.f_primitive
        && k.conjugate_identity_holds
        && k.nullhomologous;

    // generated corpus: random 4x4 integer matrices with det(V - V^T) = 1
    // and singular minor
    let mut rng = ChaCha8Rng::seed_from_u64(10001);
    let mut corpus: Vec<SeifertMatrix> = vec![
        // frozen finds from the pre-build search
        SeifertMatrix::new(IntMatrix::from_i64_rows(&[
            &[1, -1, -1, 0],
            &[-2, 0, 0, -2],
            &[-1, 0, 0, -1],
            &[1, -1, -2, -2],
        ]))
        .unwrap(),
        SeifertMatrix::new(IntMatrix::from_i64_rows(&[
            &[1, 1, 2, 2],
            &[-2, 1, 0, -1],
            &[1, 1, -2, 0],
            &[2, -2, 0, 2],
        ]))
        .unwrap(),
    ];
    let mut tries = 0;
    while corpus.len() < 40 && tries < 500_000 {
        tries += 1;
        let mut v = IntMatrix::zeros(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                v[(i, j)] = BigInt::from(rng.gen_range(-2..=2i64));
            }
        }
        let Ok(sm) = SeifertMatrix::new(v) else { continue };
        let a_prime = sm.alexander_matrix().minor(0, 0);
        if !poly_det(&a_prime).unwrap().is_zero() {
            continue;
        }
        corpus.push(sm);
    }
    let mut bad_f_seen = 0;
    for sm in &corpus {
        let trace = sm.proof_trace().unwrap();
        let k = trace.kernel.expect("corpus has singular minors");
        assert!(
            k.conjugate_identity_holds,
            "conjugate identity failed for {:?}",
            sm.matrix()
        );
        assert!(k.f_primitive, "f = {} not primitive for {:?}", k.f, sm.matrix());
        // the paired factor divides Δ up to units
        let delta = sm.alexander_polynomial().unwrap();
        if !k.f.is_zero() {
            let product = &k.f.to_laurent() * &k.f.to_laurent().bar();
            assert!(
                product.divides(&delta).unwrap().is_some(),
                "f(t)f(1/t) does not divide Δ for {:?}",
                sm.matrix()
            );
        }
        if !k.f_at_minus_one.abs().is_one() {
            bad_f_seen += 1;
        }
    }
    let pass = trivial_ok && corpus.len() >= 25 && bad_f_seen >= 2;
    report_line(
        "10 (proof-trace identities)",
        pass,
        &format!(
            "trivial trace reproduced; {} singular-minor matrices checked, {} with |f(-1)| != 1; {:?}",
            corpus.len(),
            bad_f_seen,
            start.elapsed()
        ),
    );
}
