//! Acceptance suite: one test per acceptance criterion, each printing a
//! single pass/fail line. Tolerances are pinned in the asserts; none of them
//! may be loosened.

use std::time::Instant;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use barker::cert::{
    nonexistence_certificate, star_swap_normalize, verify_certificate, verify_certificate_detailed,
    CaseWitness,
};
use barker::newton::{correlation_pattern, power_sums_monic, sequence_pattern};
use barker::poly::{autocorrelation_polynomial, correlation_structure, IntPolynomial};
use barker::search::{exhaustive_search, pruned_search, range_scan, ScanMode, SearchOptions};
use barker::seq::LittlewoodSeq;

const KNOWN_BARKER_LENGTHS: [usize; 8] = [1, 2, 3, 4, 5, 7, 11, 13];

fn random_sequence(rng: &mut StdRng, n: usize) -> LittlewoodSeq {
    let entries = (0..n).map(|_| if rng.random_bool(0.5) { 1 } else { -1 }).collect();
    LittlewoodSeq::from_entries(entries).expect("entries are ±1")
}

fn pass(line: &str) {
    println!("[acceptance] {line}: PASS");
}

#[test]
fn criterion_1_census_to_24_plus_pruned_odd_to_29() {
    let start = Instant::now();
    let options = SearchOptions::default();

    let rows = range_scan(1, 24, ScanMode::Exhaustive, &options).expect("scan runs");
    let found_lengths: Vec<usize> =
        rows.iter().filter(|r| !r.found.is_empty()).map(|r| r.n).collect();
    assert_eq!(found_lengths, KNOWN_BARKER_LENGTHS, "exhaustive census 1..=24");

    let odd_rows = range_scan(15, 29, ScanMode::Pruned, &options).expect("pruned scan runs");
    assert_eq!(odd_rows.len(), 8);
    for row in &odd_rows {
        assert!(row.found.is_empty(), "unexpected find at n = {}", row.n);
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 600, "census must finish under 10 minutes, took {elapsed:?}");
    pass("criterion 1 — census 1..=24 and empty pruned odd 15..=29");
}

#[test]
fn criterion_2_pruned_equals_exhaustive_on_odd_lengths() {
    let options = SearchOptions::default();
    let raw_options = SearchOptions { canonical: false, ..SearchOptions::default() };
    for n in (1..=21).step_by(2) {
        let pruned = pruned_search(n, &options).unwrap();
        let exhaustive = exhaustive_search(n, &options).unwrap();
        assert_eq!(pruned.found, exhaustive.found, "canonical found sets at n = {n}");
        let pruned_raw = pruned_search(n, &raw_options).unwrap();
        let exhaustive_raw = exhaustive_search(n, &raw_options).unwrap();
        assert_eq!(pruned_raw.found, exhaustive_raw.found, "raw found sets at n = {n}");
    }
    pass("criterion 2 — pruned and exhaustive agree for odd n ≤ 21");
}

#[test]
fn criterion_3_unconditional_identities_on_random_sequences() {
    let mut rng = StdRng::seed_from_u64(1301);
    let mut failures = 0u32;
    for _ in 0..10_000 {
        let n = rng.random_range(2..=64);
        let seq = random_sequence(&mut rng, n);
        let profile = seq.autocorrelation();
        for k in 1..n {
            let c = profile.c(k);
            let window = (n - k) as i64;
            if c.abs() > window || (c - window).rem_euclid(2) != 0 {
                failures += 1;
            }
            if !seq.lag_parity_identity(k).expect("k < n") {
                failures += 1;
            }
        }
        if !seq.fold_mod4_identity().expect("n >= 2") {
            failures += 1;
        }
    }
    assert_eq!(failures, 0, "identity failures on random input");
    pass("criterion 3 — parity, fold, bound and lag-parity identities on 10,000 random sequences");
}

#[test]
fn criterion_4_structure_identities_on_every_odd_census_member() {
    let raw_options = SearchOptions { canonical: false, ..SearchOptions::default() };
    for n in [3usize, 5, 7, 11, 13] {
        let report = exhaustive_search(n, &raw_options).unwrap();
        assert!(!report.found.is_empty(), "census is empty at n = {n}");
        for seq in &report.found {
            assert!(seq.is_skew_symmetric().unwrap(), "skew at n = {n}: {seq}");
            assert!(seq.alternating_sum_identity().unwrap(), "alternating sum at n = {n}: {seq}");
            assert!(seq.index_doubling_identity().unwrap(), "index doubling at n = {n}: {seq}");
            assert!(seq.odd_length_structure().unwrap().passed(), "lag structure at n = {n}: {seq}");
            let structure = correlation_structure(seq).unwrap();
            assert!(structure.star_negation_identity, "star negation at n = {n}: {seq}");
            assert!(structure.product_negation_identity, "product negation at n = {n}: {seq}");
            assert!(structure.passed(), "correlation structure at n = {n}: {seq}");
        }
    }
    pass("criterion 4 — skew, alternating-sum, doubling, lag and correlation structure on the census");
}

#[test]
fn criterion_5_power_sum_patterns_on_the_census() {
    let raw_options = SearchOptions { canonical: false, ..SearchOptions::default() };
    for n in [5usize, 7, 11, 13] {
        let report = exhaustive_search(n, &raw_options).unwrap();
        assert!(!report.found.is_empty(), "census is empty at n = {n}");
        for seq in &report.found {
            assert!(correlation_pattern(seq).unwrap().passed(), "S pattern at n = {n}: {seq}");
            assert!(sequence_pattern(seq).unwrap().passed(), "s pattern at n = {n}: {seq}");

            // In the leading-run orientation the normalized sequence starts
            // ++, so s_1 = -a_2 = -1.
            let normalized = if seq.a(1) == -1 { seq.negated() } else { seq.clone() };
            let (oriented, _) = star_swap_normalize(&normalized).expect("run >= 3 in one orientation");
            let pattern = sequence_pattern(&oriented).unwrap();
            assert_eq!(pattern.s1, BigInt::from(-1), "s_1 at n = {n}: {seq}");
        }
    }
    pass("criterion 5 — power-sum patterns S_2k = -2, s_2k = -1, s_1 = -1 on the census");
}

#[test]
fn criterion_6_newton_sums_match_root_powers() {
    let mut rng = StdRng::seed_from_u64(1306);
    for round in 0..500 {
        let degree = rng.random_range(1..=8);
        let roots: Vec<i64> = (0..degree).map(|_| rng.random_range(-6..=6)).collect();
        let mut poly = IntPolynomial::from_i64_coeffs(&[1]);
        for &r in &roots {
            poly = poly.multiply(&IntPolynomial::from_i64_coeffs(&[-r, 1]));
        }
        let count = degree + 3;
        let sums = power_sums_monic(&poly, count).expect("product of monic factors is monic");
        for mu in 1..=count {
            let direct: BigInt = roots
                .iter()
                .map(|&r| (0..mu).fold(BigInt::from(1), |acc, _| acc * BigInt::from(r)))
                .sum();
            assert_eq!(*sums.get(mu), direct, "round {round}, roots {roots:?}, mu = {mu}");
        }
    }
    pass("criterion 6 — recurrence power sums equal direct root powers on 500 random polynomials");
}

#[test]
fn criterion_7_certificates_for_every_odd_length_to_10001() {
    let start = Instant::now();
    let lengths: Vec<usize> = (15..=10001).step_by(2).collect();
    let record_total: usize = lengths
        .par_iter()
        .map(|&n| {
            let cert = nonexistence_certificate(n).expect("generation succeeds");
            verify_certificate_detailed(&cert)
                .unwrap_or_else(|flaw| panic!("certificate for {n} rejected: {flaw}"));
            cert.records.len()
        })
        .sum();
    // Every odd p in [3, n] gets one record.
    let expected_total: usize = lengths.iter().map(|&n| (n - 3) / 2 + 1).sum();
    assert_eq!(record_total, expected_total);

    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "generate + verify must finish under 10 seconds, took {elapsed:?}"
    );

    // Sampled single-field corruptions must all be caught.
    for n in [15usize, 101, 1001, 9999] {
        let cert = nonexistence_certificate(n).unwrap();
        let mid = cert.records.len() / 2;

        let mut broken = cert.clone();
        broken.records[mid].u += 1;
        assert!(!verify_certificate(&broken), "u bump undetected at n = {n}");

        let mut broken = cert.clone();
        broken.records.remove(mid);
        assert!(!verify_certificate(&broken), "dropped record undetected at n = {n}");

        let mut broken = cert.clone();
        match &mut broken.records[mid].witness {
            CaseWitness::Triples(w) => w.contradiction_index += 1,
            CaseWitness::Quadratic(w) => w.value += 2,
            CaseWitness::Bound(w) => w.max_length += 1,
        }
        assert!(!verify_certificate(&broken), "witness edit undetected at n = {n}");

        let mut broken = cert;
        broken.conclusion.push('!');
        assert!(!verify_certificate(&broken), "conclusion edit undetected at n = {n}");
    }
    pass("criterion 7 — certificates generate and verify for all odd 15..=10001 under 10 s, mutations rejected");
}

#[test]
fn criterion_8_correlation_polynomial_matches_the_profile() {
    let mut rng = StdRng::seed_from_u64(1308);
    for round in 0..10_000 {
        let n = 2 * rng.random_range(1..=31) + 1; // odd 3..=63
        let seq = random_sequence(&mut rng, n);
        let q = autocorrelation_polynomial(&seq).expect("length is odd");
        let profile = seq.autocorrelation();

        // Coefficient of z^(n-1±k) is c_k: the palindromized profile.
        assert_eq!(q.degree(), Some(2 * n - 2), "degree in round {round}");
        for k in 0..n {
            let c = BigInt::from(profile.c(k));
            assert_eq!(q.coeff(n - 1 + k), c, "upper coefficient k = {k} in round {round}");
            assert_eq!(q.coeff(n - 1 - k), c, "lower coefficient k = {k} in round {round}");
        }

        let p = IntPolynomial::from_sequence(&seq);
        let p1 = p.eval_at_one();
        assert_eq!(q.eval_at_one(), &p1 * &p1, "q(1) = p(1)^2 in round {round}");
    }
    pass("criterion 8 — correlation polynomial equals the palindromized profile, q(1) = p(1)^2");
}
