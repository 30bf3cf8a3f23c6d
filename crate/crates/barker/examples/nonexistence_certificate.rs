//! Generate a nonexistence certificate, verify it from scratch, corrupt one
//! field and watch the verifier refuse it.
//!
//!     cargo run --example nonexistence_certificate [N]
//!
//! N must be odd and above 13 (default 15). The certificate walks every odd
//! candidate leading-run length p and records a case-specific contradiction:
//! an index pair forced both equal and opposite (CASE1-3), or a quadratic
//! inequality with no room left (CASE4-5).

use barker::cert::{
    classify_case, nonexistence_certificate, verify_certificate, verify_certificate_detailed,
    CaseWitness,
};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(15);

    let cert = match nonexistence_certificate(n) {
        Ok(cert) => cert,
        Err(err) => {
            eprintln!("cannot certify n = {n}: {err}");
            std::process::exit(2);
        }
    };

    println!("certificate for n = {n}: {} case records", cert.records.len());
    println!("{:>6}  {:>3} {:>3}  case    witness", "p", "u", "r");
    for record in &cert.records {
        let witness = match &record.witness {
            CaseWitness::Triples(w) => format!(
                "pair ({}, {}) vs mirror ({}, {}), blocks {}/{} within bound {}",
                w.contradiction_index,
                w.contradiction_index + 1,
                n - w.contradiction_index,
                n + 1 - w.contradiction_index,
                w.low_pair_block,
                w.high_pair_block,
                w.lemma_bound
            ),
            CaseWitness::Quadratic(w) => format!("{} evaluates to {}", w.inequality, w.value),
            CaseWitness::Bound(w) => format!("forces n <= {}", w.max_length),
        };
        println!("{:>6}  {:>3} {:>3}  {:?}   {witness}", record.p, record.u, record.r, record.case);
    }

    println!("\nfrom-scratch verification: {:?}", verify_certificate_detailed(&cert));

    let mut tampered = cert.clone();
    tampered.records[1].r += 1;
    println!("after bumping one r field: valid = {}", verify_certificate(&tampered));

    // classify_case is the per-p entry point if you only care about one run
    // length.
    let single = classify_case(n, 3).unwrap();
    println!("\nstandalone classification of (n, p) = ({n}, 3): {:?}", single.case);

    let json = serde_json::to_string_pretty(&cert).unwrap();
    println!("\nserialized size: {} bytes of JSON", json.len());
}
