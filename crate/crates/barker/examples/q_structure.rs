//! Structure of the correlation polynomial q = p·p* for odd-length Barker
//! sequences: its coefficient column is the autocorrelation profile laid out
//! as a palindrome, and skew symmetry factors it as (-1)^m p(z) p(-z).
//!
//!     cargo run --example q_structure

use barker::poly::{autocorrelation_polynomial, correlation_structure, IntPolynomial};
use barker::seq::LittlewoodSeq;

fn show(text: &str) {
    let seq: LittlewoodSeq = text.parse().unwrap();
    let n = seq.len();
    let p = IntPolynomial::from_sequence(&seq);
    let q = autocorrelation_polynomial(&seq).expect("odd length");

    println!("sequence {seq}  (n = {n})");
    println!("  p    = {p}");
    println!("  q    = {q}");
    println!("  q(1) = {}  and  p(1)^2 = {}", q.eval_at_one(), {
        let v = p.eval_at_one();
        &v * &v
    });

    match correlation_structure(&seq) {
        Ok(report) => {
            println!(
                "  p* = (-1)^m p(-z): {}   q = (-1)^m p(z) p(-z): {}",
                report.star_negation_identity, report.product_negation_identity
            );
            match report.first_offense {
                None => println!("  column pattern (odd coeffs 0, even coeffs {}): intact", report.expected_even_value),
                Some(offense) => println!("  column pattern breaks first at {offense:?}"),
            }
        }
        Err(err) => println!("  structure not applicable: {err}"),
    }
    println!();
}

fn main() {
    show("++-");
    show("+++-+");
    show("+++++--++-+-+");

    // A skew-symmetric impostor: the factorization identities still hold
    // (they only need skew symmetry), but the coefficient column gives it
    // away — the even coefficients are nowhere near ±1.
    show("++--+");
}
