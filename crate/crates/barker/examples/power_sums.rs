//! Newton power sums, two ways.
//!
//! First on a polynomial with known roots, where the sums can be checked by
//! raising the roots directly; then on the length-13 Barker sequence, whose
//! correlation polynomial forces the striking pattern S_even = -2, S_odd = 0
//! (all 24 roots "average out" to almost nothing, exponent after exponent).
//!
//!     cargo run --example power_sums

use barker::newton::{correlation_pattern, power_sums_monic, sequence_pattern};
use barker::poly::IntPolynomial;
use barker::seq::LittlewoodSeq;

fn main() {
    // (z - 1)(z - 2)(z - 3): power sums must be 1^k + 2^k + 3^k.
    let p = IntPolynomial::from_i64_coeffs(&[-6, 11, -6, 1]);
    let sums = power_sums_monic(&p, 5).unwrap();
    println!("p = {p}");
    for mu in 1..=5 {
        let direct: i64 = [1i64, 2, 3].iter().map(|r| r.pow(mu as u32)).sum();
        println!("  s_{mu} = {}   (direct: {direct})", sums.get(mu));
        assert_eq!(*sums.get(mu), direct.into());
    }

    let b13: LittlewoodSeq = "+++++--++-+-+".parse().unwrap();
    println!("\nBarker 13: {b13}");

    let corr = correlation_pattern(&b13).unwrap();
    print!("  S_mu (correlation polynomial):");
    for mu in 1..=corr.series.len() {
        print!(" {}", corr.series.get(mu));
    }
    println!("\n  pattern S_2k = -2, S_odd = 0: {}", if corr.passed() { "holds" } else { "broken" });

    let seq_pat = sequence_pattern(&b13).unwrap();
    print!("  s_mu (sequence polynomial):   ");
    for mu in 1..=seq_pat.series.len() {
        print!(" {}", seq_pat.series.get(mu));
    }
    println!();
    println!("  s_1 = {}   (equals -a_2)", seq_pat.s1);
    println!(
        "  pattern s_2k = -1 with 2 s_mu = S_mu: {}",
        if seq_pat.passed() { "holds" } else { "broken" }
    );
}
