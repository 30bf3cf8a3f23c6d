//! Symmetry orbits: negation, reversal and alternation all preserve the
//! Barker property, so search results are reported one representative per
//! orbit. Even lengths give orbits of size 8; odd Barker orbits collapse to
//! 4 because skew symmetry makes reversal coincide with (possibly negated)
//! alternation.
//!
//!     cargo run --example canonical_orbits

use std::collections::BTreeSet;

use barker::seq::LittlewoodSeq;

fn show(text: &str) {
    let seq: LittlewoodSeq = text.parse().unwrap();
    let distinct: BTreeSet<LittlewoodSeq> = seq.orbit().into_iter().collect();
    println!("{seq}  ->  canonical {}", seq.canonicalize());
    println!("  orbit ({} distinct):", distinct.len());
    for member in &distinct {
        let mark = if member == &seq.canonicalize() { "  <- representative" } else { "" };
        println!("    {member}{mark}");
    }

    // Every member canonicalizes to the same thing; that is the whole point.
    for member in &distinct {
        assert_eq!(member.canonicalize(), seq.canonicalize());
    }
    println!();
}

fn main() {
    show("++-+"); // even length: full orbit of 8
    show("+++-+"); // odd Barker: collapses to 4
    show("+++++--++-+-+");
}
