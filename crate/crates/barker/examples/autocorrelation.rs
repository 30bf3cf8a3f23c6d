//! Autocorrelation profiles and merit factors of the classic Barker
//! sequences.
//!
//!     cargo run --example autocorrelation

use barker::seq::LittlewoodSeq;

fn main() {
    let classics = ["++", "++-", "++-+", "+++-+", "+++--+-", "+++---+--+-", "+++++--++-+-+"];

    for text in classics {
        let seq: LittlewoodSeq = text.parse().expect("classic representatives parse");
        let profile = seq.autocorrelation();
        println!("{seq}  (n = {})", seq.len());
        println!("  profile: {:?}", profile.values());
        println!("  peak sidelobe: {}", profile.peak_sidelobe());
        println!("  merit factor: {}", seq.merit_factor().expect("n >= 2"));
        println!("  barker: {}", seq.is_barker());
        println!();
    }

    // The same arithmetic rejects a near miss: flip one sign of the
    // length-13 sequence and the bound breaks immediately.
    let spoiled: LittlewoodSeq = "+++++--++-+++".parse().unwrap();
    let profile = spoiled.autocorrelation();
    println!("{spoiled}  (one sign flipped)");
    println!("  peak sidelobe: {}", profile.peak_sidelobe());
    println!("  barker: {}", spoiled.is_barker());
}
