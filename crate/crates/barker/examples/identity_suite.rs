//! The unconditional identities hold for *every* ±1 sequence, Barker or not.
//! This example sweeps all sequences up to length 12 and a batch of longer
//! random ones, recomputing both sides each time.
//!
//!     cargo run --example identity_suite

use barker::seq::LittlewoodSeq;

fn all_sequences(n: usize) -> impl Iterator<Item = LittlewoodSeq> {
    (0u64..1 << n).map(move |bits| {
        let entries = (0..n).map(|i| if bits >> i & 1 == 1 { 1 } else { -1 }).collect();
        LittlewoodSeq::from_entries(entries).unwrap()
    })
}

fn main() {
    let mut checked = 0u64;
    for n in 2..=12 {
        for seq in all_sequences(n) {
            for k in 1..n {
                assert!(seq.lag_parity_identity(k).unwrap(), "parity broke on {seq} at lag {k}");
            }
            assert!(seq.fold_mod4_identity().unwrap(), "fold broke on {seq}");
            checked += 1;
        }
    }
    println!("lag-parity and mod-4 fold identities verified on all {checked} sequences up to n = 12");

    // A cheap linear-congruential stream is plenty for a demo batch; the
    // acceptance suite uses a real RNG.
    let mut state = 0x2545F4914F6CDD1Du64;
    let mut longer = 0u64;
    for _ in 0..2_000 {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let n = 13 + (state >> 33) as usize % 50; // 13..=62
        let entries = (0..n)
            .map(|i| if state.rotate_left(i as u32) & 1 == 1 { 1 } else { -1 })
            .collect();
        let seq = LittlewoodSeq::from_entries(entries).unwrap();
        for k in 1..n {
            assert!(seq.lag_parity_identity(k).unwrap());
        }
        assert!(seq.fold_mod4_identity().unwrap());
        longer += 1;
    }
    println!("and on {longer} pseudorandom sequences with 13 <= n <= 62");
}
