//! Cross-validation of the two search strategies, with node counts.
//!
//! The pruned walk fixes entry pairs outside-in, derives the top entry of
//! each pair from the skew identity, and tests every freshly completed lag;
//! the exhaustive walk just tries all 2^n bit patterns. On odd lengths they
//! must find the same sequences — the skew identity is a theorem, not a
//! heuristic.
//!
//!     cargo run --example pruned_vs_exhaustive

use barker::search::{exhaustive_search, pruned_search, SearchOptions};

fn main() {
    let options = SearchOptions::default();

    println!(
        "{:>4}  {:>14} {:>14}  {:>9}  agree",
        "n", "pruned nodes", "exhaustive", "speedup"
    );
    for n in (5..=25).step_by(2) {
        let pruned = pruned_search(n, &options).unwrap();
        let exhaustive = exhaustive_search(n, &options).unwrap();
        let agree = pruned.found == exhaustive.found;
        println!(
            "{n:>4}  {:>14} {:>14}  {:>8.1}x  {}",
            pruned.nodes_explored,
            exhaustive.nodes_explored,
            exhaustive.nodes_explored as f64 / pruned.nodes_explored as f64,
            if agree { "yes" } else { "NO" }
        );
        assert!(agree, "search strategies disagree at n = {n}");
    }

    let p21 = pruned_search(21, &options).unwrap();
    println!(
        "\nrule prunes at n = 21: lag bound {}, odd mod-4 {}, even value {}",
        p21.prune_stats.partial_bound, p21.prune_stats.odd_lag_mod4, p21.prune_stats.even_lag_value
    );
}
