//! Census of Barker sequences by length: exhaustive below 25, pruned for the
//! odd lengths just above, one symmetry-class representative per hit.
//!
//!     cargo run --example barker_census [HI]
//!
//! HI defaults to 24 and is capped by the search ceiling of 30.

use barker::search::{range_scan, ScanMode, SearchOptions};

fn main() {
    let hi: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(24);
    let options = SearchOptions::default();

    println!("{:>4}  {:<10}  {:>5}  {:>12}  representative", "n", "mode", "found", "nodes");
    let rows = range_scan(1, hi, ScanMode::Auto, &options).expect("range is valid");
    for row in &rows {
        let rep = row.found.first().map_or(String::from("-"), |s| s.to_string());
        println!(
            "{:>4}  {:<10}  {:>5}  {:>12}  {}",
            row.n,
            match row.mode {
                barker::search::SearchMode::Exhaustive => "exhaustive",
                barker::search::SearchMode::Pruned => "pruned",
            },
            row.found.len(),
            row.nodes_explored,
            rep
        );
    }

    let lengths: Vec<usize> = rows.iter().filter(|r| !r.found.is_empty()).map(|r| r.n).collect();
    println!("\nlengths with Barker sequences: {lengths:?}");
    println!("(no further ones exist below 25; odd lengths above 13 are ruled out in general)");
}
