//! Minimal peak sidelobe level by length. Barker lengths are exactly the
//! rows where the minimum is 1; everywhere else the best any ±1 sequence can
//! do is 2 (in this range).
//!
//!     cargo run --example psl_table [HI]

use barker::search::{psl_search, SearchOptions};

fn main() {
    let hi: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(16);
    let options = SearchOptions::default();

    println!("{:>4}  {:>4}  {:>10}  witness", "n", "psl", "attaining");
    for n in 2..=hi {
        match psl_search(n, &options) {
            Ok(report) => {
                let witness = report.witnesses.first().map_or(String::new(), |s| s.to_string());
                println!("{n:>4}  {:>4}  {:>10}  {witness}", report.psl, report.matching);
            }
            Err(err) => {
                println!("{n:>4}  stopping: {err}");
                break;
            }
        }
    }
}
