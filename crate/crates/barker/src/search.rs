//! Exhaustive and pruned search over ±1 sequences.
//!
//! Sequences are packed into a `u64` (bit `j−1` set ⟺ `a_j = +1`), so a lag
//! value is one xor, one mask and one popcount. The pruned mode walks the
//! sequence outside-in: level `t` fixes `a_t` and `a_{n+1−t}`, which completes
//! lag `n−t` exactly, and that fresh value is tested against the structure
//! rules before descending. For odd lengths the skew identity
//! `a_{k+1} a_{n−k} = (−1)^{m+k}` pins the top entry to the bottom one, so the
//! branching halves — and since every odd-length Barker sequence satisfies the
//! identity, nothing is lost.
//!
//! Results are deterministic regardless of worker count: the prefix of the
//! tree is walked serially, surviving states become parallel shards, and
//! shard outputs are recombined in tree order.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::seq::LittlewoodSeq;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("length 0 has no sequences to search")]
    ZeroLength,
    #[error("packed search supports lengths up to 63, got {0}")]
    TooLong(usize),
    #[error("length {n} is above the ceiling {ceiling}; raise it explicitly for longer runs")]
    CeilingExceeded { n: usize, ceiling: usize },
    #[error("pruned search uses the odd-length skew structure; length {0} is even")]
    EvenLength(usize),
    #[error("empty range: {lo}..={hi}")]
    BadRange { lo: usize, hi: usize },
}

/// Pruning rules for the level-by-level search. Each one is a necessary
/// condition on odd-length Barker sequences, so disabling rules changes node
/// counts but never the result (every leaf is re-checked in full).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RuleSet {
    /// Derive `a_{n+1−t}` from `a_t` via the skew identity.
    pub skew_fix: bool,
    /// Even lags must equal `(−1)^m`.
    pub even_lag_value: bool,
    /// Odd lags must vanish mod 4.
    pub odd_lag_mod4: bool,
    /// Every completed lag must have magnitude at most 1.
    pub partial_bound: bool,
}

impl RuleSet {
    pub fn all() -> Self {
        RuleSet { skew_fix: true, even_lag_value: true, odd_lag_mod4: true, partial_bound: true }
    }

    pub fn none() -> Self {
        RuleSet { skew_fix: false, even_lag_value: false, odd_lag_mod4: false, partial_bound: false }
    }
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet::all()
    }
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Report one representative per symmetry class instead of raw sequences.
    pub canonical: bool,
    /// Refuse lengths above this without an explicit override.
    pub ceiling: usize,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    pub rules: RuleSet,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { canonical: true, ceiling: 30, workers: None, rules: RuleSet::all() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Pruned,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PruneStats {
    pub partial_bound: u64,
    pub odd_lag_mod4: u64,
    pub even_lag_value: u64,
}

impl PruneStats {
    fn merge(&mut self, other: &PruneStats) {
        self.partial_bound += other.partial_bound;
        self.odd_lag_mod4 += other.odd_lag_mod4;
        self.even_lag_value += other.even_lag_value;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub mode: SearchMode,
    pub rules: RuleSet,
    pub canonical: bool,
    pub found: Vec<LittlewoodSeq>,
    pub nodes_explored: u64,
    pub prune_stats: PruneStats,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PslReport {
    pub n: usize,
    /// Smallest peak sidelobe over all 2^n sequences.
    pub psl: i64,
    /// Raw count of sequences attaining it.
    pub matching: u64,
    pub witnesses: Vec<LittlewoodSeq>,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanMode {
    /// Pruned for odd lengths, exhaustive for even ones.
    Auto,
    Exhaustive,
    /// Odd lengths only; even ones are skipped.
    Pruned,
}

fn mask(bits: usize) -> u64 {
    debug_assert!(bits < 64);
    (1u64 << bits) - 1
}

fn packed_lag(s: u64, n: usize, k: usize) -> i64 {
    let len = n - k;
    let diff = (s ^ (s >> k)) & mask(len);
    len as i64 - 2 * i64::from(diff.count_ones())
}

fn is_barker_packed(s: u64, n: usize) -> bool {
    (1..n).all(|k| packed_lag(s, n, k).abs() <= 1)
}

fn peak_sidelobe_packed(s: u64, n: usize) -> i64 {
    (1..n).map(|k| packed_lag(s, n, k).abs()).max().unwrap_or(0)
}

fn unpack_bits(s: u64, n: usize) -> LittlewoodSeq {
    let entries = (0..n).map(|i| if s >> i & 1 == 1 { 1 } else { -1 }).collect();
    LittlewoodSeq::from_entries(entries).expect("packed entries are ±1")
}

fn run_with_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .expect("worker pool")
            .install(f),
        None => f(),
    }
}

fn validate_length(n: usize, options: &SearchOptions) -> Result<(), SearchError> {
    if n == 0 {
        return Err(SearchError::ZeroLength);
    }
    if n > 63 {
        return Err(SearchError::TooLong(n));
    }
    if n > options.ceiling {
        return Err(SearchError::CeilingExceeded { n, ceiling: options.ceiling });
    }
    Ok(())
}

fn finalize_found(raw: Vec<LittlewoodSeq>, canonical: bool) -> Vec<LittlewoodSeq> {
    if canonical {
        let classes: BTreeSet<LittlewoodSeq> = raw.into_iter().map(|s| s.canonicalize()).collect();
        classes.into_iter().collect()
    } else {
        let mut sorted = raw;
        sorted.sort();
        sorted
    }
}

/// Test every one of the 2^n sequences with packed arithmetic.
pub fn exhaustive_search(n: usize, options: &SearchOptions) -> Result<SearchReport, SearchError> {
    validate_length(n, options)?;
    let start = Instant::now();
    let total: u64 = 1 << n;
    let chunk_count: u64 = 1 << n.min(10);
    let chunk_size = total / chunk_count;
    let raw: Vec<LittlewoodSeq> = run_with_pool(options.workers, || {
        (0..chunk_count)
            .into_par_iter()
            .map(|c| {
                (c * chunk_size..(c + 1) * chunk_size)
                    .filter(|&s| is_barker_packed(s, n))
                    .collect::<Vec<u64>>()
            })
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .map(|s| unpack_bits(s, n))
    .collect();
    Ok(SearchReport {
        n,
        mode: SearchMode::Exhaustive,
        rules: RuleSet::none(),
        canonical: options.canonical,
        found: finalize_found(raw, options.canonical),
        nodes_explored: total,
        prune_stats: PruneStats::default(),
        wall_time: start.elapsed(),
    })
}

struct DfsCtx {
    n: usize,
    m: usize,
    /// (−1)^m, the forced value of every even lag.
    sign_m: i64,
    rules: RuleSet,
}

#[derive(Default)]
struct DfsAcc {
    nodes: u64,
    stats: PruneStats,
    found: Vec<LittlewoodSeq>,
}

impl DfsCtx {
    fn new(n: usize, rules: RuleSet) -> Self {
        let m = (n - 1) / 2;
        DfsCtx { n, m, sign_m: if m % 2 == 0 { 1 } else { -1 }, rules }
    }

    /// Lag `n−t`, complete once levels `1..=t` are assigned.
    fn new_lag_value(&self, entries: &[i8], t: usize) -> i64 {
        let k = self.n - t;
        (1..=t)
            .map(|j| i64::from(entries[j - 1]) * i64::from(entries[j + k - 1]))
            .sum()
    }

    /// Apply the value rules to the freshly completed lag. `true` = keep going.
    fn admit(&self, entries: &[i8], t: usize, stats: &mut PruneStats) -> bool {
        let c = self.new_lag_value(entries, t);
        if self.rules.partial_bound && c.abs() > 1 {
            stats.partial_bound += 1;
            return false;
        }
        let lag_is_odd = (self.n - t) % 2 == 1;
        if lag_is_odd {
            if self.rules.odd_lag_mod4 && c.rem_euclid(4) != 0 {
                stats.odd_lag_mod4 += 1;
                return false;
            }
        } else if self.rules.even_lag_value && c != self.sign_m {
            stats.even_lag_value += 1;
            return false;
        }
        true
    }

    fn level_choices(&self, t: usize) -> Vec<(i8, i8)> {
        if self.rules.skew_fix {
            // a_{n+1−t} = (−1)^{m+t−1} a_t.
            let sign = if (self.m + t - 1) % 2 == 0 { 1 } else { -1 };
            vec![(-1, -sign), (1, sign)]
        } else {
            vec![(-1, -1), (-1, 1), (1, -1), (1, 1)]
        }
    }

    fn descend(&self, entries: &mut Vec<i8>, t: usize, acc: &mut DfsAcc) {
        if t > self.m {
            for center in [-1i8, 1] {
                entries[self.m] = center;
                acc.nodes += 1;
                let seq = LittlewoodSeq::from_entries(entries.clone()).expect("±1 entries");
                if seq.is_barker() {
                    acc.found.push(seq);
                }
            }
            entries[self.m] = 0;
            return;
        }
        for (lo, hi) in self.level_choices(t) {
            entries[t - 1] = lo;
            entries[self.n - t] = hi;
            acc.nodes += 1;
            if self.admit(entries, t, &mut acc.stats) {
                self.descend(entries, t + 1, acc);
            }
        }
        entries[t - 1] = 0;
        entries[self.n - t] = 0;
    }

    /// Walk levels `1..=w` serially, emitting each surviving state.
    fn collect_states(
        &self,
        entries: &mut Vec<i8>,
        t: usize,
        w: usize,
        acc: &mut DfsAcc,
        states: &mut Vec<Vec<i8>>,
    ) {
        if t > w {
            states.push(entries.clone());
            return;
        }
        for (lo, hi) in self.level_choices(t) {
            entries[t - 1] = lo;
            entries[self.n - t] = hi;
            acc.nodes += 1;
            if self.admit(entries, t, &mut acc.stats) {
                self.collect_states(entries, t + 1, w, acc, states);
            }
        }
        entries[t - 1] = 0;
        entries[self.n - t] = 0;
    }
}

/// Level-by-level search for odd lengths, testing every completed lag on the
/// way down and the full sequence at each leaf.
pub fn pruned_search(n: usize, options: &SearchOptions) -> Result<SearchReport, SearchError> {
    validate_length(n, options)?;
    if n % 2 == 0 {
        return Err(SearchError::EvenLength(n));
    }
    let start = Instant::now();
    let ctx = DfsCtx::new(n, options.rules);
    let shard_depth = ctx.m.min(if ctx.rules.skew_fix { 10 } else { 5 });

    let mut entries = vec![0i8; n];
    let mut main_acc = DfsAcc::default();
    let mut states = Vec::new();
    ctx.collect_states(&mut entries, 1, shard_depth, &mut main_acc, &mut states);

    let shard_results: Vec<DfsAcc> = run_with_pool(options.workers, || {
        states
            .into_par_iter()
            .map(|state| {
                let mut local = state;
                let mut acc = DfsAcc::default();
                ctx.descend(&mut local, shard_depth + 1, &mut acc);
                acc
            })
            .collect()
    });

    let mut nodes = main_acc.nodes;
    let mut stats = main_acc.stats;
    let mut raw = main_acc.found;
    for shard in shard_results {
        nodes += shard.nodes;
        stats.merge(&shard.stats);
        raw.extend(shard.found);
    }

    Ok(SearchReport {
        n,
        mode: SearchMode::Pruned,
        rules: options.rules,
        canonical: options.canonical,
        found: finalize_found(raw, options.canonical),
        nodes_explored: nodes,
        prune_stats: stats,
        wall_time: start.elapsed(),
    })
}

/// One report per length in `lo..=hi` under the given mode.
pub fn range_scan(
    lo: usize,
    hi: usize,
    mode: ScanMode,
    options: &SearchOptions,
) -> Result<Vec<SearchReport>, SearchError> {
    if lo == 0 || lo > hi {
        return Err(SearchError::BadRange { lo, hi });
    }
    let mut rows = Vec::new();
    for n in lo..=hi {
        let report = match mode {
            ScanMode::Exhaustive => exhaustive_search(n, options)?,
            ScanMode::Auto => {
                if n % 2 == 1 {
                    pruned_search(n, options)?
                } else {
                    exhaustive_search(n, options)?
                }
            }
            ScanMode::Pruned => {
                if n % 2 == 0 {
                    continue;
                }
                pruned_search(n, options)?
            }
        };
        rows.push(report);
    }
    Ok(rows)
}

/// Minimal peak sidelobe over all 2^n sequences, with its witnesses.
/// Two passes: a parallel min-reduce, then a collection sweep.
pub fn psl_search(n: usize, options: &SearchOptions) -> Result<PslReport, SearchError> {
    validate_length(n, options)?;
    let start = Instant::now();
    let total: u64 = 1 << n;
    let chunk_count: u64 = 1 << n.min(10);
    let chunk_size = total / chunk_count;

    let psl = run_with_pool(options.workers, || {
        (0..chunk_count)
            .into_par_iter()
            .map(|c| {
                (c * chunk_size..(c + 1) * chunk_size)
                    .map(|s| peak_sidelobe_packed(s, n))
                    .min()
                    .expect("chunks are nonempty")
            })
            .min()
            .expect("at least one chunk")
    });

    let matches: Vec<u64> = run_with_pool(options.workers, || {
        (0..chunk_count)
            .into_par_iter()
            .map(|c| {
                (c * chunk_size..(c + 1) * chunk_size)
                    .filter(|&s| peak_sidelobe_packed(s, n) == psl)
                    .collect::<Vec<u64>>()
            })
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();

    let matching = matches.len() as u64;
    let raw: Vec<LittlewoodSeq> = matches.into_iter().map(|s| unpack_bits(s, n)).collect();
    Ok(PslReport {
        n,
        psl,
        matching,
        witnesses: finalize_found(raw, options.canonical),
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    fn raw_opts() -> SearchOptions {
        SearchOptions { canonical: false, ..SearchOptions::default() }
    }

    #[test]
    fn census_matches_the_known_lengths() {
        let barker_lengths = [1, 2, 3, 4, 5, 7, 11, 13];
        for n in 1..=13 {
            let report = exhaustive_search(n, &opts()).unwrap();
            let expected = usize::from(barker_lengths.contains(&n));
            assert_eq!(report.found.len(), expected, "canonical classes at n = {n}");
            assert_eq!(report.nodes_explored, 1 << n);
        }
    }

    #[test]
    fn raw_counts_are_full_orbits() {
        // Odd lengths give 4, not 8: skew symmetry makes reversal coincide
        // with (possibly negated) alternation, halving the orbit.
        for (n, count) in [(1, 2), (2, 4), (3, 4), (4, 8), (5, 4), (6, 0), (13, 4)] {
            let report = exhaustive_search(n, &raw_opts()).unwrap();
            assert_eq!(report.found.len(), count, "raw sequences at n = {n}");
        }
    }

    #[test]
    fn canonical_census_contains_the_classic_representatives() {
        let report = exhaustive_search(13, &opts()).unwrap();
        let b13: LittlewoodSeq = "+++++--++-+-+".parse().unwrap();
        assert_eq!(report.found, vec![b13.canonicalize()]);
    }

    #[test]
    fn pruned_agrees_with_exhaustive_on_odd_lengths() {
        for n in (1..=13).step_by(2) {
            let pruned = pruned_search(n, &opts()).unwrap();
            let exhaustive = exhaustive_search(n, &opts()).unwrap();
            assert_eq!(pruned.found, exhaustive.found, "canonical sets at n = {n}");
            let pruned_raw = pruned_search(n, &raw_opts()).unwrap();
            let exhaustive_raw = exhaustive_search(n, &raw_opts()).unwrap();
            assert_eq!(pruned_raw.found, exhaustive_raw.found, "raw sets at n = {n}");
            assert!(pruned.nodes_explored <= exhaustive.nodes_explored);
        }
    }

    #[test]
    fn rule_subsets_change_nodes_not_results() {
        let all = pruned_search(11, &opts()).unwrap();
        let none = pruned_search(
            11,
            &SearchOptions { rules: RuleSet::none(), ..SearchOptions::default() },
        )
        .unwrap();
        assert_eq!(all.found, none.found);
        assert!(all.nodes_explored < none.nodes_explored);
    }

    #[test]
    fn pruned_finds_nothing_between_15_and_29() {
        for n in (15..=29).step_by(2) {
            let report = pruned_search(n, &opts()).unwrap();
            assert!(report.found.is_empty(), "n = {n}");
            assert!(
                report.nodes_explored < 1 << n,
                "pruning must beat enumeration at n = {n}"
            );
        }
    }

    #[test]
    fn worker_count_does_not_change_reports() {
        for workers in [Some(1), Some(4)] {
            let options = SearchOptions { workers, ..SearchOptions::default() };
            let pruned = pruned_search(17, &options).unwrap();
            let baseline = pruned_search(17, &opts()).unwrap();
            assert_eq!(pruned.found, baseline.found);
            assert_eq!(pruned.nodes_explored, baseline.nodes_explored);
            assert_eq!(pruned.prune_stats, baseline.prune_stats);
            let exhaustive = exhaustive_search(12, &options).unwrap();
            let exhaustive_base = exhaustive_search(12, &opts()).unwrap();
            assert_eq!(exhaustive.found, exhaustive_base.found);
        }
    }

    #[test]
    fn ceiling_guards_long_runs() {
        assert_eq!(
            pruned_search(31, &opts()),
            Err(SearchError::CeilingExceeded { n: 31, ceiling: 30 })
        );
        let lifted = SearchOptions { ceiling: 63, ..SearchOptions::default() };
        let report = pruned_search(31, &lifted).unwrap();
        assert!(report.found.is_empty());
        assert_eq!(exhaustive_search(0, &opts()), Err(SearchError::ZeroLength));
        assert_eq!(
            exhaustive_search(64, &SearchOptions { ceiling: 100, ..SearchOptions::default() }),
            Err(SearchError::TooLong(64))
        );
        assert_eq!(pruned_search(12, &opts()), Err(SearchError::EvenLength(12)));
    }

    #[test]
    fn scan_modes_cover_the_range() {
        let rows = range_scan(1, 8, ScanMode::Auto, &opts()).unwrap();
        assert_eq!(rows.len(), 8);
        for row in &rows {
            let expected_mode =
                if row.n % 2 == 1 { SearchMode::Pruned } else { SearchMode::Exhaustive };
            assert_eq!(row.mode, expected_mode, "n = {}", row.n);
            let check = exhaustive_search(row.n, &opts()).unwrap();
            assert_eq!(row.found, check.found, "n = {}", row.n);
        }
        let odd_rows = range_scan(15, 21, ScanMode::Pruned, &opts()).unwrap();
        assert_eq!(odd_rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![15, 17, 19, 21]);
        assert_eq!(range_scan(5, 3, ScanMode::Auto, &opts()), Err(SearchError::BadRange { lo: 5, hi: 3 }));
    }

    #[test]
    fn psl_reproduces_known_minima() {
        for (n, psl) in [(1, 0), (2, 1), (3, 1), (5, 1), (6, 2), (13, 1)] {
            let report = psl_search(n, &opts()).unwrap();
            assert_eq!(report.psl, psl, "n = {n}");
        }
        let b13: LittlewoodSeq = "+++++--++-+-+".parse().unwrap();
        let report = psl_search(13, &opts()).unwrap();
        assert_eq!(report.witnesses, vec![b13.canonicalize()]);
        assert_eq!(report.matching, 4);
    }

    #[test]
    fn search_report_serializes_without_timing() {
        let report = pruned_search(5, &opts()).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert!(json.get("wall_time").is_none());
        assert_eq!(json["mode"], "pruned");
        assert_eq!(json["found"][0], "---+-");
    }

    proptest! {
        #[test]
        fn packed_lags_match_direct_computation(bits in any::<u64>(), n in 1usize..=20) {
            let s = bits & mask(n);
            let seq = unpack_bits(s, n);
            prop_assert_eq!(is_barker_packed(s, n), seq.is_barker());
            let profile = seq.autocorrelation();
            for k in 1..n {
                prop_assert_eq!(packed_lag(s, n, k), profile.c(k));
            }
        }
    }
}
