//! Command-line front end.
//!
//! Machine output goes to stdout (or `--out FILE`); progress and timing lines
//! go to stderr. Exit codes: 0 for success or a passing verdict, 1 when a
//! check or verification comes back false, 2 for usage and domain errors.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read as _, Write as _};
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cert::{nonexistence_certificate, verify_certificate_detailed, NonexistenceCertificate};
use crate::manifest::RunManifest;
use crate::newton::{correlation_pattern, power_sums, sequence_pattern, PowerSumSeries, SeriesSource};
use crate::poly::{autocorrelation_polynomial, correlation_structure, IntPolynomial};
use crate::search::{
    exhaustive_search, pruned_search, psl_search, range_scan, RuleSet, ScanMode, SearchMode,
    SearchOptions, SearchReport,
};
use crate::seq::LittlewoodSeq;

#[derive(Parser)]
#[command(
    name = "barker",
    version,
    about = "Exact verification and search toolkit for Barker sequences",
    propagate_version = true
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the primary output to a file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Write a run manifest with input/output digests (optionally to an
    /// explicit path; default is beside --out, else barker-manifest.json)
    #[arg(long, global = true, value_name = "PATH", num_args = 0..=1, require_equals = true)]
    manifest: Option<Option<PathBuf>>,

    /// Worker threads for search commands (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,

    /// Reserved for stochastic extensions; recorded in manifests, unused by
    /// the exact commands
    #[arg(long, global = true, value_name = "SEED")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Pruned for odd lengths, exhaustive for even ones
    Auto,
    Exhaustive,
    Pruned,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SourceArg {
    /// Sequence polynomial
    P,
    /// Correlation polynomial
    Q,
}

#[derive(Subcommand)]
enum Command {
    /// Aperiodic autocorrelation profile of a ±1 sequence
    Autocorr {
        /// Signs (+++-+), bits (11101), CSV (1,1,1,-1,1), @FILE, or - for stdin
        sequence: String,
    },
    /// Run the identity and structure suite; exit 1 if an applicable check fails
    Check {
        sequence: String,
    },
    /// Find all Barker sequences of one length
    Search {
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        /// Report raw sequences instead of one representative per symmetry class
        #[arg(long)]
        raw: bool,
        /// Lift the default length ceiling of 30
        #[arg(long, value_name = "N")]
        ceiling: Option<usize>,
        /// Disable the skew completion rule (pruned mode)
        #[arg(long)]
        no_skew_fix: bool,
        /// Disable the even-lag value rule (pruned mode)
        #[arg(long)]
        no_even_lag: bool,
        /// Disable the odd-lag mod-4 rule (pruned mode)
        #[arg(long)]
        no_odd_mod4: bool,
        /// Disable the lag magnitude bound (pruned mode)
        #[arg(long)]
        no_lag_bound: bool,
    },
    /// Census over an inclusive range of lengths, e.g. 1..24
    Scan {
        range: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        #[arg(long)]
        raw: bool,
        #[arg(long, value_name = "N")]
        ceiling: Option<usize>,
    },
    /// Minimal peak sidelobe level among all ±1 sequences of one length
    Psl {
        n: usize,
        #[arg(long)]
        raw: bool,
        #[arg(long, value_name = "N")]
        ceiling: Option<usize>,
    },
    /// Emit (or verify, with --verify) a nonexistence certificate for an odd
    /// length above 13
    Certificate {
        n: Option<usize>,
        /// Verify an existing certificate file instead of generating one
        #[arg(long, value_name = "FILE")]
        verify: Option<PathBuf>,
    },
    /// Newton power sums of the sequence polynomial (or the correlation
    /// polynomial with --source q)
    PowerSums {
        sequence: String,
        /// How many sums to compute
        count: usize,
        #[arg(long, value_enum, default_value_t = SourceArg::P)]
        source: SourceArg,
        /// Also reduce the sums modulo this value
        #[arg(long = "mod", value_name = "P")]
        modulus: Option<u64>,
    },
    /// Canonical symmetry-class representative and the full orbit
    Canon {
        sequence: String,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    }
}

fn execute(cli: Cli) -> Result<i32> {
    let start = Instant::now();
    let mut inputs: Vec<(String, Vec<u8>)> = Vec::new();
    let format = cli.format;

    let (bytes, exit) = match &cli.command {
        Command::Autocorr { sequence } => {
            let seq = parse_sequence(sequence, &mut inputs)?;
            (cmd_autocorr(&seq, format)?, 0)
        }
        Command::Check { sequence } => {
            let seq = parse_sequence(sequence, &mut inputs)?;
            cmd_check(&seq, format)?
        }
        Command::Search { n, mode, raw, ceiling, no_skew_fix, no_even_lag, no_odd_mod4, no_lag_bound } => {
            let rules = RuleSet {
                skew_fix: !no_skew_fix,
                even_lag_value: !no_even_lag,
                odd_lag_mod4: !no_odd_mod4,
                partial_bound: !no_lag_bound,
            };
            let options = build_options(cli.workers, *raw, *ceiling, rules);
            let report = match mode {
                ModeArg::Exhaustive => exhaustive_search(*n, &options)?,
                ModeArg::Pruned => pruned_search(*n, &options)?,
                ModeArg::Auto if n % 2 == 1 => pruned_search(*n, &options)?,
                ModeArg::Auto => exhaustive_search(*n, &options)?,
            };
            eprintln!("TIMINGS search n={}: {:.3}s", n, report.wall_time.as_secs_f64());
            (cmd_search_output(&report, format)?, 0)
        }
        Command::Scan { range, mode, raw, ceiling } => {
            let (lo, hi) = parse_range(range)?;
            let options = build_options(cli.workers, *raw, *ceiling, RuleSet::all());
            let scan_mode = match mode {
                ModeArg::Auto => ScanMode::Auto,
                ModeArg::Exhaustive => ScanMode::Exhaustive,
                ModeArg::Pruned => ScanMode::Pruned,
            };
            let rows = range_scan(lo, hi, scan_mode, &options)?;
            let total: f64 = rows.iter().map(|r| r.wall_time.as_secs_f64()).sum();
            eprintln!("TIMINGS scan {lo}..{hi}: {total:.3}s");
            (cmd_scan_output(&rows, format)?, 0)
        }
        Command::Psl { n, raw, ceiling } => {
            let options = build_options(cli.workers, *raw, *ceiling, RuleSet::all());
            let report = psl_search(*n, &options)?;
            eprintln!("TIMINGS psl n={}: {:.3}s", n, report.wall_time.as_secs_f64());
            (cmd_psl_output(&report, format)?, 0)
        }
        Command::Certificate { n, verify } => cmd_certificate(*n, verify.as_deref(), format, &mut inputs, start)?,
        Command::PowerSums { sequence, count, source, modulus } => {
            let seq = parse_sequence(sequence, &mut inputs)?;
            (cmd_power_sums(&seq, *count, *source, *modulus, format)?, 0)
        }
        Command::Canon { sequence } => {
            let seq = parse_sequence(sequence, &mut inputs)?;
            (cmd_canon(&seq, format)?, 0)
        }
    };

    match &cli.out {
        Some(path) => fs::write(path, &bytes).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().write_all(&bytes).context("writing stdout")?,
    }

    if let Some(choice) = &cli.manifest {
        write_manifest(&cli, choice, &inputs, &bytes, start)?;
    }

    Ok(exit)
}

fn build_options(
    workers: Option<usize>,
    raw: bool,
    ceiling: Option<usize>,
    rules: RuleSet,
) -> SearchOptions {
    let mut options = SearchOptions { canonical: !raw, workers, rules, ..SearchOptions::default() };
    if let Some(c) = ceiling {
        options.ceiling = c;
    }
    options
}

fn resolve_input(raw: &str, inputs: &mut Vec<(String, Vec<u8>)>) -> Result<String> {
    let (label, text) = if raw == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        ("<stdin>".to_string(), buf)
    } else if let Some(path) = raw.strip_prefix('@') {
        (path.to_string(), fs::read_to_string(path).with_context(|| format!("reading {path}"))?)
    } else {
        ("<arg>".to_string(), raw.to_string())
    };
    inputs.push((label, text.clone().into_bytes()));
    Ok(text)
}

fn parse_sequence(raw: &str, inputs: &mut Vec<(String, Vec<u8>)>) -> Result<LittlewoodSeq> {
    let text = resolve_input(raw, inputs)?;
    text.trim().parse::<LittlewoodSeq>().map_err(|e| anyhow!("{e}"))
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let t = text.trim();
    let parse_end = |s: &str, what: &str| -> Result<usize> {
        s.trim().parse().with_context(|| format!("bad {what} in range '{t}'"))
    };
    if let Some((lo, hi)) = t.split_once("..=").or_else(|| t.split_once("..")) {
        Ok((parse_end(lo, "start")?, parse_end(hi, "end")?))
    } else {
        let n = parse_end(t, "length")?;
        Ok((n, n))
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json_bytes<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

fn cmd_autocorr(seq: &LittlewoodSeq, format: Format) -> Result<Vec<u8>> {
    let profile = seq.autocorrelation();
    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "sequence: {seq}  (n = {})", seq.len())?;
            writeln!(out, "{:>4}  {:>6}", "k", "c_k")?;
            for (k, value) in profile.values().iter().enumerate() {
                writeln!(out, "{k:>4}  {value:>6}")?;
            }
            writeln!(out, "peak sidelobe: {}", profile.peak_sidelobe())?;
            Ok(out.into_bytes())
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                sequence: String,
                n: usize,
                values: &'a [i64],
                peak_sidelobe: i64,
            }
            json_bytes(&Out {
                sequence: seq.to_string(),
                n: seq.len(),
                values: profile.values(),
                peak_sidelobe: profile.peak_sidelobe(),
            })
        }
        Format::Csv => Ok(profile.to_csv().into_bytes()),
    }
}

#[derive(Debug, Serialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Serialize)]
struct CheckRow {
    check: &'static str,
    status: CheckStatus,
    detail: String,
}

fn row_from_bool(check: &'static str, ok: bool, detail: String) -> CheckRow {
    CheckRow { check, status: if ok { CheckStatus::Pass } else { CheckStatus::Fail }, detail }
}

fn check_rows(seq: &LittlewoodSeq) -> Vec<CheckRow> {
    let n = seq.len();
    let profile = seq.autocorrelation();
    let mut rows = Vec::new();

    rows.push(row_from_bool(
        "barker-bound",
        seq.is_barker(),
        format!("peak sidelobe {}", profile.peak_sidelobe()),
    ));

    let parity_ok = (1..n).all(|k| seq.lag_parity_identity(k).expect("k < n"));
    rows.push(row_from_bool(
        "lag-parity",
        parity_ok,
        if n > 1 { format!("{} lags checked", n - 1) } else { "no lags".to_string() },
    ));

    rows.push(match seq.fold_mod4_identity() {
        Ok(ok) => row_from_bool("mod4-fold", ok, "c_k + c_(n-k) ≡ n (mod 4)".to_string()),
        Err(e) => CheckRow { check: "mod4-fold", status: CheckStatus::Skip, detail: e.to_string() },
    });

    rows.push(match seq.odd_length_structure() {
        Ok(report) => row_from_bool(
            "odd-structure",
            report.passed(),
            format!("even lags = {}, odd lags = 0", report.expected_even_value),
        ),
        Err(e) => CheckRow { check: "odd-structure", status: CheckStatus::Skip, detail: e.to_string() },
    });

    rows.push(match seq.is_skew_symmetric() {
        Ok(ok) => row_from_bool("skew-symmetry", ok, "a_(k+1) a_(n-k) = (-1)^(m+k)".to_string()),
        Err(e) => CheckRow { check: "skew-symmetry", status: CheckStatus::Skip, detail: e.to_string() },
    });

    rows.push(match seq.alternating_sum_identity() {
        Ok(ok) => row_from_bool("alternating-sum", ok, "half-window alternating sums".to_string()),
        Err(e) => CheckRow { check: "alternating-sum", status: CheckStatus::Skip, detail: e.to_string() },
    });

    rows.push(match seq.index_doubling_identity() {
        Ok(ok) => row_from_bool("index-doubling", ok, "a_k a_(k+1) = a_(2k) a_(2k+1)".to_string()),
        Err(e) => CheckRow { check: "index-doubling", status: CheckStatus::Skip, detail: e.to_string() },
    });

    rows.push(match correlation_structure(seq) {
        Ok(report) => row_from_bool(
            "correlation-structure",
            report.passed(),
            match &report.first_offense {
                None => "q = (-1)^m p(z) p(-z), coefficient column checked".to_string(),
                Some(offense) => format!("first offense: {offense:?}"),
            },
        ),
        Err(e) => {
            CheckRow { check: "correlation-structure", status: CheckStatus::Skip, detail: e.to_string() }
        }
    });

    rows.push(match correlation_pattern(seq) {
        Ok(report) => row_from_bool(
            "even-power-sums",
            report.passed(),
            "S_(2k) = -2 for 2k ≤ 2m-2, odd S vanish".to_string(),
        ),
        Err(e) => CheckRow { check: "even-power-sums", status: CheckStatus::Skip, detail: e.to_string() },
    });

    rows.push(match sequence_pattern(seq) {
        Ok(report) => row_from_bool(
            "sequence-power-sums",
            report.passed(),
            format!(
                "s_(2k) = -1 and 2 s_mu = S_mu{}",
                if report.negated { " (input negated first)" } else { "" }
            ),
        ),
        Err(e) => {
            CheckRow { check: "sequence-power-sums", status: CheckStatus::Skip, detail: e.to_string() }
        }
    });

    rows
}

fn cmd_check(seq: &LittlewoodSeq, format: Format) -> Result<(Vec<u8>, i32)> {
    let rows = check_rows(seq);
    let failed = rows.iter().any(|r| r.status == CheckStatus::Fail);
    let verdict = if failed { "FAIL" } else { "PASS" };

    let bytes = match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "sequence: {seq}  (n = {})", seq.len())?;
            for row in &rows {
                let tag = match row.status {
                    CheckStatus::Pass => "PASS",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Skip => "SKIP",
                };
                writeln!(out, "{tag}  {:<22}  {}", row.check, row.detail)?;
            }
            writeln!(out, "verdict: {verdict}")?;
            out.into_bytes()
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                sequence: String,
                n: usize,
                rows: &'a [CheckRow],
                verdict: &'static str,
            }
            json_bytes(&Out {
                sequence: seq.to_string(),
                n: seq.len(),
                rows: &rows,
                verdict: if failed { "fail" } else { "pass" },
            })?
        }
        Format::Csv => {
            let mut out = String::from("check,status,detail\n");
            for row in &rows {
                let status = match row.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "fail",
                    CheckStatus::Skip => "skip",
                };
                writeln!(out, "{},{},{}", row.check, status, csv_field(&row.detail))?;
            }
            out.into_bytes()
        }
    };
    Ok((bytes, i32::from(failed)))
}

fn mode_name(mode: SearchMode) -> &'static str {
    match mode {
        SearchMode::Exhaustive => "exhaustive",
        SearchMode::Pruned => "pruned",
    }
}

fn cmd_search_output(report: &SearchReport, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "n = {}  mode = {}  representation = {}",
                report.n,
                mode_name(report.mode),
                if report.canonical { "canonical classes" } else { "raw sequences" }
            )?;
            writeln!(out, "found {}:", report.found.len())?;
            for seq in &report.found {
                writeln!(out, "  {seq}")?;
            }
            writeln!(out, "nodes explored: {}", report.nodes_explored)?;
            writeln!(
                out,
                "prunes: lag bound {}, odd mod-4 {}, even value {}",
                report.prune_stats.partial_bound,
                report.prune_stats.odd_lag_mod4,
                report.prune_stats.even_lag_value
            )?;
            Ok(out.into_bytes())
        }
        Format::Json => json_bytes(report),
        Format::Csv => {
            let mut out = String::from("sequence\n");
            for seq in &report.found {
                writeln!(out, "{seq}")?;
            }
            Ok(out.into_bytes())
        }
    }
}

fn cmd_scan_output(rows: &[SearchReport], format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "{:>4}  {:<10}  {:>6}  {:>12}  example", "n", "mode", "found", "nodes")?;
            for row in rows {
                let example = row.found.first().map_or("-".to_string(), |s| s.to_string());
                writeln!(
                    out,
                    "{:>4}  {:<10}  {:>6}  {:>12}  {}",
                    row.n,
                    mode_name(row.mode),
                    row.found.len(),
                    row.nodes_explored,
                    example
                )?;
            }
            Ok(out.into_bytes())
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                n: usize,
                mode: SearchMode,
                count: usize,
                found: &'a [LittlewoodSeq],
                nodes_explored: u64,
            }
            let projected: Vec<Row> = rows
                .iter()
                .map(|r| Row {
                    n: r.n,
                    mode: r.mode,
                    count: r.found.len(),
                    found: &r.found,
                    nodes_explored: r.nodes_explored,
                })
                .collect();
            json_bytes(&projected)
        }
        Format::Csv => {
            let mut out = String::from("n,mode,found,nodes,example\n");
            for row in rows {
                let example = row.found.first().map_or(String::new(), |s| s.to_string());
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    row.n,
                    mode_name(row.mode),
                    row.found.len(),
                    row.nodes_explored,
                    example
                )?;
            }
            Ok(out.into_bytes())
        }
    }
}

fn cmd_psl_output(report: &crate::search::PslReport, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "n = {}  minimal peak sidelobe = {}", report.n, report.psl)?;
            writeln!(out, "sequences attaining it: {} raw, listed: {}", report.matching, report.witnesses.len())?;
            for seq in &report.witnesses {
                writeln!(out, "  {seq}")?;
            }
            Ok(out.into_bytes())
        }
        Format::Json => json_bytes(report),
        Format::Csv => {
            let mut out = String::from("sequence\n");
            for seq in &report.witnesses {
                writeln!(out, "{seq}")?;
            }
            Ok(out.into_bytes())
        }
    }
}

fn cmd_certificate(
    n: Option<usize>,
    verify: Option<&std::path::Path>,
    format: Format,
    inputs: &mut Vec<(String, Vec<u8>)>,
    start: Instant,
) -> Result<(Vec<u8>, i32)> {
    match (n, verify) {
        (Some(n), None) => {
            if format == Format::Csv {
                bail!("csv output is not available for certificates");
            }
            let cert = nonexistence_certificate(n)?;
            eprintln!("TIMINGS certificate n={n}: {:.3}s", start.elapsed().as_secs_f64());
            Ok((json_bytes(&cert)?, 0))
        }
        (n, Some(path)) => {
            let raw = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
            inputs.push((path.display().to_string(), raw.clone()));
            let cert: NonexistenceCertificate = serde_json::from_slice(&raw)
                .with_context(|| format!("parsing {}", path.display()))?;
            let mut flaw = verify_certificate_detailed(&cert).err().map(|f| f.to_string());
            if flaw.is_none() {
                if let Some(expected) = n {
                    if cert.n != expected {
                        flaw = Some(format!("certificate covers n = {}, expected {expected}", cert.n));
                    }
                }
            }
            let valid = flaw.is_none();
            let bytes = match format {
                Format::Text => {
                    let mut out = String::new();
                    match &flaw {
                        None => writeln!(out, "certificate for n = {}: VALID ({} records)", cert.n, cert.records.len())?,
                        Some(reason) => writeln!(out, "certificate for n = {}: INVALID — {reason}", cert.n)?,
                    }
                    out.into_bytes()
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct Out {
                        n: usize,
                        records: usize,
                        valid: bool,
                        #[serde(skip_serializing_if = "Option::is_none")]
                        flaw: Option<String>,
                    }
                    json_bytes(&Out { n: cert.n, records: cert.records.len(), valid, flaw: flaw.clone() })?
                }
                Format::Csv => bail!("csv output is not available for certificates"),
            };
            Ok((bytes, i32::from(!valid)))
        }
        (None, None) => bail!("provide a length to generate, or --verify FILE to check"),
    }
}

fn cmd_power_sums(
    seq: &LittlewoodSeq,
    count: usize,
    source: SourceArg,
    modulus: Option<u64>,
    format: Format,
) -> Result<Vec<u8>> {
    let (poly, tag, label) = match source {
        SourceArg::P => (IntPolynomial::from_sequence(seq), SeriesSource::SequencePolynomial, "s"),
        SourceArg::Q => (autocorrelation_polynomial(seq)?, SeriesSource::CorrelationPolynomial, "S"),
    };
    let series = power_sums(&poly, count, tag)?;
    let residues = modulus.map(|m| series.residues_mod(m)).transpose()?;

    match format {
        Format::Text => {
            let mut out = String::new();
            let name = match source {
                SourceArg::P => "sequence polynomial (p)",
                SourceArg::Q => "correlation polynomial (q)",
            };
            writeln!(out, "source: {name}")?;
            for mu in 1..=series.len() {
                match (&residues, modulus) {
                    (Some(r), Some(m)) => {
                        writeln!(out, "{label}_{mu} = {}  (mod {m}: {})", series.get(mu), r[mu - 1])?
                    }
                    _ => writeln!(out, "{label}_{mu} = {}", series.get(mu))?,
                }
            }
            Ok(out.into_bytes())
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                series: &'a PowerSumSeries,
                #[serde(skip_serializing_if = "Option::is_none")]
                modulus: Option<u64>,
                #[serde(skip_serializing_if = "Option::is_none")]
                residues: Option<Vec<u64>>,
            }
            json_bytes(&Out { series: &series, modulus, residues })
        }
        Format::Csv => {
            let mut out = String::new();
            match &residues {
                Some(r) => {
                    writeln!(out, "mu,value,residue")?;
                    for mu in 1..=series.len() {
                        writeln!(out, "{mu},{},{}", series.get(mu), r[mu - 1])?;
                    }
                }
                None => {
                    writeln!(out, "mu,value")?;
                    for mu in 1..=series.len() {
                        writeln!(out, "{mu},{}", series.get(mu))?;
                    }
                }
            }
            Ok(out.into_bytes())
        }
    }
}

fn cmd_canon(seq: &LittlewoodSeq, format: Format) -> Result<Vec<u8>> {
    let canonical = seq.canonicalize();
    let orbit: Vec<LittlewoodSeq> = {
        let set: std::collections::BTreeSet<LittlewoodSeq> = seq.orbit().into_iter().collect();
        set.into_iter().collect()
    };
    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "input:     {seq}")?;
            writeln!(out, "canonical: {canonical}")?;
            writeln!(out, "orbit ({} distinct):", orbit.len())?;
            for member in &orbit {
                writeln!(out, "  {member}")?;
            }
            Ok(out.into_bytes())
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                input: String,
                canonical: String,
                orbit: &'a [LittlewoodSeq],
            }
            json_bytes(&Out {
                input: seq.to_string(),
                canonical: canonical.to_string(),
                orbit: &orbit,
            })
        }
        Format::Csv => {
            let mut out = String::from("sequence\n");
            for member in &orbit {
                writeln!(out, "{member}")?;
            }
            Ok(out.into_bytes())
        }
    }
}

fn write_manifest(
    cli: &Cli,
    choice: &Option<PathBuf>,
    inputs: &[(String, Vec<u8>)],
    output_bytes: &[u8],
    start: Instant,
) -> Result<()> {
    let mut manifest = RunManifest::new(std::env::args());
    for (label, data) in inputs {
        manifest.record_input_bytes(label, data);
    }
    match &cli.out {
        Some(path) => manifest.record_output_file(path)?,
        None => manifest.record_output_bytes("<stdout>", output_bytes),
    }
    manifest.elapsed_ms = start.elapsed().as_millis() as u64;
    let target = match choice {
        Some(path) => path.clone(),
        None => match &cli.out {
            Some(out) => RunManifest::sidecar_path(out),
            None => PathBuf::from("barker-manifest.json"),
        },
    };
    manifest.write_to(&target).with_context(|| format!("writing {}", target.display()))?;
    eprintln!("manifest: {}", target.display());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn ranges_parse_inclusively() {
        assert_eq!(parse_range("1..24").unwrap(), (1, 24));
        assert_eq!(parse_range("1..=24").unwrap(), (1, 24));
        assert_eq!(parse_range(" 7 .. 9 ").unwrap(), (7, 9));
        assert_eq!(parse_range("13").unwrap(), (13, 13));
        assert!(parse_range("a..b").is_err());
        assert!(parse_range("..5").is_err());
    }

    #[test]
    fn csv_fields_escape_commas_and_quotes() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn check_rows_pass_on_a_barker_sequence() {
        let seq: LittlewoodSeq = "+++++--++-+-+".parse().unwrap();
        let rows = check_rows(&seq);
        assert!(rows.iter().all(|r| r.status == CheckStatus::Pass), "all applicable checks pass");
        assert_eq!(rows.len(), 10);
    }

    #[test]
    fn check_rows_skip_odd_structure_for_even_lengths() {
        let seq: LittlewoodSeq = "++-+".parse().unwrap();
        let rows = check_rows(&seq);
        let by_name = |name: &str| rows.iter().find(|r| r.check == name).unwrap();
        assert_eq!(by_name("barker-bound").status, CheckStatus::Pass);
        assert_eq!(by_name("odd-structure").status, CheckStatus::Skip);
        assert_eq!(by_name("skew-symmetry").status, CheckStatus::Skip);
        assert!(!rows.iter().any(|r| r.status == CheckStatus::Fail));
    }

    #[test]
    fn check_rows_fail_on_a_non_barker_sequence() {
        let seq: LittlewoodSeq = "+++++".parse().unwrap();
        let rows = check_rows(&seq);
        assert_eq!(rows[0].check, "barker-bound");
        assert_eq!(rows[0].status, CheckStatus::Fail);
    }
}
