//! Power sums of polynomial roots, computed from coefficients alone.
//!
//! Newton's identities give the root power sums of a polynomial as an integer
//! recurrence over its coefficients — no root finding, no floating point. With
//! coefficients read from the leading side (`a_1` = leading, `a_2` next, ...):
//!
//! ```text
//! a_1 s_μ + a_2 s_{μ−1} + ... + a_μ s_1 + μ a_{μ+1} = 0
//! ```
//!
//! Coefficients beyond the list are zero, which keeps the same recurrence
//! valid past the degree. Division only ever happens by the leading
//! coefficient, so for monic (`a_1 = 1`) or unit-leading (`a_1 = ±1`) input
//! every power sum is an exact integer.
//!
//! For a Barker sequence of odd length `n = 2m+1` two rigid patterns appear:
//! the correlation polynomial's root power sums satisfy `S_{2k} = −2` for
//! `k = 1, ..., m−1` (odd ones vanish), and the sequence polynomial's satisfy
//! `s_{2k} = −1` with `2 s_{2k} = S_{2k}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{autocorrelation_polynomial, IntPolynomial};
use crate::seq::LittlewoodSeq;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NewtonError {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("leading coefficient is not 1 or -1")]
    LeadingNotUnit,
    #[error("count must be at least 1")]
    CountZero,
    #[error("modulus {0} is too small (need >= 2)")]
    ModulusTooSmall(u64),
    #[error("length {0} is even; power-sum patterns need an odd length")]
    EvenLength(usize),
    #[error("length {n} is too short (need n >= {min})")]
    TooShort { n: usize, min: usize },
    #[error("sequence is not Barker: |c_{k}| = {magnitude} > 1")]
    NotBarker { k: usize, magnitude: i64 },
}

/// Which polynomial the series belongs to: the sequence polynomial `p`
/// (lower-case `s_μ`) or the correlation polynomial `p·p*` (upper-case `S_μ`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SeriesSource {
    #[serde(rename = "p")]
    SequencePolynomial,
    #[serde(rename = "q")]
    CorrelationPolynomial,
}

/// Root power sums for exponents `1..=len`, exact integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerSumSeries {
    source: SeriesSource,
    #[serde(with = "decimal_strings")]
    values: Vec<BigInt>,
}

impl PowerSumSeries {
    pub fn source(&self) -> SeriesSource {
        self.source
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// 1-based: `get(μ)` is the sum of μ-th root powers. Panics out of range.
    pub fn get(&self, mu: usize) -> &BigInt {
        assert!(mu >= 1 && mu <= self.values.len(), "exponent {mu} out of 1..={}", self.values.len());
        &self.values[mu - 1]
    }

    /// Least nonnegative residues of every entry.
    pub fn residues_mod(&self, modulus: u64) -> Result<Vec<u64>, NewtonError> {
        if modulus < 2 {
            return Err(NewtonError::ModulusTooSmall(modulus));
        }
        let m = BigInt::from(modulus);
        Ok(self
            .values
            .iter()
            .map(|v| v.mod_floor(&m).to_u64().expect("residue fits in u64"))
            .collect())
    }
}

mod decimal_strings {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(values: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(values.iter().map(BigInt::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<BigInt>, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|_| D::Error::custom(format!("bad power sum {s:?}"))))
            .collect()
    }
}

/// Shared recurrence. `coeff_desc(j)` is the coefficient `a_j` counted from the
/// leading side (1-based), zero past the list; `leading` is `a_1 = ±1`.
fn newton_recurrence(
    coeff_desc: impl Fn(usize) -> BigInt,
    leading: i64,
    count: usize,
) -> Vec<BigInt> {
    let mut sums: Vec<BigInt> = Vec::with_capacity(count);
    for mu in 1..=count {
        let mut acc = coeff_desc(mu + 1) * BigInt::from(mu as i64);
        for j in 2..=mu {
            acc += coeff_desc(j) * &sums[mu - j];
        }
        // a_1 s_μ + acc = 0 and 1/a_1 = a_1 for a_1 = ±1.
        sums.push(-acc * BigInt::from(leading));
    }
    sums
}

fn descending_coeff(p: &IntPolynomial, j: usize) -> BigInt {
    let degree = p.degree().expect("nonzero polynomial");
    if j >= 1 && j <= degree + 1 {
        p.coeff(degree + 1 - j)
    } else {
        BigInt::zero()
    }
}

/// Root power sums `s_1, ..., s_count` for any polynomial with leading
/// coefficient `±1`, tagged with the caller's source label. `count` may
/// exceed the degree; the recurrence continues with zero coefficients.
pub fn power_sums(
    p: &IntPolynomial,
    count: usize,
    source: SeriesSource,
) -> Result<PowerSumSeries, NewtonError> {
    let leading = match p.leading() {
        Some(c) if c.abs() == BigInt::from(1) => c.to_i64().expect("±1 fits"),
        _ => return Err(NewtonError::LeadingNotUnit),
    };
    if count == 0 {
        return Err(NewtonError::CountZero);
    }
    let values = newton_recurrence(|j| descending_coeff(p, j), leading, count);
    Ok(PowerSumSeries { source, values })
}

/// Power sums of a monic polynomial — the shape of a normalized sequence
/// polynomial, hence the `p` tag.
pub fn power_sums_monic(p: &IntPolynomial, count: usize) -> Result<PowerSumSeries, NewtonError> {
    if !p.is_monic() {
        return Err(NewtonError::NotMonic);
    }
    power_sums(p, count, SeriesSource::SequencePolynomial)
}

/// Power sums of a unit-leading polynomial under the `q` tag — the shape of a
/// correlation polynomial `p·p*`, whose leading coefficient is `a_1 a_n = ±1`.
pub fn power_sums_unit_leading(p: &IntPolynomial, count: usize) -> Result<PowerSumSeries, NewtonError> {
    power_sums(p, count, SeriesSource::CorrelationPolynomial)
}

fn require_odd_barker(seq: &LittlewoodSeq) -> Result<usize, NewtonError> {
    let n = seq.len();
    if n % 2 == 0 {
        return Err(NewtonError::EvenLength(n));
    }
    if n < 5 {
        return Err(NewtonError::TooShort { n, min: 5 });
    }
    let profile = seq.autocorrelation();
    if let Some(k) = (1..n).find(|&k| profile.c(k).abs() > 1) {
        return Err(NewtonError::NotBarker { k, magnitude: profile.c(k).abs() });
    }
    Ok((n - 1) / 2)
}

/// Outcome of [`correlation_pattern`]: the `S_μ` series with any exponents
/// that break the forced pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationPatternReport {
    pub m: usize,
    pub series: PowerSumSeries,
    /// Even exponents `2k ≤ 2m−2` where `S_{2k} ≠ −2`.
    pub even_violations: Vec<usize>,
    /// Odd exponents where `S_μ ≠ 0`.
    pub odd_violations: Vec<usize>,
}

impl CorrelationPatternReport {
    pub fn passed(&self) -> bool {
        self.even_violations.is_empty() && self.odd_violations.is_empty()
    }
}

/// For a Barker sequence of odd length `n = 2m+1 ≥ 5`: the correlation
/// polynomial's root power sums satisfy `S_{2k} = −2` for `k = 1, ..., m−1`
/// and `S_μ = 0` for odd `μ`. Computes `S_1, ..., S_{2m−1}` and reports
/// violations (none for genuine Barker input).
pub fn correlation_pattern(seq: &LittlewoodSeq) -> Result<CorrelationPatternReport, NewtonError> {
    let m = require_odd_barker(seq)?;
    let q = autocorrelation_polynomial(seq).expect("length is odd");
    let series = power_sums_unit_leading(&q, 2 * m - 1)?;
    let minus_two = BigInt::from(-2);
    let mut even_violations = Vec::new();
    let mut odd_violations = Vec::new();
    for mu in 1..=series.len() {
        if mu % 2 == 0 {
            if mu <= 2 * m - 2 && *series.get(mu) != minus_two {
                even_violations.push(mu);
            }
        } else if !series.get(mu).is_zero() {
            odd_violations.push(mu);
        }
    }
    Ok(CorrelationPatternReport { m, series, even_violations, odd_violations })
}

/// Outcome of [`sequence_pattern`]: the `s_μ` series for the monic sequence
/// polynomial, plus the cross-check against the `S_μ` series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePatternReport {
    pub m: usize,
    /// Input was negated first so that `a_1 = +1` (roots are unchanged).
    pub negated: bool,
    pub series: PowerSumSeries,
    /// `s_1 = −a_2`; equal to −1 whenever the normalized sequence starts `++`.
    pub s1: BigInt,
    /// Even exponents `2k ≤ 2m−2` where `s_{2k} ≠ −1`.
    pub even_violations: Vec<usize>,
    /// Even exponents where `2 s_μ ≠ S_μ`.
    pub doubling_violations: Vec<usize>,
}

impl SequencePatternReport {
    pub fn passed(&self) -> bool {
        self.even_violations.is_empty() && self.doubling_violations.is_empty()
    }
}

/// For a Barker sequence of odd length `n = 2m+1 ≥ 5`: the monic sequence
/// polynomial's root power sums satisfy `s_{2k} = −1` for `k = 1, ..., m−1`,
/// doubling to the correlation series (`2 s_{2k} = S_{2k}`). The sequence is
/// negated first if `a_1 = −1`; that leaves the roots alone.
pub fn sequence_pattern(seq: &LittlewoodSeq) -> Result<SequencePatternReport, NewtonError> {
    let m = require_odd_barker(seq)?;
    let negated = seq.a(1) == -1;
    let normalized = if negated { seq.negated() } else { seq.clone() };
    let p = IntPolynomial::from_sequence(&normalized);
    let series = power_sums_monic(&p, 2 * m - 2)?;
    let q = autocorrelation_polynomial(&normalized).expect("length is odd");
    let big_series = power_sums_unit_leading(&q, 2 * m - 2)?;

    let minus_one = BigInt::from(-1);
    let mut even_violations = Vec::new();
    let mut doubling_violations = Vec::new();
    for mu in (2..=series.len()).step_by(2) {
        if *series.get(mu) != minus_one {
            even_violations.push(mu);
        }
        if series.get(mu) * BigInt::from(2) != *big_series.get(mu) {
            doubling_violations.push(mu);
        }
    }
    let s1 = series.get(1).clone();
    Ok(SequencePatternReport { m, negated, series, s1, even_violations, doubling_violations })
}
